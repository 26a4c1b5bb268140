#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ftfa/errors.hpp"
#include "ftfa/json_io.hpp"

using namespace ftfa;

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

SubgroupBasis load_subgroup(const std::string& path) {
  Json j = load_json(path);
  int n = 0, m = 0;
  std::vector<FtfaElement> gens = json_to_generators(j, n, m);
  return subgroup_basis(n, m, gens);
}

IntVec parse_vec(const std::string& text, int m) {
  IntVec v;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Int(item));
  }
  if (v.empty()) v.assign(m, 0);
  if (v.size() != static_cast<size_t>(m))
    throw Error(errc::ambient_mismatch, "vector length != m");
  return v;
}

std::string pretty_basis(const SubgroupBasis& b) {
  std::ostringstream out;
  out << "subgroup of F_" << b.n() << " x Z^" << b.m() << ", rank " << b.rank()
      << ", abelian rank " << b.lattice().rank() << "\n";
  for (const auto& p : b.pairs()) {
    out << "  " << p.word.text();
    bool any = false;
    for (const Int& x : p.vec)
      if (x != 0) any = true;
    if (any) {
      out << " t^(";
      for (size_t i = 0; i < p.vec.size(); ++i) out << (i ? "," : "") << p.vec[i].get_str();
      out << ")";
    }
    out << "\n";
  }
  for (size_t i = 0; i < b.lattice().rank(); ++i) {
    out << "  t^(";
    for (size_t j = 0; j < b.lattice().ambient(); ++j)
      out << (j ? "," : "") << b.lattice().basis().at(i, j).get_str();
    out << ")\n";
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"subgroup intersection calculus for free times free-abelian groups"};
  app.require_subcommand(1);
  bool text_mode = false;
  app.add_flag("--text", text_mode, "human-readable output instead of JSON");

  auto* basis_cmd = app.add_subcommand("basis", "canonical basis from generators");
  std::string basis_in;
  bool dump_automaton = false;
  basis_cmd->add_option("subgroup", basis_in)->required();
  basis_cmd->add_flag("--dump-automaton", dump_automaton);

  auto* intersect_cmd = app.add_subcommand("intersect", "decide and compute the intersection");
  std::vector<std::string> intersect_in;
  intersect_cmd->add_option("subgroups", intersect_in)->required()->expected(-1);

  auto* member_cmd = app.add_subcommand("member", "membership of an element");
  std::string member_in, member_word, member_vec;
  member_cmd->add_option("subgroup", member_in)->required();
  member_cmd->add_option("--word", member_word)->required();
  member_cmd->add_option("--vec", member_vec);

  auto* check_cmd = app.add_subcommand("conf-check", "Howson test for a configuration");
  std::string check_in;
  check_cmd->add_option("configuration", check_in)->required();

  auto* obs_cmd = app.add_subcommand("conf-obstruction", "abelian-rank obstruction bound");
  std::string obs_in;
  obs_cmd->add_option("configuration", obs_in)->required();

  auto* realize_cmd = app.add_subcommand("conf-realize", "realize a configuration");
  std::string realize_in;
  bool realize_in_free = false;
  realize_cmd->add_option("configuration", realize_in)->required();
  realize_cmd->add_flag("--free", realize_in_free, "realize in F_2 (Howson input only)");

  auto* verify_cmd = app.add_subcommand("conf-verify", "verify a realization");
  std::string verify_conf, verify_real;
  bool parallel = false;
  int witness_rank = 3;
  verify_cmd->add_option("configuration", verify_conf)->required();
  verify_cmd->add_option("realization", verify_real)->required();
  verify_cmd->add_flag("--parallel", parallel);
  verify_cmd->add_option("--witness-rank", witness_rank);

  auto* ball_cmd = app.add_subcommand("oracle-ball", "brute-force subgroup ball");
  std::string ball_in;
  int ball_len = 0;
  long ball_norm = 0;
  size_t cell_cap = 20000000;
  ball_cmd->add_option("subgroup", ball_in)->required();
  ball_cmd->add_option("--max-len", ball_len)->required();
  ball_cmd->add_option("--max-norm", ball_norm)->required();
  ball_cmd->add_option("--cell-cap", cell_cap);

  CLI11_PARSE(app, argc, argv);

  if (*basis_cmd) {
    SubgroupBasis b = load_subgroup(basis_in);
    if (text_mode) {
      std::cout << pretty_basis(b);
    } else {
      Json out = basis_to_json(b);
      if (dump_automaton) out["automaton"] = automaton_to_json(b.automaton());
      emit(out);
    }
    return 0;
  }
  if (*intersect_cmd) {
    std::vector<SubgroupBasis> subs;
    subs.reserve(intersect_in.size());
    for (const std::string& path : intersect_in) subs.push_back(load_subgroup(path));
    IntersectResult res = intersect(subs);
    if (text_mode) {
      std::cout << (res.fg ? "finitely generated\n" : "not finitely generated\n");
      if (res.basis) std::cout << pretty_basis(*res.basis);
      if (!res.fg)
        std::cout << "rank(Lambda) = " << res.verdict.lambda_rank << " < r = " << res.verdict.r
                  << "\n";
    } else {
      emit(intersect_result_to_json(res));
    }
    return 0;
  }
  if (*member_cmd) {
    SubgroupBasis b = load_subgroup(member_in);
    FtfaElement g{Word::from_text(member_word), parse_vec(member_vec, b.m())};
    bool is_in = member(b, g);
    if (text_mode) {
      std::cout << (is_in ? "member\n" : "not a member\n");
    } else {
      Json out;
      out["schema"] = kSchema;
      out["member"] = is_in;
      emit(out);
    }
    return 0;
  }
  if (*check_cmd) {
    Configuration c = json_to_configuration(load_json(check_in));
    Json out;
    out["schema"] = kSchema;
    out["k"] = c.k();
    out["howson"] = is_howson(c);
    if (text_mode)
      std::cout << (out["howson"].get<bool>() ? "howson\n" : "not howson\n");
    else
      emit(out);
    return 0;
  }
  if (*obs_cmd) {
    Configuration c = json_to_configuration(load_json(obs_in));
    ObstructionBound b = obstruction_bound(c);
    if (text_mode)
      std::cout << "needs abelian rank >= " << b.min_abelian_rank << "\n";
    else
      emit(obstruction_to_json(b));
    return 0;
  }
  if (*realize_cmd) {
    Configuration c = json_to_configuration(load_json(realize_in));
    if (realize_in_free) {
      auto r = realize_free(c);
      if (!r) throw Error(errc::not_howson, "configuration violates the Howson condition");
      emit(realization_to_json(*r));
    } else {
      emit(realization_to_json(realize_ftfa(c)));
    }
    return 0;
  }
  if (*verify_cmd) {
    Configuration c = json_to_configuration(load_json(verify_conf));
    Realization r = json_to_realization(load_json(verify_real));
    VerifyReport rep = verify(c, r, witness_rank, parallel);
    if (text_mode) {
      for (const SubsetReport& sr : rep.subsets) {
        std::cout << "{";
        bool first = true;
        for (int i = 0; i < c.k(); ++i)
          if (sr.mask & (1u << i)) {
            std::cout << (first ? "" : ",") << (i + 1);
            first = false;
          }
        std::cout << "}: ";
        switch (sr.verdict) {
          case Verdict::VerifiedFG: std::cout << "verified f.g."; break;
          case Verdict::VerifiedNonFG: std::cout << "verified non-f.g."; break;
          case Verdict::WitnessedNonFG: std::cout << "witnessed non-f.g."; break;
          default: std::cout << "structural";
        }
        if (sr.consistent.has_value() && !*sr.consistent) std::cout << "  ** contradicts";
        std::cout << "\n";
      }
      std::cout << (rep.pass ? "PASS\n" : "FAIL\n");
    } else {
      emit(report_to_json(rep, c));
    }
    return 0;
  }
  if (*ball_cmd) {
    SubgroupSpec spec = json_to_spec(load_json(ball_in));
    Ball b = ball(spec, ball_len, ball_norm, cell_cap);
    if (text_mode) {
      for (const FtfaElement& e : b.elements) {
        std::cout << e.free_part.text();
        for (size_t i = 0; i < e.abelian.size(); ++i)
          std::cout << (i ? "," : " t^") << e.abelian[i].get_str();
        std::cout << "\n";
      }
    } else {
      emit(ball_to_json(b));
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    Json err;
    err["schema"] = kSchema;
    err["code"] = e.code();
    err["message"] = e.what();
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err;
    err["schema"] = kSchema;
    err["code"] = "IO_ERROR";
    err["message"] = e.what();
    std::cout << err.dump() << "\n";
    return 1;
  }
}
