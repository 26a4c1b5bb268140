#include "ftfa/json_io.hpp"

#include <cstdint>

#include "ftfa/errors.hpp"

namespace ftfa {

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(errc::bad_input, "expected integer or decimal string");
}

Json vec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVec json_to_vec(const Json& j) {
  if (!j.is_array()) throw Error(errc::bad_input, "expected a vector array");
  IntVec out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(json_to_int(e));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix json_to_matrix(const Json& j, size_t expect_cols) {
  if (!j.is_array()) throw Error(errc::bad_input, "expected a matrix array");
  IntMatrix m(j.size(), expect_cols);
  for (size_t i = 0; i < j.size(); ++i) {
    IntVec row = json_to_vec(j[i]);
    if (row.size() != expect_cols) throw Error(errc::bad_input, "matrix row length mismatch");
    m.set_row(i, row);
  }
  return m;
}

Json word_to_json(const Word& w) {
  if (w.max_index() <= 26) return Json(w.text());
  Json out;
  out["letters"] = Json::array();
  for (int l : w.letters()) out["letters"].push_back(l);
  return out;
}

Word json_to_word(const Json& j) {
  if (j.is_string()) return Word::from_text(j.get<std::string>());
  if (j.is_object() && j.contains("letters")) {
    std::vector<int> raw;
    for (const Json& l : j["letters"]) raw.push_back(l.get<int>());
    return Word::reduce(raw);
  }
  throw Error(errc::bad_input, "expected word text or {\"letters\": [...]}");
}

Json element_to_json(const FtfaElement& e) {
  Json out;
  out["word"] = word_to_json(e.free_part);
  out["vec"] = vec_to_json(e.abelian);
  return out;
}

FtfaElement json_to_element(const Json& j, int m) {
  FtfaElement e;
  e.free_part = json_to_word(j.at("word"));
  e.abelian = j.contains("vec") ? json_to_vec(j["vec"]) : IntVec(m, 0);
  if (e.abelian.size() != static_cast<size_t>(m))
    throw Error(errc::ambient_mismatch, "element vector length != m");
  return e;
}

Json basis_to_json(const SubgroupBasis& b) {
  Json out;
  out["schema"] = kSchema;
  out["n"] = b.n();
  out["m"] = b.m();
  out["pairs"] = Json::array();
  for (const auto& p : b.pairs()) {
    Json jp;
    jp["word"] = word_to_json(p.word);
    jp["vec"] = vec_to_json(p.vec);
    out["pairs"].push_back(std::move(jp));
  }
  out["lattice"] = matrix_to_json(b.lattice().basis());
  return out;
}

SubgroupBasis json_to_basis(const Json& j) {
  int n = j.at("n").get<int>();
  int m = j.at("m").get<int>();
  std::vector<SubgroupBasis::Pair> pairs;
  for (const Json& jp : j.at("pairs"))
    pairs.push_back({json_to_word(jp.at("word")), json_to_vec(jp.at("vec"))});
  Lattice l = Lattice::from_rows(m, json_to_matrix(j.at("lattice"), m));
  return SubgroupBasis::from_pairs(n, m, std::move(pairs), std::move(l));
}

std::vector<FtfaElement> json_to_generators(const Json& j, int& n, int& m) {
  n = j.at("n").get<int>();
  m = j.at("m").get<int>();
  std::vector<FtfaElement> gens;
  if (j.contains("generators")) {
    for (const Json& jg : j["generators"]) gens.push_back(json_to_element(jg, m));
    return gens;
  }
  if (j.contains("pairs")) {
    for (const Json& jp : j["pairs"]) gens.push_back(json_to_element(jp, m));
    if (j.contains("lattice")) {
      IntMatrix l = json_to_matrix(j["lattice"], m);
      for (size_t i = 0; i < l.rows(); ++i) gens.push_back({Word(), l.row(i)});
    }
    return gens;
  }
  throw Error(errc::bad_input, "subgroup document needs \"generators\" or \"pairs\"");
}

Json automaton_to_json(const Automaton& a) {
  Json out;
  out["schema"] = kSchema;
  out["rank"] = a.rank;
  out["states"] = a.num_states();
  out["base"] = a.base;
  Json edges = Json::array();
  for (size_t s = 0; s < a.num_states(); ++s)
    for (int l = 1; l <= a.rank; ++l)
      if (a.fwd[s][l - 1] >= 0) edges.push_back(Json::array({s, l, a.fwd[s][l - 1]}));
  out["transitions"] = std::move(edges);
  return out;
}

Json verdict_to_json(const FgVerdict& v) {
  Json out;
  out["r"] = v.r;
  out["lambda"] = matrix_to_json(v.lambda.basis());
  out["rank"] = v.lambda_rank;
  return out;
}

Json intersect_result_to_json(const IntersectResult& r) {
  Json out;
  out["schema"] = kSchema;
  out["fg"] = r.fg;
  if (r.basis) out["basis"] = basis_to_json(*r.basis);
  if (!r.fg) out["certificate"] = verdict_to_json(r.verdict);
  return out;
}

Json configuration_to_json(const Configuration& c) {
  Json out;
  out["schema"] = kSchema;
  out["k"] = c.k();
  Json supp = Json::array();
  for (uint32_t mask : c.support()) {
    Json set = Json::array();
    for (int i = 0; i < c.k(); ++i)
      if (mask & (1u << i)) set.push_back(i + 1);
    supp.push_back(std::move(set));
  }
  out["support"] = std::move(supp);
  return out;
}

Configuration json_to_configuration(const Json& j) {
  int k = j.at("k").get<int>();
  Configuration c(k);
  for (const Json& set : j.at("support")) {
    uint32_t mask = 0;
    for (const Json& idx : set) {
      int i = idx.get<int>();
      if (i < 1 || i > k) throw Error(errc::bad_index, "support index out of range");
      mask |= 1u << (i - 1);
    }
    if (mask == 0) throw Error(errc::bad_input, "empty support set");
    c.set(mask, true);
  }
  return c;
}

namespace {

Json piece_to_json(const Piece& p) {
  Json out;
  if (const auto* f = std::get_if<FinitePiece>(&p)) {
    out["type"] = "finite";
    out["basis"] = basis_to_json(f->basis);
  } else if (const auto* t = std::get_if<TailPiece>(&p)) {
    out["type"] = "tail";
    out["j0"] = t->j0;
    out["stride"] = t->stride;
  } else {
    const auto& nc = std::get<NormalClosurePiece>(p);
    out["type"] = "normal_closure";
    out["factor"] = Json::array();
    for (const Word& w : nc.factor) out["factor"].push_back(word_to_json(w));
    out["killed"] = nc.killed;
  }
  return out;
}

Piece json_to_piece(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "finite") return FinitePiece{json_to_basis(j.at("basis"))};
  if (type == "tail") {
    TailPiece t{j.at("j0").get<long>(), j.at("stride").get<long>()};
    if (t.stride < 1) throw Error(errc::bad_input, "tail stride must be positive");
    return t;
  }
  if (type == "normal_closure") {
    NormalClosurePiece nc;
    for (const Json& w : j.at("factor")) nc.factor.push_back(json_to_word(w));
    for (const Json& k : j.at("killed")) {
      int idx = k.get<int>();
      if (idx < 0 || idx >= static_cast<int>(nc.factor.size()))
        throw Error(errc::bad_input, "killed index outside the factor basis");
      nc.killed.push_back(idx);
    }
    return nc;
  }
  throw Error(errc::bad_input, "unknown piece type " + type);
}

}  // namespace

Json realization_to_json(const Realization& r) {
  Json out;
  out["schema"] = kSchema;
  out["n"] = r.n;
  out["m"] = r.m;
  out["k"] = r.k;
  out["subgroups"] = Json::array();
  for (const SubgroupSpec& s : r.subgroups) {
    Json js;
    if (s.is_finite()) {
      js["kind"] = "finite";
      js["basis"] = basis_to_json(*s.finite);
    } else {
      js["kind"] = "parametric";
      js["pieces"] = Json::array();
      for (const Piece& p : s.pieces) js["pieces"].push_back(piece_to_json(p));
    }
    out["subgroups"].push_back(std::move(js));
  }
  return out;
}

Realization json_to_realization(const Json& j) {
  Realization r;
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.k = j.at("k").get<int>();
  for (const Json& js : j.at("subgroups")) {
    SubgroupSpec s;
    s.n = r.n;
    s.m = r.m;
    std::string kind = js.at("kind").get<std::string>();
    if (kind == "finite") {
      s.finite = json_to_basis(js.at("basis"));
    } else if (kind == "parametric") {
      for (const Json& jp : js.at("pieces")) s.pieces.push_back(json_to_piece(jp));
    } else {
      throw Error(errc::bad_input, "unknown subgroup kind " + kind);
    }
    r.subgroups.push_back(std::move(s));
  }
  if (static_cast<int>(r.subgroups.size()) != r.k)
    throw Error(errc::arity_mismatch, "subgroup count differs from k");
  return r;
}

SubgroupSpec json_to_spec(const Json& j) {
  SubgroupSpec s;
  if (j.contains("kind") && j.at("kind") == "parametric") {
    s.n = j.at("n").get<int>();
    s.m = j.at("m").get<int>();
    for (const Json& jp : j.at("pieces")) s.pieces.push_back(json_to_piece(jp));
    return s;
  }
  int n = 0, m = 0;
  std::vector<FtfaElement> gens = json_to_generators(j, n, m);
  s.n = n;
  s.m = m;
  s.finite = subgroup_basis(n, m, gens);
  return s;
}

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::VerifiedFG:
      return "VerifiedFG";
    case Verdict::VerifiedNonFG:
      return "VerifiedNonFG";
    case Verdict::WitnessedNonFG:
      return "WitnessedNonFG";
    default:
      return "StructuralOnly";
  }
}

}  // namespace

Json report_to_json(const VerifyReport& rep, const Configuration& c) {
  Json out;
  out["schema"] = kSchema;
  out["k"] = c.k();
  out["pass"] = rep.pass;
  out["subsets"] = Json::array();
  for (const SubsetReport& sr : rep.subsets) {
    Json js;
    Json set = Json::array();
    for (int i = 0; i < c.k(); ++i)
      if (sr.mask & (1u << i)) set.push_back(i + 1);
    js["subset"] = std::move(set);
    js["verdict"] = verdict_name(sr.verdict);
    js["expected_nonfg"] = sr.expected;
    if (sr.consistent.has_value()) js["consistent"] = *sr.consistent;
    if (sr.fg_evidence.has_value()) js["evidence"] = verdict_to_json(*sr.fg_evidence);
    if (sr.basis.has_value()) js["basis"] = basis_to_json(*sr.basis);
    if (!sr.witnesses.empty()) {
      js["witnesses"] = Json::array();
      for (const FtfaElement& w : sr.witnesses) js["witnesses"].push_back(element_to_json(w));
    }
    out["subsets"].push_back(std::move(js));
  }
  return out;
}

Json ball_to_json(const Ball& b) {
  Json out;
  out["schema"] = kSchema;
  out["max_word_len"] = b.max_word_len;
  out["max_vec_norm"] = b.max_vec_norm;
  out["elements"] = Json::array();
  for (const FtfaElement& e : b.elements) out["elements"].push_back(element_to_json(e));
  return out;
}

Json obstruction_to_json(const ObstructionBound& b) {
  Json out;
  out["schema"] = kSchema;
  out["min_abelian_rank"] = b.min_abelian_rank;
  out["witness"] = Json::array();
  for (uint32_t mask : b.witness) {
    Json set = Json::array();
    for (int i = 0; i < 32; ++i)
      if (mask & (1u << i)) set.push_back(i + 1);
    out["witness"].push_back(std::move(set));
  }
  return out;
}

}  // namespace ftfa
