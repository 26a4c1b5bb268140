#include "ftfa/mintersect.hpp"


#include "ftfa/errors.hpp"

namespace ftfa {

Diagram build_diagram(std::span<const SubgroupBasis> subgroups) {
  if (subgroups.empty()) throw Error(errc::bad_input, "intersection of empty list");
  Diagram d;
  d.n = subgroups[0].n();
  d.m = subgroups[0].m();
  d.k = subgroups.size();
  d.subgroups.assign(subgroups.begin(), subgroups.end());
  for (const SubgroupBasis& s : subgroups)
    if (s.n() != d.n || s.m() != d.m)
      throw Error(errc::ambient_mismatch, "intersection inputs have different ambients");

  std::vector<Automaton> automata;
  automata.reserve(d.k);
  for (const SubgroupBasis& s : subgroups) automata.push_back(s.automaton());
  d.pullback = multi_pullback(automata);
  BasisData pb = extract_basis(d.pullback);
  d.v_basis = pb.basis_words;
  d.r = d.v_basis.size();

  d.p_mats.reserve(d.k);
  for (size_t i = 0; i < d.k; ++i) {
    IntMatrix p(d.r, subgroups[i].rank());
    for (size_t j = 0; j < d.r; ++j) {
      auto expr = subgroups[i].express(d.v_basis[j]);
      FTFA_CHECK(expr.has_value(), "pullback word escapes a factor projection");
      p.set_row(j, exponent_vector(*expr, subgroups[i].rank()));
    }
    d.p_mats.push_back(std::move(p));
  }

  size_t cols = (d.k - 1) * static_cast<size_t>(d.m);
  d.r_mat = IntMatrix(d.r, cols);
  for (size_t i = 0; i + 1 < d.k; ++i) {
    IntMatrix diff = d.p_mats[i + 1] * subgroups[i + 1].completion_matrix() -
                     d.p_mats[i] * subgroups[i].completion_matrix();
    for (size_t row = 0; row < d.r; ++row)
      for (size_t c = 0; c < static_cast<size_t>(d.m); ++c)
        d.r_mat.at(row, i * d.m + c) = diff.at(row, c);
  }

  size_t total_s = 0;
  for (const SubgroupBasis& s : subgroups) total_s += s.lattice().rank();
  d.l_block = IntMatrix(total_s, cols);
  size_t row0 = 0;
  for (size_t i = 0; i < d.k; ++i) {
    const IntMatrix& b = subgroups[i].lattice().basis();
    for (size_t t = 0; t < b.rows(); ++t) {
      if (i + 1 < d.k)
        for (size_t c = 0; c < static_cast<size_t>(d.m); ++c)
          d.l_block.at(row0 + t, i * d.m + c) = b.at(t, c);
      if (i > 0)
        for (size_t c = 0; c < static_cast<size_t>(d.m); ++c)
          d.l_block.at(row0 + t, (i - 1) * d.m + c) = -b.at(t, c);
    }
    row0 += b.rows();
  }
  d.im_l = Lattice::from_rows(cols, d.l_block);
  d.lambda = preimage(d.r_mat, d.im_l);
  return d;
}

FgVerdict decide(const Diagram& d) {
  FgVerdict v;
  v.r = d.r;
  v.lambda = d.lambda;
  v.lambda_rank = d.lambda.rank();
  v.fg = d.r <= 1 || v.lambda_rank == d.r;
  return v;
}

SubgroupBasis intersection_basis(const Diagram& d) {
  FgVerdict v = decide(d);
  if (!v.fg)
    throw Error(errc::not_finitely_generated,
                "intersection is not finitely generated (rank " +
                    std::to_string(v.lambda_rank) + " < " + std::to_string(d.r) + ")");

  std::vector<Lattice> ls;
  ls.reserve(d.k);
  for (const SubgroupBasis& s : d.subgroups) ls.push_back(s.lattice());
  Lattice meet = lattice_meet(ls);

  std::vector<FtfaElement> gens;
  if (d.r >= 1 && !(d.r == 1 && v.lambda_rank == 0)) {
    IndexReps ir = index_and_reps(d.lambda);
    FTFA_CHECK(ir.finite, "finite verdict with infinite-index preimage lattice");

    auto in_projection = [&](const Word& w) {
      return d.im_l.contains(mul_row(exponent_vector(w, d.r), d.r_mat));
    };
    SchreierResult sch = schreier_basis(d.v_basis, in_projection, default_coset_cap());
    FTFA_CHECK(Int(static_cast<long>(sch.reps.size())) == ir.index,
               "coset graph size differs from the lattice index");

    for (const Word& u : sch.basis) {
      Word ambient = substitute(u, d.v_basis);
      std::vector<AffineCoset> cosets;
      cosets.reserve(d.k);
      for (const SubgroupBasis& s : d.subgroups) {
        auto c = completion(s, ambient);
        FTFA_CHECK(c.has_value(), "coset basis word escapes a member projection");
        cosets.push_back(std::move(*c));
      }
      auto common = affine_meet(cosets);
      FTFA_CHECK(common.has_value(), "empty completion meet on a decided-finite intersection");
      gens.push_back({ambient, common->point});
    }
  }
  for (size_t i = 0; i < meet.rank(); ++i)
    gens.push_back({Word(), meet.basis().row(i)});
  return subgroup_basis(d.n, d.m, gens);
}

IntersectResult intersect(std::span<const SubgroupBasis> subgroups) {
  IntersectResult out;
  if (subgroups.size() == 1) {
    out.fg = true;
    out.basis = subgroup_basis(subgroups[0].n(), subgroups[0].m(), subgroups[0].generators());
    out.verdict.fg = true;
    out.verdict.r = subgroups[0].rank();
    out.verdict.lambda = Lattice::full(subgroups[0].rank());
    out.verdict.lambda_rank = subgroups[0].rank();
    return out;
  }
  Diagram d = build_diagram(subgroups);
  out.verdict = decide(d);
  out.fg = out.verdict.fg;
  if (out.fg) out.basis = intersection_basis(d);
  return out;
}

}  // namespace ftfa
