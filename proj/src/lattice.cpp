#include "ftfa/lattice.hpp"

#include <cassert>

#include "ftfa/errors.hpp"

namespace ftfa {

Lattice Lattice::from_rows(size_t ambient, const IntMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw Error(errc::bad_input, "lattice row length != ambient");
  Lattice l(ambient);
  l.basis_ = hnf(rows).h;
  return l;
}

Lattice Lattice::full(size_t ambient) {
  Lattice l(ambient);
  l.basis_ = IntMatrix::identity(ambient);
  return l;
}

bool Lattice::contains(const IntVec& v) const {
  if (v.size() != ambient_) throw Error(errc::bad_input, "vector length != ambient");
  IntVec r = reduce(v);
  for (const Int& x : r)
    if (x != 0) return false;
  return true;
}

IntVec Lattice::reduce(IntVec v) const {
  if (v.size() != ambient_) throw Error(errc::bad_input, "vector length != ambient");
  for (size_t i = 0; i < basis_.rows(); ++i) {
    size_t pc = 0;
    while (pc < ambient_ && basis_.at(i, pc) == 0) ++pc;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[pc].get_mpz_t(), basis_.at(i, pc).get_mpz_t());
    if (q != 0)
      for (size_t c = pc; c < ambient_; ++c) v[c] -= q * basis_.at(i, c);
  }
  return v;
}

Lattice lattice_meet(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw Error(errc::ambient_mismatch, "lattice meet ambients");
  size_t m = a.ambient();
  // Solve x A = y B: kernel of [A ; -B] stacked, project to the A-block.
  IntMatrix stacked(a.rank() + b.rank(), m);
  for (size_t i = 0; i < a.rank(); ++i) stacked.set_row(i, a.basis().row(i));
  for (size_t i = 0; i < b.rank(); ++i) {
    IntVec r = b.basis().row(i);
    for (Int& x : r) x = -x;
    stacked.set_row(a.rank() + i, r);
  }
  IntMatrix ker = kernel_basis(stacked);
  IntMatrix rows(ker.rows(), m);
  for (size_t i = 0; i < ker.rows(); ++i) {
    IntVec coeff(a.rank());
    for (size_t j = 0; j < a.rank(); ++j) coeff[j] = ker.at(i, j);
    rows.set_row(i, mul_row(coeff, a.basis()));
  }
  return Lattice::from_rows(m, rows);
}

Lattice lattice_meet(std::span<const Lattice> ls) {
  if (ls.empty()) throw Error(errc::bad_input, "meet of empty lattice list");
  Lattice acc = ls[0];
  for (size_t i = 1; i < ls.size(); ++i) acc = lattice_meet(acc, ls[i]);
  return acc;
}

Lattice lattice_sum(std::span<const Lattice> ls) {
  if (ls.empty()) throw Error(errc::bad_input, "sum of empty lattice list");
  size_t m = ls[0].ambient();
  IntMatrix rows(0, m);
  for (const Lattice& l : ls) {
    if (l.ambient() != m) throw Error(errc::ambient_mismatch, "lattice sum ambients");
    for (size_t i = 0; i < l.rank(); ++i) rows.append_row(l.basis().row(i));
  }
  return Lattice::from_rows(m, rows);
}

Lattice preimage(const IntMatrix& r_map, const Lattice& l) {
  if (r_map.cols() != l.ambient()) throw Error(errc::bad_input, "preimage shape mismatch");
  size_t r = r_map.rows();
  // v R = a B  <=>  (v | a) in ker [R ; -B]; project to the v-block.
  IntMatrix stacked(r + l.rank(), l.ambient());
  for (size_t i = 0; i < r; ++i) stacked.set_row(i, r_map.row(i));
  for (size_t i = 0; i < l.rank(); ++i) {
    IntVec row = l.basis().row(i);
    for (Int& x : row) x = -x;
    stacked.set_row(r + i, row);
  }
  IntMatrix ker = kernel_basis(stacked);
  IntMatrix rows(ker.rows(), r);
  for (size_t i = 0; i < ker.rows(); ++i)
    for (size_t j = 0; j < r; ++j) rows.at(i, j) = ker.at(i, j);
  return Lattice::from_rows(r, rows);
}

IndexReps index_and_reps(const Lattice& l) {
  IndexReps out;
  if (l.rank() != l.ambient()) return out;  // infinite
  out.finite = true;
  size_t r = l.ambient();
  IntVec pivots(r);
  out.index = 1;
  for (size_t i = 0; i < r; ++i) {
    pivots[i] = l.basis().at(i, i);  // full-rank HNF is upper triangular
    out.index *= pivots[i];
  }
  if (!out.index.fits_ulong_p())
    throw Error(errc::bounds_too_large, "coset index too large to enumerate");
  unsigned long n = out.index.get_ui();
  out.reps.reserve(n);
  // Full-rank HNF is upper triangular, so the mixed-radix tuples over the
  // diagonal pivots are exactly the canonical residues.
  IntVec cur(r, 0);
  for (unsigned long c = 0; c < n; ++c) {
    out.reps.push_back(cur);
    for (size_t i = r; i-- > 0;) {
      cur[i] += 1;
      if (cur[i] < pivots[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

AffineCoset AffineCoset::make(IntVec point, Lattice lattice) {
  AffineCoset c;
  c.point = lattice.reduce(std::move(point));
  c.lattice = std::move(lattice);
  return c;
}

bool AffineCoset::contains(const IntVec& v) const {
  if (v.size() != point.size()) throw Error(errc::bad_input, "vector length != ambient");
  IntVec d(v.size());
  for (size_t i = 0; i < v.size(); ++i) d[i] = v[i] - point[i];
  return lattice.contains(d);
}

std::optional<AffineCoset> affine_meet(std::span<const AffineCoset> cosets) {
  if (cosets.empty()) throw Error(errc::bad_input, "meet of empty coset list");
  size_t k = cosets.size();
  size_t m = cosets[0].lattice.ambient();
  for (const AffineCoset& c : cosets)
    if (c.lattice.ambient() != m || c.point.size() != m)
      throw Error(errc::ambient_mismatch, "affine meet ambients");
  if (k == 1) return cosets[0];

  // Stack the coupling matrix for consecutive point differences: block row i
  // carries L_i at column block i and -L_i at column block i-1.
  size_t total_s = 0;
  for (const AffineCoset& c : cosets) total_s += c.lattice.rank();
  IntMatrix block(total_s, (k - 1) * m);
  size_t row0 = 0;
  for (size_t i = 0; i < k; ++i) {
    const IntMatrix& b = cosets[i].lattice.basis();
    for (size_t t = 0; t < b.rows(); ++t) {
      if (i + 1 < k)
        for (size_t c = 0; c < m; ++c) block.at(row0 + t, i * m + c) = b.at(t, c);
      if (i > 0)
        for (size_t c = 0; c < m; ++c) block.at(row0 + t, (i - 1) * m + c) = -b.at(t, c);
    }
    row0 += b.rows();
  }
  IntVec diff((k - 1) * m);
  for (size_t i = 0; i + 1 < k; ++i)
    for (size_t c = 0; c < m; ++c)
      diff[i * m + c] = cosets[i + 1].point[c] - cosets[i].point[c];

  std::optional<IntVec> a = solve_left(block, diff);
  if (!a) return std::nullopt;

  // Common point: p_1 + a_1 L_1 from the first block of the witness.
  IntVec point = cosets[0].point;
  const IntMatrix& b0 = cosets[0].lattice.basis();
  for (size_t t = 0; t < b0.rows(); ++t) {
    if ((*a)[t] == 0) continue;
    for (size_t c = 0; c < m; ++c) point[c] += (*a)[t] * b0.at(t, c);
  }

  std::vector<Lattice> ls;
  ls.reserve(k);
  for (const AffineCoset& c : cosets) ls.push_back(c.lattice);
  return AffineCoset::make(std::move(point), lattice_meet(ls));
}

}  // namespace ftfa
