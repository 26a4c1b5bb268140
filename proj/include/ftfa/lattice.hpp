#ifndef FTFA_LATTICE_HPP_
#define FTFA_LATTICE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ftfa/intmat.hpp"

namespace ftfa {

// Sublattice of Z^ambient with an HNF-canonical basis (rank = row count).
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Lattice from_rows(size_t ambient, const IntMatrix& rows);
  static Lattice full(size_t ambient);

  size_t ambient() const noexcept { return ambient_; }
  size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  bool is_trivial() const noexcept { return basis_.rows() == 0; }

  bool contains(const IntVec& v) const;
  // Canonical coset representative: pivot coordinates reduced into [0, pivot).
  IntVec reduce(IntVec v) const;

  bool operator==(const Lattice&) const = default;

 private:
  size_t ambient_ = 0;
  IntMatrix basis_;
};

Lattice lattice_meet(std::span<const Lattice> ls);
Lattice lattice_meet(const Lattice& a, const Lattice& b);
Lattice lattice_sum(std::span<const Lattice> ls);

// {v in Z^r : v R in L} for R an r x n matrix and L <= Z^n.
Lattice preimage(const IntMatrix& r_map, const Lattice& l);

struct IndexReps {
  bool finite = false;
  Int index = 0;
  std::vector<IntVec> reps;  // mixed-radix over HNF pivots, lexicographic
};

// Finite iff rank(L) = ambient; then index = product of pivots and reps are
// canonical residues.
IndexReps index_and_reps(const Lattice& l);

// point + lattice with the point stored as the canonical coset representative.
struct AffineCoset {
  IntVec point;
  Lattice lattice;

  static AffineCoset make(IntVec point, Lattice lattice);
  bool contains(const IntVec& v) const;
  bool operator==(const AffineCoset&) const = default;
};

// Intersection of finitely many affine cosets of Z^m: empty iff the stacked
// bidiagonal system over consecutive point differences has no integer
// solution; otherwise a coset of the meet of the member lattices.
std::optional<AffineCoset> affine_meet(std::span<const AffineCoset> cosets);

}  // namespace ftfa

#endif
