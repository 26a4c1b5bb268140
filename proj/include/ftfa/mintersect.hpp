#ifndef FTFA_MINTERSECT_HPP_
#define FTFA_MINTERSECT_HPP_

#include <optional>
#include <span>

#include "ftfa/subgroup.hpp"

namespace ftfa {

// The data relating the intersection of the free projections to each input
// subgroup: v-basis of the pullback, abelianized inclusions P_i, the coupling
// matrix R of consecutive completion differences, the stacked bidiagonal
// block matrix of the member lattices, and the preimage lattice Lambda whose
// rank decides finite generability.
struct Diagram {
  int n = 0, m = 0;
  size_t k = 0, r = 0;
  std::vector<SubgroupBasis> subgroups;
  Automaton pullback;
  std::vector<Word> v_basis;    // free basis of the intersection of projections
  std::vector<IntMatrix> p_mats;  // r x r_i
  IntMatrix r_mat;                // r x (k-1)m
  IntMatrix l_block;              // (sum s_i) x (k-1)m
  Lattice im_l;                   // row space of l_block
  Lattice lambda;                 // {v : v R in im_l}
};

Diagram build_diagram(std::span<const SubgroupBasis> subgroups);

struct FgVerdict {
  bool fg = false;
  size_t r = 0;
  Lattice lambda;
  size_t lambda_rank = 0;
};

// Finitely generated iff r = 0, r = 1, or rank(Lambda) = r.
FgVerdict decide(const Diagram& d);

// Basis of the intersection; requires decide(d).fg. The free part comes from
// the coset graph of {w : exp(w) R in im_l} inside the free group on the
// v-basis, each basis word completed by the meet of its per-subgroup
// completion cosets, the abelian part from the meet of the member lattices.
SubgroupBasis intersection_basis(const Diagram& d);

struct IntersectResult {
  bool fg = false;
  std::optional<SubgroupBasis> basis;
  FgVerdict verdict;
};

IntersectResult intersect(std::span<const SubgroupBasis> subgroups);

}  // namespace ftfa

#endif
