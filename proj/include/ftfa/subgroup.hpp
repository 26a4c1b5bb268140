#ifndef FTFA_SUBGROUP_HPP_
#define FTFA_SUBGROUP_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ftfa/lattice.hpp"
#include "ftfa/stallings.hpp"

namespace ftfa {

// Element u t^a of F_n x Z^m in normal form.
struct FtfaElement {
  Word free_part;
  IntVec abelian;

  static FtfaElement identity(size_t m) { return {Word(), IntVec(m, 0)}; }
  static FtfaElement make(Word w, IntVec a) { return {std::move(w), std::move(a)}; }

  FtfaElement operator*(const FtfaElement& rhs) const;
  FtfaElement inverse() const;
  FtfaElement conjugate(const FtfaElement& by) const;
  FtfaElement pow(long e) const;
  bool is_identity() const;
  bool operator==(const FtfaElement&) const = default;
};

// Basis {u_1 t^{a_1}, ..., u_r t^{a_r}; L} of a finitely generated subgroup:
// the u_j are a free basis of the projection to F_n, the a_j are completion
// vectors (canonical modulo L), and L is the pure-abelian part H n Z^m.
class SubgroupBasis {
 public:
  struct Pair {
    Word word;
    IntVec vec;
    bool operator==(const Pair&) const = default;
  };

  SubgroupBasis() = default;

  // Accepts any pairs whose words form a free basis; vectors are reduced
  // modulo the lattice. Throws BAD_INPUT when the words are not a basis.
  static SubgroupBasis from_pairs(int n, int m, std::vector<Pair> pairs, Lattice lattice);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  size_t rank() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const Lattice& lattice() const noexcept { return lattice_; }
  const Automaton& automaton() const noexcept { return autom_; }
  IntMatrix completion_matrix() const;  // rank x m, rows a_j

  bool is_trivial() const noexcept { return pairs_.empty() && lattice_.is_trivial(); }

  // Expression of w over the pair words, when w lies in the free projection.
  std::optional<Word> express(const Word& w) const;

  // Generators of the subgroup: the pairs followed by the lattice rows.
  std::vector<FtfaElement> generators() const;

  bool structurally_equal(const SubgroupBasis& o) const {
    return n_ == o.n_ && m_ == o.m_ && pairs_ == o.pairs_ && lattice_ == o.lattice_;
  }

 private:
  void init_rewriting();  // folds the pair words, builds expressions

  int n_ = 0, m_ = 0;
  std::vector<Pair> pairs_;
  Lattice lattice_;
  Automaton autom_;               // fold of the pair words
  BasisData basis_;               // its spanning-tree data
  std::vector<Word> pair_expr_;   // automaton basis word -> word over pairs

  friend SubgroupBasis subgroup_basis(int, int, std::span<const FtfaElement>);
};

// Canonical basis computed from arbitrary generators: fold the free parts,
// read completions off the fold provenance, and obtain the abelian part as
// (kernel of the abelianized rewriting map) * (stacked generator vectors).
SubgroupBasis subgroup_basis(int n, int m, std::span<const FtfaElement> generators);

// Full completion set {a : w t^a in H}, empty when w is outside the free
// projection of H.
std::optional<AffineCoset> completion(const SubgroupBasis& b, const Word& w);

bool member(const SubgroupBasis& b, const FtfaElement& g);

// Join of subgroups whose free parts are in free-factor position and whose
// abelian projections are in direct sum; throws NOT_STRONGLY_COMPLEMENTARY.
SubgroupBasis strong_join(const SubgroupBasis& a, const SubgroupBasis& b);

// Equality as subgroups (mutual membership of generators).
bool subgroup_equal(const SubgroupBasis& a, const SubgroupBasis& b);

}  // namespace ftfa

#endif
