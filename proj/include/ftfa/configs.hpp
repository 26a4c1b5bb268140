#ifndef FTFA_CONFIGS_HPP_
#define FTFA_CONFIGS_HPP_

#include <cstdint>
#include <optional>
#include <variant>

#include "ftfa/mintersect.hpp"

namespace ftfa {

inline constexpr int kMaxConfigK = 16;

// Map from nonempty subsets of [k] to {0,1}; value 1 at I means "the
// intersection over I is not finitely generated". Subsets are bitmasks with
// bit i-1 for index i.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int k);
  static Configuration from_support(int k, const std::vector<uint32_t>& masks);

  int k() const noexcept { return k_; }
  bool value(uint32_t mask) const;
  void set(uint32_t mask, bool v);
  std::vector<uint32_t> support() const;
  bool is_zero() const;
  bool is_one() const;

  bool operator==(const Configuration&) const = default;

 private:
  int k_ = 0;
  std::vector<bool> val_;  // indexed by mask, entry 0 unused
};

Configuration join(const Configuration& c, const Configuration& d);
Configuration delta_sum(const Configuration& c, const Configuration& d, int delta);
Configuration restrict_away(const Configuration& c, int index);  // drop index, 1-based
Configuration cone(const Configuration& c, uint32_t vertex);     // support ^ P(vertex)
bool is_howson(const Configuration& c);

struct ObstructionBound {
  int min_abelian_rank = 0;                 // realizations need m >= this
  std::vector<uint32_t> witness;            // family at the maximum, if any
};

// Largest r-1 over families I_1..I_r with every drop-one union at 0 and the
// full union at 1; such a configuration needs abelian rank at least r-1.
ObstructionBound obstruction_bound(const Configuration& c);

// ---- realizations ----

// Piece of a subgroup living in its own free factor. Finite pieces carry a
// basis; the two infinite kinds have decidable membership:
//  - Tail: the subfamily {u_j : j = j0 - stride*t, t >= 0} of the conjugate
//    family u_j = y^-j x y^j (ambient letters x=1, y=2);
//  - NormalClosure: <<S>> inside the factor with free basis `factor`, where
//    S = the killed subset; w belongs iff its expression over the factor
//    basis dies after deleting the killed symbols.
struct FinitePiece {
  SubgroupBasis basis;
};
struct TailPiece {
  long j0 = -1;
  long stride = 1;
};
struct NormalClosurePiece {
  std::vector<Word> factor;
  std::vector<int> killed;  // indices into factor, 0-based
};
using Piece = std::variant<FinitePiece, TailPiece, NormalClosurePiece>;

struct SubgroupSpec {
  int n = 2, m = 0;
  std::optional<SubgroupBasis> finite;  // set iff the subgroup is f.g.
  std::vector<Piece> pieces;            // set otherwise (pairwise complementary factors)

  bool is_finite() const { return finite.has_value(); }
};

bool spec_member(const SubgroupSpec& s, const FtfaElement& g);

struct Realization {
  int n = 2, m = 0, k = 0;
  std::vector<SubgroupSpec> subgroups;
};

// Word u_j = y^-j x y^j of the standard freely independent family.
Word conjugate_family_word(long j);

// Realization of c in F_2 x Z^m with m = sum over the support of (|I|-1):
// each support set gets a private block, singletons a Tail family, larger
// sets the almost-zero block family on two fresh letters and |I|-1 fresh
// coordinates; blocks are assembled by strong complementarity.
Realization realize_ftfa(const Configuration& c);

// Realization in F_2 (m = 0) when c is Howson, nothing otherwise.
std::optional<Realization> realize_free(const Configuration& c);

enum class Verdict { VerifiedFG, VerifiedNonFG, WitnessedNonFG, StructuralOnly };

struct SubsetReport {
  uint32_t mask = 0;
  Verdict verdict = Verdict::StructuralOnly;
  bool expected = false;                  // c(I)
  std::optional<bool> consistent;         // set for decisive verdicts
  std::optional<FgVerdict> fg_evidence;   // for Verified*
  std::optional<SubgroupBasis> basis;     // for VerifiedFG
  std::vector<FtfaElement> witnesses;     // for WitnessedNonFG
};

struct VerifyReport {
  std::vector<SubsetReport> subsets;  // mask order 1..2^k-1
  bool pass = false;                  // no decisive verdict contradicts c
};

// Checks c against R subset by subset: intersections of finitely generated
// members are decided exactly; subsets with an infinite member are certified
// by a rank-N free witness family when c(I)=1 and are structural otherwise.
VerifyReport verify(const Configuration& c, const Realization& r, int witness_rank = 3,
                    bool parallel = false);

}  // namespace ftfa

#endif
