#ifndef FTFA_WORDS_HPP_
#define FTFA_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ftfa {

using Int = mpz_class;
using IntVec = std::vector<Int>;

// A freely reduced word over a free alphabet. Letter i in 1..n stands for the
// i-th generator, -i for its inverse. Instances are immutable values; every
// constructor reduces.
class Word {
 public:
  Word() = default;

  static Word reduce(std::span<const int> raw);
  static Word reduce(std::initializer_list<int> raw);
  static Word letter(int signed_index);

  // Text syntax: lowercase a..z = generators 1..26, uppercase = inverses,
  // "1" or "" is the identity. Ranks above 26 are JSON-only.
  static Word from_text(const std::string& text);
  std::string text() const;

  const std::vector<int>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  size_t length() const noexcept { return letters_.size(); }
  int max_index() const noexcept;

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(long e) const;
  Word conjugate(const Word& by) const;  // by^-1 * this * by

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

// Throws INDEX_OUT_OF_RANGE unless every letter index is within 1..rank.
void check_rank(const Word& w, int rank);

// Homomorphic image of w under g_i -> images[i-1], freely reduced.
// Throws ARITY_MISMATCH if w uses a symbol beyond images.size().
Word substitute(const Word& w, std::span<const Word> images);

// Signed letter counts of w over symbols 1..symbol_count.
IntVec exponent_vector(const Word& w, size_t symbol_count);

}  // namespace ftfa

#endif
