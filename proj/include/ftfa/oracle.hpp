#ifndef FTFA_ORACLE_HPP_
#define FTFA_ORACLE_HPP_

#include "ftfa/configs.hpp"

namespace ftfa {

struct Ball {
  int max_word_len = 0;
  long max_vec_norm = 0;
  std::vector<FtfaElement> elements;  // canonical order: words by length then
                                      // letters, vectors lexicographic
};

// All reduced words of F_n up to the length bound, in enumeration order.
std::vector<Word> enumerate_words(int n, int max_len);

// All vectors of Z^m with infinity norm within the bound.
std::vector<IntVec> enumerate_vectors(int m, long max_norm);

// Brute-force filter: every subgroup element within the bounds. Throws
// BOUNDS_TOO_LARGE past cell_cap candidate cells.
Ball ball(const SubgroupSpec& spec, int max_word_len, long max_vec_norm,
          size_t cell_cap = 20000000);

}  // namespace ftfa

#endif
