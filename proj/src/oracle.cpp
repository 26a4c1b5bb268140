#include "ftfa/oracle.hpp"

#include "ftfa/errors.hpp"

namespace ftfa {

std::vector<Word> enumerate_words(int n, int max_len) {
  std::vector<Word> out = {Word()};
  size_t shell_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t shell_end = out.size();
    for (size_t q = shell_begin; q < shell_end; ++q)
      for (int a = 1; a <= n; ++a)
        for (int l : {a, -a}) {
          Word w = out[q] * Word::letter(l);
          if (w.length() == static_cast<size_t>(len)) out.push_back(w);
        }
    shell_begin = shell_end;
  }
  return out;
}

std::vector<IntVec> enumerate_vectors(int m, long max_norm) {
  std::vector<IntVec> out;
  IntVec cur(m, -max_norm);
  if (m == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = 0;
    for (; i < m; ++i) {
      if (cur[i] < max_norm) {
        ++cur[i];
        break;
      }
      cur[i] = -max_norm;
    }
    if (i == m) break;
  }
  return out;
}

Ball ball(const SubgroupSpec& spec, int max_word_len, long max_vec_norm, size_t cell_cap) {
  if (max_word_len < 0 || max_vec_norm < 0)
    throw Error(errc::bad_input, "ball bounds must be nonnegative");
  std::vector<Word> words = enumerate_words(spec.n, max_word_len);
  std::vector<IntVec> vecs = enumerate_vectors(spec.m, max_vec_norm);
  if (words.size() * vecs.size() > cell_cap)
    throw Error(errc::bounds_too_large,
                "ball enumeration of " + std::to_string(words.size() * vecs.size()) +
                    " cells exceeds the cap");
  Ball out;
  out.max_word_len = max_word_len;
  out.max_vec_norm = max_vec_norm;
  for (const Word& w : words)
    for (const IntVec& v : vecs)
      if (spec_member(spec, {w, v})) out.elements.push_back({w, v});
  return out;
}

}  // namespace ftfa
