#include "ftfa/words.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ftfa/errors.hpp"

namespace ftfa {

Word Word::reduce(std::span<const int> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (int a : raw) {
    if (a == 0) throw Error(errc::index_out_of_range, "letter index 0");
    if (!w.letters_.empty() && w.letters_.back() == -a) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(a);
    }
  }
  return w;
}

Word Word::reduce(std::initializer_list<int> raw) {
  return reduce(std::span<const int>(raw.begin(), raw.size()));
}

Word Word::letter(int signed_index) {
  return reduce({signed_index});
}

namespace {

// Generator names follow the conventional x, y, z, a, b, ..., w sequence so
// that rank-2 input reads as words in x and y.
constexpr int name_base = 'x' - 'a';  // 23

int index_of_name(int pos26) {  // pos26: 0..25 for a..z
  return (pos26 - name_base + 26) % 26 + 1;
}

char name_of_index(int i, bool upper) {  // i: 1..26
  int pos26 = (i - 1 + name_base) % 26;
  return static_cast<char>((upper ? 'A' : 'a') + pos26);
}

}  // namespace

Word Word::from_text(const std::string& text) {
  if (text.empty() || text == "1") return Word();
  std::vector<int> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      raw.push_back(index_of_name(c - 'a'));
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back(-index_of_name(c - 'A'));
    } else {
      throw Error(errc::bad_input, std::string("bad word character '") + c + "'");
    }
  }
  return reduce(raw);
}

std::string Word::text() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (int a : letters_) {
    int i = std::abs(a);
    if (i > 26) throw Error(errc::bad_input, "rank > 26 has no text form, use JSON");
    s += name_of_index(i, a < 0);
  }
  return s;
}

int Word::max_index() const noexcept {
  int m = 0;
  for (int a : letters_) m = std::max(m, std::abs(a));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (int a : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -a) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(a);
    }
  }
  return w;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  long n = std::labs(e);
  Word r;
  for (long i = 0; i < n; ++i) r = r * base;
  return r;
}

Word Word::conjugate(const Word& by) const {
  return by.inverse() * (*this) * by;
}

void check_rank(const Word& w, int rank) {
  if (w.max_index() > rank) {
    throw Error(errc::index_out_of_range,
                "letter index " + std::to_string(w.max_index()) + " exceeds rank " +
                    std::to_string(rank));
  }
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (int a : w.letters()) {
    size_t i = static_cast<size_t>(std::abs(a));
    if (i > images.size()) {
      throw Error(errc::arity_mismatch, "symbol " + std::to_string(i) + " has no image (" +
                                            std::to_string(images.size()) + " given)");
    }
    out = out * (a > 0 ? images[i - 1] : images[i - 1].inverse());
  }
  return out;
}

IntVec exponent_vector(const Word& w, size_t symbol_count) {
  IntVec v(symbol_count, 0);
  for (int a : w.letters()) {
    size_t i = static_cast<size_t>(std::abs(a));
    if (i > symbol_count) {
      throw Error(errc::index_out_of_range, "symbol " + std::to_string(i) + " beyond declared list");
    }
    v[i - 1] += (a > 0 ? 1 : -1);
  }
  return v;
}

}  // namespace ftfa
