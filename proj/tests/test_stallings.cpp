#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ftfa/errors.hpp"
#include "ftfa/stallings.hpp"

using namespace ftfa;

namespace {

Word W(const std::string& s) { return Word::from_text(s); }

std::vector<Word> words(std::initializer_list<const char*> ss) {
  std::vector<Word> out;
  for (const char* s : ss) out.push_back(W(s));
  return out;
}

// Independent membership certificates: all products of up to `depth`
// generator letters whose intermediate reduced length stays within `len_cap`.
std::set<Word> product_closure(const std::vector<Word>& gens, int len_cap) {
  std::set<Word> seen = {Word()};
  std::vector<Word> frontier = {Word()};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Word& g : gens)
        for (const Word& m : {w * g, w * g.inverse()}) {
          if (static_cast<int>(m.length()) > len_cap) continue;
          if (seen.insert(m).second) next.push_back(m);
        }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("fold examples") {
  FoldResult f = fold(words({"xxxx", "y"}), 2, true);
  CHECK(f.autom.num_states() == 4);  // x four-cycle through base, y loop
  CHECK(f.autom.num_edges() == 5);
  CHECK(f.autom.cycle_rank() == 2);
  CHECK(f.basis.basis_words.size() == 2);

  FoldResult dup = fold(words({"x", "x"}), 2, true);
  CHECK(dup.autom.num_states() == 1);
  CHECK(dup.basis.basis_words == words({"x"}));

  FoldResult g = fold(words({"xy", "yx"}), 2);
  CHECK(g.autom.cycle_rank() == 2);
  CHECK(g.basis.basis_words.size() == 2);
}

TEST_CASE("fold ignores trivial generators") {
  FoldResult f = fold(words({"1", "x", ""}), 2, true);
  CHECK(f.basis.basis_words == words({"x"}));
  FoldResult e = fold(words({"1"}), 2, true);
  CHECK(e.autom.num_states() == 1);
  CHECK(e.basis.basis_words.empty());
}

TEST_CASE("rewrite examples") {
  FoldResult f = fold(words({"xx", "y"}), 2);
  auto e1 = rewrite(f.autom, f.basis, W("xxyxx"));
  REQUIRE(e1.has_value());
  CHECK(*e1 == Word::reduce({1, 2, 1}));
  CHECK(substitute(*e1, f.basis.basis_words) == W("xxyxx"));

  CHECK(!rewrite(f.autom, f.basis, W("x")).has_value());

  auto e3 = rewrite(f.autom, f.basis, Word());
  REQUIRE(e3.has_value());
  CHECK(e3->empty());
}

TEST_CASE("generator expressions round trip") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(1, 6), letter(0, 3), count(1, 4);
  for (int it = 0; it < 120; ++it) {
    std::vector<Word> gens;
    int p = count(rng);
    for (int i = 0; i < p; ++i) {
      std::vector<int> raw(len(rng));
      for (int& a : raw) {
        int l = letter(rng);
        a = (l % 2 == 0 ? 1 : -1) * (l / 2 + 1);
      }
      gens.push_back(Word::reduce(raw));
    }
    FoldResult f = fold(gens, 2, true);
    REQUIRE(f.generator_expressions.size() == f.basis.basis_words.size());
    for (size_t j = 0; j < f.basis.basis_words.size(); ++j)
      CHECK(substitute(f.generator_expressions[j], gens) == f.basis.basis_words[j]);
    CHECK(f.autom.cycle_rank() == f.basis.basis_words.size());
  }
}

TEST_CASE("generator expressions under stress") {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<int> len(1, 10), rank(2, 3), count(1, 6);
  for (int it = 0; it < 250; ++it) {
    int n = rank(rng);
    std::uniform_int_distribution<int> letter(0, 2 * n - 1);
    std::vector<Word> gens;
    int p = count(rng);
    for (int i = 0; i < p; ++i) {
      std::vector<int> raw(len(rng));
      for (int& a : raw) {
        int l = letter(rng);
        a = (l % 2 == 0 ? 1 : -1) * (l / 2 + 1);
      }
      gens.push_back(Word::reduce(raw));
    }
    FoldResult f = fold(gens, n, true);
    for (size_t j = 0; j < f.basis.basis_words.size(); ++j)
      REQUIRE(substitute(f.generator_expressions[j], gens) == f.basis.basis_words[j]);
    // every generator walks back to base and rewrites over the basis
    for (const Word& g : gens) {
      auto e = rewrite(f.autom, f.basis, g);
      REQUIRE(e.has_value());
      REQUIRE(substitute(*e, f.basis.basis_words) == g);
    }
  }
}

TEST_CASE("membership against product closure") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> len(1, 3), letter(0, 3), count(1, 3);
  for (int it = 0; it < 60; ++it) {
    std::vector<Word> gens;
    int p = count(rng);
    for (int i = 0; i < p; ++i) {
      std::vector<int> raw(len(rng));
      for (int& a : raw) {
        int l = letter(rng);
        a = (l % 2 == 0 ? 1 : -1) * (l / 2 + 1);
      }
      gens.push_back(Word::reduce(raw));
    }
    FoldResult f = fold(gens, 2);
    // soundness: every certified product is accepted
    for (const Word& w : product_closure(gens, 10))
      if (w.length() <= 8) CHECK(f.autom.accepts(w));
    // agreement with rewrite
    for (const Word& w : product_closure(gens, 8)) {
      auto e = rewrite(f.autom, f.basis, w);
      REQUIRE(e.has_value());
      CHECK(substitute(*e, f.basis.basis_words) == w);
    }
  }
}

TEST_CASE("pullback examples") {
  FoldResult m = fold(words({"xxxx", "y"}), 2);
  FoldResult mp = fold(words({"xy", "yx"}), 2);
  std::vector<Automaton> pair = {m.autom, mp.autom};
  Automaton p = multi_pullback(pair);
  CHECK(p.num_states() == 1);
  CHECK(p.num_edges() == 0);  // trivial intersection

  std::vector<Automaton> same = {m.autom, m.autom};
  CHECK(multi_pullback(same) == m.autom);

  // the element witnessing failure of intersection distributivity
  FoldResult h1 = fold(words({"xxxxyy", "xy"}), 2);
  FoldResult h2 = fold(words({"yxxxxyy", "yx"}), 2);
  Word witness = W("YYXXXyxxxxyy");
  CHECK(h1.autom.accepts(witness));
  CHECK(h2.autom.accepts(witness));
  std::vector<Automaton> hh = {h1.autom, h2.autom};
  CHECK(multi_pullback(hh).accepts(witness));
}

TEST_CASE("pullback membership is conjunction") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> len(1, 3), letter(0, 3);
  auto rand_word = [&] {
    std::vector<int> raw(len(rng));
    for (int& a : raw) {
      int l = letter(rng);
      a = (l % 2 == 0 ? 1 : -1) * (l / 2 + 1);
    }
    return Word::reduce(raw);
  };
  for (int it = 0; it < 40; ++it) {
    std::vector<Word> g1 = {rand_word(), rand_word()};
    std::vector<Word> g2 = {rand_word(), rand_word()};
    FoldResult a1 = fold(g1, 2), a2 = fold(g2, 2);
    std::vector<Automaton> both = {a1.autom, a2.autom};
    Automaton p = multi_pullback(both);
    // exhaustive over short words
    std::vector<Word> ball = {Word()};
    for (size_t q = 0; q < ball.size(); ++q) {
      if (ball[q].length() >= 5) continue;
      for (int l : {1, -1, 2, -2}) {
        Word w = ball[q] * Word::letter(l);
        if (w.length() > ball[q].length()) ball.push_back(w);
      }
    }
    for (const Word& w : ball)
      CHECK(p.accepts(w) == (a1.autom.accepts(w) && a2.autom.accepts(w)));
  }
}

TEST_CASE("schreier basis") {
  std::vector<Word> vb = words({"x", "y"});
  auto mod2 = [](const Word& w) {
    IntVec e = exponent_vector(w, 2);
    return e[1] % 2 == 0;
  };
  SchreierResult s = schreier_basis(vb, mod2, 1000);
  CHECK(s.reps.size() == 2);
  CHECK(s.basis.size() == 3);  // 1 + 2*(2-1)
  std::set<Word> basis(s.basis.begin(), s.basis.end());
  CHECK(basis.count(Word::reduce({1})) == 1);
  CHECK(basis.count(Word::reduce({2, 2})) == 1);
  CHECK(basis.count(Word::reduce({2, 1, -2})) == 1);

  std::vector<Word> one = words({"x"});
  SchreierResult whole = schreier_basis(one, [](const Word&) { return true; }, 10);
  CHECK(whole.reps.size() == 1);
  CHECK(whole.basis == words({"x"}));

  auto zero = [](const Word& w) { return exponent_vector(w, 2)[1] == 0; };
  CHECK_THROWS_AS(schreier_basis(vb, zero, 500), Error);
}

TEST_CASE("nielsen-schreier rank formula") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> rr(1, 3), mod(1, 4);
  for (int it = 0; it < 25; ++it) {
    int r = rr(rng);
    std::vector<long> mods(r);
    long index = 1;
    for (long& m : mods) {
      m = mod(rng);
      index *= m;
    }
    if (index > 60) continue;
    std::vector<Word> vb;
    for (int i = 1; i <= r; ++i) vb.push_back(Word::letter(i));
    auto test = [&](const Word& w) {
      IntVec e = exponent_vector(w, r);
      for (int i = 0; i < r; ++i)
        if (e[i] % mods[i] != 0) return false;
      return true;
    };
    SchreierResult s = schreier_basis(vb, test, 10000);
    CHECK(static_cast<long>(s.reps.size()) == index);
    CHECK(static_cast<long>(s.basis.size()) == 1 + index * (r - 1));
    // every basis element is in the subgroup
    for (const Word& b : s.basis) CHECK(test(b));
  }
}
