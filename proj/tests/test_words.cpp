#include <doctest.h>

#include <random>

#include "ftfa/errors.hpp"
#include "ftfa/words.hpp"

using namespace ftfa;

TEST_CASE("free reduction") {
  CHECK(Word::reduce({1, -1}) == Word());
  CHECK(Word::reduce({1, 2, -2, 1}) == Word::reduce({1, 1}));
  CHECK(Word::reduce({-2, -1, 1, 2, 1}) == Word::letter(1));
  CHECK(Word::from_text("xX").empty());
  CHECK(Word::from_text("xyYx") == Word::from_text("xx"));
  CHECK(Word::from_text("YXxyx") == Word::from_text("x"));
}

TEST_CASE("text round trip") {
  CHECK(Word::from_text("1") == Word());
  CHECK(Word().text() == "1");
  CHECK(Word::from_text("xyX").text() == "xyX");
  CHECK_THROWS_AS(Word::from_text("x3"), Error);
}

TEST_CASE("substitute") {
  std::vector<Word> images = {Word::from_text("x"), Word::from_text("Yxy")};
  CHECK(substitute(Word::reduce({1, 2}), images) == Word::from_text("xYxy"));
  CHECK(substitute(Word::reduce({1, -1}), images).empty());
  CHECK(substitute(Word::reduce({1, 1}), {&images[1], 1}) == Word::from_text("Yxxy"));
  CHECK_THROWS_AS(substitute(Word::reduce({3}), images), Error);
}

TEST_CASE("exponent vector") {
  IntVec v = exponent_vector(Word::from_text("xyX"), 2);
  CHECK(v == IntVec{0, 1});
  CHECK(exponent_vector(Word(), 2) == IntVec{0, 0});
  CHECK(exponent_vector(Word::from_text("xxxxyy"), 2) == IntVec{4, 2});
}

TEST_CASE("random algebra properties") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> len(0, 12), letter(0, 3);
  auto rand_raw = [&] {
    std::vector<int> raw(len(rng));
    for (int& a : raw) {
      int l = letter(rng);
      a = (l % 2 == 0 ? 1 : -1) * (l / 2 + 1);
    }
    return raw;
  };
  std::vector<Word> images = {Word::from_text("xy"), Word::from_text("Yx")};
  for (int it = 0; it < 300; ++it) {
    Word u = Word::reduce(rand_raw());
    Word v = Word::reduce(rand_raw());
    // idempotent reduction
    CHECK(Word::reduce(std::span<const int>(u.letters())) == u);
    // additivity of exponents
    IntVec eu = exponent_vector(u, 2), ev = exponent_vector(v, 2), euv = exponent_vector(u * v, 2);
    CHECK(euv[0] == eu[0] + ev[0]);
    CHECK(euv[1] == eu[1] + ev[1]);
    // substitution is a homomorphism
    CHECK(substitute(u * v, images) == substitute(u, images) * substitute(v, images));
    // inverse
    CHECK((u * u.inverse()).empty());
  }
}
