#include <doctest.h>

#include <algorithm>
#include <set>

#include "ftfa/errors.hpp"
#include "ftfa/oracle.hpp"

using namespace ftfa;

namespace {

Word W(const std::string& s) { return Word::from_text(s); }

IntVec vec(std::vector<long> v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

SubgroupSpec finite_spec(int n, int m, std::vector<FtfaElement> gens) {
  SubgroupSpec s;
  s.n = n;
  s.m = m;
  s.finite = subgroup_basis(n, m, gens);
  return s;
}

std::set<std::pair<Word, IntVec>> as_set(const Ball& b) {
  std::set<std::pair<Word, IntVec>> out;
  for (const FtfaElement& e : b.elements) out.insert({e.free_part, e.abelian});
  return out;
}

}  // namespace

TEST_CASE("trivial ball") {
  Ball b = ball(finite_spec(2, 1, {}), 3, 2);
  REQUIRE(b.elements.size() == 1);
  CHECK(b.elements[0].is_identity());
}

TEST_CASE("ball of <x t^0, x t^2>") {
  SubgroupSpec s = finite_spec(2, 1, {{W("x"), vec({0})}, {W("x"), vec({2})}});
  Ball b = ball(s, 2, 2);
  std::set<std::pair<Word, IntVec>> expect;
  for (long t : {-2, 0, 2}) expect.insert({Word(), vec({t})});
  for (const char* w : {"x", "X", "xx", "XX"})
    for (long t : {-2, 0, 2}) expect.insert({W(w), vec({t})});
  CHECK(as_set(b) == expect);
}

TEST_CASE("intersection ball equals normal closure ball") {
  // members of <x,y> n <xt,y> are exactly the zero-x-exponent words
  SubgroupSpec h = finite_spec(2, 1, {{W("x"), vec({0})}, {W("y"), vec({0})}});
  SubgroupSpec hp = finite_spec(2, 1, {{W("x"), vec({1})}, {W("y"), vec({0})}});
  SubgroupSpec nc;
  nc.n = 2;
  nc.m = 1;
  nc.pieces = {NormalClosurePiece{{W("x"), W("y")}, {1}}};

  Ball bh = ball(h, 4, 1);
  Ball bhp = ball(hp, 4, 1);
  std::set<std::pair<Word, IntVec>> inter;
  auto sh = as_set(bh);
  for (const auto& e : as_set(bhp))
    if (sh.count(e)) inter.insert(e);
  CHECK(inter == as_set(ball(nc, 4, 1)));
}

TEST_CASE("monotonicity") {
  SubgroupSpec s = finite_spec(2, 2, {{W("xy"), vec({1, 0})}, {W("Yx"), vec({0, 1})}});
  auto small = as_set(ball(s, 3, 2));
  auto big = as_set(ball(s, 5, 3));
  CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
}

TEST_CASE("cell cap") {
  SubgroupSpec s = finite_spec(2, 2, {});
  CHECK_THROWS_AS(ball(s, 8, 8, 1000), Error);
}
