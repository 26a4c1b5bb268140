#include <doctest.h>

#include <algorithm>
#include <random>

#include "ftfa/lattice.hpp"

using namespace ftfa;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Lattice lat(std::vector<std::vector<long>> rows, size_t ambient) {
  return Lattice::from_rows(ambient, mat(std::move(rows), ambient));
}

IntVec vec(std::vector<long> v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// Every lattice point of the box [-lim,lim]^m, by direct membership.
std::vector<IntVec> box_points(const AffineCoset& c, long lim) {
  size_t m = c.point.size();
  std::vector<IntVec> out;
  std::vector<long> cur(m, -lim);
  while (true) {
    IntVec v(m);
    for (size_t i = 0; i < m; ++i) v[i] = cur[i];
    if (c.contains(v)) out.push_back(v);
    size_t i = 0;
    for (; i < m; ++i) {
      if (cur[i] < lim) {
        ++cur[i];
        break;
      }
      cur[i] = -lim;
    }
    if (i == m) break;
  }
  return out;
}

}  // namespace

TEST_CASE("lattice meet") {
  CHECK(lattice_meet(lat({{2, 0}, {0, 1}}, 2), lat({{1, 0}, {0, 3}}, 2)) ==
        lat({{2, 0}, {0, 3}}, 2));
  Lattice l = lat({{3, 1}}, 2);
  CHECK(lattice_meet(l, Lattice::full(2)) == l);
  CHECK(lattice_meet(lat({{1, 1}}, 2), lat({{1, -1}}, 2)).is_trivial());
}

TEST_CASE("meet against box brute force") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3), nrows(0, 2);
  for (int it = 0; it < 60; ++it) {
    Lattice a = lat({{entry(rng), entry(rng)}, {entry(rng), entry(rng)}}, 2);
    Lattice b = lat({{entry(rng), entry(rng)}}, 2);
    Lattice m = lattice_meet(a, b);
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        IntVec v = vec({x, y});
        CHECK(m.contains(v) == (a.contains(v) && b.contains(v)));
      }
  }
}

TEST_CASE("preimage") {
  CHECK(preimage(mat({{1}, {0}}, 1), lat({{2}}, 1)) == lat({{2, 0}, {0, 1}}, 2));
  CHECK(preimage(mat({{1, 2}, {3, 4}, {5, 6}}, 2), Lattice::full(2)) == Lattice::full(3));
  CHECK(preimage(IntMatrix::identity(2), Lattice(2)).is_trivial());
}

TEST_CASE("preimage sampling") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int it = 0; it < 40; ++it) {
    IntMatrix r(2, 2);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) r.at(i, j) = entry(rng);
    Lattice l = lat({{entry(rng), entry(rng)}}, 2);
    Lattice pre = preimage(r, l);
    for (long x = -5; x <= 5; ++x)
      for (long y = -5; y <= 5; ++y) {
        IntVec v = vec({x, y});
        CHECK(pre.contains(v) == l.contains(mul_row(v, r)));
      }
  }
}

TEST_CASE("index and reps") {
  IndexReps ir = index_and_reps(lat({{2, 0}, {0, 3}}, 2));
  REQUIRE(ir.finite);
  CHECK(ir.index == 6);
  REQUIRE(ir.reps.size() == 6);
  CHECK(ir.reps[0] == vec({0, 0}));
  CHECK(ir.reps[1] == vec({0, 1}));
  CHECK(ir.reps[3] == vec({1, 0}));

  CHECK(!index_and_reps(lat({{1, 1}}, 2)).finite);

  IndexReps whole = index_and_reps(Lattice::full(2));
  REQUIRE(whole.finite);
  CHECK(whole.index == 1);
  CHECK(whole.reps == std::vector<IntVec>{vec({0, 0})});
}

TEST_CASE("reps pairwise non-congruent") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-4, 4), diag(1, 3);
  for (int it = 0; it < 30; ++it) {
    IntMatrix b(2, 2);
    b.at(0, 0) = diag(rng);
    b.at(0, 1) = entry(rng);
    b.at(1, 1) = diag(rng);
    Lattice l = Lattice::from_rows(2, b);
    IndexReps ir = index_and_reps(l);
    REQUIRE(ir.finite);
    CHECK(Int(ir.reps.size()) == ir.index);
    for (size_t i = 0; i < ir.reps.size(); ++i)
      for (size_t j = i + 1; j < ir.reps.size(); ++j) {
        IntVec d(2);
        for (size_t c = 0; c < 2; ++c) d[c] = ir.reps[i][c] - ir.reps[j][c];
        CHECK(!l.contains(d));
      }
  }
}

TEST_CASE("affine meet examples") {
  AffineCoset c1 = AffineCoset::make(vec({1, 0}), lat({{1, 1}}, 2));
  AffineCoset c2 = AffineCoset::make(vec({0, 0}), lat({{0, 1}}, 2));
  std::vector<AffineCoset> cs = {c1, c2};
  auto m = affine_meet(cs);
  REQUIRE(m.has_value());
  CHECK(m->lattice.is_trivial());
  CHECK(m->point == vec({0, -1}));

  cs = {AffineCoset::make(vec({1, 0}), lat({{2, 0}}, 2)), c2};
  CHECK(!affine_meet(cs).has_value());

  AffineCoset c = AffineCoset::make(vec({5, 7}), lat({{2, 1}}, 2));
  cs = {c, c};
  auto self = affine_meet(cs);
  REQUIRE(self.has_value());
  CHECK(*self == c);
}

TEST_CASE("affine meet against box brute force") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> entry(-3, 3), count(2, 3);
  for (int it = 0; it < 60; ++it) {
    int k = count(rng);
    std::vector<AffineCoset> cs;
    for (int i = 0; i < k; ++i) {
      cs.push_back(AffineCoset::make(vec({entry(rng), entry(rng)}),
                                     lat({{entry(rng), entry(rng)}}, 2)));
    }
    auto m = affine_meet(cs);
    std::vector<IntVec> expect;
    for (long x = -8; x <= 8; ++x)
      for (long y = -8; y <= 8; ++y) {
        IntVec v = vec({x, y});
        bool in_all = true;
        for (const AffineCoset& c : cs) in_all = in_all && c.contains(v);
        if (in_all) expect.push_back(v);
      }
    if (!m.has_value()) {
      CHECK(expect.empty());
    } else {
      std::vector<IntVec> got = box_points(*m, 8);
      std::sort(got.begin(), got.end());
      std::sort(expect.begin(), expect.end());
      CHECK(got == expect);
    }
  }
}

TEST_CASE("ambient zero") {
  Lattice z(0);
  CHECK(z.rank() == 0);
  IndexReps ir = index_and_reps(z);
  REQUIRE(ir.finite);
  CHECK(ir.index == 1);
}
