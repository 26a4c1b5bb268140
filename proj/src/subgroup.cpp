#include "ftfa/subgroup.hpp"


#include "ftfa/errors.hpp"

namespace ftfa {

FtfaElement FtfaElement::operator*(const FtfaElement& rhs) const {
  if (abelian.size() != rhs.abelian.size())
    throw Error(errc::ambient_mismatch, "element product ambients");
  FtfaElement out;
  out.free_part = free_part * rhs.free_part;
  out.abelian.resize(abelian.size());
  for (size_t i = 0; i < abelian.size(); ++i) out.abelian[i] = abelian[i] + rhs.abelian[i];
  return out;
}

FtfaElement FtfaElement::inverse() const {
  FtfaElement out;
  out.free_part = free_part.inverse();
  out.abelian.resize(abelian.size());
  for (size_t i = 0; i < abelian.size(); ++i) out.abelian[i] = -abelian[i];
  return out;
}

FtfaElement FtfaElement::conjugate(const FtfaElement& by) const {
  return by.inverse() * (*this) * by;
}

FtfaElement FtfaElement::pow(long e) const {
  FtfaElement base = e < 0 ? inverse() : *this;
  long k = std::labs(e);
  FtfaElement out = identity(abelian.size());
  for (long i = 0; i < k; ++i) out = out * base;
  return out;
}

bool FtfaElement::is_identity() const {
  if (!free_part.empty()) return false;
  for (const Int& x : abelian)
    if (x != 0) return false;
  return true;
}

SubgroupBasis SubgroupBasis::from_pairs(int n, int m, std::vector<Pair> pairs, Lattice lattice) {
  if (lattice.ambient() != static_cast<size_t>(m))
    throw Error(errc::ambient_mismatch, "lattice ambient != m");
  SubgroupBasis b;
  b.n_ = n;
  b.m_ = m;
  b.pairs_ = std::move(pairs);
  b.lattice_ = std::move(lattice);
  for (Pair& p : b.pairs_) {
    check_rank(p.word, n);
    if (p.vec.size() != static_cast<size_t>(m))
      throw Error(errc::ambient_mismatch, "completion vector length != m");
    if (p.word.empty()) throw Error(errc::bad_input, "trivial word in basis pair");
    p.vec = b.lattice_.reduce(p.vec);
  }
  b.init_rewriting();
  return b;
}

IntMatrix SubgroupBasis::completion_matrix() const {
  IntMatrix a(pairs_.size(), m_);
  for (size_t j = 0; j < pairs_.size(); ++j) a.set_row(j, pairs_[j].vec);
  return a;
}

std::optional<Word> SubgroupBasis::express(const Word& w) const {
  auto over_basis = rewrite(autom_, basis_, w);
  if (!over_basis) return std::nullopt;
  return substitute(*over_basis, pair_expr_);
}

std::vector<FtfaElement> SubgroupBasis::generators() const {
  std::vector<FtfaElement> out;
  out.reserve(pairs_.size() + lattice_.rank());
  for (const Pair& p : pairs_) out.push_back({p.word, p.vec});
  for (size_t i = 0; i < lattice_.rank(); ++i) out.push_back({Word(), lattice_.basis().row(i)});
  return out;
}

void SubgroupBasis::init_rewriting() {
  std::vector<Word> words;
  words.reserve(pairs_.size());
  for (const Pair& p : pairs_) words.push_back(p.word);
  FoldResult f = fold(words, n_, /*want_expressions=*/true);
  if (f.autom.cycle_rank() != pairs_.size())
    throw Error(errc::bad_input, "pair words are not a free basis");
  autom_ = std::move(f.autom);
  basis_ = std::move(f.basis);
  pair_expr_ = std::move(f.generator_expressions);
}

SubgroupBasis subgroup_basis(int n, int m, std::span<const FtfaElement> generators) {
  size_t p = generators.size();
  IntMatrix a_stack(p, m);
  std::vector<Word> words;
  words.reserve(p);
  for (size_t i = 0; i < p; ++i) {
    check_rank(generators[i].free_part, n);
    if (generators[i].abelian.size() != static_cast<size_t>(m))
      throw Error(errc::ambient_mismatch, "generator vector length != m");
    words.push_back(generators[i].free_part);
    a_stack.set_row(i, generators[i].abelian);
  }

  FoldResult f = fold(words, n, /*want_expressions=*/true);
  size_t q = f.basis.basis_words.size();

  // Completion of basis word j: the exponent vector of any expression of it
  // over the generators, pushed through the stacked generator vectors.
  std::vector<SubgroupBasis::Pair> pairs(q);
  for (size_t j = 0; j < q; ++j) {
    pairs[j].word = f.basis.basis_words[j];
    pairs[j].vec = mul_row(exponent_vector(f.generator_expressions[j], p), a_stack);
  }

  // Pure-abelian part: a relation among the generators' free parts is any
  // word whose rewriting abelianizes to zero, and those exponent vectors are
  // exactly ker(M) for M the abelianized rewriting map.
  IntMatrix m_map(p, q);
  for (size_t i = 0; i < p; ++i) {
    auto expr = rewrite(f.autom, f.basis, words[i]);
    FTFA_CHECK(expr.has_value(), "generator rejected by its own fold");
    m_map.set_row(i, exponent_vector(*expr, q));
  }
  Lattice l = Lattice::from_rows(m, kernel_basis(m_map) * a_stack);

  SubgroupBasis b;
  b.n_ = n;
  b.m_ = m;
  b.lattice_ = std::move(l);
  b.pairs_ = std::move(pairs);
  for (auto& pr : b.pairs_) pr.vec = b.lattice_.reduce(pr.vec);
  b.autom_ = std::move(f.autom);
  b.basis_ = std::move(f.basis);
  b.pair_expr_.reserve(q);
  for (size_t j = 0; j < q; ++j) b.pair_expr_.push_back(Word::letter(static_cast<int>(j) + 1));
  return b;
}

std::optional<AffineCoset> completion(const SubgroupBasis& b, const Word& w) {
  auto expr = b.express(w);
  if (!expr) return std::nullopt;
  IntVec point = mul_row(exponent_vector(*expr, b.rank()), b.completion_matrix());
  return AffineCoset::make(std::move(point), b.lattice());
}

bool member(const SubgroupBasis& b, const FtfaElement& g) {
  if (g.abelian.size() != static_cast<size_t>(b.m()))
    throw Error(errc::ambient_mismatch, "element/basis ambient mismatch");
  check_rank(g.free_part, b.n());
  auto c = completion(b, g.free_part);
  return c.has_value() && c->contains(g.abelian);
}

SubgroupBasis strong_join(const SubgroupBasis& a, const SubgroupBasis& b) {
  if (a.n() != b.n() || a.m() != b.m())
    throw Error(errc::ambient_mismatch, "strong_join ambients");

  std::vector<Word> all_words;
  for (const auto& p : a.pairs()) all_words.push_back(p.word);
  for (const auto& p : b.pairs()) all_words.push_back(p.word);
  FoldResult f = fold(all_words, a.n());
  if (f.autom.cycle_rank() != a.rank() + b.rank())
    throw Error(errc::not_strongly_complementary, "free parts are not in free factor position");

  auto abelian_span = [](const SubgroupBasis& s) {
    IntMatrix rows(0, s.m());
    for (const auto& p : s.pairs()) rows.append_row(p.vec);
    for (size_t i = 0; i < s.lattice().rank(); ++i) rows.append_row(s.lattice().basis().row(i));
    return Lattice::from_rows(s.m(), rows);
  };
  if (!lattice_meet(abelian_span(a), abelian_span(b)).is_trivial())
    throw Error(errc::not_strongly_complementary, "abelian projections are not in direct sum");

  std::vector<FtfaElement> gens = a.generators();
  for (FtfaElement& g : b.generators()) gens.push_back(std::move(g));
  return subgroup_basis(a.n(), a.m(), gens);
}

bool subgroup_equal(const SubgroupBasis& a, const SubgroupBasis& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  for (const FtfaElement& g : a.generators())
    if (!member(b, g)) return false;
  for (const FtfaElement& g : b.generators())
    if (!member(a, g)) return false;
  return true;
}

}  // namespace ftfa
