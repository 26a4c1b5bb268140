#include "ftfa/configs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <thread>

#include "ftfa/errors.hpp"

namespace ftfa {

Configuration::Configuration(int k) : k_(k) {
  if (k < 1 || k > kMaxConfigK)
    throw Error(errc::k_too_large, "k must be in 1.." + std::to_string(kMaxConfigK));
  val_.assign(size_t(1) << k, false);
}

Configuration Configuration::from_support(int k, const std::vector<uint32_t>& masks) {
  Configuration c(k);
  for (uint32_t m : masks) c.set(m, true);
  return c;
}

bool Configuration::value(uint32_t mask) const {
  if (mask == 0 || mask >= val_.size()) throw Error(errc::bad_index, "subset mask out of range");
  return val_[mask];
}

void Configuration::set(uint32_t mask, bool v) {
  if (mask == 0 || mask >= val_.size()) throw Error(errc::bad_index, "subset mask out of range");
  val_[mask] = v;
}

std::vector<uint32_t> Configuration::support() const {
  std::vector<uint32_t> out;
  for (uint32_t m = 1; m < val_.size(); ++m)
    if (val_[m]) out.push_back(m);
  return out;
}

bool Configuration::is_zero() const {
  return std::none_of(val_.begin(), val_.end(), [](bool b) { return b; });
}

bool Configuration::is_one() const {
  for (uint32_t m = 1; m < val_.size(); ++m)
    if (!val_[m]) return false;
  return true;
}

Configuration join(const Configuration& c, const Configuration& d) {
  if (c.k() != d.k()) throw Error(errc::k_mismatch, "join of configurations with different k");
  Configuration out(c.k());
  for (uint32_t m = 1; m < (1u << c.k()); ++m) out.set(m, c.value(m) || d.value(m));
  return out;
}

Configuration delta_sum(const Configuration& c, const Configuration& d, int delta) {
  if (c.k() != d.k()) throw Error(errc::k_mismatch, "delta-sum of configurations with different k");
  if (delta != 0 && delta != 1) throw Error(errc::bad_input, "delta must be 0 or 1");
  int k = c.k();
  Configuration out(k + 1);
  uint32_t newbit = 1u << k;
  for (uint32_t m = 1; m < (1u << (k + 1)); ++m) {
    if (!(m & newbit)) {
      out.set(m, c.value(m));
    } else if (m == newbit) {
      out.set(m, delta != 0);
    } else {
      out.set(m, d.value(m & ~newbit));
    }
  }
  return out;
}

Configuration restrict_away(const Configuration& c, int index) {
  if (index < 1 || index > c.k()) throw Error(errc::bad_index, "restriction index out of range");
  if (c.k() < 2) throw Error(errc::bad_index, "cannot restrict a 1-configuration");
  int k = c.k();
  Configuration out(k - 1);
  uint32_t low = (1u << (index - 1)) - 1;
  for (uint32_t m = 1; m < (1u << (k - 1)); ++m) {
    uint32_t old = (m & low) | ((m & ~low) << 1);
    out.set(m, c.value(old));
  }
  return out;
}

Configuration cone(const Configuration& c, uint32_t vertex) {
  if (vertex == 0 || vertex >= (1u << c.k()))
    throw Error(errc::empty_vertex, "cone vertex must be a nonempty subset");
  Configuration out(c.k());
  for (uint32_t m = 1; m < (1u << c.k()); ++m)
    if ((m & ~vertex) == 0) out.set(m, c.value(m));
  return out;
}

bool is_howson(const Configuration& c) {
  std::vector<uint32_t> zeros;
  for (uint32_t m = 1; m < (1u << c.k()); ++m)
    if (!c.value(m)) zeros.push_back(m);
  for (size_t i = 0; i < zeros.size(); ++i)
    for (size_t j = i; j < zeros.size(); ++j)
      if (c.value(zeros[i] | zeros[j])) return false;
  return true;
}

namespace {

struct ObstructionSearch {
  const Configuration& c;
  uint32_t full;
  int best = 0;
  std::vector<uint32_t> witness;

  void close_check(const std::vector<uint32_t>& family) {
    if (family.size() < 2) return;
    uint32_t total = 0;
    for (uint32_t m : family) total |= m;
    if (!c.value(total)) return;
    for (size_t drop = 0; drop < family.size(); ++drop) {
      uint32_t u = 0;
      for (size_t i = 0; i < family.size(); ++i)
        if (i != drop) u |= family[i];
      if (u == total || c.value(u)) return;
    }
    if (static_cast<int>(family.size()) - 1 > best) {
      best = static_cast<int>(family.size()) - 1;
      witness = family;
    }
  }

  void dfs(uint32_t start, std::vector<uint32_t>& family, uint32_t unio) {
    close_check(family);
    if (family.size() >= static_cast<size_t>(c.k())) return;  // independence caps r at k
    for (uint32_t m = start; m <= full; ++m) {
      if (!family.empty() && (m & ~unio) == 0) continue;  // would duplicate a drop-one union
      family.push_back(m);
      dfs(m + 1, family, unio | m);
      family.pop_back();
    }
  }
};

}  // namespace

ObstructionBound obstruction_bound(const Configuration& c) {
  ObstructionSearch s{c, (1u << c.k()) - 1, 0, {}};
  std::vector<uint32_t> family;
  s.dfs(1, family, 0);
  return {s.best, s.witness};
}

// ---- parametric membership ----

Word conjugate_family_word(long j) {
  Word y = Word::letter(2);
  return y.pow(-j) * Word::letter(1) * y.pow(j);
}

namespace {

bool tail_holds(const TailPiece& t, long j) {
  return j <= t.j0 && (t.j0 - j) % t.stride == 0;
}

// Expression of w over the conjugate family u_j = y^-j x y^j: the x-letters
// in order, each with the index fixed by the y-depth of its prefix. Empty
// when w is outside the span (nonzero net y-exponent).
std::optional<std::vector<std::pair<long, int>>> scan_family(const Word& w) {
  long depth = 0;
  std::vector<std::pair<long, int>> out;
  for (int l : w.letters()) {
    if (std::abs(l) == 2) {
      depth += l > 0 ? 1 : -1;
    } else if (std::abs(l) == 1) {
      out.emplace_back(-depth, l > 0 ? +1 : -1);
    } else {
      return std::nullopt;
    }
  }
  if (depth != 0) return std::nullopt;
  return out;
}

bool member_tail_route(const SubgroupSpec& s, const FtfaElement& g) {
  if (s.n != 2) throw Error(errc::bad_input, "tail pieces live in rank 2");
  auto scan = scan_family(g.free_part);
  if (!scan) return false;

  // Localize to the finitely many family indices in sight, then decide in the
  // subgroup of the free group on those symbols.
  std::set<long> symbols;
  for (auto [j, sgn] : *scan) symbols.insert(j);
  struct ScannedPiece {
    const FinitePiece* piece;
    std::vector<std::vector<std::pair<long, int>>> words;
  };
  std::vector<ScannedPiece> finite_pieces;
  std::vector<const TailPiece*> tails;
  for (const Piece& piece : s.pieces) {
    if (const auto* t = std::get_if<TailPiece>(&piece)) {
      tails.push_back(t);
    } else if (const auto* f = std::get_if<FinitePiece>(&piece)) {
      ScannedPiece sp{f, {}};
      for (const auto& p : f->basis.pairs()) {
        auto ws = scan_family(p.word);
        if (!ws) throw Error(errc::bad_input, "finite piece word outside the conjugate family");
        for (auto [j, sgn] : *ws) symbols.insert(j);
        sp.words.push_back(std::move(*ws));
      }
      finite_pieces.push_back(std::move(sp));
    } else if (std::holds_alternative<NormalClosurePiece>(piece)) {
      throw Error(errc::bad_input, "tail and normal-closure pieces cannot be mixed");
    }
  }
  // factor disjointness: no finite piece may touch a tail family
  for (const ScannedPiece& sp : finite_pieces)
    for (const auto& sw : sp.words)
      for (auto [j, sgn] : sw)
        for (const TailPiece* t : tails)
          if (tail_holds(*t, j))
            throw Error(errc::not_strongly_complementary,
                        "finite piece overlaps a tail family");

  std::map<long, int> letter_of;
  int next = 1;
  for (long j : symbols) letter_of[j] = next++;
  int p = static_cast<int>(symbols.size());
  auto to_word = [&](const std::vector<std::pair<long, int>>& sw) {
    std::vector<int> raw;
    raw.reserve(sw.size());
    for (auto [j, sgn] : sw) raw.push_back(sgn * letter_of.at(j));
    return Word::reduce(raw);
  };

  std::vector<FtfaElement> gens;
  for (const TailPiece* t : tails)
    for (long j : symbols)
      if (tail_holds(*t, j)) gens.push_back({Word::letter(letter_of.at(j)), IntVec(s.m, 0)});
  for (const ScannedPiece& sp : finite_pieces) {
    for (size_t q = 0; q < sp.words.size(); ++q)
      gens.push_back({to_word(sp.words[q]), sp.piece->basis.pairs()[q].vec});
    const Lattice& l = sp.piece->basis.lattice();
    for (size_t i = 0; i < l.rank(); ++i) gens.push_back({Word(), l.basis().row(i)});
  }
  SubgroupBasis local = subgroup_basis(p, s.m, gens);
  return member(local, {to_word(*scan), g.abelian});
}

bool member_segment_route(const SubgroupSpec& s, const FtfaElement& g) {
  // Factor bases, concatenated; symbol -> owning piece.
  std::vector<Word> combined;
  std::vector<size_t> owner;
  std::vector<const FinitePiece*> fin(s.pieces.size(), nullptr);
  std::vector<const NormalClosurePiece*> ncs(s.pieces.size(), nullptr);
  std::vector<size_t> local_base(s.pieces.size(), 0);
  for (size_t q = 0; q < s.pieces.size(); ++q) {
    local_base[q] = combined.size();
    if (const auto* f = std::get_if<FinitePiece>(&s.pieces[q])) {
      fin[q] = f;
      for (const auto& p : f->basis.pairs()) {
        combined.push_back(p.word);
        owner.push_back(q);
      }
    } else if (const auto* nc = std::get_if<NormalClosurePiece>(&s.pieces[q])) {
      ncs[q] = nc;
      for (const Word& w : nc->factor) {
        combined.push_back(w);
        owner.push_back(q);
      }
    } else {
      throw Error(errc::bad_input, "tail and normal-closure pieces cannot be mixed");
    }
  }

  FoldResult f = fold(combined, s.n, /*want_expressions=*/true);
  if (f.autom.cycle_rank() != combined.size())
    throw Error(errc::not_strongly_complementary, "parametric factors are not jointly free");
  auto over_basis = rewrite(f.autom, f.basis, g.free_part);
  if (!over_basis) return false;
  Word expr = substitute(*over_basis, f.generator_expressions);

  // Normal form in the free product of the factors: maximal same-factor runs.
  IntVec point(s.m, 0);
  size_t i = 0;
  const auto& ls = expr.letters();
  while (i < ls.size()) {
    size_t q = owner[std::abs(ls[i]) - 1];
    size_t e = i;
    while (e < ls.size() && owner[std::abs(ls[e]) - 1] == q) ++e;
    std::vector<int> local(ls.begin() + i, ls.begin() + e);
    for (int& l : local) {
      int shift = static_cast<int>(local_base[q]);
      l = l > 0 ? l - shift : l + shift;
    }
    if (ncs[q] != nullptr) {
      std::vector<int> kept;
      std::set<int> killed(ncs[q]->killed.begin(), ncs[q]->killed.end());
      for (int l : local)
        if (!killed.count(std::abs(l) - 1)) kept.push_back(l);
      if (!Word::reduce(kept).empty()) return false;
    } else {
      Word lw = Word::reduce(local);
      IntVec add = mul_row(exponent_vector(lw, fin[q]->basis.rank()),
                           fin[q]->basis.completion_matrix());
      for (int c = 0; c < s.m; ++c) point[c] += add[c];
    }
    i = e;
  }

  std::vector<Lattice> parts;
  for (size_t q = 0; q < s.pieces.size(); ++q)
    if (fin[q] != nullptr) parts.push_back(fin[q]->basis.lattice());
  Lattice total = parts.empty() ? Lattice(s.m) : lattice_sum(parts);
  IntVec diff(s.m);
  for (int c = 0; c < s.m; ++c) diff[c] = g.abelian[c] - point[c];
  return total.contains(diff);
}

}  // namespace

bool spec_member(const SubgroupSpec& s, const FtfaElement& g) {
  if (g.abelian.size() != static_cast<size_t>(s.m))
    throw Error(errc::ambient_mismatch, "element/spec ambient mismatch");
  if (s.is_finite()) return member(*s.finite, g);
  bool has_tail = std::any_of(s.pieces.begin(), s.pieces.end(), [](const Piece& p) {
    return std::holds_alternative<TailPiece>(p);
  });
  return has_tail ? member_tail_route(s, g) : member_segment_route(s, g);
}

// ---- realizers ----

namespace {

IntVec unit_vec(int m, int coord) {
  IntVec v(m, 0);
  v[coord] = 1;
  return v;
}

SubgroupSpec assemble_spec(int n, int m, std::vector<Piece> pieces) {
  SubgroupSpec s;
  s.n = n;
  s.m = m;
  bool all_finite = std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) {
    return std::holds_alternative<FinitePiece>(p);
  });
  if (pieces.empty()) {
    s.finite = subgroup_basis(n, m, {});
  } else if (all_finite) {
    SubgroupBasis b = std::get<FinitePiece>(pieces[0]).basis;
    for (size_t i = 1; i < pieces.size(); ++i)
      b = strong_join(b, std::get<FinitePiece>(pieces[i]).basis);
    s.finite = std::move(b);
  } else {
    s.pieces = std::move(pieces);
  }
  return s;
}

}  // namespace

Realization realize_ftfa(const Configuration& c) {
  int k = c.k();
  std::vector<uint32_t> supp = c.support();
  int m = 0;
  long singletons = 0;
  for (uint32_t mask : supp) {
    m += std::popcount(mask) - 1;
    if (std::popcount(mask) == 1) ++singletons;
  }

  std::vector<std::vector<Piece>> pieces(k);
  long tail_count = 0, pair_count = 0;
  int coord = 0;
  for (uint32_t mask : supp) {
    int p = std::popcount(mask);
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) members.push_back(i);
    if (p == 1) {
      pieces[members[0]].push_back(TailPiece{-1 - tail_count, singletons});
      ++tail_count;
      continue;
    }
    Word x = conjugate_family_word(2 * pair_count);
    Word y = conjugate_family_word(2 * pair_count + 1);
    ++pair_count;
    std::vector<int> coords(p - 1);
    for (int j = 0; j < p - 1; ++j) coords[j] = coord + j;
    coord += p - 1;

    for (int l = 0; l < p; ++l) {
      std::vector<SubgroupBasis::Pair> pv;
      IntMatrix rows(0, m);
      if (l + 1 < p) {
        // one of the first p-1 members: plain letters, all block coordinates
        // except its own
        pv = {{x, IntVec(m, 0)}, {y, IntVec(m, 0)}};
        for (int j = 0; j < p - 1; ++j)
          if (j != l) rows.append_row(unit_vec(m, coords[j]));
      } else {
        // the last member: y is completed by the first coordinate, the
        // lattice holds the consecutive differences
        pv = {{x, IntVec(m, 0)}, {y, unit_vec(m, coords[0])}};
        for (int j = 1; j < p - 1; ++j) {
          IntVec row = unit_vec(m, coords[j]);
          row[coords[0]] -= 1;
          rows.append_row(row);
        }
      }
      pieces[members[l]].push_back(
          FinitePiece{SubgroupBasis::from_pairs(2, m, std::move(pv), Lattice::from_rows(m, rows))});
    }
  }

  Realization out;
  out.n = 2;
  out.m = m;
  out.k = k;
  out.subgroups.reserve(k);
  for (int i = 0; i < k; ++i) out.subgroups.push_back(assemble_spec(2, m, std::move(pieces[i])));
  return out;
}

namespace {

struct FreeAlloc {
  long next = 0;
  std::pair<Word, Word> fresh() {
    Word u = conjugate_family_word(next);
    Word v = conjugate_family_word(next + 1);
    next += 2;
    return {u, v};
  }
};

Piece whole_factor_piece(const Word& u, const Word& v) {
  return FinitePiece{SubgroupBasis::from_pairs(
      2, 0, {{u, IntVec{}}, {v, IntVec{}}}, Lattice(0))};
}

std::vector<std::vector<Piece>> realize_free_rec(const Configuration& c, FreeAlloc& alloc) {
  int k = c.k();
  std::vector<std::vector<Piece>> out(k);
  std::vector<uint32_t> supp = c.support();
  if (supp.empty()) return out;

  std::vector<uint32_t> maximal;
  for (uint32_t a : supp) {
    bool is_max = true;
    for (uint32_t b : supp)
      if (a != b && (a & ~b) == 0) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(a);
  }

  if (maximal.size() >= 2) {
    for (uint32_t v : maximal) {
      auto part = realize_free_rec(cone(c, v), alloc);
      for (int i = 0; i < k; ++i)
        for (Piece& p : part[i]) out[i].push_back(std::move(p));
    }
    return out;
  }

  uint32_t full = (1u << k) - 1;
  uint32_t top = maximal[0];
  if (top != full) {
    // indices outside the unique maximal support set realize trivially
    Configuration cur = c;
    std::vector<int> keep;  // original indices kept, ascending
    for (int i = 1; i <= k; ++i)
      if (top & (1u << (i - 1))) keep.push_back(i);
    for (int i = k; i >= 1; --i)
      if (!(top & (1u << (i - 1)))) cur = restrict_away(cur, i);
    auto sub = realize_free_rec(cur, alloc);
    for (size_t t = 0; t < keep.size(); ++t) out[keep[t] - 1] = std::move(sub[t]);
    return out;
  }

  if (c.is_one()) {
    auto [u, v] = alloc.fresh();
    NormalClosurePiece nc{{u, v}, {1}};
    for (int i = 0; i < k; ++i) out[i] = {nc};
    return out;
  }

  // Unique maximal support set [k], not everything nonzero: every index
  // outside a maximum-size zero set is forced to 1 on all its subsets, so it
  // splits off as a normal closure inside a fresh factor.
  uint32_t best_zero = 0;
  int best_pc = -1;
  for (uint32_t mask = 1; mask <= full; ++mask)
    if (!c.value(mask) && std::popcount(mask) > best_pc) {
      best_pc = std::popcount(mask);
      best_zero = mask;
    }
  FTFA_CHECK(best_zero != 0, "no zero subset although the configuration is not all-ones");
  int j = 1;
  while (best_zero & (1u << (j - 1))) ++j;

  Configuration cp = restrict_away(c, j);
  auto sub = realize_free_rec(cp, alloc);
  auto [u, v] = alloc.fresh();
  for (int i = 1; i <= k; ++i) {
    if (i == j) {
      out[i - 1] = {NormalClosurePiece{{u, v}, {1}}};
    } else {
      int idx = i < j ? i : i - 1;
      out[i - 1] = std::move(sub[idx - 1]);
      out[i - 1].push_back(whole_factor_piece(u, v));
    }
  }
  return out;
}

}  // namespace

std::optional<Realization> realize_free(const Configuration& c) {
  if (!is_howson(c)) return std::nullopt;
  FreeAlloc alloc;
  auto pieces = realize_free_rec(c, alloc);
  Realization out;
  out.n = 2;
  out.m = 0;
  out.k = c.k();
  out.subgroups.reserve(c.k());
  for (int i = 0; i < c.k(); ++i) out.subgroups.push_back(assemble_spec(2, 0, std::move(pieces[i])));
  return out;
}

// ---- verification ----

namespace {

// Candidate generators for free witness families inside an intersection:
// conjugate orbits b^-t a b^t drawn from the members' pieces.
struct WitnessStream {
  bool tail = false;
  TailPiece tp;
  FtfaElement a, b;

  FtfaElement at(long t, int m) const {
    if (tail) return {conjugate_family_word(tp.j0 - tp.stride * t), IntVec(m, 0)};
    return a.conjugate(b.pow(t));
  }
};

std::vector<FtfaElement> find_witnesses(const Realization& r, const std::vector<int>& members,
                                        int target) {
  std::vector<WitnessStream> streams;
  auto add_basis_streams = [&](const SubgroupBasis& b) {
    const auto& ps = b.pairs();
    for (size_t q = 0; q + 1 < ps.size(); ++q) {
      WitnessStream s;
      s.a = {ps[q].word, ps[q].vec};
      s.b = {ps[q + 1].word, ps[q + 1].vec};
      streams.push_back(std::move(s));
    }
  };
  for (int i : members) {
    const SubgroupSpec& s = r.subgroups[i];
    if (s.is_finite()) {
      add_basis_streams(*s.finite);
      continue;
    }
    for (const Piece& piece : s.pieces) {
      if (const auto* t = std::get_if<TailPiece>(&piece)) {
        WitnessStream ws;
        ws.tail = true;
        ws.tp = *t;
        streams.push_back(std::move(ws));
      } else if (const auto* nc = std::get_if<NormalClosurePiece>(&piece)) {
        std::set<int> killed(nc->killed.begin(), nc->killed.end());
        int ka = -1, kb = -1;
        for (size_t q = 0; q < nc->factor.size(); ++q) {
          if (killed.count(static_cast<int>(q)) && ka < 0) ka = static_cast<int>(q);
          if (!killed.count(static_cast<int>(q)) && kb < 0) kb = static_cast<int>(q);
        }
        if (ka >= 0 && kb >= 0) {
          WitnessStream ws;
          ws.a = {nc->factor[ka], IntVec(r.m, 0)};
          ws.b = {nc->factor[kb], IntVec(r.m, 0)};
          streams.push_back(std::move(ws));
        }
      } else if (const auto* f = std::get_if<FinitePiece>(&piece)) {
        add_basis_streams(f->basis);
      }
    }
  }

  std::vector<FtfaElement> picked;
  std::vector<Word> picked_words;
  std::set<Word> seen;
  constexpr long t_cap = 64;
  for (long t = 0; t <= t_cap && static_cast<int>(picked.size()) < target; ++t) {
    for (const WitnessStream& ws : streams) {
      if (static_cast<int>(picked.size()) >= target) break;
      FtfaElement cand = ws.at(t, r.m);
      if (cand.free_part.empty() || !seen.insert(cand.free_part).second) continue;
      bool in_all = true;
      for (int i : members)
        if (!spec_member(r.subgroups[i], cand)) {
          in_all = false;
          break;
        }
      if (!in_all) continue;
      picked_words.push_back(cand.free_part);
      if (fold(picked_words, r.n).autom.cycle_rank() != picked_words.size()) {
        picked_words.pop_back();
        continue;
      }
      picked.push_back(std::move(cand));
    }
  }
  if (static_cast<int>(picked.size()) < target) return {};
  return picked;
}

SubsetReport verify_subset(const Configuration& c, const Realization& r, uint32_t mask,
                           int witness_rank) {
  SubsetReport rep;
  rep.mask = mask;
  rep.expected = c.value(mask);
  std::vector<int> members;
  for (int i = 0; i < r.k; ++i)
    if (mask & (1u << i)) members.push_back(i);

  bool all_finite = std::all_of(members.begin(), members.end(),
                                [&](int i) { return r.subgroups[i].is_finite(); });
  if (all_finite) {
    std::vector<SubgroupBasis> bases;
    bases.reserve(members.size());
    for (int i : members) bases.push_back(*r.subgroups[i].finite);
    IntersectResult res = intersect(bases);
    rep.verdict = res.fg ? Verdict::VerifiedFG : Verdict::VerifiedNonFG;
    rep.fg_evidence = res.verdict;
    rep.basis = std::move(res.basis);
    rep.consistent = (res.fg == !rep.expected);
    return rep;
  }
  if (rep.expected) {
    std::vector<FtfaElement> w = find_witnesses(r, members, witness_rank);
    if (!w.empty()) {
      rep.verdict = Verdict::WitnessedNonFG;
      rep.witnesses = std::move(w);
      rep.consistent = true;
      return rep;
    }
  }
  rep.verdict = Verdict::StructuralOnly;
  return rep;
}

}  // namespace

VerifyReport verify(const Configuration& c, const Realization& r, int witness_rank,
                    bool parallel) {
  if (r.k != c.k() || static_cast<int>(r.subgroups.size()) != c.k())
    throw Error(errc::arity_mismatch, "realization size differs from configuration k");
  uint32_t total = (1u << c.k()) - 1;
  VerifyReport out;
  out.subsets.resize(total);

  auto run = [&](uint32_t lo, uint32_t hi) {
    for (uint32_t mask = lo; mask <= hi; ++mask)
      out.subsets[mask - 1] = verify_subset(c, r, mask, witness_rank);
  };
  if (parallel && total > 8) {
    unsigned nt = std::min(8u, std::thread::hardware_concurrency());
    nt = std::max(nt, 1u);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(nt);
    uint32_t chunk = (total + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
      uint32_t lo = 1 + t * chunk;
      uint32_t hi = std::min(total, lo + chunk - 1);
      if (lo <= hi)
        threads.emplace_back([&, t, lo, hi] {
          try {
            run(lo, hi);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
    }
    for (auto& th : threads) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    run(1, total);
  }

  out.pass = std::all_of(out.subsets.begin(), out.subsets.end(), [](const SubsetReport& s) {
    return !s.consistent.has_value() || *s.consistent;
  });
  return out;
}

}  // namespace ftfa
