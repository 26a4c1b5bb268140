#include "ftfa/stallings.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "ftfa/errors.hpp"

namespace ftfa {

size_t Automaton::num_edges() const {
  size_t e = 0;
  for (const auto& row : fwd)
    for (int t : row)
      if (t >= 0) ++e;
  return e;
}

size_t Automaton::cycle_rank() const {
  return num_edges() + 1 - num_states();
}

int Automaton::step(int state, int letter) const {
  if (letter > rank || letter < -rank || letter == 0) return -1;
  if (letter > 0) return fwd[state][letter - 1];
  return bwd[state][-letter - 1];
}

bool Automaton::accepts(const Word& w) const {
  int s = base;
  for (int a : w.letters()) {
    s = step(s, a);
    if (s < 0) return false;
  }
  return s == base;
}

namespace {

// -------- folding with an elementary-event log --------

struct FlowerEdge {
  int src0, dst0, letter;  // creation endpoints; states only ever merge
};

struct FoldEvent {
  int e_keep, e_drop;
  int x_keep, x_drop;  // the state pair identified (may be equal)
  bool same_src;       // true: edges shared their source, states are targets
};

struct Folder {
  int rank;
  std::vector<FlowerEdge> edges;
  std::vector<int> eparent;              // edge union-find (kept edge is root)
  std::vector<int> sparent;              // state merge target
  std::vector<int> merged_at;            // event index, or -1 while live
  std::vector<std::map<int, int>> adj;   // live state -> signed letter -> edge
  std::vector<FoldEvent> events;
  std::deque<std::pair<int, int>> clashes;

  // petal position of each flower edge: generator index, position, direction
  struct PetalPos {
    int gen, pos, dir;
  };
  std::vector<PetalPos> petal_of;
  std::vector<std::vector<std::pair<int, int>>> petals;  // gen -> [(edge, dir)]

  int new_state() {
    sparent.push_back(-1);
    merged_at.push_back(-1);
    adj.emplace_back();
    return static_cast<int>(sparent.size()) - 1;
  }

  int efind(int e) {
    while (eparent[e] != e) e = eparent[e] = eparent[eparent[e]];
    return e;
  }
  int efind(int e) const {
    while (eparent[e] != e) e = eparent[e];
    return e;
  }
  int sfind(int s) const {
    while (merged_at[s] >= 0) s = sparent[s];
    return s;
  }
  // State as it was in the graph before event t.
  int sfind_at(int s, int t) const {
    while (merged_at[s] >= 0 && merged_at[s] < t) s = sparent[s];
    return s;
  }

  void attach(int state, int key, int e) {
    e = efind(e);
    auto [it, fresh] = adj[state].try_emplace(key, e);
    if (!fresh && efind(it->second) != e) clashes.emplace_back(it->second, e);
  }

  void add_edge(int src, int dst, int letter, int gen, int pos, int dir) {
    int e = static_cast<int>(edges.size());
    edges.push_back({src, dst, letter});
    eparent.push_back(e);
    petal_of.push_back({gen, pos, dir});
    attach(src, letter, e);
    attach(dst, -letter, e);
  }

  void detach(int e) {
    int s = sfind(edges[e].src0), d = sfind(edges[e].dst0);
    auto it = adj[s].find(edges[e].letter);
    if (it != adj[s].end() && efind(it->second) == e) adj[s].erase(it);
    it = adj[d].find(-edges[e].letter);
    if (it != adj[d].end() && efind(it->second) == e) adj[d].erase(it);
  }

  void run() {
    while (!clashes.empty()) {
      auto [a, b] = clashes.front();
      clashes.pop_front();
      int e1 = efind(a), e2 = efind(b);
      if (e1 == e2) continue;
      int s1 = sfind(edges[e1].src0), d1 = sfind(edges[e1].dst0);
      int s2 = sfind(edges[e2].src0), d2 = sfind(edges[e2].dst0);
      FTFA_CHECK(edges[e1].letter == edges[e2].letter, "clashing edges carry different letters");
      FoldEvent ev;
      ev.e_keep = e1;
      ev.e_drop = e2;
      if (s1 == s2) {
        ev.same_src = true;
        ev.x_keep = d1;
        ev.x_drop = d2;
      } else {
        FTFA_CHECK(d1 == d2, "stale clash shares neither endpoint");
        ev.same_src = false;
        ev.x_keep = s1;
        ev.x_drop = s2;
      }
      int t = static_cast<int>(events.size());
      detach(e2);
      eparent[e2] = e1;
      if (ev.x_keep != ev.x_drop) {
        int keep = ev.x_keep, drop = ev.x_drop;
        if (drop == 0 || (keep != 0 && drop < keep)) std::swap(keep, drop);  // base survives
        merged_at[drop] = t;
        sparent[drop] = keep;
        auto moved = std::move(adj[drop]);
        adj[drop].clear();
        for (auto& [key, e] : moved) attach(keep, key, e);
      }
      // An entry displaced by an earlier clash may have left a slot of the
      // surviving edge unfilled once its occupant merged away.
      attach(sfind(edges[e1].src0), edges[e1].letter, e1);
      attach(sfind(edges[e1].dst0), -edges[e1].letter, e1);
      events.push_back(ev);
    }
  }

  // Replay the fold sequence backwards, turning a loop at base of the folded
  // graph into a loop at base of the flower reading a freely equal word.
  std::vector<std::pair<int, int>> lift(std::vector<std::pair<int, int>> path) const {
    for (int t = static_cast<int>(events.size()) - 1; t >= 0; --t) {
      const FoldEvent& ev = events[t];
      // A pure edge merge changes no state identifications, so the path is
      // already valid one level down.
      if (ev.x_keep == ev.x_drop) continue;
      auto connector = [&](int from, std::vector<std::pair<int, int>>& out) {
        // Path from x_keep to x_drop (or reversed) through the shared state.
        std::vector<std::pair<int, int>> conn;
        if (ev.same_src) {
          conn = {{ev.e_keep, -1}, {ev.e_drop, +1}};
        } else {
          conn = {{ev.e_keep, +1}, {ev.e_drop, -1}};
        }
        if (from == ev.x_drop) {
          std::reverse(conn.begin(), conn.end());
          for (auto& [e, s] : conn) s = -s;
        } else {
          FTFA_CHECK(from == ev.x_keep, "lift mismatch outside the folded pair");
        }
        out.insert(out.end(), conn.begin(), conn.end());
      };
      std::vector<std::pair<int, int>> fixed;
      fixed.reserve(path.size());
      int cur = 0;
      for (auto [e, sgn] : path) {
        int s = sfind_at(edges[e].src0, t), d = sfind_at(edges[e].dst0, t);
        int from = sgn > 0 ? s : d, to = sgn > 0 ? d : s;
        if (cur != from) connector(cur, fixed);
        fixed.emplace_back(e, sgn);
        cur = to;
      }
      if (cur != 0) connector(cur, fixed);
      path = std::move(fixed);
      if (path.size() > size_t(1) << 24)
        throw Error(errc::bounds_too_large, "fold provenance lift exploded");
    }
    return path;
  }

  // Decompose a reduced flower loop into full petal traversals.
  Word decode(const std::vector<std::pair<int, int>>& raw) const {
    std::vector<std::pair<int, int>> path;
    for (auto step : raw) {
      if (!path.empty() && path.back().first == step.first &&
          path.back().second == -step.second) {
        path.pop_back();
      } else {
        path.push_back(step);
      }
    }
    std::vector<int> expr;
    size_t pos = 0;
    while (pos < path.size()) {
      auto [e, sgn] = path[pos];
      const PetalPos& pp = petal_of[e];
      const auto& petal = petals[pp.gen];
      size_t len = petal.size();
      bool forward = sgn == petal[pp.pos].second;
      if (forward) {
        FTFA_CHECK(pp.pos == 0, "reduced flower loop enters a petal mid-way");
        for (size_t q = 0; q < len; ++q)
          FTFA_CHECK(pos + q < path.size() && path[pos + q].first == petal[q].first &&
                         path[pos + q].second == petal[q].second,
                     "petal traversal broke off");
        expr.push_back(pp.gen + 1);
      } else {
        FTFA_CHECK(pp.pos + 1 == static_cast<int>(len), "reduced flower loop enters a petal mid-way");
        for (size_t q = 0; q < len; ++q)
          FTFA_CHECK(pos + q < path.size() && path[pos + q].first == petal[len - 1 - q].first &&
                         path[pos + q].second == -petal[len - 1 - q].second,
                     "petal traversal broke off");
        expr.push_back(-(pp.gen + 1));
      }
      pos += len;
    }
    return Word::reduce(expr);
  }
};

// Canonical BFS relabel of the live, cored part reachable from base.
Automaton canonicalize(const Folder& f) {
  Automaton a;
  a.rank = f.rank;

  // core: iteratively drop non-base states of degree <= 1
  std::vector<std::map<int, int>> adj(f.adj.size());
  std::vector<bool> live(f.adj.size(), false);
  for (size_t s = 0; s < f.adj.size(); ++s)
    if (f.sfind(static_cast<int>(s)) == static_cast<int>(s)) {
      live[s] = true;
      adj[s] = f.adj[s];
    }
  std::queue<int> check;
  for (size_t s = 0; s < adj.size(); ++s)
    if (live[s]) check.push(static_cast<int>(s));
  while (!check.empty()) {
    int s = check.front();
    check.pop();
    if (!live[s] || s == 0 || adj[s].size() > 1) continue;
    live[s] = false;
    if (!adj[s].empty()) {
      auto [key, e] = *adj[s].begin();
      int s0 = f.sfind(f.edges[e].src0), d0 = f.sfind(f.edges[e].dst0);
      int other = key > 0 ? d0 : s0;
      adj[s].clear();
      if (other != s) {
        auto it = adj[other].find(-key);
        if (it != adj[other].end() && f.efind(it->second) == f.efind(e)) adj[other].erase(it);
        check.push(other);
      }
    }
  }

  std::vector<int> id(adj.size(), -1);
  std::vector<int> order;
  id[0] = 0;
  order.push_back(0);
  for (size_t q = 0; q < order.size(); ++q) {
    int s = order[q];
    for (int letter = 1; letter <= f.rank; ++letter)
      for (int key : {letter, -letter}) {
        auto it = adj[s].find(key);
        if (it == adj[s].end()) continue;
        int e = it->second;
        int s0 = f.sfind(f.edges[e].src0), d0 = f.sfind(f.edges[e].dst0);
        int to = key > 0 ? d0 : s0;
        if (id[to] < 0) {
          id[to] = static_cast<int>(order.size());
          order.push_back(to);
        }
      }
  }

  size_t n = order.size();
  a.fwd.assign(n, std::vector<int>(f.rank, -1));
  a.bwd.assign(n, std::vector<int>(f.rank, -1));
  for (int s : order)
    for (auto [key, e] : adj[s]) {
      if (key < 0) continue;
      int d0 = f.sfind(f.edges[e].dst0);
      if (id[s] < 0 || id[d0] < 0) continue;
      a.fwd[id[s]][key - 1] = id[d0];
      a.bwd[id[d0]][key - 1] = id[s];
    }
  return a;
}

}  // namespace

BasisData extract_basis(const Automaton& a) {
  BasisData d;
  size_t n = a.num_states();
  d.path_from_base.assign(n, Word());
  d.basis_mark.assign(n, std::vector<int>(a.rank, 0));
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> in_tree(n, std::vector<bool>(a.rank, false));
  std::vector<std::vector<bool>> emitted(n, std::vector<bool>(a.rank, false));
  std::vector<int> order;
  seen[a.base] = true;
  order.push_back(a.base);
  for (size_t q = 0; q < order.size(); ++q) {
    int s = order[q];
    for (int letter = 1; letter <= a.rank; ++letter)
      for (int sgn : {+1, -1}) {
        int t = a.step(s, sgn * letter);
        if (t < 0) continue;
        int esrc = sgn > 0 ? s : t;  // positive orientation
        if (!seen[t]) {
          seen[t] = true;
          in_tree[esrc][letter - 1] = true;
          d.path_from_base[t] = d.path_from_base[s] * Word::letter(sgn * letter);
          order.push_back(t);
        } else if (!in_tree[esrc][letter - 1] && !emitted[esrc][letter - 1]) {
          emitted[esrc][letter - 1] = true;
          int edst = a.fwd[esrc][letter - 1];
          d.basis_words.push_back(d.path_from_base[esrc] * Word::letter(letter) *
                                  d.path_from_base[edst].inverse());
          d.basis_mark[esrc][letter - 1] = static_cast<int>(d.basis_words.size());
        }
      }
  }
  return d;
}

std::optional<Word> rewrite(const Automaton& a, const BasisData& data, const Word& w) {
  int s = a.base;
  std::vector<int> expr;
  for (int letter : w.letters()) {
    int t = a.step(s, letter);
    if (t < 0) return std::nullopt;
    int esrc = letter > 0 ? s : t;
    int mark = data.basis_mark[esrc][std::abs(letter) - 1];
    if (mark != 0) expr.push_back(letter > 0 ? mark : -mark);
    s = t;
  }
  if (s != a.base) return std::nullopt;
  return Word::reduce(expr);
}

FoldResult fold(std::span<const Word> generators, int rank, bool want_expressions) {
  Folder f;
  f.rank = rank;
  f.new_state();  // base = 0
  f.petals.assign(generators.size(), {});
  for (size_t i = 0; i < generators.size(); ++i) {
    const Word& w = generators[i];
    check_rank(w, rank);
    if (w.empty()) continue;
    int cur = 0;
    const auto& ls = w.letters();
    for (size_t p = 0; p < ls.size(); ++p) {
      int nxt = (p + 1 == ls.size()) ? 0 : f.new_state();
      int eid = static_cast<int>(f.edges.size());
      if (ls[p] > 0) {
        f.add_edge(cur, nxt, ls[p], static_cast<int>(i), static_cast<int>(p), +1);
      } else {
        f.add_edge(nxt, cur, -ls[p], static_cast<int>(i), static_cast<int>(p), -1);
      }
      f.petals[i].emplace_back(eid, ls[p] > 0 ? +1 : -1);
      cur = nxt;
    }
  }
  f.run();

  FoldResult out;
  out.autom = canonicalize(f);
  out.basis = extract_basis(out.autom);

  if (want_expressions) {
    out.generator_expressions.reserve(out.basis.basis_words.size());
    for (const Word& u : out.basis.basis_words) {
      // Walk u through the live folded graph, collecting the edge path.
      std::vector<std::pair<int, int>> path;
      int s = 0;
      for (int letter : u.letters()) {
        auto it = f.adj[s].find(letter);
        FTFA_CHECK(it != f.adj[s].end(), "basis word leaves the folded graph");
        int e = f.efind(it->second);
        path.emplace_back(e, letter > 0 ? +1 : -1);
        s = letter > 0 ? f.sfind(f.edges[e].dst0) : f.sfind(f.edges[e].src0);
      }
      FTFA_CHECK(s == 0, "basis word is not a loop at base");
      out.generator_expressions.push_back(f.decode(f.lift(std::move(path))));
    }
  }
  return out;
}

namespace {

Automaton product(const Automaton& x, const Automaton& y) {
  if (x.rank != y.rank) throw Error(errc::ambient_mismatch, "pullback rank mismatch");
  int rank = x.rank;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> order;
  auto get = [&](int p, int q) {
    auto [it, fresh] = id.try_emplace({p, q}, static_cast<int>(order.size()));
    if (fresh) order.emplace_back(p, q);
    return it->second;
  };
  get(x.base, y.base);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    auto [p, q] = order[qi];
    for (int a = 0; a < rank; ++a) {
      if (x.fwd[p][a] >= 0 && y.fwd[q][a] >= 0) get(x.fwd[p][a], y.fwd[q][a]);
      if (x.bwd[p][a] >= 0 && y.bwd[q][a] >= 0) get(x.bwd[p][a], y.bwd[q][a]);
    }
  }

  size_t n = order.size();
  std::vector<std::vector<int>> fwd(n, std::vector<int>(rank, -1));
  std::vector<std::vector<int>> bwd(n, std::vector<int>(rank, -1));
  for (size_t s = 0; s < n; ++s) {
    auto [p, q] = order[s];
    for (int a = 0; a < rank; ++a)
      if (x.fwd[p][a] >= 0 && y.fwd[q][a] >= 0) {
        auto it = id.find({x.fwd[p][a], y.fwd[q][a]});
        if (it != id.end()) {
          fwd[s][a] = it->second;
          bwd[it->second][a] = static_cast<int>(s);
        }
      }
  }

  // core + canonical relabel
  std::vector<bool> live(n, true);
  auto degree = [&](int s) {
    size_t d = 0;
    for (int a = 0; a < rank; ++a) {
      if (fwd[s][a] >= 0) ++d;
      if (bwd[s][a] >= 0) ++d;
    }
    return d;
  };
  std::queue<int> check;
  for (size_t s = 0; s < n; ++s) check.push(static_cast<int>(s));
  while (!check.empty()) {
    int s = check.front();
    check.pop();
    if (!live[s] || s == 0 || degree(s) > 1) continue;
    live[s] = false;
    for (int a = 0; a < rank; ++a) {
      if (fwd[s][a] >= 0) {
        bwd[fwd[s][a]][a] = -1;
        check.push(fwd[s][a]);
        fwd[s][a] = -1;
      }
      if (bwd[s][a] >= 0) {
        fwd[bwd[s][a]][a] = -1;
        check.push(bwd[s][a]);
        bwd[s][a] = -1;
      }
    }
  }

  Automaton out;
  out.rank = rank;
  std::vector<int> nid(n, -1);
  std::vector<int> norder;
  nid[0] = 0;
  norder.push_back(0);
  for (size_t qi = 0; qi < norder.size(); ++qi) {
    int s = norder[qi];
    for (int a = 0; a < rank; ++a)
      for (int t : {fwd[s][a], bwd[s][a]}) {
        if (t >= 0 && live[t] && nid[t] < 0) {
          nid[t] = static_cast<int>(norder.size());
          norder.push_back(t);
        }
      }
  }
  size_t nn = norder.size();
  out.fwd.assign(nn, std::vector<int>(rank, -1));
  out.bwd.assign(nn, std::vector<int>(rank, -1));
  for (int s : norder)
    for (int a = 0; a < rank; ++a)
      if (fwd[s][a] >= 0 && live[fwd[s][a]] && nid[fwd[s][a]] >= 0) {
        out.fwd[nid[s]][a] = nid[fwd[s][a]];
        out.bwd[nid[fwd[s][a]]][a] = nid[s];
      }
  return out;
}

}  // namespace

Automaton multi_pullback(std::span<const Automaton> as) {
  if (as.empty()) throw Error(errc::bad_input, "pullback of empty list");
  Automaton acc = as[0];
  for (size_t i = 1; i < as.size(); ++i) acc = product(acc, as[i]);
  return acc;
}

SchreierResult schreier_basis(std::span<const Word> ambient_basis,
                              const std::function<bool(const Word&)>& member,
                              size_t coset_cap) {
  int r = static_cast<int>(ambient_basis.size());
  SchreierResult out;
  out.reps.push_back(Word());
  std::vector<std::map<int, int>> edge;  // coset -> signed letter -> coset
  edge.emplace_back();
  std::vector<std::map<int, bool>> is_tree;
  is_tree.emplace_back();
  for (size_t c = 0; c < out.reps.size(); ++c) {
    for (int j = 1; j <= r; ++j)
      for (int sgn : {+1, -1}) {
        int key = sgn * j;
        if (edge[c].count(key)) continue;
        Word w = out.reps[c] * Word::letter(key);
        int target = -1;
        for (size_t c2 = 0; c2 < out.reps.size(); ++c2)
          if (member(w * out.reps[c2].inverse())) {
            target = static_cast<int>(c2);
            break;
          }
        bool fresh = target < 0;
        if (fresh) {
          if (out.reps.size() >= coset_cap)
            throw Error(errc::index_cap_exceeded,
                        "coset enumeration passed cap " + std::to_string(coset_cap));
          target = static_cast<int>(out.reps.size());
          out.reps.push_back(w);
          edge.emplace_back();
          is_tree.emplace_back();
        }
        edge[c][key] = target;
        edge[target][-key] = static_cast<int>(c);
        is_tree[c][key] = fresh;
        is_tree[target][-key] = fresh;
      }
  }

  // Maximal-tree basis: one positive-oriented word per non-tree edge.
  std::set<std::pair<int, int>> done;
  for (size_t c = 0; c < out.reps.size(); ++c)
    for (int j = 1; j <= r; ++j)
      for (int sgn : {+1, -1}) {
        int key = sgn * j;
        auto it = edge[c].find(key);
        if (it == edge[c].end() || is_tree[c][key]) continue;
        int src = sgn > 0 ? static_cast<int>(c) : it->second;
        if (!done.insert({src, j}).second) continue;
        int dst = edge[src][j];
        out.basis.push_back(out.reps[src] * Word::letter(j) * out.reps[dst].inverse());
      }

  out.table.assign(out.reps.size(), std::vector<int>(r, -1));
  for (size_t c = 0; c < out.reps.size(); ++c)
    for (int j = 1; j <= r; ++j) out.table[c][j - 1] = edge[c][j];
  return out;
}

size_t default_coset_cap() {
  if (const char* env = std::getenv("FTFA_COSET_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

}  // namespace ftfa
