#ifndef FTFA_STALLINGS_HPP_
#define FTFA_STALLINGS_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ftfa/words.hpp"

namespace ftfa {

// Folded, cored, base-pointed automaton over letters 1..rank, in canonical
// form: states numbered by BFS discovery from the base (scanning +1,-1,+2,...)
// so that equal subgroups yield structurally equal automata.
struct Automaton {
  int rank = 0;
  int base = 0;
  std::vector<std::vector<int>> fwd;  // fwd[s][a-1]: target of s --a-->, or -1
  std::vector<std::vector<int>> bwd;  // bwd[s][a-1]: source of --a--> s, or -1

  size_t num_states() const noexcept { return fwd.size(); }
  size_t num_edges() const;
  size_t cycle_rank() const;  // |E| - |V| + 1 on the cored graph

  // Signed-letter step; -1 when no transition.
  int step(int state, int letter) const;
  bool accepts(const Word& w) const;

  bool operator==(const Automaton&) const = default;
};

// Spanning-tree data for rewriting over the automaton's free basis.
struct BasisData {
  std::vector<Word> basis_words;        // positive-oriented non-tree loops
  std::vector<Word> path_from_base;     // per state, tree word base -> state
  std::vector<std::vector<int>> basis_mark;  // [src][a-1]: basis index+1 or 0
};

BasisData extract_basis(const Automaton& a);

// Expression of w over the basis symbols, or nullopt when the walk of w fails
// or ends off base. substitute(result, basis_words) == w.
std::optional<Word> rewrite(const Automaton& a, const BasisData& data, const Word& w);

struct FoldResult {
  Automaton autom;
  BasisData basis;
  // basis word j as a word over the input-generator symbols; filled when
  // requested, substitute(expr[j], generators) == basis_words[j].
  std::vector<Word> generator_expressions;
};

// Stallings construction: fold the flower of the given generators (empty
// words ignored) and core the result. With want_expressions, the elementary
// fold sequence is replayed backwards to lift each basis loop to the flower,
// where it decomposes into petals, i.e. into a word over the generators.
FoldResult fold(std::span<const Word> generators, int rank, bool want_expressions = false);

// Accepts exactly the intersection of the inputs: iterated pairwise product
// restricted to the base component, cored and canonicalized.
Automaton multi_pullback(std::span<const Automaton> as);

struct SchreierResult {
  std::vector<Word> reps;                // coset representatives, reps[0] = 1
  std::vector<std::vector<int>> table;   // table[c][j-1]: coset of reps[c]*v_j
  std::vector<Word> basis;               // maximal-tree basis over v-symbols
};

// Coset graph of the finite-index subgroup {w : member(w)} of the free group
// on ambient_basis, enumerated BFS with representatives shortest in the
// letter order. Throws INDEX_CAP_EXCEEDED past coset_cap states.
SchreierResult schreier_basis(std::span<const Word> ambient_basis,
                              const std::function<bool(const Word&)>& member,
                              size_t coset_cap);

size_t default_coset_cap();  // FTFA_COSET_CAP override, else 10^6

}  // namespace ftfa

#endif
