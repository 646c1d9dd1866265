#ifndef SEEDSENS_DFA_HPP
#define SEEDSENS_DFA_HPP

#include <string>
#include <vector>

#include "seedsens/alphabet.hpp"

namespace seedsens {

// Complete deterministic automaton over an alignment alphabet.  The
// transition table is dense, state-major / symbol-minor.  The same shape
// houses target automata, seed automata and their products.
struct Dfa {
  AlignmentAlphabet alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<uint8_t> final_flags;  // one flag per state
  std::vector<int32_t> delta;        // num_states * alphabet.size() entries

  int next(int state, int symbol) const {
    return delta[static_cast<size_t>(state) * alphabet.size() + symbol];
  }
  bool is_final(int state) const { return final_flags[state] != 0; }
  std::vector<int> final_ids() const;

  // Structural invariants: completeness, in-range targets, initial/finals.
  // Throws InputError on violation.
  void check() const;
};

bool accepts(const Dfa& d, const Word& w);

// Complete DFA for L(a) ∩ L(b); only pairs reachable from the initial
// pair are materialized, numbered in breadth-first discovery order.
Dfa product_intersection(const Dfa& a, const Dfa& b);

// Canonical minimal complete DFA: unreachable states pruned, then
// partition refinement; states renumbered breadth-first from the initial.
Dfa minimize(const Dfa& d);

// Language equality via a product walk over reachable state pairs.
bool equivalent(const Dfa& a, const Dfa& b);

// Complete DFA recognizing all words containing some pattern as a factor.
// All accepting states are merged into one absorbing final state.
Dfa aho_corasick_hit_dfa(const AlignmentAlphabet& alpha,
                         const std::vector<Word>& patterns);

// Copy of d with every final state turned into a sink (self-loops).
Dfa with_absorbing_finals(const Dfa& d);

// Text dump: "states N" / "initial I" / "finals i j k" headers followed by
// one "src symbol dst" line per transition.
std::string dump_dfa(const Dfa& d);

}  // namespace seedsens

#endif
