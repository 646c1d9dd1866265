#ifndef SEEDSENS_SENSITIVITY_HPP
#define SEEDSENS_SENSITIVITY_HPP

#include "seedsens/prob_transducer.hpp"
#include "seedsens/seed.hpp"

namespace seedsens {

struct PwState {
  int32_t k = 0;  // DFA state
  int32_t g = 0;  // transducer state
};

struct PwTransition {
  uint8_t symbol = 0;
  int32_t dst = 0;
  double prob = 0.0;
};

// Probability-weighted product of a complete DFA and a transducer.  Only
// pairs reachable from (K.initial, G.initial) are materialized; a pair is
// final iff its DFA component is final.  Transitions are CSR-grouped by
// source state.
struct PwAutomaton {
  int num_states = 0;
  int initial = 0;
  std::vector<PwState> states;
  std::vector<uint8_t> final_flags;
  std::vector<PwTransition> transitions;
  std::vector<int64_t> row_offset;  // num_states + 1 entries

  bool is_final(int s) const { return final_flags[s] != 0; }
};

// DFA accepting exactly the |A|^n words of length n: levels 0..n plus an
// absorbing reject sink (n + 2 states).
Dfa target_all_words(const AlignmentAlphabet& alpha, int n);

// Length of the longest accepted word.  Throws InputError when the live
// part (reachable and co-reachable states) contains a cycle; returns 0
// when the language is empty or {empty word}.
int target_horizon(const Dfa& target);

PwAutomaton pw_product(const Dfa& k, const ProbTransducer& g);

struct DpStats {
  int steps = 0;
  double final_mass = 0.0;
  double live_mass = 0.0;
  double dead_mass = 0.0;       // mass in states that can no longer hit
  double max_mass_drift = 0.0;  // per-step |1 - (final + live + dead)|
};

// Level-synchronous forward pass: unit mass starts at the initial state
// and advances one symbol step at a time; mass entering a final state is
// frozen and accumulated into the result, so no path is counted twice.
// Returns the accumulated final mass after `horizon` steps.
double path_weight_dp(const PwAutomaton& w, int horizon,
                      DpStats* stats = nullptr);

struct SensitivityResult {
  double p_joint = 0.0;
  double p_target = 0.0;
  double sensitivity = 0.0;
  struct {
    int target_states = 0;
    int spi_states = 0;
    int k_states = 0;
    int w_states = 0;
    int steps = 0;
  } diag;
};

// Probability that a target alignment contains a seed hit: builds S_pi,
// K = target ∩ S_pi, and runs the forward DP on the weighted products for
// numerator and denominator.  The target must be acyclic apart from its
// reject sink.
SensitivityResult compute_sensitivity(const Seed& seed, const Dfa& target,
                                      const ProbTransducer& g);

// Convenience form for the all-words-of-length-n target; verifies the
// denominator is close to 1.
SensitivityResult compute_sensitivity(const Seed& seed, int n,
                                      const ProbTransducer& g);

}  // namespace seedsens

#endif
