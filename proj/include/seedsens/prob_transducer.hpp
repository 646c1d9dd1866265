#ifndef SEEDSENS_PROB_TRANSDUCER_HPP
#define SEEDSENS_PROB_TRANSDUCER_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "seedsens/alphabet.hpp"

namespace seedsens {

struct ProbTransition {
  int32_t src = 0;
  uint8_t symbol = 0;
  int32_t dst = 0;
  double prob = 0.0;
};

// Probability transducer: a finite automaton without final states whose
// transitions carry probabilities summing to 1 per source state.  Only
// positive-probability transitions are stored.  Immutable once built.
class ProbTransducer {
public:
  ProbTransducer() = default;
  ProbTransducer(AlignmentAlphabet alphabet, int num_states, int initial,
                 std::vector<ProbTransition> transitions);

  const AlignmentAlphabet& alphabet() const { return alphabet_; }
  int num_states() const { return num_states_; }
  int initial() const { return initial_; }
  const std::vector<ProbTransition>& transitions() const {
    return transitions_;
  }

  // Transitions out of `state` labeled `symbol`.
  std::span<const ProbTransition> row(int state, int symbol) const;

  // True when no (state, symbol) pair has more than one transition.
  bool deterministic() const;

private:
  AlignmentAlphabet alphabet_;
  int num_states_ = 0;
  int initial_ = 0;
  std::vector<ProbTransition> transitions_;  // sorted by (src, symbol, dst)
  std::vector<int64_t> offsets_;             // CSR over (state, symbol)
};

struct Diagnostics {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Checks stochasticity (row sums = 1 within 1e-9), probability ranges and
// duplicate transitions.  Problems are reported, not thrown.
Diagnostics validate(const ProbTransducer& g);

inline constexpr double kRowSumTolerance = 1e-9;

// One-state transducer with per-symbol probabilities (zero entries omitted).
ProbTransducer bernoulli(const AlignmentAlphabet& alpha,
                         const std::vector<double>& probs);

struct MarkovRow {
  Word context;               // length <= order
  std::vector<double> probs;  // per symbol, must sum to 1
};

// Order-k Markov chain as a deterministic transducer whose states are
// contexts of length <= k.  Rows for contexts shorter than k serve the
// first k positions; a missing reachable context is an input error.
ProbTransducer markov(const AlignmentAlphabet& alpha, int order,
                      const std::vector<MarkovRow>& rows);

// Probability of a word: total probability of all initial paths with that
// label (forward vector); 0 when no path exists, 1 for the empty word.
double word_probability(const ProbTransducer& g, const Word& w);

// Sum of word_probability over a finite set of words.
double language_probability(const ProbTransducer& g,
                            const std::vector<Word>& words);

// Line-oriented model file: "alphabet", "match", "states", "initial"
// headers and one "trans src symbol dst prob" line per transition;
// '#' starts a comment.  The loader validates and rejects bad files.
ProbTransducer load_model(std::istream& in);
ProbTransducer load_model_file(const std::string& path);
std::string format_model(const ProbTransducer& g);

}  // namespace seedsens

#endif
