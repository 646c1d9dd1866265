#ifndef SEEDSENS_TEST_FIXTURES_HPP
#define SEEDSENS_TEST_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "seedsens/prob_transducer.hpp"
#include "seedsens/seed.hpp"

// Shared models and seed corpora for the unit and acceptance suites.
namespace fixtures {

using namespace seedsens;

inline ProbTransducer bern_binary() {
  return bernoulli(AlignmentAlphabet::binary(), {0.7, 0.3});
}

inline ProbTransducer bern_ternary() {
  return bernoulli(AlignmentAlphabet::dna_ternary(), {0.7, 0.2, 0.1});
}

// Order-1 chain over {1,0}: p(1|1)=0.8, p(1|0)=0.5, startup p(1)=0.7.
inline ProbTransducer markov1_binary() {
  AlignmentAlphabet a = AlignmentAlphabet::binary();
  std::vector<MarkovRow> rows = {
      {{}, {0.7, 0.3}},
      {{0}, {0.8, 0.2}},
      {{1}, {0.5, 0.5}},
  };
  return markov(a, 1, rows);
}

// Transition mass stays above transversion mass in every context.
inline ProbTransducer markov1_ternary() {
  AlignmentAlphabet a = AlignmentAlphabet::dna_ternary();
  std::vector<MarkovRow> rows = {
      {{}, {0.7, 0.2, 0.1}},
      {{0}, {0.75, 0.15, 0.1}},
      {{1}, {0.6, 0.3, 0.1}},
      {{2}, {0.55, 0.25, 0.2}},
  };
  return markov(a, 1, rows);
}

// Two states, two distinct paths labeled "10" with probabilities
// 0.2*0.3 = 0.06 and 0.5*0.08 = 0.04.
inline ProbTransducer nondet2_binary() {
  AlignmentAlphabet a = AlignmentAlphabet::binary();
  std::vector<ProbTransition> ts = {
      {0, 0, 0, 0.2}, {0, 0, 1, 0.5}, {0, 1, 0, 0.3},
      {1, 1, 1, 0.08}, {1, 0, 1, 0.92},
  };
  return ProbTransducer(a, 2, 0, std::move(ts));
}

// Two states over {1,h,0}; transition mass exceeds transversion mass in
// every state.
inline ProbTransducer nondet2_ternary() {
  AlignmentAlphabet a = AlignmentAlphabet::dna_ternary();
  std::vector<ProbTransition> ts = {
      {0, 0, 0, 0.5},  {0, 0, 1, 0.2},  {0, 1, 0, 0.2},  {0, 2, 0, 0.1},
      {1, 0, 1, 0.55}, {1, 1, 1, 0.25}, {1, 1, 0, 0.05}, {1, 2, 1, 0.15},
  };
  return ProbTransducer(a, 2, 0, std::move(ts));
}

// Eight states over {1,h,0}, nondeterministic (two destinations per
// symbol), transition mass above transversion mass everywhere.
inline ProbTransducer nt8_ternary() {
  AlignmentAlphabet a = AlignmentAlphabet::dna_ternary();
  std::vector<ProbTransition> ts;
  for (int s = 0; s < 8; ++s) {
    double p1 = 0.55 + 0.02 * s;
    double ph = 0.30 - 0.015 * s;
    double p0 = 1.0 - p1 - ph;
    double probs[3] = {p1, ph, p0};
    for (int c = 0; c < 3; ++c) {
      double stay = probs[c] * 0.6;
      ts.push_back({s, static_cast<uint8_t>(c), s, stay});
      ts.push_back({s, static_cast<uint8_t>(c), (s + 1) % 8,
                    probs[c] - stay});
    }
  }
  return ProbTransducer(a, 8, 0, std::move(ts));
}

// Every glyph string over `glyphs` of span 1..max_span whose first and
// last characters are '#'.
inline std::vector<std::string> anchored_strings(const std::string& glyphs,
                                                 int max_span) {
  std::vector<std::string> out;
  std::vector<std::string> frontier{""};
  for (int span = 1; span <= max_span; ++span) {
    std::vector<std::string> next;
    for (const auto& prefix : frontier)
      for (char g : glyphs) next.push_back(prefix + g);
    frontier = next;
    for (const auto& s : frontier)
      if (s.front() == '#' && s.back() == '#')
        out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The criterion-1 corpus: all anchored binary spaced seeds of span <= 7.
inline std::vector<std::string> spaced_corpus(int max_span = 7) {
  return anchored_strings("#_", max_span);
}

// Deterministic sample of anchored ternary subset seeds of span <= 7.
inline std::vector<std::string> subset_sample(size_t count = 120,
                                              int max_span = 7,
                                              uint32_t rng_seed = 12345) {
  std::vector<std::string> all = anchored_strings("#@_", max_span);
  std::mt19937 rng(rng_seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace fixtures

#endif
