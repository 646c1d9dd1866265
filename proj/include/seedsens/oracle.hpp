#ifndef SEEDSENS_ORACLE_HPP
#define SEEDSENS_ORACLE_HPP

#include <cstdint>

#include "seedsens/prob_transducer.hpp"
#include "seedsens/seed.hpp"

// Brute-force reference path: direct sliding-window matching over an
// exhaustive word enumeration, sharing no automaton code with the main
// sensitivity computation.
namespace seedsens::oracle {

// True iff some length-m factor of w is matched letterwise by the seed.
bool hits(const Seed& seed, const Word& w);

inline constexpr uint64_t kDefaultWordCap = uint64_t{1} << 24;

struct BruteForceResult {
  double numerator = 0.0;    // total probability of hit words
  double denominator = 0.0;  // total probability of all words of length n
  double sensitivity = 0.0;
};

BruteForceResult brute_force_details(const Seed& seed, int n,
                                     const ProbTransducer& g,
                                     uint64_t word_cap = kDefaultWordCap);

double brute_force_sensitivity(const Seed& seed, int n,
                               const ProbTransducer& g,
                               uint64_t word_cap = kDefaultWordCap);

}  // namespace seedsens::oracle

#endif
