#ifndef SEEDSENS_DESIGN_HPP
#define SEEDSENS_DESIGN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "seedsens/sensitivity.hpp"

namespace seedsens {

enum class SeedMode { spaced, subset };

// Enumeration universe for seed design and automaton statistics.
struct EnumSpec {
  SeedMode mode = SeedMode::spaced;
  double weight = 0.0;  // design weight target (1 per '#', 0.5 per '@')
  int max_span = 0;
  int at_count = 0;  // exact number of '@' letters (subset mode)
  // First and last letter must carry weight ('#' or '@', never '_');
  // for spaced seeds this is the usual '#'-at-both-ends convention.
  bool anchored = true;
};

// All seed glyph strings meeting the spec, in lexicographic order;
// an infeasible spec yields an empty sequence.
std::vector<std::string> enumerate_seed_strings(const EnumSpec& spec,
                                                const SeedAlphabet& alphabet);
std::vector<Seed> enumerate_seeds(const EnumSpec& spec,
                                  const SeedAlphabet& alphabet);

struct SeedScore {
  std::string glyphs;
  double sensitivity = 0.0;
  std::string model_id;
  int target_length = 0;
};

struct DesignResult {
  std::vector<SeedScore> top;  // best first; ties broken by glyph string
  size_t num_candidates = 0;
};

// Exhaustive best-seed search; deterministic regardless of `jobs`.
DesignResult best_seed(const EnumSpec& spec, const SeedAlphabet& alphabet,
                       const ProbTransducer& g, int n, int top_k = 1,
                       int jobs = 1, const std::string& model_id = {});

struct StatsRow {
  double weight = 0.0;
  size_t num_seeds = 0;
  double ac_avg = 0.0;
  double spi_avg = 0.0;
  double min_avg = 0.0;
  double ac_delta = 0.0;   // ac_avg / min_avg
  double spi_delta = 0.0;  // spi_avg / min_avg
};

// Average state counts of the Aho-Corasick automaton, the seed automaton
// and the minimized automaton over the enumerated seeds.
StatsRow automaton_stats(const EnumSpec& spec, const SeedAlphabet& alphabet,
                         int jobs = 1);

}  // namespace seedsens

#endif
