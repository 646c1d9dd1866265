#include "seedsens/design.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "seedsens/errors.hpp"

namespace seedsens {

namespace {

bool near_integer(double v, long long& out) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9) return false;
  out = static_cast<long long>(r);
  return true;
}

// Glyph candidates per mode, in ASCII (= lexicographic) order.
constexpr char kSpacedGlyphs[] = {'#', '_'};
constexpr char kSubsetGlyphs[] = {'#', '@', '_'};

void check_spec(const EnumSpec& spec, const SeedAlphabet& alphabet) {
  if (spec.weight < 1.0)
    throw InputError("seed enumeration: weight target must be at least 1");
  if (spec.max_span < 1)
    throw InputError("seed enumeration: max span must be at least 1");
  if (spec.at_count < 0)
    throw InputError("seed enumeration: '@' count must be nonnegative");
  const char* glyphs = spec.mode == SeedMode::spaced ? "#_" : "#@_";
  for (const char* p = glyphs; *p != 0; ++p)
    if (alphabet.index_of(*p) < 0)
      throw InputError(std::string("seed enumeration: seed alphabet lacks "
                                   "letter '") +
                       *p + "'");
}

// Emits, in lexicographic order, all strings of length `span` over the
// mode's glyphs with the given number of '#' and '@' letters.  Anchoring
// requires the first and last letters to carry weight (no '_' at either
// end); for spaced seeds that is the usual '#'-at-both-ends convention.
void emit_span(SeedMode mode, int span, int sharps, int ats, bool anchored,
               std::string& buf, std::vector<std::string>& out) {
  const int pos = static_cast<int>(buf.size());
  if (pos == span) {
    if (sharps == 0 && ats == 0) out.push_back(buf);
    return;
  }
  const int rest = span - pos - 1;
  const bool at_edge = anchored && (pos == 0 || pos == span - 1);
  // The final position still needs a weight-carrying letter.
  const int reserved = (anchored && pos < span - 1) ? 1 : 0;

  auto try_glyph = [&](char glyph, int need_sharps, int need_ats) {
    if (need_sharps < 0 || need_ats < 0) return;
    if (need_sharps + need_ats < reserved) return;
    if (need_sharps + need_ats > rest) return;
    buf.push_back(glyph);
    emit_span(mode, span, need_sharps, need_ats, anchored, buf, out);
    buf.pop_back();
  };

  try_glyph('#', sharps - 1, ats);
  if (mode == SeedMode::subset) try_glyph('@', sharps, ats - 1);
  if (!at_edge) try_glyph('_', sharps, ats);
}

}  // namespace

std::vector<std::string> enumerate_seed_strings(const EnumSpec& spec,
                                                const SeedAlphabet& alphabet) {
  check_spec(spec, alphabet);

  const int ats = spec.mode == SeedMode::subset ? spec.at_count : 0;
  // Design weight in half units keeps the arithmetic exact.
  long long weight2;
  if (!near_integer(spec.weight * 2.0, weight2)) return {};
  long long sharps2 = weight2 - ats;  // '#' count in half units
  if (sharps2 < 0 || sharps2 % 2 != 0) return {};
  const int sharps = static_cast<int>(sharps2 / 2);

  std::vector<std::string> out;
  std::string buf;
  for (int span = sharps + ats; span <= spec.max_span; ++span)
    emit_span(spec.mode, span, sharps, ats, spec.anchored, buf, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Seed> enumerate_seeds(const EnumSpec& spec,
                                  const SeedAlphabet& alphabet) {
  std::vector<Seed> seeds;
  for (const auto& s : enumerate_seed_strings(spec, alphabet))
    seeds.push_back(parse_seed(s, alphabet));
  return seeds;
}

namespace {

// Deterministic parallel map: workers claim indices from a shared counter
// and write into preallocated slots.
template <typename Fn>
void parallel_for_each(size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> cursor{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (;;) {
        size_t i = cursor.fetch_add(1);
        if (i >= count || failed.load()) break;
        fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace

DesignResult best_seed(const EnumSpec& spec, const SeedAlphabet& alphabet,
                       const ProbTransducer& g, int n, int top_k, int jobs,
                       const std::string& model_id) {
  if (top_k < 1) throw InputError("best_seed: top_k must be at least 1");
  std::vector<std::string> strings = enumerate_seed_strings(spec, alphabet);
  if (strings.empty())
    throw InputError("best_seed: seed enumeration is empty (infeasible "
                     "specification)");

  Dfa target = target_all_words(alphabet.alignment, n);
  std::vector<double> scores(strings.size(), 0.0);
  parallel_for_each(strings.size(), jobs, [&](size_t i) {
    Seed seed = parse_seed(strings[i], alphabet);
    scores[i] = compute_sensitivity(seed, target, g).sensitivity;
  });

  // Enumeration order is lexicographic, so index order breaks ties.
  std::vector<size_t> idx(strings.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });

  DesignResult res;
  res.num_candidates = strings.size();
  const size_t take = std::min(static_cast<size_t>(top_k), strings.size());
  for (size_t i = 0; i < take; ++i)
    res.top.push_back({strings[idx[i]], scores[idx[i]], model_id, n});
  return res;
}

StatsRow automaton_stats(const EnumSpec& spec, const SeedAlphabet& alphabet,
                         int jobs) {
  std::vector<std::string> strings = enumerate_seed_strings(spec, alphabet);
  StatsRow row;
  row.weight = spec.weight;
  row.num_seeds = strings.size();
  if (strings.empty()) return row;

  std::vector<int32_t> ac_states(strings.size()), spi_states(strings.size()),
      min_states(strings.size());
  parallel_for_each(strings.size(), jobs, [&](size_t i) {
    Seed seed = parse_seed(strings[i], alphabet);
    Dfa spi = build_spi_automaton(seed);
    Dfa ac = aho_corasick_hit_dfa(alphabet.alignment,
                                  matched_fragments(seed));
    Dfa minimized = minimize(spi);
    long long bound = static_cast<long long>(seed.w_count() + 1)
                      << seed.r();
    if (minimized.num_states > spi.num_states ||
        spi.num_states > ac.num_states || spi.num_states > bound)
      throw std::logic_error("automaton_stats: state count ordering "
                             "violated for seed " + strings[i]);
    ac_states[i] = ac.num_states;
    spi_states[i] = spi.num_states;
    min_states[i] = minimized.num_states;
  });

  long long ac_sum = 0, spi_sum = 0, min_sum = 0;
  for (size_t i = 0; i < strings.size(); ++i) {
    ac_sum += ac_states[i];
    spi_sum += spi_states[i];
    min_sum += min_states[i];
  }
  const double count = static_cast<double>(strings.size());
  row.ac_avg = ac_sum / count;
  row.spi_avg = spi_sum / count;
  row.min_avg = min_sum / count;
  row.ac_delta = row.ac_avg / row.min_avg;
  row.spi_delta = row.spi_avg / row.min_avg;
  return row;
}

}  // namespace seedsens
