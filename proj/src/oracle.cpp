#include "seedsens/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "seedsens/errors.hpp"

namespace seedsens::oracle {

bool hits(const Seed& seed, const Word& w) {
  const int m = seed.span();
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + m <= n; ++i) {
    bool match = true;
    for (int j = 0; j < m; ++j) {
      if (!seed.letter(j + 1).contains(w[i + j])) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

BruteForceResult brute_force_details(const Seed& seed, int n,
                                     const ProbTransducer& g,
                                     uint64_t word_cap) {
  if (seed.alphabet.alignment != g.alphabet())
    throw InputError("brute force: seed/model alphabet mismatch");
  if (n < 1) throw InputError("brute force: length must be at least 1");
  const int asz = g.alphabet().size();
  double word_count = std::pow(static_cast<double>(asz), n);
  if (word_count > static_cast<double>(word_cap))
    throw ResourceError("brute force: " + std::to_string(asz) + "^" +
                        std::to_string(n) + " words exceed cap " +
                        std::to_string(word_cap));

  const int gn = g.num_states();
  // Forward vector per prefix depth, extended one symbol at a time.
  std::vector<std::vector<double>> fwd(n + 1,
                                       std::vector<double>(gn, 0.0));
  fwd[0][g.initial()] = 1.0;
  Word w(n);
  BruteForceResult res;

  // Depth-first enumeration of all words of length n.
  std::vector<int> choice(n + 1, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) {
      double p = 0;
      for (double v : fwd[n]) p += v;
      res.denominator += p;
      if (p != 0.0 && hits(seed, w)) res.numerator += p;
      --depth;
      continue;
    }
    int a = choice[depth];
    if (a == asz) {
      choice[depth] = 0;
      --depth;
      continue;
    }
    choice[depth]++;
    w[depth] = static_cast<uint8_t>(a);
    auto& out = fwd[depth + 1];
    std::fill(out.begin(), out.end(), 0.0);
    for (int s = 0; s < gn; ++s) {
      double v = fwd[depth][s];
      if (v == 0.0) continue;
      for (const auto& t : g.row(s, a)) out[t.dst] += v * t.prob;
    }
    ++depth;
  }

  if (res.denominator <= 0.0)
    throw InputError("brute force: all words have zero probability");
  res.sensitivity = res.numerator / res.denominator;
  return res;
}

double brute_force_sensitivity(const Seed& seed, int n,
                               const ProbTransducer& g, uint64_t word_cap) {
  return brute_force_details(seed, n, g, word_cap).sensitivity;
}

}  // namespace seedsens::oracle
