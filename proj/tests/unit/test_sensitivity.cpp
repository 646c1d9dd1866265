#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "seedsens/errors.hpp"
#include "seedsens/oracle.hpp"
#include "seedsens/sensitivity.hpp"

using namespace seedsens;

namespace {

Word w(const AlignmentAlphabet& a, const std::string& text) {
  return word_from_string(a, text);
}

// Two-state recognizer of "contains a match symbol".
Dfa contains_match_dfa(const AlignmentAlphabet& a) {
  Dfa d;
  d.alphabet = a;
  d.num_states = 2;
  d.initial = 0;
  d.final_flags = {0, 1};
  d.delta.resize(2 * a.size());
  for (int c = 0; c < a.size(); ++c) {
    d.delta[c] = c == a.match_index ? 1 : 0;
    d.delta[a.size() + c] = 1;
  }
  return d;
}

}  // namespace

TEST_CASE("target_all_words shape and language") {
  AlignmentAlphabet bin = AlignmentAlphabet::binary();
  Dfa t2 = target_all_words(bin, 2);
  t2.check();
  CHECK(t2.num_states == 4);
  CHECK(accepts(t2, w(bin, "10")));
  CHECK_FALSE(accepts(t2, w(bin, "1")));
  CHECK_FALSE(accepts(t2, w(bin, "111")));

  Dfa t1 = target_all_words(bin, 1);
  CHECK(accepts(t1, w(bin, "0")));
  CHECK_FALSE(accepts(t1, {}));

  CHECK(target_all_words(AlignmentAlphabet::dna_ternary(), 64).num_states ==
        66);
  CHECK_THROWS_AS(target_all_words(bin, 0), InputError);
}

TEST_CASE("target_horizon measures the longest accepted word") {
  AlignmentAlphabet bin = AlignmentAlphabet::binary();
  CHECK(target_horizon(target_all_words(bin, 7)) == 7);

  // Accepts words of length 1 or 3.
  Dfa t;
  t.alphabet = bin;
  t.num_states = 5;  // 0 -> 1(final) -> 2 -> 3(final) -> sink 4
  t.initial = 0;
  t.final_flags = {0, 1, 0, 1, 0};
  t.delta = {1, 1, 2, 2, 3, 3, 4, 4, 4, 4};
  CHECK(target_horizon(t) == 3);

  // A live cycle is rejected.
  Dfa cyc = contains_match_dfa(bin);
  CHECK_THROWS_AS(target_horizon(cyc), InputError);
}

TEST_CASE("pw_product pairs states and copies weights") {
  AlignmentAlphabet bin = AlignmentAlphabet::binary();
  ProbTransducer b = fixtures::bern_binary();
  PwAutomaton pw = pw_product(contains_match_dfa(bin), b);
  CHECK(pw.num_states == 2);
  for (int s = 0; s < pw.num_states; ++s) {
    double sum = 0;
    for (int64_t j = pw.row_offset[s]; j < pw.row_offset[s + 1]; ++j)
      sum += pw.transitions[j].prob;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  // |Q_W| is bounded by |Q_K| * |Q_G|.
  PwAutomaton pw2 = pw_product(target_all_words(bin, 3),
                               fixtures::nondet2_binary());
  CHECK(pw2.num_states <= 5 * 2);

  CHECK_THROWS_AS(
      pw_product(contains_match_dfa(AlignmentAlphabet::dna_ternary()), b),
      InputError);
}

TEST_CASE("path_weight_dp on fixed-length products") {
  SeedAlphabet sa = SeedAlphabet::spaced();
  const AlignmentAlphabet& bin = sa.alignment;
  ProbTransducer b = fixtures::bern_binary();

  // All words of length 2: total mass 1.
  Dfa k0 = with_absorbing_finals(target_all_words(bin, 2));
  CHECK(path_weight_dp(pw_product(k0, b), 2) == doctest::Approx(1.0));

  // Length 2 and contains "11": only word 11.
  Dfa k1 = with_absorbing_finals(product_intersection(
      target_all_words(bin, 2),
      build_spi_automaton(parse_seed("##", sa))));
  CHECK(path_weight_dp(pw_product(k1, b), 2) == doctest::Approx(0.49));

  // Length 4 and hit by "#_#": brute-forced mass 0.7399.
  Dfa k2 = with_absorbing_finals(product_intersection(
      target_all_words(bin, 4),
      build_spi_automaton(parse_seed("#_#", sa))));
  DpStats stats;
  double mass = path_weight_dp(pw_product(k2, b), 4, &stats);
  CHECK(mass == doctest::Approx(0.7399).epsilon(1e-12));
  CHECK(stats.steps == 4);
  CHECK(stats.max_mass_drift <= 1e-9);
  CHECK(stats.final_mass + stats.live_mass + stats.dead_mass ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Absorbing finals freeze mass: extra steps change nothing.
  CHECK(path_weight_dp(pw_product(k2, b), 9) ==
        doctest::Approx(mass).epsilon(1e-12));

  CHECK_THROWS_AS(path_weight_dp(pw_product(k2, b), 0), InputError);
}

TEST_CASE("pw mass reaching finals equals the language probability") {
  SeedAlphabet sa = SeedAlphabet::spaced();
  const AlignmentAlphabet& bin = sa.alignment;
  Dfa k = with_absorbing_finals(product_intersection(
      target_all_words(bin, 3), build_spi_automaton(parse_seed("##", sa))));
  double mass = path_weight_dp(pw_product(k, fixtures::bern_binary()), 3);
  CHECK(mass == doctest::Approx(0.637).epsilon(1e-12));  // 111+110+011
}

TEST_CASE("compute_sensitivity frozen examples") {
  SeedAlphabet sa = SeedAlphabet::spaced();
  ProbTransducer b = fixtures::bern_binary();

  SensitivityResult r1 = compute_sensitivity(parse_seed("#", sa), 2, b);
  CHECK(r1.sensitivity == doctest::Approx(0.91).epsilon(1e-12));

  SensitivityResult r2 = compute_sensitivity(parse_seed("##", sa), 3, b);
  CHECK(r2.sensitivity == doctest::Approx(0.637).epsilon(1e-12));

  SensitivityResult r3 = compute_sensitivity(parse_seed("#_#", sa), 4, b);
  CHECK(r3.sensitivity == doctest::Approx(0.7399).epsilon(1e-12));
  CHECK(r3.p_joint <= r3.p_target + 1e-9);
  CHECK(r3.p_target == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r3.diag.target_states == 6);
  CHECK(r3.diag.spi_states == 5);
  CHECK(r3.diag.steps == 4);
  CHECK(r3.diag.k_states > 0);
  CHECK(r3.diag.w_states > 0);
}

TEST_CASE("compute_sensitivity rejects a zero-probability target") {
  SeedAlphabet sa = SeedAlphabet::spaced();
  const AlignmentAlphabet& bin = sa.alignment;
  Dfa dead;  // complete automaton accepting nothing
  dead.alphabet = bin;
  dead.num_states = 1;
  dead.initial = 0;
  dead.final_flags = {0};
  dead.delta = {0, 0};
  CHECK_THROWS_WITH_AS(
      compute_sensitivity(parse_seed("#", sa), dead, fixtures::bern_binary()),
      "target language has zero probability", InputError);
}

TEST_CASE("compute_sensitivity agrees with the brute-force oracle") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  std::vector<ProbTransducer> bmodels = {fixtures::bern_binary(),
                                         fixtures::markov1_binary(),
                                         fixtures::nondet2_binary()};
  for (const auto& text : fixtures::spaced_corpus(5)) {
    Seed seed = parse_seed(text, bin);
    for (const auto& g : bmodels)
      for (int n : {4, 7})
        CHECK(compute_sensitivity(seed, n, g).sensitivity ==
              doctest::Approx(oracle::brute_force_sensitivity(seed, n, g))
                  .epsilon(1e-9));
  }
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  std::vector<ProbTransducer> tmodels = {fixtures::bern_ternary(),
                                         fixtures::markov1_ternary(),
                                         fixtures::nondet2_ternary()};
  for (const auto& text : fixtures::subset_sample(25, 5)) {
    Seed seed = parse_seed(text, dna);
    for (const auto& g : tmodels)
      for (int n : {4, 7})
        CHECK(compute_sensitivity(seed, n, g).sensitivity ==
              doctest::Approx(oracle::brute_force_sensitivity(seed, n, g))
                  .epsilon(1e-9));
  }
}

TEST_CASE("sensitivity is monotone in target length") {
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  ProbTransducer g = fixtures::markov1_ternary();
  for (const char* text : {"##", "#@#", "#_#@#"}) {
    Seed seed = parse_seed(text, dna);
    double prev = 0;
    for (int n = 4; n <= 12; ++n) {
      double s = compute_sensitivity(seed, n, g).sensitivity;
      CHECK(s >= prev - 1e-12);
      prev = s;
    }
  }
}

TEST_CASE("sensitivity is monotone under letter widening") {
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  ProbTransducer g = fixtures::bern_ternary();
  const int n = 10;
  double narrow =
      compute_sensitivity(parse_seed("###", dna), n, g).sensitivity;
  double mid = compute_sensitivity(parse_seed("#@#", dna), n, g).sensitivity;
  double wide = compute_sensitivity(parse_seed("#_#", dna), n, g).sensitivity;
  CHECK(mid >= narrow - 1e-12);
  CHECK(wide >= mid - 1e-12);
}

TEST_CASE("alphabet mismatches are input errors") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  CHECK_THROWS_AS(compute_sensitivity(parse_seed("#", bin), 4,
                                      fixtures::bern_ternary()),
                  InputError);
}
