#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "seedsens/errors.hpp"
#include "seedsens/oracle.hpp"

using namespace seedsens;

namespace {

Word w(const AlignmentAlphabet& a, const std::string& text) {
  return word_from_string(a, text);
}

}  // namespace

TEST_CASE("hits is a sliding-window subset test") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  const AlignmentAlphabet& a = bin.alignment;
  Seed gap = parse_seed("#_#", bin);
  CHECK(oracle::hits(gap, w(a, "0101")));  // factor 101
  CHECK_FALSE(oracle::hits(parse_seed("##", bin), w(a, "1010")));

  SeedAlphabet dna = SeedAlphabet::dna_subset();
  Seed sub = parse_seed("#@#", dna);
  CHECK(oracle::hits(sub, w(dna.alignment, "1h1")));
  CHECK_FALSE(oracle::hits(sub, w(dna.alignment, "101")));  // 0 not in '@'

  // Window shorter than the seed never hits.
  CHECK_FALSE(oracle::hits(gap, w(a, "11")));
}

TEST_CASE("hits agrees with the seed automaton exhaustively") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  const AlignmentAlphabet& a = bin.alignment;
  std::vector<Seed> seeds;
  for (const auto& text : fixtures::spaced_corpus(4))
    seeds.push_back(parse_seed(text, bin));
  seeds.push_back(parse_seed("_#", bin));
  seeds.push_back(parse_seed("#__", bin));
  for (const Seed& seed : seeds) {
    Dfa spi = build_spi_automaton(seed);
    Word word;
    for (int len = 0; len <= 8; ++len) {
      word.assign(len, 0);
      for (;;) {
        CHECK(oracle::hits(seed, word) == accepts(spi, word));
        int i = len - 1;
        while (i >= 0 && word[i] + 1 == 2) word[i--] = 0;
        if (i < 0) break;
        word[i]++;
      }
    }
  }
}

TEST_CASE("brute force frozen examples") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  ProbTransducer b = fixtures::bern_binary();
  CHECK(oracle::brute_force_sensitivity(parse_seed("#", bin), 2, b) ==
        doctest::Approx(0.91).epsilon(1e-12));
  CHECK(oracle::brute_force_sensitivity(parse_seed("##", bin), 3, b) ==
        doctest::Approx(0.637).epsilon(1e-12));
  CHECK(oracle::brute_force_sensitivity(parse_seed("#_#", bin), 4, b) ==
        doctest::Approx(0.7399).epsilon(1e-12));
}

TEST_CASE("brute force denominator is 1 for stochastic models") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  Seed seed = parse_seed("##", bin);
  for (const ProbTransducer& g :
       {fixtures::bern_binary(), fixtures::markov1_binary(),
        fixtures::nondet2_binary()}) {
    oracle::BruteForceResult r = oracle::brute_force_details(seed, 9, g);
    CHECK(r.denominator == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.numerator <= r.denominator + 1e-12);
  }
}

TEST_CASE("brute force enforces the word cap") {
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  Seed seed = parse_seed("##", dna);
  ProbTransducer g = fixtures::bern_ternary();
  CHECK_THROWS_AS(oracle::brute_force_sensitivity(seed, 20, g),
                  ResourceError);
  CHECK_THROWS_AS(oracle::brute_force_sensitivity(seed, 4, g, 10),
                  ResourceError);
  CHECK_NOTHROW(oracle::brute_force_sensitivity(seed, 4, g, 100));
}
