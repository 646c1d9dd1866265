#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "seedsens/errors.hpp"
#include "seedsens/seed.hpp"

using namespace seedsens;

TEST_CASE("seed alphabet parsing and presets") {
  SeedAlphabet dna = SeedAlphabet::parse("#=1;@=1h;_=1h0");
  CHECK(dna == SeedAlphabet::dna_subset());
  CHECK(dna.alignment.symbols == std::vector<std::string>{"1", "h", "0"});
  CHECK(dna.spec_string() == "#=1;@=1h;_=1h0");

  SeedAlphabet spaced = SeedAlphabet::parse("spaced");
  CHECK(spaced.alignment.size() == 2);
  CHECK(spaced.find('_')->subset.size() == 2);

  // Resolution against an existing alphabet must use its symbol order.
  SeedAlphabet resolved =
      SeedAlphabet::parse("#=1;@=1h;_=1h0", AlignmentAlphabet::dna_ternary());
  CHECK(resolved == dna);
  CHECK_THROWS_AS(
      SeedAlphabet::parse("#=1;_=1x", AlignmentAlphabet::binary()),
      InputError);

  CHECK_THROWS_AS(SeedAlphabet::parse(""), InputError);
  CHECK_THROWS_AS(SeedAlphabet::parse("#=1;#=10"), InputError);   // dup glyph
  CHECK_THROWS_AS(SeedAlphabet::parse("_=10"), InputError);       // no '#'
  CHECK_THROWS_AS(SeedAlphabet::parse("#=10"), InputError);       // '#' != {1}
  CHECK_THROWS_AS(SeedAlphabet::parse("#=1;@=h0"), InputError);   // no match
}

TEST_CASE("parse_seed derives span, positions and weights") {
  SeedAlphabet spaced = SeedAlphabet::spaced();
  Seed s = parse_seed("###", spaced);
  CHECK(s.span() == 3);
  CHECK(s.r() == 0);
  CHECK(s.w_count() == 3);
  CHECK(s.design_weight() == doctest::Approx(3.0));

  SeedAlphabet dna = SeedAlphabet::dna_subset();
  Seed t = parse_seed("##@#", dna);
  CHECK(t.span() == 4);
  CHECK(t.hash_positions == std::vector<int>{3});
  CHECK(t.r() == 1);
  CHECK(t.w_count() == 3);
  CHECK(t.design_weight() == doctest::Approx(3.5));

  CHECK_THROWS_WITH_AS(parse_seed("#x#", spaced),
                       "seed: unknown glyph 'x' at position 2", InputError);
  CHECK_THROWS_AS(parse_seed("", spaced), InputError);
}

TEST_CASE("matched fragments expand the letter subsets") {
  SeedAlphabet spaced = SeedAlphabet::spaced();
  const AlignmentAlphabet& bin = spaced.alignment;
  auto frags = matched_fragments(parse_seed("#_#", spaced));
  REQUIRE(frags.size() == 2);
  CHECK(word_to_string(bin, frags[0]) == "111");
  CHECK(word_to_string(bin, frags[1]) == "101");

  CHECK(matched_fragments(parse_seed("##", spaced)).size() == 1);

  SeedAlphabet dna = SeedAlphabet::dna_subset();
  auto tf = matched_fragments(parse_seed("#@#", dna));
  REQUIRE(tf.size() == 2);
  CHECK(word_to_string(dna.alignment, tf[0]) == "111");
  CHECK(word_to_string(dna.alignment, tf[1]) == "1h1");

  CHECK_THROWS_AS(matched_fragments(parse_seed("#___#", spaced), 4),
                  ResourceError);
}

TEST_CASE("S_pi for ### matches the hand trace") {
  Dfa spi = build_spi_automaton(parse_seed("###", SeedAlphabet::spaced()));
  // <empty,0>, <empty,1>, <empty,2>, merged final; Lemma 4 bound met exactly.
  CHECK(spi.num_states == 4);
  CHECK(spi.final_ids() == std::vector<int>{3});
}

TEST_CASE("S_pi for #_# matches the hand trace") {
  SeedAlphabet sa = SeedAlphabet::spaced();
  Dfa spi = build_spi_automaton(parse_seed("#_#", sa));
  // BFS order: 0=<{},0>, 1=<{},1>, 2=<{},2>, 3=<{2},0>, 4=final.
  REQUIRE(spi.num_states == 5);
  const int match = 0, mismatch = 1;
  CHECK(spi.next(0, match) == 1);
  CHECK(spi.next(0, mismatch) == 0);
  CHECK(spi.next(1, match) == 2);
  CHECK(spi.next(1, mismatch) == 3);  // X_U = {2}
  CHECK(spi.next(2, match) == 4);     // run of three matches hits
  CHECK(spi.next(2, mismatch) == 3);
  CHECK(spi.next(3, match) == 4);     // max{X}+t = 2+1 = m
  CHECK(spi.next(3, mismatch) == 0);
  CHECK(spi.next(4, match) == 4);
  CHECK(spi.next(4, mismatch) == 4);
}

TEST_CASE("S_pi construction is deterministic") {
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  Seed seed = parse_seed("#@_#_@#", dna);
  Dfa a = build_spi_automaton(seed);
  Dfa b = build_spi_automaton(seed);
  a.check();  // completeness scan
  CHECK(a.num_states == b.num_states);
  CHECK(a.delta == b.delta);
  CHECK(a.final_flags == b.final_flags);
}

TEST_CASE("S_pi accepts every all-match word") {
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  for (const char* text : {"#", "#@#", "#__@#", "@@", "_#_"}) {
    Seed seed = parse_seed(text, dna);
    Dfa spi = build_spi_automaton(seed);
    Word ones(seed.span(), 0);
    CHECK(accepts(spi, ones));
  }
}

TEST_CASE("Lemma 3: S_pi equals the Aho-Corasick hit DFA over a corpus") {
  SeedAlphabet bin = SeedAlphabet::spaced();
  for (const auto& text : fixtures::spaced_corpus(6)) {
    Seed seed = parse_seed(text, bin);
    CHECK(equivalent(build_spi_automaton(seed),
                     aho_corasick_hit_dfa(bin.alignment,
                                          matched_fragments(seed))));
  }
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  for (const auto& text : fixtures::subset_sample(40, 6)) {
    Seed seed = parse_seed(text, dna);
    CHECK(equivalent(build_spi_automaton(seed),
                     aho_corasick_hit_dfa(dna.alignment,
                                          matched_fragments(seed))));
  }
}

TEST_CASE("Lemma 4 bound and construction ordering over a corpus") {
  SeedAlphabet dna = SeedAlphabet::dna_subset();
  int tighter_violations = 0;
  for (const auto& text : fixtures::subset_sample(60, 7)) {
    Seed seed = parse_seed(text, dna);
    Dfa spi = build_spi_automaton(seed);
    Dfa ac = aho_corasick_hit_dfa(dna.alignment, matched_fragments(seed));
    Dfa mn = minimize(spi);
    long long bound = static_cast<long long>(seed.w_count() + 1) << seed.r();
    CHECK(spi.num_states <= bound);
    CHECK(mn.num_states <= spi.num_states);
    CHECK(spi.num_states <= ac.num_states);
    if (text.front() == '#' &&
        spi.num_states > (static_cast<long long>(seed.w_count()) << seed.r()) + 1)
      ++tighter_violations;
  }
  // The tighter w*2^r form is informational; report without failing.
  if (tighter_violations > 0)
    MESSAGE("tighter bound w*2^r+1 violated on ", tighter_violations,
            " seeds");
}
