#ifndef SEEDSENS_SEED_HPP
#define SEEDSENS_SEED_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "seedsens/dfa.hpp"

namespace seedsens {

// One seed letter: a glyph naming a subset of alignment symbols.  Every
// letter's subset contains the match symbol.
struct SeedLetter {
  char glyph = 0;
  std::vector<uint8_t> subset;  // sorted symbol indices

  bool operator==(const SeedLetter&) const = default;
  bool contains(int symbol) const;
  // Design weight of the letter: 1 for the must-match letter, 0 for a
  // letter accepting the whole alphabet, 0.5 otherwise.
  double weight(const AlignmentAlphabet& alpha) const;
};

// Seed alphabet over one alignment alphabet.  Must contain '#' mapping to
// exactly the match symbol.
struct SeedAlphabet {
  AlignmentAlphabet alignment;
  std::vector<SeedLetter> letters;

  int index_of(char glyph) const;  // -1 if unknown
  const SeedLetter* find(char glyph) const;

  bool operator==(const SeedAlphabet&) const = default;

  // Spec string "#=1;@=1h;_=1h0" (or a preset name "spaced"/"dna-subset").
  // The one-argument form derives the alignment alphabet from the symbol
  // names in order of first appearance; the two-argument form resolves
  // names against an existing alphabet.
  static SeedAlphabet parse(const std::string& spec);
  static SeedAlphabet parse(const std::string& spec,
                            const AlignmentAlphabet& alignment);
  static SeedAlphabet spaced();      // #=1;_=10 over {1,0}
  static SeedAlphabet dna_subset();  // #=1;@=1h;_=1h0 over {1,h,0}
  std::string spec_string() const;
};

// A seed: a nonempty word over a seed alphabet, with the derived values
// used by the automaton construction (positions of non-'#' letters and
// the two weight notions).
struct Seed {
  SeedAlphabet alphabet;
  std::string glyphs;
  std::vector<uint8_t> letters;     // indices into alphabet.letters
  std::vector<int> hash_positions;  // 1-based positions with glyph != '#'

  int span() const { return static_cast<int>(letters.size()); }
  int r() const { return static_cast<int>(hash_positions.size()); }
  int w_count() const { return span() - r(); }
  double design_weight() const;
  const SeedLetter& letter(int pos) const;  // 1-based
};

Seed parse_seed(const std::string& text, const SeedAlphabet& alphabet);

inline constexpr size_t kDefaultFragmentCap = size_t{1} << 20;

// All alignment fragments matched by the seed: the Cartesian product of
// the per-position letter subsets, in symbol-index order.
std::vector<Word> matched_fragments(const Seed& seed,
                                    size_t cap = kDefaultFragmentCap);

// Seed automaton with states <X,t>: X the viable non-'#' prefix ends
// before the current match run, t the run length.  Accepts every word
// containing a factor matched by the seed; at most (w_count+1)*2^r states,
// the merged final state absorbing.  State numbering is fixed by
// breadth-first discovery from <empty,0> with symbols in alphabet order.
Dfa build_spi_automaton(const Seed& seed);

}  // namespace seedsens

#endif
