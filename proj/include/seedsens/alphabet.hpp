#ifndef SEEDSENS_ALPHABET_HPP
#define SEEDSENS_ALPHABET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seedsens {

// A word over an alignment alphabet, stored as symbol indices.
using Word = std::vector<uint8_t>;

// Alignment alphabet: an ordered set of symbol names with a designated
// match symbol, which must be named "1".
struct AlignmentAlphabet {
  std::vector<std::string> symbols;
  int match_index = -1;

  AlignmentAlphabet() = default;
  explicit AlignmentAlphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(symbols.size()); }
  const std::string& name(int i) const { return symbols[i]; }
  int index_of(std::string_view name) const;

  bool operator==(const AlignmentAlphabet&) const = default;

  static AlignmentAlphabet binary();       // {1, 0}
  static AlignmentAlphabet dna_ternary();  // {1, h, 0}
};

std::string word_to_string(const AlignmentAlphabet& alpha, const Word& w);

// Inverse of word_to_string; requires all symbol names to be single
// characters (true for the built-in alphabets).
Word word_from_string(const AlignmentAlphabet& alpha, std::string_view text);

}  // namespace seedsens

#endif
