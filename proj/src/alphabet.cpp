#include "seedsens/alphabet.hpp"

#include <unordered_set>

#include "seedsens/errors.hpp"

namespace seedsens {

AlignmentAlphabet::AlignmentAlphabet(std::vector<std::string> names)
    : symbols(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw InputError("alphabet: empty symbol name");
    if (!seen.insert(s).second)
      throw InputError("alphabet: duplicate symbol '" + s + "'");
  }
  match_index = index_of("1");
  if (match_index < 0)
    throw InputError("alphabet: missing match symbol '1'");
}

int AlignmentAlphabet::index_of(std::string_view name) const {
  for (size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == name) return static_cast<int>(i);
  return -1;
}

AlignmentAlphabet AlignmentAlphabet::binary() {
  return AlignmentAlphabet({"1", "0"});
}

AlignmentAlphabet AlignmentAlphabet::dna_ternary() {
  return AlignmentAlphabet({"1", "h", "0"});
}

std::string word_to_string(const AlignmentAlphabet& alpha, const Word& w) {
  std::string out;
  for (uint8_t s : w) out += alpha.name(s);
  return out;
}

Word word_from_string(const AlignmentAlphabet& alpha, std::string_view text) {
  for (const auto& s : alpha.symbols)
    if (s.size() != 1)
      throw InputError("word_from_string: multi-character symbol names");
  Word w;
  w.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    int idx = alpha.index_of(text.substr(i, 1));
    if (idx < 0)
      throw InputError(std::string("word_from_string: unknown symbol '") +
                       text[i] + "'");
    w.push_back(static_cast<uint8_t>(idx));
  }
  return w;
}

}  // namespace seedsens
