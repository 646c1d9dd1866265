#include "seedsens/seed.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "seedsens/errors.hpp"

namespace seedsens {

bool SeedLetter::contains(int symbol) const {
  return std::find(subset.begin(), subset.end(),
                   static_cast<uint8_t>(symbol)) != subset.end();
}

double SeedLetter::weight(const AlignmentAlphabet& alpha) const {
  if (subset.size() == 1) return 1.0;  // exactly the match symbol
  if (subset.size() == static_cast<size_t>(alpha.size())) return 0.0;
  return 0.5;
}

int SeedAlphabet::index_of(char glyph) const {
  for (size_t i = 0; i < letters.size(); ++i)
    if (letters[i].glyph == glyph) return static_cast<int>(i);
  return -1;
}

const SeedLetter* SeedAlphabet::find(char glyph) const {
  int i = index_of(glyph);
  return i < 0 ? nullptr : &letters[i];
}

namespace {

struct RawItem {
  char glyph;
  std::vector<std::string> symbol_names;
};

std::vector<RawItem> parse_spec_items(const std::string& spec) {
  std::vector<RawItem> items;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t end = spec.find(';', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq != 1 || item.size() < 3)
      throw InputError("seed alphabet: malformed item '" + item +
                       "' (expected glyph=symbols)");
    RawItem raw;
    raw.glyph = item[0];
    std::string syms = item.substr(2);
    if (syms.find(',') != std::string::npos) {
      size_t p = 0;
      while (p <= syms.size()) {
        size_t e = syms.find(',', p);
        if (e == std::string::npos) e = syms.size();
        std::string name = syms.substr(p, e - p);
        if (!name.empty()) raw.symbol_names.push_back(name);
        p = e + 1;
      }
    } else {
      for (char c : syms) raw.symbol_names.push_back(std::string(1, c));
    }
    if (raw.symbol_names.empty())
      throw InputError(std::string("seed alphabet: letter '") + raw.glyph +
                       "' has an empty subset");
    items.push_back(std::move(raw));
  }
  if (items.empty()) throw InputError("seed alphabet: empty specification");
  return items;
}

SeedAlphabet build_seed_alphabet(const std::vector<RawItem>& items,
                                 const AlignmentAlphabet& alignment) {
  SeedAlphabet out;
  out.alignment = alignment;
  for (const auto& item : items) {
    if (out.index_of(item.glyph) >= 0)
      throw InputError(std::string("seed alphabet: duplicate glyph '") +
                       item.glyph + "'");
    SeedLetter letter;
    letter.glyph = item.glyph;
    for (const auto& name : item.symbol_names) {
      int idx = alignment.index_of(name);
      if (idx < 0)
        throw InputError("seed alphabet: unknown alignment symbol '" + name +
                         "'");
      letter.subset.push_back(static_cast<uint8_t>(idx));
    }
    std::sort(letter.subset.begin(), letter.subset.end());
    letter.subset.erase(
        std::unique(letter.subset.begin(), letter.subset.end()),
        letter.subset.end());
    if (!letter.contains(alignment.match_index))
      throw InputError(std::string("seed alphabet: letter '") + item.glyph +
                       "' does not contain the match symbol");
    out.letters.push_back(std::move(letter));
  }
  const SeedLetter* sharp = out.find('#');
  if (sharp == nullptr || sharp->subset.size() != 1)
    throw InputError(
        "seed alphabet: must contain '#' mapping to exactly the match "
        "symbol");
  return out;
}

std::string resolve_preset(const std::string& spec) {
  if (spec == "spaced") return "#=1;_=10";
  if (spec == "dna-subset") return "#=1;@=1h;_=1h0";
  return spec;
}

}  // namespace

SeedAlphabet SeedAlphabet::parse(const std::string& spec) {
  auto items = parse_spec_items(resolve_preset(spec));
  std::vector<std::string> names;
  for (const auto& item : items)
    for (const auto& name : item.symbol_names)
      if (std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
  return build_seed_alphabet(items, AlignmentAlphabet(std::move(names)));
}

SeedAlphabet SeedAlphabet::parse(const std::string& spec,
                                 const AlignmentAlphabet& alignment) {
  return build_seed_alphabet(parse_spec_items(resolve_preset(spec)),
                             alignment);
}

SeedAlphabet SeedAlphabet::spaced() { return parse("spaced"); }

SeedAlphabet SeedAlphabet::dna_subset() { return parse("dna-subset"); }

std::string SeedAlphabet::spec_string() const {
  std::string out;
  bool multi = false;
  for (const auto& s : alignment.symbols)
    if (s.size() != 1) multi = true;
  for (const auto& letter : letters) {
    if (!out.empty()) out += ';';
    out += letter.glyph;
    out += '=';
    for (size_t i = 0; i < letter.subset.size(); ++i) {
      if (multi && i > 0) out += ',';
      out += alignment.name(letter.subset[i]);
    }
  }
  return out;
}

double Seed::design_weight() const {
  double w = 0;
  for (uint8_t idx : letters)
    w += alphabet.letters[idx].weight(alphabet.alignment);
  return w;
}

const SeedLetter& Seed::letter(int pos) const {
  return alphabet.letters[letters[pos - 1]];
}

Seed parse_seed(const std::string& text, const SeedAlphabet& alphabet) {
  if (text.empty()) throw InputError("seed: empty seed string");
  Seed seed;
  seed.alphabet = alphabet;
  seed.glyphs = text;
  for (size_t i = 0; i < text.size(); ++i) {
    int idx = alphabet.index_of(text[i]);
    if (idx < 0)
      throw InputError(std::string("seed: unknown glyph '") + text[i] +
                       "' at position " + std::to_string(i + 1));
    seed.letters.push_back(static_cast<uint8_t>(idx));
    if (text[i] != '#')
      seed.hash_positions.push_back(static_cast<int>(i + 1));
  }
  return seed;
}

std::vector<Word> matched_fragments(const Seed& seed, size_t cap) {
  const int m = seed.span();
  double count = 1;
  for (int i = 1; i <= m; ++i) count *= seed.letter(i).subset.size();
  if (count > static_cast<double>(cap))
    throw ResourceError("matched_fragments: " + std::to_string(count) +
                        " fragments exceed cap " + std::to_string(cap));

  std::vector<Word> out;
  out.reserve(static_cast<size_t>(count));
  Word w(m);
  std::vector<size_t> pick(m, 0);
  for (;;) {
    for (int i = 0; i < m; ++i) w[i] = seed.letter(i + 1).subset[pick[i]];
    out.push_back(w);
    int i = m - 1;
    while (i >= 0 && pick[i] + 1 == seed.letter(i + 1).subset.size())
      pick[i--] = 0;
    if (i < 0) break;
    pick[i]++;
  }
  return out;
}

Dfa build_spi_automaton(const Seed& seed) {
  const AlignmentAlphabet& alpha = seed.alphabet.alignment;
  const int asz = alpha.size();
  const int match = alpha.match_index;
  const int m = seed.span();
  const auto& R = seed.hash_positions;  // ascending, 1-based
  const int r = seed.r();

  if (r >= 24)
    throw ResourceError("spi automaton: seed has " + std::to_string(r) +
                        " non-'#' positions, state space too large");

  // rank_of[pos] = index of pos within R, or -1.
  std::vector<int> rank_of(m + 2, -1);
  for (int i = 0; i < r; ++i) rank_of[R[i]] = i;

  // Per symbol: mask of ranks whose letter contains the symbol.
  std::vector<uint32_t> letter_mask(asz, 0);
  for (int i = 0; i < r; ++i)
    for (uint8_t a : seed.letter(R[i]).subset)
      letter_mask[a] |= uint32_t{1} << i;

  // ranks_le[p] = mask of ranks with position <= p.
  std::vector<uint32_t> ranks_le(m + 1, 0);
  {
    uint32_t mask = 0;
    int i = 0;
    for (int p = 0; p <= m; ++p) {
      while (i < r && R[i] <= p) mask |= uint32_t{1} << i++;
      ranks_le[p] = mask;
    }
  }

  auto state_value = [&](uint32_t X, int t) {
    // max{X} + t with max of the empty set read as 0.
    int maxpos = X == 0 ? 0 : R[std::bit_width(X) - 1];
    return maxpos + t;
  };

  auto key_of = [m](uint32_t X, int t) {
    return (static_cast<uint64_t>(X) * (m + 1)) + static_cast<uint64_t>(t);
  };

  Dfa out;
  out.alphabet = alpha;
  out.initial = 0;
  std::unordered_map<uint64_t, int32_t> ids;
  std::vector<std::pair<uint32_t, int>> states{{0u, 0}};  // <X, t> pairs
  ids.emplace(key_of(0, 0), 0);
  int32_t final_id = -1;

  for (size_t i = 0; i < states.size(); ++i) {
    if (final_id == static_cast<int32_t>(i)) {  // merged absorbing final
      out.final_flags.push_back(1);
      for (int a = 0; a < asz; ++a)
        out.delta.push_back(static_cast<int32_t>(i));
      continue;
    }
    auto [X, t] = states[i];
    out.final_flags.push_back(0);
    for (int a = 0; a < asz; ++a) {
      uint32_t nX;
      int nt;
      if (a == match) {
        nX = X;
        nt = t + 1;
      } else {
        uint32_t xu = letter_mask[a] & ranks_le[t + 1];
        uint32_t xv = 0;
        uint32_t rest = X;
        while (rest != 0) {
          int rank = std::countr_zero(rest);
          rest &= rest - 1;
          int pos = R[rank] + t + 1;
          if (pos <= m) {
            int rk = rank_of[pos];
            if (rk >= 0 && (letter_mask[a] >> rk & 1u)) xv |= uint32_t{1} << rk;
          }
        }
        nX = xu | xv;
        nt = 0;
      }
      int value = state_value(nX, nt);
      if (value > m)
        throw std::logic_error("spi automaton: state value exceeds span");
      int32_t tid;
      if (value == m) {
        if (final_id < 0) {
          final_id = static_cast<int32_t>(states.size());
          states.emplace_back(0u, -1);  // placeholder slot
        }
        tid = final_id;
      } else {
        auto [it, inserted] =
            ids.emplace(key_of(nX, nt), static_cast<int32_t>(states.size()));
        if (inserted) states.emplace_back(nX, nt);
        tid = it->second;
      }
      out.delta.push_back(tid);
    }
  }
  out.num_states = static_cast<int>(states.size());
  return out;
}

}  // namespace seedsens
