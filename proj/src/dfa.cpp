#include "seedsens/dfa.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "seedsens/errors.hpp"

namespace seedsens {

std::vector<int> Dfa::final_ids() const {
  std::vector<int> ids;
  for (int s = 0; s < num_states; ++s)
    if (final_flags[s]) ids.push_back(s);
  return ids;
}

void Dfa::check() const {
  const size_t asz = alphabet.size();
  if (num_states <= 0) throw InputError("dfa: no states");
  if (asz == 0) throw InputError("dfa: empty alphabet");
  if (initial < 0 || initial >= num_states)
    throw InputError("dfa: initial state out of range");
  if (final_flags.size() != static_cast<size_t>(num_states))
    throw InputError("dfa: final flag vector size mismatch");
  if (delta.size() != static_cast<size_t>(num_states) * asz)
    throw InputError("dfa: transition table is not complete");
  for (int32_t t : delta)
    if (t < 0 || t >= num_states)
      throw InputError("dfa: transition target out of range");
}

bool accepts(const Dfa& d, const Word& w) {
  int s = d.initial;
  for (uint8_t a : w) s = d.next(s, a);
  return d.is_final(s);
}

Dfa product_intersection(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet)
    throw InputError("product_intersection: alphabet mismatch");
  const int asz = a.alphabet.size();

  std::vector<int32_t> pair_id(
      static_cast<size_t>(a.num_states) * b.num_states, -1);
  auto id_of = [&](int x, int y) -> int32_t& {
    return pair_id[static_cast<size_t>(x) * b.num_states + y];
  };

  Dfa out;
  out.alphabet = a.alphabet;
  out.initial = 0;
  std::vector<std::pair<int32_t, int32_t>> pairs;
  id_of(a.initial, b.initial) = 0;
  pairs.emplace_back(a.initial, b.initial);

  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    out.final_flags.push_back(a.is_final(x) && b.is_final(y));
    for (int c = 0; c < asz; ++c) {
      int nx = a.next(x, c), ny = b.next(y, c);
      int32_t& id = id_of(nx, ny);
      if (id < 0) {
        id = static_cast<int32_t>(pairs.size());
        pairs.emplace_back(nx, ny);
      }
      out.delta.push_back(id);
    }
  }
  out.num_states = static_cast<int>(pairs.size());
  return out;
}

namespace {

// Restriction of d to states reachable from the initial, renumbered in
// breadth-first discovery order.
Dfa reachable_part(const Dfa& d) {
  const int asz = d.alphabet.size();
  std::vector<int32_t> id(d.num_states, -1);
  std::vector<int32_t> order;
  id[d.initial] = 0;
  order.push_back(d.initial);
  for (size_t i = 0; i < order.size(); ++i) {
    for (int c = 0; c < asz; ++c) {
      int t = d.next(order[i], c);
      if (id[t] < 0) {
        id[t] = static_cast<int32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = static_cast<int>(order.size());
  out.initial = 0;
  out.final_flags.resize(out.num_states);
  out.delta.resize(static_cast<size_t>(out.num_states) * asz);
  for (int s = 0; s < out.num_states; ++s) {
    out.final_flags[s] = d.final_flags[order[s]];
    for (int c = 0; c < asz; ++c)
      out.delta[static_cast<size_t>(s) * asz + c] = id[d.next(order[s], c)];
  }
  return out;
}

// Hopcroft partition refinement on a reachable complete DFA.  Returns the
// block index of every state.
std::vector<int> refine_partition(const Dfa& d, int& num_blocks) {
  const int n = d.num_states;
  const int asz = d.alphabet.size();

  // Inverse transition lists, one CSR per symbol.
  std::vector<std::vector<int32_t>> inv_begin(asz), inv_list(asz);
  for (int c = 0; c < asz; ++c) {
    inv_begin[c].assign(n + 1, 0);
    for (int s = 0; s < n; ++s) inv_begin[c][d.next(s, c) + 1]++;
    for (int t = 0; t < n; ++t) inv_begin[c][t + 1] += inv_begin[c][t];
    inv_list[c].resize(n);
    std::vector<int32_t> fill(inv_begin[c].begin(), inv_begin[c].end() - 1);
    for (int s = 0; s < n; ++s) inv_list[c][fill[d.next(s, c)]++] = s;
  }

  // Partition as a permutation of states with per-block [begin, end).
  std::vector<int32_t> elems(n), loc(n), block_of(n);
  std::vector<int32_t> blk_begin, blk_end;
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_partition(elems.begin(), elems.end(),
                        [&](int s) { return !d.is_final(s); });
  for (int i = 0; i < n; ++i) loc[elems[i]] = i;
  int split = 0;
  while (split < n && !d.is_final(elems[split])) ++split;
  if (split == 0 || split == n) {
    blk_begin = {0};
    blk_end = {n};
    for (int s = 0; s < n; ++s) block_of[s] = 0;
  } else {
    blk_begin = {0, split};
    blk_end = {split, n};
    for (int i = 0; i < n; ++i) block_of[elems[i]] = i < split ? 0 : 1;
  }

  std::deque<std::pair<int32_t, int32_t>> work;  // (block, symbol)
  for (int b = 0; b < static_cast<int>(blk_begin.size()); ++b)
    for (int c = 0; c < asz; ++c) work.emplace_back(b, c);

  std::vector<int32_t> touched;   // blocks holding marked states
  std::vector<int32_t> marked;    // marked-prefix length per block
  std::vector<int32_t> splitter;  // snapshot of the splitter's members
  while (!work.empty()) {
    auto [bs, c] = work.front();
    work.pop_front();
    if (marked.size() < blk_begin.size()) marked.resize(blk_begin.size(), 0);

    // Marking reshuffles elems, so iterate over a snapshot of the block.
    splitter.assign(elems.begin() + blk_begin[bs],
                    elems.begin() + blk_end[bs]);
    touched.clear();
    for (int t : splitter) {
      for (int32_t j = inv_begin[c][t]; j < inv_begin[c][t + 1]; ++j) {
        int s = inv_list[c][j];
        int b = block_of[s];
        if (marked[b] == 0) touched.push_back(b);
        // Move s into the marked prefix of its block.
        int pos = loc[s];
        int dest = blk_begin[b] + marked[b];
        std::swap(elems[pos], elems[dest]);
        loc[elems[pos]] = pos;
        loc[elems[dest]] = dest;
        marked[b]++;
      }
    }

    for (int b : touched) {
      int m = marked[b];
      marked[b] = 0;
      int size = blk_end[b] - blk_begin[b];
      if (m == size) continue;  // block entirely marked, no split
      // New block takes the smaller half.
      int nb = static_cast<int>(blk_begin.size());
      int mid = blk_begin[b] + m;
      if (m <= size - m) {
        blk_begin.push_back(blk_begin[b]);
        blk_end.push_back(mid);
        blk_begin[b] = mid;
      } else {
        blk_begin.push_back(mid);
        blk_end.push_back(blk_end[b]);
        blk_end[b] = mid;
      }
      marked.push_back(0);
      for (int i = blk_begin[nb]; i < blk_end[nb]; ++i) block_of[elems[i]] = nb;
      for (int c2 = 0; c2 < asz; ++c2) work.emplace_back(nb, c2);
    }
  }

  num_blocks = static_cast<int>(blk_begin.size());
  std::vector<int> result(block_of.begin(), block_of.end());
  return result;
}

}  // namespace

Dfa minimize(const Dfa& d) {
  Dfa r = reachable_part(d);
  const int asz = r.alphabet.size();
  int num_blocks = 0;
  std::vector<int> block_of = refine_partition(r, num_blocks);

  // Quotient automaton, renumbered breadth-first from the initial block.
  std::vector<int32_t> id(num_blocks, -1);
  std::vector<int32_t> rep;  // representative state per output id
  id[block_of[r.initial]] = 0;
  rep.push_back(r.initial);

  Dfa out;
  out.alphabet = r.alphabet;
  out.initial = 0;
  for (size_t i = 0; i < rep.size(); ++i) {
    int s = rep[i];
    out.final_flags.push_back(r.final_flags[s]);
    for (int c = 0; c < asz; ++c) {
      int tb = block_of[r.next(s, c)];
      if (id[tb] < 0) {
        id[tb] = static_cast<int32_t>(rep.size());
        // Any member state works as representative; pick the successor.
        rep.push_back(r.next(s, c));
      }
      out.delta.push_back(id[tb]);
    }
  }
  out.num_states = static_cast<int>(rep.size());
  return out;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet)
    throw InputError("equivalent: alphabet mismatch");
  const int asz = a.alphabet.size();
  std::vector<uint8_t> seen(static_cast<size_t>(a.num_states) * b.num_states,
                            0);
  std::vector<std::pair<int32_t, int32_t>> stack{{a.initial, b.initial}};
  seen[static_cast<size_t>(a.initial) * b.num_states + b.initial] = 1;
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (a.is_final(x) != b.is_final(y)) return false;
    for (int c = 0; c < asz; ++c) {
      int nx = a.next(x, c), ny = b.next(y, c);
      size_t key = static_cast<size_t>(nx) * b.num_states + ny;
      if (!seen[key]) {
        seen[key] = 1;
        stack.emplace_back(nx, ny);
      }
    }
  }
  return true;
}

Dfa aho_corasick_hit_dfa(const AlignmentAlphabet& alpha,
                         const std::vector<Word>& patterns) {
  if (patterns.empty())
    throw InputError("aho_corasick_hit_dfa: empty pattern set");
  const int asz = alpha.size();

  // Trie.
  std::vector<int32_t> child;  // node-major, asz entries per node
  std::vector<uint8_t> terminal;
  auto add_node = [&]() {
    child.insert(child.end(), asz, -1);
    terminal.push_back(0);
    return static_cast<int32_t>(terminal.size()) - 1;
  };
  add_node();  // root = 0
  for (const Word& p : patterns) {
    if (p.empty())
      throw InputError("aho_corasick_hit_dfa: empty pattern word");
    int u = 0;
    for (uint8_t a : p) {
      if (a >= asz)
        throw InputError("aho_corasick_hit_dfa: symbol out of range");
      int32_t c = child[static_cast<size_t>(u) * asz + a];
      if (c < 0) {
        c = add_node();  // may reallocate child; re-index to store
        child[static_cast<size_t>(u) * asz + a] = c;
      }
      u = c;
    }
    terminal[u] = 1;
  }
  const int nodes = static_cast<int>(terminal.size());

  // Failure links and goto-resolved transitions, breadth-first.
  std::vector<int32_t> fail(nodes, 0), step(static_cast<size_t>(nodes) * asz);
  std::vector<uint8_t> hit(terminal.begin(), terminal.end());
  std::deque<int32_t> queue;
  for (int a = 0; a < asz; ++a) {
    int32_t c = child[a];
    if (c >= 0) {
      fail[c] = 0;
      step[a] = c;
      queue.push_back(c);
    } else {
      step[a] = 0;
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (hit[fail[u]]) hit[u] = 1;
    for (int a = 0; a < asz; ++a) {
      int32_t c = child[static_cast<size_t>(u) * asz + a];
      int32_t via_fail = step[static_cast<size_t>(fail[u]) * asz + a];
      if (c >= 0) {
        fail[c] = via_fail;
        step[static_cast<size_t>(u) * asz + a] = c;
        queue.push_back(c);
      } else {
        step[static_cast<size_t>(u) * asz + a] = via_fail;
      }
    }
  }

  // Complete DFA over the reachable non-hit nodes plus one merged
  // absorbing final state; ids in breadth-first discovery order.  The
  // entry -1 in the discovery list stands for the merged final.
  Dfa out;
  out.alphabet = alpha;
  out.initial = 0;
  std::vector<int32_t> id(nodes, -1);
  int32_t final_id = -1;
  std::vector<int32_t> order{0};
  id[0] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    if (u < 0) {  // merged final: absorbing self-loops
      out.final_flags.push_back(1);
      for (int a = 0; a < asz; ++a)
        out.delta.push_back(static_cast<int32_t>(i));
      continue;
    }
    out.final_flags.push_back(0);
    for (int a = 0; a < asz; ++a) {
      int v = step[static_cast<size_t>(u) * asz + a];
      int32_t tid;
      if (hit[v]) {
        if (final_id < 0) {
          final_id = static_cast<int32_t>(order.size());
          order.push_back(-1);
        }
        tid = final_id;
      } else {
        if (id[v] < 0) {
          id[v] = static_cast<int32_t>(order.size());
          order.push_back(v);
        }
        tid = id[v];
      }
      out.delta.push_back(tid);
    }
  }
  out.num_states = static_cast<int>(order.size());
  return out;
}

Dfa with_absorbing_finals(const Dfa& d) {
  Dfa out = d;
  const int asz = d.alphabet.size();
  for (int s = 0; s < d.num_states; ++s)
    if (d.is_final(s))
      for (int c = 0; c < asz; ++c)
        out.delta[static_cast<size_t>(s) * asz + c] = s;
  return out;
}

std::string dump_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "states " << d.num_states << "\n";
  out << "initial " << d.initial << "\n";
  out << "finals";
  for (int f : d.final_ids()) out << ' ' << f;
  out << "\n";
  const int asz = d.alphabet.size();
  for (int s = 0; s < d.num_states; ++s)
    for (int c = 0; c < asz; ++c)
      out << s << ' ' << d.alphabet.name(c) << ' ' << d.next(s, c) << "\n";
  return out.str();
}

}  // namespace seedsens
