#include "seedsens/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "seedsens/errors.hpp"

namespace seedsens {

Dfa target_all_words(const AlignmentAlphabet& alpha, int n) {
  if (n < 1)
    throw InputError("target_all_words: length must be at least 1");
  const int asz = alpha.size();
  Dfa out;
  out.alphabet = alpha;
  out.num_states = n + 2;  // levels 0..n plus the reject sink
  out.initial = 0;
  out.final_flags.assign(out.num_states, 0);
  out.final_flags[n] = 1;
  out.delta.resize(static_cast<size_t>(out.num_states) * asz);
  const int sink = n + 1;
  for (int s = 0; s <= n; ++s)
    for (int c = 0; c < asz; ++c)
      out.delta[static_cast<size_t>(s) * asz + c] = s < n ? s + 1 : sink;
  for (int c = 0; c < asz; ++c)
    out.delta[static_cast<size_t>(sink) * asz + c] = sink;
  return out;
}

int target_horizon(const Dfa& target) {
  const int n = target.num_states;
  const int asz = target.alphabet.size();

  std::vector<uint8_t> reachable(n, 0);
  std::vector<int32_t> stack{target.initial};
  reachable[target.initial] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int c = 0; c < asz; ++c) {
      int t = target.next(s, c);
      if (!reachable[t]) {
        reachable[t] = 1;
        stack.push_back(t);
      }
    }
  }

  std::vector<uint8_t> coreach(n, 0);
  for (int s = 0; s < n; ++s)
    if (target.is_final(s)) {
      coreach[s] = 1;
      stack.push_back(s);
    }
  // Reverse reachability over the full edge set.
  std::vector<std::vector<int32_t>> preds(n);
  for (int s = 0; s < n; ++s)
    for (int c = 0; c < asz; ++c) preds[target.next(s, c)].push_back(s);
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int p : preds[s])
      if (!coreach[p]) {
        coreach[p] = 1;
        stack.push_back(p);
      }
  }

  auto live = [&](int s) { return reachable[s] && coreach[s]; };
  if (!live(target.initial)) return 0;  // empty language

  // Kahn topological order of the live subgraph.
  std::vector<int32_t> indeg(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!live(s)) continue;
    for (int c = 0; c < asz; ++c) {
      int t = target.next(s, c);
      if (live(t)) indeg[t]++;
    }
  }
  std::deque<int32_t> queue;
  int live_count = 0;
  for (int s = 0; s < n; ++s)
    if (live(s)) {
      ++live_count;
      if (indeg[s] == 0) queue.push_back(s);
    }
  std::vector<int32_t> topo;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    topo.push_back(s);
    for (int c = 0; c < asz; ++c) {
      int t = target.next(s, c);
      if (live(t) && --indeg[t] == 0) queue.push_back(t);
    }
  }
  if (static_cast<int>(topo.size()) != live_count)
    throw InputError("target automaton has a cycle outside its reject sink");

  std::vector<int32_t> dist(n, -1);
  dist[target.initial] = 0;
  int horizon = 0;
  for (int s : topo) {
    if (dist[s] < 0) continue;
    if (target.is_final(s)) horizon = std::max(horizon, static_cast<int>(dist[s]));
    for (int c = 0; c < asz; ++c) {
      int t = target.next(s, c);
      if (live(t)) dist[t] = std::max(dist[t], dist[s] + 1);
    }
  }
  return horizon;
}

PwAutomaton pw_product(const Dfa& k, const ProbTransducer& g) {
  if (k.alphabet != g.alphabet())
    throw InputError("pw_product: alphabet mismatch");
  const int asz = k.alphabet.size();
  const int gn = g.num_states();

  std::vector<int32_t> pair_id(static_cast<size_t>(k.num_states) * gn, -1);
  auto id_of = [&](int ks, int gs) -> int32_t& {
    return pair_id[static_cast<size_t>(ks) * gn + gs];
  };

  PwAutomaton out;
  out.initial = 0;
  id_of(k.initial, g.initial()) = 0;
  out.states.push_back({k.initial, g.initial()});
  out.row_offset.push_back(0);
  for (size_t i = 0; i < out.states.size(); ++i) {
    auto [ks, gs] = out.states[i];
    out.final_flags.push_back(k.is_final(ks));
    for (int c = 0; c < asz; ++c) {
      int kn = k.next(ks, c);
      for (const auto& t : g.row(gs, c)) {
        int32_t& id = id_of(kn, t.dst);
        if (id < 0) {
          id = static_cast<int32_t>(out.states.size());
          out.states.push_back({kn, t.dst});
        }
        out.transitions.push_back(
            {static_cast<uint8_t>(c), id, t.prob});
      }
    }
    out.row_offset.push_back(static_cast<int64_t>(out.transitions.size()));
  }
  out.num_states = static_cast<int>(out.states.size());
  return out;
}

double path_weight_dp(const PwAutomaton& w, int horizon, DpStats* stats) {
  if (horizon <= 0)
    throw InputError("path_weight_dp: horizon must be positive");

  // States that can still reach a final state; mass entering the rest is
  // booked as dead instead of being propagated.
  std::vector<uint8_t> can_hit(w.num_states, 0);
  {
    std::vector<std::vector<int32_t>> preds(w.num_states);
    for (int s = 0; s < w.num_states; ++s)
      for (int64_t j = w.row_offset[s]; j < w.row_offset[s + 1]; ++j)
        preds[w.transitions[j].dst].push_back(s);
    std::vector<int32_t> stack;
    for (int s = 0; s < w.num_states; ++s)
      if (w.is_final(s)) {
        can_hit[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int p : preds[s])
        if (!can_hit[p]) {
          can_hit[p] = 1;
          stack.push_back(p);
        }
    }
  }

  double final_mass = 0.0, dead_mass = 0.0;
  std::vector<double> cur(w.num_states, 0.0), next(w.num_states, 0.0);
  std::vector<int32_t> frontier, next_frontier;
  std::vector<uint8_t> queued(w.num_states, 0);
  double drift = 0.0;

  if (w.is_final(w.initial)) {
    final_mass = 1.0;
  } else if (!can_hit[w.initial]) {
    dead_mass = 1.0;
  } else {
    cur[w.initial] = 1.0;
    frontier.push_back(w.initial);
  }

  int step = 0;
  for (; step < horizon && !frontier.empty(); ++step) {
    for (int s : frontier) {
      double m = cur[s];
      cur[s] = 0.0;
      for (int64_t j = w.row_offset[s]; j < w.row_offset[s + 1]; ++j) {
        const auto& t = w.transitions[j];
        double dm = m * t.prob;
        if (w.is_final(t.dst)) {
          final_mass += dm;  // frozen: full paths end here
        } else if (!can_hit[t.dst]) {
          dead_mass += dm;
        } else {
          if (!queued[t.dst]) {
            queued[t.dst] = 1;
            next_frontier.push_back(t.dst);
          }
          next[t.dst] += dm;
        }
      }
    }
    frontier.clear();
    double live = 0.0;
    for (int s : next_frontier) {
      queued[s] = 0;
      cur[s] = next[s];
      next[s] = 0.0;
      live += cur[s];
    }
    frontier.swap(next_frontier);
    drift = std::max(drift, std::abs(1.0 - (final_mass + dead_mass + live)));
  }

  if (stats != nullptr) {
    double live = 0.0;
    for (int s : frontier) live += cur[s];
    stats->steps = step;
    stats->final_mass = final_mass;
    stats->live_mass = live;
    stats->dead_mass = dead_mass;
    stats->max_mass_drift = drift;
  }
  return final_mass;
}

SensitivityResult compute_sensitivity(const Seed& seed, const Dfa& target,
                                      const ProbTransducer& g) {
  if (seed.alphabet.alignment != target.alphabet)
    throw InputError("compute_sensitivity: seed/target alphabet mismatch");
  if (target.alphabet != g.alphabet())
    throw InputError("compute_sensitivity: target/model alphabet mismatch");

  Dfa spi = build_spi_automaton(seed);
  Dfa k = product_intersection(target, spi);
  int horizon = target_horizon(target);

  SensitivityResult res;
  res.diag.target_states = target.num_states;
  res.diag.spi_states = spi.num_states;
  res.diag.k_states = k.num_states;
  res.diag.steps = horizon;

  if (horizon == 0) {
    // Language is empty or {empty word}; no DP step to run.
    res.p_target = target.is_final(target.initial) ? 1.0 : 0.0;
    res.p_joint = k.is_final(k.initial) ? 1.0 : 0.0;
  } else {
    PwAutomaton w_num = pw_product(with_absorbing_finals(k), g);
    res.diag.w_states = w_num.num_states;
    res.p_joint = path_weight_dp(w_num, horizon);
    PwAutomaton w_den = pw_product(with_absorbing_finals(target), g);
    res.p_target = path_weight_dp(w_den, horizon);
  }

  if (res.p_target <= 0.0)
    throw InputError("target language has zero probability");
  res.sensitivity = res.p_joint / res.p_target;
  return res;
}

SensitivityResult compute_sensitivity(const Seed& seed, int n,
                                      const ProbTransducer& g) {
  Dfa target = target_all_words(seed.alphabet.alignment, n);
  SensitivityResult res = compute_sensitivity(seed, target, g);
  if (std::abs(res.p_target - 1.0) > 1e-6)
    throw std::logic_error(
        "compute_sensitivity: all-words denominator deviates from 1");
  return res;
}

}  // namespace seedsens
