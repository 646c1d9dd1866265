#include "seedsens/prob_transducer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "seedsens/errors.hpp"

namespace seedsens {

ProbTransducer::ProbTransducer(AlignmentAlphabet alphabet, int num_states,
                               int initial,
                               std::vector<ProbTransition> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      transitions_(std::move(transitions)) {
  if (num_states_ <= 0)
    throw InputError("transducer: must have at least one state");
  if (initial_ < 0 || initial_ >= num_states_)
    throw InputError("transducer: initial state out of range");
  const int asz = alphabet_.size();
  for (const auto& t : transitions_) {
    if (t.src < 0 || t.src >= num_states_ || t.dst < 0 || t.dst >= num_states_)
      throw InputError("transducer: transition state out of range");
    if (t.symbol >= asz)
      throw InputError("transducer: transition symbol out of range");
  }
  std::sort(transitions_.begin(), transitions_.end(),
            [](const ProbTransition& a, const ProbTransition& b) {
              if (a.src != b.src) return a.src < b.src;
              if (a.symbol != b.symbol) return a.symbol < b.symbol;
              return a.dst < b.dst;
            });
  offsets_.assign(static_cast<size_t>(num_states_) * asz + 1, 0);
  for (const auto& t : transitions_)
    offsets_[static_cast<size_t>(t.src) * asz + t.symbol + 1]++;
  for (size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::span<const ProbTransition> ProbTransducer::row(int state,
                                                    int symbol) const {
  size_t slot = static_cast<size_t>(state) * alphabet_.size() + symbol;
  return {transitions_.data() + offsets_[slot],
          transitions_.data() + offsets_[slot + 1]};
}

bool ProbTransducer::deterministic() const {
  for (size_t slot = 0; slot + 1 < offsets_.size(); ++slot)
    if (offsets_[slot + 1] - offsets_[slot] > 1) return false;
  return true;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Trim to the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

bool row_sum_ok(double sum) {
  // The tolerance is 1e-9; the epsilon absorbs representation error of
  // decimal literals near the boundary.
  return std::abs(sum - 1.0) <=
         kRowSumTolerance + 8 * std::numeric_limits<double>::epsilon();
}

}  // namespace

Diagnostics validate(const ProbTransducer& g) {
  Diagnostics diag;
  std::vector<double> row_sum(g.num_states(), 0.0);
  const auto& ts = g.transitions();
  for (size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    if (!(t.prob > 0.0) || t.prob > 1.0 + 1e-12) {
      std::ostringstream msg;
      msg << "transition (" << t.src << ", " << g.alphabet().name(t.symbol)
          << ", " << t.dst << ") probability " << t.prob
          << " outside (0, 1]";
      diag.problems.push_back(msg.str());
    }
    if (i > 0 && ts[i - 1].src == t.src && ts[i - 1].symbol == t.symbol &&
        ts[i - 1].dst == t.dst) {
      std::ostringstream msg;
      msg << "duplicate transition (" << t.src << ", "
          << g.alphabet().name(t.symbol) << ", " << t.dst << ")";
      diag.problems.push_back(msg.str());
    }
    row_sum[t.src] += t.prob;
  }
  for (int s = 0; s < g.num_states(); ++s) {
    if (!row_sum_ok(row_sum[s])) {
      std::ostringstream msg;
      msg << "state " << s << " sums to " << row_sum[s];
      diag.problems.push_back(msg.str());
    }
  }
  return diag;
}

ProbTransducer bernoulli(const AlignmentAlphabet& alpha,
                         const std::vector<double>& probs) {
  if (probs.size() != static_cast<size_t>(alpha.size()))
    throw InputError("bernoulli: expected one probability per symbol");
  double sum = 0;
  for (double p : probs) {
    if (p < 0) throw InputError("bernoulli: negative probability");
    sum += p;
  }
  if (!row_sum_ok(sum))
    throw InputError("bernoulli: probabilities sum to " +
                     format_double(sum) + ", expected 1");
  std::vector<ProbTransition> ts;
  for (int a = 0; a < alpha.size(); ++a)
    if (probs[a] > 0)
      ts.push_back({0, static_cast<uint8_t>(a), 0, probs[a]});
  return ProbTransducer(alpha, 1, 0, std::move(ts));
}

ProbTransducer markov(const AlignmentAlphabet& alpha, int order,
                      const std::vector<MarkovRow>& rows) {
  if (order < 0) throw InputError("markov: negative order");
  const int asz = alpha.size();
  std::map<Word, const MarkovRow*> table;
  for (const auto& row : rows) {
    if (static_cast<int>(row.context.size()) > order)
      throw InputError("markov: context longer than the order");
    if (row.probs.size() != static_cast<size_t>(asz))
      throw InputError("markov: expected one probability per symbol");
    double sum = 0;
    for (double p : row.probs) {
      if (p < 0) throw InputError("markov: negative probability");
      sum += p;
    }
    if (!row_sum_ok(sum))
      throw InputError("markov: context \"" +
                       word_to_string(alpha, row.context) + "\" sums to " +
                       format_double(sum) + ", expected 1");
    if (!table.emplace(row.context, &row).second)
      throw InputError("markov: duplicate context \"" +
                       word_to_string(alpha, row.context) + "\"");
  }

  // States are the contexts reachable from the empty one.
  std::map<Word, int32_t> ids;
  std::vector<Word> contexts{Word{}};
  ids.emplace(Word{}, 0);
  std::vector<ProbTransition> ts;
  for (size_t i = 0; i < contexts.size(); ++i) {
    Word ctx = contexts[i];
    auto it = table.find(ctx);
    if (it == table.end())
      throw InputError("markov: missing context row for \"" +
                       word_to_string(alpha, ctx) + "\"");
    for (int a = 0; a < asz; ++a) {
      double p = it->second->probs[a];
      if (p <= 0) continue;
      Word next = ctx;
      next.push_back(static_cast<uint8_t>(a));
      if (static_cast<int>(next.size()) > order)
        next.erase(next.begin());
      auto [jt, inserted] =
          ids.emplace(next, static_cast<int32_t>(contexts.size()));
      if (inserted) contexts.push_back(next);
      ts.push_back({static_cast<int32_t>(i), static_cast<uint8_t>(a),
                    jt->second, p});
    }
  }
  return ProbTransducer(alpha, static_cast<int>(contexts.size()), 0,
                        std::move(ts));
}

double word_probability(const ProbTransducer& g, const Word& w) {
  std::vector<double> cur(g.num_states(), 0.0), next(g.num_states());
  cur[g.initial()] = 1.0;
  for (uint8_t a : w) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int s = 0; s < g.num_states(); ++s) {
      if (cur[s] == 0.0) continue;
      for (const auto& t : g.row(s, a)) next[t.dst] += cur[s] * t.prob;
    }
    cur.swap(next);
  }
  double sum = 0;
  for (double v : cur) sum += v;
  return sum;
}

double language_probability(const ProbTransducer& g,
                            const std::vector<Word>& words) {
  double sum = 0;
  for (const auto& w : words) sum += word_probability(g, w);
  return sum;
}

ProbTransducer load_model(std::istream& in) {
  std::vector<std::string> alphabet_names;
  std::string match_name;
  int num_states = -1, initial = -1;
  std::vector<std::tuple<int, std::string, int, double>> raw_trans;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    auto bad = [&](const std::string& why) {
      return InputError("model file line " + std::to_string(lineno) + ": " +
                        why);
    };
    if (directive == "alphabet") {
      std::string name;
      while (ls >> name) alphabet_names.push_back(name);
      if (alphabet_names.empty()) throw bad("empty alphabet");
    } else if (directive == "match") {
      if (!(ls >> match_name)) throw bad("missing match symbol");
    } else if (directive == "states") {
      if (!(ls >> num_states) || num_states <= 0)
        throw bad("bad state count");
    } else if (directive == "initial") {
      if (!(ls >> initial)) throw bad("bad initial state");
    } else if (directive == "trans") {
      int src, dst;
      std::string sym;
      double prob;
      if (!(ls >> src >> sym >> dst >> prob))
        throw bad("malformed trans line");
      raw_trans.emplace_back(src, sym, dst, prob);
    } else {
      throw bad("unknown directive '" + directive + "'");
    }
  }
  if (alphabet_names.empty())
    throw InputError("model file: missing alphabet line");
  if (num_states < 0) throw InputError("model file: missing states line");
  if (initial < 0) throw InputError("model file: missing initial line");
  AlignmentAlphabet alpha(alphabet_names);
  if (!match_name.empty() && alpha.index_of(match_name) != alpha.match_index)
    throw InputError("model file: match symbol must be '1'");

  std::vector<ProbTransition> ts;
  for (const auto& [src, sym, dst, prob] : raw_trans) {
    int a = alpha.index_of(sym);
    if (a < 0)
      throw InputError("model file: unknown symbol '" + sym +
                       "' in trans line");
    ts.push_back({src, static_cast<uint8_t>(a), dst, prob});
  }
  ProbTransducer g(std::move(alpha), num_states, initial, std::move(ts));
  Diagnostics diag = validate(g);
  if (!diag.ok()) {
    std::string msg = "model file: invalid transducer";
    for (const auto& p : diag.problems) msg += "\n  " + p;
    throw InputError(msg);
  }
  return g;
}

ProbTransducer load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  return load_model(in);
}

std::string format_model(const ProbTransducer& g) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& s : g.alphabet().symbols) out << ' ' << s;
  out << "\nmatch " << g.alphabet().name(g.alphabet().match_index);
  out << "\nstates " << g.num_states();
  out << "\ninitial " << g.initial() << "\n";
  for (const auto& t : g.transitions())
    out << "trans " << t.src << ' ' << g.alphabet().name(t.symbol) << ' '
        << t.dst << ' ' << format_double(t.prob) << "\n";
  return out.str();
}

}  // namespace seedsens
