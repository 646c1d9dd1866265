// Command-line toolkit for seed sensitivity: single-seed evaluation,
// exhaustive best-seed search and automaton size statistics.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "seedsens/design.hpp"
#include "seedsens/errors.hpp"
#include "seedsens/oracle.hpp"
#include "seedsens/sensitivity.hpp"

using namespace seedsens;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct ModelSetup {
  ProbTransducer model;
  SeedAlphabet seed_alphabet;
  std::string id;
};

SeedAlphabet default_alphabet_for(const AlignmentAlphabet& alignment) {
  if (alignment == AlignmentAlphabet::binary()) return SeedAlphabet::spaced();
  if (alignment == AlignmentAlphabet::dna_ternary())
    return SeedAlphabet::dna_subset();
  throw InputError(
      "--seed-alphabet is required for model alphabets other than {1,0} "
      "and {1,h,0}");
}

// The --model argument is either a file path or "bernoulli:p1,p2[,p3]"
// with one probability per alignment symbol.
ModelSetup resolve_model(const std::string& model_arg,
                         const std::string& alphabet_arg) {
  ModelSetup out;
  out.id = model_arg;
  const std::string prefix = "bernoulli:";
  if (model_arg.rfind(prefix, 0) == 0) {
    std::vector<double> probs;
    std::string list = model_arg.substr(prefix.size());
    size_t pos = 0;
    while (pos <= list.size()) {
      size_t end = list.find(',', pos);
      if (end == std::string::npos) end = list.size();
      try {
        probs.push_back(std::stod(list.substr(pos, end - pos)));
      } catch (const std::exception&) {
        throw InputError("--model: bad probability in '" + model_arg + "'");
      }
      pos = end + 1;
    }
    if (!alphabet_arg.empty()) {
      out.seed_alphabet = SeedAlphabet::parse(alphabet_arg);
    } else if (probs.size() == 2) {
      out.seed_alphabet = SeedAlphabet::spaced();
    } else if (probs.size() == 3) {
      out.seed_alphabet = SeedAlphabet::dna_subset();
    } else {
      throw InputError(
          "--model bernoulli: needs --seed-alphabet for alphabets of size " +
          std::to_string(probs.size()));
    }
    if (probs.size() !=
        static_cast<size_t>(out.seed_alphabet.alignment.size()))
      throw InputError(
          "--model bernoulli: expected one probability per alignment "
          "symbol");
    out.model = bernoulli(out.seed_alphabet.alignment, probs);
    return out;
  }

  out.model = load_model_file(model_arg);
  out.seed_alphabet = alphabet_arg.empty()
                          ? default_alphabet_for(out.model.alphabet())
                          : SeedAlphabet::parse(alphabet_arg,
                                                out.model.alphabet());
  return out;
}

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SensArgs {
  std::string seed, model, alphabet;
  int length = 0;
  bool oracle = false;
  bool verbose = false;
};

int run_sens(const SensArgs& args) {
  ModelSetup setup = resolve_model(args.model, args.alphabet);
  Seed seed = parse_seed(args.seed, setup.seed_alphabet);
  SensitivityResult res = compute_sensitivity(seed, args.length, setup.model);
  std::printf("%.6f\n", res.sensitivity);
  if (args.verbose)
    std::printf("# target %d spi %d product %d pw %d steps %d\n",
                res.diag.target_states, res.diag.spi_states,
                res.diag.k_states, res.diag.w_states, res.diag.steps);
  if (args.oracle) {
    double ref = oracle::brute_force_sensitivity(seed, args.length,
                                                 setup.model);
    double delta = res.sensitivity - ref;
    std::printf("oracle %.6f delta %.3e\n", ref, delta);
    if (std::abs(delta) > 1e-9) {
      std::fprintf(stderr, "error: oracle cross-check failed\n");
      return kExitInternal;
    }
  }
  return kExitOk;
}

struct DesignArgs {
  std::string mode = "spaced";
  double weight = 0;
  int span_max = 0;
  int at_count = -1;  // default depends on mode
  std::string model, alphabet;
  int length = 0;
  int top = 1;
  bool no_anchor = false;
  bool machine = false;
  int jobs = 0;
};

EnumSpec make_spec(const std::string& mode, double weight, int span_max,
                   int at_count, bool no_anchor) {
  EnumSpec spec;
  spec.mode = mode == "spaced" ? SeedMode::spaced : SeedMode::subset;
  spec.weight = weight;
  spec.max_span = span_max;
  spec.at_count = spec.mode == SeedMode::subset
                      ? (at_count < 0 ? 2 : at_count)
                      : 0;
  spec.anchored = !no_anchor;
  return spec;
}

int run_design(const DesignArgs& args) {
  ModelSetup setup = resolve_model(args.model, args.alphabet);
  EnumSpec spec = make_spec(args.mode, args.weight, args.span_max,
                            args.at_count, args.no_anchor);
  int jobs = args.jobs > 0 ? args.jobs : default_jobs();
  DesignResult res = best_seed(spec, setup.seed_alphabet, setup.model,
                               args.length, args.top, jobs, setup.id);
  for (const SeedScore& score : res.top)
    std::printf(args.machine ? "%s\t%.6f\n" : "%s %.6f\n",
                score.glyphs.c_str(), score.sensitivity);
  return kExitOk;
}

struct StatsArgs {
  std::string mode = "spaced";
  std::vector<double> weights;
  int span_max = 0;
  int span_plus = -1;
  int at_count = -1;
  std::string alphabet;
  bool no_anchor = false;
  bool machine = false;
  int jobs = 0;
};

int run_stats(const StatsArgs& args) {
  SeedAlphabet sa;
  if (!args.alphabet.empty())
    sa = SeedAlphabet::parse(args.alphabet);
  else
    sa = args.mode == "spaced" ? SeedAlphabet::spaced()
                               : SeedAlphabet::dna_subset();
  if (args.span_max > 0 && args.span_plus >= 0)
    throw InputError("--span-max and --span-plus are mutually exclusive");
  if (args.span_max > 0 && args.weights.size() > 1)
    throw InputError("--span-max requires a single --weight; use "
                     "--span-plus for multiple weights");
  int jobs = args.jobs > 0 ? args.jobs : default_jobs();
  for (double w : args.weights) {
    int span_max = args.span_max;
    if (span_max <= 0) {
      // Default caps reproduce the published size comparison.
      int plus = args.span_plus >= 0 ? args.span_plus
                                     : (args.mode == "spaced" ? 7 : 6);
      span_max = static_cast<int>(std::llround(w)) + plus;
    }
    EnumSpec spec =
        make_spec(args.mode, w, span_max, args.at_count, args.no_anchor);
    StatsRow row = automaton_stats(spec, sa, jobs);
    if (row.num_seeds == 0) {
      std::fprintf(stderr, "warning: no seeds for weight %g\n", w);
      continue;
    }
    if (args.machine)
      std::printf("%g\t%.2f\t%.2f\t%.2f\n", row.weight, row.ac_avg,
                  row.spi_avg, row.min_avg);
    else
      std::printf("%g %.2f %.2f %.2f %.2f %.2f\n", row.weight, row.ac_avg,
                  row.ac_delta, row.spi_avg, row.spi_delta, row.min_avg);
  }
  return kExitOk;
}

struct DumpArgs {
  std::string seed;
  std::string alphabet = "spaced";
  std::string what = "spi";
};

int run_dump(const DumpArgs& args) {
  SeedAlphabet sa = SeedAlphabet::parse(args.alphabet);
  Seed seed = parse_seed(args.seed, sa);
  Dfa dfa;
  if (args.what == "spi")
    dfa = build_spi_automaton(seed);
  else if (args.what == "ac")
    dfa = aho_corasick_hit_dfa(sa.alignment, matched_fragments(seed));
  else if (args.what == "min")
    dfa = minimize(build_spi_automaton(seed));
  else
    throw InputError("--what must be spi, ac or min");
  std::fputs(dump_dfa(dfa).c_str(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seed sensitivity toolkit"};
  app.require_subcommand(1);

  SensArgs sens;
  CLI::App* sens_cmd =
      app.add_subcommand("sens", "sensitivity of one seed");
  sens_cmd->add_option("--seed", sens.seed, "seed glyph string")->required();
  sens_cmd->add_option("--model", sens.model,
                       "model file or bernoulli:p1,p2[,p3]")
      ->required();
  sens_cmd->add_option("--length", sens.length, "target alignment length")
      ->required();
  sens_cmd->add_option("--seed-alphabet", sens.alphabet,
                       "seed alphabet spec or preset (spaced, dna-subset)");
  sens_cmd->add_flag("--oracle", sens.oracle,
                     "cross-check against the brute-force oracle");
  sens_cmd->add_flag("--verbose", sens.verbose, "print automaton sizes");

  DesignArgs design;
  CLI::App* design_cmd =
      app.add_subcommand("design", "exhaustive best-seed search");
  design_cmd->add_option("--mode", design.mode, "spaced or subset")
      ->check(CLI::IsMember({"spaced", "subset"}));
  design_cmd->add_option("--weight", design.weight, "design weight target")
      ->required();
  design_cmd->add_option("--span-max", design.span_max, "maximum span")
      ->required();
  design_cmd->add_option("--at", design.at_count,
                         "'@' letters per seed (subset mode, default 2)");
  design_cmd->add_option("--model", design.model, "probability model")
      ->required();
  design_cmd->add_option("--length", design.length, "target length")
      ->required();
  design_cmd->add_option("--top", design.top, "how many seeds to report");
  design_cmd->add_flag("--no-anchor", design.no_anchor,
                       "allow '_' at the seed ends");
  design_cmd->add_flag("--machine", design.machine, "tab-separated output");
  design_cmd->add_option("--jobs", design.jobs, "worker threads");
  design_cmd->add_option("--seed-alphabet", design.alphabet,
                         "seed alphabet spec or preset");

  StatsArgs stats;
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "average automaton sizes over a seed universe");
  stats_cmd->add_option("--mode", stats.mode, "spaced or subset")
      ->check(CLI::IsMember({"spaced", "subset"}));
  stats_cmd->add_option("--weight", stats.weights, "weights, comma separated")
      ->required()
      ->delimiter(',');
  stats_cmd->add_option("--span-max", stats.span_max,
                        "absolute span cap (single weight only)");
  stats_cmd->add_option("--span-plus", stats.span_plus,
                        "span cap = weight + this (default 7 spaced, "
                        "6 subset)");
  stats_cmd->add_option("--at", stats.at_count,
                        "'@' letters per seed (subset mode, default 2)");
  stats_cmd->add_option("--seed-alphabet", stats.alphabet,
                        "seed alphabet spec or preset");
  stats_cmd->add_flag("--no-anchor", stats.no_anchor,
                      "allow '_' at the seed ends");
  stats_cmd->add_flag("--machine", stats.machine, "tab-separated output");
  stats_cmd->add_option("--jobs", stats.jobs, "worker threads");

  DumpArgs dump;
  CLI::App* dump_cmd =
      app.add_subcommand("dump", "print a seed automaton as text");
  dump_cmd->add_option("--seed", dump.seed, "seed glyph string")->required();
  dump_cmd->add_option("--seed-alphabet", dump.alphabet,
                       "seed alphabet spec or preset");
  dump_cmd->add_option("--what", dump.what, "spi, ac or min");

  try {
    app.parse(argc, argv);
    if (sens_cmd->parsed()) return run_sens(sens);
    if (design_cmd->parsed()) return run_design(design);
    if (stats_cmd->parsed()) return run_stats(stats);
    if (dump_cmd->parsed()) return run_dump(dump);
    return kExitInput;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResource;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
