#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seedsens/design.hpp"
#include "seedsens/errors.hpp"
#include "seedsens/oracle.hpp"
#include "seedsens/sensitivity.hpp"

namespace py = pybind11;
using namespace seedsens;

namespace {

Word to_word(const AlignmentAlphabet& a, const std::string& text) {
  return word_from_string(a, text);
}

std::vector<Word> to_words(const AlignmentAlphabet& a,
                           const std::vector<std::string>& texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(to_word(a, t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spaced/subset seed sensitivity via automata products";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError",
                                        PyExc_RuntimeError);

  py::class_<AlignmentAlphabet>(m, "AlignmentAlphabet")
      .def(py::init<std::vector<std::string>>(), py::arg("symbols"))
      .def_readonly("symbols", &AlignmentAlphabet::symbols)
      .def_readonly("match_index", &AlignmentAlphabet::match_index)
      .def("__len__", &AlignmentAlphabet::size)
      .def("__eq__", [](const AlignmentAlphabet& a,
                        const AlignmentAlphabet& b) { return a == b; })
      .def("__repr__", [](const AlignmentAlphabet& a) {
        std::string out = "AlignmentAlphabet([";
        for (size_t i = 0; i < a.symbols.size(); ++i)
          out += (i ? ", '" : "'") + a.symbols[i] + "'";
        return out + "])";
      });

  py::class_<SeedAlphabet>(m, "SeedAlphabet")
      .def_static("parse",
                  py::overload_cast<const std::string&>(&SeedAlphabet::parse),
                  py::arg("spec"))
      .def_static("spaced", &SeedAlphabet::spaced)
      .def_static("dna_subset", &SeedAlphabet::dna_subset)
      .def_readonly("alignment", &SeedAlphabet::alignment)
      .def("spec_string", &SeedAlphabet::spec_string)
      .def("__repr__", [](const SeedAlphabet& a) {
        return "SeedAlphabet('" + a.spec_string() + "')";
      });

  py::class_<Seed>(m, "Seed")
      .def_readonly("glyphs", &Seed::glyphs)
      .def_property_readonly("span", &Seed::span)
      .def_property_readonly("r", &Seed::r)
      .def_property_readonly("w_count", &Seed::w_count)
      .def_property_readonly("design_weight", &Seed::design_weight)
      .def_readonly("hash_positions", &Seed::hash_positions)
      .def("__repr__",
           [](const Seed& s) { return "Seed('" + s.glyphs + "')"; });

  py::class_<Dfa>(m, "Dfa")
      .def_readonly("num_states", &Dfa::num_states)
      .def_readonly("initial", &Dfa::initial)
      .def_property_readonly("finals", &Dfa::final_ids)
      .def("accepts",
           [](const Dfa& d, const std::string& word) {
             return accepts(d, to_word(d.alphabet, word));
           },
           py::arg("word"))
      .def("dump", &dump_dfa)
      .def("__repr__", [](const Dfa& d) {
        return "Dfa(num_states=" + std::to_string(d.num_states) + ")";
      });

  py::class_<ProbTransducer>(m, "ProbTransducer")
      .def_property_readonly("num_states", &ProbTransducer::num_states)
      .def_property_readonly("alphabet", &ProbTransducer::alphabet)
      .def("deterministic", &ProbTransducer::deterministic)
      .def("__repr__", [](const ProbTransducer& g) {
        return "ProbTransducer(num_states=" +
               std::to_string(g.num_states()) + ")";
      });

  py::class_<SensitivityResult>(m, "SensitivityResult")
      .def_readonly("p_joint", &SensitivityResult::p_joint)
      .def_readonly("p_target", &SensitivityResult::p_target)
      .def_readonly("sensitivity", &SensitivityResult::sensitivity)
      .def_property_readonly("spi_states",
                             [](const SensitivityResult& r) {
                               return r.diag.spi_states;
                             })
      .def_property_readonly("pw_states",
                             [](const SensitivityResult& r) {
                               return r.diag.w_states;
                             })
      .def("__repr__", [](const SensitivityResult& r) {
        return "SensitivityResult(sensitivity=" +
               std::to_string(r.sensitivity) + ")";
      });

  m.def("parse_seed", &parse_seed, py::arg("text"), py::arg("alphabet"));
  m.def(
      "matched_fragments",
      [](const Seed& seed, size_t cap) {
        std::vector<std::string> out;
        for (const Word& w : matched_fragments(seed, cap))
          out.push_back(word_to_string(seed.alphabet.alignment, w));
        return out;
      },
      py::arg("seed"), py::arg("cap") = kDefaultFragmentCap);
  m.def("build_spi_automaton", &build_spi_automaton, py::arg("seed"));
  m.def(
      "aho_corasick_hit_dfa",
      [](const AlignmentAlphabet& a, const std::vector<std::string>& pats) {
        return aho_corasick_hit_dfa(a, to_words(a, pats));
      },
      py::arg("alphabet"), py::arg("patterns"));
  m.def("minimize", &minimize, py::arg("dfa"));
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def("product_intersection", &product_intersection, py::arg("a"),
        py::arg("b"));
  m.def("target_all_words", &target_all_words, py::arg("alphabet"),
        py::arg("n"));

  m.def("bernoulli", &bernoulli, py::arg("alphabet"), py::arg("probs"));
  m.def(
      "markov",
      [](const AlignmentAlphabet& a, int order,
         const std::vector<std::pair<std::string, std::vector<double>>>&
             rows) {
        std::vector<MarkovRow> converted;
        for (const auto& [ctx, probs] : rows)
          converted.push_back({to_word(a, ctx), probs});
        return markov(a, order, converted);
      },
      py::arg("alphabet"), py::arg("order"), py::arg("rows"));
  m.def("load_model", &load_model_file, py::arg("path"));
  m.def("format_model", &format_model, py::arg("model"));
  m.def(
      "word_probability",
      [](const ProbTransducer& g, const std::string& word) {
        return word_probability(g, to_word(g.alphabet(), word));
      },
      py::arg("model"), py::arg("word"));

  m.def(
      "compute_sensitivity",
      [](const Seed& seed, int n, const ProbTransducer& g) {
        return compute_sensitivity(seed, n, g);
      },
      py::arg("seed"), py::arg("n"), py::arg("model"));
  m.def("brute_force_sensitivity", &oracle::brute_force_sensitivity,
        py::arg("seed"), py::arg("n"), py::arg("model"),
        py::arg("word_cap") = oracle::kDefaultWordCap);
  m.def(
      "seed_hits",
      [](const Seed& seed, const std::string& word) {
        return oracle::hits(seed,
                            to_word(seed.alphabet.alignment, word));
      },
      py::arg("seed"), py::arg("word"));

  py::enum_<SeedMode>(m, "SeedMode")
      .value("spaced", SeedMode::spaced)
      .value("subset", SeedMode::subset);

  py::class_<EnumSpec>(m, "EnumSpec")
      .def(py::init([](SeedMode mode, double weight, int max_span,
                       int at_count, bool anchored) {
             return EnumSpec{mode, weight, max_span, at_count, anchored};
           }),
           py::arg("mode"), py::arg("weight"), py::arg("max_span"),
           py::arg("at_count") = 0, py::arg("anchored") = true)
      .def_readwrite("mode", &EnumSpec::mode)
      .def_readwrite("weight", &EnumSpec::weight)
      .def_readwrite("max_span", &EnumSpec::max_span)
      .def_readwrite("at_count", &EnumSpec::at_count)
      .def_readwrite("anchored", &EnumSpec::anchored);

  py::class_<SeedScore>(m, "SeedScore")
      .def_readonly("glyphs", &SeedScore::glyphs)
      .def_readonly("sensitivity", &SeedScore::sensitivity)
      .def_readonly("model_id", &SeedScore::model_id)
      .def_readonly("target_length", &SeedScore::target_length)
      .def("__repr__", [](const SeedScore& s) {
        return "SeedScore('" + s.glyphs + "', " +
               std::to_string(s.sensitivity) + ")";
      });

  py::class_<DesignResult>(m, "DesignResult")
      .def_readonly("top", &DesignResult::top)
      .def_readonly("num_candidates", &DesignResult::num_candidates);

  py::class_<StatsRow>(m, "StatsRow")
      .def_readonly("weight", &StatsRow::weight)
      .def_readonly("num_seeds", &StatsRow::num_seeds)
      .def_readonly("ac_avg", &StatsRow::ac_avg)
      .def_readonly("spi_avg", &StatsRow::spi_avg)
      .def_readonly("min_avg", &StatsRow::min_avg)
      .def_readonly("ac_delta", &StatsRow::ac_delta)
      .def_readonly("spi_delta", &StatsRow::spi_delta);

  m.def("enumerate_seeds", &enumerate_seed_strings, py::arg("spec"),
        py::arg("alphabet"));
  m.def(
      "best_seed",
      [](const EnumSpec& spec, const SeedAlphabet& alphabet,
         const ProbTransducer& g, int n, int top_k, int jobs,
         const std::string& model_id) {
        py::gil_scoped_release release;
        return best_seed(spec, alphabet, g, n, top_k, jobs, model_id);
      },
      py::arg("spec"), py::arg("alphabet"), py::arg("model"), py::arg("n"),
      py::arg("top_k") = 1, py::arg("jobs") = 1, py::arg("model_id") = "");
  m.def(
      "automaton_stats",
      [](const EnumSpec& spec, const SeedAlphabet& alphabet, int jobs) {
        py::gil_scoped_release release;
        return automaton_stats(spec, alphabet, jobs);
      },
      py::arg("spec"), py::arg("alphabet"), py::arg("jobs") = 1);

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
