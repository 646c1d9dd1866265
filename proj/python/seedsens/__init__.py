"""Sensitivity of spaced and subset seeds via automata products.

The heavy lifting lives in the compiled extension; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    AlignmentAlphabet,
    DesignResult,
    Dfa,
    EnumSpec,
    InputError,
    ProbTransducer,
    ResourceError,
    Seed,
    SeedAlphabet,
    SeedMode,
    SeedScore,
    SensitivityResult,
    StatsRow,
    __version__,
    aho_corasick_hit_dfa,
    automaton_stats,
    bernoulli,
    best_seed,
    brute_force_sensitivity,
    build_spi_automaton,
    compute_sensitivity,
    enumerate_seeds,
    equivalent,
    format_model,
    load_model,
    markov,
    matched_fragments,
    minimize,
    parse_seed,
    product_intersection,
    seed_hits,
    target_all_words,
    word_probability,
)
