"""Search-space arithmetic for syntactic vs random-word passphrases."""

from .entropy import (
    Cardinality,
    ShrinkFactor,
    compensation_words,
    crossover_n,
    entropy_bits,
    search_space_expected,
    search_space_random,
    search_space_template,
    shrink_divider,
    template_dominance,
    weighted_content_fraction,
)
from .generator import (
    PhraseSample,
    RandomSource,
    generate_random_words,
    generate_template_phrase,
    render_phrase,
)
from .grammar import (
    ContentFractions,
    FrequencyTable,
    Template,
    book_frequency_table,
    default_template,
    load_frequency_table,
    parse_template,
    refine_to_content,
)
from .lexicon import (
    Lexicon,
    LexiconError,
    PartOfSpeech,
    PoolFractions,
    dump_wordlist,
    load_wordlist,
    merge_adverbs,
    pool_fractions,
    synthetic_oed_lexicon,
)
from .oracle import (
    AttackReport,
    EnumerationLimitError,
    enumerate_template,
    simulate_guessing,
    verify_cardinality,
)

__version__ = "0.1.0"
