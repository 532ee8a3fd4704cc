import math
from collections import Counter

import pytest
from scipy.stats import chisquare

from passyntax.entropy import entropy_bits, search_space_template
from passyntax.generator import (
    PhraseSample,
    RandomSource,
    generate_random_words,
    generate_template_phrase,
    render_phrase,
)
from passyntax.grammar import default_template, parse_template
from passyntax.lexicon import ADJECTIVE, NOUN, VERB, LexiconError, synthetic_oed_lexicon

from conftest import pools


class TestRandomSource:
    def test_seed_range(self):
        RandomSource.seeded(2 ** 64 - 1)
        with pytest.raises(ValueError):
            RandomSource.seeded(2 ** 64)
        with pytest.raises(ValueError):
            RandomSource.seeded(-1)

    def test_seeded_is_deterministic(self):
        a = [RandomSource.seeded(5).randbelow(1000) for _ in range(3)]
        b = [RandomSource.seeded(5).randbelow(1000) for _ in range(3)]
        assert a == b

    def test_system_range(self):
        rng = RandomSource.system()
        assert all(0 <= rng.randbelow(7) < 7 for _ in range(200))

    def test_bound_one(self):
        assert RandomSource.seeded(0).randbelow(1) == 0

    def test_rejects_nonpositive_bound(self):
        with pytest.raises(ValueError):
            RandomSource.seeded(0).randbelow(0)

    def test_rejection_not_modulo(self):
        # For n = 3 only 2-bit draws 0, 1, 2 are accepted; a draw of 3 is retried, never folded to 0.
        class Scripted(RandomSource):
            def __init__(self, draws):
                self.kind, self.seed = "seeded", 0
                it = iter(draws)
                self._bits = lambda k: next(it)

        assert Scripted([3, 3, 1]).randbelow(3) == 1


class TestRandomWords:
    def test_bits(self):
        s = generate_random_words(pools(2, 1, 1), 3, RandomSource.seeded(1))
        assert s.claimed_bits == 6.0
        assert len(s.words) == 3
        assert s.strategy == "random_words"

    def test_same_seed_same_phrase(self, fixtures):
        from passyntax.lexicon import load_wordlist
        lex = load_wordlist((fixtures / "medium.tsv").read_bytes())
        a = generate_random_words(lex, 6, RandomSource.seeded(42))
        b = generate_random_words(lex, 6, RandomSource.seeded(42))
        assert a == b

    def test_bits_for_w(self):
        # 8 * log2(195207), mpmath at 30 digits
        big = pools(noun=195207)
        s = generate_random_words(big, 8, RandomSource.seeded(0))
        assert s.claimed_bits == pytest.approx(140.597162099201485562292473381, rel=1e-12)

    def test_words_from_content_only(self):
        from passyntax.lexicon import Lexicon
        lex = Lexicon.from_pools({"noun": ["cat"], "determiner": ["the"]})
        s = generate_random_words(lex, 20, RandomSource.seeded(3))
        assert set(s.words) == {"cat"}

    def test_errors(self):
        with pytest.raises(LexiconError, match="cannot sample synthetic pools"):
            generate_random_words(synthetic_oed_lexicon(), 3, RandomSource.seeded(0))
        with pytest.raises(ValueError):
            generate_random_words(pools(1, 1, 1), 0, RandomSource.seeded(0))


class TestTemplatePhrase:
    def test_bits(self):
        lex = pools(3, 2, 1)
        s = generate_template_phrase(lex, parse_template("adj noun"), RandomSource.seeded(9))
        assert s.claimed_bits == pytest.approx(2.58496250072115618145373894395, rel=1e-12)
        assert s.words[0] in lex.words(ADJECTIVE)
        assert s.words[1] in lex.words(NOUN)

    def test_single_verb_slot_zero_bits(self):
        s = generate_template_phrase(pools(3, 2, 1), parse_template("verb"), RandomSource.seeded(9))
        assert s.claimed_bits == 0

    def test_default_template(self):
        lex = pools(4, 4, 4)
        s = generate_template_phrase(lex, default_template(), RandomSource.seeded(9))
        assert s.claimed_bits == 16.0
        # adverb slot (index 2) drew from adjectives
        assert s.words[2] in lex.words(ADJECTIVE)
        assert s.words[3] in lex.words(VERB)

    def test_empty_pool(self):
        with pytest.raises(LexiconError, match=r"slot 2 \(verb\)"):
            generate_template_phrase(pools(3, 2, 0), parse_template("noun verb"), RandomSource.seeded(0))

    def test_synthetic(self):
        with pytest.raises(LexiconError):
            generate_template_phrase(synthetic_oed_lexicon(), default_template(), RandomSource.seeded(0))

    def test_bits_match_cardinality(self):
        lex = pools(5, 3, 7)
        t = parse_template("adj noun verb noun")
        s = generate_template_phrase(lex, t, RandomSource.seeded(1))
        assert s.claimed_bits == pytest.approx(entropy_bits(search_space_template(lex, t)), abs=1e-8)
        assert dict(s.lexicon_fingerprint)["noun"] == 5


@pytest.mark.parametrize("words,sep,expected", [
    (("red", "cat"), " ", "red cat"),
    (("a",), "-", "a"),
    (("x", "y", "z"), "", "xyz"),
])
def test_render(words, sep, expected):
    s = PhraseSample(words, "random_words", 0.0, ())
    assert render_phrase(s, sep) == expected


def test_render_default_separator():
    assert render_phrase(PhraseSample(("a", "b"), "random_words", 0.0, ())) == "a b"


@pytest.mark.parametrize("size", [3, 5, 6, 7, 11, 20])
def test_uniform_chi_square(size):
    lex = pools(noun=size)
    rng = RandomSource.seeded(size)
    draws = 100 * size
    sample = generate_random_words(lex, draws, rng)
    counts = Counter(sample.words)
    observed = [counts[w] for w in lex.words(NOUN)]
    assert sum(observed) == draws
    assert chisquare(observed).pvalue > 0.001
