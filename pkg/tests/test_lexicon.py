from fractions import Fraction

import pytest

from passyntax.lexicon import (
    ADJECTIVE,
    ADVERB,
    NOUN,
    VERB,
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

from conftest import pools


def test_pos_parse_is_case_insensitive():
    assert PartOfSpeech.parse(" NOUN ") == NOUN
    assert PartOfSpeech.parse("Adj") == ADJECTIVE
    assert PartOfSpeech.parse("Preposition").tag == "preposition"
    assert not PartOfSpeech.parse("preposition").is_content
    with pytest.raises(LexiconError, match="xyz"):
        PartOfSpeech.parse("xyz")


class TestSynthetic:
    def test_total_and_w(self):
        lex = synthetic_oed_lexicon()
        assert lex.total == 218632
        assert int(lex.content_size) == 195207
        assert lex.content_size == Fraction(218632, 2) + Fraction(218632, 4) + Fraction(218632, 7)

    def test_pool_sizes_exact(self):
        lex = synthetic_oed_lexicon()
        assert lex.size(NOUN) == Fraction(218632, 2)
        assert lex.size(ADJECTIVE) == Fraction(218632, 4)
        assert lex.size(VERB) == Fraction(218632, 7)
        assert lex.size(VERB).denominator == 7

    def test_pool_fractions(self):
        # (T/2)/(25T/28) = 14/25 = 98/175, etc.
        assert pool_fractions(synthetic_oed_lexicon()).as_tuple() == (
            Fraction(98, 175), Fraction(49, 175), Fraction(28, 175))

    def test_merge_keeps_adjective_quarter(self):
        lex = synthetic_oed_lexicon()
        assert merge_adverbs(lex).size(ADJECTIVE) == Fraction(218632, 4)


class TestLoadWordlist:
    def test_basic(self):
        lex = load_wordlist(b"cat\tnoun\nred\tadjective\nrun\tverb\n")
        assert (lex.size(NOUN), lex.size(ADJECTIVE), lex.size(VERB)) == (1, 1, 1)
        assert lex.mode == "real"

    def test_duplicates_dropped(self):
        lex = load_wordlist(b"cat\tnoun\ncat\tnoun\n")
        assert lex.size(NOUN) == 1
        assert lex.duplicates_dropped == 1

    def test_canonicalisation_counts_as_duplicate(self):
        lex = load_wordlist(b"Cat\tnoun\n  cat \tNoun\n")
        assert lex.words(NOUN) == ("cat",)
        assert lex.duplicates_dropped == 1

    def test_adverb_merge(self):
        lex = load_wordlist(b"quickly\tadverb\n")
        assert "quickly" in lex.words(ADJECTIVE)
        assert lex.size(ADVERB) == 0

    def test_adverb_kept_without_merge(self):
        lex = load_wordlist(b"quickly\tadverb\n", merge=False)
        assert lex.words(ADVERB) == ("quickly",)

    def test_multi_tag_word_in_both_pools(self):
        lex = load_wordlist(b"run\tnoun\nrun\tverb\n")
        assert lex.words(NOUN) == ("run",) and lex.words(VERB) == ("run",)
        assert lex.content_size == 2

    def test_comments_and_blank_lines(self):
        lex = load_wordlist(b"# header\n\ncat\tnoun\n")
        assert lex.size(NOUN) == 1

    def test_other_pos_excluded_from_w(self):
        lex = load_wordlist(b"cat\tnoun\nthe\tdeterminer\n")
        assert lex.content_size == 1
        assert lex.total == 2

    def test_malformed_line_number(self):
        with pytest.raises(LexiconError, match="line 2"):
            load_wordlist(b"cat\tnoun\nbroken line\n")

    def test_unknown_tag(self):
        with pytest.raises(LexiconError, match="'gerundive'"):
            load_wordlist(b"cat\tgerundive\n")

    def test_empty(self, fixtures):
        with pytest.raises(LexiconError, match="empty lexicon"):
            load_wordlist((fixtures / "empty.tsv").read_bytes())
        with pytest.raises(LexiconError, match="empty lexicon"):
            load_wordlist(b"the\tdeterminer\n")

    def test_not_utf8(self):
        with pytest.raises(LexiconError, match="UTF-8"):
            load_wordlist(b"caf\xe9\tnoun\n")

    def test_plain_format(self):
        lex = load_wordlist(b"cat\ndog\n\ncat\n", format="plain", pos="noun")
        assert lex.words(NOUN) == ("cat", "dog")
        assert lex.duplicates_dropped == 1
        with pytest.raises(LexiconError):
            load_wordlist(b"cat\n", format="plain")

    def test_file_object(self, fixtures):
        with open(fixtures / "small.tsv", "rb") as fh:
            lex = load_wordlist(fh)
        assert (lex.size(NOUN), lex.size(ADJECTIVE), lex.size(VERB)) == (3, 2, 1)


def test_dump_is_sorted_and_stable():
    lex = load_wordlist(b"zebra\tnoun\nant\tnoun\nred\tadjective\n")
    out = dump_wordlist(lex)
    assert out == b"red\tadjective\nant\tnoun\nzebra\tnoun\n"
    assert dump_wordlist(load_wordlist(out)) == out


class TestMerge:
    def test_additive(self):
        merged = merge_adverbs(pools(adj=2, adv=3))
        assert merged.size(ADJECTIVE) == 5
        assert merged.size(ADVERB) == 0

    def test_idempotent(self):
        once = merge_adverbs(pools(noun=1, adj=2, adv=3))
        assert merge_adverbs(once) == once

    def test_synthetic_adverbs(self):
        lex = Lexicon.from_sizes({"adjective": Fraction(5, 2), "adverb": 1})
        assert merge_adverbs(lex).size(ADJECTIVE) == Fraction(7, 2)

    def test_shared_surface_form_not_duplicated(self):
        lex = Lexicon.from_pools({"adjective": ["fast"], "adverb": ["fast", "well"]})
        assert merge_adverbs(lex).words(ADJECTIVE) == ("fast", "well")


class TestPoolFractions:
    def test_symmetric(self):
        f = pool_fractions(pools(1, 1, 1))
        assert f.as_tuple() == (Fraction(1, 3),) * 3

    def test_direct_division(self):
        assert pool_fractions(pools(3, 2, 1)).as_tuple() == (
            Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))

    def test_requires_merge(self):
        with pytest.raises(LexiconError):
            pool_fractions(pools(1, 1, 1, adv=1))

    def test_empty(self):
        with pytest.raises(LexiconError, match="empty lexicon"):
            pool_fractions(Lexicon.from_pools({"determiner": ["the"]}))

    def test_must_sum_to_one(self):
        with pytest.raises(ValueError):
            PoolFractions(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
