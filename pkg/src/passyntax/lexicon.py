"""Part-of-speech partitioned word pools.

A :class:`Lexicon` is either *real* (explicit word lists per part of speech)
or *synthetic* (only exact rational pool sizes, no words).  Synthetic pools
are what the dictionary-count model below produces; ``T/7`` is not an
integer, so sizes stay :class:`~fractions.Fraction` until someone floors them.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import BinaryIO, Iterable, Mapping, Union

__all__ = [
    "LexiconError",
    "PartOfSpeech",
    "NOUN",
    "ADJECTIVE",
    "ADVERB",
    "VERB",
    "CONTENT_POS",
    "Lexicon",
    "PoolFractions",
    "OED_CURRENT_ENTRIES",
    "OED_OBSOLETE_ENTRIES",
    "OED_SUBENTRIES",
    "synthetic_oed_lexicon",
    "load_wordlist",
    "dump_wordlist",
    "merge_adverbs",
    "pool_fractions",
]

Size = Union[int, Fraction]


class LexiconError(ValueError):
    """Bad wordlist input or an unusable lexicon."""


_ALIASES = {
    "n": "noun",
    "noun": "noun",
    "nouns": "noun",
    "adj": "adjective",
    "adjective": "adjective",
    "adjectives": "adjective",
    "adv": "adverb",
    "adverb": "adverb",
    "adverbs": "adverb",
    "v": "verb",
    "verb": "verb",
    "verbs": "verb",
}

# Non-content classes we recognise.  They are kept in the lexicon but never
# count toward the content total.
OTHER_TAGS = frozenset({
    "conjunction", "determiner", "article", "preposition", "pronoun",
    "interjection", "exclamation", "numeral", "particle", "suffix",
    "prefix", "punctuation", "symbol", "other",
})

_SHORT = {"noun": "noun", "adjective": "adj", "adverb": "adv", "verb": "verb"}


@dataclass(frozen=True, order=True)
class PartOfSpeech:
    """A word class.  ``tag`` is always the canonical lowercase name."""

    tag: str

    @classmethod
    def parse(cls, text: str) -> "PartOfSpeech":
        key = text.strip().lower()
        if key in _ALIASES:
            return cls(_ALIASES[key])
        if key in OTHER_TAGS:
            return cls(key)
        raise LexiconError(f"unknown part-of-speech tag {text.strip()!r}")

    @property
    def is_content(self) -> bool:
        return self.tag in _SHORT

    @property
    def short(self) -> str:
        """Token used by the template DSL (``adj``, ``adv``, ...)."""
        return _SHORT.get(self.tag, self.tag)

    def __str__(self) -> str:
        return self.tag


NOUN = PartOfSpeech("noun")
ADJECTIVE = PartOfSpeech("adjective")
ADVERB = PartOfSpeech("adverb")
VERB = PartOfSpeech("verb")
CONTENT_POS = (NOUN, ADJECTIVE, VERB)


def _canon(word: str) -> str:
    return word.strip().lower()


@dataclass(frozen=True)
class Lexicon:
    """Immutable PoS -> pool mapping.

    In real mode ``pools`` maps each PoS to a tuple of unique canonical words.
    In synthetic mode ``sizes`` maps each PoS to an exact rational size and
    ``pools`` is empty.
    """

    mode: str
    pools: Mapping[PartOfSpeech, tuple[str, ...]] = field(default_factory=dict)
    sizes: Mapping[PartOfSpeech, Fraction] = field(default_factory=dict)
    duplicates_dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.mode not in ("real", "synthetic"):
            raise LexiconError(f"unknown lexicon mode {self.mode!r}")
        if self.mode == "real":
            for pos, words in self.pools.items():
                if len(set(words)) != len(words):
                    raise LexiconError(f"duplicate words in {pos} pool")
        else:
            for pos, size in self.sizes.items():
                if size < 0:
                    raise LexiconError(f"negative pool size for {pos}")

    @classmethod
    def from_pools(cls, pools: Mapping[PartOfSpeech | str, Iterable[str]]) -> "Lexicon":
        """Build a real lexicon from plain word iterables (canonicalised, deduplicated)."""
        out: dict[PartOfSpeech, tuple[str, ...]] = {}
        for pos, words in pools.items():
            if not isinstance(pos, PartOfSpeech):
                pos = PartOfSpeech.parse(pos)
            merged = list(out.get(pos, ()))
            seen = set(merged)
            for w in words:
                w = _canon(w)
                if w and w not in seen:
                    seen.add(w)
                    merged.append(w)
            out[pos] = tuple(merged)
        return cls("real", pools=out)

    @classmethod
    def from_sizes(cls, sizes: Mapping[PartOfSpeech | str, Size]) -> "Lexicon":
        return cls("synthetic", sizes={
            (p if isinstance(p, PartOfSpeech) else PartOfSpeech.parse(p)): Fraction(s)
            for p, s in sizes.items()
        })

    @property
    def is_synthetic(self) -> bool:
        return self.mode == "synthetic"

    def tags(self) -> list[PartOfSpeech]:
        src = self.sizes if self.is_synthetic else self.pools
        return sorted(src)

    def size(self, pos: PartOfSpeech) -> Size:
        """Pool size: an ``int`` in real mode, a ``Fraction`` in synthetic mode."""
        if self.is_synthetic:
            return self.sizes.get(pos, Fraction(0))
        return len(self.pools.get(pos, ()))

    def words(self, pos: PartOfSpeech) -> tuple[str, ...]:
        if self.is_synthetic:
            raise LexiconError("synthetic lexicon has no word lists")
        return self.pools.get(pos, ())

    @property
    def content_size(self) -> Size:
        """W: nouns + adjectives + verbs, plus adverbs if they have not been merged yet."""
        return sum((self.size(p) for p in (NOUN, ADJECTIVE, ADVERB, VERB)),
                   Fraction(0) if self.is_synthetic else 0)

    @property
    def total(self) -> Size:
        """Every pool, content or not."""
        return sum((self.size(p) for p in self.tags()),
                   Fraction(0) if self.is_synthetic else 0)

    @property
    def is_merged(self) -> bool:
        return self.size(ADVERB) == 0

    def content_words(self) -> tuple[str, ...]:
        """Concatenation of the content pools, noun, adjective, adverb, verb.

        A word tagged with two classes shows up twice, so ``len`` of the
        result is exactly :attr:`content_size`.
        """
        return tuple(w for p in (NOUN, ADJECTIVE, ADVERB, VERB) for w in self.words(p))

    def fingerprint(self) -> tuple[tuple[str, Size], ...]:
        return tuple((p.tag, self.size(p)) for p in self.tags())


@dataclass(frozen=True)
class PoolFractions:
    noun: Fraction
    adjective: Fraction
    verb: Fraction

    def __post_init__(self):
        for v in (self.noun, self.adjective, self.verb):
            if not 0 <= v <= 1:
                raise ValueError(f"pool fraction {v} outside [0, 1]")
        if self.noun + self.adjective + self.verb != 1:
            raise ValueError("pool fractions must sum to exactly 1")

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.noun, self.adjective, self.verb)


# Entry counts of the 20-volume second edition.
OED_CURRENT_ENTRIES = 171476
OED_OBSOLETE_ENTRIES = 47156
# Derivative subentries: quoted alongside the counts above but never added to T.
OED_SUBENTRIES = 9500


def synthetic_oed_lexicon() -> Lexicon:
    """Pool-size model of the OED: half nouns, a quarter adjectives, a seventh verbs.

    T = 171476 + 47156.  Adverbs are treated as already folded into the
    adjective quarter, so the adverb pool is empty.  Whatever is left of T
    (exclamations, conjunctions, ...) sits in an ``other`` pool so that
    ``total`` is exactly T while ``content_size`` is W.
    """
    t = OED_CURRENT_ENTRIES + OED_OBSOLETE_ENTRIES
    noun, adj, verb = Fraction(t, 2), Fraction(t, 4), Fraction(t, 7)
    return Lexicon.from_sizes({
        NOUN: noun,
        ADJECTIVE: adj,
        ADVERB: Fraction(0),
        VERB: verb,
        PartOfSpeech("other"): t - noun - adj - verb,
    })


def merge_adverbs(lexicon: Lexicon) -> Lexicon:
    """Fold the adverb pool into the adjective pool.  Idempotent.

    For real lexicons, an adverb whose surface form is already in the
    adjective pool is not added a second time.
    """
    if lexicon.is_merged:
        return lexicon
    if lexicon.is_synthetic:
        sizes = dict(lexicon.sizes)
        sizes[ADJECTIVE] = sizes.get(ADJECTIVE, Fraction(0)) + sizes[ADVERB]
        sizes[ADVERB] = Fraction(0)
        return Lexicon("synthetic", sizes=sizes)
    pools = dict(lexicon.pools)
    adj = list(pools.get(ADJECTIVE, ()))
    seen = set(adj)
    adj.extend(w for w in pools[ADVERB] if w not in seen)
    pools[ADJECTIVE] = tuple(adj)
    pools[ADVERB] = ()
    return Lexicon("real", pools=pools, duplicates_dropped=lexicon.duplicates_dropped)


def pool_fractions(lexicon: Lexicon) -> PoolFractions:
    """Exact share of W held by each content class."""
    if not lexicon.is_merged:
        raise LexiconError("merge adverbs before taking pool fractions")
    w = Fraction(lexicon.content_size)
    if w == 0:
        raise LexiconError("empty lexicon")
    return PoolFractions(*(Fraction(lexicon.size(p)) / w for p in CONTENT_POS))


def load_wordlist(
    source: BinaryIO | bytes,
    format: str = "tsv",
    pos: str | PartOfSpeech | None = None,
    merge: bool = True,
) -> Lexicon:
    """Read a tagged (``tsv``) or single-class (``plain``) wordlist.

    ``tsv`` lines are ``word<TAB>pos``; ``#`` lines and blank lines are
    skipped.  ``plain`` lines are bare words, all tagged ``pos``.
    Repeated (word, pos) pairs are dropped and counted in
    ``Lexicon.duplicates_dropped``.
    """
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    try:
        text = source.read().decode("utf-8")
    except UnicodeDecodeError as e:
        raise LexiconError(f"wordlist is not valid UTF-8: {e}") from None

    if format == "plain":
        if pos is None:
            raise LexiconError("plain wordlists need a part-of-speech")
        plain_pos = pos if isinstance(pos, PartOfSpeech) else PartOfSpeech.parse(pos)
    elif format != "tsv":
        raise LexiconError(f"unknown wordlist format {format!r}")

    pools: dict[PartOfSpeech, list[str]] = {}
    seen: set[tuple[PartOfSpeech, str]] = set()
    dropped = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if format == "tsv":
            parts = raw.split("\t")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise LexiconError(f"line {lineno}: expected 'word<TAB>pos', got {raw!r}")
            word, tag = parts
            try:
                p = PartOfSpeech.parse(tag)
            except LexiconError as e:
                raise LexiconError(f"line {lineno}: {e}") from None
        else:
            word, p = line, plain_pos
        word = _canon(word)
        if (p, word) in seen:
            dropped += 1
            continue
        seen.add((p, word))
        pools.setdefault(p, []).append(word)

    lex = Lexicon("real", pools={p: tuple(ws) for p, ws in pools.items()},
                  duplicates_dropped=dropped)
    if merge:
        lex = merge_adverbs(lex)
    if lex.content_size == 0:
        raise LexiconError("empty lexicon")
    return lex


def dump_wordlist(lexicon: Lexicon) -> bytes:
    """Serialise a real lexicon as ``tsv``, sorted by pool tag then word."""
    if lexicon.is_synthetic:
        raise LexiconError("synthetic lexicon has no word lists")
    lines = [f"{w}\t{p.tag}\n" for p in lexicon.tags() for w in sorted(lexicon.words(p))]
    return "".join(lines).encode("utf-8")
