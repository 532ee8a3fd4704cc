"""Phrase templates and part-of-speech frequency tables."""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import BinaryIO, Mapping, Optional

from .lexicon import ADJECTIVE, ADVERB, NOUN, VERB, PartOfSpeech

__all__ = [
    "GrammarError",
    "Template",
    "parse_template",
    "default_template",
    "FrequencyTable",
    "ContentFractions",
    "book_frequency_table",
    "load_frequency_table",
    "refine_to_content",
]


class GrammarError(ValueError):
    pass


_TOKENS = {
    "noun": NOUN,
    "adj": ADJECTIVE,
    "adjective": ADJECTIVE,
    "adv": ADVERB,
    "adverb": ADVERB,
    "verb": VERB,
}


@dataclass(frozen=True)
class Template:
    """Ordered content-word slots.  Grammar glue is not modelled."""

    slots: tuple[PartOfSpeech, ...]
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        for i, s in enumerate(self.slots, 1):
            if not s.is_content:
                raise GrammarError(f"slot {i}: {s} is not a content part of speech")

    def __len__(self) -> int:
        return len(self.slots)

    def __iter__(self):
        return iter(self.slots)

    def render(self) -> str:
        return " ".join(s.short for s in self.slots)

    def resolved(self, strict: bool = False) -> tuple[PartOfSpeech, ...]:
        """Pool to draw from for each slot.  Adverb slots use adjectives unless ``strict``."""
        if strict:
            return self.slots
        return tuple(ADJECTIVE if s == ADVERB else s for s in self.slots)


def parse_template(text: str, label: Optional[str] = None) -> Template:
    tokens = text.split()
    if not tokens:
        raise GrammarError("empty template")
    slots = []
    for i, tok in enumerate(tokens, 1):
        try:
            slots.append(_TOKENS[tok.lower()])
        except KeyError:
            raise GrammarError(f"unknown template token {tok!r} at position {i}") from None
    return Template(tuple(slots), label)


def default_template() -> Template:
    """subject - action - object - qualifier, as (adj noun)(adv verb)(adj noun)(adj noun)."""
    return parse_template("adj noun adv verb adj noun adj noun",
                          label="subject-action-object-qualifier")


@dataclass(frozen=True)
class FrequencyTable:
    """Relative frequency per word class or token category (exact rationals)."""

    entries: Mapping[str, Fraction]

    def __post_init__(self):
        if not self.entries:
            raise GrammarError("empty frequency table")
        for k, v in self.entries.items():
            if v < 0:
                raise GrammarError(f"negative frequency for {k!r}")

    def __getitem__(self, key: str) -> Fraction:
        return self.entries[key]

    def get(self, key: str, default=None):
        return self.entries.get(key, default)

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))


@dataclass(frozen=True)
class ContentFractions:
    noun: Fraction
    adjective: Fraction
    verb: Fraction

    def __post_init__(self):
        for v in (self.noun, self.adjective, self.verb):
            if not 0 <= v <= 1:
                raise ValueError(f"content fraction {v} outside [0, 1]")
        if self.noun + self.adjective + self.verb != 1:
            raise ValueError("content fractions must sum to exactly 1")

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.noun, self.adjective, self.verb)


_NINE_BOOK_PERCENTAGES = {
    "noun": 19,
    "verb": 15,
    "punctuation": 14,
    "preposition": 13,
    "determiner": 10,
    "pronoun": 9,
    "adverb": 7,
    "adjective": 6,
    "conjunction": 4,
    "other": 3,
    "symbol": 1,
}


def book_frequency_table() -> FrequencyTable:
    """Average PoS frequencies over nine books.

    Stored as printed; the percentages add to 101, not 100.
    """
    return FrequencyTable({k: Fraction(v, 100) for k, v in _NINE_BOOK_PERCENTAGES.items()})


def _category(token: str) -> str:
    key = token.lower()
    if key in _TOKENS:
        return _TOKENS[key].tag
    return key


def load_frequency_table(source: BinaryIO | bytes) -> FrequencyTable:
    """Parse ``category percentage`` lines and normalise the result to sum to 1."""
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    text = source.read().decode("utf-8")
    raw: dict[str, Fraction] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GrammarError(f"line {lineno}: expected 'category percentage', got {line!r}")
        cat, num = parts
        try:
            value = Fraction(num.rstrip("%"))
        except ValueError:
            raise GrammarError(f"line {lineno}: bad number {num!r}") from None
        if value < 0:
            raise GrammarError(f"line {lineno}: negative frequency for {cat!r}")
        cat = _category(cat)
        if cat in raw:
            raise GrammarError(f"line {lineno}: duplicate category {cat!r}")
        raw[cat] = value
    if not raw:
        raise GrammarError("empty frequency table")
    total = sum(raw.values())
    if total == 0:
        raise GrammarError("frequency table sums to zero")
    return FrequencyTable({k: v / total for k, v in raw.items()})


def refine_to_content(table: FrequencyTable) -> ContentFractions:
    """Merge adverbs into adjectives, keep noun/adjective/verb, renormalise."""
    if "noun" not in table.entries or "verb" not in table.entries:
        raise GrammarError("frequency table needs noun and verb entries")
    if "adjective" not in table.entries and "adverb" not in table.entries:
        raise GrammarError("frequency table needs an adjective or adverb entry")
    noun = table["noun"]
    verb = table["verb"]
    adj = table.get("adjective", Fraction(0)) + table.get("adverb", Fraction(0))
    total = noun + adj + verb
    if total == 0:
        raise GrammarError("all content frequencies are zero")
    return ContentFractions(noun / total, adj / total, verb / total)
