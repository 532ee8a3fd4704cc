"""Passphrase generation: uniform random word sequences and template phrases."""

from __future__ import annotations

import math
import random
import secrets
from dataclasses import dataclass
from typing import Optional

from .entropy import entropy_bits, template_product
from .grammar import Template
from .lexicon import Lexicon, LexiconError, merge_adverbs

__all__ = [
    "RandomSource",
    "PhraseSample",
    "generate_random_words",
    "generate_template_phrase",
    "render_phrase",
]


class RandomSource:
    """Bit source plus unbiased bounded-integer sampling.

    ``RandomSource.seeded(s)`` wraps a Mersenne Twister seeded with ``s``
    (``random.Random(s).getrandbits`` output is stable across CPython
    versions).  ``RandomSource.system()`` reads the OS CSPRNG.  Both feed the
    same rejection sampler, so there is no modulo bias for any bound.
    """

    def __init__(self, kind: str, seed: Optional[int] = None):
        if kind == "seeded":
            if seed is None or not 0 <= seed < 2 ** 64:
                raise ValueError("seed must be an unsigned 64-bit integer")
            self._bits = random.Random(seed).getrandbits
        elif kind == "system":
            self._bits = secrets.randbits
        else:
            raise ValueError(f"unknown random source kind {kind!r}")
        self.kind = kind
        self.seed = seed

    @classmethod
    def seeded(cls, seed: int) -> "RandomSource":
        return cls("seeded", seed)

    @classmethod
    def system(cls) -> "RandomSource":
        return cls("system")

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection on ``n.bit_length()`` bits."""
        if n <= 0:
            raise ValueError("upper bound must be positive")
        k = n.bit_length()
        while True:
            r = self._bits(k)
            if r < n:
                return r

    def __repr__(self) -> str:
        if self.kind == "seeded":
            return f"RandomSource.seeded({self.seed})"
        return "RandomSource.system()"


@dataclass(frozen=True)
class PhraseSample:
    words: tuple[str, ...]
    strategy: str
    claimed_bits: float
    lexicon_fingerprint: tuple[tuple[str, int], ...]
    template: Optional[Template] = None


def _require_real(lexicon: Lexicon) -> None:
    if lexicon.is_synthetic:
        raise LexiconError("cannot sample synthetic pools")


def generate_random_words(lexicon: Lexicon, n: int, rng: RandomSource) -> PhraseSample:
    """``n`` words drawn with replacement from the merged content pools."""
    _require_real(lexicon)
    if n < 1:
        raise ValueError("n must be at least 1")
    lex = merge_adverbs(lexicon)
    universe = lex.content_words()
    if not universe:
        raise LexiconError("empty lexicon")
    words = tuple(universe[rng.randbelow(len(universe))] for _ in range(n))
    return PhraseSample(
        words=words,
        strategy="random_words",
        claimed_bits=n * math.log2(len(universe)),
        lexicon_fingerprint=lex.fingerprint(),
    )


def generate_template_phrase(
    lexicon: Lexicon, template: Template, rng: RandomSource, strict: bool = False
) -> PhraseSample:
    """Fill each slot independently and uniformly from its pool."""
    _require_real(lexicon)
    lex = lexicon if strict else merge_adverbs(lexicon)
    pools = []
    for i, pos in enumerate(template.resolved(strict), 1):
        pool = lex.words(pos)
        if not pool:
            raise LexiconError(f"slot {i} ({pos}) has an empty pool")
        pools.append(pool)
    words = tuple(pool[rng.randbelow(len(pool))] for pool in pools)
    bits = entropy_bits(int(template_product(lex, template, strict))) if pools else 0.0
    return PhraseSample(
        words=words,
        strategy="template",
        claimed_bits=bits,
        lexicon_fingerprint=lex.fingerprint(),
        template=template,
    )


def render_phrase(sample: PhraseSample, separator: str = " ") -> str:
    return separator.join(sample.words)
