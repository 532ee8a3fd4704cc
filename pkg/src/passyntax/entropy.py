"""Exact search-space cardinalities.

Everything here is integer or :class:`~fractions.Fraction` arithmetic.
Floats only appear in :func:`entropy_bits` and the ``bits`` display field.
Rational cardinalities are floored once, on the final value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .grammar import ContentFractions, Template
from .lexicon import Lexicon, LexiconError, PoolFractions, merge_adverbs

__all__ = [
    "Cardinality",
    "ShrinkFactor",
    "as_fraction",
    "entropy_bits",
    "search_space_random",
    "search_space_template",
    "template_product",
    "weighted_content_fraction",
    "search_space_expected",
    "shrink_divider",
    "crossover_n",
    "compensation_words",
    "TemplateDominance",
    "template_dominance",
    "QUOTED_SLOT_DIVISOR",
    "QUOTED_W_DIVISOR",
]

Rational = Union[int, Fraction]

# Divisors usually quoted for the 8-slot subject-action-object-qualifier
# template.  Neither matches the exact slot product; kept for reporting.
QUOTED_SLOT_DIVISOR = 512 * 7
QUOTED_W_DIVISOR = 7294


def entropy_bits(c: "Cardinality | int") -> float:
    """log2 of an exact count."""
    count = c.count if isinstance(c, Cardinality) else c
    if count <= 0:
        raise ValueError("entropy undefined for an empty search space")
    # math.log2 takes Python ints of any size without converting to float first.
    return math.log2(count)


@dataclass(frozen=True, order=True)
class Cardinality:
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("cardinality must be non-negative")

    @property
    def bits(self) -> float:
        return entropy_bits(self.count) if self.count else -math.inf

    def __int__(self) -> int:
        return self.count


@dataclass(frozen=True)
class ShrinkFactor:
    value: Fraction

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise ValueError(f"shrink factor {self.value} must lie in (0, 1]")


def as_fraction(x: "ShrinkFactor | Rational | str | float") -> Fraction:
    """Accept a factor as ShrinkFactor, Fraction, int or text like ``'0.35'``/``'7/20'``.

    Floats go through ``repr`` so ``0.35`` means 7/20, not the binary double.
    """
    if isinstance(x, ShrinkFactor):
        return x.value
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def search_space_random(W: int, n: int) -> Cardinality:
    if W < 1:
        raise ValueError("W must be at least 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    return Cardinality(W ** n)


def template_product(lexicon: Lexicon, template: Template, strict: bool = False) -> Fraction:
    """Unfloored product of the slot pool sizes."""
    if not strict:
        lexicon = merge_adverbs(lexicon)
    product = Fraction(1)
    for i, pos in enumerate(template.resolved(strict), 1):
        size = lexicon.size(pos)
        if size == 0:
            raise LexiconError(f"slot {i} ({pos}) has an empty pool")
        product *= size
    return product


def search_space_template(lexicon: Lexicon, template: Template, strict: bool = False) -> Cardinality:
    return Cardinality(math.floor(template_product(lexicon, template, strict)))


def weighted_content_fraction(freq: ContentFractions, pools: PoolFractions) -> ShrinkFactor:
    """Expected pool share of one slot when slot classes follow ``freq``."""
    value = sum((f * p for f, p in zip(freq.as_tuple(), pools.as_tuple())), Fraction(0))
    return ShrinkFactor(value)


def search_space_expected(W: int, n: int, factor) -> Cardinality:
    if W < 1:
        raise ValueError("W must be at least 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    f = as_fraction(factor)
    return Cardinality(math.floor((f * W) ** n))


def shrink_divider(factor, n: int) -> Fraction:
    f = as_fraction(factor)
    if f <= 0:
        raise ValueError("factor must be positive")
    return (1 / f) ** n


def _check_crossover_args(W: int, f: Fraction, allow_one: bool) -> None:
    if W < 2:
        raise ValueError("W must be at least 2")
    if not 0 < f < 1 and not (allow_one and f == 1):
        raise ValueError(f"factor {f} must lie in (0, 1)")


def crossover_n(W: int, factor) -> int:
    """Largest n >= 1 with factor**n * W > 1, or 0 if n = 1 already fails.

    Equivalently the longest template phrase whose expected search space
    still beats a random phrase one word shorter: (f W)^n > W^(n-1).
    """
    f = as_fraction(factor)
    _check_crossover_args(W, f, allow_one=False)
    p, q = f.numerator, f.denominator

    def holds(n: int) -> bool:
        return p ** n * W > q ** n

    # Float guess, then exact correction in both directions.
    n = max(int(math.log(W) / -math.log(f)), 0)
    while n >= 1 and not holds(n):
        n -= 1
    while holds(n + 1):
        n += 1
    return n


def compensation_words(W: int, factor, n: int) -> int:
    """Smallest k >= 0 with (factor W)^(n+k) >= W^n."""
    f = as_fraction(factor)
    _check_crossover_args(W, f, allow_one=True)
    if n < 1:
        raise ValueError("n must be positive")
    fw = f * W
    if fw <= 1:
        raise ValueError("factor * W <= 1: no phrase length compensates")
    p, q = fw.numerator, fw.denominator

    # (p/q)^(n+k) >= W^n  <=>  p^(n+k) >= q^(n+k) W^n
    def holds(k: int) -> bool:
        return p ** (n + k) >= q ** (n + k) * W ** n

    k = max(math.ceil(n * -math.log(f) / math.log(fw)) - 1, 0)
    while k > 0 and holds(k - 1):
        k -= 1
    while not holds(k):
        k += 1
    return k


@dataclass(frozen=True)
class TemplateDominance:
    """How a fixed template compares with random phrases of its length and one shorter."""

    template_count: Cardinality
    random_same: Cardinality
    random_shorter: Cardinality
    exceeds_shorter: bool
    ratio_to_shorter: Fraction
    w_divisor: Fraction
    slot_divisor: Fraction | None


def template_dominance(lexicon: Lexicon, template: Template) -> TemplateDominance:
    """Compare S_template with W^k and W^(k-1), exactly.

    ``slot_divisor`` is total**k / product, i.e. the product of the per-slot
    ``total / pool`` ratios; it is only defined for synthetic lexicons whose
    pools are stated as fractions of a total.
    """
    lex = merge_adverbs(lexicon)
    k = len(template)
    product = template_product(lex, template)
    count = Cardinality(math.floor(product))
    W = math.floor(lex.content_size)
    shorter = search_space_random(W, max(k - 1, 0))
    slot_divisor = None
    if lex.is_synthetic:
        slot_divisor = Fraction(lex.total) ** k / product
    return TemplateDominance(
        template_count=count,
        random_same=search_space_random(W, k),
        random_shorter=shorter,
        exceeds_shorter=count.count > shorter.count,
        ratio_to_shorter=Fraction(count.count, shorter.count),
        w_divisor=Fraction(lex.content_size) ** k / product,
        slot_divisor=slot_divisor,
    )
