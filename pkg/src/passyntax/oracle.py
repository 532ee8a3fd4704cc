"""Brute-force checks for the closed-form cardinalities.

The enumerator walks every slot-wise combination and counts; it never calls
the product formula.  The guessing simulation pits a uniform defender
against an attacker who knows the template and tries phrases in a fixed
order, which makes the expected attack length (N + 1) / 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .entropy import search_space_template
from .generator import RandomSource, generate_template_phrase
from .grammar import Template
from .lexicon import Lexicon, LexiconError, merge_adverbs

__all__ = [
    "DEFAULT_LIMIT",
    "EnumerationLimitError",
    "iter_phrases",
    "enumerate_template",
    "Verification",
    "verify_cardinality",
    "AttackReport",
    "simulate_guessing",
]

DEFAULT_LIMIT = 10 ** 7


class EnumerationLimitError(RuntimeError):
    def __init__(self, predicted: int, limit: int):
        super().__init__(f"search space of {predicted} phrases exceeds the enumeration limit {limit}")
        self.predicted = predicted
        self.limit = limit


def _slot_pools(lexicon: Lexicon, template: Template) -> list[tuple[str, ...]]:
    if lexicon.is_synthetic:
        raise LexiconError("cannot enumerate synthetic pools")
    lex = merge_adverbs(lexicon)
    pools = []
    for i, pos in enumerate(template.resolved(), 1):
        pool = lex.words(pos)
        if not pool:
            raise LexiconError(f"slot {i} ({pos}) has an empty pool")
        pools.append(pool)
    return pools


def _guard(pools: list[tuple[str, ...]], limit: int) -> None:
    predicted = 1
    for p in pools:
        predicted *= len(p)
    if predicted > limit:
        raise EnumerationLimitError(predicted, limit)


def iter_phrases(lexicon: Lexicon, template: Template,
                 limit: int = DEFAULT_LIMIT) -> Iterator[tuple[str, ...]]:
    """Every phrase the template admits, lexicographic by slot then pool index."""
    pools = _slot_pools(lexicon, template)
    _guard(pools, limit)
    return itertools.product(*pools)


def enumerate_template(lexicon: Lexicon, template: Template, limit: int = DEFAULT_LIMIT) -> int:
    count = 0
    for _ in iter_phrases(lexicon, template, limit):
        count += 1
    return count


@dataclass(frozen=True)
class Verification:
    match: bool
    formula: int
    enumerated: int


def verify_cardinality(lexicon: Lexicon, template: Template,
                       limit: int = DEFAULT_LIMIT) -> Verification:
    enumerated = enumerate_template(lexicon, template, limit)
    formula = search_space_template(lexicon, template).count
    return Verification(formula == enumerated, formula, enumerated)


@dataclass(frozen=True)
class AttackReport:
    pool_size: int
    trials: int
    mean_guesses: float
    expected_guesses: Fraction
    order: str = "lexicographic"

    @property
    def relative_error(self) -> float:
        return abs(self.mean_guesses - float(self.expected_guesses)) / self.pool_size


ORDERS = ("lexicographic", "reverse", "shuffled")


def simulate_guessing(
    lexicon: Lexicon,
    template: Template,
    trials: int,
    rng: RandomSource,
    limit: int = DEFAULT_LIMIT,
    order: str = "lexicographic",
    order_seed: int = 0,
) -> AttackReport:
    """Average number of guesses an informed attacker needs against a uniform defender.

    ``order`` picks the attacker's fixed enumeration order; ``shuffled`` uses
    a Fisher-Yates permutation seeded by ``order_seed``, independent of the
    defender's ``rng``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if order not in ORDERS:
        raise ValueError(f"unknown attack order {order!r}")
    guesses = list(iter_phrases(lexicon, template, limit))
    if order == "reverse":
        guesses.reverse()
    elif order == "shuffled":
        shuffler = RandomSource.seeded(order_seed)
        for i in range(len(guesses) - 1, 0, -1):
            j = shuffler.randbelow(i + 1)
            guesses[i], guesses[j] = guesses[j], guesses[i]
    rank = {phrase: i + 1 for i, phrase in enumerate(guesses)}
    n = len(guesses)

    total = 0
    for _ in range(trials):
        target = generate_template_phrase(lexicon, template, rng).words
        total += rank[target]
    return AttackReport(
        pool_size=n,
        trials=trials,
        mean_guesses=total / trials,
        expected_guesses=Fraction(n + 1, 2),
        order=order,
    )
