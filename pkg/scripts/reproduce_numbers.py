#!/usr/bin/env python3
"""Recompute every headline number of the syntax-vs-random comparison from the
synthetic dictionary model, exactly, and print them next to the rounded
figures that usually get quoted."""

import math
from fractions import Fraction

from passyntax import (
    book_frequency_table,
    compensation_words,
    crossover_n,
    default_template,
    pool_fractions,
    refine_to_content,
    search_space_expected,
    search_space_random,
    shrink_divider,
    synthetic_oed_lexicon,
    template_dominance,
    weighted_content_fraction,
)
from passyntax.entropy import QUOTED_SLOT_DIVISOR, QUOTED_W_DIVISOR


def main():
    lex = synthetic_oed_lexicon()
    W = math.floor(lex.content_size)
    pf = pool_fractions(lex)
    cf = refine_to_content(book_frequency_table())
    f = weighted_content_fraction(cf, pf).value

    print(f"T = {lex.total}")
    print(f"W = {lex.content_size} -> floor {W}")
    print("pool fractions (noun adj verb):", *(x * 175 for x in pf.as_tuple()), "/ 175")
    print("content fractions (noun adj verb):", *(x * 47 for x in cf.as_tuple()), "/ 47")
    print(f"weighted factor = {f} = {float(f):.6f} (quoted as 0.35)")
    print(f"per-word divider = {float(shrink_divider(f, 1)):.4f} (quoted as 3)")

    dom = template_dominance(lex, default_template())
    print(f"8-slot template: S = {dom.template_count.count}")
    print(f"  S / W^7 = {float(dom.ratio_to_shorter):.4f}, exceeds W^7: {dom.exceeds_shorter}")
    print(f"  T^8 / S = {dom.slot_divisor} (quoted {QUOTED_SLOT_DIVISOR})")
    print(f"  W^8 / S = {float(dom.w_divisor):.2f} (quoted {QUOTED_W_DIVISOR})")

    print(f"crossover n: {crossover_n(W, f)} (exact), {crossover_n(W, Fraction(7, 20))} (0.35)")
    print()
    print(" n  S_random bits  S_expected bits  extra words needed")
    for n in range(1, 16):
        r = search_space_random(W, n).bits
        e = search_space_expected(W, n, f).bits
        print(f"{n:2d}  {r:13.3f}  {e:15.3f}  {compensation_words(W, f, n):18d}")


if __name__ == "__main__":
    main()
