#!/usr/bin/env python3
"""Monte Carlo guessing attack against uniform template phrases: watch the
mean number of guesses settle on (N + 1) / 2 as trials grow."""

import argparse

from passyntax import RandomSource, Lexicon, parse_template, simulate_guessing


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--pool", type=int, default=4, help="words per noun/adjective/verb pool")
    p.add_argument("--template", default="adj noun verb adj noun")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    lex = Lexicon.from_pools({pos: [f"{pos[0]}{i}" for i in range(args.pool)]
                              for pos in ("noun", "adjective", "verb")})
    template = parse_template(args.template)
    for trials in (10, 100, 1000, 10000, 100000):
        rep = simulate_guessing(lex, template, trials, RandomSource.seeded(args.seed))
        print(f"{trials:>7} trials  N={rep.pool_size}  mean={rep.mean_guesses:10.3f}  "
              f"expected={float(rep.expected_guesses):10.3f}  rel.err={rep.relative_error:.4f}")


if __name__ == "__main__":
    main()
