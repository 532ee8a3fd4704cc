"""passyntax command line: analyze, generate, crossover, verify.

Exit status is 0 on success, 1 when ``verify`` finds a mismatch and 2 on
any usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .entropy import (
    QUOTED_SLOT_DIVISOR,
    QUOTED_W_DIVISOR,
    Cardinality,
    as_fraction,
    compensation_words,
    crossover_n,
    search_space_expected,
    search_space_random,
    shrink_divider,
    template_dominance,
    weighted_content_fraction,
)
from .generator import RandomSource, generate_random_words, generate_template_phrase, render_phrase
from .grammar import (
    book_frequency_table,
    default_template,
    load_frequency_table,
    parse_template,
    refine_to_content,
)
from .lexicon import load_wordlist, merge_adverbs, pool_fractions, synthetic_oed_lexicon
from .oracle import DEFAULT_LIMIT, EnumerationLimitError, simulate_guessing, verify_cardinality

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def rational_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": _dec(x)}


def _dec(x: Fraction, digits: int = 12) -> str:
    return f"{float(x):.{digits}g}" if abs(x) < 10 ** 300 else str(math.floor(x))


def cardinality_json(c: Cardinality) -> dict:
    return {"count": str(c.count), "bits": c.bits}


def _rat_text(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} (~{_dec(x, 9)})"


def _card_text(c: Cardinality) -> str:
    return f"{c.count} ({c.bits:.6f} bits)"


def _load_lexicon(args):
    if args.synthetic_oed and args.wordlist:
        raise CliError("use either --wordlist or --synthetic-oed, not both")
    if args.synthetic_oed:
        return synthetic_oed_lexicon()
    if not args.wordlist:
        return None
    try:
        data = Path(args.wordlist).read_bytes()
    except OSError as e:
        raise CliError(f"cannot read wordlist: {e}") from None
    return load_wordlist(data, format=args.wordlist_format, pos=args.pos)


def _content_fractions(args):
    if args.freq:
        try:
            table = load_frequency_table(Path(args.freq).read_bytes())
        except OSError as e:
            raise CliError(f"cannot read frequency file: {e}") from None
    else:
        table = book_frequency_table()
    return refine_to_content(table)


def _parse_factor(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"bad factor {text!r}") from None


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.format == "json":
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_analyze(args) -> int:
    lex = _load_lexicon(args)
    if lex is None:
        raise CliError("analyze needs --wordlist or --synthetic-oed")
    lex = merge_adverbs(lex)
    W = math.floor(lex.content_size)
    pools = pool_fractions(lex)
    content = _content_fractions(args)
    if args.factor is not None:
        factor = _parse_factor(args.factor)
    else:
        factor = weighted_content_fraction(content, pools).value
    template = parse_template(args.template) if args.template else None
    n = args.n if args.n is not None else (len(template) if template else len(default_template()))

    s_random = search_space_random(W, n)
    s_expected = search_space_expected(W, n, factor)
    doc = {
        "command": "analyze",
        "lexicon": {"mode": lex.mode, "W": str(W), "W_exact": rational_json(lex.content_size),
                    "total": rational_json(lex.total)},
        "pool_fractions": {k: rational_json(v) for k, v in
                           zip(("noun", "adjective", "verb"), pools.as_tuple())},
        "content_fractions": {k: rational_json(v) for k, v in
                              zip(("noun", "adjective", "verb"), content.as_tuple())},
        "factor": rational_json(factor),
        "divider_per_word": rational_json(shrink_divider(factor, 1)),
        "n": n,
        "S_random": cardinality_json(s_random),
        "S_expected": cardinality_json(s_expected),
    }
    lines = [
        f"lexicon mode        {lex.mode}",
        f"W                   {W}  (exact {_rat_text(lex.content_size)})",
        f"total               {_rat_text(lex.total)}",
        "pool fractions      noun {}, adjective {}, verb {}".format(*map(_rat_text, pools.as_tuple())),
        "content fractions   noun {}, adjective {}, verb {}".format(*map(_rat_text, content.as_tuple())),
        f"weighted factor     {_rat_text(factor)}",
        f"divider per word    {_rat_text(shrink_divider(factor, 1))}",
        f"n                   {n}",
        f"S_random(n)         {_card_text(s_random)}",
        f"S_expected(n)       {_card_text(s_expected)}",
    ]
    if template is not None:
        dom = template_dominance(lex, template)
        tdoc = {
            "template": template.render(),
            "S_template": cardinality_json(dom.template_count),
            "S_random_shorter": cardinality_json(dom.random_shorter),
            "exceeds_shorter": dom.exceeds_shorter,
            "ratio_to_shorter": rational_json(dom.ratio_to_shorter),
            "w_divisor": rational_json(dom.w_divisor),
            "slot_divisor": rational_json(dom.slot_divisor) if dom.slot_divisor is not None else None,
        }
        k = len(template)
        lines += [
            f"template            {template.render()}",
            f"S_template          {_card_text(dom.template_count)}",
            f"S_random({k - 1})         {_card_text(dom.random_shorter)}",
            f"S_template > W^{k - 1}    {str(dom.exceeds_shorter).lower()}  "
            f"(ratio {_rat_text(dom.ratio_to_shorter)})",
            f"W^{k} / S_template    {_rat_text(dom.w_divisor)}",
        ]
        if dom.slot_divisor is not None:
            lines.append(f"T^{k} / S_template    {_rat_text(dom.slot_divisor)}")
        if lex.is_synthetic and template == default_template():
            tdoc["discrepancies"] = {
                "quoted_slot_divisor": str(QUOTED_SLOT_DIVISOR),
                "quoted_w_divisor": str(QUOTED_W_DIVISOR),
                "exact_slot_divisor": rational_json(dom.slot_divisor),
                "exact_w_divisor": rational_json(dom.w_divisor),
            }
            lines += [
                f"note: the quoted divisor 512*7 = {QUOTED_SLOT_DIVISOR} does not match the "
                f"exact slot divisor {_rat_text(dom.slot_divisor)}",
                f"note: the quoted W-relative divisor {QUOTED_W_DIVISOR} does not match the "
                f"exact {_rat_text(dom.w_divisor)}",
            ]
        doc["template"] = tdoc
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_generate(args) -> int:
    lex = _load_lexicon(args)
    if lex is None:
        raise CliError("generate needs --wordlist")
    if lex.is_synthetic:
        raise CliError("cannot sample synthetic pools; generate needs a real --wordlist")
    if args.random == bool(args.template):
        raise CliError("choose exactly one of --random or --template")
    if args.random and args.n is None:
        raise CliError("--random needs -n")
    if args.count < 1:
        raise CliError("--count must be at least 1")
    rng = RandomSource.seeded(args.seed) if args.seed is not None else RandomSource.system()
    template = parse_template(args.template) if args.template else None
    samples = []
    for _ in range(args.count):
        if template is None:
            samples.append(generate_random_words(lex, args.n, rng))
        else:
            samples.append(generate_template_phrase(lex, template, rng))
    if args.format == "json":
        doc = {
            "command": "generate",
            "strategy": samples[0].strategy,
            "template": template.render() if template else None,
            "phrases": [
                {"phrase": render_phrase(s, args.separator), "words": list(s.words),
                 **({"bits": s.claimed_bits} if args.show_bits else {})}
                for s in samples
            ],
        }
        _emit(args, doc, [])
    else:
        for s in samples:
            line = render_phrase(s, args.separator)
            if args.show_bits:
                line += f"\t{s.claimed_bits:.6f} bits"
            sys.stdout.write(line + "\n")
    return EXIT_OK


def cmd_crossover(args) -> int:
    lex = _load_lexicon(args)
    if args.W is not None and lex is not None:
        raise CliError("use either -W or a lexicon source, not both")
    if lex is None and args.W is None:
        lex = synthetic_oed_lexicon()
    if lex is not None:
        lex = merge_adverbs(lex)
        W = math.floor(lex.content_size)
    else:
        W = args.W
    if args.factor is not None:
        factor = _parse_factor(args.factor)
    elif lex is not None:
        factor = weighted_content_fraction(_content_fractions(args), pool_fractions(lex)).value
    else:
        factor = weighted_content_fraction(_content_fractions(args),
                                           pool_fractions(synthetic_oed_lexicon())).value
    if not 0 < factor < 1:
        raise CliError(f"factor {factor} must lie strictly between 0 and 1")
    if W < 2:
        raise CliError("W must be at least 2")

    n = crossover_n(W, factor)
    at_n = factor ** n * W if n else None
    at_next = factor ** (n + 1) * W
    comp = compensation_words(W, factor, max(n - 1, 1)) if factor * W > 1 else None
    doc = {
        "command": "crossover",
        "W": str(W),
        "factor": rational_json(factor),
        "crossover_n": n,
        "check_at_n": rational_json(at_n) if at_n is not None else None,
        "check_at_n_plus_1": rational_json(at_next),
        "compensation_words_below_crossover": comp,
    }
    lines = [f"crossover n = {n}", f"W = {W}, factor = {_rat_text(factor)}"]
    if n:
        lines.append(f"at n = {n}: factor^n * W = {_rat_text(at_n)} > 1, "
                     f"so (factor*W)^{n} > W^{n - 1}")
    lines.append(f"at n = {n + 1}: factor^n * W = {_rat_text(at_next)} <= 1, "
                 f"so (factor*W)^{n + 1} <= W^{n}")
    if comp is not None and n >= 2:
        lines.append(f"for phrases of up to {n - 1} words, {comp} extra word(s) "
                     f"restore the random-phrase search space")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    lex = _load_lexicon(args)
    if lex is None or lex.is_synthetic:
        raise CliError("verify needs a real --wordlist")
    template = parse_template(args.template) if args.template else default_template()
    try:
        v = verify_cardinality(lex, template, args.limit)
    except EnumerationLimitError as e:
        raise CliError(f"refusing to enumerate: predicted {e.predicted} phrases > limit {e.limit}") from None
    doc = {
        "command": "verify",
        "template": template.render(),
        "formula": str(v.formula),
        "enumerated": str(v.enumerated),
        "match": v.match,
    }
    lines = [f"template    {template.render()}",
             f"formula     {v.formula}",
             f"enumerated  {v.enumerated}",
             f"match       {str(v.match).lower()}"]
    if args.trials is not None:
        seed = args.seed if args.seed is not None else 0
        rep = simulate_guessing(lex, template, args.trials, RandomSource.seeded(seed), args.limit)
        doc["attack"] = {
            "pool_size": str(rep.pool_size),
            "trials": rep.trials,
            "mean_guesses": rep.mean_guesses,
            "expected_guesses": rational_json(rep.expected_guesses),
            "relative_error": rep.relative_error,
        }
        lines += [f"attack      {rep.trials} trials, mean {rep.mean_guesses:.4f} guesses, "
                  f"expected {_rat_text(rep.expected_guesses)}, "
                  f"relative error {rep.relative_error:.4%}"]
    _emit(args, doc, lines)
    return EXIT_OK if v.match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("lexicon")
    src.add_argument("--wordlist", metavar="PATH")
    src.add_argument("--wordlist-format", choices=("tsv", "plain"), default="tsv")
    src.add_argument("--pos", help="part of speech for a plain wordlist")
    src.add_argument("--synthetic-oed", action="store_true",
                     help="use the built-in OED pool-size model instead of a wordlist")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=_u64)
    common.add_argument("--template", metavar="STR")
    common.add_argument("-n", type=int)
    common.add_argument("--factor", metavar="RATIONAL-OR-DECIMAL")
    common.add_argument("--freq", metavar="PATH")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    p = argparse.ArgumentParser(prog="passyntax", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="cardinalities and bits")
    g = sub.add_parser("generate", parents=[common], help="emit passphrases")
    g.add_argument("--random", action="store_true", help="uniform random word sequence")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--show-bits", action="store_true")
    g.add_argument("--separator", default=" ")
    c = sub.add_parser("crossover", parents=[common], help="longest length where syntax still wins")
    c.add_argument("-W", type=int)
    v = sub.add_parser("verify", parents=[common], help="enumerate and compare to the formula")
    v.add_argument("--trials", type=int)
    return p


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


COMMANDS = {
    "analyze": cmd_analyze,
    "generate": cmd_generate,
    "crossover": cmd_crossover,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CliError, ValueError, RuntimeError) as e:
        print(f"passyntax {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
