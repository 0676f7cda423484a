"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 cap exceeded or undecided,
4 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import errors, poly
from .automata import accepts, build_zero_automaton, export, from_json, group_blocks
from .config import BaseConfig, load_config, parse_alphabet_value
from .expansion import (
    greedy_expand,
    is_admissible,
    is_parry,
    quasi_greedy_expand_one,
    shift_base,
    value,
)
from .normalization import (
    build_converter,
    build_greedy_automaton,
    build_normalization_automaton,
    normalize,
)
from .numberfield import conjugate_embed, format_rational, is_pisot, parse_rational
from .polysystem import align, delta_polynomial, divides, recover_bases
from .spectrum import min_gap, separation_bound, spectrum_level
from .words import format_word, parse_word

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 2, 3, 4

INPUT_ERRORS = (
    errors.NotSquarefree, errors.NoRootInInterval, errors.MultipleRootsInInterval,
    errors.RootNotGreaterThanOne, errors.DivisionByZero, errors.FieldMismatch,
    errors.InputOutOfRange, errors.InvalidBase, errors.ZeroNotInAlphabet,
    errors.FirstDigitZero, errors.DeltaNotRoot, errors.ValueOutOfRange,
    errors.NotPisot, errors.TooFewElements, errors.Reducible,
)
CAP_ERRORS = (errors.CapExceeded, errors.ElementCapExceeded, errors.QuasiGreedyNotPeriodic)


class Undecided(Exception):
    """A computation stopped at its cap; the partial result has been printed."""


def _need_base(cfg: BaseConfig):
    if cfg.base is None:
        raise ValueError("config has no betas")
    return cfg.base


def _alphabets(cfg: BaseConfig, args, attr="alphabets"):
    raw = getattr(args, attr, None)
    D = parse_alphabet_value(raw) if raw else cfg.alphabets
    if D is None:
        raise ValueError("no alphabets given (use --alphabets or put them in the config)")
    return D


def _element(field, text: str):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"malformed coordinate list {text!r}")
        parts = [t.strip().strip("'\"") for t in text[1:-1].split(",") if t.strip()]
        return field.element([parse_rational(t) for t in parts])
    return field(parse_rational(text))


def _cap(args, cfg, name):
    v = getattr(args, "cap", None)
    return v if v is not None else getattr(cfg.caps, name)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# -- subcommands -------------------------------------------------------------

def cmd_field_info(args):
    cfg = load_config(args.config)
    f = cfg.field
    info = {
        "minpoly": list(f.minpoly),
        "degree": f.degree,
        "root_interval": f.to_json()["root_interval"],
        "delta": float(f.gen),
        "pisot": is_pisot(f),
        "irreducibility_verified": f.irreducibility_verified,
        "conjugates": [],
    }
    for k in range(f.degree - 1):
        box = conjugate_embed(f.gen, k, cfg.precision)
        z = box.midpoint()
        info["conjugates"].append({"re": z.real, "im": z.imag, "modulus_upper": float(box.abs_upper())})
    print(json.dumps(info, indent=1))


def cmd_pisot_check(args):
    cfg = load_config(args.config)
    print("true" if is_pisot(cfg.field) else "false")


def cmd_expand(args):
    cfg = load_config(args.base)
    b = shift_base(_need_base(cfg), args.shift)
    res = greedy_expand(_element(b.field, args.x), b, _cap(args, cfg, "steps"))
    if not res.periodic:
        print(f"prefix {res.word}")
        raise Undecided
    print(format_word(res.word))


def cmd_quasigreedy(args):
    cfg = load_config(args.base)
    b = shift_base(_need_base(cfg), args.shift)
    res = quasi_greedy_expand_one(b, _cap(args, cfg, "steps"))
    if not res.periodic:
        print(f"prefix {res.word}")
        raise Undecided
    print(format_word(res.word))


def cmd_parry_check(args):
    cfg = load_config(args.base)
    res = is_parry(_need_base(cfg), _cap(args, cfg, "steps"))
    for i, e in enumerate(res.expansions):
        if e.periodic:
            print(f"shift {i}: {format_word(e.word)}")
        else:
            print(f"shift {i}: unknown, prefix {e.word}")
    print("parry: " + ("true" if res.parry else "unknown"))
    if res.parry is None:
        raise Undecided


def cmd_admissible(args):
    cfg = load_config(args.base)
    ok = is_admissible(parse_word(args.word), _need_base(cfg), _cap(args, cfg, "steps"))
    print("true" if ok else "false")


def cmd_value(args):
    cfg = load_config(args.base)
    x = value(parse_word(args.word), _need_base(cfg))
    print(json.dumps({"coords": x.to_json(), "approx": float(x)}))


def _automaton_output(outcome, args):
    _emit(export(outcome.automaton, args.format), args.out)
    if not outcome.complete:
        print(f"state cap hit after {outcome.states_visited} states", file=sys.stderr)
        raise Undecided


def cmd_zero_automaton(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    cap = args.state_cap or cfg.caps.states
    _automaton_output(build_zero_automaton(b, _alphabets(cfg, args), cap), args)


def cmd_group_blocks(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    D = _alphabets(cfg, args)
    outcome = build_zero_automaton(b, D, args.state_cap or cfg.caps.states)
    if not outcome.complete:
        raise Undecided
    _emit(export(group_blocks(outcome.automaton, b, D), args.format), args.out)


def cmd_spectrum(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    s = spectrum_level(b, _alphabets(cfg, args), args.phase, args.level, args.element_cap or cfg.caps.elements)
    print(json.dumps(s.to_json()))


def cmd_min_gap(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    D = _alphabets(cfg, args)
    print("level,count,min_gap_decimal")
    for level in range(1, args.max_level + 1):
        s = spectrum_level(b, D, args.phase, level, args.element_cap or cfg.caps.elements)
        gap = float(min_gap(s)) if len(s) > 1 else float("nan")
        print(f"{level},{len(s)},{gap:.12g}")


def cmd_separation_bound(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    bound = separation_bound(b, _alphabets(cfg, args), args.precision or cfg.precision, args.phase)
    print(json.dumps({"bound": format_rational(bound), "approx": float(bound)}))


def cmd_converter(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    D = _alphabets(cfg, args)
    Dp = parse_alphabet_value(args.alphabets2)
    _automaton_output(build_converter(b, D, Dp, args.state_cap or cfg.caps.states), args)


def cmd_greedy_automaton(args):
    cfg = load_config(args.base)
    _emit(export(build_greedy_automaton(_need_base(cfg), _cap(args, cfg, "steps")), args.format), args.out)


def cmd_normalizer_automaton(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    outcome = build_normalization_automaton(b, _alphabets(cfg, args), args.state_cap or cfg.caps.states)
    _automaton_output(outcome, args)


def cmd_normalize(args):
    cfg = load_config(args.base)
    b = _need_base(cfg)
    D = parse_alphabet_value(args.alphabets) if args.alphabets else cfg.alphabets
    try:
        w = normalize(parse_word(args.word), b, _cap(args, cfg, "steps"), D)
    except errors.CapExceeded as exc:
        print(f"prefix {exc.prefix}")
        raise Undecided from exc
    print(format_word(w))


def cmd_accept(args):
    with open(args.automaton, encoding="utf-8") as fh:
        aut = from_json(fh.read())
    text = args.pair if args.pair is not None else args.word
    if text is None:
        raise ValueError("give --word or --pair")
    print("true" if accepts(aut, parse_word(text)) else "false")


def cmd_delta_poly(args):
    words = [parse_word(w) for w in args.words]
    aligned = align(words)
    h = delta_polynomial(aligned)
    out = {"m": aligned.m, "k": aligned.k, "h": h, "h_text": poly.to_str(h)}
    if args.field:
        cfg = load_config(args.field)
        f = list(cfg.field.minpoly)
        out["divisible_by_minpoly"] = divides(f, h)
    print(json.dumps(out))


def cmd_recover_bases(args):
    cfg = load_config(args.field)
    base = recover_bases(cfg.field, [parse_word(w) for w in args.words])
    print(json.dumps({"betas": [b.to_json() for b in base.betas], "approx": [float(b) for b in base.betas]}))


# -- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="altbase", description="Exact toolkit for alternate-base numeration.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    def base_arg(sp):
        sp.add_argument("--base", required=True, help="base config JSON")

    def automaton_args(sp):
        sp.add_argument("--format", choices=("dot", "json"), default="dot")
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--state-cap", type=int)

    sp = add("field-info", cmd_field_info, "describe the number field")
    sp.add_argument("--config", "--field", dest="config", required=True)
    sp = add("pisot-check", cmd_pisot_check, "decide whether delta is a Pisot number")
    sp.add_argument("--config", "--field", dest="config", required=True)

    for name, fn, help_ in (("expand", cmd_expand, "greedy expansion of x"),
                            ("quasigreedy", cmd_quasigreedy, "quasi-greedy expansion of 1")):
        sp = add(name, fn, help_)
        base_arg(sp)
        if name == "expand":
            sp.add_argument("--x", required=True, help='rational, or coordinate list like "[0, 1/3]"')
        sp.add_argument("--shift", type=int, default=0)
        sp.add_argument("--cap", type=int)

    sp = add("parry-check", cmd_parry_check, "greedy expansions of 1 for every shift")
    base_arg(sp)
    sp.add_argument("--cap", type=int)

    sp = add("admissible", cmd_admissible, "is the word a greedy expansion")
    base_arg(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--cap", type=int)

    sp = add("value", cmd_value, "exact value of a word")
    base_arg(sp)
    sp.add_argument("--word", required=True)

    for name, fn, help_ in (("zero-automaton", cmd_zero_automaton, "zero automaton"),
                            ("group-blocks", cmd_group_blocks, "zero automaton read in blocks of p"),
                            ("normalizer-automaton", cmd_normalizer_automaton, "normalization automaton")):
        sp = add(name, fn, help_)
        base_arg(sp)
        sp.add_argument("--alphabets")
        automaton_args(sp)

    sp = add("converter", cmd_converter, "converter between two digit alphabets")
    base_arg(sp)
    sp.add_argument("--alphabets")
    sp.add_argument("--alphabets2", required=True, help="target alphabets D'")
    automaton_args(sp)

    sp = add("greedy-automaton", cmd_greedy_automaton, "automaton of greedy expansions")
    base_arg(sp)
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    sp.add_argument("--out")
    sp.add_argument("--cap", type=int)

    sp = add("spectrum", cmd_spectrum, "truncated spectrum as JSON")
    base_arg(sp)
    sp.add_argument("--alphabets")
    sp.add_argument("--phase", type=int, default=0)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--element-cap", type=int)

    sp = add("min-gap", cmd_min_gap, "CSV of minimal gaps per level")
    base_arg(sp)
    sp.add_argument("--alphabets")
    sp.add_argument("--phase", type=int, default=0)
    sp.add_argument("--max-level", type=int, default=6)
    sp.add_argument("--element-cap", type=int)

    sp = add("separation-bound", cmd_separation_bound, "certified lower bound on spectrum gaps")
    base_arg(sp)
    sp.add_argument("--alphabets")
    sp.add_argument("--phase", type=int, default=0)
    sp.add_argument("--precision", type=int)

    sp = add("normalize", cmd_normalize, "greedy expansion of the value of a word")
    base_arg(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--alphabets")
    sp.add_argument("--cap", type=int)

    sp = add("accept", cmd_accept, "run a saved automaton on a lasso word")
    sp.add_argument("--automaton", required=True, help="automaton JSON")
    sp.add_argument("--word")
    sp.add_argument("--pair")

    sp = add("delta-poly", cmd_delta_poly, "monic polynomial vanishing at delta")
    sp.add_argument("--words", nargs="+", required=True)
    sp.add_argument("--field")

    sp = add("recover-bases", cmd_recover_bases, "base determined by delta and the expansions of 1")
    sp.add_argument("--field", required=True)
    sp.add_argument("--words", nargs="+", required=True)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        args.fn(args)
    except Undecided:
        return EXIT_CAP
    except CAP_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except errors.AltBaseError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
