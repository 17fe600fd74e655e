"""Command-line interface: ``unilink compute | verify | oracle | limit``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .acceptance import SUITES, Budget, _Memo, run_suite
from .braid import BraidWord, link_data
from .laurent import LaurentPoly, monomial
from .oracles import alexander, jones_tl
from .specialize import ado_polynomial, jones_polynomial, psi_ado, psi_jones
from .unify import universal_sequence
from .verma import NORMALIZATIONS, a_gamma, j_gamma

MODES = ("a_gamma", "j_gamma", "ado", "jones", "universal-sequence")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"expected integers, got {text!r}") from exc


def _braid(args: argparse.Namespace) -> BraidWord:
    try:
        b = BraidWord.parse(args.braid, args.strands)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return b


def _link(args: argparse.Namespace, b: BraidWord):
    link = link_data(b)
    framings = _int_list(args.framings)
    if framings is not None:
        try:
            link = link.with_framings(framings)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return link


def _level(args: argparse.Namespace) -> int:
    if args.level < 2:
        raise UsageError("--level must be at least 2")
    return args.level


def _colours(args: argparse.Namespace, components: int) -> list[int]:
    cols = _int_list(args.colours)
    if cols is None:
        cols = [args.level] * components
    if len(cols) == 1 and components > 1:
        cols = cols * components
    if len(cols) != components:
        raise UsageError(f"--colours needs {components} entries (one per component), got {len(cols)}")
    if any(c < 2 for c in cols):
        raise UsageError("colours must be at least 2")
    return cols


def _emit(fmt: str, payload: dict, value: LaurentPoly | None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(value.to_text() if value is not None else json.dumps(payload, sort_keys=True, indent=2))


def cmd_compute(args: argparse.Namespace) -> int:
    b = _braid(args)
    link = _link(args, b)
    header = {"mode": args.mode, "braid": {"strands": b.strands, "word": list(b.letters)},
              "framings": list(link.framings)}
    if args.mode == "universal-sequence":
        seq = universal_sequence(b, link, args.max_level, jobs=args.jobs, check=False)
        payload = {**header, **seq.to_json_obj()}
        print(json.dumps(payload, sort_keys=True, indent=None if args.format == "json" else 2))
        return EXIT_OK if all(c["coherent"] for c in seq.coherence) else EXIT_FAILED
    if args.mode in ("a_gamma", "ado"):
        level = _level(args)
        value = a_gamma(b, level, link, normalization=args.normalization, jobs=args.jobs)
        header["level"] = level
        if args.mode == "ado":
            if args.raw:
                value = psi_ado(level)(value)
            else:
                value = ado_polynomial(value, level)
                value = value * monomial(1, {"x": -value.min_degree("x")})
            header["target"] = f"Q(T)[x], T a primitive {4 * level}-th root of unity"
    else:
        cols = _colours(args, link.components)
        header["colours"] = cols
        value = j_gamma(b, cols, link, jobs=args.jobs)
        if args.mode == "jones":
            if all(c == 2 for c in cols):
                value = jones_polynomial(value, link)
                header["target"] = "Z[A^+-1], unknot = 1"
            else:
                value = psi_jones(cols)(value)
                header["target"] = "Z[S^+-1], q = S^2"
    payload = {**header, "value": value.to_json_obj(), "text": value.to_text()}
    _emit(args.format, payload, value)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_level < 2 or (args.level is not None and args.level < 2):
        raise UsageError("levels must be at least 2")
    levels = (args.level,) if args.level is not None else (2, 3)
    budget = Budget(max_level=args.max_level, markov_levels=levels, corpus=args.corpus)
    reports = run_suite(args.suite, _Memo(), budget)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "ok": all(r.ok for r in reports),
                          "criteria": [r.to_json_obj() for r in reports]}, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
            for c in r.failures():
                extra = f": expected {c.expected}, got {c.actual}" if c.expected or c.actual else ""
                print(f"      {c.name}{extra}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def cmd_oracle(args: argparse.Namespace) -> int:
    b = _braid(args)
    alex = alexander(b)
    jones = jones_tl(b)
    payload = {"braid": {"strands": b.strands, "word": list(b.letters)},
               "alexander": {"value": alex.to_json_obj(), "text": alex.to_text()},
               "jones": {"value": jones.to_json_obj(), "text": jones.to_text()}}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"alexander: {alex.to_text()}")
        print(f"jones: {jones.to_text()}")
    return EXIT_OK


def cmd_limit(args: argparse.Namespace) -> int:
    b = _braid(args)
    link = _link(args, b)
    if args.max_level < 2:
        raise UsageError("--max-level must be at least 2")
    seq = universal_sequence(b, link, args.max_level, jobs=args.jobs, check=False)
    obj = seq.to_json_obj()
    out = {"levels": obj["levels"], "coherence": obj["coherence"],
           "coherent": all(c["coherent"] for c in obj["coherence"])}
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK if out["coherent"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unilink", description="Unified quantum link invariants from braid words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--braid", required=True, help='signed generator indices, e.g. "1 1 1"')
        p.add_argument("--strands", type=int, default=None, help="strand count (default: max index + 1)")
        p.add_argument("--framings", default=None, help="one integer per component (default: blackboard)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for the state sum")

    p = sub.add_parser("compute", help="compute an invariant")
    braid_args(p)
    p.add_argument("--mode", choices=MODES, default="a_gamma")
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--colours", default=None, help="per-component colours for j_gamma / jones")
    p.add_argument("--max-level", type=int, default=3)
    p.add_argument("--normalization", choices=NORMALIZATIONS, default="factorial")
    p.add_argument("--raw", action="store_true",
                   help="ado mode: keep the open-strand factor and separate colours")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--level", type=int, default=None, help="level for the Markov checks (default: 2 and 3)")
    p.add_argument("--max-level", type=int, default=4, help="highest level swept by the unification checks")
    p.add_argument("--corpus", choices=("small", "full"), default="full")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="classical Alexander and Jones values")
    p.add_argument("--braid", required=True)
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("limit", help="universal sequence with coherence report (JSON)")
    braid_args(p)
    p.add_argument("--max-level", type=int, default=3)
    p.set_defaults(func=cmd_limit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
