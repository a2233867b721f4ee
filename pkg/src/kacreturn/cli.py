"""Command line entry point.

::

    kacreturn verify --system cycle5.json --set '{"points": [0, 2]}'
    kacreturn series --system rot.json --set '{"intervals": [["0", "1/5"]]}'
    kacreturn gen --kind random_permutation --n 12 --seed 7 --out sys.json

Exit codes: 0 success, 1 the verifier found the two sides unequal, 2 bad input.
JSON is the default output; ``--output human`` prints a small table instead.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .dynamics import generate
from .errors import KacError, ParseError
from .iet import IET, compile, induced_iet
from .measure import parse_rational
from .recurrence import (
    Verifier,
    induced_map,
    kac_check,
    kakutani_tower,
    return_time_distribution,
    series_terms,
)

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_INPUT = 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kacreturn", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, help_ in [
        ("verify", "compare the return-time integral with the closure measure"),
        ("series", "terms a_n, b_n and partial sums"),
        ("tower", "Kakutani tower over the set"),
        ("induce", "first-return system on the set"),
        ("dist", "distribution of return times"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--system", required=True, help="system JSON file")
        p.add_argument("--set", dest="set_", help="set as inline JSON or a path to a JSON file")
        p.add_argument("--output", choices=["json", "human"], default="json")
        if name == "verify":
            p.add_argument("--normalize", action="store_true", help="also report lhs / total measure")
        if name == "series":
            p.add_argument("--horizon", type=int)

    g = sub.add_parser("gen", help="write a generated test system")
    g.add_argument("--kind", required=True, choices=["cycle", "random_permutation", "cat_map"])
    g.add_argument("--n", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--total", default=None)
    g.add_argument("--seed", type=int)
    g.add_argument("--max-denominator", type=int, default=None)
    g.add_argument("--out", type=Path)
    g.add_argument("--output", choices=["json", "human"], default="json")
    return parser


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _set_document(arg: Optional[str]) -> str:
    if arg is None:
        raise ParseError("missing --set")
    return arg if arg.lstrip().startswith("{") else _read(arg)


def _table(rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def _human(subcommand: str, payload) -> str:
    if subcommand == "verify":
        return _table([["field", "value"]] + [[k, v] for k, v in payload.items()])
    if subcommand == "series":
        rows = [["n", "a_n", "b_n", "partial_sum"]]
        for n, row in enumerate(zip(payload["terms_a"], payload["terms_b"], payload["partial_sums"]), 1):
            rows.append([n, *row])
        return f"mu_E = {payload['mu_E']}\n" + _table(rows)
    if subcommand == "tower":
        rows = [["return_time", "base", "levels"]]
        for col in payload["columns"]:
            rows.append([col["return_time"], col["base"], col["levels"]])
        return _table(rows)
    if subcommand == "dist":
        return _table([["k", "mass"]] + [[d["k"], d["mass"]] for d in payload])
    return _table([["field", "value"]] + [[k, v] for k, v in payload.items()])


def _run(args: argparse.Namespace, verifier: Verifier) -> tuple[object, int]:
    if args.subcommand == "gen":
        params = {"cycle": ("n", "total"), "random_permutation": ("n", "seed", "max_denominator"),
                  "cat_map": ("q",)}[args.kind]
        kwargs = {k: getattr(args, k) for k in params if getattr(args, k) is not None}
        if "total" in kwargs:
            kwargs["total"] = parse_rational(kwargs["total"])
        payload = io.system_to_json(generate(args.kind, **kwargs))
        if args.out is not None:
            args.out.write_text(io.dumps(payload), encoding="utf-8")
        return payload, EXIT_OK

    system = io.parse_system(_read(args.system))
    set_doc = _set_document(args.set_)

    if isinstance(system, IET):
        E_iv = io.parse_interval_set(set_doc)
        if args.subcommand == "induce":
            return io.system_to_json(induced_iet(system, E_iv)), EXIT_OK
        comp, (E,) = compile(system, [E_iv])
        space, T = comp.space, comp.map
        extra = {"grid_order": comp.grid_order}
    else:
        space, T = system
        E = io.parse_point_set(set_doc, space.size)
        extra = {}

    if args.subcommand == "verify":
        report = verifier(space, T, E)
        payload = io.report_to_json(report, normalize=args.normalize)
        if extra:
            payload["invariant_closure"] = io.intervals_to_json(comp.cells_to_intervals(report.rhs_set))
        payload.update(extra)
        return payload, EXIT_OK if report.equal else EXIT_UNEQUAL
    if args.subcommand == "series":
        payload = io.series_to_json(series_terms(T, E, args.horizon))
        payload.update(extra)
        return payload, EXIT_OK
    if args.subcommand == "tower":
        payload = io.tower_to_json(kakutani_tower(space, T, E))
        payload.update(extra)
        return payload, EXIT_OK
    if args.subcommand == "dist":
        return io.distribution_to_json(return_time_distribution(T, E)), EXIT_OK
    return io.system_to_json(induced_map(space, T, E)), EXIT_OK


def main(argv: Optional[Sequence[str]] = None, verifier: Verifier = kac_check) -> int:
    """Run one subcommand. ``verifier`` is replaceable for testing the exit-1 path."""
    args = _parser().parse_args(argv)
    try:
        payload, code = _run(args, verifier)
    except (KacError, ValueError) as exc:
        print(f"kacreturn: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.subcommand == "gen" and args.out is not None:
        return code
    if args.output == "human":
        sys.stdout.write(_human(args.subcommand, payload))
    else:
        sys.stdout.write(io.dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
