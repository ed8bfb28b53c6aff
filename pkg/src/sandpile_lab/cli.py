"""Command-line surface: enumerate, biject, table, simulate, verify.

Exit codes: 0 on success (and on a passing verification), 1 when a
verification fails, 2 on usage errors.  All outputs are deterministic given
the flags (plus the seed where one applies).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import fan as fan_mod
from . import paths as paths_mod
from . import wheel as wheel_mod
from .engine import RNG_DESCRIPTION, enumerate_recurrent, level, simulate_markov
from .errors import SandpileError
from .graphs import DEFAULT_EDGE_CAP, Graph, enumerate_subgraphs, make_cycle, make_fan, make_wheel
from .serialize import (
    dumps,
    format_config,
    graph_from_json,
    graph_to_json,
    parse_config,
    pmo_from_json,
    pmo_to_json,
    subgraph_from_json,
    subgraph_to_json,
)
from .verify import THEOREM_CHECKS, theorem_tags, verify_theorem

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _add_common(parser: argparse.ArgumentParser, formats=("json", "csv")) -> None:
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--output", default=None, help="write to this path instead of stdout")
    parser.add_argument("--cap", type=int, default=DEFAULT_EDGE_CAP, help="brute-force edge cap")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_graph(args) -> Graph:
    if args.family == "wheel":
        if args.n is None or args.n < 3:
            raise UsageError("--family wheel needs --n >= 3")
        return make_wheel(args.n)
    if args.family == "fan":
        if args.n is None or args.n < 2:
            raise UsageError("--family fan needs --n >= 2")
        return make_fan(args.n)
    if args.family == "custom":
        if not args.graph_json:
            raise UsageError("--family custom needs --graph-json")
        return graph_from_json(json.loads(args.graph_json))
    raise UsageError(f"unknown family {args.family!r}")


# --------------------------------------------------------------------------
# enumerate
# --------------------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    g = _family_graph(args)
    rows = []
    for c in enumerate_recurrent(g, args.model, cap=args.cap):
        row = {"config": list(c), "level": level(c, g)}
        if args.family == "wheel":
            row["weight01"] = wheel_mod.weight01star(c)
        rows.append(row)
    if args.format == "json":
        _emit(dumps(rows) + "\n", args.output)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        if args.family == "wheel":
            writer.writerow(["config", "level", "weight01"])
            for row in rows:
                writer.writerow([" ".join(map(str, row["config"])), row["level"], row["weight01"]])
        else:
            writer.writerow(["config", "level"])
            for row in rows:
                writer.writerow([" ".join(map(str, row["config"])), row["level"]])
        _emit(buf.getvalue(), args.output)
    return 0


# --------------------------------------------------------------------------
# biject
# --------------------------------------------------------------------------


def _apply_map(name: str, payload: str, n: int | None) -> str:
    if name == "wheel-canonical":
        return format_config(wheel_mod.canonical_minimal(parse_config(payload)))
    if name == "wheel-to-pmo":
        return dumps(pmo_to_json(wheel_mod.phi_W(parse_config(payload))))
    if name == "wheel-from-pmo":
        return format_config(wheel_mod.psi_W(pmo_from_json(json.loads(payload))))
    if name == "wheel-to-subgraph":
        c = parse_config(payload)
        return dumps(subgraph_to_json(wheel_mod.pmo_to_subgraph(wheel_mod.phi_W(c))))
    if name == "wheel-from-subgraph":
        if n is None:
            raise UsageError("--map wheel-from-subgraph needs --n (the rim size)")
        s = subgraph_from_json(json.loads(payload))
        return format_config(wheel_mod.psi_W(wheel_mod.subgraph_to_pmo(s, n)))
    if name == "fan-to-word":
        return str(fan_mod.phi_F(parse_config(payload)))
    if name == "fan-from-word":
        return format_config(fan_mod.psi_F(fan_mod.PMWord.parse(payload)))
    if name == "fan-to-subgraph":
        c = parse_config(payload)
        return dumps(subgraph_to_json(fan_mod.word_to_subgraph(fan_mod.phi_F(c))))
    if name == "fan-from-subgraph":
        s = subgraph_from_json(json.loads(payload))
        return format_config(fan_mod.psi_F(fan_mod.subgraph_to_word(s, n)))
    if name == "word-to-subgraph":
        return dumps(subgraph_to_json(fan_mod.word_to_subgraph(fan_mod.PMWord.parse(payload))))
    if name == "word-from-subgraph":
        return str(fan_mod.subgraph_to_word(subgraph_from_json(json.loads(payload)), n))
    raise UsageError(f"unknown map {name!r}")


#: map name -> (input flag attribute, inverse map or None)
_MAP_SPEC = {
    "wheel-canonical": ("config", None),
    "wheel-to-pmo": ("config", "wheel-from-pmo"),
    "wheel-from-pmo": ("json", "wheel-to-pmo"),
    "wheel-to-subgraph": ("config", "wheel-from-subgraph"),
    "wheel-from-subgraph": ("json", "wheel-to-subgraph"),
    "fan-to-word": ("config", "fan-from-word"),
    "fan-from-word": ("word", "fan-to-word"),
    "fan-to-subgraph": ("config", "fan-from-subgraph"),
    "fan-from-subgraph": ("json", "fan-to-subgraph"),
    "word-to-subgraph": ("word", "word-from-subgraph"),
    "word-from-subgraph": ("json", "word-to-subgraph"),
}

BIJECT_MAPS = tuple(_MAP_SPEC)


def _cmd_biject(args) -> int:
    source_attr, inverse = _MAP_SPEC[args.map]
    payload = getattr(args, source_attr)
    if payload is None:
        raise UsageError(f"--map {args.map} needs --{source_attr}")
    n = args.n
    if n is None and source_attr == "config":
        n = len(parse_config(payload))
    out = _apply_map(args.map, payload, n)
    if args.check:
        if inverse is None:
            raise UsageError(f"--map {args.map} is not invertible; --check does not apply")
        restored = _apply_map(inverse, out, n)
        if restored != payload:
            sys.stderr.write(f"round-trip mismatch: {restored!r} != {payload!r}\n")
            return 1
    _emit(out + "\n", args.output)
    return 0


# --------------------------------------------------------------------------
# table
# --------------------------------------------------------------------------


def _table_rows(which: str, n_max: int, level_order: str) -> tuple[list[str], list[list[int]]]:
    if which == "differed-delannoy":
        rows = [
            [n, k, paths_mod.count_differed_delannoy(n, k)]
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
        ]
        return ["n", "k", "count"], rows
    if which == "fan-levels":
        rows = []
        for n in range(1, n_max + 1):
            ks = range(n - 1, -1, -1) if level_order == "desc" else range(n)
            rows.extend([n, k, fan_mod.count_rec_fan(n, k)] for k in ks)
        return ["n", "level", "count"], rows
    if which == "kimberling":
        rows = [
            [i, j, paths_mod.count_kimberling_total(i, j)]
            for i in range(1, n_max + 1)
            for j in range(0, n_max + 1)
        ]
        return ["i", "j", "count"], rows
    if which == "wheel-subgraph-counts":
        rows = []
        for n in range(3, n_max + 1):
            counts: dict[int, int] = {}
            for s in enumerate_subgraphs(make_cycle(n)):
                counts[s.n_edges] = counts.get(s.n_edges, 0) + 1
            rows.extend([n, k, counts[k]] for k in sorted(counts))
        return ["n", "edges", "count"], rows
    raise UsageError(f"unknown table {which!r}")


def _cmd_table(args) -> int:
    header, rows = _table_rows(args.which, args.n_max, args.level_order)
    if args.format == "json":
        payload = {"table": args.which, "rows": [dict(zip(header, row)) for row in rows]}
        _emit(dumps(payload) + "\n", args.output)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        _emit(buf.getvalue(), args.output)
    return 0


# --------------------------------------------------------------------------
# simulate
# --------------------------------------------------------------------------


def _cmd_simulate(args) -> int:
    g = _family_graph(args)
    mu = None
    if args.mu:
        mu = [float(x) for x in args.mu.split(",")]
    visits = simulate_markov(g, args.model, mu, args.p, args.steps, args.seed, args.burn_in)
    payload = {
        "graph": graph_to_json(g),
        "model": args.model,
        "steps": args.steps,
        "burn_in": args.burn_in,
        "seed": args.seed,
        "schedule": "lowest-index",
        "rng": RNG_DESCRIPTION,
        "visits": {format_config(c): visits[c] for c in sorted(visits)},
    }
    if args.model == "ssm":
        payload["p"] = args.p
    _emit(dumps(payload) + "\n", args.output)
    return 0


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.theorem not in THEOREM_CHECKS:
        raise UsageError(
            f"unknown theorem tag {args.theorem!r}; known tags: {', '.join(theorem_tags())}"
        )
    report = verify_theorem(args.theorem, args.n_max)
    _emit(dumps(report) + "\n", args.output)
    return 0 if report["status"] == "pass" else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sandpile-lab",
        description="Sandpile models on small graphs: enumeration, bijections, tables, simulation, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list recurrent configurations with statistics")
    p_enum.add_argument("--family", choices=("wheel", "fan", "custom"), required=True)
    p_enum.add_argument("--n", type=int, default=None)
    p_enum.add_argument("--model", choices=("asm", "ssm"), default="asm")
    p_enum.add_argument("--graph-json", default=None, help="graph literal for --family custom")
    _add_common(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_bij = sub.add_parser("biject", help="apply one of the bijections to a payload")
    p_bij.add_argument("--map", choices=BIJECT_MAPS, required=True)
    p_bij.add_argument("--config", default=None, help="comma-joined grain counts")
    p_bij.add_argument("--word", default=None, help="space-joined letters Lu/Lm/R")
    p_bij.add_argument("--json", default=None, help="subgraph or marked-orientation literal")
    p_bij.add_argument("--n", type=int, default=None, help="ambient size for inverse maps that need it")
    p_bij.add_argument("--check", action="store_true", help="verify the round trip; exit 1 on mismatch")
    p_bij.add_argument("--output", default=None)
    p_bij.set_defaults(func=_cmd_biject)

    p_tab = sub.add_parser("table", help="counting tables")
    p_tab.add_argument(
        "--which",
        choices=("differed-delannoy", "fan-levels", "kimberling", "wheel-subgraph-counts"),
        required=True,
    )
    p_tab.add_argument("--n-max", type=int, required=True)
    p_tab.add_argument("--level-order", choices=("desc", "asc"), default="desc")
    _add_common(p_tab, formats=("csv", "json"))
    p_tab.set_defaults(func=_cmd_table)

    p_sim = sub.add_parser("simulate", help="run the add-and-stabilise chain")
    p_sim.add_argument("--family", choices=("wheel", "fan", "custom"), required=True)
    p_sim.add_argument("--n", type=int, default=None)
    p_sim.add_argument("--model", choices=("asm", "ssm"), default="asm")
    p_sim.add_argument("--graph-json", default=None)
    p_sim.add_argument("--p", type=float, default=None, help="per-neighbour send probability (ssm)")
    p_sim.add_argument("--mu", default=None, help="comma-joined vertex probabilities; uniform if omitted")
    p_sim.add_argument("--steps", type=int, required=True)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--burn-in", type=int, default=0)
    p_sim.add_argument("--output", default=None)
    p_sim.set_defaults(func=_cmd_simulate)

    p_ver = sub.add_parser("verify", help="run a registered cross-check and report pass/fail")
    p_ver.add_argument("--theorem", required=True, help=f"one of: {', '.join(theorem_tags())}")
    p_ver.add_argument("--n-max", type=int, required=True)
    p_ver.add_argument("--output", default=None)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return USAGE_ERROR
    except (SandpileError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
