"""Command-line surface: reg, classify, colon, and sweep subcommands.

Configuration precedence is flags over environment (EDGEREG_WORKERS,
EDGEREG_FIELD) over a key=value config file; unknown config keys are
rejected.  Exit codes: 0 all-pass, 1 verification failure, 2 usage or parse
error, 3 resource cap exceeded.  Identical inputs and configuration produce
byte-identical output: seeds are fixed, orderings canonical, and timings are
kept out of the machine-readable formats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .betti import koszul_betti, regularity
from .characterizations import (
    DEFAULT_SEED,
    classify_bipartite,
    summarize_reports,
    sweep,
)
from .errors import EdgeRegError, GraphFormatError, ResourceCapError, VerificationFailure
from .even_connection import colon_graph, find_even_connection
from .graphio import decode_graph6, parse_edge_list
from .graphs import Graph
from .homology import FieldChoice
from .monomials import SFoldProduct, edge_ideal, power
from .parallel import default_workers

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_CONFIG_KEYS = {
    "field", "smax", "n", "workers", "seed", "format", "lattice_cap",
}


@dataclass
class Config:
    field: FieldChoice = FieldChoice.GF2
    s_max: int = 2
    n_max: int = 6
    lattice_cap: int = 200_000
    seed: int = DEFAULT_SEED
    workers: int = 1
    fmt: str = "text"


def _load_config_file(path: str) -> dict:
    values: dict[str, str] = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise EdgeRegError(
                        f"{path}:{lineno}: expected key=value, got {line!r}"
                    )
                key, value = (part.strip() for part in line.split("=", 1))
                if key not in _CONFIG_KEYS:
                    raise EdgeRegError(f"{path}:{lineno}: unknown key {key!r}")
                values[key] = value
    except OSError as exc:
        raise EdgeRegError(f"cannot read config file {path}: {exc}") from exc
    return values


def build_config(args: argparse.Namespace) -> Config:
    cfg = Config(workers=default_workers())
    file_values = _load_config_file(args.config) if getattr(args, "config", None) else {}

    def pick(flag_name, env_name, file_key, parse, current):
        flag = getattr(args, flag_name, None)
        if flag is not None:
            return parse(flag)
        if env_name and os.environ.get(env_name):
            return parse(os.environ[env_name])
        if file_key in file_values:
            return parse(file_values[file_key])
        return current

    try:
        cfg.field = pick("field", "EDGEREG_FIELD", "field", FieldChoice.parse, cfg.field)
        cfg.s_max = pick("smax", None, "smax", int, cfg.s_max)
        cfg.n_max = pick("n", None, "n", int, cfg.n_max)
        cfg.workers = pick("workers", "EDGEREG_WORKERS", "workers", int, cfg.workers)
        cfg.seed = pick("seed", None, "seed", int, cfg.seed)
        cfg.fmt = pick("format", None, "format", str, cfg.fmt)
        cfg.lattice_cap = pick("lattice_cap", None, "lattice_cap", int, cfg.lattice_cap)
    except ValueError as exc:
        raise EdgeRegError(str(exc)) from exc
    if cfg.fmt not in ("text", "json", "csv"):
        raise EdgeRegError(f"unknown format {cfg.fmt!r}")
    if cfg.lattice_cap <= 0 or cfg.workers <= 0 or cfg.s_max <= 0:
        raise EdgeRegError("caps, workers and powers must be positive")
    return cfg


def read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    if path.endswith(".g6"):
        records = [line for line in text.splitlines() if line.strip()]
        if not records:
            raise GraphFormatError(f"{path}: no graph6 records")
        return decode_graph6(records[0])
    return parse_edge_list(text)


def _emit_table(table, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(table.to_json(), sort_keys=True), file=out)
    elif fmt == "csv":
        out.write(table.to_csv())
    else:
        entries = sorted(table.entries.items())
        width = max(len(str(v)) for _, v in entries)
        for (i, j), v in entries:
            print(f"beta[{i},{j}] = {v:>{width}}", file=out)


def cmd_reg(args, out) -> int:
    cfg = build_config(args)
    g = read_graph(args.input)
    s = args.power or 1
    ideal = power(edge_ideal(g), s)
    table = koszul_betti(ideal, cfg.field, cfg.lattice_cap)
    r = table.regularity()
    print(f"reg(I(G)^{s}) = {r}" if s > 1 else f"reg(I(G)) = {r}", file=out)
    _emit_table(table, cfg.fmt, out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    build_config(args)
    g = read_graph(args.input)
    cls = classify_bipartite(g)
    print(f"class: {cls.tag}", file=out)
    for name, witness in sorted(cls.certificates.items()):
        if witness is not None:
            cyc = ",".join(g.label_of(v) for v in witness.vertices)
            print(f"certificate {name}: cycle [{cyc}]", file=out)
    return EXIT_OK


def _parse_edge_tokens(g: Graph, spec: str) -> list[tuple[int, int]]:
    label_to_index = {g.label_of(v): v for v in range(g.n)}
    factors = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        sep = ":" if ":" in item else "-"
        parts = item.split(sep)
        if len(parts) != 2:
            raise EdgeRegError(f"bad edge token {item!r} (expected 'u:v')")
        try:
            u, v = (label_to_index[p.strip()] for p in parts)
        except KeyError as exc:
            raise EdgeRegError(f"unknown vertex label {exc.args[0]!r}") from exc
        if not g.has_edge(u, v):
            raise EdgeRegError(f"{item!r} is not an edge of the graph")
        factors.append((u, v))
    if not factors:
        raise EdgeRegError("no edges given")
    return factors


def cmd_colon(args, out) -> int:
    cfg = build_config(args)
    g = read_graph(args.input)
    factors = _parse_edge_tokens(g, args.edges)
    product = SFoldProduct.of(g, factors)
    result = colon_graph(g, product)
    record = {
        "s": product.s,
        "factors": [[g.label_of(u), g.label_of(v)] for u, v in product.factors],
        "new_edges": sorted(
            [g.label_of(u), g.label_of(v)] for u, v in result.new_edges
        ),
        "squares": sorted(g.label_of(v) for v in result.extra_squares),
    }
    if args.witnesses:
        witnesses = {}
        for u, v in sorted(result.new_edges):
            w = find_even_connection(g, product, u, v)
            witnesses[f"{g.label_of(u)}:{g.label_of(v)}"] = {
                "path": [g.label_of(p) for p in w.path],
                "factors": list(w.factor_assignment),
            }
        for u in sorted(result.extra_squares):
            w = find_even_connection(g, product, u, u)
            witnesses[f"{g.label_of(u)}:{g.label_of(u)}"] = {
                "path": [g.label_of(p) for p in w.path],
                "factors": list(w.factor_assignment),
            }
        record["witnesses"] = witnesses
    if cfg.fmt == "json":
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        print(f"new edges: {record['new_edges']}", file=out)
        print(f"squares: {record['squares']}", file=out)
        for key, w in record.get("witnesses", {}).items():
            print(f"witness {key}: path {w['path']} factors {w['factors']}", file=out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    cfg = build_config(args)
    if cfg.n_max > 8:
        raise ResourceCapError(f"sweep cap: n={cfg.n_max} above supported 8")
    if cfg.n_max == 8 and not args.allow_large:
        raise ResourceCapError("n=8 sweeps require --allow-large")
    failures = 0
    reports = []
    try:
        for report in sweep(cfg.n_max, cfg.s_max, cfg.field, cfg.seed, cfg.workers):
            reports.append(report)
            print(json.dumps(report.to_json(), sort_keys=True), file=out)
            if not report.passed:
                failures += 1
    finally:
        summary = summarize_reports(reports)
        if cfg.fmt == "csv":
            print("graph6,n,class,reg_sequence,passed", file=out)
            for r in reports:
                regs = " ".join(
                    str(r.reg_powers[s]) for s in sorted(r.reg_powers)
                )
                print(
                    f"{r.graph6},{r.n},{r.reg_class},{regs},{int(r.passed)}",
                    file=out,
                )
        print(f"summary: {json.dumps(summary, sort_keys=True)}", file=out)
    return EXIT_OK if failures == 0 else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgereg",
        description="Regularity of edge ideals and their powers, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", help="f2 (default) or q")
        p.add_argument("--workers", type=int, help="worker processes")
        p.add_argument("--seed", type=int, help="seed for sampled products")
        p.add_argument("--format", help="text, json, or csv")
        p.add_argument("--lattice-cap", dest="lattice_cap", type=int,
                       help="lcm-lattice element cap")
        p.add_argument("--config", help="key=value config file")

    p_reg = sub.add_parser("reg", help="regularity and Betti table of I(G)^s")
    p_reg.add_argument("input", help="edge-list file, .g6 file, or - for stdin")
    p_reg.add_argument("--power", type=int, default=1, metavar="S")
    common(p_reg)
    p_reg.set_defaults(func=cmd_reg)

    p_cls = sub.add_parser("classify", help="combinatorial regularity class")
    p_cls.add_argument("input")
    common(p_cls)
    p_cls.set_defaults(func=cmd_classify)

    p_col = sub.add_parser("colon", help="colon graph of a product of edges")
    p_col.add_argument("input")
    p_col.add_argument("--edges", required=True,
                       help="comma-separated u:v edge tokens, repeats allowed")
    p_col.add_argument("--witnesses", action="store_true",
                       help="print one even-connection witness per new pair")
    common(p_col)
    p_col.set_defaults(func=cmd_colon)

    p_sw = sub.add_parser("sweep", help="verification sweep over bipartite classes")
    p_sw.add_argument("--n", type=int, help="largest vertex count (default 6)")
    p_sw.add_argument("--smax", type=int, help="largest power (default 2)")
    p_sw.add_argument("--allow-large", action="store_true",
                      help="permit the n=8 sweep")
    common(p_sw)
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(json.dumps(exc.report.to_json(), sort_keys=True), file=sys.stderr)
        return EXIT_VERIFICATION
    except (EdgeRegError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
