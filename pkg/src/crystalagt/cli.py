"""Command line front end: tables, verification suites and series."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .exactfield import RatFunc, from_text, to_latex, to_text
from .partitions import from_obj, partition_text, partitions_of, tuple_text

TABLE_KINDS = ("alpha", "beta", "c_tilde", "c_tilde_star", "shapovalov", "kac")
SERIES_KINDS = ("z_pure", "z_tilde_pure", "z_nf4", "whittaker_norm", "four_point")
SUITES = ("dvir", "nekrasov", "symfunc", "gmac", "laurent", "intertwiner", "all")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    level: list = field(default_factory=lambda: [4])
    N: int = 2
    mode: str = "symbolic"
    fmt: str = "json"
    suites: list = field(default_factory=list)
    workers: int = 1

    def __post_init__(self):
        if any(x < 0 for x in self.level):
            raise UsageError("levels must be >= 0")


# tables ----------------------------------------------------------------------------------------

@dataclass
class Table:
    kind: str
    level: int
    N: int
    rows: list
    cols: list
    entries: list

    def to_json(self) -> dict:
        label = partition_text if self.kind == "kac" else tuple_text
        return {
            "kind": self.kind,
            "level": self.level,
            "N": self.N,
            "rows": [json.loads(label(r)) for r in self.rows],
            "cols": [json.loads(label(c)) for c in self.cols],
            "entries": [[to_text(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Table:
        return cls(
            obj["kind"],
            obj["level"],
            obj["N"],
            [from_obj(r) for r in obj["rows"]],
            [from_obj(c) for c in obj["cols"]],
            [[from_text(x) for x in row] for row in obj["entries"]],
        )


def dump_table_json(obj: dict) -> str:
    """JSON with one line per row label and per entry row."""

    def block(items):
        return "[\n" + ",\n".join("  " + json.dumps(x, separators=(",", ":")) for x in items) + "\n ]"

    head = ", ".join(f"{json.dumps(k)}: {json.dumps(obj[k])}" for k in ("kind", "level", "N"))
    parts = [f" {json.dumps(k)}: {block(obj[k])}" for k in ("rows", "cols")]
    parts.append(' "entries": ' + block(obj["entries"]).replace('","', '", "'))
    return "{" + head + ",\n" + ",\n".join(parts) + "\n}"


def _partition_label(p) -> str:
    return "(" + ",".join(map(str, p)) + ")" if p else "0"


def _tuple_label(x) -> str:
    return "(" + ",".join(_partition_label(p) for p in x) + ")"


def build_table(kind: str, level: int, N: int = 2) -> Table:
    from . import dvir, gmac
    from .partitions import enumerate_tuples

    if kind in ("alpha", "beta"):
        tab = gmac.generic_integral(level, N) if level else None
        if tab is None:
            rows = list(enumerate_tuples(0, N))
            return Table(kind, level, N, rows, rows, [[RatFunc.const(1)]])
        cols = list(enumerate_tuples(level, N))
        rows = tab.order
        data = getattr(tab, kind)
        return Table(kind, level, N, rows, cols, [[data[r].get(c, RatFunc.const(0)) for c in cols] for r in rows])
    if kind in ("c_tilde", "c_tilde_star"):
        if N != 2:
            raise UsageError("crystal tables need N = 2")
        if level == 0:
            rows = list(enumerate_tuples(0, 2))
            return Table(kind, level, N, rows, rows, [[RatFunc.const(1)]])
        tab = gmac.crystal_generalized_hl(level)
        name = "c" if kind == "c_tilde" else "c_star"
        rows = tab.order if name == "c" else tab.dual_order
        return Table(kind, level, N, rows, rows, tab.matrix(name))
    if kind == "shapovalov":
        if N != 2:
            raise UsageError("the Shapovalov table needs N = 2")
        rows = list(enumerate_tuples(level, 2))
        S, _ = gmac.shapovalov(level)
        return Table(kind, level, N, rows, rows, S)
    if kind == "kac":
        rows = list(partitions_of(level))
        return Table(kind, level, 1, rows, rows, dvir.kac_matrix(level, "generic"))
    raise UsageError(f"unknown table {kind!r}")


def render_table(tab: Table, fmt: str) -> str:
    if fmt == "json":
        return dump_table_json(tab.to_json()) + "\n"
    label = _partition_label if tab.kind == "kac" else _tuple_label
    rows = [label(r) for r in tab.rows]
    cols = [label(c) for c in tab.cols]
    if fmt == "latex":
        head = "\\begin{array}{c||" + " ".join("c" for _ in cols) + "}\n"
        head += " & ".join(["\\lambda \\setminus \\mu"] + cols) + " \\\\ \\hline\n"
        body = "".join(
            " & ".join([r] + [to_latex(x) for x in row]) + " \\\\\n" for r, row in zip(rows, tab.entries)
        )
        return head + body + "\\end{array}\n"
    cells = [[to_text(x) for x in row] for row in tab.entries]
    width = [max([len(c)] + [len(row[j]) for row in cells]) for j, c in enumerate(cols)]
    lw = max([len(r) for r in rows] + [len("lam \\ mu")])
    lines = [f"{tab.kind} level {tab.level} N={tab.N}"]
    lines.append(" | ".join(["lam \\ mu".ljust(lw)] + [c.ljust(w) for c, w in zip(cols, width)]).rstrip())
    for r, row in zip(rows, cells):
        lines.append(" | ".join([r.ljust(lw)] + [x.ljust(w) for x, w in zip(row, width)]).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(kind: str, cfg: RunConfig) -> str:
    tabs = [build_table(kind, L, cfg.N) for L in cfg.level]
    if cfg.fmt == "json" and len(tabs) > 1:
        return "[\n" + ",\n".join(dump_table_json(tb.to_json()) for tb in tabs) + "\n]\n"
    return "".join(render_table(tb, cfg.fmt) for tb in tabs)


# verify ----------------------------------------------------------------------------------------

STATUS = {
    ("theorem", True): "proved-equal",
    ("theorem", False): "theorem-fails",
    ("conjecture", True): "conjecture-holds",
    ("conjecture", False): "conjecture-fails",
    ("literal", True): "literal-holds",
    ("literal", False): "literal-fails",
}


def _run_one(args):
    name, level = args
    from . import checks

    t0 = time.perf_counter()
    ok = checks.run(name, level)
    return name, ok, time.perf_counter() - t0


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    from . import checks

    wanted = set(cfg.suites or ["all"])
    level = max(cfg.level)
    names = [c.name for c in checks.REGISTRY.values() if "all" in wanted or c.suite in wanted]
    jobs = [(n, level) for n in names]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    report = []
    failed = False
    for name, ok, secs in results:
        c = checks.REGISTRY[name]
        status = STATUS[(c.kind, ok)]
        failed |= status == "theorem-fails"
        report.append(
            {
                "name": name,
                "suite": c.suite,
                "anchor": c.anchor,
                "kind": c.kind,
                "level": min(level, c.cap),
                "status": status,
                "seconds": round(secs, 3),
            }
        )
    return {"level": level, "mode": cfg.mode, "checks": report}, (1 if failed else 0)


def render_report(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=1) + "\n"
    lines = []
    for c in rep["checks"]:
        lines.append(f"{c['status']:17s} {c['name']:36s} L={c['level']} {c['seconds']:.2f}s  {c['anchor']}")
    if fmt == "latex":
        rows = "".join(f"{c['name']} & {c['status']} & {c['level']} \\\\\n" for c in rep["checks"])
        return "\\begin{tabular}{lll}\n" + rows + "\\end{tabular}\n"
    return "\n".join(lines) + "\n"


# series ----------------------------------------------------------------------------------------

def build_series(which: str, order: int, method: str = "closed", kind: str = "crystal", scaled=None) -> list:
    from . import dvir, intertwiner, nekrasov

    if which == "z_pure":
        return list(nekrasov.z_pure(order))
    if which == "z_tilde_pure":
        return list(nekrasov.z_tilde_pure(order))
    if which == "z_nf4":
        return nekrasov.z_nf4(order, scaled)
    if which == "whittaker_norm":
        return dvir.whittaker_norm(order, kind)
    if which == "four_point":
        return intertwiner.four_point(order, method)
    raise UsageError(f"unknown series {which!r}")


def render_series(values: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([to_text(x) for x in values]) + "\n"
    if fmt == "latex":
        return "".join(f"{n} & {to_latex(x)} \\\\\n" for n, x in enumerate(values))
    return "".join(f"{n}: {to_text(x)}\n" for n, x in enumerate(values))


# entry point -----------------------------------------------------------------------------------

def _levels(text: str) -> list:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad level list {text!r}") from exc
    if not out:
        raise argparse.ArgumentTypeError("empty level list")
    return out


def _scaling(text: str) -> dict:
    vals = [int(x) for x in text.split(",")]
    if len(vals) != 6:
        raise argparse.ArgumentTypeError("need M1,M2,M3,M4,A1,A2")
    return {"M": tuple(vals[:4]), "A": tuple(vals[4:])}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level", "-L", type=_levels, default=[4], help="level bound, or a comma list for tables")
    common.add_argument("--arity", "-N", type=int, default=2)
    common.add_argument("--format", choices=("json", "text", "latex"), default="json")
    common.add_argument("--mode", choices=("symbolic", "fingerprint-first"), default="symbolic")
    common.add_argument("--workers", type=int, default=1)

    ap = argparse.ArgumentParser(prog="crystalagt", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    tp = sub.add_parser("table", parents=[common], help="emit an exact table")
    tp.add_argument("kind", choices=TABLE_KINDS)

    vp = sub.add_parser("verify", parents=[common], help="run verification suites")
    vp.add_argument("suite", nargs="?", choices=SUITES)
    vp.add_argument("--suite", dest="suite_flags", action="append", choices=SUITES, default=[])

    sp = sub.add_parser("series", parents=[common], help="coefficient lists")
    sp.add_argument("which", choices=SERIES_KINDS)
    sp.add_argument("--order", type=int, default=None, help="defaults to the level bound")
    sp.add_argument("--method", choices=("pbw", "closed", "aflt", "aflt_formula"), default="closed")
    sp.add_argument("--kind", choices=("generic", "crystal"), default="crystal", help="for whittaker_norm")
    sp.add_argument("--scaled", type=_scaling, default=None, help="M1,M2,M3,M4,A1,A2 for z_nf4")
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = RunConfig(args.level, args.arity, args.mode, args.format, workers=args.workers)
        if args.command == "table":
            sys.stdout.write(cmd_table(args.kind, cfg))
            return 0
        if args.command == "verify":
            cfg.suites = ([args.suite] if args.suite else []) + args.suite_flags
            rep, code = cmd_verify(cfg)
            sys.stdout.write(render_report(rep, cfg.fmt))
            return code
        order = args.order if args.order is not None else max(cfg.level)
        if order < 0:
            raise UsageError("order must be >= 0")
        vals = build_series(args.which, order, args.method, args.kind, args.scaled)
        sys.stdout.write(render_series(vals, cfg.fmt))
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - any other failure is an internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
