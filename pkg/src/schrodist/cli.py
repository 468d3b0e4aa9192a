"""Command-line front end for the three verification pipelines.

Four subcommands:

* ``verify``      -- compare the inversion-sequence distribution with each
  pattern pair's class distribution, per requested pipeline.
* ``table``       -- dump a recurrence table (u, r, d, e, a) or the Schroder
  triangle, zero cells included.
* ``expand``      -- print series coefficients of a named formula asset.
* ``crosscheck``  -- pipeline-versus-pipeline agreement matrix.

Exit status is 0 iff every requested check passed.  SKIPPED entries (brute
force above its ceiling, default n > 9) do not fail a run.  For a fixed
configuration the output is byte-identical across runs, including under
``--jobs`` parallelism: work is fanned out per (subject, n) and the report
is assembled in a fixed order afterwards.  Polynomial values are always
canonical strings, never floating point or JSON numbers.

The default series truncation order is ``max(12, n_max)``; the 12 can be
overridden with the SCHRODIST_ORDER environment variable or ``--order``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import assets
from .invseq import last_dist_distribution
from .mpoly import MPoly, V, ZERO, first_difference
from .perms import (
    ALL_LENGTH4_PATTERNS,
    EQUIDISTRIBUTED_PAIRS,
    first_desc_distribution,
    pair_from_string,
    pair_id,
)
from .tables import (
    A_CASES,
    a_distribution,
    assemble_U,
    build_a_table,
    build_de_tables,
    build_r_table,
    build_u_table,
    d_distribution,
    r_distribution,
    schroeder_triangle,
)

SCHEMA_VERSION = 1
ORDER_ENV = "SCHRODIST_ORDER"
DEFAULT_BRUTE_CEILING = 9
MODES = ("brute", "dp", "series")

R_PAIR = ((1, 3, 2, 4), (1, 4, 2, 3))
DE_PAIR = ((1, 3, 4, 2), (1, 4, 2, 3))


class ConfigError(ValueError):
    """Invalid command-line configuration."""


# ----------------------------------------------------------------------
# Pipeline dispatch.  Tables and asset series are cached per process so a
# worker reuses them across the (subject, n) jobs it receives; caches grow
# monotonically (a request for a larger n or order rebuilds, a smaller one
# reuses).
# ----------------------------------------------------------------------

_TABLES: dict[object, tuple[int, object]] = {}
_SERIES: dict[str, tuple[int, object]] = {}


def _tables(kind: object, n: int, builder) -> object:
    cached = _TABLES.get(kind)
    if cached is None or cached[0] < n:
        size = max(n, 12)
        cached = (size, builder(size))
        _TABLES[kind] = cached
    return cached[1]


def _series(name: str, order: int):
    cached = _SERIES.get(name)
    if cached is None or cached[0] < order:
        cached = (order, assets.get_series(name, order))
        _SERIES[name] = cached
    return cached[1]


@lru_cache(maxsize=None)
def _seq_brute(n: int) -> MPoly:
    return last_dist_distribution(n)


def sequence_distribution(mode: str, n: int, order: int) -> MPoly:
    """(last, dist) distribution of the inversion-sequence family at size n."""
    if mode == "brute":
        return _seq_brute(n)
    if mode == "dp":
        return assemble_U(n, _tables("u", n, build_u_table))[1]
    return _series("master", order).coeff(n)


def pair_distribution(mode: str, pair, n: int, order: int) -> MPoly:
    """(first letter, descents) distribution of the avoidance class at size n.

    The dp pipeline routes to the recurrence system that covers the pair:
    the act/dact tables for 1324/1423, the decreasing-top tables for
    1342/1423, and the first-two-letters tables for the other four.  The
    series pipeline reads the matching closed form; for 1324/1423 that is
    the identity route through U(x,v,1) + vx/(1-qvx).
    """
    if mode == "brute":
        return first_desc_distribution(n, pair)
    if mode == "dp":
        if pair == R_PAIR:
            return r_distribution(n, _tables("r", n, build_r_table))
        if pair == DE_PAIR:
            return d_distribution(n, _tables("de", n, build_de_tables))
        return a_distribution(n, _tables(("a", pair), n, lambda m: build_a_table(m, pair)))
    if pair == R_PAIR:
        return _series("U_x_v_1", order).coeff(n) + MPoly.monomial(1, q=n - 1, v=n)
    if pair == DE_PAIR:
        return _series("R_first_1342_1423", order).coeff(n) + (V if n == 1 else ZERO)
    return _series("A_x_v_1", order).coeff(n) + (V if n == 1 else ZERO)


def _mono_name(exp: tuple[int, int, int, int]) -> str:
    parts = []
    for var, e in zip(("q", "v", "w", "p"), exp):
        if e == 1:
            parts.append(var)
        elif e:
            parts.append(f"{var}^{e}")
    return "*".join(parts) if parts else "1"


def _diff_detail(label: str, a: MPoly, b: MPoly) -> str:
    exp, ca, cb = first_difference(a, b)
    return f"{label}: first differing coefficient at {_mono_name(exp)} ({ca} vs {cb})"


# ----------------------------------------------------------------------
# Job functions.  Each returns one finished check dict (strings only), so
# results pickle cheaply and the report assembles identically whether the
# jobs ran inline or in a process pool.
# ----------------------------------------------------------------------


def _verify_job(spec) -> dict:
    pair, n, modes, order, ceiling = spec
    ran = [m for m in modes if m != "brute" or n <= ceiling]
    skipped = [m for m in modes if m not in ran]
    notes = [f"{m} SKIPPED (n > {ceiling})" for m in skipped]
    if not ran:
        return {"n": n, "pair": pair_id(pair), "verdict": "SKIPPED", "detail": "; ".join(notes)}
    verdict, details = "EQUAL", []
    shown = None
    for m in ran:
        seq = sequence_distribution(m, n, order)
        cls = pair_distribution(m, pair, n, order)
        if seq == cls:
            shown = seq
        else:
            verdict = "UNEQUAL"
            details.append(_diff_detail(m, seq, cls))
    if verdict == "EQUAL":
        details.append(f"distribution {shown.render()}")
    details.extend(notes)
    return {"n": n, "pair": pair_id(pair), "verdict": verdict, "detail": "; ".join(details)}


def _screen_job(spec) -> dict:
    pair, n = spec
    cls = first_desc_distribution(n, pair)
    seq = _seq_brute(n)
    verdict = "EQUAL" if cls == seq else "UNEQUAL"
    known = pair in EQUIDISTRIBUTED_PAIRS
    if verdict == "EQUAL":
        detail = "matches the inversion-sequence distribution"
        if not known:
            detail += " (coincidence outside the six equidistributed pairs)"
    else:
        detail = _diff_detail("brute", seq, cls)
    return {"n": n, "pair": pair_id(pair), "verdict": verdict, "detail": detail}


def _crosscheck_job(spec) -> dict:
    subject, n, order, ceiling = spec
    dists: dict[str, MPoly] = {}
    for m in MODES:
        if m == "brute" and n > ceiling:
            continue
        if subject == "sequence":
            dists[m] = sequence_distribution(m, n, order)
        else:
            dists[m] = pair_distribution(m, subject, n, order)
    ran = list(dists)
    disagreements = []
    for a, b in combinations(ran, 2):
        if dists[a] != dists[b]:
            disagreements.append(_diff_detail(f"{a}/{b}", dists[a], dists[b]))
    name = "sequence" if subject == "sequence" else pair_id(subject)
    if disagreements:
        return {"n": n, "pair": name, "verdict": "UNEQUAL", "detail": "; ".join(disagreements)}
    parts = ["/".join(ran) + " EQUAL"]
    if "brute" not in ran:
        parts.append(f"brute SKIPPED (n > {ceiling})")
    parts.append(f"distribution {dists[ran[0]].render()}")
    return {"n": n, "pair": name, "verdict": "EQUAL", "detail": "; ".join(parts)}


def _run_jobs(func, specs, jobs: int) -> list[dict]:
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(func, specs))
    return [func(spec) for spec in specs]


# ----------------------------------------------------------------------
# Subcommands.
# ----------------------------------------------------------------------


def cmd_verify(cfg) -> tuple[dict, int]:
    if cfg.screen:
        all_pairs = list(combinations(ALL_LENGTH4_PATTERNS, 2))
        specs = [(pair, n) for n in cfg.ns for pair in all_pairs]
        results = _run_jobs(_screen_job, specs, cfg.jobs)
        checks = [r for r in results if r["verdict"] == "EQUAL"]
        matched = {r["pair"] for r in checks}
        missing = [pair_id(p) for p in EQUIDISTRIBUTED_PAIRS if pair_id(p) not in matched]
        extras = sorted(m for m in matched if m not in {pair_id(p) for p in EQUIDISTRIBUTED_PAIRS})
        summary_verdict = "PASS" if not missing else "FAIL"
        detail = f"{len(results) - len(checks)} pairs UNEQUAL (expected)"
        if extras:
            detail += "; extra coincidences: " + ", ".join(extras)
        if missing:
            detail += "; missing expected pairs: " + ", ".join(missing)
        checks.append({"n": cfg.ns[-1], "pair": "screen summary", "verdict": summary_verdict, "detail": detail})
        report = {"schema": SCHEMA_VERSION, "command": "verify", "checks": checks}
        return report, 0 if summary_verdict == "PASS" else 1
    modes = list(MODES) if cfg.mode == "all" else [cfg.mode]
    specs = [(pair, n, modes, cfg.order, cfg.ceiling) for n in cfg.ns for pair in cfg.pairs]
    checks = _run_jobs(_verify_job, specs, cfg.jobs)
    report = {"schema": SCHEMA_VERSION, "command": "verify", "checks": checks}
    bad = any(c["verdict"] == "UNEQUAL" for c in checks)
    return report, 1 if bad else 0


def cmd_crosscheck(cfg) -> tuple[dict, int]:
    subjects: list = ["sequence"] + list(cfg.pairs)
    specs = [(s, n, cfg.order, cfg.ceiling) for n in cfg.ns for s in subjects]
    checks = _run_jobs(_crosscheck_job, specs, cfg.jobs)
    report = {"schema": SCHEMA_VERSION, "command": "crosscheck", "checks": checks}
    bad = any(c["verdict"] == "UNEQUAL" for c in checks)
    return report, 1 if bad else 0


def _table_cells(which: str, n: int, case) -> list[dict]:
    cells = []

    def put(label, poly):
        value = poly if isinstance(poly, str) else poly.render()
        cells.append({"n": n, "cell": label, "value": value})

    if which == "u":
        table = _tables("u", n, build_u_table)[n]
        for i in range(1, n + 1):
            for j in range(1, n):
                put(f"u_{n}({i},{j})", table.at(i, j))
    elif which == "r":
        table = _tables("r", n, build_r_table)[n]
        if n == 1:
            put("r_1(2,0)", table.at(2, 0))
        else:
            for i in range(3, n + 2):
                for j in range(0, i - 1):
                    put(f"r_{n}({i},{j})", table.at(i, j))
    elif which == "d":
        de = _tables("de", n, build_de_tables)
        for i in range(1, n + 1):
            for m in range(1, n + 1):
                put(f"d_{n}({i},{m})", de.d_at(n, i, m))
    elif which == "e":
        de = _tables("de", n, build_de_tables)
        for m in range(1, n + 1):
            put(f"e_{n}({m})", de.e_at(n, m))
    elif which == "a":
        if n == 1:
            put("a_1(1)", "1")
        else:
            table = _tables(("a", case), n, lambda m: build_a_table(m, case))
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i != j:
                        put(f"a_{n}({i},{j})", table.at(n, i, j))
    else:  # triangle
        tri = schroeder_triangle(n)
        for k in range(1, n + 1):
            put(f"S({n},{k})", str(tri.at(n, k)))
    return cells


def cmd_table(cfg) -> tuple[dict, int]:
    cells = []
    for n in cfg.ns:
        cells.extend(_table_cells(cfg.which, n, cfg.case))
    report = {"schema": SCHEMA_VERSION, "command": "table", "table": cfg.which, "cells": cells}
    return report, 0


def cmd_expand(cfg) -> tuple[dict, int]:
    series = _series(cfg.asset, cfg.order)
    rows = []
    for n in cfg.ns:
        poly = series.coeff(n)
        for var, value in cfg.at:
            poly = poly.subst(var, value)
        rows.append({"n": n, "value": poly.render()})
    report = {
        "schema": SCHEMA_VERSION,
        "command": "expand",
        "asset": cfg.asset,
        "coefficients": rows,
    }
    return report, 0


# ----------------------------------------------------------------------
# Rendering.
# ----------------------------------------------------------------------

_ROWS_KEY = {"verify": "checks", "crosscheck": "checks", "table": "cells", "expand": "coefficients"}
_COLUMNS = {
    "checks": ("n", "pair", "verdict", "detail"),
    "cells": ("n", "cell", "value"),
    "coefficients": ("n", "value"),
}


def render_report(report: dict, fmt: str) -> str:
    key = _ROWS_KEY[report["command"]]
    columns = _COLUMNS[key]
    rows = report[key]
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "tsv":
        lines = ["\t".join(columns)]
        lines += ["\t".join(str(row[c]) for c in columns) for row in rows]
        return "\n".join(lines) + "\n"
    if report["command"] == "table" and report["table"] == "triangle":
        lines = []
        by_n: dict[int, list[str]] = {}
        for row in rows:
            by_n.setdefault(row["n"], []).append(row["value"])
        for n in sorted(by_n):
            lines.append(f"n={n}: " + " ".join(by_n[n]))
        return "\n".join(lines) + "\n"
    if key == "cells":
        return "".join(f"{r['cell']} = {r['value']}\n" for r in rows)
    if key == "coefficients":
        return "".join(f"x^{r['n']}  {r['value']}\n" for r in rows)
    lines = [f"n={r['n']}  {r['pair']}  {r['verdict']}  {r['detail']}" for r in rows]
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Argument plumbing.
# ----------------------------------------------------------------------


class _Config:
    def __init__(self, **kw):
        self.__dict__.update(kw)


def _parse_range(text: str, lo: int) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            n_min, n_max = int(a), int(b)
        else:
            n_min = n_max = int(text)
    except ValueError:
        raise ConfigError(f"bad --n range: {text!r} (expected N or A..B)")
    if n_min < lo or n_max < n_min:
        raise ConfigError(f"need {lo} <= A <= B in --n, got {text!r}")
    return list(range(n_min, n_max + 1))


def _parse_pairs(text: str) -> list:
    if text == "all":
        return list(EQUIDISTRIBUTED_PAIRS)
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            pairs.append(pair_from_string(chunk))
        except ValueError as exc:
            raise ConfigError(str(exc))
    if not pairs:
        raise ConfigError("no pairs given")
    return pairs


def _parse_at(items) -> tuple:
    subs = []
    for item in items or ():
        if "=" not in item:
            raise ConfigError(f"bad --at substitution: {item!r} (expected var=value)")
        var, _, value = item.partition("=")
        var = var.strip()
        if var not in ("q", "v", "w", "p"):
            raise ConfigError(f"unknown variable in --at: {var!r}")
        try:
            subs.append((var, Fraction(value.strip())))
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"bad value in --at: {value!r}")
    return tuple(subs)


def _resolve_order(explicit, n_max: int, series_used: bool) -> int:
    env = os.environ.get(ORDER_ENV)
    if explicit is None and env is not None:
        try:
            explicit = int(env)
        except ValueError:
            raise ConfigError(f"bad {ORDER_ENV} value: {env!r}")
    if explicit is not None:
        if series_used and explicit < n_max:
            raise ConfigError(f"--order {explicit} is below n_max {n_max}")
        return explicit
    return max(assets.DEFAULT_ORDER, n_max)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schrodist",
        description="Exact cross-checks for the equidistribution of (first letter, "
        "descents) on six avoidance classes and (last letter, dist) on "
        "restricted inversion sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, modes=False):
        p.add_argument("--n", default=None, metavar="A..B", help="size range (single N allowed)")
        p.add_argument("--order", type=int, default=None, help="series truncation order")
        p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
        p.add_argument("--jobs", type=int, default=1, metavar="K", help="worker processes")
        p.add_argument(
            "--brute-ceiling",
            type=int,
            default=DEFAULT_BRUTE_CEILING,
            metavar="N",
            help="largest n the brute-force pipeline attempts (default 9)",
        )
        if modes:
            p.add_argument("--mode", choices=MODES + ("all",), default="all")

    p = sub.add_parser("verify", help="inversion sequences versus each pattern pair")
    common(p, modes=True)
    p.add_argument("--pairs", default="all", help="semicolon-separated pairs like 1243,1324 or 'all'")
    p.add_argument(
        "--screen-all-pairs",
        action="store_true",
        help="brute-force every unordered pair of length-4 patterns and report matches",
    )

    p = sub.add_parser("table", help="dump a recurrence table or the Schroder triangle")
    p.add_argument("which", choices=("u", "r", "d", "e", "a", "triangle"))
    p.add_argument("--n", default="4", metavar="A..B")
    p.add_argument("--case", default=None, help="pattern pair for the a-table, e.g. 1324,1342")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")

    p = sub.add_parser("expand", help="series coefficients of a formula asset")
    p.add_argument("asset")
    p.add_argument("--n", default="0..8", metavar="A..B")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--at", action="append", metavar="VAR=VALUE", help="substitute after extraction")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")

    p = sub.add_parser("crosscheck", help="brute/dp/series agreement matrix")
    common(p)
    p.add_argument("--pairs", default="all", help="semicolon-separated pairs or 'all'")
    return parser


def _build_config(args) -> _Config:
    cmd = args.command
    if cmd == "verify":
        default_n = "6" if args.screen_all_pairs else "1..8"
        ns = _parse_range(args.n or default_n, 1)
        pairs = _parse_pairs(args.pairs)
        if args.screen_all_pairs:
            return _Config(
                command=cmd, ns=ns, pairs=pairs, mode="brute", order=0,
                fmt=args.format, jobs=args.jobs, ceiling=args.brute_ceiling, screen=True,
            )
        series_used = args.mode in ("series", "all")
        order = _resolve_order(args.order, ns[-1], series_used)
        if args.mode in ("dp", "series", "all"):
            unknown = [pair_id(p) for p in pairs if p not in EQUIDISTRIBUTED_PAIRS]
            if unknown:
                raise ConfigError(
                    "no dp/series pipeline for pair(s) "
                    + "; ".join(unknown)
                    + " (use --mode brute for arbitrary pairs)"
                )
        return _Config(
            command=cmd, ns=ns, pairs=pairs, mode=args.mode, order=order,
            fmt=args.format, jobs=args.jobs, ceiling=args.brute_ceiling, screen=False,
        )
    if cmd == "crosscheck":
        ns = _parse_range(args.n or "1..8", 1)
        pairs = _parse_pairs(args.pairs)
        unknown = [pair_id(p) for p in pairs if p not in EQUIDISTRIBUTED_PAIRS]
        if unknown:
            raise ConfigError("no dp/series pipeline for pair(s) " + "; ".join(unknown))
        order = _resolve_order(args.order, ns[-1], True)
        return _Config(
            command=cmd, ns=ns, pairs=pairs, order=order,
            fmt=args.format, jobs=args.jobs, ceiling=args.brute_ceiling,
        )
    if cmd == "table":
        ns = _parse_range(args.n, 1)
        case = None
        if args.which == "a":
            if args.case is None:
                raise ConfigError("table a requires --case, e.g. --case 1324,1342")
            case = pair_from_string(args.case)
            if case not in A_CASES:
                raise ConfigError(
                    f"no first-two-letters table for {pair_id(case)}; "
                    "see tables r (1324,1423) and d/e (1342,1423)"
                )
        elif args.case is not None:
            raise ConfigError("--case only applies to table a")
        return _Config(command=cmd, ns=ns, which=args.which, case=case, fmt=args.format)
    # expand
    ns = _parse_range(args.n, 0)
    try:
        asset = assets.get_asset(args.asset)
        if asset.status == "out_of_scope":
            raise ConfigError(
                f"asset {args.asset!r} is reference-only (out of scope) and cannot be expanded"
            )
    except assets.UnknownAssetError:
        if args.asset not in assets.ASSEMBLED:
            known = ", ".join(assets.asset_names() + sorted(assets.ASSEMBLED))
            raise ConfigError(f"unknown asset {args.asset!r} (known: {known})")
    order = _resolve_order(args.order, ns[-1], True)
    return _Config(
        command=cmd, ns=ns, asset=args.asset, at=_parse_at(args.at),
        order=order, fmt=args.format,
    )


_COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "expand": cmd_expand,
    "crosscheck": cmd_crosscheck,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _build_config(args)
    except ConfigError as exc:
        parser.error(str(exc))
    try:
        report, status = _COMMANDS[cfg.command](cfg)
    except assets.OutOfScopeAssetError as exc:
        print(f"schrodist {cfg.command}: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, ValueError) as exc:
        span = f"x^{cfg.ns[0]}..x^{cfg.ns[-1]}"
        name = getattr(cfg, "asset", cfg.command)
        print(f"schrodist {cfg.command} {name} ({span}): {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render_report(report, cfg.fmt))
    return status


if __name__ == "__main__":
    sys.exit(main())
