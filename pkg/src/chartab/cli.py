"""Command-line front end: table printing, statistics, verification, figure data.

Output conventions: integers unpadded, proportions fixed at 6 decimals with
half-to-even rounding, header row always present, "\\n" line endings.  CSV
bytes are identical across runs and worker counts; anything diagnostic goes
to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import tempfile
import time
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__
from .characters import table_column
from .partitions import enumerate_partitions, partition_count
from .stats import (
    BudgetError,
    ResidueTally,
    SignTally,
    TableStats,
    format6,
    parity_stats,
    residue_tally,
    sign_stats,
)
from .verify import (
    even_proportion_trend,
    general_divisibility_trend,
    sign_trend,
    verify_identity_chain,
    verify_theorem1,
)

TABLE_PRINT_LIMIT = 10
CACHE_SCHEMA_VERSION = 1
DEFAULT_MODULI = (3, 4, 5, 6, 7)


def _class_label(mu) -> str:
    return "+".join(str(p) for p in mu)


# ---------------------------------------------------------------------------
# stats cache: one JSON document per (kind, n), advisory only


def default_cache_dir() -> Path:
    env = os.environ.get("CHARTAB_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "chartab"


class StatsCache:
    """Advisory per-(kind, n) cache; a miss or a bad entry just means recomputing."""

    def __init__(self, directory: Path | None, enabled: bool = True):
        self.directory = directory if directory is not None else default_cache_dir()
        self.enabled = enabled

    def _path(self, kind: str, n: int) -> Path:
        return self.directory / f"{kind}-{n}.json"

    def load(self, kind: str, n: int, expected_keys: set[str], total: int) -> dict | None:
        """Return a validated payload, or None (with a warning) on any defect."""
        if not self.enabled:
            return None
        path = self._path(kind, n)
        if not path.exists():
            return None
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
            if doc["schema_version"] != CACHE_SCHEMA_VERSION:
                raise ValueError(f"schema_version {doc['schema_version']!r}")
            if doc["engine_version"] != __version__:
                raise ValueError(f"engine_version {doc['engine_version']!r}")
            if doc["n"] != n or doc["kind"] != kind:
                raise ValueError("entry does not match its file name")
            payload = doc["payload"]
            if set(payload) != expected_keys:
                raise ValueError(f"payload keys {sorted(payload)}")
            values = []
            for v in payload.values():
                values.extend(v if isinstance(v, list) else [v])
            if not all(isinstance(v, int) and v >= 0 for v in values):
                raise ValueError("payload values must be nonnegative integers")
            if sum(values) != total:
                raise ValueError(f"payload sums to {sum(values)}, expected {total}")
            return payload
        except (OSError, ValueError, KeyError, TypeError) as exc:
            print(f"warning: ignoring cache entry {path}: {exc}", file=sys.stderr)
            return None

    def store(self, kind: str, n: int, payload: dict) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        doc = {
            "schema_version": CACHE_SCHEMA_VERSION,
            "engine_version": __version__,
            "n": n,
            "kind": kind,
            "payload": payload,
            "created_at": datetime.now(timezone.utc).isoformat(),
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")
            os.replace(tmp, self._path(kind, n))
        except BaseException:
            os.unlink(tmp)
            raise


def cached_parity(n: int, cache: StatsCache, *, budget=None, workers=None) -> tuple[int, int]:
    entries = partition_count(n) ** 2
    payload = cache.load("parity", n, {"even", "odd"}, entries)
    if payload is not None:
        return payload["even"], payload["odd"]
    even, odd = parity_stats(n, budget=budget, workers=workers)
    cache.store("parity", n, {"even": even, "odd": odd})
    return even, odd


def cached_signs(n: int, cache: StatsCache, *, budget=None, workers=None) -> SignTally:
    entries = partition_count(n) ** 2
    payload = cache.load("signs", n, {"positive", "negative", "zero"}, entries)
    if payload is not None:
        return SignTally(payload["positive"], payload["negative"], payload["zero"])
    tally = sign_stats(n, budget=budget, workers=workers)
    cache.store(
        "signs", n, {"positive": tally.positive, "negative": tally.negative, "zero": tally.zero}
    )
    return tally


def cached_residue(n: int, d: int, cache: StatsCache, *, budget=None, workers=None) -> ResidueTally:
    kind = f"residue-{d}"
    entries = partition_count(n) ** 2
    payload = cache.load(kind, n, {"counts"}, entries)
    if payload is not None and len(payload["counts"]) == d:
        return ResidueTally(d, tuple(payload["counts"]))
    tally = residue_tally(n, d, budget=budget, workers=workers)
    cache.store(kind, n, {"counts": list(tally.counts)})
    return tally


# ---------------------------------------------------------------------------
# subcommands


def cmd_table(args, out) -> int:
    n = args.n
    limit = args.max_n
    if n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return 2
    if n > limit:
        print(
            f"error: refusing to print the table for n={n}: over the print limit "
            f"of {limit}; raise it with --max-n",
            file=sys.stderr,
        )
        return 2
    rows = list(enumerate_partitions(n))
    classes = list(reversed(rows))  # identity class first
    grid = []
    for mu in classes:
        grid.append(table_column(mu))
    grid = [[grid[j][i] for j in range(len(classes))] for i in range(len(rows))]
    header = [_class_label(mu) for mu in classes]
    if args.format == "csv":
        out.write(",".join(header) + "\n")
        for row in grid:
            out.write(",".join(str(v) for v in row) + "\n")
        return 0
    labels = [_class_label(lam) for lam in rows]
    corner = "shape"
    label_width = max(len(corner), *(len(s) for s in labels))
    widths = [
        max(len(header[j]), *(len(str(grid[i][j])) for i in range(len(rows))))
        for j in range(len(classes))
    ]
    out.write(
        corner.ljust(label_width)
        + "  "
        + "  ".join(header[j].rjust(widths[j]) for j in range(len(classes)))
        + "\n"
    )
    for i, row in enumerate(grid):
        out.write(
            labels[i].ljust(label_width)
            + "  "
            + "  ".join(str(row[j]).rjust(widths[j]) for j in range(len(classes)))
            + "\n"
        )
    return 0


def _collect_cached(n, kinds, moduli, cache, budget, workers) -> TableStats:
    p = partition_count(n)
    stats = TableStats(n=n, partitions=p, entries=p * p)
    start = time.perf_counter()
    for kind in kinds:
        if kind == "parity":
            stats.even, stats.odd = cached_parity(n, cache, budget=budget, workers=workers)
        elif kind == "signs":
            stats.signs = cached_signs(n, cache, budget=budget, workers=workers)
        else:
            for d in moduli:
                stats.residues[d] = cached_residue(n, d, cache, budget=budget, workers=workers)
    stats.elapsed = time.perf_counter() - start
    stats.check()
    return stats


def cmd_stats(args, out) -> int:
    kinds = []
    for kind in args.kind or ["parity"]:
        if kind not in kinds:
            kinds.append(kind)
    moduli = tuple(dict.fromkeys(args.d)) if args.d else DEFAULT_MODULI
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return 2
    if any(d < 2 for d in moduli):
        print("error: --d moduli must be at least 2", file=sys.stderr)
        return 2
    cache = StatsCache(args.cache_dir, enabled=not args.no_cache)
    n = args.n
    try:
        stats = _collect_cached(n, kinds, moduli, cache, args.max_n, args.threads)
    except BudgetError as exc:
        print(f"error: {exc}; raise it with --max-n", file=sys.stderr)
        return 2
    if args.format == "json":
        out.write(json.dumps(stats.to_dict(), indent=2) + "\n")
        return 0
    sections = []
    for kind in kinds:
        if kind == "parity":
            sections.append(
                "n,p_n,entries,evens,odds,prop_even\n"
                f"{n},{stats.partitions},{stats.entries},{stats.even},{stats.odd},"
                f"{format6(Fraction(stats.even, stats.entries))}\n"
            )
        elif kind == "signs":
            t = stats.signs
            sections.append(f"n,pos,neg,zero\n{n},{t.positive},{t.negative},{t.zero}\n")
        else:
            lines = ["n,d,count_div"]
            for d in moduli:
                lines.append(f"{n},{d},{stats.residues[d].counts[0]}")
            sections.append("\n".join(lines) + "\n")
    out.write("\n".join(sections))
    return 0


def cmd_verify(args, out) -> int:
    reports = []
    top = max(args.max_n_direct, args.max_n_indirect)
    for n in range(1, top + 1):
        direct = n <= args.max_n_direct
        report = verify_theorem1(n, direct, workers=args.threads)
        chain = verify_identity_chain(n, direct, workers=args.threads)
        report.checks.extend(chain.checks)
        reports.append(report)
    failed = sum(1 for r in reports if not r.passed)
    if args.format == "json":
        doc = {
            "passed": failed == 0,
            "failed_reports": failed,
            "reports": [dataclasses.asdict(r) for r in reports],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in reports:
            counts = {"pass": 0, "fail": 0, "skipped": 0}
            for c in r.checks:
                counts[c.status] += 1
            out.write(
                f"n={r.n}: {'pass' if r.passed else 'FAIL'} "
                f"({counts['pass']} passed, {counts['skipped']} skipped)\n"
            )
            for c in r.checks:
                if c.status == "fail":
                    out.write(f"  FAIL {c.name}: {c.witness}\n")
        out.write("all checks passed\n" if failed == 0 else f"{failed} reports failed\n")
    return 0 if failed == 0 else 1


def cmd_figure(args, out) -> int:
    if args.d and any(d < 2 for d in args.d):
        print("error: --d moduli must be at least 2", file=sys.stderr)
        return 2
    try:
        if args.which == "even-proportion":
            points = even_proportion_trend(args.max_n, budget=args.budget, workers=args.threads)
            out.write("n,observed,model\n")
            for pt in points:
                out.write(f"{pt.n},{pt.observed:.6f},{pt.model:.6f}\n")
        elif args.which == "signs":
            pairs = sign_trend(args.max_n, budget=args.budget, workers=args.threads)
            out.write("n,positive,negative\n")
            for pos, neg in pairs:
                out.write(f"{pos.n},{pos.observed:.6f},{neg.observed:.6f}\n")
        else:
            moduli = set(args.d) if args.d else set(DEFAULT_MODULI)
            table = general_divisibility_trend(
                args.max_n, moduli, budget=args.budget, workers=args.threads
            )
            out.write("n,d,count_div\n")
            for n in sorted(table):
                for d in sorted(table[n]):
                    out.write(f"{n},{d},{table[n][d]}\n")
        return 0
    except BudgetError as exc:
        print(f"error: {exc}; raise it with --budget", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="K",
        help="worker processes for column sweeps (default: machine parallelism)",
    )
    shared.add_argument(
        "--cache-dir",
        type=Path,
        default=None,
        metavar="DIR",
        help="stats cache directory (default: $CHARTAB_CACHE_DIR or ~/.cache/chartab)",
    )
    parser = argparse.ArgumentParser(
        prog="chartab",
        description="Exact character tables of symmetric groups and their statistics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[shared], help="print a full character table")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--format", choices=["text", "csv"], default="text")
    p_table.add_argument(
        "--max-n",
        type=int,
        default=TABLE_PRINT_LIMIT,
        metavar="LIMIT",
        help=f"print limit (default {TABLE_PRINT_LIMIT})",
    )
    p_table.set_defaults(func=cmd_table)

    p_stats = sub.add_parser("stats", parents=[shared], help="table-wide entry statistics")
    p_stats.add_argument("--n", type=int, required=True)
    p_stats.add_argument(
        "--kind",
        action="append",
        choices=["parity", "signs", "residue"],
        help="statistic to compute; repeatable (default: parity)",
    )
    p_stats.add_argument(
        "--d",
        action="append",
        type=int,
        metavar="D",
        help="modulus for --kind residue; repeatable (default: 3 4 5 6 7)",
    )
    p_stats.add_argument("--format", choices=["csv", "json"], default="csv")
    p_stats.add_argument("--no-cache", action="store_true", help="bypass the stats cache")
    p_stats.add_argument(
        "--max-n",
        type=int,
        default=None,
        metavar="LIMIT",
        help="override the sweep budget",
    )
    p_stats.set_defaults(func=cmd_stats)

    p_verify = sub.add_parser("verify", parents=[shared], help="run the verification checks")
    p_verify.add_argument("--max-n-direct", type=int, default=10, metavar="A")
    p_verify.add_argument("--max-n-indirect", type=int, default=60, metavar="B")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_figure = sub.add_parser("figure", parents=[shared], help="emit plot-ready CSV data")
    p_figure.add_argument(
        "--which",
        choices=["even-proportion", "signs", "divisibility"],
        required=True,
    )
    p_figure.add_argument("--max-n", type=int, required=True)
    p_figure.add_argument("--d", action="append", type=int, metavar="D")
    p_figure.add_argument("--format", choices=["csv"], default="csv")
    p_figure.add_argument(
        "--budget",
        type=int,
        default=None,
        metavar="LIMIT",
        help="override the sweep budget",
    )
    p_figure.set_defaults(func=cmd_figure)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
