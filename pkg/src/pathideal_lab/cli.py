"""``pathideal-lab``: verify, tabulate and inspect path ideals of line graphs."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import suite
from .betti import betti_table, pd_formula, projective_dimension
from .cache import DEFAULT_CACHE, KPolynomialCache
from .complexes import facet_complex, path_ideal
from .config import Config, load_config
from .covers import height, minimal_covers, nt_split
from .decomposition import irreducible_decomposition
from .duality import deg_formula, deg_max, dual
from .hilbert import k_polynomial, mult_formula, multiplicity, path_power, q_polynomial
from .monomial import format_ideal
from .report import CheckRecord, VerificationReport

QUANTITIES = ("mult", "pd", "deg", "height")
OBJECTS = ("ideal", "dual", "covers", "kpoly", "qpoly", "betti", "decomposition")
FORMATS = ("csv", "md", "json")


def parse_range(text: str, allow_n: bool = False) -> tuple[int, int | None]:
    """``"4"`` or ``"4..8"``; with ``allow_n`` the upper end may be the literal ``n``."""
    lo_s, sep, hi_s = text.partition("..")
    if not sep:
        hi_s = lo_s
    try:
        if allow_n and lo_s == "n" and not sep:
            return suite.T_EQUALS_N
        lo = int(lo_s)
        hi = None if allow_n and hi_s == "n" else int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use K or A..B") from None
    if lo < 1 or (hi is not None and hi < lo):
        raise argparse.ArgumentTypeError(f"bad range {text!r}; need 1 <= A <= B")
    return lo, hi


def _t_range(text: str) -> tuple[int, int | None]:
    return parse_range(text, allow_n=True)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=parse_range, help="n or a..b")
    p.add_argument("--t", type=_t_range, help="t or a..b (b may be 'n')")
    p.add_argument("--s", type=parse_range, help="s or a..b")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: cores)")
    p.add_argument("--no-cache", action="store_true", default=None,
                   help="disable the on-disk K-polynomial cache")
    p.add_argument("--oracle", action="store_true", default=None,
                   help="force independent-oracle cross-checks on")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathideal-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification scope")
    v.add_argument("scope", choices=suite.SCOPES)
    _add_common(v)
    t = sub.add_parser("table", help="tabulate engine values next to closed forms")
    t.add_argument("quantity", choices=QUANTITIES)
    _add_common(t)
    s = sub.add_parser("show", help="print one object")
    s.add_argument("object", choices=OBJECTS)
    _add_common(s)
    return parser


def _grid(args: argparse.Namespace) -> suite.Grid:
    n = args.n
    if n is not None and n[1] is None:
        raise SystemExit("error: --n must be numeric")
    return suite.Grid(n=n, t=args.t, s=args.s)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise SystemExit(f"error: cannot write {out}: {exc}") from None


def _setup_cache(cfg: Config) -> None:
    DEFAULT_CACHE.clear()
    DEFAULT_CACHE.disk_dir = KPolynomialCache(cfg.disk_cache).disk_dir


# ---- verify -----------------------------------------------------------------

def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    tasks = suite.tasks_for_scope(args.scope, _grid(args), oracle=cfg.oracle,
                                  ntf_s_max=cfg.ntf_s_max)
    report = suite.run_tasks(tasks, jobs=cfg.workers)
    _emit(report.render(args.format or "md"), args.out)
    bad = report.mismatches()
    if bad:
        print(f"{len(bad)} mismatches", file=sys.stderr)
    return 1 if bad else 0


# ---- table ------------------------------------------------------------------

def _table_rows(quantity: str, grid: suite.Grid) -> list[CheckRecord]:
    rows: list[CheckRecord] = []
    if quantity == "pd":
        suite._check_caps(grid, suite.CAP_HOCHSTER_N, "Hochster")
    elif quantity == "mult":
        suite._check_caps(grid, suite.CAP_COMBINATORIAL_N, "combinatorial",
                          suite.CAP_POWER_S, "powers")
    else:
        suite._check_caps(grid, suite.CAP_COMBINATORIAL_N, "combinatorial")
    for n in suite._n_range(grid, (2, 8)):
        for t in suite._t_range(grid, n, default_lo=1 if quantity in ("mult", "height") else 2):
            if quantity == "mult":
                for s in suite._s_range(grid, (1, 3)):
                    rows.append(CheckRecord.compare(
                        "mult", n, t, s,
                        engine=multiplicity(path_power(n, t, s, n)), formula=mult_formula(n, t, s)))
            elif quantity == "pd":
                rows.append(CheckRecord.compare(
                    "pd", n, t, engine=projective_dimension(path_ideal(n, t)),
                    formula=pd_formula(n, t)))
            elif quantity == "deg":
                rows.append(CheckRecord.compare(
                    "deg", n, t, engine=deg_max(dual(path_ideal(n, t))), formula=deg_formula(n, t)))
            else:
                rows.append(CheckRecord.compare(
                    "height", n, t, engine=height(path_ideal(n, t)), formula=nt_split(n, t)[0]))
    return rows


def cmd_table(args: argparse.Namespace, cfg: Config) -> int:
    report = VerificationReport(_table_rows(args.quantity, _grid(args)))
    _emit(report.render(args.format or "csv"), args.out)
    return 0 if report.ok else 1


# ---- show -------------------------------------------------------------------

def _single(rng, name: str, default: int | None = None) -> int:
    if rng is None:
        if default is None:
            raise SystemExit(f"error: show needs --{name}")
        return default
    lo, hi = rng
    if hi != lo:
        raise SystemExit(f"error: show needs a single value for --{name}")
    return lo


def format_covers(covers) -> str:
    return "[" + ", ".join("[" + ",".join(map(str, c)) + "]" for c in covers) + "]"


def cmd_show(args: argparse.Namespace, cfg: Config) -> int:
    n = _single(args.n, "n")
    t = _single(args.t, "t")
    s = _single(args.s, "s", default=1)
    if not 1 <= t <= n:
        raise SystemExit(f"error: need 1 <= t <= n, got n={n}, t={t}")
    if n > suite.CAP_COMBINATORIAL_N:
        raise SystemExit(f"error: n <= {suite.CAP_COMBINATORIAL_N} (combinatorial) exceeded")
    fmt = args.format
    obj = args.object
    if obj == "decomposition" and s > suite.CAP_DECOMPOSITION_S:
        raise SystemExit(f"error: s <= {suite.CAP_DECOMPOSITION_S} (decomposition) exceeded")
    if obj in ("kpoly", "qpoly") and s > suite.CAP_POWER_S:
        raise SystemExit(f"error: s <= {suite.CAP_POWER_S} (powers) exceeded")
    if obj == "betti" and n > suite.CAP_HOCHSTER_N:
        raise SystemExit(f"error: n <= {suite.CAP_HOCHSTER_N} (Hochster) exceeded")

    if obj == "ideal":
        I = path_power(n, t, s, n)
        text = json.dumps(format_ideal(I)) if fmt == "json" else format_ideal(I)
    elif obj == "dual":
        D = dual(path_ideal(n, t))
        text = json.dumps(format_ideal(D)) if fmt == "json" else format_ideal(D)
    elif obj == "covers":
        fam = minimal_covers(facet_complex(n, t))
        text = json.dumps(fam.to_json()) if fmt == "json" else format_covers(fam.to_json())
    elif obj in ("kpoly", "qpoly"):
        I = path_power(n, t, s, n)
        poly = k_polynomial(I) if obj == "kpoly" else q_polynomial(I)
        text = json.dumps(poly.to_json()) if fmt == "json" else str(poly)
    elif obj == "betti":
        table = betti_table(path_ideal(n, t))
        text = json.dumps(table.to_json()) if fmt == "json" else table.to_markdown()
    else:
        comps = [format_ideal(Q) for Q in irreducible_decomposition(path_power(n, t, s, n))]
        text = json.dumps(comps)
    _emit(text + "\n", args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config({"jobs": args.jobs, "no_cache": args.no_cache, "oracle": args.oracle})
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _setup_cache(cfg)
    handler = {"verify": cmd_verify, "table": cmd_table, "show": cmd_show}[args.command]
    try:
        return handler(args, cfg)
    except suite.CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
