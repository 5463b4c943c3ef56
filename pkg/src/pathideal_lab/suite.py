"""The verification checks behind ``pathideal-lab verify``.

Every check is identified by a name and an ``(n, t, s)`` cell and produces
one :class:`CheckRecord`.  Cells are independent, so they can be farmed
out to worker processes and merged by sorting.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from . import covers as cv
from .betti import pd_formula, projective_dimension, regularity
from .complexes import facet_complex, path_ideal
from .decomposition import associated_primes
from .duality import deg_formula, deg_max, dual
from .hilbert import (
    colon_identity_checks,
    finite_differences,
    k_polynomial,
    multiplicity,
    multiplicity_sequence,
    path_power,
    recursion_branch,
    recursion_sides,
    taylor_oracle,
    verify_main,
)
from .report import CheckRecord, VerificationReport

# documented input caps
CAP_COMBINATORIAL_N = 14
CAP_HOCHSTER_N = 12
CAP_POWER_S = 4
CAP_DECOMPOSITION_S = 3
CAP_COUNTS = 6
# the degree-in-s check runs s up to a+3, which outgrows every other cap
DEGREE_IN_S_MAX_N = 10
RECURSION_DEFAULT_MAX_N = 9
TAYLOR_GENERATOR_LIMIT = 12

# grid value for "--t n": the single cell t = n for every n
T_EQUALS_N = (0, None)

SCOPES = ("all", "mult", "ass", "covers", "pd", "recursions", "counts")


class CapError(ValueError):
    """A requested range exceeds a documented cap."""


def _fam(covers: Iterable[Iterable[int]]) -> str:
    return json.dumps(sorted((sorted(c) for c in covers), key=lambda c: (len(c), c)),
                      separators=(",", ":"))


# ---- individual checks ------------------------------------------------------

def check_main_formula(n, t, s, oracle):
    r = verify_main(n, t, s)
    return dict(engine=r.engine, formula=r.formula, oracle=r.oracle)


def check_kpoly_taylor(n, t, s, oracle):
    I = path_power(n, t, s, n)
    return dict(engine=str(k_polynomial(I)), oracle=str(taylor_oracle(I)))


def check_degree_in_s(n, t, s, oracle):
    a, _ = cv.nt_split(n, t)
    seq = multiplicity_sequence(n, t, a + 3)
    degree = next(k for k in range(len(seq) + 1) if not any(finite_differences(seq, k + 1)))
    return dict(engine=degree, formula=a)


def check_squarefree_mult(n, t, s, oracle):
    engine = multiplicity(path_ideal(n, t)) if n <= 12 else None
    return dict(engine=engine, formula=cv.squarefree_multiplicity_formula(n, t),
                oracle=len(cv.min_height_primes(n, t)))


def check_minimal_primes(n, t, s, oracle):
    delta = facet_complex(n, t)
    return dict(
        engine=_fam(cv.minimal_covers(delta)),
        formula=_fam(cv.cnt_family(n, t)),
        oracle=_fam(cv.brute_force_covers(delta)) if oracle else None,
    )


def check_height(n, t, s, oracle):
    I = path_ideal(n, t)
    a, _ = cv.nt_split(n, t)
    return dict(engine=cv.height(I), formula=a, oracle=cv.m_grade(I))


def check_deg_dual(n, t, s, oracle):
    return dict(engine=deg_max(dual(path_ideal(n, t))), formula=deg_formula(n, t))


def check_pd(n, t, s, oracle):
    I = path_ideal(n, t)
    return dict(engine=projective_dimension(I), formula=pd_formula(n, t),
                oracle=regularity(dual(I)))


def check_ass_power(n, t, s, oracle):
    I = path_ideal(n, t)
    return dict(
        engine=_fam(associated_primes(path_power(n, t, s, n))),
        formula=_fam(cv.cnt_family(n, t)),
        oracle=_fam(associated_primes(I)),
    )


def check_ass_dual_power(n, t, s, oracle):
    D = dual(path_ideal(n, t))
    facets = [range(i, i + t) for i in range(1, n - t + 2)]
    return dict(
        engine=_fam(associated_primes(D ** s)),
        formula=_fam(facets),
        oracle=_fam(associated_primes(D)),
    )


def check_colon_identities(n, t, s, oracle):
    checks = colon_identity_checks(n, t, s)
    return dict(engine=sum(checks.values()), formula=len(checks))


def check_q_recursion(n, t, s, oracle):
    lhs, rhs = recursion_sides(n, t, s)
    return dict(engine=str(lhs), formula=str(rhs), branch=recursion_branch(n, t))


def check_T_count(a, t, s, oracle):
    T = cv.enumerate_T(a, t)
    # counting argument: classes by first anchored index, each a shifted T_{k-1,t-1}
    by_classes = sum(len(cv.enumerate_T(k - 1, t - 1)) for k in range(1, a + 2)) if t > 1 else 1
    return dict(engine=len(T), formula=cv.binomial(a + t - 1, a),
                oracle=by_classes if cv.verify_T_count(a, t) else -1)


def check_X_count(n, t, s, oracle):
    a, b = cv.nt_split(n, t)
    image = len(cv.enumerate_T(a, t - b)) if cv.verify_X_count(n, t) else -1
    return dict(engine=len(cv.enumerate_X(n, t)), formula=cv.binomial(a + t - b - 1, a),
                oracle=image)


CHECKS: dict[str, Callable] = {
    "ass_dual_power": check_ass_dual_power,
    "ass_power": check_ass_power,
    "colon_identities": check_colon_identities,
    "deg_dual": check_deg_dual,
    "degree_in_s": check_degree_in_s,
    "height": check_height,
    "kpoly_taylor": check_kpoly_taylor,
    "main_formula": check_main_formula,
    "minimal_primes": check_minimal_primes,
    "pd": check_pd,
    "q_recursion": check_q_recursion,
    "squarefree_mult": check_squarefree_mult,
    "T_count": check_T_count,
    "X_count": check_X_count,
}


@dataclass(frozen=True)
class Task:
    check: str
    n: int
    t: int | None = None
    s: int | None = None
    oracle: bool = False


def run_task(task: Task) -> CheckRecord:
    start = time.perf_counter()
    values = CHECKS[task.check](task.n, task.t, task.s, task.oracle)
    branch = values.pop("branch", None)
    ms = int(round((time.perf_counter() - start) * 1000))
    rec = CheckRecord.compare(task.check, task.n, task.t, task.s, ms=ms, **values)
    if branch is not None:
        # the n = 2t routing of the recursion is recorded next to the check name
        rec.check = f"{task.check}[{branch}]"
    return rec


def run_tasks(tasks: list[Task], jobs: int = 1) -> VerificationReport:
    if jobs <= 1 or len(tasks) <= 1:
        return VerificationReport([run_task(t) for t in tasks])
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        records = list(pool.map(run_task, tasks, chunksize=1))
    return VerificationReport(records)


# ---- grids ------------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    """Requested ranges; ``None`` means "use the scope default".  An upper
    ``t`` bound of ``None`` means ``t`` runs up to ``n``."""

    n: tuple[int, int] | None = None
    t: tuple[int, int | None] | None = None
    s: tuple[int, int] | None = None


def _n_range(grid: Grid, default: tuple[int, int]) -> range:
    lo, hi = grid.n or default
    return range(lo, hi + 1)


def _t_range(grid: Grid, n: int, default_lo: int = 1) -> range:
    if grid.t is None:
        return range(default_lo, n + 1)
    if grid.t == T_EQUALS_N:
        return range(n, n + 1)
    lo, hi = grid.t
    hi = n if hi is None else min(hi, n)
    return range(max(lo, 1), hi + 1)


def _s_range(grid: Grid, default: tuple[int, int]) -> range:
    lo, hi = grid.s or default
    return range(lo, hi + 1)


def _check_caps(grid: Grid, n_cap: int | None = None, n_cap_name: str = "",
                s_cap: int | None = None, s_cap_name: str = "") -> None:
    if n_cap is not None and grid.n and grid.n[1] > n_cap:
        raise CapError(f"n <= {n_cap} ({n_cap_name}) exceeded: n up to {grid.n[1]}")
    if s_cap is not None and grid.s and grid.s[1] > s_cap:
        raise CapError(f"s <= {s_cap} ({s_cap_name}) exceeded: s up to {grid.s[1]}")


def tasks_for_scope(scope: str, grid: Grid, oracle: bool = False,
                    ntf_s_max: int = CAP_DECOMPOSITION_S) -> list[Task]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    if scope == "all":
        out: list[Task] = []
        for sub in SCOPES[1:]:
            out.extend(tasks_for_scope(sub, grid, oracle, ntf_s_max))
        return out
    tasks: list[Task] = []
    if scope == "mult":
        _check_caps(grid, CAP_COMBINATORIAL_N, "combinatorial", CAP_POWER_S, "powers")
        for n in _n_range(grid, (1, 10)):
            for t in _t_range(grid, n):
                for s in _s_range(grid, (1, 4)):
                    tasks.append(Task("main_formula", n, t, s, oracle))
                    if len(path_power(n, t, s, n).gens) <= TAYLOR_GENERATOR_LIMIT:
                        tasks.append(Task("kpoly_taylor", n, t, s, oracle))
                if n <= DEGREE_IN_S_MAX_N:
                    tasks.append(Task("degree_in_s", n, t, None, oracle))
    elif scope == "covers":
        _check_caps(grid, CAP_COMBINATORIAL_N, "combinatorial")
        for n in _n_range(grid, (1, 14)):
            for t in _t_range(grid, n):
                tasks.append(Task("minimal_primes", n, t, None, oracle))
                tasks.append(Task("height", n, t, None, oracle))
    elif scope == "counts":
        _check_caps(grid, CAP_COMBINATORIAL_N, "combinatorial")
        for n in _n_range(grid, (1, 14)):
            for t in _t_range(grid, n):
                tasks.append(Task("X_count", n, t, None, oracle))
                tasks.append(Task("squarefree_mult", n, t, None, oracle))
        for a in range(1, CAP_COUNTS + 1):
            for t in range(1, CAP_COUNTS + 1):
                tasks.append(Task("T_count", a, t, None, oracle))
    elif scope == "ass":
        _check_caps(grid, CAP_COMBINATORIAL_N, "combinatorial", CAP_DECOMPOSITION_S, "decomposition")
        for n in _n_range(grid, (2, 8)):
            for t in _t_range(grid, n, default_lo=2):
                for s in _s_range(grid, (1, min(ntf_s_max, CAP_DECOMPOSITION_S))):
                    tasks.append(Task("ass_power", n, t, s, oracle))
                    tasks.append(Task("ass_dual_power", n, t, s, oracle))
    elif scope == "pd":
        _check_caps(grid, CAP_HOCHSTER_N, "Hochster")
        for n in _n_range(grid, (2, 10)):
            for t in _t_range(grid, n, default_lo=2):
                tasks.append(Task("pd", n, t, None, oracle))
                tasks.append(Task("deg_dual", n, t, None, oracle))
    elif scope == "recursions":
        _check_caps(grid, CAP_COMBINATORIAL_N, "combinatorial", CAP_POWER_S, "powers")
        for n in _n_range(grid, (1, 10)):
            for t in _t_range(grid, n):
                for s in _s_range(grid, (2, 3)):
                    if s < 2:
                        continue
                    tasks.append(Task("colon_identities", n, t, s, oracle))
                    # the Q recursion needs t < n; by default it stops one below the colon grid
                    if t < n and (grid.n is not None or n <= RECURSION_DEFAULT_MAX_N):
                        tasks.append(Task("q_recursion", n, t, s, oracle))
    return tasks
