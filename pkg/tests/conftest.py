from __future__ import annotations

from itertools import product as cartesian

from hypothesis import strategies as st

from pathideal_lab.monomial import MonomialIdeal, parse_ideal


def P(text: str, n: int) -> MonomialIdeal:
    return parse_ideal(text, n)


def exps_box(n: int, bound: int):
    """All exponent vectors with entries in 0..bound."""
    return cartesian(range(bound + 1), repeat=n)


def ideals(n: int = 3, max_exp: int = 3, max_gens: int = 4, min_gens: int = 1):
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.lists(vec, min_size=min_gens, max_size=max_gens).map(
        lambda gs: MonomialIdeal.from_exps(n, gs)
    )


def squarefree_ideals(n: int = 4, max_gens: int = 4):
    vec = st.tuples(*[st.integers(0, 1)] * n).filter(any)
    return st.lists(vec, min_size=1, max_size=max_gens).map(
        lambda gs: MonomialIdeal.from_exps(n, gs)
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
