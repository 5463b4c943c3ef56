"""Dense univariate polynomials in ``z`` with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable


class InexactDivision(ArithmeticError):
    """Division by ``(1 - z)`` left a nonzero remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, slots=True)
class IntPolynomial:
    """``coeffs[k]`` is the coefficient of ``z^k``; the zero polynomial has no coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power of z")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        result = IntPolynomial((1,))
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``z^k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, z: int):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self, order: int = 1) -> IntPolynomial:
        c = list(self.coeffs)
        for _ in range(order):
            c = [k * c[k] for k in range(1, len(c))]
        return IntPolynomial(tuple(c))

    def divide_one_minus_z(self) -> IntPolynomial:
        """Exact quotient by ``(1 - z)``; raises :class:`InexactDivision` otherwise."""
        if not self.coeffs:
            return self
        # p = (1 - z) q  <=>  q_k = p_0 + ... + p_k, with remainder sum(p) = p(1)
        q = []
        acc = 0
        for c in self.coeffs:
            acc += c
            q.append(acc)
        if q[-1] != 0:
            raise InexactDivision(f"{self} is not divisible by (1 - z): p(1) = {q[-1]}")
        return IntPolynomial(tuple(q[:-1]))

    def order_at_one(self) -> int:
        """Multiplicity of ``z = 1`` as a root (``0`` if ``p(1) != 0``)."""
        if not self.coeffs:
            raise ValueError("the zero polynomial vanishes to infinite order")
        k, p = 0, self
        while p(1) == 0:
            p = p.divide_one_minus_z()
            k += 1
        return k

    def taylor_at_one(self, i: int) -> int:
        """``p^{(i)}(1) / i!`` (always an integer)."""
        num = self.derivative(i)(1)
        q, r = divmod(num, factorial(i))
        assert r == 0
        return q

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                zk = "z" if k == 1 else f"z^{k}"
                body = zk if mag == 1 else f"{mag}*{zk}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


ONE = IntPolynomial((1,))
ZERO = IntPolynomial()
ONE_MINUS_Z = IntPolynomial((1, -1))


def z_power(k: int) -> IntPolynomial:
    return IntPolynomial.monomial(k)


def one_minus_z_power(d: int) -> IntPolynomial:
    """``(1 - z)^d``."""
    return ONE_MINUS_Z ** d
