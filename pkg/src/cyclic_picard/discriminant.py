"""Trace forms and discriminants of finite free algebras.

An algebra is given by a basis ``e_0 = 1, e_1, ..., e_{r-1}`` and a
multiplication table whose entries are coefficient vectors in that basis,
with coefficients in an exact polynomial ring.  The discriminant is the
determinant of the trace pairing ``(u, v) -> tr(u v)`` in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import ExactPoly

Vector = tuple[ExactPoly, ...]


class NotPurePower(ValueError):
    pass


@dataclass(frozen=True)
class QuotientAlgebra:
    """Commutative algebra, free of rank ``len(basis)`` over a polynomial ring."""

    basis: tuple[str, ...]
    # table[i][j] is e_i * e_j written in the basis
    table: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        r = self.rank
        if len(self.table) != r or any(len(row) != r for row in self.table):
            raise ValueError("multiplication table must be rank x rank")
        if any(len(v) != r for row in self.table for v in row):
            raise ValueError("table entries must be coefficient vectors of length rank")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def unit(self, i: int) -> Vector:
        return tuple(ExactPoly.const(int(k == i)) for k in range(self.rank))

    def multiply(self, u: Sequence[ExactPoly], v: Sequence[ExactPoly]) -> Vector:
        out = [ExactPoly() for _ in range(self.rank)]
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                c = ui * vj
                for k, t in enumerate(self.table[i][j]):
                    if not t.is_zero():
                        out[k] = out[k] + c * t
        return tuple(out)

    def multiplication_matrix(self, u: Sequence[ExactPoly]) -> list[list[ExactPoly]]:
        """Matrix of ``x -> u x``; column k holds ``u * e_k``."""
        cols = [self.multiply(u, self.unit(k)) for k in range(self.rank)]
        return [[cols[k][i] for k in range(self.rank)] for i in range(self.rank)]

    def trace(self, u: Sequence[ExactPoly]) -> ExactPoly:
        m = self.multiplication_matrix(u)
        out = ExactPoly()
        for i in range(self.rank):
            out = out + m[i][i]
        return out


def cyclic_cover_algebra(n: int, h: ExactPoly, variable: str = "x") -> QuotientAlgebra:
    """``R[x]/(x^n - h)`` in the basis ``1, x, ..., x^(n-1)``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    h = ExactPoly.coerce(h)
    zero, one = ExactPoly(), ExactPoly.const(1)

    def power(k):
        coeff = one if k < n else h
        k %= n
        return tuple(coeff if i == k else zero for i in range(n))

    basis = tuple("1" if i == 0 else variable if i == 1 else f"{variable}^{i}" for i in range(n))
    table = tuple(tuple(power(i + j) for j in range(n)) for i in range(n))
    return QuotientAlgebra(basis, table)


def quadratic_algebra(s: ExactPoly, p: ExactPoly, variable: str = "a") -> QuotientAlgebra:
    """``R[a]/(a^2 - s a + p)`` in the basis ``1, a``."""
    s, p = ExactPoly.coerce(s), ExactPoly.coerce(p)
    zero, one = ExactPoly(), ExactPoly.const(1)
    table = (
        ((one, zero), (zero, one)),
        ((zero, one), (-p, s)),
    )
    return QuotientAlgebra(("1", variable), table)


def split_quadratic_algebra(x1: ExactPoly, x2: ExactPoly) -> QuotientAlgebra:
    """Degree-2 algebra with ``a^2 = (x1 + x2) a - x1 x2``."""
    return quadratic_algebra(x1 + x2, x1 * x2)


@dataclass(frozen=True)
class TraceForm:
    matrix: tuple[tuple[ExactPoly, ...], ...]

    def is_symmetric(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(n) for j in range(i))


def trace_form(a: QuotientAlgebra) -> TraceForm:
    r = a.rank
    entries = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            entries[i][j] = a.trace(a.table[i][j])
    return TraceForm(tuple(tuple(row) for row in entries))


def bareiss_determinant(matrix: Sequence[Sequence[ExactPoly]]) -> ExactPoly:
    """Fraction-free determinant over the polynomial ring.

    Every division is exact, so no rational functions appear.
    """
    n = len(matrix)
    if n == 0:
        return ExactPoly.const(1)
    m = [[ExactPoly.coerce(x) for x in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = ExactPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return ExactPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def discriminant(a: QuotientAlgebra) -> ExactPoly:
    return bareiss_determinant(trace_form(a).matrix)


def discriminant_power_formula_check(n: int) -> bool:
    """Does ``x^n - h`` have discriminant ``+-n^n h^(n-1)``?"""
    h = ExactPoly.var("h")
    disc = discriminant(cyclic_cover_algebra(n, h))
    target = n ** n * h ** (n - 1)
    return disc == target or disc == -target


# -- resultants --------------------------------------------------------------
# Univariate polynomials in a main variable are coefficient lists over
# ExactPoly, highest degree first.

def sylvester_matrix(f: Sequence[ExactPoly], g: Sequence[ExactPoly]) -> list[list[ExactPoly]]:
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        raise ValueError("empty coefficient list")
    size = m + n
    zero = ExactPoly()
    rows = []
    for i in range(n):
        rows.append([zero] * i + [ExactPoly.coerce(c) for c in f] + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + [ExactPoly.coerce(c) for c in g] + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Sequence[ExactPoly], g: Sequence[ExactPoly]) -> ExactPoly:
    return bareiss_determinant(sylvester_matrix(f, g))


def derivative(f: Sequence[ExactPoly]) -> list[ExactPoly]:
    deg = len(f) - 1
    return [ExactPoly.coerce(c) * (deg - i) for i, c in enumerate(f[:-1])]


def polynomial_discriminant(f: Sequence[ExactPoly]) -> ExactPoly:
    """``(-1)^(m(m-1)/2) Res(f, f') / lc(f)`` for ``f`` of degree m."""
    f = [ExactPoly.coerce(c) for c in f]
    m = len(f) - 1
    if m < 1 or f[0].is_zero():
        raise ValueError("need a polynomial of degree >= 1 with nonzero leading coefficient")
    res = resultant(f, derivative(f)).exact_div(f[0])
    return -res if (m * (m - 1) // 2) % 2 else res


def cyclic_cover_polynomial(n: int, h: ExactPoly) -> list[ExactPoly]:
    """Coefficients of ``x^n - h``."""
    zero = ExactPoly()
    return [ExactPoly.const(1)] + [zero] * (n - 1) + [-ExactPoly.coerce(h)]


# -- valuations ----------------------------------------------------------------

def ramification_length(disc: ExactPoly, uniformizer: ExactPoly) -> int:
    """Exponent ``v`` with ``disc = unit * uniformizer^v`` at the prime ``(uniformizer)``.

    The uniformizer must be irreducible; then any cofactor it does not
    divide is a unit in the local ring, so only a zero discriminant fails.
    """
    disc, uniformizer = ExactPoly.coerce(disc), ExactPoly.coerce(uniformizer)
    if uniformizer.is_constant():
        raise ValueError("uniformizer must be non-constant")
    if disc.is_zero():
        raise NotPurePower("zero discriminant has infinite valuation")
    v = 0
    while True:
        q, r = disc.divmod(uniformizer)
        if not r.is_zero():
            return v
        disc, v = q, v + 1
