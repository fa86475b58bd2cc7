"""Exact integer linear algebra and finitely generated abelian groups.

Everything here works on Python ints, so intermediate entries can grow
without overflow.  Matrices are immutable; the normal-form routines copy
into scratch lists, work in place there, and freeze the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntegerMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other.entries[k * other.cols + j] for k in range(self.cols)))
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def append_rows(self, rows: Iterable[Sequence[int]]) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(self.to_lists() + [list(r) for r in rows], cols=self.cols)

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "[" + ", ".join(str(list(self.row(i))) for i in range(self.rows)) + "]"


def determinant(a: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# --------------------------------------------------------------------------
# Hermite normal form and lattice membership
# --------------------------------------------------------------------------

def hermite_normal_form(a: IntegerMatrix) -> IntegerMatrix:
    """Row-style Hermite normal form.

    The result has the same shape as ``a``: nonzero rows first in echelon
    form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, zero rows at the bottom.  Its row span equals that of
    ``a``.
    """
    h = a.to_lists()
    m, n = a.rows, a.cols
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c]]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(h[i][c]), i))
            h[r], h[best] = h[best], h[r]
            p = h[r][c]
            clean = True
            for i in range(r + 1, m):
                if h[i][c]:
                    q = h[i][c] // p
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
        r += 1
    return IntegerMatrix.from_rows(h, cols=n)


def lattice_contains(relations: IntegerMatrix, v: Sequence[int]) -> bool:
    """True iff ``v`` is an integer combination of the rows of ``relations``."""
    if len(v) != relations.cols:
        raise ValueError(f"vector of length {len(v)} against {relations.cols} columns")
    h = hermite_normal_form(relations)
    w = list(v)
    for i in range(h.rows):
        row = h.row(i)
        piv = next((c for c, x in enumerate(row) if x), None)
        if piv is None:
            break
        # echelon form: every earlier column of w is already zero
        q, rem = divmod(w[piv], row[piv])
        if rem:
            return False
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return not any(w)


# --------------------------------------------------------------------------
# Smith normal form
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix

    def diagonal(self) -> list[int]:
        return self.D.diagonal_entries()


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with transformation certificates.

    Pivot rule: the nonzero entry of least absolute value in the active
    submatrix, first in row-major order on ties.  Row operations are mirrored
    into ``U`` and column operations into ``V``.
    """
    m, n = a.rows, a.cols
    A = a.to_lists()
    U = IntegerMatrix.identity(m).to_lists()
    V = IntegerMatrix.identity(n).to_lists()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (piv is None or abs(x) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        p = A[t][t]

        dirty = False
        for i in range(t + 1, m):
            q = A[i][t] // p
            if q:
                add_row(i, t, -q)
            dirty = dirty or A[i][t] != 0
        for j in range(t + 1, n):
            q = A[t][j] // p
            if q:
                add_col(j, t, -q)
            dirty = dirty or A[t][j] != 0
        if dirty:
            # a remainder smaller than |p| now exists; pick it as the new pivot
            continue

        bad = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
            None,
        )
        if bad is not None:
            add_row(t, bad, 1)
            continue

        if p < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return SmithDecomposition(
        D=IntegerMatrix.from_rows(A, cols=n),
        U=IntegerMatrix.from_rows(U, cols=m),
        V=IntegerMatrix.from_rows(V, cols=n),
    )


# --------------------------------------------------------------------------
# Finitely generated abelian groups
# --------------------------------------------------------------------------

def _prime_power_factors(n: int) -> list[tuple[int, int]]:
    """Factor ``n >= 1`` into ``[(p, p**e), ...]`` by trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append((p, q))
        p += 1
    if n > 1:
        out.append((n, n))
    return out


@dataclass(frozen=True)
class FgAbGroup:
    """``Z/d1 x ... x Z/dk x Z^r`` with ``2 <= d1 | d2 | ... | dk``.

    The canonical form makes field-wise equality coincide with isomorphism.
    """

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError(f"invariant factors must be >= 2: {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain: {fs}")

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when the group is infinite."""
        if self.free_rank:
            return None
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    @property
    def torsion_order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) + self.free_rank <= 1

    def primary_decomposition(self) -> list[int]:
        """Orders of the prime-power cyclic factors, sorted ascending."""
        return sorted(q for f in self.invariant_factors for _, q in _prime_power_factors(f))

    def __str__(self):
        parts = [f"Z/{f}" for f in self.invariant_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"


def product_to_invariant_factors(cyclic_orders: Iterable[int], free_rank: int = 0) -> FgAbGroup:
    """Canonical form of ``Z/a1 x ... x Z/ak x Z^free_rank``."""
    by_prime: dict[int, list[int]] = {}
    for a in cyclic_orders:
        if a < 1:
            raise ValueError(f"cyclic orders must be >= 1, got {a}")
        for p, q in _prime_power_factors(a):
            by_prime.setdefault(p, []).append(q)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for qs in by_prime.values():
        # largest powers go to the last (largest) invariant factor
        for slot, q in zip(range(width - 1, -1, -1), sorted(qs, reverse=True)):
            factors[slot] *= q
    return FgAbGroup(tuple(factors), free_rank)


@dataclass(frozen=True)
class Presentation:
    """``Z^n_generators`` modulo the row lattice of ``relations``."""

    n_generators: int
    relations: IntegerMatrix

    def __post_init__(self):
        if self.relations.cols != self.n_generators:
            raise ValueError(
                f"relations have {self.relations.cols} columns for {self.n_generators} generators"
            )

    @classmethod
    def from_rows(cls, n_generators: int, rows: Iterable[Sequence[int]]) -> "Presentation":
        return cls(n_generators, IntegerMatrix.from_rows(rows, cols=n_generators))


def presentation_to_group(p: Presentation) -> FgAbGroup:
    diag = smith_normal_form(p.relations).diagonal()
    nonzero = [d for d in diag if d]
    return FgAbGroup(
        tuple(d for d in nonzero if d > 1),
        p.n_generators - len(nonzero),
    )
