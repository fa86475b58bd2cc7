"""Tautological line-bundle classes on universal Jacobians.

Classes are written additively: a tensor product of line bundles is a sum
of integer exponent vectors over the generator basis of the relevant genus
regime, and a dual is a negation.  Equality of classes is equality modulo
the relation lattice of that basis.

Generator symbols used throughout::

    L0     genus 0; pi_*(L (x) w^(d/2)) for d even,
                    det pi_*(L (x) w^((d-1)/2)) for d odd
    Lambda genus 1; det pi_* L
    Omega  genus 1: pi_* w       genus >= 2: det pi_* w
    Delta  genus >= 2; the determinant of cohomology d_pi(L)
    Theta  genus >= 2; det pi_*(L (x) w)

where ``L`` is the universal degree-d sheaf and ``w`` the relative
dualizing sheaf.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .fgab import IntegerMatrix, lattice_contains


class IntegralityViolation(ArithmeticError):
    pass


class OutOfFormulaRange(ValueError):
    pass


class UnsupportedRegime(ValueError):
    pass


class RegimeMismatch(ValueError):
    pass


class RegimeKind(enum.Enum):
    G0 = "G0"
    G1 = "G1"
    G2 = "G2"
    GHIGH = "GHigh"
    B112 = "B112"


@dataclass(frozen=True)
class GeneratorBasis:
    symbols: tuple[str, ...]
    jac_relations: IntegerMatrix


# Regime constants live here and nowhere else.
_BASES = {
    RegimeKind.G0: GeneratorBasis(("L0",), IntegerMatrix.zeros(0, 1)),
    RegimeKind.G1: GeneratorBasis(("Lambda", "Omega"), IntegerMatrix.from_rows([(0, 12)])),
    RegimeKind.G2: GeneratorBasis(("Omega", "Delta", "Theta"), IntegerMatrix.from_rows([(10, 0, 0)])),
    RegimeKind.GHIGH: GeneratorBasis(("Omega", "Delta", "Theta"), IntegerMatrix.zeros(0, 3)),
    RegimeKind.B112: GeneratorBasis(("Omega",), IntegerMatrix.from_rows([(4,)])),
}


@dataclass(frozen=True)
class GenusRegime:
    genus: int
    degree_d: int
    special_case: str | None = None

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.special_case is None:
            if self.degree_d < 1:
                raise ValueError(f"degree d must be >= 1, got {self.degree_d}")
        elif self.special_case == "B112":
            if (self.genus, self.degree_d) != (1, 0):
                raise ValueError("the B112 regime has genus 1 and d = 0")
        else:
            raise ValueError(f"unknown special case {self.special_case!r}")

    @classmethod
    def b112(cls) -> "GenusRegime":
        return cls(1, 0, "B112")

    @property
    def kind(self) -> RegimeKind:
        if self.special_case == "B112":
            return RegimeKind.B112
        if self.genus == 0:
            return RegimeKind.G0
        if self.genus == 1:
            return RegimeKind.G1
        if self.genus == 2:
            return RegimeKind.G2
        return RegimeKind.GHIGH

    @property
    def basis(self) -> GeneratorBasis:
        return _BASES[self.kind]

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.basis.symbols

    def generator(self, symbol: str) -> "DivisorClass":
        syms = self.symbols
        if symbol not in syms:
            raise KeyError(f"{symbol} is not a generator of {self.kind.value}")
        return DivisorClass(self, tuple(int(s == symbol) for s in syms))

    def __str__(self):
        return f"{self.kind.value}(g={self.genus}, d={self.degree_d})"


@dataclass(frozen=True)
class DivisorClass:
    regime: GenusRegime
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        if len(self.exponents) != len(self.regime.symbols):
            raise ValueError(
                f"{len(self.exponents)} exponents for basis {self.regime.symbols}"
            )

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.regime != self.regime:
            raise RegimeMismatch(f"{self.regime} vs {other.regime}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return DivisorClass(self.regime, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other):
        other = self._check(other)
        return DivisorClass(self.regime, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self):
        return DivisorClass(self.regime, tuple(-a for a in self.exponents))

    def __mul__(self, k: int):
        return DivisorClass(self.regime, tuple(k * a for a in self.exponents))

    __rmul__ = __mul__

    def __str__(self):
        terms = [f"{s}^{e}" for s, e in zip(self.regime.symbols, self.exponents) if e]
        return " (x) ".join(terms) if terms else "O"


def _div2(x: int) -> int:
    if x % 2:
        raise IntegralityViolation(f"half-integer exponent {x}/2")
    return x // 2


def det_pushforward_class(regime: GenusRegime, n: int, k: int) -> DivisorClass:
    """Class of ``det pi_*(L^n (x) w^k)`` in the regime's generator basis."""
    kind = regime.kind
    d = regime.degree_d

    if kind is RegimeKind.G0:
        # rank of pi_* of a degree (nd - 2k) sheaf on P^1
        e = n * max(n * d - 2 * k + 1, 0)
        return DivisorClass(regime, (e if d % 2 == 0 else _div2(e),))

    if kind is RegimeKind.G1:
        if n > 0:
            omega = d * n * k + _div2((n - 1) * (d * n - 2 * n - 2))
            return DivisorClass(regime, (n * n, omega))
        if (n, k) == (0, 1):
            return regime.generator("Omega")
        raise OutOfFormulaRange(f"genus 1 formula needs n > 0, got (n, k) = ({n}, {k})")

    if kind in (RegimeKind.G2, RegimeKind.GHIGH):
        if n >= 1 and k >= 1:
            return DivisorClass(regime, (
                6 * k * k - 6 * k - n * n + 1,
                -n * k + _div2(n * (n + 1)),
                n * k + _div2(n * (n - 1)),
            ))
        if (n, k) == (0, 1):
            return regime.generator("Omega")
        if (n, k) == (1, 0) and d > 2 * regime.genus - 2:
            # R^1 pi_* L vanishes in this degree range, so det pi_* L = d_pi(L)
            return regime.generator("Delta")
        raise OutOfFormulaRange(
            f"genus {regime.genus} formula needs n, k >= 1, got (n, k) = ({n}, {k})"
        )

    # B112: only the basis element itself and the trivial det pi_* L
    if (n, k) == (0, 1):
        return regime.generator("Omega")
    if (n, k) == (1, 0):
        return DivisorClass(regime, (0,))
    raise OutOfFormulaRange(f"no pushforward formula in the B112 regime for (n, k) = ({n}, {k})")


def discriminant_class(regime: GenusRegime, n: int) -> DivisorClass:
    """Class of the line bundle whose section cuts out the branch locus.

    Closed forms of ``2 det pi_*(L^n (x) w) - 2 det pi_* w``.
    """
    if n < 2:
        raise ValueError(f"cover degree must be >= 2, got {n}")
    kind = regime.kind
    d = regime.degree_d
    if kind is RegimeKind.G0:
        e = n * (n * d - 1)
        return DivisorClass(regime, (2 * e if d % 2 == 0 else e,))
    if kind is RegimeKind.G1:
        return DivisorClass(regime, (2 * n * n, n * (d * n + d - 2 * n)))
    if kind in (RegimeKind.G2, RegimeKind.GHIGH):
        return DivisorClass(regime, (-2 * n * n, n * (n - 1), n * (n + 1)))
    raise UnsupportedRegime("the B112 regime has no discriminant quotient")


def class_equal(a: DivisorClass, b: DivisorClass) -> bool:
    if a.regime != b.regime:
        raise RegimeMismatch(f"{a.regime} vs {b.regime}")
    return lattice_contains(a.regime.basis.jac_relations, (a - b).exponents)


def genus1_character_sides(n: int, d: int) -> tuple[int, int]:
    """Omega-exponent of ``det pi_*(L^n)`` in genus 1, computed two ways.

    The first side goes through the character generator
    ``Lambda + (d(d+1)/2 - 1) Omega`` and the image ``(1 - nd(nd+1)/2, n^2 d)``;
    the second is the k = 0 case of the closed formula.
    """
    via_character = n * n * (_div2(d * (d + 1)) - 1) + 1 - _div2(n * d * (n * d + 1))
    via_formula = _div2((n - 1) * (d * n - 2 * n - 2))
    return via_character, via_formula


def genus1_character_consistency(n: int, d: int) -> bool:
    if n <= 0 or d <= 0:
        raise ValueError("n and d must be positive")
    lhs, rhs = genus1_character_sides(n, d)
    return lhs == rhs
