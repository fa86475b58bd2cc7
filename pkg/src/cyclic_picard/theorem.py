"""Picard groups of the stacks B_{h,g,n} of uniform cyclic covers.

Two independent routes to the same group:

* ``build_presentation`` takes the Picard group of the universal Jacobian,
  quotients by the discriminant class (plus the extra kernel generator in
  the h = n = 2, g = 1 case) and reduces it with Smith normal form;
* ``closed_form_structure`` reads off the published table of abstract groups.

``verify`` compares the two.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .fgab import FgAbGroup, Presentation, presentation_to_group, product_to_invariant_factors
from .picard import GenusRegime, RegimeKind, discriminant_class

UPPER_BOUND_NOTE = "upper-bound presentation, isomorphism not guaranteed"


class EmptyModuli(ValueError):
    pass


class UnsupportedCase(ValueError):
    pass


@dataclass(frozen=True)
class CoverParams:
    h: int
    g: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"cover degree n must be >= 2, got {self.n}")
        if self.h < 0 or self.g < 0:
            raise ValueError("genera must be non-negative")

    @classmethod
    def from_degree(cls, g: int, n: int, d: int) -> "CoverParams":
        return cls(1 + n * (g - 1) + n * (n - 1) * d // 2, g, n)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.h, self.g, self.n)


@dataclass(frozen=True)
class NonIntegral:
    """Marker for a degree invariant outside the natural numbers."""

    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def degree_invariant(p: CoverParams) -> int | NonIntegral:
    num = 2 * (p.h + p.n * (1 - p.g) - 1)
    den = p.n * (p.n - 1)
    if num < 0 or num % den:
        return NonIntegral(num, den)
    return num // den


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool


def theorem_range(g: int, n: int, d: int) -> bool:
    """Whether (g, n, d) falls in a row of the closed-form table."""
    nd = n * d
    if d < 1:
        return False
    if g == 0:
        return True
    if g == 1:
        return nd > 2
    return (nd > 2 * g - 2 and g >= 4) or (nd > 2 * g - 1 and g >= 3) or (nd > 2 * g and g >= 2)


def check_hypotheses(p: CoverParams, d: int) -> list[Hypothesis]:
    if d < 0:
        raise ValueError("d must be non-negative")
    nd = p.n * d
    return [
        Hypothesis("nd_gt_2g_minus_2", nd > 2 * p.g - 2),
        Hypothesis("theoremA_range", theorem_range(p.g, p.n, d)),
        Hypothesis("special_case_B112", p.key == (1, 1, 2)),
        Hypothesis("special_case_B212", p.key == (2, 1, 2)),
        # characteristic is fixed to 0
        Hypothesis("characteristic_conditions", True),
    ]


@dataclass(frozen=True)
class PicardReport:
    params: CoverParams
    d: int | NonIntegral
    empty: bool
    regime: GenusRegime | None = None
    presentation: Presentation | None = None
    structure: FgAbGroup | None = None
    closed_form: FgAbGroup | None = None
    hypotheses: tuple[Hypothesis, ...] = ()
    isomorphism_guaranteed: bool = False
    note: str | None = None

    @property
    def generators(self) -> tuple[str, ...]:
        return self.regime.symbols if self.regime else ()

    @property
    def hypotheses_met(self) -> dict[str, bool]:
        return {h.name: h.holds for h in self.hypotheses}


def _regime_for(p: CoverParams, d: int) -> GenusRegime:
    if d == 0:
        if p.key == (1, 1, 2):
            return GenusRegime.b112()
        raise UnsupportedCase(f"{p.key}: d = 0 (mu_n-torsors) is only handled for (1, 1, 2)")
    return GenusRegime(p.g, d)


def build_presentation(p: CoverParams) -> PicardReport:
    d = degree_invariant(p)
    if isinstance(d, NonIntegral):
        raise EmptyModuli(f"{p.key}: d = {d} is not a natural number")
    regime = _regime_for(p, d)
    hyps = tuple(check_hypotheses(p, d))
    met = {h.name: h.holds for h in hyps}
    rels = [list(regime.basis.jac_relations.row(i)) for i in range(regime.basis.jac_relations.rows)]

    if regime.kind is RegimeKind.B112:
        # Pic of the B112 base already is the whole answer: (pi_* w)^4 = 0
        guaranteed = True
    else:
        if not met["nd_gt_2g_minus_2"]:
            raise UnsupportedCase(
                f"{p.key}: nd = {p.n * d} <= 2g - 2, the Jacobian quotient description is unavailable"
            )
        rels.append(list(discriminant_class(regime, p.n).exponents))
        if met["special_case_B212"]:
            # second component of the branch locus: (pi_* L)^2 (x) (pi_* w)^-2
            rels.append([2, -2])
            guaranteed = True
        else:
            guaranteed = met["theoremA_range"]

    pres = Presentation.from_rows(len(regime.symbols), rels)
    return PicardReport(
        params=p,
        d=d,
        empty=False,
        regime=regime,
        presentation=pres,
        structure=presentation_to_group(pres),
        closed_form=closed_form_structure(p, d),
        hypotheses=hyps,
        isomorphism_guaranteed=guaranteed,
        note=None if guaranteed else UPPER_BOUND_NOTE,
    )


def picard_report(p: CoverParams) -> PicardReport:
    """Like ``build_presentation`` but returns an empty report instead of raising."""
    d = degree_invariant(p)
    if isinstance(d, NonIntegral):
        return PicardReport(params=p, d=d, empty=True)
    return build_presentation(p)


def closed_form_structure(p: CoverParams, d: int) -> FgAbGroup | None:
    """Tabulated abstract group, or ``None`` when no table row covers ``p``."""
    g, n = p.g, p.n
    if p.key == (1, 1, 2):
        return product_to_invariant_factors([4])
    if d < 1:
        return None
    if g == 0:
        order = 2 * n * (n * d - 1) if d % 2 == 0 else n * (n * d - 1)
        return product_to_invariant_factors([order])
    if g == 1:
        if p.key == (2, 1, 2):
            return product_to_invariant_factors([3, 2, 2])
        if n * d <= 2:
            return None
        half = n * (d * n + d - 2 * n) // 2
        if half % 2 == 0:
            return product_to_invariant_factors([3, 4, 2 * n * n])
        return product_to_invariant_factors([3, 2, 4 * n * n])
    if not theorem_range(g, n, d):
        return None
    m = 2 * n if n % 2 else n
    if g == 2:
        return product_to_invariant_factors([m, 10], free_rank=1)
    return product_to_invariant_factors([m], free_rank=2)


class Verdict(enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class VerificationOutcome:
    params: CoverParams
    verdict: Verdict
    computed: FgAbGroup | None = None
    claimed: FgAbGroup | None = None
    reason: str | None = None


def verify(p: CoverParams) -> VerificationOutcome:
    try:
        rep = build_presentation(p)
    except EmptyModuli as e:
        return VerificationOutcome(p, Verdict.NOT_COVERED, reason=f"empty moduli: {e}")
    except UnsupportedCase as e:
        return VerificationOutcome(p, Verdict.NOT_COVERED, reason=str(e))
    if rep.closed_form is None:
        return VerificationOutcome(p, Verdict.NOT_COVERED, computed=rep.structure,
                                   reason="no closed-form table row")
    verdict = Verdict.MATCH if rep.structure == rep.closed_form else Verdict.MISMATCH
    return VerificationOutcome(p, verdict, computed=rep.structure, claimed=rep.closed_form)


@dataclass
class SweepSummary:
    outcomes: list[VerificationOutcome] = field(default_factory=list)

    def count(self, verdict: Verdict) -> int:
        return sum(o.verdict is verdict for o in self.outcomes)

    @property
    def mismatches(self) -> list[VerificationOutcome]:
        return [o for o in self.outcomes if o.verdict is Verdict.MISMATCH]


def sweep_params(genera, degrees_n, degrees_d) -> list[CoverParams]:
    """Distinct cover types over a (g, n, d) grid, ordered by (h, g, n)."""
    ps = {
        CoverParams.from_degree(g, n, d)
        for g, n, d in itertools.product(genera, degrees_n, degrees_d)
        if n >= 2 and d >= 0 and 1 + n * (g - 1) + n * (n - 1) * d // 2 >= 0
    }
    return sorted(ps, key=lambda p: p.key)


def sweep(genera, degrees_n, degrees_d, jobs: int = 1) -> SweepSummary:
    params = sweep_params(genera, degrees_n, degrees_d)
    if jobs > 1 and len(params) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order regardless of completion order
            outcomes = list(pool.map(verify, params, chunksize=32))
    else:
        outcomes = [verify(p) for p in params]
    return SweepSummary(outcomes)
