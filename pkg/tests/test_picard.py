import pytest
from hypothesis import given, strategies as st

from cyclic_picard.picard import (
    DivisorClass,
    GenusRegime,
    OutOfFormulaRange,
    RegimeKind,
    RegimeMismatch,
    UnsupportedRegime,
    class_equal,
    det_pushforward_class,
    discriminant_class,
    genus1_character_consistency,
    genus1_character_sides,
)


def regimes(d):
    return [GenusRegime(g, d) for g in (0, 1, 2, 3, 7)]


def test_regime_kinds_and_bases():
    assert GenusRegime(0, 2).kind is RegimeKind.G0
    assert GenusRegime(1, 2).kind is RegimeKind.G1
    assert GenusRegime(2, 2).kind is RegimeKind.G2
    assert GenusRegime(5, 2).kind is RegimeKind.GHIGH
    assert GenusRegime.b112().kind is RegimeKind.B112
    assert GenusRegime(1, 1).symbols == ("Lambda", "Omega")
    assert GenusRegime(1, 1).basis.jac_relations.to_lists() == [[0, 12]]
    assert GenusRegime(2, 1).basis.jac_relations.to_lists() == [[10, 0, 0]]
    assert GenusRegime(3, 1).basis.jac_relations.rows == 0
    assert GenusRegime.b112().basis.jac_relations.to_lists() == [[4]]
    with pytest.raises(ValueError):
        GenusRegime(1, 0)
    with pytest.raises(ValueError):
        GenusRegime(2, 0, "B112")


def test_det_pushforward_examples():
    assert det_pushforward_class(GenusRegime(0, 2), 1, 1).exponents == (1,)
    for d in (1, 2, 5):
        assert det_pushforward_class(GenusRegime(1, d), 1, 0).exponents == (1, 0)
    assert det_pushforward_class(GenusRegime(4, 3), 1, 1).exponents == (0, 0, 1)
    assert det_pushforward_class(GenusRegime(0, 1), 2, 0).exponents == (3,)


def test_genus0_odd_matches_recursion():
    # det pi_*(T^q) = L0^(q(q+1)/2) for T = L (x) w^((d-1)/2), a degree-1 sheaf;
    # with d = 1 that is L itself, so q = 2 is det pi_*(L^2)
    for q in range(0, 8):
        assert det_pushforward_class(GenusRegime(0, 1), q, 0).exponents == (q * (q + 1) // 2,)


def test_genus0_max_clamps_to_zero():
    assert det_pushforward_class(GenusRegime(0, 2), 1, 5).exponents == (0,)
    assert det_pushforward_class(GenusRegime(0, 3), 3, 40).exponents == (0,)


def test_formula_range_errors():
    with pytest.raises(OutOfFormulaRange):
        det_pushforward_class(GenusRegime(1, 2), -1, 0)
    with pytest.raises(OutOfFormulaRange):
        det_pushforward_class(GenusRegime(1, 2), 0, 2)
    with pytest.raises(OutOfFormulaRange):
        det_pushforward_class(GenusRegime(3, 2), 2, 0)
    with pytest.raises(OutOfFormulaRange):
        det_pushforward_class(GenusRegime(3, 2), 0, 0)
    # det pi_* L is d_pi(L) only when d > 2g - 2
    with pytest.raises(OutOfFormulaRange):
        det_pushforward_class(GenusRegime(3, 4), 1, 0)
    assert det_pushforward_class(GenusRegime(3, 5), 1, 0).exponents == (0, 1, 0)
    with pytest.raises(OutOfFormulaRange):
        det_pushforward_class(GenusRegime.b112(), 2, 1)


def test_wired_generators():
    assert det_pushforward_class(GenusRegime(1, 3), 0, 1).exponents == (0, 1)
    assert det_pushforward_class(GenusRegime(2, 3), 0, 1).exponents == (1, 0, 0)
    assert det_pushforward_class(GenusRegime(6, 3), 0, 1).exponents == (1, 0, 0)
    assert det_pushforward_class(GenusRegime.b112(), 0, 1).exponents == (1,)


@pytest.mark.parametrize("regime, n, expected", [
    (GenusRegime(1, 1), 2, (8, -2)),
    (GenusRegime(2, 4), 3, (-18, 6, 12)),
    (GenusRegime(0, 2), 2, (12,)),
    (GenusRegime(0, 1), 2, (2,)),
    (GenusRegime(1, 2), 2, (8, 4)),
])
def test_discriminant_class_examples(regime, n, expected):
    assert discriminant_class(regime, n).exponents == expected


def test_discriminant_class_errors():
    with pytest.raises(UnsupportedRegime):
        discriminant_class(GenusRegime.b112(), 2)
    with pytest.raises(ValueError):
        discriminant_class(GenusRegime(1, 1), 1)


@pytest.mark.parametrize("g", [0, 1, 2, 3, 9])
def test_composition_identity(g):
    for d in range(1, 51):
        regime = GenusRegime(g, d)
        for n in range(2, 51):
            lhs = discriminant_class(regime, n)
            rhs = 2 * det_pushforward_class(regime, n, 1) - 2 * det_pushforward_class(regime, 0, 1)
            assert lhs.exponents == rhs.exponents, (g, d, n)


def test_genus0_odd_integrality():
    for d in range(1, 52, 2):
        for n in range(0, 51):
            for k in range(-20, 21):
                assert (n * max(n * d - 2 * k + 1, 0)) % 2 == 0
                det_pushforward_class(GenusRegime(0, d), n, k)


def test_character_consistency_examples():
    assert genus1_character_sides(1, 1) == (0, 0)
    assert genus1_character_sides(2, 3) == (0, 0)
    assert genus1_character_sides(2, 1) == (-2, -2)
    for n in range(1, 51):
        for d in range(1, 51):
            lhs, rhs = genus1_character_sides(n, d)
            assert lhs == rhs == n * d * (n - 1) // 2 - n * n + 1
            assert genus1_character_consistency(n, d)
    with pytest.raises(ValueError):
        genus1_character_consistency(0, 1)


def test_class_equal_examples():
    g1 = GenusRegime(1, 3)
    assert class_equal(DivisorClass(g1, (0, 12)), DivisorClass(g1, (0, 0)))
    assert not class_equal(DivisorClass(g1, (0, 6)), DivisorClass(g1, (0, 0)))
    gh = GenusRegime(4, 3)
    assert class_equal(DivisorClass(gh, (1, 2, 3)), DivisorClass(gh, (1, 2, 3)))
    assert not class_equal(DivisorClass(gh, (1, 2, 3)), DivisorClass(gh, (1, 2, 4)))
    with pytest.raises(RegimeMismatch):
        class_equal(DivisorClass(g1, (0, 0)), DivisorClass(GenusRegime(1, 4), (0, 0)))
    with pytest.raises(ValueError):
        DivisorClass(g1, (1, 2, 3))


vec2 = st.tuples(st.integers(-100, 100), st.integers(-100, 100))


@given(vec2, vec2, vec2, st.integers(-5, 5), st.sampled_from([0, 1]))
def test_class_equal_is_a_congruence(a, b, c, k, side):
    r = GenusRegime(1, 2)
    A, B, C = (DivisorClass(r, v) for v in (a, b, c))
    assert class_equal(A, A)
    assert class_equal(A, B) == class_equal(B, A)
    if class_equal(A, B) and class_equal(B, C):
        assert class_equal(A, C)
    shift = DivisorClass(r, (0, 12 * k))
    if side:
        assert class_equal(A + shift, B) == class_equal(A, B)
    else:
        assert class_equal(A, B + shift) == class_equal(A, B)


@given(st.tuples(*[st.integers(-50, 50)] * 3), st.integers(-5, 5))
def test_genus2_relation_absorbs_ten_omega(v, k):
    r = GenusRegime(2, 3)
    a = DivisorClass(r, v)
    assert class_equal(a, a + DivisorClass(r, (10 * k, 0, 0)))
    assert class_equal(a, a + DivisorClass(r, (5, 0, 0))) is False


def test_divisor_class_display():
    r = GenusRegime(1, 1)
    assert str(DivisorClass(r, (8, -2))) == "Lambda^8 (x) Omega^-2"
    assert str(DivisorClass(r, (0, 0))) == "O"
