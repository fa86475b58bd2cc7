"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Iterable, Mapping

# A monomial is a sorted tuple of (variable, exponent) pairs with exponent > 0.
Monomial = tuple[tuple[str, int], ...]

ONE_MONO: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """``a / b`` if ``b`` divides ``a``, else None."""
    exps = dict(a)
    for v, e in b:
        have = exps.get(v, 0)
        if have < e:
            return None
        if have == e:
            del exps[v]
        else:
            exps[v] = have - e
    return tuple(sorted(exps.items()))


def _grlex_key(m: Monomial, variables: tuple[str, ...]):
    exps = dict(m)
    return (sum(exps.values()), tuple(exps.get(v, 0) for v in variables))


class ExactPoly:
    """Immutable polynomial; zero coefficients are never stored.

    Terms are kept in a dict keyed by monomial.  Variables are ordered
    alphabetically, and terms print in descending graded-lex order.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted(m))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "ExactPoly":
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, name: str) -> "ExactPoly":
        return cls({((name, 1),): 1})

    @staticmethod
    def coerce(x) -> "ExactPoly":
        if isinstance(x, ExactPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ExactPoly")

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({v for m in self._terms for v, _ in m}))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == ONE_MONO for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONO, Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    def degree_in(self, var: str) -> int:
        if not self._terms:
            return -1
        return max(dict(m).get(var, 0) for m in self._terms)

    def sorted_terms(self, variables: Iterable[str] | None = None) -> list[tuple[Monomial, Fraction]]:
        vs = tuple(sorted(set(variables))) if variables is not None else self.variables
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0], vs), reverse=True)

    def leading_term(self, variables: Iterable[str] | None = None) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        vs = tuple(sorted(set(variables))) if variables is not None else self.variables
        return max(self._terms.items(), key=lambda mc: _grlex_key(mc[0], vs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = ExactPoly.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return ExactPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-ExactPoly.coerce(other))

    def __rsub__(self, other):
        return ExactPoly.coerce(other) - self

    def __mul__(self, other):
        other = ExactPoly.coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = ExactPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor) -> tuple["ExactPoly", "ExactPoly"]:
        """Multivariate division by a single divisor in graded-lex order.

        The remainder is zero exactly when ``divisor`` divides ``self``.
        """
        divisor = ExactPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        vs = set(self.variables) | set(divisor.variables)
        lm_g, lc_g = divisor.leading_term(vs)
        quot: dict[Monomial, Fraction] = {}
        rem: dict[Monomial, Fraction] = {}
        p = self
        while not p.is_zero():
            lm_p, lc_p = p.leading_term(vs)
            m = _mono_div(lm_p, lm_g)
            if m is None:
                rem[lm_p] = lc_p
                p = p - ExactPoly({lm_p: lc_p})
            else:
                c = lc_p / lc_g
                quot[m] = quot.get(m, 0) + c
                p = p - ExactPoly({m: c}) * divisor
        return ExactPoly(quot), ExactPoly(rem)

    def exact_div(self, divisor) -> "ExactPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPoly.const(other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"ExactPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)


# -- expression parsing ----------------------------------------------------

def parse_poly(text: str) -> ExactPoly:
    """Parse an integer-coefficient expression using ``+ - * ^`` and parentheses."""
    if "**" in text:
        raise ValueError("use ^ for powers")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as e:
        raise ValueError(f"malformed polynomial {text!r}: {e.msg}") from None
    return _eval_node(tree.body, text)


def _eval_node(node, text) -> ExactPoly:
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return ExactPoly.const(node.value)
    if isinstance(node, ast.Name):
        return ExactPoly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_node(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            if isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0:
                return _eval_node(node.left, text) ** exp.value
            raise ValueError(f"exponents must be non-negative integer literals in {text!r}")
        left, right = _eval_node(node.left, text), _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise ValueError(f"unsupported syntax in polynomial {text!r}")
