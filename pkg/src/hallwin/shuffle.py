"""Kernel-twisted shuffle product on symmetric rational functions.

Elements of degree n are symmetric rational functions in z_1..z_n with
coefficients in Q(q1, q2) (or in the formal kernel parameters D, K).  The
product symmetrizes f(z_I) g(z_J) against a product of two-variable kernel
factors zeta(z_i / z_j) over order-preserving splittings I | J.

Setting q1 = q2 = 1 kills the kernel numerator, zeta collapses to 1, and
the product degenerates to plain symmetrization.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy import Rational, Symbol, cancel, together

q1, q2 = sympy.symbols("q1 q2")
D_sym, K_sym = sympy.symbols("D K")

_MAX_VARS = 12
_Z = sympy.symbols(" ".join(f"z{i}" for i in range(1, _MAX_VARS + 1)))


class PoleError(ZeroDivisionError):
    """An evaluation point annihilates a denominator factor."""


@dataclass(frozen=True)
class KernelParams:
    """Choice of kernel coefficients.

    mode "a2": two-parameter torus kernel, numerator (1-q1 x)(1-q2 x).
    mode "formal": free parameters D, K in 1 + xD/((1-x)(1-xK)).
    """

    mode: str = "a2"

    def __post_init__(self):
        if self.mode not in ("formal", "a2"):
            raise ValueError(f"unknown kernel mode {self.mode!r}")

    @property
    def D(self):
        return D_sym if self.mode == "formal" else sympy.expand((1 - q1) * (1 - q2))

    @property
    def K(self):
        return K_sym if self.mode == "formal" else q1 * q2


def zeta(x, params: KernelParams = KernelParams()):
    """Two-variable kernel as an exact expression in x (symbol or number)."""
    if params.mode == "a2":
        expr = ((1 - q1 * x) * (1 - q2 * x)) / ((1 - x) * (1 - q1 * q2 * x))
    else:
        expr = 1 + x * D_sym / ((1 - x) * (1 - x * K_sym))
    return expr


def zeta_value(x, q1_val, q2_val) -> Fraction:
    """Evaluate the a2 kernel at exact rational arguments."""
    x, a, b = Fraction(x), Fraction(q1_val), Fraction(q2_val)
    den = (1 - x) * (1 - a * b * x)
    if den == 0:
        raise PoleError(f"zeta pole at x={x}")
    return (1 - a * x) * (1 - b * x) / den


def zvars(n: int):
    if n > _MAX_VARS:
        raise ValueError(f"degree {n} exceeds the supported maximum {_MAX_VARS}")
    return _Z[:n]


@dataclass(frozen=True)
class ShuffleElement:
    degree: int
    expr: object  # sympy expression in z1..z_degree and kernel parameters

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("negative degree")

    @staticmethod
    def scalar(c) -> "ShuffleElement":
        return ShuffleElement(0, sympy.nsimplify(sympy.sympify(c), rational=True))

    @staticmethod
    def from_expr(n: int, expr, check_symmetry: bool = True) -> "ShuffleElement":
        expr = sympy.sympify(expr)
        el = ShuffleElement(n, expr)
        if check_symmetry and not el.is_symmetric():
            raise ValueError("expression is not symmetric in its z variables")
        return el

    def is_symmetric(self) -> bool:
        """Symmetry under all adjacent transpositions (hence under S_n)."""
        zs = zvars(self.degree)
        for i in range(self.degree - 1):
            a, b = zs[i], zs[i + 1]
            t = Symbol("_swap_tmp")
            swapped = self.expr.subs({a: t, b: a}).subs({t: b})
            if cancel(together(self.expr - swapped)) != 0:
                return False
        return True


unit = ShuffleElement(0, sympy.Integer(1))


def _relabel(expr, n: int, positions) -> object:
    """Substitute z_1..z_n of expr by the z's at the given 1-based positions."""
    if n == 0:
        return expr
    zs = zvars(n)
    tmp = sympy.symbols(" ".join(f"_t{i}" for i in range(1, n + 1)))
    if n == 1:
        tmp = (tmp,)
    sub1 = {zs[i]: tmp[i] for i in range(n)}
    sub2 = {tmp[i]: _Z[positions[i] - 1] for i in range(n)}
    return expr.subs(sub1).subs(sub2)


def mul(f: ShuffleElement, g: ShuffleElement,
        params: KernelParams = KernelParams()) -> ShuffleElement:
    """Shuffle product: sum over order-preserving splittings of z_1..z_{n+m}."""
    n, m = f.degree, g.degree
    total = n + m
    if total > _MAX_VARS:
        raise ValueError("product degree exceeds the supported maximum")
    acc = sympy.Integer(0)
    universe = list(range(1, total + 1))
    for I in itertools.combinations(universe, n):
        J = tuple(p for p in universe if p not in I)
        term = _relabel(f.expr, n, I) * _relabel(g.expr, m, J)
        for i in I:
            for j in J:
                term *= zeta(_Z[i - 1] / _Z[j - 1], params)
        acc += term
    # kept as a raw sum: a global exact cancellation is exponential in the
    # degree, and evaluation / equality checks do not need it
    return ShuffleElement(total, acc)


def equals(f: ShuffleElement, g: ShuffleElement,
           params: KernelParams = KernelParams(),
           strategy: str = "exact", seed: int = 0, points: int = 5) -> bool:
    """Exact (cross-multiplied identity) or seeded probabilistic equality."""
    if f.degree != g.degree:
        raise ValueError("degrees differ")
    if strategy == "exact":
        return cancel(together(f.expr - g.expr)) == 0
    if strategy != "probabilistic":
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = random.Random(seed)
    diff = f.expr - g.expr
    syms = sorted(diff.free_symbols, key=lambda s: s.name)
    checked = 0
    attempts = 0
    while checked < points:
        attempts += 1
        if attempts > 50 * points:
            raise PoleError("could not find enough pole-free sample points")
        subs = {s: Rational(rng.randint(2, 97), rng.randint(1, 23)) for s in syms}
        val = diff.subs(subs)
        if val.has(sympy.zoo, sympy.nan, sympy.oo):
            continue
        if val != 0:
            return False
        checked += 1
    return True


def shuffle_eval(f: ShuffleElement, z_values, q1_val, q2_val) -> Fraction:
    """Exact rational value of f at rational z's and kernel parameters."""
    if len(z_values) != f.degree:
        raise ValueError("wrong number of z values")
    subs = {q1: Rational(Fraction(q1_val)), q2: Rational(Fraction(q2_val))}
    for z, v in zip(zvars(f.degree), z_values):
        subs[z] = Rational(Fraction(v))
    val = f.expr.subs(subs)
    if val.has(sympy.zoo, sympy.nan, sympy.oo):
        # a single term hit a pole; the full cancelled form may still be
        # regular there, so fall back to the exact rational normal form
        expr = cancel(together(f.expr))
        num, den = sympy.fraction(expr)
        den_val = den.subs(subs)
        if den_val == 0:
            for factor in sympy.Mul.make_args(sympy.factor(den)):
                if factor.subs(subs) == 0:
                    raise PoleError(f"denominator factor {factor} vanishes")
            raise PoleError("denominator vanishes")
        val = num.subs(subs) / den_val
    val = sympy.nsimplify(val, rational=True)
    return Fraction(int(val.p), int(val.q))


# -- text mini-language ----------------------------------------------------

_TOKEN_RE = re.compile(r"^[\sz0-9q+\-*^()]*$")


def parse_element(text: str, degree: int | None = None) -> ShuffleElement:
    """Parse a symmetric polynomial expression in z1..zn, q1, q2.

    Allowed tokens: variables z<i>, parameters q1 and q2, integers, and
    + - * ^ with parentheses.  The result is symmetry-checked.
    """
    if not _TOKEN_RE.match(text):
        raise ValueError("illegal character in element expression")
    expr = sympy.parse_expr(
        text.replace("^", "**"),
        local_dict={f"z{i}": _Z[i - 1] for i in range(1, _MAX_VARS + 1)}
        | {"q1": q1, "q2": q2},
        evaluate=True)
    bad = expr.free_symbols - set(_Z) - {q1, q2}
    if bad:
        raise ValueError(f"unknown symbols {sorted(map(str, bad))}")
    zs_used = [i + 1 for i in range(_MAX_VARS) if _Z[i] in expr.free_symbols]
    n = degree if degree is not None else (max(zs_used) if zs_used else 0)
    if zs_used and max(zs_used) > n:
        raise ValueError("z index exceeds the declared degree")
    if not expr.is_polynomial(*_Z[:n]):
        raise ValueError("element expression must be polynomial in the z's")
    return ShuffleElement.from_expr(n, sympy.expand(expr))


def serialize_element(el: ShuffleElement) -> str:
    """Canonical text form: monomials sorted lexicographically."""
    zs = list(zvars(el.degree)) if el.degree else []
    expr = sympy.expand(together(el.expr))
    gens = zs + [q1, q2]
    poly = sympy.Poly(expr, *gens)
    pieces = []
    for monom, coeff in sorted(poly.terms(), reverse=True):
        factors = []
        c = sympy.nsimplify(coeff, rational=True)
        for g, e in zip(gens, monom):
            if e == 1:
                factors.append(str(g))
            elif e > 1:
                factors.append(f"{g}^{e}")
        body = "*".join(factors)
        if not factors:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(body)
        elif c == -1:
            pieces.append(f"-{body}")
        else:
            pieces.append(f"{c}*{body}")
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += p if p.startswith("-") else "+" + p
    return out
