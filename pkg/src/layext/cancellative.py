"""Simple extensions of the cancellative semifield of positive rationals.

The positive rationals under ordinary (+, *) form a cancellative semifield
whose ring of differences is Q.  A simple proper algebraic extension is cut
out by a monic irreducible polynomial with an isolated positive real root and
at least one negative coefficient (a single-signed annihilator would collapse
the extension to a field).  Elements are coefficient vectors on the basis
1, X, ..., X^(n-1) of Q[x] modulo the minimal polynomial; the positive cone
is tracked by the coefficient signs.

Kernels of the extension correspond to divisibility by the minimal
polynomial: a quotient a(x)/b(x) of positive polynomials is congruent to 1
exactly when the minimal polynomial divides a - b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .errors import (
    AllPositiveCoefficients,
    GeneratorMismatch,
    IntervalNotIsolating,
    NoPositiveRoot,
    NoSignChange,
    Reducible,
    TrivialExtension,
    ZeroElement,
)
from .tropical import as_fraction


def _terms_from(obj) -> tuple:
    if isinstance(obj, dict):
        items = [(int(k), as_fraction(v)) for k, v in obj.items()]
    else:
        items = [(int(k), as_fraction(v)) for k, v in obj]
    items = [(d, c) for d, c in items if c != 0]
    items.sort()
    degs = [d for d, _ in items]
    if len(set(degs)) != len(degs):
        raise ValueError("duplicate degrees")
    if any(d < 0 for d in degs):
        raise ValueError("negative degrees are not allowed")
    return tuple(items)


@dataclass(frozen=True, slots=True)
class PosPoly:
    """A nonzero polynomial with strictly positive rational coefficients.

    The zero polynomial is not representable: the positive polynomials form
    the polynomial semiring over the positive rationals, which has no zero.
    """

    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise ValueError("the zero polynomial is not a PosPoly")
        for _, c in self.terms:
            if c <= 0:
                raise ValueError("PosPoly coefficients must be positive")

    @classmethod
    def of(cls, obj) -> "PosPoly":
        return cls(_terms_from(obj))

    @classmethod
    def constant(cls, c) -> "PosPoly":
        return cls.of({0: c})

    @classmethod
    def x(cls, k: int = 1, coeff=1) -> "PosPoly":
        return cls.of({k: coeff})

    @property
    def degree(self) -> int:
        return self.terms[-1][0]

    def coeff(self, d: int) -> Fraction:
        for deg, c in self.terms:
            if deg == d:
                return c
        return Fraction(0)

    def __add__(self, other: "PosPoly") -> "PosPoly":
        acc = dict(self.terms)
        for d, c in other.terms:
            acc[d] = acc.get(d, Fraction(0)) + c
        return PosPoly.of(acc)

    def __mul__(self, other: "PosPoly") -> "PosPoly":
        acc: dict = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                acc[d1 + d2] = acc.get(d1 + d2, Fraction(0)) + c1 * c2
        return PosPoly.of(acc)

    def __pow__(self, k: int) -> "PosPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = PosPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "PosPoly":
        c = as_fraction(c)
        if c <= 0:
            raise ValueError("scaling factor must be positive")
        return PosPoly(tuple((d, c * x) for d, x in self.terms))

    def to_coeffs(self) -> polys.Poly:
        out = [Fraction(0)] * (self.degree + 1)
        for d, c in self.terms:
            out[d] = c
        return polys.poly(out)

    def to_signed(self) -> "SignedPoly":
        return SignedPoly(self.terms)

    def __str__(self) -> str:
        return _render_terms(self.terms)


@dataclass(frozen=True, slots=True)
class SignedPoly:
    """A polynomial over Q in sparse canonical form; may be zero (no terms)."""

    terms: tuple

    @classmethod
    def of(cls, obj) -> "SignedPoly":
        return cls(_terms_from(obj))

    @classmethod
    def from_coeffs(cls, coeffs) -> "SignedPoly":
        return cls.of({i: c for i, c in enumerate(coeffs)})

    @classmethod
    def diff(cls, a: PosPoly, b: PosPoly) -> "SignedPoly":
        acc = dict(a.terms)
        for d, c in b.terms:
            acc[d] = acc.get(d, Fraction(0)) - c
        return cls.of(acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    @property
    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[-1][1] == 1

    def to_coeffs(self) -> polys.Poly:
        if not self.terms:
            return ()
        out = [Fraction(0)] * (self.degree + 1)
        for d, c in self.terms:
            out[d] = c
        return polys.poly(out)

    def __str__(self) -> str:
        return _render_terms(self.terms) if self.terms else "0"


def _render_terms(terms) -> str:
    out = ""
    for d, c in reversed(terms):
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif d == 1:
            body = "x" if mag == 1 else f"{mag}*x"
        else:
            body = f"x^{d}" if mag == 1 else f"{mag}*x^{d}"
        if not out:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out


def diff_split(m: SignedPoly) -> tuple[PosPoly, PosPoly]:
    """Split into positive part minus negated-negative part, supports disjoint."""
    pos = {d: c for d, c in m.terms if c > 0}
    neg = {d: -c for d, c in m.terms if c < 0}
    if not pos or not neg:
        raise NoSignChange("the polynomial has coefficients of a single sign")
    return PosPoly.of(pos), PosPoly.of(neg)


@dataclass(frozen=True, slots=True)
class AlgebraicGenerator:
    """A validated extension generator: minimal polynomial plus isolating interval.

    Use `validate_generator` to construct one; the constructor itself only
    stores the data.
    """

    m: SignedPoly
    lo: Fraction
    hi: Fraction
    n: int

    def zero(self) -> "ExtElem":
        return ExtElem(self, (Fraction(0),) * self.n)

    def one(self) -> "ExtElem":
        return self.element([1])

    def xbar(self) -> "ExtElem":
        """The class of x, the adjoined root itself."""
        return self.element([0, 1])

    def element(self, coeffs) -> "ExtElem":
        cs = [as_fraction(c) for c in coeffs]
        if len(cs) > self.n:
            raise ValueError("coefficient vector longer than the basis")
        cs += [Fraction(0)] * (self.n - len(cs))
        return ExtElem(self, tuple(cs))

    def from_poly(self, coeffs) -> "ExtElem":
        """Reduce an arbitrary polynomial in the root modulo the minimal polynomial."""
        r = polys.rem(polys.poly(coeffs), self.m.to_coeffs())
        return self.element(list(r))

    def refine(self, max_width) -> tuple[Fraction, Fraction]:
        """A sub-interval of the isolating interval no wider than max_width."""
        return polys.bisect_root(self.m.to_coeffs(), self.lo, self.hi, max_width)


def validate_generator(m: SignedPoly, interval) -> AlgebraicGenerator:
    """Check a candidate minimal polynomial and isolating interval.

    Requirements: monic of degree >= 2 (degree one means the root is already a
    positive rational and the extension is trivial), at least one negative
    coefficient (otherwise no positive root exists and a root would force a
    field), irreducible over Q, with exactly one real root inside the given
    positive interval.
    """
    if not m.is_monic or m.degree < 1:
        raise ValueError("the minimal polynomial must be monic of degree >= 1")
    if all(c > 0 for _, c in m.terms):
        raise AllPositiveCoefficients(
            "a positive-coefficient polynomial cannot vanish at a positive root"
        )
    if m.degree == 1:
        raise TrivialExtension("a degree-one generator already lies in the base semifield")
    dense = m.to_coeffs()
    if not polys.is_irreducible(dense):
        raise Reducible(f"{m} factors over the rationals")
    if polys.count_positive_roots(dense) == 0:
        raise NoPositiveRoot(f"{m} has no positive real root")
    lo, hi = (as_fraction(interval[0]), as_fraction(interval[1]))
    if not (0 < lo < hi):
        raise IntervalNotIsolating("the interval must satisfy 0 < lo < hi")
    if polys.count_roots(dense, lo, hi) != 1:
        raise IntervalNotIsolating(f"({lo}, {hi}) does not isolate exactly one root of {m}")
    assert polys.eval_poly(dense, lo) * polys.eval_poly(dense, hi) < 0
    return AlgebraicGenerator(m, lo, hi, m.degree)


def ext_dimension(gen: AlgebraicGenerator) -> int:
    """Dimension of the extension over the base: the degree of the minimal polynomial."""
    return gen.n


@dataclass(frozen=True, slots=True)
class ExtElem:
    """An element of the extension, as coefficients on 1, X, ..., X^(n-1)."""

    gen: AlgebraicGenerator
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.gen.n:
            raise ValueError("coefficient vector length must equal the extension degree")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def in_cone(self) -> bool:
        """All coefficients non-negative and not all zero."""
        return all(c >= 0 for c in self.coeffs) and not self.is_zero

    def _check(self, other: "ExtElem"):
        if self.gen != other.gen:
            raise GeneratorMismatch("elements belong to different extensions")

    def __add__(self, other: "ExtElem") -> "ExtElem":
        self._check(other)
        return ExtElem(self.gen, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "ExtElem") -> "ExtElem":
        self._check(other)
        prod = polys.mul(polys.poly(self.coeffs), polys.poly(other.coeffs))
        return self.gen.from_poly(prod)

    def scale(self, c) -> "ExtElem":
        c = as_fraction(c)
        return ExtElem(self.gen, tuple(c * x for x in self.coeffs))

    def __pow__(self, k: int) -> "ExtElem":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.gen.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "ExtElem":
        if self.is_zero:
            raise ZeroElement("zero has no inverse")
        g, s, _ = polys.xgcd_poly(polys.poly(self.coeffs), self.gen.m.to_coeffs())
        assert polys.degree(g) == 0
        return self.gen.from_poly(polys.scale(s, 1 / g[0]))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("X" if c == 1 else f"{c}*X")
            else:
                parts.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
        return " + ".join(parts) if parts else "0"


def ext_add(e1: ExtElem, e2: ExtElem) -> ExtElem:
    """Coefficient-wise addition (same generator required)."""
    return e1 + e2


def ext_mul(e1: ExtElem, e2: ExtElem) -> ExtElem:
    """Product reduced modulo the minimal polynomial."""
    return e1 * e2


def ext_inverse(e: ExtElem) -> ExtElem:
    """Multiplicative inverse via the extended Euclidean algorithm."""
    return e.inverse()


def enclosure(e: ExtElem, lo, hi) -> tuple[Fraction, Fraction]:
    """Rational bounds on the real value of e over a root enclosure [lo, hi]."""
    return polys.interval_eval(polys.poly(e.coeffs), lo, hi)


def positive_at_root(e: ExtElem, start_width=Fraction(1, 2**10)) -> bool:
    """Exact sign of the represented real number (False for zero).

    Refines the root enclosure until the interval evaluation has a definite
    sign; terminates because a nonzero element has nonzero value (the basis
    powers of the root are linearly independent over Q).
    """
    if e.is_zero:
        return False
    width = as_fraction(start_width)
    while True:
        lo, hi = e.gen.refine(width)
        lo_v, hi_v = enclosure(e, lo, hi)
        if lo_v > 0:
            return True
        if hi_v < 0:
            return False
        width /= 2**8


def cone_report(e: ExtElem) -> dict:
    """Both positivity views: the coefficient cone and the sign at the root.

    The coefficient test is sufficient for membership in the positive span of
    the basis; the sign test is necessary for membership in the semifield.
    They can disagree for non-binomial minimal polynomials, and this report
    presents both rather than deciding.
    """
    return {"coefficient_cone": e.in_cone, "positive_at_root": positive_at_root(e)}


def kernel_contains(a: PosPoly, b: PosPoly, gen: AlgebraicGenerator) -> bool:
    """Whether a/b is congruent to 1: the minimal polynomial divides a - b."""
    d = polys.sub(a.to_coeffs(), b.to_coeffs())
    return not polys.rem(d, gen.m.to_coeffs())


@dataclass(frozen=True, eq=False, slots=True)
class PosRationalFunction:
    """A quotient of positive polynomials; equality by cross-multiplication."""

    num: PosPoly
    den: PosPoly

    def __eq__(self, other) -> bool:
        if not isinstance(other, PosRationalFunction):
            return NotImplemented
        return (self.num * other.den).terms == (other.num * self.den).terms

    def __add__(self, other: "PosRationalFunction") -> "PosRationalFunction":
        return PosRationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "PosRationalFunction") -> "PosRationalFunction":
        return PosRationalFunction(self.num * other.num, self.den * other.den)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def ratfunc_eq(r1: PosRationalFunction, r2: PosRationalFunction) -> bool:
    """Equality of rational functions by cross-multiplication."""
    return r1 == r2


def kernel_sample(gen: AlgebraicGenerator, g1: PosPoly, g2: PosPoly | None = None,
                  h: PosPoly | None = None) -> PosRationalFunction:
    """A kernel element built from the sign split of the minimal polynomial.

    With m = m_plus - m_minus, the quotient

        (m_plus*g1 + m_minus*g2 + h*(g1+g2)) / (m_plus*g2 + m_minus*g1 + h*(g1+g2))

    is always congruent to 1; omitted g2 or h drop the corresponding terms
    (the positive polynomials have no zero, so omission is the degenerate case).
    """
    m_plus, m_minus = diff_split(gen.m)
    num_terms = [m_plus * g1]
    den_terms = [m_minus * g1]
    if g2 is not None:
        num_terms.append(m_minus * g2)
        den_terms.append(m_plus * g2)
    if h is not None:
        both = (g1 + g2) if g2 is not None else g1
        num_terms.append(h * both)
        den_terms.append(h * both)
    num = num_terms[0]
    for t in num_terms[1:]:
        num = num + t
    den = den_terms[0]
    for t in den_terms[1:]:
        den = den + t
    return PosRationalFunction(num, den)
