"""Exact max-plus arithmetic with layered elements.

Values live in (Q ∪ {Bottom}, max, +): "addition" is maximum, "multiplication"
is ordinary rational addition, and Bottom is the absorbing additive zero
standing in for minus infinity.  A layered element pairs a value with a layer,
a positive rational that records summation multiplicity: adding two elements
with equal values adds their layers, otherwise the larger value wins outright.

>>> x = LayeredElem.make(2, 5)
>>> y = LayeredElem.make(3, 5)
>>> print(x + y)
[5]5
>>> print(x * y)
[6]10

Everything is an immutable value; no floats are accepted anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BottomValue, ZeroHasNoLayer

Rational = "Fraction | int | str"


def as_fraction(x) -> Fraction:
    """Coerce an int, string or Fraction to an exact Fraction; floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class _Bottom:
    """The additive zero of the value model (minus infinity). A singleton."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Bottom"


BOTTOM = _Bottom()

# A tropical value: either BOTTOM or an exact Fraction.
TropValue = "Fraction | _Bottom"


def value_max(x, y):
    """Tropical addition of values: max, with BOTTOM strictly minimal."""
    if x is BOTTOM:
        return y
    if y is BOTTOM:
        return x
    return x if x >= y else y


def value_plus(x, y):
    """Tropical multiplication of values: rational addition, BOTTOM absorbing."""
    if x is BOTTOM or y is BOTTOM:
        return BOTTOM
    return x + y


@dataclass(frozen=True, slots=True)
class LayeredElem:
    """A layered element: Zero, or a pair (layer, value) with layer > 0.

    `layer is None` exactly when the element is the zero of the semiring.
    """

    layer: Fraction | None
    value: Fraction | None

    def __post_init__(self):
        if (self.layer is None) != (self.value is None):
            raise ValueError("layer and value must both be present or both absent")
        if self.layer is not None and self.layer <= 0:
            raise ValueError("layer must be a positive rational")

    @staticmethod
    def make(layer, value) -> "LayeredElem":
        return LayeredElem(as_fraction(layer), as_fraction(value))

    @property
    def is_zero(self) -> bool:
        return self.layer is None

    def __add__(self, other: "LayeredElem") -> "LayeredElem":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.value > other.value:
            return self
        if self.value < other.value:
            return other
        return LayeredElem(self.layer + other.layer, self.value)

    def __mul__(self, other: "LayeredElem") -> "LayeredElem":
        if self.is_zero or other.is_zero:
            return ZERO
        return LayeredElem(self.layer * other.layer, self.value + other.value)

    def __pow__(self, n: int) -> "LayeredElem":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        if n == 0:
            return ONE
        if self.is_zero:
            return ZERO
        return LayeredElem(self.layer**n, n * self.value)

    def __str__(self) -> str:
        if self.is_zero:
            return "Zero"
        return f"[{self.layer}]{self.value}"


ZERO = LayeredElem(None, None)
ONE = LayeredElem(Fraction(1), Fraction(0))


def trop_add(x: LayeredElem, y: LayeredElem) -> LayeredElem:
    """Layered addition: larger value wins, equal values sum their layers."""
    return x + y


def trop_mul(x: LayeredElem, y: LayeredElem) -> LayeredElem:
    """Layered multiplication: layers multiply, values add; Zero absorbs."""
    return x * y


def sort_map(x: LayeredElem) -> Fraction:
    """Project a non-zero element to its layer."""
    if x.is_zero:
        raise ZeroHasNoLayer("the zero element has no layer")
    return x.layer


def ghost_map(x: LayeredElem):
    """Project an element to its value; Zero maps to BOTTOM."""
    return BOTTOM if x.is_zero else x.value


def rebuild(layer, value) -> LayeredElem:
    """Assemble a layered element from a layer and a non-bottom value.

    Inverse of (sort_map, ghost_map) on non-zero elements.
    """
    if value is BOTTOM:
        raise BottomValue("cannot attach a layer to the bottom value")
    return LayeredElem.make(layer, value)


_LAYERED_RE = re.compile(r"^\[(?P<layer>-?\d+(?:/\d+)?)\](?P<value>-?\d+(?:/\d+)?)$")


def parse_layered(text: str) -> LayeredElem:
    """Parse the canonical rendering "[l]v" (or "Zero")."""
    text = text.strip()
    if text == "Zero":
        return ZERO
    m = _LAYERED_RE.match(text)
    if m is None:
        raise ValueError(f"not a layered element: {text!r}")
    return LayeredElem.make(m.group("layer"), m.group("value"))


def _rational_gcd(a: Fraction, b: Fraction) -> Fraction:
    # gcd on Q: the generator of the subgroup a·Z + b·Z.
    return Fraction(
        gcd(a.numerator * b.denominator, b.numerator * a.denominator),
        a.denominator * b.denominator,
    )


@dataclass(frozen=True, slots=True)
class ValueLattice:
    """A finitely generated subgroup of (Q, +), given by rational generators.

    Every such subgroup is cyclic; `single_generator` returns the canonical
    non-negative generator (0 for the trivial subgroup).
    """

    generators: tuple[Fraction, ...]

    def __post_init__(self):
        for g in self.generators:
            if not isinstance(g, Fraction):
                raise TypeError("lattice generators must be Fractions; use ValueLattice.of")

    @classmethod
    def of(cls, *gens) -> "ValueLattice":
        return cls(tuple(as_fraction(g) for g in gens))

    def single_generator(self) -> Fraction:
        g = Fraction(0)
        for x in self.generators:
            g = _rational_gcd(g, abs(x))
        return g

    def contains(self, q) -> bool:
        q = as_fraction(q)
        g = self.single_generator()
        if g == 0:
            return q == 0
        return (q / g).denominator == 1

    __contains__ = contains

    @property
    def is_trivial(self) -> bool:
        return self.single_generator() == 0

    def join(self, *extra) -> "ValueLattice":
        """The subgroup generated by this lattice together with extra rationals."""
        return ValueLattice(self.generators + tuple(as_fraction(x) for x in extra))


def lattice_contains(lattice: ValueLattice, q) -> bool:
    """Decide membership of a rational in the subgroup spanned by the generators."""
    return lattice.contains(q)
