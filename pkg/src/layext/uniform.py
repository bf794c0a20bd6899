"""Uniform layered extensions: polynomial evaluation, pure extensions, closures.

A uniform layered domain is described by two independent parts: a sort part
(the semifield the layers live in: positive rationals, possibly extended by
one algebraic or one free generator) and a value part (a bipotent extension
presentation over the base value lattice).  Evaluating a polynomial with
layered coefficients at a layered scalar splits the same way: the value is
the maximum of the term values, and the layer is the sum of the layers of the
value-maximal (essential) terms, a polynomial expression in the scalar's
layer.

Extending by a scalar whose value stays in the base extends only the sort
part (pure-layer); extending by a scalar whose layer stays in the base
extends only the value part (pure-value); an arbitrary scalar extends both at
once, yielding the smallest uniform layered domain containing it, and the two
single-part extensions commute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipotent import (
    BipotentPresentation,
    Numeric,
    Symbolic,
    is_bipotent_semifield,
)
from .cancellative import AlgebraicGenerator, ExtElem, PosPoly, positive_at_root
from .errors import DescriptorMismatch, LayerNotInBase, ValueNotInBase
from .tropical import LayeredElem, ValueLattice, as_fraction


@dataclass(frozen=True, slots=True)
class FreeLayer:
    """A layer in a free (transcendental) sort extension: a positive polynomial
    in the named symbol."""

    name: str
    poly: PosPoly

    def __str__(self) -> str:
        return str(self.poly).replace("x", self.name)


# A sort-part element: a positive rational, an algebraic extension element,
# or a positive polynomial in a free symbol.
SortElement = "Fraction | ExtElem | FreeLayer"


@dataclass(frozen=True, slots=True)
class BaseSort:
    """The unextended sort semifield: the positive rationals."""


@dataclass(frozen=True, slots=True)
class AlgebraicSort:
    """Sort semifield extended by one validated algebraic generator."""

    gen: AlgebraicGenerator


@dataclass(frozen=True, slots=True)
class FreeSort:
    """Sort semifield extended by one free generator.

    `with_fractions` distinguishes the fraction semifield (a semifield) from
    the plain polynomial extension (not a semifield: the generator has no
    inverse among polynomials).
    """

    name: str
    with_fractions: bool = True


SortPart = "BaseSort | AlgebraicSort | FreeSort"


@dataclass(frozen=True, slots=True)
class UniformDescriptor:
    """A uniform layered domain: sort part and value part, independently queryable."""

    sort_part: object
    value_part: BipotentPresentation

    def __str__(self) -> str:
        return f"{_render_sort(self.sort_part)} (x) {_render_value(self.value_part)}"


def _render_sort(part) -> str:
    if isinstance(part, BaseSort):
        return "Q>0"
    if isinstance(part, AlgebraicSort):
        return f"Q>0[root of {part.gen.m}]"
    return f"Q>0[{part.name}]" + ("" if part.with_fractions else " (no fractions)")


def _render_value(P: BipotentPresentation) -> str:
    base = str(P.base.single_generator())
    gens = ", ".join(
        str(g.value) if isinstance(g, Numeric) else g.name for g in P.generators
    )
    return f"<{base}>[{gens}]" if gens else f"<{base}>"


@dataclass(frozen=True, slots=True)
class ExtScalar:
    """A layered scalar: a sort-part layer and a value.

    The value is a rational, or a name standing for a symbolic value outside
    the rationals (transcendental over the base value group).
    """

    layer: object
    value: object

    def __post_init__(self):
        v = self.value
        if not isinstance(v, (Fraction, str)):
            raise TypeError("scalar value must be a Fraction or a symbolic name")
        lay = self.layer
        if isinstance(lay, Fraction):
            if lay <= 0:
                raise ValueError("scalar layer must be positive")
        elif isinstance(lay, ExtElem):
            if not positive_at_root(lay):
                raise ValueError("algebraic scalar layer must be a positive element")
        elif not isinstance(lay, FreeLayer):
            raise TypeError("scalar layer must be rational, algebraic or free")

    @classmethod
    def of(cls, layer, value) -> "ExtScalar":
        if isinstance(layer, (int, str, Fraction)):
            layer = as_fraction(layer)
        if not isinstance(value, str):
            value = as_fraction(value)
        return cls(layer, value)

    @property
    def has_rational_value(self) -> bool:
        return isinstance(self.value, Fraction)


@dataclass(frozen=True, slots=True)
class LayeredPoly:
    """A polynomial with nonzero layered coefficients, sparse in the exponent."""

    terms: tuple  # ((exp, LayeredElem), ...) sorted by exponent

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a layered polynomial has at least one term")
        exps = [e for e, _ in self.terms]
        if len(set(exps)) != len(exps) or any(e < 0 for e in exps):
            raise ValueError("exponents must be distinct naturals")
        for _, c in self.terms:
            if c.is_zero:
                raise ValueError("zero coefficients are not stored")

    @classmethod
    def of(cls, pairs) -> "LayeredPoly":
        items = sorted(((int(e), c) for e, c in pairs), key=lambda t: t[0])
        return cls(tuple(items))

    @classmethod
    def from_triples(cls, triples) -> "LayeredPoly":
        """Build from (layer, value, exp) triples."""
        return cls.of((e, LayeredElem.make(l, v)) for l, v, e in triples)


def _rational_value(a: ExtScalar) -> Fraction:
    if not a.has_rational_value:
        raise DescriptorMismatch("evaluation needs a rational scalar value")
    return a.value


def essential_indices(f: LayeredPoly, a: ExtScalar) -> tuple[int, ...]:
    """Exponents of the value-dominant terms of f at the scalar."""
    nu = _rational_value(a)
    term_values = [(e, c.value + e * nu) for e, c in f.terms]
    best = max(v for _, v in term_values)
    return tuple(e for e, v in term_values if v == best)


def _layer_pow(layer, k: int):
    if isinstance(layer, Fraction):
        return layer**k
    if isinstance(layer, ExtElem):
        return layer**k
    return FreeLayer(layer.name, layer.poly**k)


def _layer_scale(c: Fraction, layer):
    if isinstance(layer, Fraction):
        return c * layer
    if isinstance(layer, ExtElem):
        return layer.scale(c)
    return FreeLayer(layer.name, layer.poly.scale(c))


def _layer_add(x, y):
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x + y
    if isinstance(x, ExtElem) and isinstance(y, ExtElem):
        return x + y
    if isinstance(x, ExtElem) and isinstance(y, Fraction):
        return x + x.gen.element([y])
    if isinstance(x, Fraction) and isinstance(y, ExtElem):
        return y + y.gen.element([x])
    if isinstance(x, FreeLayer) and isinstance(y, FreeLayer) and x.name == y.name:
        return FreeLayer(x.name, x.poly + y.poly)
    if isinstance(x, FreeLayer) and isinstance(y, Fraction):
        return FreeLayer(x.name, x.poly + PosPoly.constant(y))
    if isinstance(x, Fraction) and isinstance(y, FreeLayer):
        return _layer_add(y, x)
    raise DescriptorMismatch("incompatible layer kinds")


def eval_layered_poly(f: LayeredPoly, a: ExtScalar):
    """Evaluate f at the scalar; returns (layer, value).

    The value is the maximum term value; the layer is the sum over the
    essential exponents of coefficient-layer times scalar-layer power, an
    element of the sort part extended by the scalar's layer.
    """
    nu = _rational_value(a)
    ess = set(essential_indices(f, a))
    value = max(c.value + e * nu for e, c in f.terms)
    layer = None
    for e, c in f.terms:
        if e not in ess:
            continue
        term = _layer_scale(c.layer, _layer_pow(a.layer, e))
        layer = term if layer is None else _layer_add(layer, term)
    return layer, value


def essential_layer_poly(f: LayeredPoly, a: ExtScalar) -> dict:
    """The layer polynomial determined by the essential terms: exponent -> layer."""
    return {e: c.layer for e, c in f.terms if e in set(essential_indices(f, a))}


def _constant_layer(layer) -> Fraction | None:
    """The rational a degenerate extension layer stands for, if any."""
    if isinstance(layer, Fraction):
        return layer
    if isinstance(layer, ExtElem) and all(c == 0 for c in layer.coeffs[1:]):
        return layer.coeffs[0]
    if isinstance(layer, FreeLayer) and layer.poly.degree == 0:
        return layer.poly.coeff(0)
    return None


def sort_contains(part, layer) -> bool:
    """Whether a layer already lies in the sort part."""
    if _constant_layer(layer) is not None:
        return True
    if isinstance(layer, ExtElem):
        return isinstance(part, AlgebraicSort) and part.gen == layer.gen
    if isinstance(layer, FreeLayer):
        return isinstance(part, FreeSort) and part.name == layer.name
    raise TypeError(f"not a layer: {layer!r}")


def extend_sort(part, layer):
    """The sort part extended by one layer; unchanged if already contained."""
    if sort_contains(part, layer):
        return part
    if not isinstance(part, BaseSort):
        raise DescriptorMismatch(
            "only one sort extension step is supported; the layer is outside it"
        )
    if isinstance(layer, ExtElem):
        return AlgebraicSort(layer.gen)
    return FreeSort(layer.name)


def value_group_contains(P: BipotentPresentation, value) -> bool:
    """Whether a value lies in the value group generated by the presentation.

    For rationals this is membership in the subgroup spanned by the base
    lattice together with the numeric generator values; a symbolic value is
    contained exactly when a symbolic generator of the same name is present
    (declared relations that would identify symbolic values with rationals
    are not chased here).
    """
    if isinstance(value, str):
        return any(isinstance(g, Symbolic) and g.name == value for g in P.generators)
    numeric = [g.value for g in P.generators if isinstance(g, Numeric)]
    return P.base.join(*numeric).contains(value)


def extend_value(P: BipotentPresentation, value) -> BipotentPresentation:
    """The value part extended by one value; unchanged if already contained."""
    if value_group_contains(P, value):
        return P
    gen = Symbolic(value) if isinstance(value, str) else Numeric(as_fraction(value))
    return P.with_generator(gen)


def pure_layer_ext(H: UniformDescriptor, a: ExtScalar) -> UniformDescriptor:
    """Extend the sort part by the scalar's layer; the value must already be in the base."""
    if not value_group_contains(H.value_part, a.value):
        raise ValueNotInBase(f"scalar value {a.value} is outside the base value group")
    return UniformDescriptor(extend_sort(H.sort_part, a.layer), H.value_part)


def pure_value_ext(H: UniformDescriptor, a: ExtScalar) -> UniformDescriptor:
    """Extend the value part by the scalar's value; the layer must already be in the base."""
    if not sort_contains(H.sort_part, a.layer):
        raise LayerNotInBase(f"scalar layer {a.layer} is outside the base sort part")
    return UniformDescriptor(H.sort_part, extend_value(H.value_part, a.value))


def uniform_closure(H: UniformDescriptor, a: ExtScalar) -> UniformDescriptor:
    """The smallest uniform layered domain containing H and the scalar.

    Extends the sort part by the layer and the value part by the value; the
    two single-part extensions commute and the result is idempotent.
    """
    return UniformDescriptor(
        extend_sort(H.sort_part, a.layer),
        extend_value(H.value_part, a.value),
    )


def layer_fibre_sample(elems, alpha) -> set:
    """The layers of the sampled elements whose value equals alpha."""
    alpha = alpha if isinstance(alpha, str) else as_fraction(alpha)
    return {e.layer for e in elems if e.value == alpha}


def _orbit_rep(layer):
    """Canonical representative of the positive-rational scaling orbit of a layer."""
    if isinstance(layer, Fraction):
        return Fraction(1)
    if isinstance(layer, ExtElem):
        first = next(c for c in layer.coeffs if c != 0)
        return layer.scale(1 / abs(first))
    first = layer.poly.terms[0][1]
    return FreeLayer(layer.name, layer.poly.scale(1 / first))


def _closed_fibre(H: UniformDescriptor, elems, alpha: Fraction) -> frozenset:
    reps = set()
    for e in elems:
        if not e.has_rational_value:
            continue
        if value_group_contains(H.value_part, alpha - e.value):
            reps.add(_orbit_rep(e.layer))
    return frozenset(reps)


def fibres_coincide(H: UniformDescriptor, elems, alpha, beta) -> bool:
    """Whether the sampled layer fibres at two values agree after closure.

    Each sampled element is closed under multiplication by base units
    (arbitrary positive rational layer, any base value), so it contributes
    its scaling orbit to every fibre reachable by a base translation; the
    two closed fibres are then compared as sets of orbit representatives.
    """
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    return _closed_fibre(H, elems, alpha) == _closed_fibre(H, elems, beta)


@dataclass(frozen=True, slots=True)
class LayersetObstruction:
    """Witness that the layer set of a simple extension is not closed under sums.

    The formal layers at exponents `pair` of the scalar can only sum inside
    the layer set if the corresponding values match, which needs
    (pair[1] - pair[0]) times the scalar value to fall into the base value
    group; `checked_multiples` lists the multiples k verified to stay outside
    (up to the requested bound for a torsion-free certificate).
    """

    pair: tuple
    checked_multiples: tuple


def layerset_obstruction(H: UniformDescriptor, a: ExtScalar, bound: int = 8):
    """A verified obstruction pair when the scalar's value leaves the base group."""
    if value_group_contains(H.value_part, a.value):
        return None
    checked = []
    for k in range(1, max(bound, 1) + 1):
        if a.has_rational_value and value_group_contains(H.value_part, k * a.value):
            break
        checked.append(k)
    return LayersetObstruction((0, 1), tuple(checked))


def is_layerset_semiring(H: UniformDescriptor, a: ExtScalar, bound: int = 8) -> bool:
    """Whether the layer set of the simple extension by the scalar is a semiring.

    Holds exactly when the scalar's value lies in the base value group; when
    it does not, an obstruction witness (two formal layers whose sum needs
    value matching that fails) is constructed and verified up to the bound.
    """
    if value_group_contains(H.value_part, a.value):
        return True
    witness = layerset_obstruction(H, a, bound)
    assert witness is not None and 1 in witness.checked_multiples
    return False


def sort_is_semifield(part) -> bool:
    """Whether the sort part is a semifield on its own.

    The base and any simple algebraic extension of it are; a free extension
    is one only when fractions are included (the generator has no inverse
    among polynomials).
    """
    if isinstance(part, (BaseSort, AlgebraicSort)):
        return True
    return part.with_fractions


def is_uniform_semifield(H: UniformDescriptor) -> bool:
    """Whether the described uniform layered domain is a semifield.

    Needs both parts to be semifields: the value part must be torsion over
    its base (finite quotient group) and the sort part must pass
    `sort_is_semifield`.
    """
    return is_bipotent_semifield(H.value_part) and sort_is_semifield(H.sort_part)


def base_descriptor(base: ValueLattice | None = None) -> UniformDescriptor:
    """The unextended uniform semifield: positive-rational layers over a value lattice."""
    if base is None:
        base = ValueLattice.of(1)
    return UniformDescriptor(BaseSort(), BipotentPresentation(base, ()))
