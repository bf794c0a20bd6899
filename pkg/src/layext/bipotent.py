"""Finitely generated extensions of a bipotent (max-plus) semifield.

A presentation records a base value lattice together with extension
generators.  Numeric generators carry an explicit rational value and their
relations with the base are computed; symbolic generators are free except for
explicitly declared relations.  Because addition is bipotent, every element
of such an extension is a base multiple of a monomial in the generators, so
the whole multiplicative structure is captured by the exponent lattice

    {k in Z^n : k1*a1 + ... + kn*an lies in the base lattice}

(the value model is written additively: a product of generator powers is an
integer combination of their values).  The free/torsion decomposition of the
quotient group Z^n / lattice classifies the extension: free coordinates give
divisibly independent generators, torsion coordinates give generators with a
power in the base.

>>> P = BipotentPresentation.from_values(ValueLattice.of(1), "1/2", "1/3")
>>> dec = decompose_extension(P)
>>> dec.free_rank, dec.torsion_orders
(0, (6,))
>>> extension_rank(P)
6
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import intlinalg as la
from .errors import InconsistentRelations
from .tropical import ValueLattice, as_fraction

INFINITE = math.inf


@dataclass(frozen=True, slots=True)
class Numeric:
    """A generator with an explicit rational value."""

    value: Fraction

    @classmethod
    def of(cls, value) -> "Numeric":
        return cls(as_fraction(value))


@dataclass(frozen=True, slots=True)
class Symbolic:
    """A named free generator; its only relations are the declared ones."""

    name: str


Generator = "Numeric | Symbolic"


@dataclass(frozen=True, slots=True)
class Relation:
    """Asserts that the monomial with these exponents equals a base element."""

    exps: tuple[int, ...]
    beta: Fraction

    @classmethod
    def of(cls, exps, beta) -> "Relation":
        return cls(tuple(int(e) for e in exps), as_fraction(beta))


@dataclass(frozen=True, slots=True)
class BipotentPresentation:
    """A bipotent extension base[a1, ..., an] given by generators and relations.

    `monoid_exponents` distinguishes the polynomial extension (natural
    exponents only) from the fraction semifield (integer exponents); it is
    data used by membership helpers, the lattice itself always lives in Z^n.
    """

    base: ValueLattice
    generators: tuple
    relations: tuple = ()
    monoid_exponents: bool = False

    def __post_init__(self):
        n = len(self.generators)
        for g in self.generators:
            if not isinstance(g, (Numeric, Symbolic)):
                raise TypeError(f"not a generator: {g!r}")
        pure_numeric = all(isinstance(g, Numeric) for g in self.generators)
        if pure_numeric and self.relations:
            raise ValueError("pure numeric presentations compute their relations; do not declare any")
        for rel in self.relations:
            if len(rel.exps) != n:
                raise ValueError("relation exponent vector length does not match the generators")
            if not self.base.contains(rel.beta):
                raise InconsistentRelations(f"relation value {rel.beta} is not in the base lattice")

    @classmethod
    def from_values(cls, base: ValueLattice, *values) -> "BipotentPresentation":
        return cls(base, tuple(Numeric.of(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.generators)

    def numeric_indices(self) -> list[int]:
        return [i for i, g in enumerate(self.generators) if isinstance(g, Numeric)]

    def symbolic_indices(self) -> list[int]:
        return [i for i, g in enumerate(self.generators) if isinstance(g, Symbolic)]

    def value_of(self, exps) -> Fraction | None:
        """The rational value of a monomial, or None if it touches a symbolic generator."""
        total = Fraction(0)
        for e, g in zip(exps, self.generators):
            if e == 0:
                continue
            if isinstance(g, Symbolic):
                return None
            total += e * g.value
        return total

    def permuted(self, perm) -> "BipotentPresentation":
        """The same extension with generators reordered by the permutation."""
        gens = tuple(self.generators[p] for p in perm)
        rels = tuple(Relation(tuple(r.exps[p] for p in perm), r.beta) for r in self.relations)
        return BipotentPresentation(self.base, gens, rels, self.monoid_exponents)

    def with_generator(self, gen) -> "BipotentPresentation":
        rels = tuple(Relation(r.exps + (0,), r.beta) for r in self.relations)
        return BipotentPresentation(self.base, self.generators + (gen,), rels, self.monoid_exponents)


@dataclass(frozen=True, slots=True)
class ExponentLattice:
    """Hermite basis of the monomial-relation lattice, with base values attached.

    `betas[i]` is the base element equal to the monomial with exponents
    `basis[i]`; it is carried through all row operations.
    """

    ngens: int
    basis: tuple
    betas: tuple

    def contains(self, exps) -> bool:
        rem, _ = la.reduce_by_hnf(tuple(exps), self.basis, self.betas)
        return all(x == 0 for x in rem)

    def beta_of(self, exps) -> Fraction:
        """The base value of a lattice vector (raises if not in the lattice)."""
        rem, beta = la.reduce_by_hnf(tuple(exps), self.basis, self.betas)
        if any(x != 0 for x in rem):
            raise ValueError("vector is not in the exponent lattice")
        return beta

    @property
    def rank(self) -> int:
        return len(self.basis)


def _numeric_kernel_rows(P: BipotentPresentation):
    """Relation vectors supported on the numeric coordinates, with their values."""
    num = P.numeric_indices()
    if not num:
        return []
    values = [P.generators[i].value for i in num]
    g = P.base.single_generator()
    if g != 0:
        scaled = [v / g for v in values]
        m = math.lcm(*(s.denominator for s in scaled)) if scaled else 1
        col = [[int(s * m)] for s in scaled] + [[m]]
        ker = la.kernel(col, 1)
        proj = [k[: len(num)] for k in ker]
    else:
        m = math.lcm(*(v.denominator for v in values))
        col = [[int(v * m)] for v in values]
        proj = list(la.kernel(col, 1))
    rows = []
    for k in proj:
        full = [0] * P.n
        for pos, i in enumerate(num):
            full[i] = k[pos]
        if any(full):
            rows.append((tuple(full), sum(k[pos] * values[pos] for pos in range(len(num)))))
    return rows


def exponent_lattice(P: BipotentPresentation) -> ExponentLattice:
    """The lattice of exponent vectors whose monomial lies in the base.

    Numeric generators contribute every relation implied by their values;
    symbolic generators contribute only the declared relations.  Raises
    InconsistentRelations when a declared relation (or a combination of
    declared relations) contradicts the numeric values.
    """
    rows = _numeric_kernel_rows(P)
    rows += [(r.exps, Fraction(r.beta)) for r in P.relations]
    if not rows:
        return ExponentLattice(P.n, (), ())
    vecs = [r[0] for r in rows]
    betas = [r[1] for r in rows]

    # Consistency: echelonize with symbolic columns first so that every
    # numeric-supported lattice vector is a combination of numeric-pivot rows.
    sym = P.symbolic_indices()
    num = P.numeric_indices()
    order = sym + num
    permuted = [tuple(v[i] for i in order) for v in vecs]
    basis_p, betas_p, zero_pay = la.hnf_with_payload(permuted, P.n, betas)
    for z in zero_pay:
        if z != 0:
            raise InconsistentRelations("declared relations combine to 0 = nonzero base element")
    nsym = len(sym)
    for row, beta in zip(basis_p, betas_p):
        if any(row[:nsym]):
            continue
        value = sum(row[nsym + pos] * P.generators[i].value for pos, i in enumerate(num))
        if value != beta:
            raise InconsistentRelations(
                f"declared relations force a numeric monomial to equal {beta}, but its value is {value}"
            )

    basis, out_betas, _ = la.hnf_with_payload(vecs, P.n, betas)
    return ExponentLattice(P.n, basis, out_betas)


@dataclass(frozen=True, slots=True)
class SmithDecomposition:
    """Diagonalization U·R·V = diag(d1, d2, ...) with the divisibility chain."""

    U: tuple
    V: tuple
    diag: tuple
    ncols: int

    @property
    def invariant_factors(self) -> tuple:
        return tuple(d for d in self.diag if d != 0)

    @property
    def free_rank(self) -> int:
        return self.ncols - len(self.invariant_factors)

    @property
    def torsion_invariants(self) -> tuple:
        return tuple(d for d in self.diag if d > 1)


def smith_normal_form(rows, ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form of an integer relation matrix.

    The quotient Z^ncols / rowspan is Z^free_rank plus one cyclic factor per
    torsion invariant.  Output is deterministic: smallest-entry pivoting and
    positive diagonal.
    """
    rows = [tuple(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    u, diag, v = la.smith(rows, ncols)
    return SmithDecomposition(
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in v),
        tuple(diag),
        ncols,
    )


@dataclass(frozen=True, slots=True)
class ExtDecomposition:
    """Free-by-torsion decomposition of a bipotent extension.

    Monomials are exponent vectors over the presentation's generators.  The
    free monomials generate a divisibly independent family; each torsion
    monomial has the matching order as its minimal power landing in the base.
    `generator_coords[j]` expresses generator j as an integer combination of
    (free monomials, torsion monomials) modulo the exponent lattice.
    """

    presentation: BipotentPresentation
    lattice: ExponentLattice
    free_monomials: tuple
    torsion_monomials: tuple
    torsion_orders: tuple
    generator_coords: tuple

    @property
    def free_rank(self) -> int:
        return len(self.free_monomials)

    def rank(self):
        """[extension : base]; finite exactly when there is no free part."""
        if self.free_monomials:
            return INFINITE
        return math.prod(self.torsion_orders) if self.torsion_orders else 1


def decompose_extension(P: BipotentPresentation) -> ExtDecomposition:
    """Split the extension into a divisibly free part and a torsion part.

    Computed from the Smith normal form of the exponent lattice: the columns
    with invariant factor d > 1 give torsion monomials of order d, the columns
    beyond the lattice rank give the free monomials.
    """
    lat = exponent_lattice(P)
    n = P.n
    if lat.rank == 0:
        free = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        coords = tuple((tuple(1 if j == i else 0 for j in range(n)), ()) for i in range(n))
        return ExtDecomposition(P, lat, free, (), (), coords)
    snf = smith_normal_form(lat.basis, n)
    vinv = la.invert_unimodular([list(r) for r in snf.V])
    r = len(snf.diag)
    torsion_idx = [i for i in range(r) if snf.diag[i] > 1]
    free_idx = list(range(r, n))
    torsion = tuple(tuple(vinv[i]) for i in torsion_idx)
    orders = tuple(snf.diag[i] for i in torsion_idx)
    free = tuple(tuple(vinv[i]) for i in free_idx)
    coords = []
    for j in range(n):
        row = snf.V[j]
        coords.append((tuple(row[i] for i in free_idx), tuple(row[i] for i in torsion_idx)))
    return ExtDecomposition(P, lat, free, torsion, orders, tuple(coords))


def _order_in_quotient(rows, ncols: int, vec):
    """Order of the class of `vec` in Z^ncols modulo the row span."""
    if not rows:
        return 1 if all(x == 0 for x in vec) else INFINITE
    _, diag, v = la.smith([list(r) for r in rows], ncols)
    z = la.vec_mat(list(vec), v)
    order = 1
    for j in range(ncols):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            if z[j] != 0:
                return INFINITE
        elif z[j] % d != 0:
            order = math.lcm(order, d // math.gcd(d, z[j] % d))
    return order


def torsion_degree(P: BipotentPresentation, exps):
    """Minimal k >= 1 with k times the monomial landing in the base, else INFINITE."""
    lat = exponent_lattice(P)
    return _order_in_quotient(lat.basis, P.n, tuple(exps))


def torsion_subdomain_contains(P: BipotentPresentation, exps) -> bool:
    """Whether the monomial lies in the sub-domain of torsion elements."""
    return torsion_degree(P, exps) != INFINITE


def is_divisibly_dependent(P: BipotentPresentation, subset) -> bool:
    """Whether the generators indexed by `subset` admit a monomial relation.

    Equivalent to the exponent lattice restricted to those coordinates being
    nontrivial.
    """
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("subset must be non-empty")
    lat = exponent_lattice(P)
    if lat.rank == 0:
        return False
    complement = [j for j in range(P.n) if j not in subset]
    if not complement:
        return lat.rank > 0
    restricted = [[row[j] for j in complement] for row in lat.basis]
    return len(la.kernel(restricted, len(complement))) > 0


@dataclass(frozen=True, slots=True)
class DependenceWitness:
    """k, exponents and base element with k*elem = sum(exponents_i * a_i) + beta."""

    power: int
    exponents: tuple
    beta: Fraction


def divisible_dependence_witness(P: BipotentPresentation, exps, subset=()) -> DependenceWitness | None:
    """Minimal power of a monomial expressible over the subset, with a witness.

    Returns None when no power of the monomial is a base multiple of a
    monomial in the subset generators.  The witness satisfies
    power*exps = sum over subset of exponents*e_i + (lattice vector of value beta).
    """
    subset = sorted(set(subset))
    lat = exponent_lattice(P)
    unit_rows = [tuple(1 if j == i else 0 for j in range(P.n)) for i in subset]
    k = _order_in_quotient(list(lat.basis) + unit_rows, P.n, tuple(exps))
    if k == INFINITE:
        return None
    k = int(k)
    target = [k * e for e in exps]
    rows = unit_rows + list(lat.basis)
    sol = la.solve_left(rows, P.n, target)
    assert sol is not None
    sub_exps = sol[: len(subset)]
    combo = sol[len(subset):]
    beta = sum((c * b for c, b in zip(combo, lat.betas)), Fraction(0))
    value = P.value_of(target)
    if value is not None and all(isinstance(P.generators[i], Numeric) for i in subset):
        check = value - sum(
            (sub_exps[pos] * P.generators[i].value for pos, i in enumerate(subset)), Fraction(0)
        )
        assert check == beta
    return DependenceWitness(k, tuple(sub_exps), beta)


def extension_rank(P: BipotentPresentation, over=()):
    """[extension : sub-extension generated by the subset]; INFINITE if not torsion.

    With an empty subset this is the rank of the whole extension over the base.
    """
    over = sorted(set(over))
    lat = exponent_lattice(P)
    rows = [list(r) for r in lat.basis]
    rows += [[1 if j == i else 0 for j in range(P.n)] for i in over]
    if not rows:
        return 1 if P.n == 0 else INFINITE
    _, diag, _ = la.smith(rows, P.n)
    nonzero = [d for d in diag if d != 0]
    if len(nonzero) < P.n:
        return INFINITE
    return math.prod(nonzero)


def is_bipotent_semifield(P: BipotentPresentation) -> bool:
    """Whether the natural-exponent extension generated by P is a semifield.

    True exactly when every generator class is torsion, i.e. the quotient
    group is finite (free rank zero); integer-exponent fraction extensions
    are semifields unconditionally.
    """
    return extension_rank(P) != INFINITE


def linearly_dependent_pair(P: BipotentPresentation, x_exps, y_exps) -> bool:
    """Whether the two monomials differ by a base factor (equal classes)."""
    lat = exponent_lattice(P)
    diff = tuple(a - b for a, b in zip(x_exps, y_exps))
    return lat.contains(diff)


def monoid_contains(P: BipotentPresentation, exps, bound: int = 20) -> bool:
    """Whether the monomial class is hit by natural exponents up to `bound`.

    Bounded search: looks for m in {0..bound}^n with exps - m in the exponent
    lattice.  Used to probe polynomial (non-fraction) extensions.
    """
    lat = exponent_lattice(P)
    for m in product(range(bound + 1), repeat=P.n):
        if lat.contains(tuple(e - mi for e, mi in zip(exps, m))):
            return True
    return False


def canonical_coset_value(P: BipotentPresentation, exps) -> Fraction | None:
    """Smallest non-negative value in the monomial's base coset, if computable.

    Reduces the exponent vector by the lattice; when the reduction removes all
    symbolic coordinates, the class has a well-defined rational value modulo
    the base, and the representative in [0, base generator) is returned.
    """
    lat = exponent_lattice(P)
    rem, beta = la.reduce_by_hnf(tuple(exps), lat.basis, lat.betas)
    value = P.value_of(rem)
    if value is None:
        return None
    value += beta
    g = P.base.single_generator()
    if g == 0:
        return value
    return value - math.floor(value / g) * g
