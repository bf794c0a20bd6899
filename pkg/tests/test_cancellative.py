import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import positive_rationals
from layext.cancellative import (
    AlgebraicGenerator,
    ExtElem,
    PosPoly,
    PosRationalFunction,
    SignedPoly,
    cone_report,
    diff_split,
    enclosure,
    ext_add,
    ext_dimension,
    ext_inverse,
    ext_mul,
    kernel_contains,
    kernel_sample,
    positive_at_root,
    ratfunc_eq,
    validate_generator,
)
from layext.errors import (
    AllPositiveCoefficients,
    GeneratorMismatch,
    IntervalNotIsolating,
    NoPositiveRoot,
    NoSignChange,
    Reducible,
    TrivialExtension,
    ZeroElement,
)

SQRT2 = validate_generator(SignedPoly.of({2: 1, 0: -2}), (1, 2))
CBRT2 = validate_generator(SignedPoly.of({3: 1, 0: -2}), (1, 2))
GOLDEN = validate_generator(SignedPoly.of({2: 1, 1: -1, 0: -1}), (1, 2))
MODULI = [SQRT2, CBRT2, GOLDEN]


def pos_polys(max_deg=4):
    return st.dictionaries(
        st.integers(0, max_deg), positive_rationals(max_num=9, max_den=4), min_size=1, max_size=4
    ).map(PosPoly.of)


def ext_elems(gen):
    return st.lists(
        st.builds(F, st.integers(-9, 9), st.integers(1, 4)),
        min_size=gen.n,
        max_size=gen.n,
    ).map(lambda cs: ExtElem(gen, tuple(cs)))


class TestDiffSplit:
    def test_square_minus_two(self):
        plus, minus = diff_split(SQRT2.m)
        assert (str(plus), str(minus)) == ("x^2", "2")

    def test_cubic(self):
        plus, minus = diff_split(SignedPoly.of({3: 1, 1: -3, 0: 1}))
        assert (str(plus), str(minus)) == ("x^3 + 1", "3*x")

    def test_single_sign_rejected(self):
        with pytest.raises(NoSignChange):
            diff_split(SignedPoly.of({2: 1, 0: 1}))

    @given(
        st.dictionaries(st.integers(0, 5), st.builds(F, st.integers(-9, 9).filter(bool), st.integers(1, 4)), min_size=2, max_size=5)
    )
    def test_round_trip(self, terms):
        m = SignedPoly.of(terms)
        signs = {c > 0 for _, c in m.terms}
        if len(signs) < 2:
            with pytest.raises(NoSignChange):
                diff_split(m)
            return
        plus, minus = diff_split(m)
        assert SignedPoly.diff(plus, minus) == m
        assert not ({d for d, _ in plus.terms} & {d for d, _ in minus.terms})


class TestValidateGenerator:
    def test_sqrt2_valid(self):
        assert SQRT2.n == 2
        assert ext_dimension(SQRT2) == 2
        assert ext_dimension(CBRT2) == 3

    def test_reducible(self):
        with pytest.raises(Reducible):
            validate_generator(SignedPoly.of({2: 1, 1: -3, 0: 2}), (1, 2))

    def test_no_positive_root(self):
        with pytest.raises(AllPositiveCoefficients):
            validate_generator(SignedPoly.of({2: 1, 0: 1}), (1, 2))
        with pytest.raises(NoPositiveRoot):
            validate_generator(SignedPoly.of({2: 1, 1: -1, 0: 1}), (1, 2))

    def test_interval_not_isolating(self):
        with pytest.raises(IntervalNotIsolating):
            validate_generator(SignedPoly.of({2: 1, 0: -2}), (2, 3))
        with pytest.raises(IntervalNotIsolating):
            validate_generator(SignedPoly.of({2: 1, 0: -2}), (-1, 2))

    def test_degree_one_rejected(self):
        with pytest.raises(TrivialExtension):
            validate_generator(SignedPoly.of({1: 1, 0: -2}), (1, 3))

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            validate_generator(SignedPoly.of({2: 2, 0: -2}), (1, 2))


class TestArithmetic:
    def test_one_plus_root_squared(self):
        e = SQRT2.one() + SQRT2.xbar()
        assert (e * e).coeffs == (F(3), F(2))

    def test_root_squared(self):
        assert (SQRT2.xbar() * SQRT2.xbar()).coeffs == (F(2), F(0))

    def test_identity(self):
        e = SQRT2.element([F(1, 3), F(-5, 7)])
        assert ext_mul(e, SQRT2.one()) == e
        assert ext_add(e, SQRT2.zero()) == e

    def test_componentwise_addition(self):
        got = ext_add(SQRT2.element([1, 1]), SQRT2.element([2, 1]))
        assert got.coeffs == (F(3), F(2))
        assert got.in_cone

    def test_inverse_of_one(self):
        assert ext_inverse(SQRT2.one()) == SQRT2.one()

    def test_inverse_of_root(self):
        assert ext_inverse(SQRT2.xbar()).coeffs == (F(0), F(1, 2))

    def test_inverse_of_one_plus_root(self):
        inv = ext_inverse(SQRT2.one() + SQRT2.xbar())
        assert inv.coeffs == (F(-1), F(1))

    def test_zero_not_invertible(self):
        with pytest.raises(ZeroElement):
            ext_inverse(SQRT2.zero())

    def test_generator_mismatch(self):
        with pytest.raises(GeneratorMismatch):
            ext_add(SQRT2.one(), CBRT2.one())

    @given(st.sampled_from(MODULI), st.data())
    def test_field_laws(self, gen, data):
        a = data.draw(ext_elems(gen))
        b = data.draw(ext_elems(gen))
        c = data.draw(ext_elems(gen))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero:
            assert a * a.inverse() == gen.one()

    @given(st.sampled_from(MODULI), st.data())
    def test_addition_is_cancellative(self, gen, data):
        a = data.draw(ext_elems(gen))
        b = data.draw(ext_elems(gen))
        c = data.draw(ext_elems(gen))
        if a + c == b + c:
            assert a == b


class TestCone:
    def test_cone_closure_for_binomial_moduli(self):
        rng = random.Random(5)
        for gen in (SQRT2, CBRT2):
            for _ in range(50):
                a = gen.element([F(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(gen.n)])
                b = gen.element([F(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(gen.n)])
                if not (a.in_cone and b.in_cone):
                    continue
                assert (a + b).in_cone
                assert (a * b).in_cone

    def test_report_disagreement_for_non_binomial(self):
        # -1 + X at the golden ratio is positive but outside the coefficient cone
        e = GOLDEN.element([-1, 1])
        report = cone_report(e)
        assert report == {"coefficient_cone": False, "positive_at_root": True}

    def test_report_agreement_in_cone(self):
        e = GOLDEN.element([1, 2])
        assert cone_report(e) == {"coefficient_cone": True, "positive_at_root": True}

    def test_negative_element(self):
        e = SQRT2.element([-3, 0])
        assert cone_report(e) == {"coefficient_cone": False, "positive_at_root": False}
        assert positive_at_root(SQRT2.zero()) is False


class TestNumericConsistency:
    @given(st.sampled_from(MODULI), st.data())
    def test_enclosures_overlap_under_arithmetic(self, gen, data):
        # the reduced product/sum and the interval arithmetic on the factors
        # both enclose the same real number, so the intervals must intersect
        a = data.draw(ext_elems(gen))
        b = data.draw(ext_elems(gen))
        lo, hi = gen.refine(F(1, 2**24))
        pa, pb = enclosure(a, lo, hi), enclosure(b, lo, hi)
        prod = enclosure(a * b, lo, hi)
        cands = [pa[0] * pb[0], pa[0] * pb[1], pa[1] * pb[0], pa[1] * pb[1]]
        assert prod[0] <= max(cands) and min(cands) <= prod[1]
        tot = enclosure(a + b, lo, hi)
        assert tot[0] <= pa[1] + pb[1] and pa[0] + pb[0] <= tot[1]


class TestKernel:
    def test_contains_examples(self):
        assert kernel_contains(PosPoly.x(2), PosPoly.constant(2), SQRT2)
        assert not kernel_contains(PosPoly.x(), PosPoly.constant(1), SQRT2)
        p = PosPoly.of({3: 2, 1: 5})
        assert kernel_contains(p, p, SQRT2)

    def test_sample_unit(self):
        one = PosPoly.constant(1)
        s = kernel_sample(SQRT2, one, one)
        assert ratfunc_eq(s, PosRationalFunction(one, one))
        assert str(s.num) == "x^2 + 2"

    def test_sample_defaults(self):
        s = kernel_sample(SQRT2, PosPoly.constant(1))
        assert (str(s.num), str(s.den)) == ("x^2", "2")
        assert kernel_contains(s.num, s.den, SQRT2)

    def test_sample_full(self):
        s = kernel_sample(SQRT2, PosPoly.x(), PosPoly.constant(1), PosPoly.constant(1))
        assert kernel_contains(s.num, s.den, SQRT2)

    @given(st.sampled_from(MODULI), pos_polys(), st.one_of(st.none(), pos_polys()), st.one_of(st.none(), pos_polys()))
    def test_samples_are_kernel_members(self, gen, g1, g2, h):
        s = kernel_sample(gen, g1, g2, h)
        assert kernel_contains(s.num, s.den, gen)

    @given(st.sampled_from(MODULI), pos_polys(max_deg=6), pos_polys(max_deg=6))
    def test_membership_matches_naive_division(self, gen, a, b):
        # independent oracle: schoolbook synthetic remainder of a - b by m
        m = list(gen.m.to_coeffs())
        diff = [F(0)] * (max(a.degree, b.degree) + 1)
        for d, c in a.terms:
            diff[d] += c
        for d, c in b.terms:
            diff[d] -= c
        while len(diff) >= len(m):
            lead = diff.pop()
            if lead:
                k = len(diff) - (len(m) - 1)
                for i, c in enumerate(m[:-1]):
                    diff[k + i] -= lead * c
        oracle = all(c == 0 for c in diff)
        assert kernel_contains(a, b, gen) == oracle


class TestRatFunc:
    def test_eq_examples(self):
        x = PosPoly.x()
        one = PosPoly.constant(1)
        assert ratfunc_eq(PosRationalFunction(x, one), PosRationalFunction(x * x, x))
        assert not ratfunc_eq(PosRationalFunction(x + one, one), PosRationalFunction(x, one))
        r = PosRationalFunction(x + one, x)
        assert ratfunc_eq(r, r)

    @given(pos_polys(), pos_polys(), pos_polys())
    def test_scaling_invariance(self, a, b, c):
        assert PosRationalFunction(a, b) == PosRationalFunction(a * c, b * c)

    @given(pos_polys(), pos_polys())
    def test_arithmetic(self, a, b):
        one = PosPoly.constant(1)
        ra = PosRationalFunction(a, one)
        rb = PosRationalFunction(b, one)
        assert ra + rb == PosRationalFunction(a + b, one)
        assert ra * rb == PosRationalFunction(a * b, one)


class TestPosPoly:
    def test_zero_not_representable(self):
        with pytest.raises(ValueError):
            PosPoly.of({})
        with pytest.raises(ValueError):
            PosPoly.of({1: 0})
        with pytest.raises(ValueError):
            PosPoly.of({1: -1})

    @given(pos_polys(), pos_polys(), pos_polys())
    def test_cancellative_addition(self, a, b, c):
        assert (a + c == b + c) == (a == b)

    @given(pos_polys(), pos_polys())
    def test_semiring_laws(self, a, b):
        assert a + b == b + a
        assert a * b == b * a
