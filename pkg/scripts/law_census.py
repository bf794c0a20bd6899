#!/usr/bin/env python3
"""Randomized census of the layered arithmetic laws and evaluation identities.

Samples random layered elements and polynomials, checks the semiring laws and
the value-of-evaluation identity exactly, and reports counts plus timing.

Run: python scripts/law_census.py [--trials N] [--seed S]
"""

import argparse
import random
import time
from fractions import Fraction as F

from layext import ExtScalar, LayeredElem, LayeredPoly, ZERO, eval_layered_poly


def rand_fraction(rng, signed=True):
    num = rng.randint(-20, 20) if signed else rng.randint(1, 20)
    return F(num, rng.randint(1, 8))


def rand_elem(rng):
    if rng.random() < 0.1:
        return ZERO
    return LayeredElem(rand_fraction(rng, signed=False), rand_fraction(rng))


def rand_poly(rng, max_deg=6):
    exps = rng.sample(range(max_deg + 1), rng.randint(1, max_deg + 1))
    return LayeredPoly.of(
        (e, LayeredElem(rand_fraction(rng, signed=False), rand_fraction(rng))) for e in exps
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    checks = 0
    start = time.monotonic()
    for _ in range(args.trials):
        x, y, z = rand_elem(rng), rand_elem(rng), rand_elem(rng)
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        checks += 5
        if not x.is_zero and not y.is_zero and x.value != y.value:
            assert x + y in (x, y)
            checks += 1
    law_time = time.monotonic() - start

    evals = max(args.trials // 10, 1)
    start = time.monotonic()
    for _ in range(evals):
        f = rand_poly(rng)
        a = ExtScalar(rand_fraction(rng, signed=False), rand_fraction(rng))
        _, v1 = eval_layered_poly(f, a)
        _, v2 = eval_layered_poly(f, ExtScalar(F(1), a.value))
        assert v1 == v2
        checks += 1
    eval_time = time.monotonic() - start

    print(f"trials:            {args.trials}")
    print(f"law checks passed: {checks}")
    print(f"law time:          {law_time:.3f}s")
    print(f"eval identities:   {evals} in {eval_time:.3f}s")


if __name__ == "__main__":
    main()
