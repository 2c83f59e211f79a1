"""Seeded random generators shared across the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from belyi import GeneratingSystem, Permutation, Poly, is_transitive, make_gensys


def random_permutation(rng: random.Random, d: int) -> Permutation:
    imgs = list(range(1, d + 1))
    rng.shuffle(imgs)
    return Permutation(imgs)


def random_poly(rng: random.Random, max_degree: int = 6, span: int = 9) -> Poly:
    deg = rng.randint(0, max_degree)
    coeffs = [
        Fraction(rng.randint(-span, span), rng.randint(1, 4))
        for _ in range(deg + 1)
    ]
    return Poly(coeffs)


def random_gensys(rng: random.Random, dmin: int = 3, dmax: int = 10) -> GeneratingSystem:
    """A uniformly scrambled transitive pair, completed with sigmaInf."""
    while True:
        d = rng.randint(dmin, dmax)
        s0 = random_permutation(rng, d)
        s1 = random_permutation(rng, d)
        if is_transitive([s0, s1]):
            return make_gensys(s0, s1)


def random_single_cycle_pair(
    rng: random.Random, dmin: int = 3, dmax: int = 12
) -> GeneratingSystem:
    """sigma0 and sigma1 each one scattered cycle, jointly transitive.

    The supports are random subsets in random cyclic order, so the result
    ranges over all genera, not just the planar representatives.
    """
    while True:
        d = rng.randint(dmin, dmax)
        e0 = rng.randint(2, d)
        e1 = rng.randint(max(2, d + 1 - e0), d)
        s0 = Permutation.from_cycles(d, [rng.sample(range(1, d + 1), e0)])
        s1 = Permutation.from_cycles(d, [rng.sample(range(1, d + 1), e1)])
        if is_transitive([s0, s1]):
            return make_gensys(s0, s1)
