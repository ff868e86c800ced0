"""Shared generators for randomized algebraic property suites."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from hypothesis import strategies as st

from orbhilb import LaurentPoly, OrbifoldType


def random_isolated_type(rng: random.Random, r_max: int = 40) -> OrbifoldType:
    """Random isolated type: all weights coprime to r."""
    r = rng.randint(2, r_max)
    n = rng.randint(1, 4)
    units = [a for a in range(1, r) if gcd(a, r) == 1]
    return OrbifoldType(r, tuple(rng.choice(units) for _ in range(n)))


def random_effective_type(rng: random.Random, r_max: int = 40) -> OrbifoldType:
    """Random effective type, weights not necessarily coprime to r."""
    while True:
        r = rng.randint(2, r_max)
        n = rng.randint(1, 4)
        a = tuple(rng.randint(1, r - 1) for _ in range(n))
        if gcd(r, *a) == 1:
            return OrbifoldType(r, a)


def compatible_weight(rng: random.Random, q: OrbifoldType) -> int:
    """A canonical weight k with k + sum(a) == 0 mod r, spread around 0."""
    return rng.randrange(-3, 4) * q.r - sum(q.a_list)


small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=4),
)

small_laurent = st.builds(
    LaurentPoly,
    st.dictionaries(st.integers(min_value=-6, max_value=6), small_fractions, max_size=6),
)

small_poly = st.builds(
    LaurentPoly,
    st.dictionaries(st.integers(min_value=0, max_value=8), small_fractions, max_size=6),
)
