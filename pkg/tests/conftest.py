from __future__ import annotations

import math
import random

import pytest
from hypothesis import strategies as st

from divlab.poly import Poly, PolyTower
from divlab.rings import ZZ, Quad, Quadratic


def trial_factor(n: int) -> dict[int, int]:
    """Naive oracle: divide by every d >= 2 up to sqrt."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def random_int_poly(rng: random.Random, max_deg: int, bound: int, min_deg: int = 0, var: str = "x") -> Poly:
    deg = rng.randint(min_deg, max_deg)
    cs = [rng.randint(-bound, bound) for _ in range(deg)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return Poly(cs + [lead], ZZ, var)


def random_quad_poly(rng: random.Random, d: int, max_deg: int, bound: int) -> Poly:
    ring = Quadratic(d)
    deg = rng.randint(0, max_deg)
    cs = [Quad(rng.randint(-bound, bound), rng.randint(-bound, bound), d) for _ in range(deg + 1)]
    return Poly(cs, ring)


def random_tower_poly(rng: random.Random, deg_y: int, deg_x: int, bound: int) -> Poly:
    tower = PolyTower(ZZ, "x")
    cs = [random_int_poly(rng, deg_x, bound) for _ in range(deg_y + 1)]
    return Poly(cs, tower, "y")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261016)


small_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def int_polys(draw, max_deg: int = 6, bound: int = 20, nonzero: bool = False) -> Poly:
    cs = draw(st.lists(st.integers(-bound, bound), min_size=1, max_size=max_deg + 1))
    p = Poly(cs, ZZ)
    if nonzero and not p:
        p = Poly([draw(st.integers(1, bound))], ZZ)
    return p


@st.composite
def quads(draw, d: int, bound: int = 30) -> Quad:
    return Quad(draw(st.integers(-bound, bound)), draw(st.integers(-bound, bound)), d)


@st.composite
def quad_polys(draw, d: int, max_deg: int = 4, bound: int = 10) -> Poly:
    cs = draw(st.lists(quads(d, bound), min_size=1, max_size=max_deg + 1))
    return Poly(cs, Quadratic(d))
