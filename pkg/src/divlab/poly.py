"""Dense univariate polynomials over any supported coefficient ring.

A bivariate polynomial f(x, y) is a polynomial in ``y`` whose coefficients are
polynomials in ``x``; the coefficient ring is then a :class:`PolyTower`.  All
algorithms below only use ring operations plus ``ring.exact_div``/``ring.gcd``,
so they run unchanged on the tower.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Any, Iterable, Sequence

from .errors import (
    DivisorConstant,
    DivisorZero,
    InternalInvariantViolation,
    RingMismatch,
    UnsupportedOperation,
    ZeroPolynomial,
)
from .rings import ZZ, Quad, RingKind, RingSpec

# Degree of the zero polynomial.  Compares below every integer and absorbs
# addition, so deg(f*g) = deg f + deg g holds for zero too.
NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of var^i."""

    __slots__ = ("ring", "coeffs", "var")

    ring: RingSpec
    coeffs: tuple[Any, ...]
    var: str

    def __init__(self, coeffs: Iterable[Any] = (), ring: RingSpec = ZZ, var: str = "x") -> None:
        cs = [ring.coerce(c) for c in coeffs]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", _strip(cs))
        object.__setattr__(self, "var", var)

    @classmethod
    def _raw(cls, coeffs: Sequence[Any], ring: RingSpec, var: str) -> Poly:
        # Trusted constructor: coefficients are already ring elements.
        p = object.__new__(cls)
        object.__setattr__(p, "ring", ring)
        object.__setattr__(p, "coeffs", _strip(coeffs))
        object.__setattr__(p, "var", var)
        return p

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, ring: RingSpec = ZZ, var: str = "x") -> Poly:
        return cls._raw((), ring, var)

    @classmethod
    def constant(cls, c: Any, ring: RingSpec = ZZ, var: str = "x") -> Poly:
        return cls((c,), ring, var)

    @classmethod
    def monomial(cls, c: Any, n: int, ring: RingSpec = ZZ, var: str = "x") -> Poly:
        return cls([0] * n + [c], ring, var)

    @classmethod
    def gen(cls, ring: RingSpec = ZZ, var: str = "x") -> Poly:
        return cls.monomial(1, 1, ring, var)

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Any:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def map_coeffs(self, fn: Any, ring: RingSpec | None = None) -> Poly:
        ring = self.ring if ring is None else ring
        return Poly._raw([fn(c) for c in self.coeffs], ring, self.var)

    def change_ring(self, ring: RingSpec) -> Poly:
        return Poly(self.coeffs, ring, self.var)

    # -- arithmetic --------------------------------------------------------

    def _same_level(self, other: Any) -> bool:
        return isinstance(other, Poly) and other.var == self.var

    def _scalar(self, c: Any) -> Poly:
        return Poly._raw((c,), self.ring, self.var)

    def __add__(self, other: Any) -> Poly:
        if not self._same_level(other):
            other = self._scalar(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out, self.ring, self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw([-c for c in self.coeffs], self.ring, self.var)

    def __sub__(self, other: Any) -> Poly:
        if not self._same_level(other):
            other = self._scalar(other)
        return self + (-other)

    def __rsub__(self, other: Any) -> Poly:
        return (-self) + other

    def __mul__(self, other: Any) -> Poly:
        if not self._same_level(other):
            return Poly._raw([c * other for c in self.coeffs], self.ring, self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.ring, self.var)
        out = [self.ring.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly._raw(out, self.ring, self.var)

    def __rmul__(self, other: Any) -> Poly:
        return Poly._raw([other * c for c in self.coeffs], self.ring, self.var)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        out = Poly.constant(1, self.ring, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, n: int) -> Poly:
        """Multiply by var^n."""
        if not self.coeffs:
            return self
        return Poly._raw([self.ring.zero()] * n + list(self.coeffs), self.ring, self.var)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash((self.var, self.coeffs))

    def __call__(self, k: Any) -> Any:
        return poly_eval(self, k)

    def __repr__(self) -> str:
        from .expr import format_poly

        return f"Poly({format_poly(self)!r}, ring={self.ring.describe()})"

    def __str__(self) -> str:
        from .expr import format_poly

        return format_poly(self)


def _strip(cs: Sequence[Any]) -> tuple[Any, ...]:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


# ---------------------------------------------------------------------------
# Polynomial rings as coefficient rings (bivariate tower)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, repr=False)
class PolyTower(RingSpec):
    """``base[var]`` used as a coefficient ring.  One level deep at most."""

    base: RingSpec
    var: str = "x"
    kind = RingKind.POLY_TOWER

    def __post_init__(self) -> None:
        if isinstance(self.base, PolyTower):
            raise ValueError("tower nesting is limited to two variables")

    def coerce(self, value: Any) -> Poly:
        if isinstance(value, Poly):
            if value.coeffs and value.var != self.var:
                raise RingMismatch(f"polynomial in {value.var} where {self.var} expected")
            if value.ring == self.base and value.var == self.var:
                return value
            return Poly(value.coeffs, self.base, self.var)
        return Poly((value,), self.base, self.var)

    def zero(self) -> Poly:
        return Poly.zero(self.base, self.var)

    def one(self) -> Poly:
        return Poly.constant(1, self.base, self.var)

    def is_unit(self, e: Poly) -> bool:
        return e.degree == 0 and self.base.is_unit(e.coeffs[0])

    def exact_div(self, a: Poly, b: Poly) -> Poly | None:
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        return divides_exact(b, a)

    def gcd(self, a: Poly, b: Poly) -> Poly:
        return poly_gcd(a, b)

    def fraction_field(self) -> RingSpec:
        raise UnsupportedOperation("rational-function fields are not modeled")

    def describe(self) -> str:
        return f"{self.base.describe()}[{self.var}]"


# ---------------------------------------------------------------------------
# Evaluation and division
# ---------------------------------------------------------------------------


def poly_eval(f: Poly, k: Any) -> Any:
    """Horner evaluation.  Over a tower, ``k`` substitutes the outer variable."""
    acc = f.ring.zero()
    for c in reversed(f.coeffs):
        acc = acc * k + c
    return acc


def eval_bivariate(f: Poly, a: Any, b: Any) -> Any:
    """f(a, b) for f in (R[x])[y]: x -> a, y -> b."""
    if not isinstance(f.ring, PolyTower):
        raise RingMismatch("eval_bivariate needs a polynomial over a PolyTower")
    acc = f.ring.base.zero()
    for c in reversed(f.coeffs):
        acc = acc * b + poly_eval(c, a)
    return acc


@dataclass(frozen=True)
class PseudoDivResult:
    s: int
    quotient: Poly
    remainder: Poly
    scale: Any

    def check(self, f: Poly, g: Poly) -> bool:
        """Re-expand ``scale*f == g*quotient + remainder`` and the degree bound."""
        lhs = f * self.scale
        return lhs == g * self.quotient + self.remainder and self.remainder.degree < g.degree


def pseudo_divide(f: Poly, g: Poly) -> PseudoDivResult:
    """Classical pseudo-division with s = max(deg f - deg g + 1, 0)."""
    if not g:
        raise DivisorZero("pseudo-division by the zero polynomial")
    if g.degree < 1:
        raise DivisorConstant("pseudo-division needs deg g >= 1; use divides_exact for constants")
    ring, var = f.ring, f.var
    dg = int(g.degree)
    lcg = g.lc
    s = max(int(f.degree) - dg + 1, 0) if f else 0
    q = Poly.zero(ring, var)
    r = f
    steps = 0
    while r and r.degree >= dg:
        t = Poly.monomial(1, int(r.degree) - dg, ring, var) * r.lc
        q = q * lcg + t
        r = r * lcg - g * t
        steps += 1
    one = ring.one()
    extra = one
    for _ in range(s - steps):
        extra = extra * lcg
    scale = one
    for _ in range(s):
        scale = scale * lcg
    return PseudoDivResult(s, q * extra, r * extra, scale)


def _long_division(f: Poly, g: Poly, ring: RingSpec) -> tuple[Poly, Poly] | None:
    # Division with every step's coefficient required to lie in ``ring``.
    dg = int(g.degree)
    lcg = g.lc
    q = [ring.zero()] * max(int(f.degree) - dg + 1, 0)
    r = f
    while r and r.degree >= dg:
        c = ring.exact_div(r.lc, lcg)
        if c is None:
            return None
        shift = int(r.degree) - dg
        q[shift] = c
        r = r - (g * c).shift(shift)
    return Poly._raw(q, ring, f.var), r


def content(f: Poly) -> Any:
    """Normalized gcd of the coefficients (positive, or positive leading coefficient)."""
    if not f:
        raise ZeroPolynomial("content of the zero polynomial")
    return reduce(f.ring.gcd, f.coeffs, f.ring.zero())


def primitive_part(f: Poly) -> Poly:
    c = content(f)
    out = []
    for a in f.coeffs:
        q = f.ring.exact_div(a, c)
        if q is None:
            raise InternalInvariantViolation(f"content {c} does not divide {a}")
        out.append(q)
    return Poly._raw(out, f.ring, f.var)


def _split(f: Poly) -> tuple[Any, Poly]:
    c = content(f)
    return c, primitive_part(f)


def divides_exact(g: Poly, f: Poly) -> Poly | None:
    """Quotient q with f = g*q in D[x], or None.

    Non-constant divisors go through the Gauss pipeline: split off contents,
    pseudo-divide the primitive parts, then recover q step by step with every
    coefficient checked for ring membership.  The final re-expansion is always
    performed.
    """
    if not g:
        raise DivisorZero("division by the zero polynomial")
    ring = g.ring
    if not f:
        return Poly.zero(ring, f.var)
    if g.degree == 0:
        c = g.coeffs[0]
        out = []
        for a in f.coeffs:
            q = ring.exact_div(a, c)
            if q is None:
                return None
            out.append(q)
        quotient = Poly._raw(out, ring, f.var)
    else:
        if g.degree > f.degree:
            return None
        if ring.kind is RingKind.QUADRATIC:
            # No gcd theory in general Z[sqrt(d)]: skip the content split.
            if pseudo_divide(f, g).remainder:
                return None
        elif not ring.is_field:
            cg, pg = _split(g)
            cf, pf = _split(f)
            if ring.exact_div(cf, cg) is None:
                return None
            if pseudo_divide(pf, pg).remainder:
                return None
        result = _long_division(f, g, ring)
        if result is None:
            return None
        quotient, rem = result
        if rem:
            return None
    if g * quotient != f:
        raise InternalInvariantViolation("exact quotient failed re-expansion")
    return quotient


def divides_in_fraction_field(g: Poly, f: Poly) -> Poly | None:
    """f/g as a polynomial over the fraction field K of the coefficient ring."""
    if not g:
        raise DivisorZero("division by the zero polynomial")
    field = g.ring.fraction_field()
    gk = g.change_ring(field)
    fk = f.change_ring(field)
    if not fk:
        return Poly.zero(field, f.var)
    result = _long_division(fk, gk, field)
    if result is None:
        raise InternalInvariantViolation("field division refused a step")
    quotient, rem = result
    return None if rem else quotient


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """gcd in Z[x] (or Q[x]) by the primitive remainder sequence.

    Normalized with positive content and positive leading coefficient.
    """
    ring = a.ring if a else b.ring
    if ring.kind not in (RingKind.INTEGERS, RingKind.RATIONALS):
        raise UnsupportedOperation(f"polynomial gcd over {ring.describe()}")
    if not a:
        return _normalize_sign(b)
    if not b:
        return _normalize_sign(a)
    ca, pa = _split(a)
    cb, pb = _split(b)
    c = ring.gcd(ca, cb)
    if pa.degree < pb.degree:
        pa, pb = pb, pa
    while pb.degree > 0:
        r = pseudo_divide(pa, pb).remainder
        pa = pb
        pb = primitive_part(r) if r else r
    if pb:
        pa = Poly.constant(1, ring, a.var)
    return _normalize_sign(pa * c)


def _normalize_sign(f: Poly) -> Poly:
    if f and f.lc < 0:
        return -f
    return f


# ---------------------------------------------------------------------------
# Conjugate and norm polynomials over Z[sqrt(d)]
# ---------------------------------------------------------------------------


def _require_quadratic(f: Poly) -> None:
    if f.ring.kind is not RingKind.QUADRATIC:
        raise RingMismatch(f"expected Z[sqrt(d)] coefficients, got {f.ring.describe()}")


def conj_poly(f: Poly) -> Poly:
    _require_quadratic(f)
    return f.map_coeffs(Quad.conj)


def norm_poly(f: Poly) -> Poly:
    """f * conj(f), returned as a polynomial over Z."""
    _require_quadratic(f)
    prod = f * conj_poly(f)
    out = []
    for c in prod.coeffs:
        if c.y != 0:
            raise InternalInvariantViolation(f"norm coefficient {c} has a sqrt part")
        out.append(c.x)
    return Poly(out, ZZ, f.var)
