"""Divisibility experiments: finite scans standing in for "for all k in D".

Every verdict here is scan-bounded.  A scan that passes without an exact
polynomial quotient is reported as ``SCAN_PASS_NO_DIVIDE`` and never upgraded.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from .errors import FactorizationIncomplete, NotPrime, PreconditionError
from .numtheory import DEFAULT_TRIAL_BOUND, factorize, is_probable_prime
from .poly import (
    Poly,
    PolyTower,
    content,
    divides_exact,
    divides_in_fraction_field,
    eval_bivariate,
    poly_eval,
)
from .rings import Localized, Quad, RingKind, RingSpec

DEFAULT_CAP_FAILURES = 20
DEFAULT_QUAD_BOX = 50


class SampleMode(enum.Enum):
    RANGE = "RANGE"
    RANDOM = "RANDOM"


@dataclass(frozen=True)
class SamplePlan:
    """Which evaluation points a scan visits.

    RANGE walks ``k_min..k_max`` in order.  RANDOM draws ``count`` points with
    a ``seed``ed generator; integer draws come from ``[k_min, k_max]``.
    Non-integer rings add ring-specific points (fractions with allowed
    denominators, or ``x + y*sqrt(d)`` with |x|, |y| <= quad_box).
    """

    mode: SampleMode = SampleMode.RANGE
    k_min: int = -1000
    k_max: int = 1000
    count: int = 1
    seed: int = 0
    quad_box: int = DEFAULT_QUAD_BOX

    def __post_init__(self) -> None:
        if self.k_min > self.k_max:
            raise PreconditionError("k_min must be <= k_max")
        if self.count < 1:
            raise PreconditionError("count must be >= 1")

    @classmethod
    def range(cls, k_min: int, k_max: int, **kw: Any) -> SamplePlan:
        return cls(SampleMode.RANGE, k_min, k_max, **kw)

    @classmethod
    def random(cls, count: int, seed: int = 0, k_min: int = -1000, k_max: int = 1000, **kw: Any) -> SamplePlan:
        return cls(SampleMode.RANDOM, k_min, k_max, count=count, seed=seed, **kw)

    def integers(self) -> list[int]:
        if self.mode is SampleMode.RANGE:
            return list(range(self.k_min, self.k_max + 1))
        rng = random.Random(self.seed)
        return [rng.randint(self.k_min, self.k_max) for _ in range(self.count)]

    def pairs(self) -> list[tuple[int, int]]:
        """Points for bivariate scans: each coordinate drawn from this plan."""
        if self.mode is SampleMode.RANGE:
            ks = self.integers()
            return [(a, b) for a in ks for b in ks]
        rng = random.Random(self.seed)
        return [(rng.randint(self.k_min, self.k_max), rng.randint(self.k_min, self.k_max)) for _ in range(self.count)]

    def ring_samples(self, ring: RingSpec) -> list[Any]:
        """Integers embedded in ``ring``, interleaved with ring-specific points."""
        if isinstance(ring, PolyTower) or ring.kind is RingKind.INTEGERS:
            return [ring.coerce(k) for k in self.integers()]
        rng = random.Random(self.seed ^ 0x5EED)
        special = _special_sampler(ring, rng, self)
        if self.mode is SampleMode.RANGE:
            ints = [ring.coerce(k) for k in self.integers()]
            return ints + [next(special) for _ in ints]
        ints = iter(self.integers())
        return [ring.coerce(next(ints)) if j % 2 == 0 else next(special) for j in range(self.count)]


def _special_sampler(ring: RingSpec, rng: random.Random, plan: SamplePlan) -> Iterator[Any]:
    if ring.kind is RingKind.QUADRATIC:
        box = plan.quad_box
        while True:
            yield ring.coerce(Quad(rng.randint(-box, box), rng.randint(-box, box), ring.d))
    primes: tuple[int, ...] = ()
    if isinstance(ring, Localized):
        primes = ring.denominators.sample_primes(8)
    while True:
        a = rng.randint(plan.k_min, plan.k_max)
        if ring.kind is RingKind.RATIONALS:
            b = rng.randint(1, 50)
        elif primes:
            b = 1
            for _ in range(rng.randint(1, 3)):
                b *= rng.choice(primes)
        else:
            b = 1
        yield ring.coerce(Fraction(a, b))


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    tested: int
    skipped_zero_divisor: int
    inconclusive: int
    failure_count: int
    failures: tuple[tuple[Any, Any, Any], ...]
    first_failure_index: int | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0


def _points(g: Poly, plan: SamplePlan) -> tuple[list[Any], Any, RingSpec]:
    # (points, evaluator, ring the values live in)
    if isinstance(g.ring, PolyTower):
        return plan.pairs(), lambda p, pt: eval_bivariate(p, *pt), g.ring.base
    return plan.ring_samples(g.ring), poly_eval, g.ring


def scan_divisibility(
    g: Poly,
    f: Poly,
    plan: SamplePlan,
    cap_failures: int = DEFAULT_CAP_FAILURES,
) -> ScanReport:
    """Check g(k) | f(k) at every sample k with g(k) != 0."""
    if not g:
        raise PreconditionError("g must be nonzero")
    points, evaluate, ring = _points(g, plan)
    tested = skipped = inconclusive = nfail = 0
    failures: list[tuple[Any, Any, Any]] = []
    first: int | None = None
    for idx, k in enumerate(points):
        gk = evaluate(g, k)
        if not gk:
            skipped += 1
            continue
        fk = evaluate(f, k)
        try:
            ok = ring.exact_div(fk, gk) is not None
        except FactorizationIncomplete:
            inconclusive += 1
            continue
        tested += 1
        if not ok:
            nfail += 1
            if first is None:
                first = idx
            if len(failures) < cap_failures:
                failures.append((k, gk, fk))
    return ScanReport(tested, skipped, inconclusive, nfail, tuple(failures), first)


class VerdictKind(enum.Enum):
    DIVIDES = "DIVIDES"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    SCAN_PASS_NO_DIVIDE = "SCAN_PASS_NO_DIVIDE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class DegreeReport:
    deg_f: int | float
    deg_g: int | float
    # f = 0 or deg f >= deg g
    dpp_satisfied: bool
    # The opposite comparison, reported alongside for bivariate inputs.
    deg_f_le_deg_g: bool = False


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    degree_report: DegreeReport
    scan: ScanReport
    quotient: Poly | None = None
    counterexample: Any = None
    anomaly: bool = False


def degree_report(f: Poly, g: Poly) -> DegreeReport:
    return DegreeReport(f.degree, g.degree, (not f) or f.degree >= g.degree, f.degree <= g.degree)


def epp_verdict(
    g: Poly,
    f: Poly,
    plan: SamplePlan,
    cap_failures: int = DEFAULT_CAP_FAILURES,
) -> Verdict:
    """Scan, then try exact division in D[x]."""
    scan = scan_divisibility(g, f, plan, cap_failures)
    deg = degree_report(f, g)
    if not scan.passed:
        return Verdict(VerdictKind.COUNTEREXAMPLE, deg, scan, counterexample=scan.failures[0][0])
    q = divides_exact(g, f)
    if q is not None:
        return Verdict(VerdictKind.DIVIDES, deg, scan, quotient=q)
    if scan.inconclusive:
        return Verdict(VerdictKind.INCONCLUSIVE, deg, scan)
    # Over Z a full pointwise pass with primitive g forces g | f.
    anomaly = g.ring.kind is RingKind.INTEGERS and g.degree >= 1 and content(g) == 1
    return Verdict(VerdictKind.SCAN_PASS_NO_DIVIDE, deg, scan, anomaly=anomaly)


# ---------------------------------------------------------------------------
# Prime witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    poly: Poly
    k_range: tuple[int, int]
    samples: int
    witnesses: tuple[int, ...]
    excluded: tuple[int, ...]
    per_witness_example: dict[int, int] = field(compare=False)
    incomplete_values: int = 0


def ipp_witnesses(
    g: Poly,
    plan: SamplePlan,
    exclude_c: int = 1,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
) -> WitnessReport:
    """Primes p with p | g(k), g(k) != 0, for sampled integers k.

    Primes dividing ``exclude_c`` are dropped.  Over a localization, primes
    that are units of the ring never count as witnesses.
    """
    if g.degree < 1:
        raise PreconditionError("witness enumeration needs deg g >= 1")
    if exclude_c == 0:
        raise PreconditionError("exclude_c must be nonzero")
    excluded = set(factorize(exclude_c).primes) if abs(exclude_c) > 1 else set()
    unit_primes = g.ring.denominators if isinstance(g.ring, Localized) else None
    first_k: dict[int, int] = {}
    incomplete = 0
    ks = plan.integers()
    for k in ks:
        v = Fraction(poly_eval(g, g.ring.coerce(k)))
        if v == 0:
            continue
        report = factorize(v.numerator, trial_bound)
        if not report.complete:
            incomplete += 1
        for p in report.primes:
            if p in excluded or (unit_primes is not None and p in unit_primes):
                continue
            if p not in first_k or k < first_k[p]:
                first_k[p] = k
    for p, k in first_k.items():
        v = Fraction(poly_eval(g, g.ring.coerce(k)))
        assert v != 0 and v.numerator % p == 0
    witnesses = tuple(sorted(first_k))
    return WitnessReport(
        g,
        (min(ks), max(ks)),
        len(ks),
        witnesses,
        tuple(sorted(excluded)),
        {p: first_k[p] for p in witnesses},
        incomplete,
    )


# ---------------------------------------------------------------------------
# D-ring quotients, Int(Z), unit-valued polynomials
# ---------------------------------------------------------------------------


def dring_quotient(f: Poly, g: Poly, plan: SamplePlan) -> Poly | None:
    """f/g in K[x] when g(k) | f(k) holds for all but finitely many samples.

    More than deg f + deg g + 1 failing samples cannot be "almost all" and
    gives None, as does a nonzero remainder in K[x].
    """
    if not g:
        raise PreconditionError("g must be nonzero")
    scan = scan_divisibility(g, f, plan, cap_failures=0)
    cap = max(int(f.degree), 0) + max(int(g.degree), 0) + 1
    if scan.failure_count > cap:
        return None
    return divides_in_fraction_field(g, f)


def int_membership(h: Poly) -> bool:
    """h(Z) subset of Z, decided by h(0), ..., h(deg h) all being integers."""
    if not h:
        return True
    return all(Fraction(poly_eval(h, k)).denominator == 1 for k in range(int(h.degree) + 1))


@dataclass(frozen=True)
class UnitScanReport:
    all_units: bool
    tested: int
    inconclusive: int
    non_unit_example: tuple[Any, Any] | None = None
    non_unit_index: int | None = None


def unit_valued_scan(f: Poly, ring: RingSpec, plan: SamplePlan) -> UnitScanReport:
    """Does f send every sampled point of ``ring`` to a unit?"""
    f = f if f.ring == ring else f.change_ring(ring)
    tested = inconclusive = 0
    for idx, k in enumerate(plan.ring_samples(ring)):
        v = poly_eval(f, k)
        try:
            unit = ring.is_unit(v)
        except FactorizationIncomplete:
            inconclusive += 1
            continue
        tested += 1
        if not unit:
            return UnitScanReport(False, tested, inconclusive, (k, v), idx)
    return UnitScanReport(inconclusive == 0, tested, inconclusive)


def sum_two_squares(p: int) -> tuple[int, int] | None:
    """(a, b) with a <= b and a^2 + b^2 = p, or None when p = 3 mod 4."""
    if not is_probable_prime(p):
        raise NotPrime(f"{p} is not prime")
    for a in range(1, math.isqrt(p // 2) + 1):
        rest = p - a * a
        b = math.isqrt(rest)
        if b * b == rest:
            return a, b
    return None
