"""Coefficient rings: Z, Q, localizations of Z, and Z[sqrt(d)].

Elements are plain Python values wherever possible:

* ``Integers``   -> ``int``
* ``Rationals``  -> ``fractions.Fraction``
* ``Localized``  -> ``Fraction`` whose denominator is a unit of the ring
* ``Quadratic``  -> :class:`Quad`

A ring object is a small immutable descriptor that knows how to coerce values
into the ring, decide units and divisibility, and name its fraction field.
Polynomial rings over these (the bivariate tower) live in :mod:`divlab.poly`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any

from .errors import FactorizationIncomplete, RingMismatch, UnsupportedOperation
from .numtheory import DEFAULT_TRIAL_BOUND, factorize, is_probable_prime, primes_up_to


class RingKind(enum.Enum):
    INTEGERS = "INTEGERS"
    RATIONALS = "RATIONALS"
    LOCALIZED = "LOCALIZED"
    QUADRATIC = "QUADRATIC"
    POLY_TOWER = "POLY_TOWER"


# ---------------------------------------------------------------------------
# Z[sqrt(d)] elements
# ---------------------------------------------------------------------------

Rat = int | Fraction


@dataclass(frozen=True, eq=False)
class Quad:
    """``x + y*sqrt(d)``.

    Components are ints for ring elements; Fractions appear only in the
    fraction field Q(sqrt(d)).
    """

    x: Rat
    y: Rat
    d: int

    def _lift(self, other: Any) -> Quad | None:
        if isinstance(other, Quad):
            if other.d != self.d:
                raise RingMismatch(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quad(other, 0, self.d)
        return None

    def __add__(self, other: Any) -> Quad:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __neg__(self) -> Quad:
        return Quad(-self.x, -self.y, self.d)

    def __sub__(self, other: Any) -> Quad:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(self.x - o.x, self.y - o.y, self.d)

    def __rsub__(self, other: Any) -> Quad:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> Quad:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(
            self.x * o.x + self.d * self.y * o.y,
            self.x * o.y + self.y * o.x,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Quad:
        if n < 0:
            raise ValueError("negative exponent")
        out, base = Quad(1, 0, self.d), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other: Any) -> Quad:
        """Division in Q(sqrt(d))."""
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        num = self * o.conj()
        return Quad(_simplify(Fraction(num.x, 1) / n), _simplify(Fraction(num.y, 1) / n), self.d)

    def __rtruediv__(self, other: Any) -> Quad:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quad):
            return (self.x, self.y, self.d) == (other.x, other.y, other.d)
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.d))

    def __bool__(self) -> bool:
        return bool(self.x) or bool(self.y)

    def __repr__(self) -> str:
        return f"Quad({self.x}, {self.y}, d={self.d})"

    def conj(self) -> Quad:
        return Quad(self.x, -self.y, self.d)

    def norm(self) -> Rat:
        return self.x * self.x - self.d * self.y * self.y

    @property
    def is_integral(self) -> bool:
        return _is_int(self.x) and _is_int(self.y)


def _is_int(v: Rat) -> bool:
    return isinstance(v, int) or v.denominator == 1


def _simplify(v: Rat) -> Rat:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def quad_conj(z: Quad) -> Quad:
    return z.conj()


def quad_norm(z: Quad) -> int:
    return z.norm()


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    report = factorize(n)
    if not report.complete:
        raise FactorizationIncomplete(n, report.cofactor)
    return all(k == 1 for _, k in report.factors)


# ---------------------------------------------------------------------------
# Denominator sets for localizations Z[S^-1]
# ---------------------------------------------------------------------------


class DenomMode(enum.Enum):
    DIVIDING = "1/n"
    PRIMES = "primes"
    RESIDUE = "mod"
    EXCEPT = "except"


@dataclass(frozen=True)
class DenominatorSet:
    """The set S of primes made invertible.

    Four descriptor shapes: the primes dividing ``n``; an explicit finite list;
    primes ``p = r (mod m)`` together with an explicit list; every prime except
    an explicit list.
    """

    mode: DenomMode
    n: int = 1
    primes: tuple[int, ...] = ()
    residue: int = 0
    modulus: int = 1

    def __post_init__(self) -> None:
        if self.mode is DenomMode.DIVIDING and self.n < 1:
            raise ValueError("n must be >= 1")
        if self.mode is DenomMode.RESIDUE and not (self.modulus >= 1 and 0 <= self.residue < self.modulus):
            raise ValueError("residue class needs 0 <= r < m, m >= 1")
        bad = [p for p in self.primes if not is_probable_prime(p)]
        if bad:
            raise ValueError(f"not prime: {bad}")

    @classmethod
    def dividing(cls, n: int) -> DenominatorSet:
        if n < 1:
            raise ValueError("n must be >= 1")
        report = factorize(n)
        if not report.complete:
            raise FactorizationIncomplete(n, report.cofactor)
        return cls(DenomMode.DIVIDING, n=n, primes=report.primes)

    @classmethod
    def of_primes(cls, primes: Any) -> DenominatorSet:
        return cls(DenomMode.PRIMES, primes=tuple(sorted(set(primes))))

    @classmethod
    def residue_class(cls, r: int, m: int, extra: Any = ()) -> DenominatorSet:
        return cls(DenomMode.RESIDUE, residue=r, modulus=m, primes=tuple(sorted(set(extra))))

    @classmethod
    def all_except(cls, primes: Any) -> DenominatorSet:
        return cls(DenomMode.EXCEPT, primes=tuple(sorted(set(primes))))

    def __contains__(self, p: int) -> bool:
        if self.mode is DenomMode.EXCEPT:
            return p not in self.primes
        if p in self.primes:
            return True
        return self.mode is DenomMode.RESIDUE and p % self.modulus == self.residue

    def describe(self) -> str:
        ps = ",".join(str(p) for p in self.primes)
        if self.mode is DenomMode.DIVIDING:
            return f"1/n:{self.n}"
        if self.mode is DenomMode.PRIMES:
            return f"primes:{ps}"
        if self.mode is DenomMode.EXCEPT:
            return f"except:{ps}"
        extra = "".join(f",+{p}" for p in self.primes)
        return f"mod:{self.residue},{self.modulus}{extra}"

    def non_unit_part(self, n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> int:
        """|n| with every prime of S divided out."""
        rest, unresolved = self._split(n, trial_bound)
        if unresolved > 1:
            raise FactorizationIncomplete(n, unresolved)
        return rest

    def is_unit_integer(self, n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> bool:
        """True iff n != 0 and every prime factor of n lies in S."""
        if n == 0:
            return False
        rest, unresolved = self._split(n, trial_bound)
        if rest > 1:
            return False
        if unresolved > 1:
            raise FactorizationIncomplete(n, unresolved)
        return True

    def _split(self, n: int, trial_bound: int) -> tuple[int, int]:
        # Returns (product of known non-S prime powers, unresolved cofactor).
        m = abs(n)
        if m == 0:
            return 0, 1
        if self.mode is DenomMode.EXCEPT:
            rest = 1
            for p in self.primes:
                while m % p == 0:
                    m //= p
                    rest *= p
            return rest, 1
        for p in self.primes:
            while m % p == 0:
                m //= p
        if self.mode is not DenomMode.RESIDUE or m == 1:
            return m, 1
        report = factorize(m, trial_bound)
        rest = 1
        for p, k in report.factors:
            if p not in self:
                rest *= p**k
        return rest, report.cofactor

    def sample_primes(self, count: int) -> tuple[int, ...]:
        """The ``count`` smallest primes of S (fewer if S is finite)."""
        if self.mode in (DenomMode.DIVIDING, DenomMode.PRIMES):
            return self.primes[:count]
        out: list[int] = []
        bound = 64
        while len(out) < count and bound <= 1 << 20:
            out = [p for p in primes_up_to(bound) if p in self][:count]
            bound *= 4
        return tuple(out)


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------


class RingSpec:
    """Common surface of every coefficient ring."""

    kind: RingKind
    is_field: bool = False

    def zero(self) -> Any:
        return self.coerce(0)

    def one(self) -> Any:
        return self.coerce(1)

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def contains(self, value: Any) -> bool:
        try:
            self.coerce(value)
        except RingMismatch:
            return False
        return True

    def is_unit(self, e: Any) -> bool:
        raise NotImplementedError

    def exact_div(self, a: Any, b: Any) -> Any | None:
        """``a / b`` if it lies in the ring, else None."""
        raise NotImplementedError

    def divides(self, a: Any, b: Any) -> bool:
        if not a:
            raise ZeroDivisionError("divisibility by zero is undefined here")
        return self.exact_div(b, a) is not None

    def gcd(self, a: Any, b: Any) -> Any:
        raise UnsupportedOperation(f"no gcd in {self.describe()}")

    def fraction_field(self) -> RingSpec:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self.describe()}>"


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise RingMismatch("booleans are not ring elements")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Quad) and value.y == 0:
        return Fraction(value.x)
    raise RingMismatch(f"{value!r} is not a rational number")


@dataclass(frozen=True, repr=False)
class Integers(RingSpec):
    kind = RingKind.INTEGERS

    def coerce(self, value: Any) -> int:
        v = _as_fraction(value)
        if v.denominator != 1:
            raise RingMismatch(f"{value} is not an integer")
        return int(v)

    def is_unit(self, e: int) -> bool:
        return abs(e) == 1

    def exact_div(self, a: int, b: int) -> int | None:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        return q if r == 0 else None

    def gcd(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def fraction_field(self) -> RingSpec:
        return QQ

    def describe(self) -> str:
        return "z"


@dataclass(frozen=True, repr=False)
class Rationals(RingSpec):
    kind = RingKind.RATIONALS
    is_field = True

    def coerce(self, value: Any) -> Fraction:
        return _as_fraction(value)

    def is_unit(self, e: Fraction) -> bool:
        return e != 0

    def exact_div(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def gcd(self, a: Fraction, b: Fraction) -> Fraction:
        # Normalization that makes the primitive part an integer polynomial.
        a, b = Fraction(a), Fraction(b)
        if a == 0:
            return abs(b)
        if b == 0:
            return abs(a)
        num = math.gcd(a.numerator, b.numerator)
        den = math.lcm(a.denominator, b.denominator)
        return Fraction(num, den)

    def fraction_field(self) -> RingSpec:
        return self

    def describe(self) -> str:
        return "q"


@dataclass(frozen=True, repr=False)
class Localized(RingSpec):
    """Z[S^-1]: rationals whose denominators factor over the primes of S."""

    denominators: DenominatorSet
    trial_bound: int = field(default=DEFAULT_TRIAL_BOUND, compare=False)
    kind = RingKind.LOCALIZED

    def coerce(self, value: Any) -> Fraction:
        v = _as_fraction(value)
        if v.denominator != 1 and not self.denominators.is_unit_integer(v.denominator, self.trial_bound):
            raise RingMismatch(f"{v} has a denominator outside {self.describe()}")
        return v

    def is_unit(self, e: Fraction) -> bool:
        e = Fraction(e)
        return self.denominators.is_unit_integer(e.numerator, self.trial_bound)

    def exact_div(self, a: Fraction, b: Fraction) -> Fraction | None:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q = Fraction(a) / b
        if q.denominator == 1 or self.denominators.is_unit_integer(q.denominator, self.trial_bound):
            return q
        return None

    def gcd(self, a: Fraction, b: Fraction) -> Fraction:
        g = math.gcd(Fraction(a).numerator, Fraction(b).numerator)
        if g == 0:
            return Fraction(0)
        return Fraction(self.denominators.non_unit_part(g, self.trial_bound))

    def fraction_field(self) -> RingSpec:
        return QQ

    def describe(self) -> str:
        return f"zloc:{self.denominators.describe()}"


@dataclass(frozen=True, repr=False)
class Quadratic(RingSpec):
    """Z[sqrt(d)] with d squarefree and d not in {0, 1}."""

    d: int
    kind = RingKind.QUADRATIC

    def __post_init__(self) -> None:
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise ValueError(f"d={self.d} must be squarefree and not 0 or 1")

    def coerce(self, value: Any) -> Quad:
        if isinstance(value, Quad):
            if value.d != self.d:
                raise RingMismatch(f"element of Z[sqrt({value.d})] in {self.describe()}")
            if not value.is_integral:
                raise RingMismatch(f"{value} has non-integer components")
            return Quad(int(value.x), int(value.y), self.d)
        return Quad(Integers().coerce(value), 0, self.d)

    def is_unit(self, e: Quad) -> bool:
        # |norm| = 1, so norm -1 units such as 1 + sqrt(2) count.
        return abs(e.norm()) == 1

    def exact_div(self, a: Quad, b: Quad) -> Quad | None:
        n = b.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        num = a * b.conj()
        if num.x % n or num.y % n:
            return None
        return Quad(num.x // n, num.y // n, self.d)

    def gcd(self, a: Quad, b: Quad) -> Quad:
        # Only the rational-integer part of the gcd is computed.
        g = reduce(math.gcd, (a.x, a.y, b.x, b.y))
        return Quad(g, 0, self.d)

    def fraction_field(self) -> RingSpec:
        return QuadraticField(self.d)

    def describe(self) -> str:
        return f"quad:{self.d}"


@dataclass(frozen=True, repr=False)
class QuadraticField(RingSpec):
    """Q(sqrt(d)); only used as the target of fraction-field division."""

    d: int
    kind = RingKind.QUADRATIC
    is_field = True

    def coerce(self, value: Any) -> Quad:
        if isinstance(value, Quad):
            if value.d != self.d:
                raise RingMismatch(f"element of Q(sqrt({value.d})) in {self.describe()}")
            return Quad(_simplify(Fraction(value.x)), _simplify(Fraction(value.y)), self.d)
        return Quad(_simplify(_as_fraction(value)), 0, self.d)

    def is_unit(self, e: Quad) -> bool:
        return bool(e)

    def exact_div(self, a: Quad, b: Quad) -> Quad:
        return self.coerce(a) / b

    def fraction_field(self) -> RingSpec:
        return self

    def describe(self) -> str:
        return f"qquad:{self.d}"


ZZ = Integers()
QQ = Rationals()


def ring_is_unit(e: Any, ring: RingSpec) -> bool:
    return ring.is_unit(ring.coerce(e))


def ring_divides(a: Any, b: Any, ring: RingSpec) -> bool:
    return ring.divides(ring.coerce(a), ring.coerce(b))
