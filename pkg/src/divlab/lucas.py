"""Lucas sequences X_n(a), Y_n(a) solving x^2 - (a^2 - 1) y^2 = 1.

Both numeric (big-integer) and symbolic (polynomials in ``a`` over Z) forms are
available, along with the Julia Robinson congruences and the shift
congruences, each checkable numerically or as a polynomial divisibility.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any

from .errors import DIsSquare, PreconditionError
from .poly import Poly, divides_exact, pseudo_divide
from .rings import ZZ


def lucas_eval(n: int, a: int) -> tuple[int, int]:
    """(X_n(a), Y_n(a)); a = 1 gives X_n = 1, Y_n = n."""
    if n < 0:
        raise PreconditionError("n must be >= 0")
    if a == 1:
        return 1, n
    x0, x1 = 1, a
    y0, y1 = 0, 1
    if n == 0:
        return x0, y0
    for _ in range(n - 1):
        x0, x1 = x1, 2 * a * x1 - x0
        y0, y1 = y1, 2 * a * y1 - y0
    return x1, y1


def lucas_poly(n: int, var: str = "x") -> tuple[Poly, Poly]:
    """(X_n, Y_n) as integer polynomials of degree n and n - 1."""
    if n < 0:
        raise PreconditionError("n must be >= 0")
    xs, ys = _poly_rows(n, var)
    return xs[n], ys[n]


def _poly_rows(n: int, var: str) -> tuple[list[Poly], list[Poly]]:
    a = Poly.gen(ZZ, var)
    two_a = a * 2
    xs = [Poly.constant(1, ZZ, var), a]
    ys = [Poly.zero(ZZ, var), Poly.constant(1, ZZ, var)]
    for _ in range(n - 1):
        xs.append(two_a * xs[-1] - xs[-2])
        ys.append(two_a * ys[-1] - ys[-2])
    return xs[: n + 1], ys[: n + 1]


@dataclass(frozen=True)
class LucasTable:
    """Rows 0..upto; ``a is None`` marks the symbolic table."""

    a: int | None
    upto: int
    xs: tuple[Any, ...]
    ys: tuple[Any, ...]


def lucas_table(upto: int, a: int | None = None, var: str = "x") -> LucasTable:
    if upto < 0:
        raise PreconditionError("upto must be >= 0")
    if a is None:
        xs, ys = _poly_rows(upto, var)
        return LucasTable(None, upto, tuple(xs), tuple(ys))
    rows = [lucas_eval(n, a) for n in range(upto + 1)]
    return LucasTable(a, upto, tuple(r[0] for r in rows), tuple(r[1] for r in rows))


def pell_verify(n: int, a: int) -> bool:
    x, y = lucas_eval(n, a)
    return x * x - (a * a - 1) * y * y == 1


def pell_fundamental(d: int, y_cap: int = 10**6) -> tuple[int, int] | None:
    """Smallest y in [1, y_cap] with d*y^2 + 1 a square, as (x, y)."""
    if d < 2:
        raise PreconditionError("d must be >= 2")
    if math.isqrt(d) ** 2 == d:
        raise DIsSquare(f"{d} is a perfect square")
    if y_cap < 1:
        raise PreconditionError("y_cap must be >= 1")
    for y in range(1, y_cap + 1):
        t = d * y * y + 1
        x = math.isqrt(t)
        if x * x == t:
            return x, y
    return None


# ---------------------------------------------------------------------------
# Congruences
# ---------------------------------------------------------------------------


class CongruenceKind(enum.Enum):
    JR1 = "jr1"
    JR2 = "jr2"
    JR3 = "jr3"
    SHIFT_PLUS = "shift+"
    SHIFT_MINUS = "shift-"


class CongruenceStatus(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    VACUOUS = "VACUOUS"


@dataclass(frozen=True)
class CongruenceVerdict:
    kind: CongruenceKind
    params: dict[str, int]
    modulus: Any
    lhs_residue: Any
    status: CongruenceStatus
    # SHIFT kinds check a second relation (the 4ni+2n offset) as well.
    extra_residue: Any = None
    trivial_modulus: bool = False
    symbolic: bool = False
    quotients: tuple[Any, ...] = field(default=(), compare=False)

    @property
    def holds(self) -> bool:
        return self.status is CongruenceStatus.HOLDS


def _shift_relations(kind: CongruenceKind, n: int, i: int, m: int) -> list[tuple[int, int]]:
    """(index, sign) pairs: Y_index - sign * Y_m must vanish mod X_n."""
    if kind is CongruenceKind.SHIFT_PLUS:
        rel = [(4 * n * i + m, 1), (4 * n * i + 2 * n + m, -1)]
    else:
        rel = [(4 * n * i - m, -1), (4 * n * i + 2 * n - m, 1)]
    if any(idx < 0 for idx, _ in rel):
        raise PreconditionError(f"negative Lucas index for n={n}, i={i}, m={m}")
    return rel


def _required(name: str, value: int | None, minimum: int) -> int:
    if value is None:
        raise PreconditionError(f"parameter {name} is required")
    if value < minimum:
        raise PreconditionError(f"parameter {name} must be >= {minimum}")
    return value


def congruence_check(
    kind: CongruenceKind | str,
    n: int,
    a: int | None = None,
    k: int | None = None,
    i: int | None = None,
    m: int | None = None,
    symbolic: bool = False,
) -> CongruenceVerdict:
    """Evaluate one congruence numerically (``a`` given) or symbolically.

    Symbolic checks certify the polynomial divisibility in Z[x] with
    :func:`divides_exact`.
    """
    kind = CongruenceKind(kind) if isinstance(kind, str) else kind
    n = _required("n", n, 0)
    params: dict[str, int] = {"n": n}
    if not symbolic:
        if a is None:
            raise PreconditionError("numeric check needs a (or use symbolic mode)")
        params["a"] = a
    if kind is CongruenceKind.JR2:
        params["k"] = _required("k", k, 0)
    if kind in (CongruenceKind.SHIFT_PLUS, CongruenceKind.SHIFT_MINUS):
        params["i"] = _required("i", i, 1)
        params["m"] = _required("m", m, 0)

    if symbolic:
        return _symbolic_verdict(kind, params)
    return _numeric_verdict(kind, params)


def _modulus_and_lhs(kind: CongruenceKind, p: dict[str, int], a: Any, X: Any, Y: Any) -> tuple[Any, list[Any]]:
    # Works for a an int (numeric) or the polynomial x (symbolic).
    n = p["n"]
    if kind is CongruenceKind.JR1:
        return a - 1, [Y(n) - n]
    if kind is CongruenceKind.JR2:
        k = p["k"]
        return a * (2 * k) - (k * k + 1), [X(n) - (a - k) * Y(n) - k**n]
    if kind is CongruenceKind.JR3:
        return X(n), [Y(2 * n)]
    rel = _shift_relations(kind, n, p["i"], p["m"])
    return X(n), [Y(idx) - Y(p["m"]) * sign for idx, sign in rel]


def _numeric_verdict(kind: CongruenceKind, p: dict[str, int]) -> CongruenceVerdict:
    a = p["a"]
    modulus, values = _modulus_and_lhs(
        kind, p, a, lambda j: lucas_eval(j, a)[0], lambda j: lucas_eval(j, a)[1]
    )
    if modulus == 0:
        residues = values
        status = CongruenceStatus.VACUOUS
    else:
        residues = [v % abs(modulus) for v in values]
        status = CongruenceStatus.HOLDS if not any(residues) else CongruenceStatus.FAILS
    return CongruenceVerdict(
        kind,
        p,
        modulus,
        residues[0],
        status,
        extra_residue=residues[1] if len(residues) > 1 else None,
        trivial_modulus=abs(modulus) == 1,
    )


def _symbolic_verdict(kind: CongruenceKind, p: dict[str, int]) -> CongruenceVerdict:
    modulus, lhs = _modulus_and_lhs(
        kind, p, Poly.gen(ZZ, "x"), lambda j: lucas_poly(j)[0], lambda j: lucas_poly(j)[1]
    )
    trivial = modulus.degree == 0 and abs(modulus.lc) == 1
    quotients = tuple(divides_exact(modulus, f) for f in lhs)
    residues = []
    for f, q in zip(lhs, quotients):
        if q is not None:
            residues.append(Poly.zero(ZZ))
        elif modulus.degree >= 1:
            residues.append(pseudo_divide(f, modulus).remainder)
        else:
            residues.append(f)
    status = CongruenceStatus.HOLDS if all(q is not None for q in quotients) else CongruenceStatus.FAILS
    return CongruenceVerdict(
        kind,
        p,
        modulus,
        residues[0],
        status,
        extra_residue=residues[1] if len(residues) > 1 else None,
        trivial_modulus=trivial,
        symbolic=True,
        quotients=quotients,
    )
