"""Point-count sources ``m -> |X(F_{q^m})|`` for catalog varieties.

Every source may carry cell ranks ``b_i`` (strictly cellular schemes) and a
closed form over ``GW(R)`` for a lift with Frobenius to characteristic zero.
"""

from __future__ import annotations

import threading
import warnings
from math import comb
from dataclasses import dataclass
from typing import Callable, Sequence

from .factors import Factor, FactorList
from .gw import GW_INT, ZZ, FqTag, GwInt, MINUS_ONE_INT, n_eps_int
from .arith import legendre
from .series import Poly, dlog_poly


class InsufficientDataError(ValueError):
    pass


class NegativeCountError(ValueError):
    pass


class InconsistentWeilDataError(ValueError):
    pass


@dataclass(frozen=True)
class CellData:
    """``b[i]`` is the number of ``i``-dimensional affine cells."""

    b: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        if not b or any(x < 0 for x in b):
            raise ValueError("cell ranks must be a nonempty sequence of nonnegative integers")
        object.__setattr__(self, "b", b)

    def __iter__(self):
        return iter(self.b)

    def __len__(self) -> int:
        return len(self.b)

    def __add__(self, other: CellData) -> CellData:
        n = max(len(self.b), len(other.b))
        pad = lambda b: b + (0,) * (n - len(b))  # noqa: E731
        return CellData(tuple(x + y for x, y in zip(pad(self.b), pad(other.b))))

    def __mul__(self, other: CellData) -> CellData:
        out = [0] * (len(self.b) + len(other.b) - 1)
        for i, x in enumerate(self.b):
            for j, y in enumerate(other.b):
                out[i + j] += x * y
        return CellData(tuple(out))

    def count(self, q: int, m: int) -> int:
        return sum(bi * q ** (i * m) for i, bi in enumerate(self.b))


def cellular_lift(q: int, cells: CellData) -> FactorList:
    """Closed form over GW(R): ``<-1>^i`` weights, poles ``(q_eps)^i``."""
    qe = n_eps_int(q)
    return FactorList(
        GW_INT,
        [Factor(MINUS_ONE_INT**i, qe**i, b) for i, b in enumerate(cells.b) if b],
    )


class PointCountSource:
    def __init__(
        self,
        field: FqTag,
        counts: Callable[[int], int],
        *,
        dim: int,
        proper: bool,
        label: str,
        cells: CellData | None = None,
        lift: FactorList | None = None,
    ):
        self.field = field
        self._fn = counts
        self.dim = dim
        self.proper = proper
        self.label = label
        self.cells = cells
        self.lift = lift
        self._cache: dict[int, int] = {}
        self._lock = threading.Lock()

    def counts(self, m: int) -> int:
        if m < 1:
            raise ValueError("point counts are indexed from m = 1")
        try:
            return self._cache[m]
        except KeyError:
            pass
        value = int(self._fn(m))
        if value < 0:
            raise NegativeCountError(f"{self.label}: negative point count {value} at m={m}")
        with self._lock:
            self._cache.setdefault(m, value)
        return value

    def count_list(self, order: int) -> list[int]:
        return [self.counts(m) for m in range(1, order + 1)]

    def with_proper(self, proper: bool) -> PointCountSource:
        return PointCountSource(
            self.field, self._fn, dim=self.dim, proper=proper, label=self.label,
            cells=self.cells, lift=self.lift,
        )

    def __repr__(self) -> str:
        return f"<PointCountSource {self.label} over {self.field}>"


def _cellular(field: FqTag, cells: CellData, label: str) -> PointCountSource:
    q = field.q
    return PointCountSource(
        field, lambda m: cells.count(q, m), dim=len(cells) - 1, proper=True,
        label=label, cells=cells, lift=cellular_lift(q, cells),
    )


def point(field: FqTag) -> PointCountSource:
    return _cellular(field, CellData((1,)), "pt")


def projective_space(field: FqTag, n: int) -> PointCountSource:
    if n < 0:
        raise ValueError(f"projective space of negative dimension {n}")
    return _cellular(field, CellData((1,) * (n + 1)), f"P^{n}")


def affine_space(field: FqTag, n: int) -> PointCountSource:
    if n < 0:
        raise ValueError(f"affine space of negative dimension {n}")
    if n == 0:
        return point(field)
    q = field.q
    return PointCountSource(field, lambda m: q ** (n * m), dim=n, proper=False, label=f"A^{n}")


def gaussian_binomial(N: int, K: int, x: int) -> int:
    """``[N choose K]_x`` evaluated at an integer."""
    if K < 0 or K > N:
        return 0
    num, den = 1, 1
    for j in range(K):
        num *= x ** (N - j) - 1
        den *= x ** (j + 1) - 1
    if den == 0:
        # x == 1: ordinary binomial
        return comb(N, K)
    return num // den


def gaussian_binomial_coeffs(N: int, K: int) -> tuple[int, ...]:
    """Coefficients of ``[N choose K]_x`` as a polynomial in ``x``."""
    table: dict[tuple[int, int], list[int]] = {}

    def rec(n: int, k: int) -> list[int]:
        if k == 0 or k == n:
            return [1]
        if (n, k) not in table:
            a = rec(n - 1, k - 1)
            b = [0] * k + rec(n - 1, k)
            size = max(len(a), len(b))
            a, b = a + [0] * (size - len(a)), b + [0] * (size - len(b))
            table[(n, k)] = [x + y for x, y in zip(a, b)]
        return table[(n, k)]

    return tuple(rec(N, K))


def grassmannian(field: FqTag, r: int, n: int) -> PointCountSource:
    """``G(r, n)``: ``r``-planes in ``P^n``."""
    if not 0 <= r < n:
        raise ValueError(f"invalid Grassmannian G({r},{n}): need 0 <= r < n")
    q = field.q
    cells = CellData(gaussian_binomial_coeffs(n + 1, r + 1))
    return PointCountSource(
        field, lambda m: gaussian_binomial(n + 1, r + 1, q**m), dim=(r + 1) * (n - r),
        proper=True, label=f"G({r},{n})", cells=cells, lift=cellular_lift(q, cells),
    )


def _same_field(x: PointCountSource, y: PointCountSource):
    if x.field != y.field:
        raise ValueError(f"field mismatch: {x.field} vs {y.field}")


def product(x: PointCountSource, y: PointCountSource) -> PointCountSource:
    _same_field(x, y)
    cells = x.cells * y.cells if x.cells is not None and y.cells is not None else None
    lift = x.lift.hadamard(y.lift) if x.lift is not None and y.lift is not None else None
    return PointCountSource(
        x.field, lambda m: x.counts(m) * y.counts(m), dim=x.dim + y.dim,
        proper=x.proper and y.proper, label=f"{x.label} x {y.label}", cells=cells, lift=lift,
    )


def disjoint_union(x: PointCountSource, y: PointCountSource) -> PointCountSource:
    _same_field(x, y)
    cells = x.cells + y.cells if x.cells is not None and y.cells is not None else None
    lift = x.lift + y.lift if x.lift is not None and y.lift is not None else None
    return PointCountSource(
        x.field, lambda m: x.counts(m) + y.counts(m), dim=max(x.dim, y.dim),
        proper=x.proper and y.proper, label=f"{x.label} + {y.label}", cells=cells, lift=lift,
    )


def complement_pair(x: PointCountSource, z: PointCountSource) -> PointCountSource:
    """``X - Z`` for a closed ``Z`` inside ``X`` (the caller vouches for the inclusion)."""
    _same_field(x, z)
    return PointCountSource(
        x.field, lambda m: x.counts(m) - z.counts(m), dim=x.dim, proper=False,
        label=f"{x.label} - {z.label}",
    )


def spec_field_extension(field: FqTag, degree: int) -> PointCountSource:
    """``Spec F_{q^degree}`` viewed over ``F_q``."""
    if degree < 1:
        raise ValueError("extension degree must be positive")
    lift = None
    if degree == 2 and field.q % 4 == 3:
        # u = -1: <u> dlog 1/(1 - <u>t) + dlog 1/(1 + t)
        lift = FactorList(GW_INT, [(MINUS_ONE_INT, MINUS_ONE_INT, 1), (GwInt(1), GwInt(-1), 1)])
    return PointCountSource(
        field, lambda m: degree if m % degree == 0 else 0, dim=0, proper=True,
        label=f"Spec F_{field.q}^{degree}", lift=lift,
    )


def weil_restriction_p1(field: FqTag) -> PointCountSource:
    """``Res_{F_{q^2}/F_q} P^1``."""
    q = field.q
    lift = None
    if q % 4 == 3:
        # u = -1 lifts the twist to Res_{C/R} P^1
        qe = n_eps_int(q)
        lift = FactorList(
            GW_INT,
            [(1, 1, 1), (1, qe**2, 1), (GwInt(1), MINUS_ONE_INT * qe, 1), (MINUS_ONE_INT, -qe, 1)],
        )

    def counts(m: int) -> int:
        return q ** (2 * m) + 1 if m % 2 else (q**m + 1) ** 2

    return PointCountSource(field, counts, dim=2, proper=True, label="Res P^1", lift=lift)


def frobenius_power_sums(trace: int, q: int, order: int) -> list[int]:
    """``lambda**m + conj(lambda)**m`` for ``m = 1..order`` from ``x^2 - trace x + q``."""
    s = [2, trace]
    for _ in range(2, order + 1):
        s.append(trace * s[-1] - q * s[-2])
    return s[1 : order + 1]


def elliptic_point_count(p: int, A: int, B: int) -> int:
    """``|E(F_p)|`` for ``y^2 = x^3 + Ax + B`` including the point at infinity."""
    return p + 1 + sum(legendre(x**3 + A * x + B, p) for x in range(p))


def elliptic_curve(field: FqTag, A: int, B: int) -> PointCountSource:
    if not field.odd:
        raise ValueError("even characteristic unsupported")
    if field.k != 1:
        raise ValueError("elliptic curves are supported over prime fields only")
    p = field.p
    if (4 * A**3 + 27 * B**2) % p == 0:
        raise ValueError(f"singular curve y^2 = x^3 + {A}x + {B} over F_{p}")
    a = p + 1 - elliptic_point_count(p, A, B)

    def counts(m: int) -> int:
        return p**m + 1 - frobenius_power_sums(a, p, m)[-1]

    src = PointCountSource(field, counts, dim=1, proper=True, label=f"E: y^2 = x^3 + {A}x + {B}")
    src.frobenius_trace = a
    return src


@dataclass(frozen=True)
class WeilData:
    """Integer characteristic polynomials ``det(1 - t F | H^j)``, ``j = 0..2d``."""

    field: FqTag
    polys: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        polys = tuple(tuple(int(c) for c in p) for p in self.polys)
        object.__setattr__(self, "polys", polys)
        for j, p in enumerate(polys):
            if not p or p[0] != 1:
                raise InconsistentWeilDataError(f"Q_{j} must have constant term 1")
        if len(polys) % 2 == 0:
            warnings.warn("Weil data should cover an odd number of degrees 0..2d", stacklevel=2)
            return
        d = (len(polys) - 1) // 2
        if Poly(ZZ, polys[0]) != Poly(ZZ, [1, -1]):
            warnings.warn("Q_0 is not 1 - t", stacklevel=2)
        if Poly(ZZ, polys[-1]) != Poly(ZZ, [1, -self.field.q**d]):
            warnings.warn(f"Q_{2 * d} is not 1 - q^{d} t", stacklevel=2)


def power_sums(poly: Sequence[int], order: int) -> list[int]:
    """Power sums of the inverse roots of ``poly`` (Newton's identities)."""
    return [-c for c in dlog_poly(Poly(ZZ, poly), order)]


def from_weil_data(w: WeilData, label: str = "Weil data") -> PointCountSource:
    def counts(m: int) -> int:
        total = sum((-1) ** j * power_sums(p, m)[-1] for j, p in enumerate(w.polys))
        if total < 0:
            raise InconsistentWeilDataError(f"inconsistent Weil data: count {total} at m={m}")
        return total

    return PointCountSource(
        w.field, counts, dim=max(len(w.polys) - 1, 0) // 2, proper=True, label=label
    )


def from_table(
    field: FqTag, table: Sequence[int], *, proper: bool = True, label: str = "table"
) -> PointCountSource:
    values = tuple(int(x) for x in table)
    if not values:
        raise InsufficientDataError("empty count table")
    if any(x < 0 for x in values):
        raise NegativeCountError("count tables must be nonnegative")

    def counts(m: int) -> int:
        if m > len(values):
            raise InsufficientDataError(f"insufficient data: table has {len(values)} entries, m={m}")
        return values[m - 1]

    src = PointCountSource(field, counts, dim=0, proper=proper, label=label)
    src.table_length = len(values)
    return src
