"""Dense polynomials, truncated power series and square matrices over an
exact commutative ring.

A ring here is any object with ``zero``, ``one`` and ``coerce``; its elements
support ``+``, ``-``, ``*`` and ``==``. :data:`gwzeta.gw.ZZ`, an
:class:`~gwzeta.gw.FqTag` (for ``GW(F_q)``) and :data:`gwzeta.gw.GW_INT` all
qualify.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

MAX_DET_DIM = 8


class NotUnitNormalizedError(ValueError):
    pass


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Iterable = ()):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and cs[-1] == ring.zero:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, ring) -> Poly:
        return cls(ring, [ring.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.ring != self.ring:
            raise ValueError("polynomials over different rings")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [self[i] + other[i] for i in range(n)])

    def __neg__(self) -> Poly:
        return Poly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(self.ring, [c * other for c in self.coeffs])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    def __pow__(self, e: int) -> Poly:
        result = Poly.one(self.ring)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def derivative(self) -> Poly:
        return Poly(self.ring, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        return f"Poly({self.ring!r}, {[str(c) for c in self.coeffs]})"


class Series:
    """Class of a power series modulo ``t**order``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Iterable, order: int | None = None):
        cs = [ring.coerce(c) for c in coeffs]
        if order is not None:
            cs = cs[:order] + [ring.zero] * (order - len(cs))
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ring, order: int) -> Series:
        return cls(ring, [], order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> Series:
        return cls(p.ring, p.coeffs, order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: Series):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.ring != self.ring:
            raise ValueError("series over different rings")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: Series) -> Series:
        self._check(other)
        return Series(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> Series:
        return Series(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other: Series) -> Series:
        return self + (-other)

    def __mul__(self, other) -> Series:
        if not isinstance(other, Series):
            return Series(self.ring, [a * other for a in self.coeffs])
        self._check(other)
        M = self.order
        out = [self.ring.zero] * M
        for i, a in enumerate(self.coeffs):
            if a == self.ring.zero:
                continue
            for j in range(M - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return Series(self.ring, out)

    def __rmul__(self, other) -> Series:
        return Series(self.ring, [other * a for a in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def map(self, fn, ring) -> Series:
        return Series(ring, [fn(c) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"Series({self.ring!r}, [{', '.join(str(c) for c in self.coeffs)}])"


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_inverse_unit(P: Poly, order: int) -> Series:
    """Inverse of ``P`` modulo ``t**order`` as ``sum_m (1 - P)**m``; needs ``P(0) = 1``."""
    ring = P.ring
    if P[0] != ring.one:
        raise NotUnitNormalizedError("not a unit-normalized polynomial")
    one = Series(ring, [ring.one], order)
    x = one - Series.from_poly(P, order)
    result, power = one, one
    # x has zero constant term, so x**order vanishes mod t**order
    for _ in range(1, order):
        power = power * x
        result = result + power
    return result


def dlog_poly(P: Poly, order: int) -> Series:
    """Logarithmic derivative ``P'/P`` modulo ``t**order``."""
    inv = series_inverse_unit(P, order)
    return Series.from_poly(P.derivative(), order) * inv


class RingMatrix:
    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows: Sequence[Sequence]):
        rows = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix is not square")
        self.ring = ring
        self.rows = rows

    @classmethod
    def scalar(cls, ring, value, n: int) -> RingMatrix:
        z = ring.zero
        return cls(ring, [[value if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, ring, n: int) -> RingMatrix:
        return cls.scalar(ring, ring.one, n)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        if other.ring != self.ring or other.n != self.n:
            raise ValueError("incompatible matrices")
        n, z = self.n, self.ring.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = z
                for a, b in zip(row, col):
                    acc = acc + a * b
                new.append(acc)
            out.append(new)
        return RingMatrix(self.ring, out) if n else self

    def __pow__(self, e: int) -> RingMatrix:
        result = RingMatrix.identity(self.ring, self.n)
        for _ in range(e):
            result = result @ self
        return result

    def trace(self):
        acc = self.ring.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def direct_sum(self, other: RingMatrix) -> RingMatrix:
        z = self.ring.zero
        a, b = self.n, other.n
        rows = [list(r) + [z] * b for r in self.rows]
        rows += [[z] * a + list(r) for r in other.rows]
        return RingMatrix(self.ring, rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingMatrix) and self.ring == other.ring and self.rows == other.rows

    def __repr__(self) -> str:
        return f"RingMatrix({self.ring!r}, {[[str(x) for x in r] for r in self.rows]})"


def det_one_minus_tA(A: RingMatrix) -> Poly:
    """``det(1 - tA)`` by cofactor expansion (no division, so any commutative ring works)."""
    n = A.n
    if n > MAX_DET_DIM:
        raise ValueError(f"dimension cap: {n} > {MAX_DET_DIM}")
    ring = A.ring
    entries = [
        [Poly(ring, [ring.one if i == j else ring.zero, -A.rows[i][j]]) for j in range(n)]
        for i in range(n)
    ]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> Poly:
        if row == n:
            return Poly.one(ring)
        acc = Poly(ring)
        for k, c in enumerate(sorted(cols)):
            term = entries[row][c] * minor(row + 1, cols - {c})
            acc = acc - term if k % 2 else acc + term
        return acc

    return minor(0, frozenset(range(n)))


def newton_trace_series(A: RingMatrix, order: int) -> Series:
    """Series whose ``t**(m-1)`` coefficient is ``-Tr(A**m)``."""
    if A.n < 1:
        raise ValueError("empty matrix")
    out, power = [], A
    for _ in range(order):
        out.append(-power.trace())
        power = power @ A
    return Series(A.ring, out)
