"""Enriched logarithmic zeta functions over finite fields.

The coefficient of ``t**(m-1)`` is the enriched trace ``N_m`` of the ``m``-th
Frobenius power, an element of ``GW(F_q)``. For smooth proper sources it is
computed from point counts through closed-point counts and transfers; for
strictly cellular sources it also has a closed form in ``q_eps``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import divisors, mobius
from .factors import Factor, FactorList
from .gw import (
    GW_INT,
    ZZ,
    FqTag,
    GwFq,
    gw_minus_one,
    gw_u,
    q_eps,
    reduce_mod_p,
    transfer,
)
from .series import Poly, RingMatrix, Series, dlog_poly
from .varieties import CellData, PointCountSource, product


class InconsistentCountsError(ValueError):
    """Point counts that cannot come from a variety (Moebius sums fail)."""


class NotProperError(ValueError):
    pass


def alpha(X: PointCountSource, i: int) -> int:
    """Number of closed points of degree ``i``, by Moebius inversion."""
    if i < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * X.counts(i // d) for d in divisors(i))
    if total % i or total < 0:
        terms = " + ".join(
            f"({mobius(d)})*{X.counts(i // d)}" for d in divisors(i) if mobius(d)
        )
        raise InconsistentCountsError(
            f"inconsistent point counts for {X.label}: "
            f"sum_(d|{i}) mu(d)|X(F_q^({i}/d))| = {terms} = {total}, "
            f"which is not a nonnegative multiple of {i}"
        )
    return total // i


def enriched_trace_Nm(X: PointCountSource, m: int, *, formal: bool = False) -> GwFq:
    """``N_m(X) = sum_{i|m} alpha(i) Tr_{F_{q^i}/F_q}<1>``.

    Only smooth proper sources are accepted unless ``formal`` is set, in which
    case the same formula is evaluated on an arbitrary count sequence.
    """
    if not X.proper and not formal:
        raise NotProperError(f"pipeline requires proper: {X.label} is not proper")
    field = X.field
    acc = field.zero
    for i in divisors(m):
        acc = acc + alpha(X, i) * transfer(field, i)
    return acc


@dataclass(frozen=True)
class ZetaReport:
    enriched: Series
    rank_series: Series
    disc_series: tuple[int, ...]
    closed_form: FactorList | None = None
    sign_series: Series | None = None


def dlog_zeta(X: PointCountSource, order: int, *, formal: bool = False) -> ZetaReport:
    enriched = Series(X.field, [enriched_trace_Nm(X, m, formal=formal) for m in range(1, order + 1)])
    rank_series = enriched.map(lambda x: x.rank, ZZ)
    for m, r in enumerate(rank_series, start=1):
        if r != X.counts(m):
            raise AssertionError(f"rank of N_{m} is {r}, expected |X(F_q^{m})| = {X.counts(m)}")
    closed = None
    if X.cells is not None:
        closed, _ = cellular_closed_form(X.field, X.cells, order)
    sign = None
    if X.lift is not None:
        sign = X.lift.expand(order).map(lambda x: x.sign, ZZ)
    return ZetaReport(
        enriched=enriched,
        rank_series=rank_series,
        disc_series=tuple(x.disc for x in enriched),
        closed_form=closed,
        sign_series=sign,
    )


def disc_series_direct(X: PointCountSource, order: int) -> tuple[int, ...]:
    """``disc N_m`` as the parity of closed points of even degree dividing ``m``."""
    out = []
    for m in range(1, order + 1):
        total = 0
        for i in divisors(m):
            if i % 2:
                continue
            s = sum(mobius(d) * X.counts(i // d) for d in divisors(i))
            if s % i:
                raise InconsistentCountsError(f"Moebius sum {s} not divisible by {i}")
            total += s // i
        out.append(total % 2 if X.field.odd else 0)
    return tuple(out)


def cellular_closed_form(field: FqTag, cells: CellData, order: int) -> tuple[FactorList, Series]:
    """``sum_i <-1>^i b_i dlog 1/(1 - q_eps^i t)`` and its expansion."""
    qe, e = q_eps(field), gw_minus_one(field)
    factors = FactorList(field, [Factor(e**i, qe**i, b) for i, b in enumerate(cells.b) if b])
    return factors, factors.expand(order)


def res_p1_closed_form(field: FqTag, order: int) -> tuple[FactorList, Series]:
    """Closed form for ``Res_{F_{q^2}/F_q} P^1``."""
    if not field.odd:
        raise ValueError("Res P^1 closed form needs odd q")
    qe, e, u = q_eps(field), gw_minus_one(field), gw_u(field)
    factors = FactorList(
        field,
        [(1, 1, 1), (1, qe**2, 1), (e * u, qe * u, 1), (e, -qe, 1)],
    )
    return factors, factors.expand(order)


def frobenius_cell_matrices(field: FqTag, cells: CellData) -> list[RingMatrix]:
    """Frobenius on the cellular complex: multiplication by ``q_eps^i`` in degree ``i``."""
    qe = q_eps(field)
    return [RingMatrix.scalar(field, qe**i, b) for i, b in enumerate(cells.b)]


def cellular_trace(field: FqTag, matrices: Sequence[RingMatrix], m: int) -> GwFq:
    """``sum_i <-1>^i Tr(C_i^m)`` for a graded sequence of square matrices."""
    e = gw_minus_one(field)
    acc = field.zero
    for i, C in enumerate(matrices):
        if not isinstance(C, RingMatrix):
            C = RingMatrix(field, C)
        if C.n == 0:
            continue
        acc = acc + e**i * (C**m).trace()
    return acc


def euler_characteristic(cells: CellData, field: FqTag) -> GwFq:
    e = gw_minus_one(field)
    acc = field.zero
    for i, b in enumerate(cells.b):
        acc = acc + b * e**i
    return acc


@dataclass(frozen=True)
class TopologyData:
    """``det(1 - t phi(R) | H^i_top)`` per degree ``i``, integer coefficients."""

    polys: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        polys = tuple(tuple(int(c) for c in p) for p in self.polys)
        for i, p in enumerate(polys):
            if p and p[0] != 1:
                raise ValueError(f"D_{i} must have constant term 1")
        object.__setattr__(self, "polys", polys)


TORUS = TopologyData(((1, -1), (1, -2, 1), (1, -1)))
SPHERE = TopologyData(((1, -1), (1,), (1, -1)))


def sign_series_from_topology(top: TopologyData, order: int) -> Series:
    """``sum_i (-1)^(i+1) d/dt log D_i(t)`` over the integers."""
    acc = Series.zero(ZZ, order)
    for i, p in enumerate(top.polys):
        if not p:
            continue
        term = dlog_poly(Poly(ZZ, p), order)
        acc = acc - term if i % 2 == 0 else acc + term
    return acc


def sign_check_via_reduction(factors: FactorList, X: PointCountSource, order: int) -> bool:
    """Does the GW(R) closed form of a lift reduce to the pipeline series of ``X``?"""
    if factors.ring != GW_INT:
        raise ValueError("expected a closed form over GW(R)")
    field = X.field
    if not field.odd:
        raise ValueError("reduction check needs odd q")
    reduced = factors.expand(order).map(lambda x: reduce_mod_p(x, field), field)
    return reduced == dlog_zeta(X, order).enriched


class FunctionalEquationError(ValueError):
    pass


def functional_equation_check(
    factors: FactorList, n: int, field: FqTag, order: int, *, chi: GwFq | None = None
) -> bool:
    """Check ``Phi(t) = -chi t^-1 + <-1> d/dt log zeta(1/(q_eps^n t))`` for ``P^n``.

    Each factor ``w dlog 1/(1 - q_eps^i t)`` turns into
    ``w t^-1 + w dlog 1/(1 - q_eps^(n-i) t)`` under the substitution, so the
    identity splits into a constant (``t^-1``) part and a factor multiset part.
    """
    if n % 2 == 0:
        raise FunctionalEquationError("functional equation stated only for odd n")
    if chi is None:
        chi = euler_characteristic(CellData((1,) * (n + 1)), field)
    qe, e, q = q_eps(field), gw_minus_one(field), field.q
    constant = field.zero
    transformed = []
    for f in factors:
        i = _exponent(f.pole.rank, q)
        if i is None or i > n or f.pole != qe**i:
            return False
        constant = constant + e * f.weight * f.mult
        transformed.append(Factor(e * f.weight, qe ** (n - i), f.mult))
    image = FactorList(field, transformed)
    if constant - chi != field.zero:
        return False
    if image != factors:
        return False
    return image.expand(order) == factors.expand(order)


def _exponent(r: int, q: int) -> int | None:
    i = 0
    while r > 1 and r % q == 0:
        r //= q
        i += 1
    return i if r == 1 else None


def check_multiplicative(X: PointCountSource, Y: PointCountSource, order: int) -> bool:
    """``N_m(X x Y) = N_m(X) N_m(Y)`` for ``m <= order``."""
    try:
        XY = product(X, Y)
        return all(
            enriched_trace_Nm(XY, m, formal=True)
            == enriched_trace_Nm(X, m, formal=True) * enriched_trace_Nm(Y, m, formal=True)
            for m in range(1, order + 1)
        )
    except (InconsistentCountsError, ValueError):
        return False


def check_cut_and_paste(
    X: PointCountSource, Z: PointCountSource, U: PointCountSource, order: int
) -> bool:
    """``N_m(X) = N_m(Z) + N_m(U)`` for ``X = Z + U``, evaluated formally."""
    try:
        return all(
            enriched_trace_Nm(X, m, formal=True)
            == enriched_trace_Nm(Z, m, formal=True) + enriched_trace_Nm(U, m, formal=True)
            for m in range(1, order + 1)
        )
    except (InconsistentCountsError, ValueError):
        return False


def motivic_check(
    X: PointCountSource,
    Y: PointCountSource,
    order: int,
    *,
    decomposition: tuple[PointCountSource, PointCountSource, PointCountSource] | None = None,
) -> bool:
    """Multiplicativity on ``(X, Y)`` and, if given, cut-and-paste on ``(X', Z, U)``."""
    ok = check_multiplicative(X, Y, order)
    if decomposition is not None:
        ok = ok and check_cut_and_paste(*decomposition, order)
    return ok
