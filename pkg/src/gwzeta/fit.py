"""Recover a closed form (a :class:`FactorList`) from a truncated series over GW(F_q).

Stage 1 works on the rank projection: Berlekamp-Massey over Q finds the
minimal linear recurrence, whose inverse roots must be integers ``+-q^i`` (or
the ranks of a supplied pole basis), each simple. A Vandermonde solve gives the
integer amplitude of every root.

Stage 2 lifts each amplitude to GW: a root ``r`` gets one factor
``(w, a, A_r)`` with ``w`` a unit form and ``rank a = r``. The discriminant bits
of ``w`` and ``a`` are the only freedom, so the search tries the plain choice
``(<-1>^i, +-q_eps^i)`` first, then single changes, then a single split of one
amplitude into ``1 + (A_r - 1)``. The result is verified by re-expansion.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from .factors import Factor, FactorList
from .gw import FqTag, GwFq, gw_minus_one, gw_u, q_eps
from .series import Series


class FitError(ValueError):
    pass


class NotDlogRationalError(FitError):
    pass


class InsufficientOrderError(FitError):
    pass


def berlekamp_massey(seq: Sequence) -> list[Fraction]:
    """Connection polynomial ``[1, c_1, ..., c_L]`` of the shortest recurrence over Q."""
    s = [Fraction(x) for x in seq]
    C, B = [Fraction(1)], [Fraction(1)]
    L, shift, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n] + sum(C[i] * s[n - i] for i in range(1, L + 1))
        if d == 0:
            shift += 1
            continue
        coef = d / b
        T = list(C)
        C = C + [Fraction(0)] * max(0, len(B) + shift - len(C))
        for i, x in enumerate(B):
            C[i + shift] -= coef * x
        if 2 * L <= n:
            L, B, b, shift = n + 1 - L, T, d, 1
        else:
            shift += 1
    C = C[: L + 1] + [Fraction(0)] * (L + 1 - len(C))
    return C


def _divide_linear(C: list[Fraction], r: int) -> list[Fraction] | None:
    """Divide ``C(x)`` by ``1 - r x``; ``None`` if it does not divide."""
    # C(x) = (1 - r x) D(x): D_0 = C_0, D_k = C_k + r D_{k-1}
    if len(C) < 2:
        return None
    D = [C[0]]
    for k in range(1, len(C) - 1):
        D.append(C[k] + r * D[-1])
    if C[-1] + r * D[-1] != 0:
        return None
    return D


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def rank_roots(seq: Sequence[int], candidates: Sequence[int], *, closed: bool = False) -> dict[int, int]:
    """Integer amplitudes ``A_r`` with ``seq[m-1] = sum_r A_r r^m``, roots from ``candidates``.

    ``closed`` means the candidates are the complete basis, so a recurrence
    longer than the basis is a definite failure rather than missing data.
    """
    M = len(seq)
    C = berlekamp_massey(seq)
    L = len(C) - 1
    if closed and L > len(candidates):
        raise NotDlogRationalError(
            f"not dlog-rational over the candidate basis: recurrence of order {L} exceeds {len(candidates)} poles"
        )
    if 2 * L > M:
        raise InsufficientOrderError(f"insufficient order: recurrence of order {L} needs M >= {2 * L}")
    roots = []
    rest = C
    for r in candidates:
        if len(rest) == 1:
            break
        q = _divide_linear(rest, r)
        if q is not None:
            if r in roots:
                raise NotDlogRationalError("not dlog-rational over the candidate basis: repeated root")
            roots.append(r)
            rest = q
            if _divide_linear(rest, r) is not None:
                raise NotDlogRationalError(
                    f"not dlog-rational over the candidate basis: repeated root {r}"
                )
    if len(rest) != 1:
        if 2 * L == M and not closed:
            # a recurrence of order M/2 always exists, so it says nothing here
            raise InsufficientOrderError(
                f"insufficient order: recurrence of order {L} is not confirmed by any term beyond M = {M}"
            )
        raise NotDlogRationalError(
            "not dlog-rational over the candidate basis: recurrence has roots outside the basis"
        )
    if not roots:
        return {}
    vander = [[Fraction(r) ** m for r in roots] for m in range(1, len(roots) + 1)]
    amps = _solve(vander, [Fraction(x) for x in seq[: len(roots)]])
    if any(a.denominator != 1 for a in amps):
        raise NotDlogRationalError("not dlog-rational over the candidate basis: non-integral weights")
    out = {r: int(a) for r, a in zip(roots, amps)}
    for m, x in enumerate(seq, start=1):
        if sum(a * r**m for r, a in out.items()) != x:
            raise NotDlogRationalError("not dlog-rational over the candidate basis")
    return out


def default_candidates(q: int, bound: int) -> list[int]:
    out, i = [], 0
    while q**i <= bound:
        out += [q**i, -(q**i)]
        i += 1
    return out


def _unit_options(field: FqTag, r: int, poles: Sequence[GwFq] | None) -> list[tuple[GwFq, GwFq]]:
    """Candidate ``(weight, pole)`` pairs for a rank root ``r``, preferred first."""
    u, e = gw_u(field), gw_minus_one(field)
    if poles is None:
        i = 0
        while abs(r) > field.q**i:
            i += 1
        base_w = e**i
        base_p = q_eps(field) ** i * (1 if r > 0 else -1)
        opts = [(base_w, base_p), (base_w * u, base_p * u), (base_w * u, base_p), (base_w, base_p * u)]
    else:
        units = [field.one, u, e, e * u]
        opts = [(w, p) for p in poles if p.rank == r for w in units]
    seen, out = set(), []
    for o in opts:
        if o not in seen:
            seen.add(o)
            out.append(o)
    return out


def fit_dlog_rational(series: Series, pole_basis: Sequence[GwFq] | None = None) -> FactorList:
    """A :class:`FactorList` whose expansion equals ``series`` exactly."""
    field = series.ring
    if not isinstance(field, FqTag):
        raise TypeError("fit_dlog_rational expects a series over GW(F_q)")
    M = series.order
    ranks = [x.rank for x in series]
    if pole_basis is not None:
        pole_basis = [field.coerce(p) for p in pole_basis]
        if M < 2 * len(pole_basis):
            raise InsufficientOrderError(
                f"insufficient order: {len(pole_basis)} candidate poles need M >= {2 * len(pole_basis)}"
            )
        candidates = list(dict.fromkeys(p.rank for p in pole_basis))
    else:
        C = berlekamp_massey(ranks)
        bound = max([abs(c.numerator) for c in C] + [1])
        candidates = default_candidates(field.q, bound)
    amps = rank_roots(ranks, candidates, closed=pole_basis is not None)
    roots = list(amps)
    options = {r: _unit_options(field, r, pole_basis) for r in roots}
    if any(not options[r] for r in roots):
        raise NotDlogRationalError("not dlog-rational over the candidate basis: no pole of the right rank")

    # positive roots paired with their negatives first: that pattern marks a
    # degree-two twist, where a changed discriminant is expected
    order_pref = sorted(roots, key=lambda r: (not (r > 0 and -r in amps), abs(r), r < 0))

    def build(choice: dict[int, int], split: tuple[int, int] | None = None) -> FactorList:
        fs = []
        for r in roots:
            w, p = options[r][choice[r]]
            if split is not None and split[0] == r:
                w1, p1 = options[r][split[1]]
                fs.append(Factor(w1, p1, 1))
                if amps[r] != 1:
                    fs.append(Factor(w, p, amps[r] - 1))
            else:
                fs.append(Factor(w, p, amps[r]))
        return FactorList(field, fs)

    base = {r: 0 for r in roots}
    for attempt in _attempts(order_pref, options, base):
        fl = build(*attempt)
        if fl.expand(M) == series:
            return fl
    raise NotDlogRationalError("not dlog-rational over the candidate basis: discriminants do not fit")


def _attempts(roots, options, base):
    yield base, None
    for r in roots:
        for k in range(1, len(options[r])):
            yield {**base, r: k}, None
    for r in roots:
        for k in range(1, len(options[r])):
            yield base, (r, k)
    # exhaustive fallback over all single-term choices (small supports only)
    if len(roots) <= 6:
        for combo in iproduct(*(range(len(options[r])) for r in roots)):
            yield dict(zip(roots, combo)), None
