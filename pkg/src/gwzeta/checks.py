"""Invariant suites run by ``gwzeta check``. Each returns ``[(name, passed), ...]``."""

from __future__ import annotations

import random
from typing import Callable, Iterable

from . import varieties as V
from .fit import FitError, fit_dlog_rational
from .gw import (
    ZZ,
    FqTag,
    GwFq,
    GwInt,
    n_eps,
    reduce_mod_p,
    transfer,
)
from .series import RingMatrix, dlog_poly, det_one_minus_tA, newton_trace_series
from .zeta import (
    SPHERE,
    TORUS,
    cellular_closed_form,
    cellular_trace,
    check_cut_and_paste,
    check_multiplicative,
    disc_series_direct,
    dlog_zeta,
    enriched_trace_Nm,
    frobenius_cell_matrices,
    functional_equation_check,
    res_p1_closed_form,
    sign_check_via_reduction,
    sign_series_from_topology,
)

Result = list[tuple[str, bool]]
SEED = 20240611


def _ring_axioms(elems: list, one, zero) -> bool:
    for a in elems:
        if a + zero != a or a * one != a:
            return False
        for b in elems:
            if a + b != b + a or a * b != b * a:
                return False
            for c in elems[:6]:
                if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                    return False
                if a * (b + c) != a * b + a * c:
                    return False
    return True


def random_gw(rng: random.Random, field: FqTag, lo: int = -20, hi: int = 20) -> GwFq:
    return GwFq(field, rng.randint(lo, hi), rng.randint(0, 1))


def suite_rings(qs: Iterable[int], order: int) -> Result:
    rng = random.Random(SEED)
    out: Result = []
    for q in qs:
        F = FqTag.of(q)
        elems = [random_gw(rng, F) for _ in range(12)]
        out.append((f"GW(F_{q}) ring axioms", _ring_axioms(elems, F.one, F.zero)))
        out.append((
            f"GW(F_{q}) n_eps multiplicative",
            all(n_eps(F, a) * n_eps(F, b) == n_eps(F, a * b) for a in range(13) for b in range(13)),
        ))
        out.append((f"GW(F_{q}) rank of transfer", all(transfer(F, i).rank == i for i in range(1, 25))))
        out.append((
            f"GW(F_{q}) no x with 2x = <1> - <u>",
            F.odd and all(GwFq(F, n, s) * 2 != GwFq(F, 0, 1) for n in range(-50, 51) for s in (0, 1)),
        ))
        if F.odd:
            ints = [GwInt(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(10)]
            out.append((
                f"GW(Z) -> GW(F_{q}) ring homomorphism",
                all(
                    reduce_mod_p(a + b, F) == reduce_mod_p(a, F) + reduce_mod_p(b, F)
                    and reduce_mod_p(a * b, F) == reduce_mod_p(a, F) * reduce_mod_p(b, F)
                    for a in ints
                    for b in ints
                ),
            ))
    ints = [GwInt(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(12)]
    out.append(("GW(R) ring axioms", _ring_axioms(ints, GwInt(1), GwInt(0))))
    out.append((
        "GW(R) rank and sign are homomorphisms",
        all(
            (a * b).rank == a.rank * b.rank and (a * b).sign == a.sign * b.sign
            and (a + b).sign == a.sign + b.sign
            for a in ints
            for b in ints
        ),
    ))
    h = GwInt(1, 1)
    out.append(("sign(m h) = 0, rank(m h) = 2m", all((m * h).sign == 0 and (m * h).rank == 2 * m for m in range(-20, 21))))
    return out


def random_matrix(rng: random.Random, ring, n: int) -> RingMatrix:
    if ring == ZZ:
        pick = lambda: rng.randint(-3, 3)  # noqa: E731
    else:
        pick = lambda: GwFq(ring, rng.randint(-3, 3), rng.randint(0, 1))  # noqa: E731
    return RingMatrix(ring, [[pick() for _ in range(n)] for _ in range(n)])


def newton_identity_holds(A: RingMatrix, order: int) -> bool:
    return dlog_poly(det_one_minus_tA(A), order) == newton_trace_series(A, order)


def suite_newton(qs: Iterable[int], order: int, count: int = 50) -> Result:
    rng = random.Random(SEED + 1)
    rings = [ZZ] + [FqTag.of(q) for q in qs]
    out: Result = []
    for ring in rings:
        ok = all(newton_identity_holds(random_matrix(rng, ring, rng.randint(1, 4)), order) for _ in range(count))
        out.append((f"Newton identity over {ring!r}", ok))
    return out


def catalog(F: FqTag) -> dict[str, V.PointCountSource]:
    P = lambda n: V.projective_space(F, n)  # noqa: E731
    out = {f"P^{n}": P(n) for n in range(1, 6)}
    out["G(1,3)"] = V.grassmannian(F, 1, 3)
    out["P^1 x P^1"] = V.product(P(1), P(1))
    out["P^1 x P^2"] = V.product(P(1), P(2))
    out["G(1,3) x P^1"] = V.product(V.grassmannian(F, 1, 3), P(1))
    return out


def suite_pipeline(qs: Iterable[int], order: int) -> Result:
    out: Result = []
    for q in qs:
        F = FqTag.of(q)
        for name, X in catalog(F).items():
            rep = dlog_zeta(X, order)
            _, closed = cellular_closed_form(F, X.cells, order)
            out.append((f"F_{q} {name}: pipeline = cellular closed form", rep.enriched == closed))
            out.append((f"F_{q} {name}: disc two paths", disc_series_direct(X, order) == rep.disc_series))
            mats = frobenius_cell_matrices(F, X.cells)
            out.append((
                f"F_{q} {name}: cellular trace formula",
                all(cellular_trace(F, mats, m) == enriched_trace_Nm(X, m) for m in range(1, min(order, 8) + 1)),
            ))
        if F.odd:
            R = V.weil_restriction_p1(F)
            out.append((
                f"F_{q} Res P^1: pipeline = closed form",
                dlog_zeta(R, order).enriched == res_p1_closed_form(F, order)[1],
            ))
            for n in (1, 3, 5):
                cf, _ = cellular_closed_form(F, V.projective_space(F, n).cells, order)
                out.append((f"F_{q} P^{n}: functional equation", functional_equation_check(cf, n, F, order)))
    return out


def suite_fit(qs: Iterable[int], order: int) -> Result:
    out: Result = []
    for q in qs:
        F = FqTag.of(q)
        forms = {name: cellular_closed_form(F, X.cells, order) for name, X in catalog(F).items()}
        if F.odd:
            forms["Res P^1"] = res_p1_closed_form(F, order)
        for name, (cf, series) in forms.items():
            try:
                ok = fit_dlog_rational(series).expand(order) == series
            except FitError:
                ok = False
            out.append((f"F_{q} {name}: fit round trip", ok))
    return out


def suite_motivic(qs: Iterable[int], order: int) -> Result:
    out: Result = []
    order = min(order, 8)
    for q in qs:
        F = FqTag.of(q)
        P = lambda n: V.projective_space(F, n)  # noqa: E731
        pairs = [
            (P(1), P(1)),
            (P(1), P(2)),
            (V.grassmannian(F, 1, 3), P(1)),
            (P(2), V.weil_restriction_p1(F)),
            (V.spec_field_extension(F, 2), P(1)),
            (V.weil_restriction_p1(F), V.weil_restriction_p1(F)),
        ]
        out.append((
            f"F_{q} N_m multiplicative",
            all(check_multiplicative(x, y, order) for x, y in pairs),
        ))
        out.append((
            f"F_{q} N_m cut and paste P^n = P^(n-1) + A^n",
            all(check_cut_and_paste(P(n), P(n - 1), V.affine_space(F, n), order) for n in range(1, 5)),
        ))
    return out


def suite_signs(qs: Iterable[int], order: int) -> Result:
    out: Result = []
    for q in qs:
        if q % 4 != 3:
            continue
        F = FqTag.of(q)
        P1 = V.projective_space(F, 1)
        quad = V.product(P1, P1)
        res = V.weil_restriction_p1(F)
        torus = sign_series_from_topology(TORUS, order)
        sphere = sign_series_from_topology(SPHERE, order)
        out.append((f"F_{q} sign of P^1 x P^1 = 0 = torus", dlog_zeta(quad, order).sign_series == torus == torus.map(lambda _: 0, ZZ)))
        out.append((f"F_{q} sign of Res P^1 = 2 = sphere", dlog_zeta(res, order).sign_series == sphere == sphere.map(lambda _: 2, ZZ)))
        out.append((f"F_{q} lift of P^1 x P^1 reduces to pipeline", sign_check_via_reduction(quad.lift, quad, order)))
        out.append((f"F_{q} lift of Res P^1 reduces to pipeline", sign_check_via_reduction(res.lift, res, order)))
    if not out:
        out.append(("signs: no q = 3 mod 4 requested (skipped)", True))
    return out


SUITES: dict[str, Callable[[Iterable[int], int], Result]] = {
    "rings": suite_rings,
    "newton": suite_newton,
    "motivic": suite_motivic,
    "signs": suite_signs,
    "pipeline": suite_pipeline,
    "fit": suite_fit,
}


def run(suite: str, qs: list[int], order: int) -> Result:
    if suite == "all":
        return [r for fn in SUITES.values() for r in fn(qs, order)]
    return SUITES[suite](qs, order)
