import pytest
from hypothesis import given, strategies as st

from gwzeta.gw import (
    FqTag,
    GwFq,
    GwInt,
    DegenerateFormError,
    disc_fq,
    gw_gen,
    gw_u,
    hyperbolic,
    n_eps,
    n_eps_int,
    q_eps,
    rank_fq,
    reduce_mod_p,
    sign_int,
    transfer,
)


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


@pytest.mark.parametrize("q,a", [(7, 1), (7, 3), (3, -1), (5, -1), (11, 2), (13, 5)])
def test_gw_gen_matches_exhaustive_squaring(q, a):
    expected = 0 if a % q in squares_mod(q) else 1
    assert gw_gen(FqTag.of(q), a) == GwFq(FqTag.of(q), 1, expected)


def test_gw_gen_examples():
    assert gw_gen(FqTag.of(7), 1) == GwFq(FqTag.of(7), 1, 0)
    assert gw_gen(FqTag.of(7), 3) == GwFq(FqTag.of(7), 1, 1)
    assert gw_gen(FqTag.of(3), -1) == GwFq(FqTag.of(3), 1, 1)


def test_gw_gen_prime_power_fields():
    # every prime-field element is a square in an even degree extension
    assert gw_gen(FqTag.of(9), -1).disc == 0
    assert gw_gen(FqTag.of(27), -1).disc == 1
    assert gw_gen(FqTag.of(25), 2).disc == 0


def test_gw_gen_degenerate():
    with pytest.raises(DegenerateFormError, match="degenerate form"):
        gw_gen(FqTag.of(7), 14)


def test_field_validation():
    with pytest.raises(ValueError):
        FqTag.of(6)
    with pytest.raises(ValueError):
        FqTag(4)
    assert FqTag.of(9) == FqTag(3, 2)
    assert FqTag.of(2).odd is False


@pytest.mark.parametrize("q,n,expected", [(3, 3, (3, 1)), (5, 3, (3, 0)), (7, 0, (0, 0)), (3, 0, (0, 0))])
def test_n_eps(q, n, expected):
    F = FqTag.of(q)
    assert n_eps(F, n) == GwFq(F, *expected)
    # oracle: literal alternating sum of gw_gen
    acc = F.zero
    for i in range(n):
        acc = acc + gw_gen(F, (-1) ** i)
    assert n_eps(F, n) == acc


@pytest.mark.parametrize("q,expected", [(3, (3, 1)), (5, (5, 0)), (7, (7, 1))])
def test_q_eps(q, expected):
    F = FqTag.of(q)
    assert q_eps(F) == GwFq(F, *expected)


def test_transfer():
    F7 = FqTag.of(7)
    assert transfer(F7, 2) == GwFq(F7, 2, 1)
    assert transfer(F7, 3) == GwFq(F7, 3, 0)
    assert transfer(F7, 2) == 1 * F7.one + gw_u(F7)
    F2 = FqTag.of(2)
    assert transfer(F2, 2) == GwFq(F2, 2, 0)
    with pytest.raises(ValueError):
        transfer(F7, 0)


def test_hyperbolic():
    assert hyperbolic(FqTag.of(3)) == GwFq(FqTag.of(3), 2, 1)
    assert hyperbolic(FqTag.of(5)) == GwFq(FqTag.of(5), 2, 0)
    assert hyperbolic(FqTag.of(2)) == GwFq(FqTag.of(2), 2, 0)


def test_add_mul_examples():
    F = FqTag.of(3)
    u = gw_u(F)
    assert u * u == F.one
    assert q_eps(F) * q_eps(F) == GwFq(F, 9, 0)
    # hand expansion of (2<1> + <u>)^2 = 4<1> + 4<u> + <u>^2 = 5<1> + 4<u>
    assert (2 * F.one + u) ** 2 == 5 * F.one + 4 * u
    assert GwFq(F, 2, 1) + GwFq(F, 2, 1) == GwFq(F, 4, 0)


def test_mismatched_fields():
    with pytest.raises(ValueError):
        FqTag.of(3).one + FqTag.of(5).one


def test_rank_disc():
    F = FqTag.of(7)
    x = 59 * F.one + gw_u(F)
    assert (rank_fq(x), disc_fq(x)) == (60, 1)
    assert (rank_fq(F.zero), disc_fq(F.zero)) == (0, 0)
    assert disc_fq(GwFq(F, 2, 1) + GwFq(F, 2, 1)) == 0


def test_char_two_has_trivial_disc():
    F = FqTag.of(4)
    assert gw_u(F).disc == 0
    assert GwFq(F, 3, 1).disc == 0


def test_gwint():
    m = GwInt(0, 1)
    assert m * m == GwInt(1, 0)
    assert sign_int(GwInt(3, 1)) == 2
    assert (GwInt(1, 1) * GwInt(1, 1)).rank == 4
    assert GwInt(1, 1) * GwInt(1, 1) == GwInt(2, 2)


def test_reduce_mod_p():
    assert reduce_mod_p(GwInt(0, 1), FqTag.of(7)) == GwFq(FqTag.of(7), 1, 1)
    assert reduce_mod_p(GwInt(0, 1), FqTag.of(5)) == GwFq(FqTag.of(5), 1, 0)
    for q in (3, 5, 7, 9):
        assert reduce_mod_p(GwInt(1, 0), FqTag.of(q)) == FqTag.of(q).one
        assert reduce_mod_p(n_eps_int(q), FqTag.of(q)) == q_eps(FqTag.of(q))


fields = st.sampled_from([FqTag.of(q) for q in (3, 5, 7, 9, 11, 13)])
odd_fields = fields


@st.composite
def gw_triples(draw):
    F = draw(fields)
    el = st.builds(lambda n, s: GwFq(F, n, s), st.integers(-20, 20), st.integers(0, 1))
    return draw(el), draw(el), draw(el)


@given(gw_triples())
def test_gwfq_ring_axioms(t):
    a, b, c = t
    F = a.field
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a - a == F.zero


@given(gw_triples())
def test_rank_and_disc_homomorphisms(t):
    a, b, _ = t
    assert (a * b).rank == a.rank * b.rank
    assert (a + b).rank == a.rank + b.rank
    assert (a + b).disc == (a.disc + b.disc) % 2
    assert (a * b).disc == (a.rank * b.disc + a.disc * b.rank) % 2


def test_disc_not_multiplicative():
    F = FqTag.of(3)
    u = gw_u(F)
    # disc(<u>) * disc(<u>) = 1 but disc(<u>^2) = 0
    assert (u * u).disc != u.disc * u.disc


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_n_eps_multiplicative(q):
    F = FqTag.of(q)
    for n in range(13):
        for m in range(13):
            assert n_eps(F, n) * n_eps(F, m) == n_eps(F, n * m)


def test_transfer_rank():
    for q in (2, 3, 7):
        assert all(transfer(FqTag.of(q), i).rank == i for i in range(1, 25))


@given(
    st.sampled_from([3, 5, 7, 11, 13]),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
)
def test_reduce_is_ring_homomorphism(q, a, b):
    F = FqTag.of(q)
    x, y = GwInt(*a), GwInt(*b)
    assert reduce_mod_p(x + y, F) == reduce_mod_p(x, F) + reduce_mod_p(y, F)
    assert reduce_mod_p(x * y, F) == reduce_mod_p(x, F) * reduce_mod_p(y, F)


@given(odd_fields, st.integers(-10**6, 10**6))
def test_no_half_of_one_minus_u(F, n):
    target = F.one - gw_u(F)
    for s in (0, 1):
        assert GwFq(F, n, s) + GwFq(F, n, s) != target


@given(st.integers(-20, 20))
def test_hyperbolic_sign(m):
    h = GwInt(1, 1)
    assert (m * h).sign == 0 and (m * h).rank == 2 * m
