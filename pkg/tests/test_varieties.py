import itertools
import warnings

import pytest
from hypothesis import given, strategies as st

from gwzeta import varieties as V
from gwzeta.gw import FqTag


def subspaces(p, n, k):
    """Oracle: distinct spans of k-tuples of vectors in F_p^n with dimension k."""
    vectors = list(itertools.product(range(p), repeat=n))
    seen = set()
    for basis in itertools.product(vectors, repeat=k):
        span = frozenset(
            tuple(sum(c * v[j] for c, v in zip(coeffs, basis)) % p for j in range(n))
            for coeffs in itertools.product(range(p), repeat=k)
        )
        if len(span) == p**k:
            seen.add(span)
    return len(seen)


def partitions_in_box(rows, cols):
    """Oracle: partition counts by size for partitions fitting in a rows x cols box."""
    out = [0] * (rows * cols + 1)
    for parts in itertools.combinations_with_replacement(range(cols + 1), rows):
        out[sum(parts)] += 1
    return tuple(out)


class Fp2:
    """F_{p^2} = F_p[sqrt(n)] for a fixed non-residue n (oracle arithmetic only)."""

    def __init__(self, p):
        self.p = p
        self.n = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)

    def elements(self):
        return [(a, b) for a in range(self.p) for b in range(self.p)]

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def mul(self, x, y):
        p, n = self.p, self.n
        return ((x[0] * y[0] + n * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)


def elliptic_brute(p, A, B, m):
    if m == 1:
        return 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - A * x - B) % p == 0)
    assert m == 2
    K = Fp2(p)
    squares = {}
    for y in K.elements():
        s = K.mul(y, y)
        squares[s] = squares.get(s, 0) + 1
    total = 1
    for x in K.elements():
        rhs = K.add(K.add(K.mul(K.mul(x, x), x), K.mul((A % p, 0), x)), (B % p, 0))
        total += squares.get(rhs, 0)
    return total


@pytest.mark.parametrize("p", [2, 3])
def test_grassmannian_against_subspace_enumeration(p):
    G = V.grassmannian(FqTag.of(p), 1, 3)
    assert G.counts(1) == subspaces(p, 4, 2)
    assert subspaces(2, 4, 2) == 35


def test_grassmannian_cells():
    assert V.grassmannian(FqTag.of(3), 1, 3).cells.b == (1, 1, 2, 1, 1)
    with pytest.raises(ValueError):
        V.grassmannian(FqTag.of(3), 3, 3)


@pytest.mark.parametrize("r,n", [(0, 1), (0, 4), (1, 3), (1, 4), (2, 5), (1, 5)])
def test_gaussian_coeffs_count_partitions(r, n):
    assert V.gaussian_binomial_coeffs(n + 1, r + 1) == partitions_in_box(r + 1, n - r)


@given(st.integers(0, 3), st.integers(1, 3), st.sampled_from([2, 3, 4, 5, 7, 9]), st.integers(1, 4))
def test_gaussian_evaluation_matches_cells(r, extra, q, m):
    n = r + extra
    G = V.grassmannian(FqTag.of(q), r, n)
    assert G.counts(m) == sum(b * q ** (i * m) for i, b in enumerate(G.cells.b))


def test_projective_and_affine_examples():
    F3, F7, F5 = FqTag.of(3), FqTag.of(7), FqTag.of(5)
    assert V.projective_space(F3, 1).counts(1) == 4
    assert V.projective_space(F3, 2).counts(1) == 13
    assert V.projective_space(F7, 1).counts(2) == 50
    assert V.affine_space(F3, 1).counts(2) == 9
    assert V.affine_space(F3, 0).counts(4) == 1
    assert V.affine_space(F5, 2).counts(1) == 25
    assert V.affine_space(F3, 0).proper and not V.affine_space(F3, 1).proper
    with pytest.raises(ValueError):
        V.projective_space(F3, -1)


def test_counts_index_from_one():
    with pytest.raises(ValueError):
        V.point(FqTag.of(3)).counts(0)


def test_product_and_union():
    F3 = FqTag.of(3)
    P1 = V.projective_space(F3, 1)
    quad = V.product(P1, P1)
    assert quad.cells.b == (1, 2, 1)
    assert quad.counts(1) == 16
    line = V.disjoint_union(V.point(F3), V.affine_space(F3, 1))
    assert line.count_list(5) == P1.count_list(5)
    for n in range(1, 5):
        U = V.complement_pair(V.projective_space(F3, n), V.projective_space(F3, n - 1))
        assert U.count_list(5) == V.affine_space(F3, n).count_list(5)
    with pytest.raises(ValueError):
        V.product(P1, V.projective_space(FqTag.of(5), 1))


def test_complement_negative_count():
    F3 = FqTag.of(3)
    bad = V.complement_pair(V.point(F3), V.projective_space(F3, 1))
    with pytest.raises(V.NegativeCountError):
        bad.counts(1)


def test_res_p1_counts():
    assert V.weil_restriction_p1(FqTag.of(3)).counts(1) == 10
    assert V.weil_restriction_p1(FqTag.of(3)).counts(2) == 100
    assert V.weil_restriction_p1(FqTag.of(7)).counts(3) == 117650


def test_spec_field_extension():
    S = V.spec_field_extension(FqTag.of(3), 2)
    assert S.count_list(6) == [0, 2, 0, 2, 0, 2]


def test_elliptic_examples():
    E = V.elliptic_curve(FqTag.of(7), 2, 3)
    assert E.counts(1) == 6
    assert E.counts(2) == 60
    assert E.frobenius_trace == 2
    with pytest.raises(ValueError):
        V.elliptic_curve(FqTag.of(5), 0, 0)
    with pytest.raises(ValueError, match="even characteristic unsupported"):
        V.elliptic_curve(FqTag.of(2), 1, 1)


@pytest.mark.parametrize("p,A,B", [(7, 2, 3), (5, 1, 1), (11, 3, 7), (13, 2, 5), (3, 2, 1)])
def test_elliptic_counts_brute_force(p, A, B):
    E = V.elliptic_curve(FqTag.of(p), A, B)
    assert E.counts(1) == elliptic_brute(p, A, B, 1)
    assert E.counts(2) == elliptic_brute(p, A, B, 2)


@pytest.mark.parametrize("p,A,B", [(7, 2, 3), (11, 3, 7), (13, 2, 5), (17, 1, 4)])
def test_hasse_bound(p, A, B):
    E = V.elliptic_curve(FqTag.of(p), A, B)
    for m in range(1, 9):
        assert (E.counts(m) - p**m - 1) ** 2 <= 4 * p**m


def test_weil_data_examples():
    F7 = FqTag.of(7)
    E = V.from_weil_data(V.WeilData(F7, ((1, -1), (1, -2, 7), (1, -7))))
    assert E.count_list(8) == V.elliptic_curve(F7, 2, 3).count_list(8)
    F3 = FqTag.of(3)
    P1 = V.from_weil_data(V.WeilData(F3, ((1, -1), (1,), (1, -3))))
    assert P1.count_list(8) == V.projective_space(F3, 1).count_list(8)
    C = V.from_weil_data(V.WeilData(F3, ((1, -1), (1, 3), (1, -3))))
    assert C.counts(2) == 1


def test_weil_data_validation():
    F3 = FqTag.of(3)
    with pytest.raises(V.InconsistentWeilDataError):
        V.WeilData(F3, ((2, -1), (1, -3)))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        V.WeilData(F3, ((1, -2), (1,), (1, -3)))
    assert caught
    bad = V.from_weil_data(V.WeilData(F3, ((1, -1), (1, -9), (1, -3))))
    with pytest.raises(V.InconsistentWeilDataError):
        bad.counts(1)


def test_from_table():
    F7 = FqTag.of(7)
    T = V.from_table(F7, (6, 60))
    assert T.count_list(2) == [6, 60]
    with pytest.raises(V.InsufficientDataError, match="insufficient data"):
        T.counts(3)
    with pytest.raises(V.InsufficientDataError):
        V.from_table(F7, ())
    with pytest.raises(V.NegativeCountError):
        V.from_table(F7, (1, -1))


def test_cell_data():
    a, b = V.CellData((1, 1)), V.CellData((1, 1, 1))
    assert (a * b).b == (1, 2, 2, 1)
    assert (a + b).b == (2, 2, 1)
    with pytest.raises(ValueError):
        V.CellData(())
