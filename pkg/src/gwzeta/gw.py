"""Grothendieck-Witt rings of finite fields and of the reals.

``GW(F_q)`` is stored canonically as ``(rank, disc)`` with ``disc`` the square
class bit: the element is ``(rank - disc)<1> + disc<u>`` for a fixed non-square
``u``. ``u`` itself is never stored, so nothing here depends on its choice.

``GW(R) = GW(Z)`` is free on ``<1>`` and ``<-1>`` and is stored by the two
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, legendre, prime_power


class DegenerateFormError(ValueError):
    pass


class IntegerRing:
    """The integers as a coefficient ring for :mod:`gwzeta.series`."""

    zero = 0
    one = 1

    def coerce(self, x: int) -> int:
        return int(x)

    def __repr__(self) -> str:
        return "ZZ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("ZZ")


ZZ = IntegerRing()


@dataclass(frozen=True)
class FqTag:
    """The finite field with ``q = p**k`` elements.

    Also serves as the coefficient ring ``GW(F_q)`` (``zero``, ``one``,
    ``coerce``) for series and matrices.
    """

    p: int
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("field exponent must be positive")
        if self.p >= 2**31 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not a supported prime")
        if self.p ** self.k >= 2**31:
            raise ValueError("field size must be below 2**31")

    @classmethod
    def of(cls, q: int) -> FqTag:
        p, k = prime_power(q)
        return cls(p, k)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def odd(self) -> bool:
        return self.p != 2

    @property
    def zero(self) -> GwFq:
        return GwFq(self, 0, 0)

    @property
    def one(self) -> GwFq:
        return GwFq(self, 1, 0)

    def coerce(self, x) -> GwFq:
        if isinstance(x, GwFq):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        return GwFq(self, int(x), 0)

    def is_square(self, a: int) -> bool:
        """Quadratic character of a prime-field integer inside F_q."""
        if a % self.p == 0:
            raise DegenerateFormError("degenerate form: <0> is not a unit form")
        if not self.odd or self.k % 2 == 0:
            return True
        return legendre(a, self.p) == 1

    def __repr__(self) -> str:
        return f"F_{self.q}"


@dataclass(frozen=True)
class GwFq:
    field: FqTag
    n: int
    s: int = 0

    def __post_init__(self):
        s = self.s % 2 if self.field.odd else 0
        object.__setattr__(self, "s", s)

    def _other(self, other) -> GwFq | None:
        if isinstance(other, GwFq):
            if other.field != self.field:
                raise ValueError(f"mismatched fields {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return GwFq(self.field, other, 0)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GwFq(self.field, self.n + o.n, self.s ^ o.s)

    __radd__ = __add__

    def __neg__(self) -> GwFq:
        return GwFq(self.field, -self.n, self.s)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GwFq(self.field, self.n * o.n, self.n * o.s + self.s * o.n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GwFq:
        if e < 0:
            raise ValueError("negative powers are not defined in GW")
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def rank(self) -> int:
        return self.n

    @property
    def disc(self) -> int:
        return self.s

    def __str__(self) -> str:
        return format_gw(self)


def format_gw(x: GwFq) -> str:
    """Render as ``r<1> + s<u>`` with ``s`` in {0, 1}."""
    r = x.n - x.s
    if x.s == 0:
        return "0" if r == 0 else f"{r}⟨1⟩"
    return "1⟨u⟩" if r == 0 else f"{r}⟨1⟩ + 1⟨u⟩"


def rank_fq(x: GwFq) -> int:
    return x.n


def disc_fq(x: GwFq) -> int:
    return x.s


def gw_gen(field: FqTag, a: int) -> GwFq:
    """The rank one form ``<a>`` for a prime-field integer ``a``."""
    return GwFq(field, 1, 0 if field.is_square(a) else 1)


def gw_u(field: FqTag) -> GwFq:
    """``<u>`` for the fixed non-square ``u`` (equals ``<1>`` in characteristic 2)."""
    return GwFq(field, 1, 1)


def gw_minus_one(field: FqTag) -> GwFq:
    return gw_gen(field, -1)


def n_eps(field: FqTag, n: int) -> GwFq:
    """``<1> + <-1> + <1> + ...`` with ``n`` terms."""
    if n < 0:
        raise ValueError("n_eps needs n >= 0")
    return (n + 1) // 2 * field.one + n // 2 * gw_minus_one(field)


def q_eps(field: FqTag) -> GwFq:
    return n_eps(field, field.q)


def hyperbolic(field: FqTag) -> GwFq:
    return n_eps(field, 2)


def transfer(field: FqTag, i: int) -> GwFq:
    """Transfer of ``<1>`` along F_{q^i}/F_q."""
    if i < 1:
        raise ValueError("transfer degree must be positive")
    return GwFq(field, i, 1 if i % 2 == 0 else 0)


def gw_add(x: GwFq, y: GwFq) -> GwFq:
    return x + y


def gw_mul(x: GwFq, y: GwFq) -> GwFq:
    return x * y


# GW(R) = GW(Z)


class GwIntRing:
    @property
    def zero(self) -> GwInt:
        return GwInt(0, 0)

    @property
    def one(self) -> GwInt:
        return GwInt(1, 0)

    def coerce(self, x) -> GwInt:
        if isinstance(x, GwInt):
            return x
        return GwInt(int(x), 0)

    def __repr__(self) -> str:
        return "GW(R)"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GwIntRing)

    def __hash__(self) -> int:
        return hash("GW(R)")


GW_INT = GwIntRing()


@dataclass(frozen=True)
class GwInt:
    """``c1<1> + cm1<-1>`` in GW(R)."""

    c1: int
    cm1: int = 0

    @staticmethod
    def _other(other) -> GwInt | None:
        if isinstance(other, GwInt):
            return other
        if isinstance(other, int):
            return GwInt(other, 0)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GwInt(self.c1 + o.c1, self.cm1 + o.cm1)

    __radd__ = __add__

    def __neg__(self) -> GwInt:
        return GwInt(-self.c1, -self.cm1)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GwInt(self.c1 * o.c1 + self.cm1 * o.cm1, self.c1 * o.cm1 + self.cm1 * o.c1)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GwInt:
        if e < 0:
            raise ValueError("negative powers are not defined in GW")
        result, base = GwInt(1, 0), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def rank(self) -> int:
        return self.c1 + self.cm1

    @property
    def sign(self) -> int:
        return self.c1 - self.cm1

    def __str__(self) -> str:
        return f"{self.c1}⟨1⟩ + {self.cm1}⟨−1⟩"


MINUS_ONE_INT = GwInt(0, 1)


def gwint_add(x: GwInt, y: GwInt) -> GwInt:
    return x + y


def gwint_mul(x: GwInt, y: GwInt) -> GwInt:
    return x * y


def rank_int(x: GwInt) -> int:
    return x.rank


def sign_int(x: GwInt) -> int:
    return x.sign


def n_eps_int(n: int) -> GwInt:
    if n < 0:
        raise ValueError("n_eps needs n >= 0")
    return GwInt((n + 1) // 2, n // 2)


def reduce_mod_p(x: GwInt, field: FqTag) -> GwFq:
    """Pull back along Spec F_q -> Spec Z: ``<1> -> <1>``, ``<-1> -> <-1>_q``."""
    return x.c1 * field.one + x.cm1 * gw_minus_one(field)
