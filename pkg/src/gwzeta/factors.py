"""Closed forms of dlog-rational series with linear factors.

A factor ``(w, a, k)`` stands for ``w * k * d/dt log 1/(1 - a t)``, whose
``t**(m-1)`` coefficient is ``w * k * a**m``. Expansion is the only place this
sign convention lives.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .series import Series


@dataclass(frozen=True)
class Factor:
    weight: object
    pole: object
    mult: int = 1


class FactorList:
    __slots__ = ("ring", "factors")

    def __init__(self, ring, factors: Iterable = ()):
        fs = []
        for f in factors:
            if not isinstance(f, Factor):
                f = Factor(*f)
            fs.append(Factor(ring.coerce(f.weight), ring.coerce(f.pole), int(f.mult)))
        self.ring = ring
        self.factors = tuple(fs)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def expand(self, order: int) -> Series:
        ring = self.ring
        out = [ring.zero] * order
        for f in self.factors:
            c = f.weight * f.mult
            power = f.pole
            for m in range(order):
                out[m] = out[m] + c * power
                power = power * f.pole
        return Series(ring, out)

    def normalized(self) -> dict:
        """``{(weight, pole): total multiplicity}`` with zero entries dropped."""
        acc: Counter = Counter()
        for f in self.factors:
            acc[(f.weight, f.pole)] += f.mult
        return {key: k for key, k in acc.items() if k}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactorList):
            return NotImplemented
        return self.ring == other.ring and self.normalized() == other.normalized()

    def __hash__(self):
        return hash((self.ring, frozenset(self.normalized().items())))

    def __add__(self, other: FactorList) -> FactorList:
        if other.ring != self.ring:
            raise ValueError("factor lists over different rings")
        return FactorList(self.ring, self.factors + other.factors)

    def hadamard(self, other: FactorList) -> FactorList:
        """Factor list whose expansion is the coefficientwise product."""
        if other.ring != self.ring:
            raise ValueError("factor lists over different rings")
        return FactorList(
            self.ring,
            [
                Factor(a.weight * b.weight, a.pole * b.pole, a.mult * b.mult)
                for a in self.factors
                for b in other.factors
            ],
        )

    def map(self, fn, ring) -> FactorList:
        return FactorList(ring, [Factor(fn(f.weight), fn(f.pole), f.mult) for f in self.factors])

    def __repr__(self) -> str:
        body = ", ".join(f"({f.weight}, {f.pole}, {f.mult})" for f in self.factors)
        return f"FactorList({self.ring!r}, [{body}])"
