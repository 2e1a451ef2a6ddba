"""Text rendering of closed forms and JSON report encoding."""

from __future__ import annotations

import json

from .factors import FactorList
from .gw import FqTag, GwFq, format_gw, gw_minus_one, gw_u, q_eps

SCHEMA = "enriched-zeta/1"
_JSON_SAFE = 2**53

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _sup(n: int) -> str:
    return "" if n == 1 else str(n).translate(_SUP)


def describe_pole(field: FqTag, pole: GwFq) -> tuple[str, int, int] | None:
    """``(text, i, twist)`` when ``pole = +-<u>^twist q_eps^i``, else ``None``."""
    r = abs(pole.rank)
    i = 0
    while r > 1 and r % field.q == 0:
        r //= field.q
        i += 1
    if r != 1 or pole.rank == 0:
        return None
    sign = 1 if pole.rank > 0 else -1
    base = q_eps(field) ** i * sign
    twist = 0 if pole == base else 1
    core = "" if i == 0 else ("q_ε" if i == 1 else f"q_ε{_sup(i)}")
    if twist:
        core = "⟨u⟩" + core
    return core, i, twist


def describe_weight(field: FqTag, w: GwFq, i: int = 0, twist: int = 0) -> str:
    e, u = gw_minus_one(field), gw_u(field)
    labels = {(0, 0): "", (1, 0): "⟨−1⟩", (0, 1): "⟨u⟩", (1, 1): "⟨−u⟩"}
    prefs = [(i % 2, twist), (i % 2, 0), (0, 0), (1, 0), (0, 1), (1, 1)]
    for a, b in prefs:
        if w == e**a * u**b:
            return labels[(a, b)]
    return f"({format_gw(w)})"


def _linear(field: FqTag, pole: GwFq) -> tuple[str, int, int]:
    desc = describe_pole(field, pole)
    if desc is None:
        return f"(1 − ({format_gw(pole)})t)", 0, 0
    core, i, twist = desc
    sym = "+" if pole.rank < 0 else "−"
    return f"(1 {sym} {core}t)", i, twist


def format_factor_list(fl: FactorList) -> str:
    """Render as ``w d/dt log 1/(prod (1 - a t)^k) + ...`` grouped by weight."""
    field = fl.ring
    groups: dict[str, list[str]] = {}
    for f in fl:
        lin, i, twist = _linear(field, f.pole)
        label = describe_weight(field, f.weight, i, twist)
        groups.setdefault(label, []).append(lin + (_sup(f.mult) if f.mult != 1 else ""))
    parts = []
    for label, lins in groups.items():
        denom = "".join(lins) if len(lins) > 1 else lins[0]
        prefix = f"{label} " if label else ""
        parts.append(f"{prefix}d/dt log 1/({denom})" if len(lins) > 1 else f"{prefix}d/dt log 1/{denom}")
    return " + ".join(parts) if parts else "0"


def json_int(n: int):
    return n if -_JSON_SAFE < n < _JSON_SAFE else str(n)


def gw_json(x: GwFq) -> dict:
    return {"rank": json_int(x.rank), "disc": x.disc}


def factor_list_json(fl: FactorList) -> list[dict]:
    return [
        {"weight": gw_json(f.weight), "pole": gw_json(f.pole), "mult": json_int(f.mult)}
        for f in fl
    ]


def dumps(report: dict) -> str:
    """Canonical serialization: sorted keys, no floats, trailing newline."""
    return json.dumps(report, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
