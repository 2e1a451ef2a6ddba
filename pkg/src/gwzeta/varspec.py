"""Textual variety specifications, e.g. ``prod(Pn(1),Gr(1,3))`` or ``table(counts.json)``.

Grammar (LL(1))::

    spec  := NAME [ "(" args ")" ]
    args  := int ("," int)*  |  spec "," spec  |  PATH

Count tables and Weil data are JSON documents ``{"q": 7, "counts": [6, 60]}``
or ``{"q": 7, "weil": [[1, -1], [1, -2, 7], [1, -7]]}`` holding exact integers;
an optional ``"proper"`` flag (default true) marks table sources.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import varieties as V
from .gw import FqTag


class VarietySpecError(ValueError):
    def __init__(self, pos: int, expected: str, found: str):
        self.pos = pos
        super().__init__(f"position {pos}: expected {expected}, found {found}")


class DataFileError(ValueError):
    pass


# name -> argument shape
_SHAPES = {
    "Pn": ("int",),
    "A": ("int",),
    "Gr": ("int", "int"),
    "ell": ("int", "int"),
    "prod": ("spec", "spec"),
    "disj": ("spec", "spec"),
    "table": ("path",),
    "weil": ("path",),
    "P1xP1": (),
    "resP1": (),
    "pt": (),
}


@dataclass(frozen=True)
class Node:
    name: str
    args: tuple
    text: str


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _found(self) -> str:
        c = self._peek()
        return repr(c) if c else "end of input"

    def _expect(self, ch: str):
        if self._peek() != ch:
            raise VarietySpecError(self.pos, repr(ch), self._found())
        self.pos += 1

    def _name(self) -> str:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        name = self.text[start : self.pos]
        if not name or not name[0].isalpha():
            self.pos = start
            raise VarietySpecError(start, "one of " + ", ".join(sorted(_SHAPES)), self._found())
        if name not in _SHAPES:
            raise VarietySpecError(start, "one of " + ", ".join(sorted(_SHAPES)), repr(name))
        return name

    def _int(self) -> int:
        self._skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start : self.pos]
        if token in ("", "+", "-"):
            self.pos = start
            raise VarietySpecError(start, "integer", self._found())
        return int(token)

    def _path(self) -> str:
        self._skip()
        start, depth = self.pos, 0
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        path = self.text[start : self.pos].strip()
        if not path:
            raise VarietySpecError(start, "file path", self._found())
        return path

    def spec(self) -> Node:
        self._skip()
        start = self.pos
        name = self._name()
        shape = _SHAPES[name]
        args: list = []
        if shape:
            self._expect("(")
            for k, kind in enumerate(shape):
                if k:
                    self._expect(",")
                args.append({"int": self._int, "spec": self.spec, "path": self._path}[kind]())
            self._expect(")")
        return Node(name, tuple(args), self.text[start : self.pos].strip())

    def parse(self) -> Node:
        node = self.spec()
        if self._peek():
            raise VarietySpecError(self.pos, "end of input", self._found())
        return node


def parse(text: str) -> Node:
    return _Parser(text).parse()


def _reject_float(token: str):
    raise DataFileError(f"non-integer number {token!r} in data file")


def load_data_file(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise DataFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DataFileError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("q"), int) or isinstance(doc.get("q"), bool):
        raise DataFileError(f"{path}: expected an object with integer 'q'")
    return doc


def _ints(seq, what: str) -> list[int]:
    if not isinstance(seq, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in seq):
        raise DataFileError(f"{what} must be a list of integers")
    return seq


def source_from_document(doc: dict, label: str = "data") -> V.PointCountSource:
    field = FqTag.of(doc["q"])
    if "counts" in doc:
        proper = doc.get("proper", True)
        if not isinstance(proper, bool):
            raise DataFileError("'proper' must be a boolean")
        return V.from_table(field, _ints(doc["counts"], "counts"), proper=proper, label=label)
    if "weil" in doc:
        if not isinstance(doc["weil"], list):
            raise DataFileError("'weil' must be a list of coefficient lists")
        polys = tuple(tuple(_ints(p, "Weil polynomial")) for p in doc["weil"])
        return V.from_weil_data(V.WeilData(field, polys), label=label)
    raise DataFileError("data file needs 'counts' or 'weil'")


def file_fields(node: Node) -> set[int]:
    """The ``q`` values declared by every data file referenced in ``node``."""
    if node.name in ("table", "weil"):
        return {load_data_file(node.args[0])["q"]}
    out: set[int] = set()
    for a in node.args:
        if isinstance(a, Node):
            out |= file_fields(a)
    return out


def build(node: Node, field: FqTag) -> V.PointCountSource:
    name, args = node.name, node.args
    if name == "Pn":
        return V.projective_space(field, args[0])
    if name == "A":
        return V.affine_space(field, args[0])
    if name == "Gr":
        return V.grassmannian(field, *args)
    if name == "ell":
        return V.elliptic_curve(field, *args)
    if name == "P1xP1":
        return V.product(V.projective_space(field, 1), V.projective_space(field, 1))
    if name == "resP1":
        return V.weil_restriction_p1(field)
    if name == "pt":
        return V.point(field)
    if name == "prod":
        return V.product(build(args[0], field), build(args[1], field))
    if name == "disj":
        return V.disjoint_union(build(args[0], field), build(args[1], field))
    if name in ("table", "weil"):
        doc = load_data_file(args[0])
        if doc["q"] != field.q:
            raise DataFileError(f"{args[0]} is over F_{doc['q']}, not F_{field.q}")
        if name == "table" and "counts" not in doc:
            raise DataFileError(f"{args[0]} has no 'counts'")
        if name == "weil" and "weil" not in doc:
            raise DataFileError(f"{args[0]} has no 'weil'")
        return source_from_document(doc, label=node.text)
    raise AssertionError(name)
