"""Fillings of order ideals by 0 and +, their values, and the PDS test.

A 0 keeps the generator of its box and a + replaces it by 1.  A filling is
stored as the bitmask of its + boxes (bit ``k`` is poset box ``k``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .posets import Box, OrderIdeal, PosetQ, build_poset, is_linear_extension
from .weyl import WeylElement

ZERO = "0"
PLUS = "+"


@dataclass(frozen=True, eq=False)
class OPlusDiagram:
    ideal: OrderIdeal
    plus: int

    def __post_init__(self) -> None:
        if self.plus & ~self.ideal.mask:
            raise ValueError("filling has + outside its shape")

    @property
    def poset(self) -> PosetQ:
        return self.ideal.poset

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OPlusDiagram) and self.ideal == other.ideal and self.plus == other.plus

    def __hash__(self) -> int:
        return hash((self.ideal, self.plus))

    def __getitem__(self, box: Box | tuple[int, int]) -> str:
        pos = box.pos if isinstance(box, Box) else box
        k = self.poset.index.get(pos)
        if k is None or not self.ideal.mask >> k & 1:
            raise KeyError(pos)
        return PLUS if self.plus >> k & 1 else ZERO

    def get(self, pos: tuple[int, int]) -> str | None:
        k = self.poset.index.get(pos)
        if k is None or not self.ideal.mask >> k & 1:
            return None
        return PLUS if self.plus >> k & 1 else ZERO

    @property
    def filling(self) -> dict[Box, str]:
        return {b: self[b] for b in self.ideal.boxes}

    @property
    def n_plus(self) -> int:
        return self.plus.bit_count()

    @property
    def zeros(self) -> int:
        return self.ideal.mask & ~self.plus

    def with_symbol(self, pos: tuple[int, int], symbol: str) -> OPlusDiagram:
        k = self.poset.index[pos]
        plus = self.plus | 1 << k if symbol == PLUS else self.plus & ~(1 << k)
        return OPlusDiagram(self.ideal, plus)

    def __repr__(self) -> str:
        return f"OPlusDiagram({self.poset.name}, {inline(self)!r})"


def from_filling(ideal: OrderIdeal, filling: Mapping[Box | tuple[int, int], str]) -> OPlusDiagram:
    p = ideal.poset
    plus = 0
    seen = 0
    for key, sym in filling.items():
        pos = key.pos if isinstance(key, Box) else key
        k = p.index.get(pos)
        if k is None or not ideal.mask >> k & 1:
            raise ValueError(f"box {pos} is not in the shape")
        if sym not in (ZERO, PLUS):
            raise ValueError(f"invalid symbol {sym!r} at box {pos}")
        seen |= 1 << k
        if sym == PLUS:
            plus |= 1 << k
    if seen != ideal.mask:
        raise ValueError("filling does not cover the whole shape")
    return OPlusDiagram(ideal, plus)


def all_zero(ideal: OrderIdeal) -> OPlusDiagram:
    return OPlusDiagram(ideal, 0)


def all_plus(ideal: OrderIdeal) -> OPlusDiagram:
    return OPlusDiagram(ideal, ideal.mask)


def fillings(ideal: OrderIdeal) -> Iterator[OPlusDiagram]:
    """All ``2^|ideal|`` fillings."""
    idx = ideal.indices
    for m in range(1 << len(idx)):
        plus = 0
        for t, k in enumerate(idx):
            if m >> t & 1:
                plus |= 1 << k
        yield OPlusDiagram(ideal, plus)


# --- subexpressions -----------------------------------------------------------


@dataclass(frozen=True)
class Subexpression:
    word: tuple[int, ...]
    kept: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.word) != len(self.kept):
            raise ValueError("kept flags must match the word length")

    def __str__(self) -> str:
        return " ".join(f"s{i}" if k else "1" for i, k in zip(self.word, self.kept)) or "1"


def _order(d: OPlusDiagram, e: Sequence[Box] | None) -> list[int]:
    """Box indices in reading order."""
    if e is None:
        return list(d.ideal.indices)
    if not is_linear_extension(d.ideal, e):
        raise ValueError("reading order is not a linear extension of the shape")
    return [d.poset.index[b.pos] for b in e]


def to_subexpression(d: OPlusDiagram, e: Sequence[Box] | None = None) -> Subexpression:
    order = _order(d, e)[::-1]
    labels = [d.poset.boxes[k].label for k in order]
    kept = [not d.plus >> k & 1 for k in order]
    return Subexpression(tuple(labels), tuple(kept))


def value(d: OPlusDiagram, e: Sequence[Box] | None = None) -> WeylElement:
    data = d.poset.data
    refl = data.reflections
    boxes = d.poset.boxes
    p = tuple(range(len(data.roots)))
    for k in reversed(_order(d, e)):
        if not d.plus >> k & 1:
            r = refl[boxes[k].label - 1]
            p = tuple(p[m] for m in r)
    return WeylElement(data, p)


def is_pds(d: OPlusDiagram, e: Sequence[Box] | None = None) -> bool:
    """Every prefix of the subexpression must be lengthened by the next letter."""
    data = d.poset.data
    n = data.n_positive
    refl = data.reflections
    simple = data.simple_index
    boxes = d.poset.boxes
    p = tuple(range(len(data.roots)))
    for k in reversed(_order(d, e)):
        i = boxes[k].label - 1
        if p[simple[i]] >= n:
            return False
        if not d.plus >> k & 1:
            p = tuple(p[m] for m in refl[i])
    return True


def pds_filling(ideal: OrderIdeal, x: WeylElement) -> OPlusDiagram:
    """The unique PDS filling of ``ideal`` with value ``x`` (greedy from the right)."""
    data = ideal.poset.data
    n = data.n_positive
    refl = data.reflections
    simple = data.simple_index
    boxes = ideal.poset.boxes
    p = x.perm
    plus = 0
    for k in ideal.indices:
        i = boxes[k].label - 1
        if p[simple[i]] >= n:
            p = tuple(p[m] for m in refl[i])
        else:
            plus |= 1 << k
    if p != tuple(range(len(p))):
        raise ValueError("element is not below the shape's element in Bruhat order")
    return OPlusDiagram(ideal, plus)


def leify_direct(d: OPlusDiagram) -> OPlusDiagram:
    """The Le-diagram of the same shape and value."""
    return pds_filling(d.ideal, value(d))


def le_diagrams(ideal: OrderIdeal) -> Iterator[OPlusDiagram]:
    """All Le-diagrams of a shape, by depth-first search over prefixes."""
    data = ideal.poset.data
    n = data.n_positive
    refl = data.reflections
    simple = data.simple_index
    order = list(reversed(ideal.indices))
    labels = [ideal.poset.boxes[k].label - 1 for k in order]
    m = len(order)

    def rec(t: int, p: tuple[int, ...], plus: int) -> Iterator[int]:
        if t == m:
            yield plus
            return
        i = labels[t]
        if p[simple[i]] >= n:
            return
        yield from rec(t + 1, tuple(p[x] for x in refl[i]), plus)
        yield from rec(t + 1, p, plus | 1 << order[t])

    for plus in rec(0, tuple(range(len(data.roots))), 0):
        yield OPlusDiagram(ideal, plus)


def le_count_by_plus(ideal: OrderIdeal) -> list[int]:
    """Coefficients of the Le-diagram count graded by number of + boxes."""
    out = [0] * (len(ideal) + 1)
    for d in le_diagrams(ideal):
        out[d.n_plus] += 1
    return out


# --- text formats -------------------------------------------------------------


def _row_boxes(p: PosetQ, row: int) -> list[Box]:
    return sorted((b for b in p.boxes if b.row == row), key=lambda b: b.col)


def render_ascii(d: OPlusDiagram, french: bool = False) -> str:
    """Grid picture: ``0``/``+`` in the shape, ``.`` for other poset boxes."""
    p = d.poset
    lines = []
    for r in p.rows:
        chars = []
        for c in p.cols:
            k = p.index.get((r, c))
            if k is None:
                chars.append(" ")
            elif d.ideal.mask >> k & 1:
                chars.append(PLUS if d.plus >> k & 1 else ZERO)
            else:
                chars.append(".")
        lines.append("".join(chars).rstrip())
    if french:
        lines.reverse()
    return "\n".join(lines)


def inline(d: OPlusDiagram) -> str:
    """Rows top to bottom separated by ``/``; only the shape's boxes appear."""
    p = d.poset
    rows = []
    for r in p.rows:
        rows.append("".join(d[b] for b in _row_boxes(p, r) if b in d.ideal))
    return "/".join(rows)


def _from_rows(p: PosetQ, rows: Sequence[str]) -> OPlusDiagram:
    grid_rows = list(p.rows)
    if len(rows) != len(grid_rows):
        raise ValueError(f"expected {len(grid_rows)} rows for {p.name}, got {len(rows)}")
    mask = 0
    plus = 0
    for r, text in zip(grid_rows, rows):
        boxes = _row_boxes(p, r)
        if len(text) > len(boxes):
            raise ValueError(f"row {r} has {len(text)} entries but only {len(boxes)} boxes")
        for b, ch in zip(boxes, text):
            if ch not in (ZERO, PLUS):
                raise ValueError(f"invalid symbol {ch!r} at box ({b.row},{b.col})")
            k = p.index[b.pos]
            mask |= 1 << k
            if ch == PLUS:
                plus |= 1 << k
    return OPlusDiagram(OrderIdeal(p, mask), plus)


def parse_inline(p: PosetQ, text: str) -> OPlusDiagram:
    """Parse ``"+../00/+"``-style input; trailing dots mark boxes outside the shape."""
    rows = [seg.rstrip(".· ") for seg in text.split("/")]
    return _from_rows(p, rows)


def to_json(d: OPlusDiagram) -> dict:
    p = d.poset
    rows = []
    for r in p.rows:
        rows.append("".join(d[b] for b in _row_boxes(p, r) if b in d.ideal))
    return {"poset": p.to_json(), "ideal_rows": [len(s) for s in rows], "filling": rows}


def from_json(doc: dict | str) -> OPlusDiagram:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        pj = doc["poset"]
        p = build_poset(pj["type"], pj.get("n"), pj["j"])
        rows = list(doc["filling"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram document: missing {exc}") from exc
    lengths = doc.get("ideal_rows")
    if lengths is not None:
        grid_rows = list(p.rows)
        for r, (text, length) in enumerate(zip(rows, lengths)):
            if len(text) != length:
                boxes = _row_boxes(p, grid_rows[r])
                at = boxes[min(len(text), length, len(boxes) - 1)] if boxes else None
                where = f" at box ({at.row},{at.col})" if at else ""
                raise ValueError(f"row {grid_rows[r]}: filling has {len(text)} entries, ideal_rows says {length}{where}")
    return _from_rows(p, rows)
