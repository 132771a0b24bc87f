"""Cell labels, decorated permutations and the maps between them.

Type A pairs live in ``(A_{n-1}, j)`` and permutations are one-line words.
Type B pairs live in ``(B_n, n)``; their elements are shown as signed
windows through ``iota_embed``.  Every type B map goes through the double:
reflect the staircase across its diagonal into the ``n x n`` square of
``(A_{2n-1}, n)``, whose positions ``1..2n`` stand for ``-n..-1, 1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import weyl
from .diagrams import PLUS, OPlusDiagram, is_pds, le_diagrams, pds_filling, value
from .posets import OrderIdeal, PosetQ, build_poset
from .weyl import SignedPermutation, WeylElement

CW = "cw"
CCW = "ccw"


@dataclass(frozen=True)
class DecoratedPermutation:
    """``kind`` is ``"A"`` (one-line on ``1..n``) or ``"B"`` (signed window).

    ``clockwise`` holds the fixed letters decorated clockwise; every other
    fixed letter is counterclockwise.
    """

    kind: str
    perm: tuple[int, ...]
    clockwise: frozenset[int]

    def __post_init__(self) -> None:
        if self.kind == "A":
            if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
                raise ValueError(f"not a permutation: {self.perm}")
        elif self.kind == "B":
            SignedPermutation(self.perm)
            for i in self.fixed_points():
                if i > 0 and (i in self.clockwise) == (-i in self.clockwise):
                    raise ValueError(f"fixed points {i} and {-i} need opposite decorations")
        else:
            raise ValueError("kind must be 'A' or 'B'")
        if not self.clockwise <= self.fixed_points():
            raise ValueError("decorations must sit on fixed points")

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        if self.kind == "A":
            return self.perm[i - 1]
        return self.perm[i - 1] if i > 0 else -self.perm[-i - 1]

    def fixed_points(self) -> frozenset[int]:
        if self.kind == "A":
            return frozenset(i for i, a in enumerate(self.perm, 1) if a == i)
        return frozenset(s * i for i, a in enumerate(self.perm, 1) if a == i for s in (1, -1))

    def decoration(self, i: int) -> str:
        if i not in self.fixed_points():
            raise KeyError(i)
        return CW if i in self.clockwise else CCW

    def nonexcedances(self) -> frozenset[int]:
        """Type A positions ``i`` with ``pi(i) < i`` or a clockwise fixed point."""
        a = self if self.kind == "A" else self.to_type_a()
        return frozenset(
            i for i, x in enumerate(a.perm, 1) if x < i or (x == i and i in a.clockwise)
        )

    def to_type_a(self) -> DecoratedPermutation:
        """The doubled type A decorated permutation on positions ``1..2n``."""
        if self.kind == "A":
            return self
        n = self.n
        sp = SignedPermutation(self.perm)
        cw = frozenset(_letter_to_pos(n, i) for i in self.clockwise)
        return DecoratedPermutation("A", sp.as_type_a(), cw)

    def __str__(self) -> str:
        out = []
        for i, a in enumerate(self.perm, 1):
            out.append(f"~{a}" if a == i and i in self.clockwise else str(a))
        return " ".join(out)


def _letter_to_pos(n: int, letter: int) -> int:
    return letter + n + 1 if letter < 0 else letter + n


def _pos_to_letter(n: int, p: int) -> int:
    return p - n - 1 if p <= n else p - n


def parse_decorated(text: str, kind: str | None = None) -> DecoratedPermutation:
    """Parse ``"~1 4 5 3 8 ~6 7 2"`` or ``"~1 3 -2"``; commas also separate.

    For type B a positive fixed point without ``~`` is counterclockwise, so
    its negative is clockwise.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty permutation")
    marks = [t.startswith("~") for t in tokens]
    try:
        vals = tuple(int(t.lstrip("~")) for t in tokens)
    except ValueError as exc:
        raise ValueError(f"bad permutation text {text!r}") from exc
    if kind is None:
        kind = "B" if any(v < 0 for v in vals) or sorted(vals) != list(range(1, len(vals) + 1)) else "A"
    cw = set()
    for i, (v, m) in enumerate(zip(vals, marks), 1):
        if m and v != i:
            raise ValueError(f"~ marks a non-fixed entry at position {i}")
        if v == i:
            if m:
                cw.add(i)
            elif kind == "B":
                cw.add(-i)
    return DecoratedPermutation(kind, vals, frozenset(cw))


# --- cell labels ------------------------------------------------------------------


@dataclass(frozen=True)
class CellLabel:
    """A pair ``(x, w)`` with ``w`` in ``W^j`` and ``x <= w``."""

    poset: PosetQ
    x: WeylElement
    w: WeylElement

    def __post_init__(self) -> None:
        if self.x.data is not self.poset.data or self.w.data is not self.poset.data:
            raise ValueError("cell elements must come from the poset's root system")
        if self.w not in self.poset.ideal_of_element:
            raise ValueError("w is not a minimal coset representative for this pair")
        if not weyl.bruhat_le(self.x, self.w):
            raise ValueError("x is not below w in Bruhat order")

    @property
    def ideal(self) -> OrderIdeal:
        return self.poset.ideal_of_element[self.w]

    @property
    def dimension(self) -> int:
        return self.w.length - self.x.length

    def pair_text(self) -> str:
        return f"{_element_text(self.poset, self.x)};{_element_text(self.poset, self.w)}"

    def __str__(self) -> str:
        return f"({_element_text(self.poset, self.x)}), ({_element_text(self.poset, self.w)})"


def _element_text(p: PosetQ, g: WeylElement) -> str:
    if p.type_tag == "A":
        return ",".join(map(str, weyl.one_line(g)))
    if p.type_tag == "B":
        return ",".join(map(str, weyl.iota_embed(g).window))
    return " ".join(f"s{i}" for i in g.reduced_word())


def parse_cell(p: PosetQ, text: str) -> CellLabel:
    """``"x;w"`` with one-line words (type A) or signed windows (type B)."""
    try:
        xs, ws = text.split(";")
        xv = tuple(int(t) for t in xs.replace(" ", ",").split(",") if t)
        wv = tuple(int(t) for t in ws.replace(" ", ",").split(",") if t)
    except ValueError as exc:
        raise ValueError(f"bad cell text {text!r}; expected 'x;w'") from exc
    if p.type_tag == "A":
        return CellLabel(p, weyl.from_one_line(p.data, xv), weyl.from_one_line(p.data, wv))
    if p.type_tag == "B":
        return CellLabel(p, weyl.from_signed(p.data, SignedPermutation(xv)),
                         weyl.from_signed(p.data, SignedPermutation(wv)))
    raise ValueError(f"cell text is only defined for types A and B, not {p.name}")


def cells(p: PosetQ) -> Iterator[CellLabel]:
    for o in p.ideals:
        for d in le_diagrams(o):
            yield phi2(d)


# --- Phi_2 --------------------------------------------------------------------------


def phi2(d: OPlusDiagram) -> CellLabel:
    if not is_pds(d):
        raise ValueError("phi2 needs a Le-diagram")
    return CellLabel(d.poset, value(d), d.ideal.element)


def phi2_inverse(c: CellLabel) -> OPlusDiagram:
    return pds_filling(c.ideal, c.x)


# --- Phi_1 ----------------------------------------------------------------------------


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[b[i] - 1] for i in range(len(b)))


def _inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a, 1):
        out[x - 1] = i
    return tuple(out)


def _phi1_a(v: tuple[int, ...], w: tuple[int, ...], j: int) -> DecoratedPermutation:
    pi = _compose(v, _inverse(w))
    front = set(w[:j])
    cw = frozenset(i for i, x in enumerate(pi, 1) if x == i and i in front)
    return DecoratedPermutation("A", pi, cw)


def phi1(c: CellLabel) -> DecoratedPermutation:
    p = c.poset
    if p.type_tag == "A":
        return _phi1_a(weyl.one_line(c.x), weyl.one_line(c.w), p.j)
    if _is_b_staircase(p):
        n = p.n
        a = _phi1_a(weyl.iota_embed(c.x).as_type_a(), weyl.iota_embed(c.w).as_type_a(), n)
        return _fold(a, n)
    raise ValueError(f"phi1 is defined for (A_n,j) and (B_n,n), not {p.name}")


def _grassmannian(positions: frozenset[int], m: int) -> tuple[int, ...]:
    front = sorted(positions)
    return tuple(front + [i for i in range(1, m + 1) if i not in positions])


def phi1_inverse(pi: DecoratedPermutation, p: PosetQ) -> CellLabel:
    """Recover the cell: ``w`` is the Grassmannian permutation sending
    ``1..j`` onto the nonexcedance positions, and ``x = pi w``."""
    a = pi.to_type_a()
    ne = a.nonexcedances()
    w = _grassmannian(ne, a.n)
    v = _compose(a.perm, w)
    if p.type_tag == "A":
        if pi.kind != "A" or a.n != p.n + 1 or len(ne) != p.j:
            raise ValueError(f"decorated permutation does not fit {p.name}")
        return CellLabel(p, weyl.from_one_line(p.data, v), weyl.from_one_line(p.data, w))
    if _is_b_staircase(p) and pi.kind == "B" and pi.n == p.n:
        n = p.n
        xs, ws = _unfold_perm(v, n), _unfold_perm(w, n)
        return CellLabel(p, weyl.from_signed(p.data, xs), weyl.from_signed(p.data, ws))
    raise ValueError(f"decorated permutation does not fit {p.name}")


def _unfold_perm(a: tuple[int, ...], n: int) -> SignedPermutation:
    window = tuple(_pos_to_letter(n, a[_letter_to_pos(n, i) - 1]) for i in range(1, n + 1))
    sp = SignedPermutation(window)
    if sp.as_type_a() != a:
        raise ValueError("permutation is not symmetric under i -> -i")
    return sp


def _fold(a: DecoratedPermutation, n: int) -> DecoratedPermutation:
    sp = _unfold_perm(a.perm, n)
    cw = frozenset(_pos_to_letter(n, q) for q in a.clockwise)
    return DecoratedPermutation("B", sp.window, cw)


# --- Phi_3: hook paths ------------------------------------------------------------------


def _is_b_staircase(p: PosetQ) -> bool:
    return p.type_tag == "B" and p.j == p.n


def _phi3_a(plus: set[tuple[int, int]], rows: list[int], width: int) -> DecoratedPermutation:
    """Hook-path permutation for a Young shape with row lengths ``rows``
    (top to bottom, weakly increasing) inside ``len(rows) x width``."""
    hstep: dict[int, int] = {}
    vstep: dict[int, int] = {}
    label = 1
    prev = 0
    for r, length in enumerate(rows):
        for c in range(prev, length):
            hstep[c] = label
            label += 1
        vstep[r] = label
        label += 1
        prev = length
    for c in range(prev, width):
        hstep[c] = label
        label += 1
    m = label - 1
    pi = [0] * m
    cw = set()

    def walk(r: int, c: int, heading: str) -> int:
        # at the + in box (r, c); alternate east and north, turning at each +
        while True:
            if heading == "east":
                nxt = [cc for cc in range(c + 1, rows[r]) if (r, cc) in plus]
                if not nxt:
                    return vstep[r]
                c, heading = nxt[0], "north"
            else:
                nxt = [rr for rr in range(r - 1, -1, -1) if (rr, c) in plus]
                if not nxt:
                    return hstep[c]
                r, heading = nxt[0], "east"

    for c, i in hstep.items():
        col = [r for r in range(len(rows)) if (r, c) in plus]
        pi[i - 1] = walk(max(col), c, "east") if col else i
    for r, i in vstep.items():
        row = [c for c in range(rows[r]) if (r, c) in plus]
        if row:
            pi[i - 1] = walk(r, min(row), "north")
        else:
            pi[i - 1] = i
            cw.add(i)
    return DecoratedPermutation("A", tuple(pi), frozenset(cw))


def _shape_a(d: OPlusDiagram) -> tuple[set[tuple[int, int]], list[int], int]:
    p = d.poset
    rows = [sum(1 for b in d.ideal.boxes if b.row == r) for r in range(p.j)]
    plus = {b.pos for b in d.ideal.boxes if d[b] == PLUS}
    return plus, rows, p.n + 1 - p.j


def double_b(d: OPlusDiagram) -> OPlusDiagram:
    """Reflect a (B_n,n) diagram across the diagonal into (A_{2n-1}, n)."""
    p = d.poset
    if not _is_b_staircase(p):
        raise ValueError("double_b needs a (B_n,n) diagram")
    n = p.n
    q = build_poset("A", 2 * n - 1, n)
    cells = {}
    for b in d.ideal.boxes:
        cells[b.pos] = d[b]
        cells[(n - 1 - b.col, n - 1 - b.row)] = d[b]
    ideal = q.ideal(list(cells))
    plus = 0
    for pos, s in cells.items():
        if s == PLUS:
            plus |= 1 << q.index[pos]
    return OPlusDiagram(ideal, plus)


def phi3(d: OPlusDiagram) -> DecoratedPermutation:
    if not is_pds(d):
        raise ValueError("phi3 needs a Le-diagram")
    p = d.poset
    if p.type_tag == "A":
        return _phi3_a(*_shape_a(d))
    if _is_b_staircase(p):
        return _fold(_phi3_a(*_shape_a(double_b(d))), p.n)
    raise ValueError(f"phi3 is defined for (A_n,j) and (B_n,n), not {p.name}")


def phi1_B(c: CellLabel) -> DecoratedPermutation:
    if not _is_b_staircase(c.poset):
        raise ValueError("phi1_B needs a (B_n,n) cell")
    return phi1(c)


def phi2_B(d: OPlusDiagram) -> CellLabel:
    if not _is_b_staircase(d.poset):
        raise ValueError("phi2_B needs a (B_n,n) diagram")
    return phi2(d)


def phi3_B(d: OPlusDiagram) -> DecoratedPermutation:
    if not _is_b_staircase(d.poset):
        raise ValueError("phi3_B needs a (B_n,n) diagram")
    return phi3(d)


def phi3_inverse(pi: DecoratedPermutation, p: PosetQ) -> OPlusDiagram:
    return phi2_inverse(phi1_inverse(pi, p))


# --- type B permutation tableaux --------------------------------------------------------


def _zero_columns(d: OPlusDiagram) -> list[int]:
    cols: dict[int, list[str]] = {}
    for b in d.ideal.boxes:
        cols.setdefault(b.col, []).append(d[b])
    return sorted(c for c, syms in cols.items() if all(s != PLUS for s in syms))


def is_permutation_tableau_B(d: OPlusDiagram) -> bool:
    if not _is_b_staircase(d.poset):
        raise ValueError("needs a (B_n,n) diagram")
    if not is_pds(d):
        raise ValueError("needs a Le-diagram")
    return not _zero_columns(d)


def delete_zero_hook(d: OPlusDiagram, col: int) -> OPlusDiagram:
    """Drop the all-zero column ``col`` and the row of its diagonal box."""
    p = d.poset
    n = p.n
    drop_row = n - 1 - col
    if n == 1:
        raise ValueError("cannot shrink below B_1")
    q = build_poset("B", n - 1, n - 1)
    cells = {}
    for b in d.ideal.boxes:
        if b.col == col or b.row == drop_row:
            if d[b] == PLUS:
                raise ValueError("hook is not all zero")
            continue
        cells[(b.row - (b.row > drop_row), b.col - (b.col > col))] = d[b]
    ideal = q.ideal(list(cells))
    plus = 0
    for pos, s in cells.items():
        if s == PLUS:
            plus |= 1 << q.index[pos]
    return OPlusDiagram(ideal, plus)


def reduce_to_tableau(d: OPlusDiagram) -> OPlusDiagram | None:
    """Delete zero hooks until none is left; ``None`` if everything is deleted."""
    while True:
        cols = _zero_columns(d)
        if not cols:
            return d
        if d.poset.n == 1:
            return None
        d = delete_zero_hook(d, cols[0])


# --- closure order -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def parabolic_subgroup(p: PosetQ) -> tuple[WeylElement, ...]:
    gens = [i for i in range(1, p.data.rank + 1) if i != p.j]
    return tuple(weyl.elements(p.data, gens))


def cell_leq(c1: CellLabel, c2: CellLabel) -> bool:
    """``c1`` lies in the closure of ``c2``: some ``z`` in ``W_J`` has
    ``x2 <= x1 z <= w1 z <= w2``."""
    if c1.poset is not c2.poset:
        raise ValueError("cells come from different pairs")
    w2 = weyl.reduced_word(c2.w)
    for z in parabolic_subgroup(c1.poset):
        xz = c1.x * z
        wz = c1.w * z
        if weyl.bruhat_leq(wz, w2) and weyl.bruhat_le(xz, wz) and weyl.bruhat_le(c2.x, xz):
            return True
    return False
