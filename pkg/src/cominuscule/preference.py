"""Preference functions and their bijections with maximal Le-diagrams.

A preference function of length ``n`` is a word using every letter
``1..k`` for some ``k <= n``.  ``J_n`` holds the signed permutations whose
positive entries satisfy ``pi(i) <= i`` and whose last entry is negative;
``alpha`` maps them onto preference functions.

The ``(D_n,n)`` side works on a staircase grid.  Rows ``a = 1..n`` run top
to bottom, columns ``b = n..1`` run left to right, box ``(a,b)`` is
fillable when ``a < b`` and ``(a,a)`` holds ``*``.  Poset box ``(r,c)`` of
``(D_n,n)`` sits at ``(r+1, n-c)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bijections import DecoratedPermutation, phi3_B, phi3_inverse
from .diagrams import PLUS, ZERO, OPlusDiagram
from .patterns import d_n_violation
from .posets import OrderIdeal, build_poset
from .weyl import SignedPermutation

STAR = "*"
EMPTY = "."


# --- preference functions ----------------------------------------------------------


def is_preference_function(word: Sequence[int]) -> bool:
    try:
        vals = set(word)
    except TypeError:
        return False
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
        return False
    return vals == set(range(1, len(vals) + 1))


def _require_pref(word: Sequence[int]) -> tuple[int, ...]:
    w = tuple(word)
    if not is_preference_function(w):
        raise ValueError(f"not a preference function: {w}")
    return w


def is_atomic(word: Sequence[int]) -> bool:
    """No strict prefix holds every occurrence of the letters ``1..r``."""
    w = _require_pref(word)
    for j in range(1, len(w)):
        head = set(w[:j])
        r = len(head)
        if head == set(range(1, r + 1)) and min(w[j:]) > r:
            return False
    return True


def preference_functions(n: int) -> Iterator[tuple[int, ...]]:
    """All preference functions of length ``n`` in lexicographic order."""

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        left = n - len(prefix)
        if left == 0:
            if is_preference_function(prefix):
                yield tuple(prefix)
            return
        for v in range(1, n + 1):
            prefix.append(v)
            # every letter below the maximum still has to fit in the remaining slots
            if max(prefix) - len(set(prefix)) <= left - 1:
                yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def atomic_preference_functions(n: int) -> Iterator[tuple[int, ...]]:
    return (f for f in preference_functions(n) if is_atomic(f))


# --- J_n and alpha -----------------------------------------------------------------


def _window(pi: SignedPermutation | Sequence[int]) -> tuple[int, ...]:
    return pi.window if isinstance(pi, SignedPermutation) else tuple(pi)


def in_J(pi: SignedPermutation | Sequence[int]) -> bool:
    w = _window(pi)
    try:
        SignedPermutation(w)
    except ValueError:
        return False
    if w and w[-1] > 0:
        return False
    return all(a <= i for i, a in enumerate(w, start=1) if a > 0)


def J_elements(n: int) -> Iterator[SignedPermutation]:
    """``J_n`` in the order produced by ``alpha_inverse`` on preference functions."""
    for f in preference_functions(n):
        yield alpha_inverse(f)


def alpha(pi: SignedPermutation | Sequence[int]) -> tuple[int, ...]:
    w = _window(pi)
    if not in_J(w):
        raise ValueError(f"{w} is not in J_{len(w)}")
    n = len(w)
    plus_pos = [i for i, a in enumerate(w, start=1) if a > 0]
    shifted = {i + 1 for i in plus_pos}
    K = [k for k in range(1, n + 1) if k not in shifted]
    negs = [-a for a in w if a < 0]
    rank = {v: r for r, v in enumerate(sorted(negs), start=1)}
    p = [0] * (n + 1)
    for k, v in zip(K, negs):
        p[k] = rank[v]
    for i in plus_pos:
        p[i + 1] = p[w[i - 1]]
    return tuple(p[1:])


def alpha_inverse(word: Sequence[int]) -> SignedPermutation:
    p = _require_pref(word)
    n = len(p)
    last: dict[int, int] = {}
    firsts: list[int] = []
    out = [0] * (n + 1)
    used: set[int] = set()
    for pos, v in enumerate(p, start=1):
        if v in last:
            out[pos - 1] = last[v]
            used.add(last[v])
        else:
            firsts.append(v)
        last[v] = pos
    rest = [t for t in range(1, n + 1) if t not in used]
    free = [i for i in range(1, n + 1) if out[i] == 0]
    for i, v in zip(free, firsts):
        out[i] = -rest[v - 1]
    return SignedPermutation(tuple(out[1:]))


# --- the staircase grid ------------------------------------------------------------


@dataclass
class Staircase:
    """A partially or fully filled ``(D_n,n)`` staircase; ``None`` marks an empty box."""

    n: int
    cells: dict[tuple[int, int], str | None] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for a in range(1, self.n + 1):
            for b in range(a + 1, self.n + 1):
                self.cells.setdefault((a, b), None)

    def copy(self) -> Staircase:
        return Staircase(self.n, dict(self.cells))

    def get(self, a: int, b: int) -> str | None:
        return STAR if a == b else self.cells[(a, b)]

    def row(self, a: int) -> list[tuple[int, int]]:
        return [(a, b) for b in range(self.n, a, -1)]

    def column(self, b: int) -> list[tuple[int, int]]:
        return [(a, b) for a in range(1, b)]

    def row_complete(self, a: int) -> bool:
        return all(self.cells[x] is not None for x in self.row(a))

    def row_zero(self, a: int) -> bool:
        return all(self.cells[x] == ZERO for x in self.row(a))

    def rows_complete_from(self, a: int) -> bool:
        return all(self.row_complete(r) for r in range(a, self.n + 1))

    def rightmost_plus(self, a: int) -> tuple[int, int] | None:
        """The ``+`` of row ``a`` with the smallest column label."""
        for b in range(a + 1, self.n + 1):
            if self.cells[(a, b)] == PLUS:
                return (a, b)
        return None

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.cells.values())

    def zero_rows(self) -> frozenset[int]:
        """Rows ``1..n-1`` holding only 0's; row ``n`` has no boxes and never counts."""
        return frozenset(a for a in range(1, self.n) if self.row_zero(a))

    def poset_cells(self) -> dict[tuple[int, int], str]:
        return {(a - 1, self.n - b): v for (a, b), v in self.cells.items() if v is not None}

    def to_diagram(self) -> OPlusDiagram:
        if self.n < 2:
            raise ValueError("(D_n,n) needs n >= 2; the one-row staircase has no boxes")
        if not self.complete:
            raise ValueError("staircase is not completely filled")
        p = build_poset("D", self.n, self.n)
        plus = 0
        for pos, v in self.poset_cells().items():
            if v == PLUS:
                plus |= 1 << p.index[pos]
        return OPlusDiagram(OrderIdeal(p, p.full_mask), plus)

    @classmethod
    def from_diagram(cls, d: OPlusDiagram) -> Staircase:
        p = d.poset
        if p.type_tag != "D" or p.j != p.n:
            raise ValueError(f"expected a (D_n,n) diagram, got {p.name}")
        if d.ideal.mask != p.full_mask:
            raise ValueError("Phi needs a diagram of maximal shape")
        n = p.n
        cells = {(r + 1, n - c): d[(r, c)] for r, c in (b.pos for b in p.boxes)}
        return cls(n, cells)

    def render(self) -> str:
        """ASCII picture with ``N``/``W`` border labels; ``.`` marks an empty box."""
        n = self.n
        width = max(2, len(str(n)) + 1)
        pad = " " * (width + 1)
        lines = [pad + " ".join(f"{b}N".rjust(width) for b in range(n, 0, -1))]
        for a in range(1, n + 1):
            glyphs = [self.get(a, b) or EMPTY for b in range(n, a - 1, -1)]
            lines.append(f"{a}W".rjust(width) + " " + " ".join(g.rjust(width) for g in glyphs))
        return "\n".join(lines)


def wiring(s: Staircase) -> tuple[int, ...]:
    """``pi(i)``: the north label reached by the wire entering at ``i_W``.

    ``+`` and ``*`` are elbows, 0 is a crossing.
    """
    n = s.n
    out = []
    for i in range(1, n + 1):
        a, b, heading = i, n + 1, "E"
        while a >= 1:
            if heading == "E":
                b -= 1
            else:
                a -= 1
                if a == 0:
                    break
            g = s.get(a, b)
            if g is None:
                raise ValueError(f"box ({a},{b}) is empty")
            if g != ZERO:
                heading = "N" if heading == "E" else "E"
        out.append(b)
    return tuple(out)


def signed_wiring(s: Staircase) -> SignedPermutation:
    zero = s.zero_rows()
    pi = wiring(s)
    return SignedPermutation(tuple(v if i in zero else -v for i, v in enumerate(pi, start=1)))


def phi_D(d: OPlusDiagram | Staircase) -> tuple[int, ...]:
    s = d if isinstance(d, Staircase) else Staircase.from_diagram(d)
    if not s.complete:
        raise ValueError("Phi needs a completely filled staircase")
    return alpha(signed_wiring(s))


# --- Psi ---------------------------------------------------------------------------


@dataclass
class PsiStep:
    i: int
    target: int
    notes: list[str]
    grid: Staircase


class _Psi:
    def __init__(self, f: tuple[int, ...], debug: bool):
        self.f = f
        self.n = len(f)
        self.w = alpha_inverse(f)
        self.abs_w = tuple(abs(v) for v in self.w.window)
        self.grid = Staircase(self.n)
        self.kind: dict[tuple[int, int], str] = {}
        self.debug = debug
        self.exits: set[int] = set()

    def w_of(self, k: int) -> int:
        return self.w.window[k - 1]

    def fill(self, pos: tuple[int, int], sym: str) -> None:
        cur = self.grid.cells[pos]
        if cur is None:
            self.grid.cells[pos] = sym
        elif cur != sym:
            raise AssertionError(f"box {pos} already holds {cur}, wanted {sym}")

    def walk(self, a: int, b: int, heading: str) -> int:
        """Follow the wire from box ``(a,b)``, filling empty boxes with 0; return the exit row."""
        n = self.n
        while True:
            if heading == "S":
                a += 1
            else:
                b += 1
                if b > n:
                    return a
            if a == b:
                heading = "W"
                continue
            if self.grid.cells[(a, b)] is None:
                self.grid.cells[(a, b)] = ZERO
            elif self.grid.cells[(a, b)] == PLUS:
                heading = "W" if heading == "S" else "S"

    def go_south(self, a: int, b: int, stop: int) -> None:
        for r in range(a + 1, stop):
            self.fill((r, b), ZERO)

    def go_west(self, a: int, b: int, stop: int) -> None:
        for c in range(b + 1, stop):
            self.fill((a, c), ZERO)

    def path(self, i: int) -> list[str]:
        g = self.grid
        star = self.abs_w.index(i) + 1
        notes: list[str] = []
        a, b = 0, i
        j = 1
        while True:
            head = f"j={j} (a,b)=({a},{b})"
            a_prime = next(
                (r for r in range(a + 1, b) if g.rightmost_plus(r) is not None), None
            )
            c_star = g.rightmost_plus(a_prime) if a_prime is not None else None
            below_done = g.rows_complete_from(a + 1)
            z = (
                (c_star is None and star >= b)
                or below_done
                or c_star == (star, b)
                or (c_star is not None and star > a_prime and g.rows_complete_from(a_prime))
            )
            case_a = (c_star is not None and star < a_prime) or (c_star is None and star < b)
            case_b = (
                c_star is not None
                and star == b
                and (self.w_of(star) > 0 or g.row_zero(b))
            )
            case_c = (
                c_star is not None
                and star > b
                and self.w_of(b) < 0
                and sum(1 for x in g.row(b) if g.cells[x] is None) == 1
                and all(g.cells[x] in (None, ZERO) for x in g.row(b))
            )
            if self.debug:
                if z + case_a + case_b + case_c > 1 and not (z and below_done):
                    raise AssertionError(f"overlapping cases at i={i} {head}")
            where = f"a'={a_prime}, c*={c_star}" if c_star else "c* absent"
            if z:
                notes.append(f"{head}, {where}: case Z")
                exit_row = self.walk(a, b, "S")
                break
            if case_a:
                notes.append(f"{head}, {where}: case A, c_{j}=({star},{b})")
                self.go_south(a, b, star)
                self._place((star, b), "A")
                self.go_west(star, b, self.n + 1)
                exit_row = star
                break
            if case_b:
                notes.append(f"{head}, {where}: case B")
                exit_row = self.walk(a, b, "S")
                break
            if case_c:
                b2 = c_star[1]
                notes.append(f"{head}, {where}: case C, c_{j}=({b},{b2})")
                if g.cells[(b, b2)] is not None:
                    raise AssertionError(f"case C box ({b},{b2}) is filled")
                self.go_south(a, b, b)
                self.go_west(b, b, b2)
                self._place((b, b2), "C")
                exit_row = self.walk(b, b2, "S")
                break
            notes.append(f"{head}, {where}: case D, c_{j}=({a_prime},{b}), c'_{j}={c_star}")
            self.go_south(a, b, a_prime)
            self._place((a_prime, b), "D")
            self.go_west(a_prime, b, c_star[1])
            a, b = c_star
            j += 1
        if exit_row != star:
            raise AssertionError(f"path {i} exits at row {exit_row}, expected {star}")
        self.exits.add(star)
        return notes

    def _place(self, pos: tuple[int, int], case: str) -> None:
        if self.grid.cells[pos] is not None:
            raise AssertionError(f"case {case} box {pos} is already filled")
        self.grid.cells[pos] = PLUS
        self.kind[pos] = case


def psi_trace(f: Sequence[int], debug: bool = False) -> list[PsiStep]:
    """Every intermediate ``D_i`` from ``D_n`` down to ``D_1``, with the cases used."""
    w = _require_pref(f)
    if not is_atomic(w):
        raise ValueError(f"{w} is not atomic")
    run = _Psi(w, debug)
    g = run.grid
    steps = []
    for i in range(run.n, 0, -1):
        before = g.copy()
        notes = run.path(i)
        if debug:
            check_invariants(g, before, i, run.kind, run.exits)
        steps.append(PsiStep(i, run.abs_w.index(i) + 1, notes, g.copy()))
    return steps


def psi_staircase(f: Sequence[int], debug: bool = False) -> Staircase:
    steps = psi_trace(f, debug)
    return steps[-1].grid if steps else Staircase(0)


def psi(f: Sequence[int], debug: bool = False) -> OPlusDiagram:
    """The maximal ``(D_n,n)`` Le-diagram of an atomic preference function (``n >= 2``)."""
    return psi_staircase(f, debug).to_diagram()


def render_trace(steps: Iterable[PsiStep], notes: bool = False) -> str:
    blocks = []
    for st in steps:
        head = f"D_{st.i}  (i={st.i}, i*={st.target})"
        body = st.grid.render()
        if notes and st.notes:
            body += "\n" + "\n".join("  " + s for s in st.notes)
        blocks.append(head + "\n" + body)
    return "\n\n".join(blocks)


# --- runtime invariants of the construction ----------------------------------------


def _corner_pluses(g: Staircase) -> list[tuple[int, int]]:
    out = []
    for a in range(1, g.n):
        c = g.rightmost_plus(a)
        if c is not None and not g.row_complete(a):
            out.append(c)
    return out


def check_invariants(
    g: Staircase,
    before: Staircase,
    i: int,
    kind: dict[tuple[int, int], str],
    exits: set[int],
) -> None:
    """Raise ``AssertionError`` if ``g = D_i`` breaks a property of the construction."""
    n = g.n
    for pos, v in before.cells.items():
        if v is not None and g.cells[pos] != v:
            raise AssertionError(f"box {pos} changed from {v}")
    corners = _corner_pluses(g)
    corner_set = set(corners)
    for b in range(2, n + 1):
        col = g.column(b)
        filled = [x for x in col if g.cells[x] is not None]
        if b < i and filled:
            raise AssertionError(f"D_{i}: column {b} should be empty")
        mine = [x for x in col if x in corner_set]
        if len(mine) > 1:
            raise AssertionError(f"D_{i}: column {b} has two corner +'s")
        if mine:
            ca, cb = mine[0]
            for x in filled:
                if x[0] > ca and not g.row_complete(x[0]):
                    raise AssertionError(f"D_{i}: {x} below corner {mine[0]} is in an incomplete row")
            for c in range(cb - 1, ca, -1):
                if g.cells[(ca, c)] is not None and any(g.cells[y] is None for y in g.column(c)):
                    raise AssertionError(f"D_{i}: ({ca},{c}) right of a corner is in an incomplete column")
        elif b >= i and len(filled) != len(col):
            raise AssertionError(f"D_{i}: column {b} has no corner + but is incomplete")
    for a in range(1, n):
        if g.row_complete(a) and not g.row_zero(a) and not g.rows_complete_from(a):
            raise AssertionError(f"D_{i}: complete row {a} has a + but a later row is incomplete")
    for a, _ in corners:
        if a not in exits:
            raise AssertionError(f"D_{i}: row {a} has a corner + but exit {a}_W is unused")
    for pos, v in g.cells.items():
        if v != PLUS:
            continue
        a, b = pos
        weak = pos in corner_set or kind.get(pos) == "D"
        for (r, c), u in g.cells.items():
            if r <= a and c >= b and (r, c) != pos and u is None:
                strict = r < a and c > b
                if weak or strict:
                    raise AssertionError(f"D_{i}: ({r},{c}) northwest of + {pos} is empty")
    rows = [a for a, _ in corners]
    cols = [b for _, b in corners]
    if rows != sorted(rows) or cols != sorted(cols) or len(set(cols)) != len(cols):
        raise AssertionError(f"D_{i}: corner +'s are not arranged northeast to southwest")
    new = [pos for pos, v in g.cells.items() if v is not None and before.cells[pos] is None]
    per_row: dict[int, int] = {}
    for a, _ in new:
        per_row[a] = per_row.get(a, 0) + 1
    for a, k in per_row.items():
        if k > 1 and not g.row_zero(a):
            raise AssertionError(f"D_{i}: {k} new boxes in row {a}")
    bad = d_n_violation(n, g.poset_cells()) if n >= 2 else None
    if bad is not None:
        raise AssertionError(f"D_{i}: Le-condition violated at {bad}")


# --- type B ------------------------------------------------------------------------


def _corner_box(n: int) -> tuple[int, int]:
    return (n - 1, 0)


def in_script_B(d: OPlusDiagram) -> bool:
    p = d.poset
    return (
        p.type_tag == "B"
        and p.j == p.n
        and d.ideal.mask == p.full_mask
        and d[_corner_box(p.n)] == PLUS
    )


def max_B_le_to_preference(d: OPlusDiagram) -> tuple[int, ...]:
    p = d.poset
    if p.type_tag != "B" or p.j != p.n or d.ideal.mask != p.full_mask:
        raise ValueError(f"expected a maximal (B_n,n) diagram, got {p.name}")
    if d[_corner_box(p.n)] != PLUS:
        raise ValueError(f"corner box {_corner_box(p.n)} holds 0; the diagram is not in the domain")
    return alpha(phi3_B(d).perm)


def preference_to_max_B_le(f: Sequence[int]) -> OPlusDiagram:
    pi = alpha_inverse(f)
    fixed = frozenset(i for i, a in enumerate(pi.window, start=1) if a == i)
    dec = DecoratedPermutation("B", pi.window, fixed)
    return phi3_inverse(dec, build_poset("B", pi.n, pi.n))

