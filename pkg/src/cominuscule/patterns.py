"""Pattern-avoidance descriptions of Le-diagrams for the classical pairs.

All positions are grid ``(row, col)`` with row 0 on top.  "Below" and
"left" mean the same column or row; compass directions such as "southwest"
mean strict offsets in both coordinates.
"""

from __future__ import annotations

from .diagrams import PLUS, ZERO, OPlusDiagram


def _require(d: OPlusDiagram, type_tag: str, which: str) -> None:
    p = d.poset
    if p.type_tag != type_tag:
        raise ValueError(f"expected a type {type_tag} diagram, got {p.name}")
    if which == "1" and p.j != 1:
        raise ValueError(f"expected j = 1, got {p.name}")
    if which == "n" and p.j != p.n:
        raise ValueError(f"expected j = n, got {p.name}")


def _cells(d: OPlusDiagram) -> dict[tuple[int, int], str]:
    return {b.pos: d[b] for b in d.ideal.boxes}


def is_le_A(d: OPlusDiagram) -> bool:
    """No 0 has a + below it and a + to its left."""
    _require(d, "A", "")
    cells = _cells(d)
    for (r, c), s in cells.items():
        if s != ZERO:
            continue
        below = any(cells.get((rr, c)) == PLUS for rr in range(r + 1, r + len(cells) + 1))
        left = any(cells.get((r, cc)) == PLUS for cc in range(c))
        if below and left:
            return False
    return True


def is_le_B_n(d: OPlusDiagram) -> bool:
    """(1) a 0 above a + has only 0's to its left; (2) so does a diagonal 0."""
    _require(d, "B", "n")
    n = d.poset.n
    cells = _cells(d)
    for (r, c), s in cells.items():
        if s != ZERO:
            continue
        below = any(cells.get((rr, c)) == PLUS for rr in range(r + 1, n))
        diagonal = c == n - 1 - r
        if (below or diagonal) and any(cells[(r, cc)] == PLUS for cc in range(c)):
            return False
    return True


def conjugate_B1(n: int, col: int) -> int:
    return 2 * n - 2 - col


def is_le_B_1(d: OPlusDiagram) -> bool:
    """For a 0 right of the middle box, the box before it and that box's
    conjugate are not both +."""
    _require(d, "B", "1")
    n = d.poset.n
    cells = _cells(d)
    for (_, c), s in cells.items():
        if s == ZERO and c > n - 1:
            b = c - 1
            if cells[(0, b)] == PLUS and cells[(0, conjugate_B1(n, b))] == PLUS:
                return False
    return True


def distance_D(n: int, row: int, col: int) -> int:
    """Number of staircase boxes below ``(row, col)`` in the (D_n,n) staircase."""
    return n - 2 - col - row


def d_n_violation(n: int, cells: dict[tuple[int, int], str]) -> tuple[int, int] | None:
    """A 0 breaking the (D_n,n) conditions, or ``None``.

    ``cells`` may be partial; absent boxes never take part in a pattern.
    """
    pluses = [pos for pos, s in cells.items() if s == PLUS]
    for (r, c), s in cells.items():
        if s != ZERO:
            continue
        left_plus = [cc for cc in range(c) if cells.get((r, cc)) == PLUS]
        if not left_plus:
            continue
        # (1) a 0 with a + below it has only 0's to its left
        if any(cells.get((rr, c)) == PLUS for rr in range(r + 1, n)):
            return (r, c)
        dist = distance_D(n, r, c)
        target = r + dist + 1
        for cb in left_plus:
            # (2) no + strictly southwest of b on row r + d + 1
            if any(pr == target and pc < cb for pr, pc in pluses):
                return (r, c)
            # (3) b2 is d+1 rows below b1 = b; b3 strictly NW of b2, strictly S of b1
            if cells.get((target, cb)) == PLUS:
                if any(r < pr < target and pc < cb for pr, pc in pluses):
                    return (r, c)
    return None


def is_le_D_n(d: OPlusDiagram) -> bool:
    _require(d, "D", "n")
    return d_n_violation(d.poset.n, _cells(d)) is None


def conjugate_D1(n: int, pos: tuple[int, int]) -> tuple[int, int]:
    """The box with the same label in the other row; the two middle boxes
    are conjugate to each other."""
    r, c = pos
    if r == 1:
        # bottom row col c has label c+1; the top row shows label m at col 2n-4-m
        return (0, n - 3) if c == n - 2 else (0, 2 * n - 5 - c)
    if c == n - 3:
        return (1, n - 2)
    return (1, 2 * n - 5 - c)


def is_le_D_1(d: OPlusDiagram) -> bool:
    """For a 0 above both middle boxes and each box b it covers, b and its
    conjugate are not both +."""
    _require(d, "D", "1")
    p = d.poset
    n = p.n
    cells = _cells(d)
    mid_top = p.index[(0, n - 3)]
    mid_bot = p.index[(1, n - 2)]
    for b in d.ideal.boxes:
        k = p.index[b.pos]
        if cells[b.pos] != ZERO or not (p.leq(mid_top, k) and p.leq(mid_bot, k)):
            continue
        for a in p.lower_covers[k]:
            pa = p.boxes[a].pos
            if cells[pa] == PLUS and cells.get(conjugate_D1(n, pa)) == PLUS:
                return False
    return True


def pattern_predicate(d: OPlusDiagram):
    """The pattern test matching ``d``'s pair, or ``None`` for E types."""
    p = d.poset
    if p.type_tag == "A":
        return is_le_A
    if p.type_tag == "B":
        return is_le_B_1 if p.j == 1 and p.n > 1 else is_le_B_n
    if p.type_tag == "D":
        if p.j == 1:
            return is_le_D_1
        if p.j == p.n:
            return is_le_D_n
    return None


def is_le(d: OPlusDiagram) -> bool | None:
    pred = pattern_predicate(d)
    return None if pred is None else pred(d)
