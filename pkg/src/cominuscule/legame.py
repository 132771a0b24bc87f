"""Le-moves and the Le-game.

A move ``(x, y, S)`` fills the open interval ``(x, y)`` with 0, + or the
wildcard ``?``.  It can be performed on a diagram with a 0 in ``y`` whose
restriction to ``(x, y)`` is compatible with ``S``; doing so puts a + in
``y`` and toggles ``x``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Sequence

import numpy as np

from .diagrams import PLUS, ZERO, OPlusDiagram, leify_direct, value
from .posets import Box, PosetQ
from .weyl import WeylElement

WILD = "?"

FAMILIES = {
    "A": ("rectangular",),
    "B": ("rectangular", "diagonal"),
    "B1": ("conjugate",),
    "D": ("rectangular", "S1", "S2"),
    "D1": ("conjugate",),
}


@dataclass(frozen=True, eq=False)
class MoveTemplate:
    poset: PosetQ
    x: Box
    y: Box
    S: tuple[tuple[tuple[int, int], str], ...]
    family: str = ""

    def __post_init__(self) -> None:
        p = self.poset
        kx, ky = p.index[self.x.pos], p.index[self.y.pos]
        if kx == ky or not p.leq(kx, ky):
            raise ValueError("move needs x < y")
        inside = {p.boxes[k].pos for k in open_interval(p, kx, ky)}
        given = {pos for pos, _ in self.S}
        if inside != given or len(given) != len(self.S):
            raise ValueError("S must be defined exactly on the open interval (x, y)")
        if any(sym not in (ZERO, PLUS, WILD) for _, sym in self.S):
            raise ValueError("S uses symbols 0, + and ?")

    @property
    def filling(self) -> dict[tuple[int, int], str]:
        return dict(self.S)

    def masks(self) -> tuple[int, int, int, int]:
        """``(x bit, y bit, S zero mask, S plus mask)``."""
        p = self.poset
        zero = plus = 0
        for pos, sym in self.S:
            if sym == ZERO:
                zero |= 1 << p.index[pos]
            elif sym == PLUS:
                plus |= 1 << p.index[pos]
        return 1 << p.index[self.x.pos], 1 << p.index[self.y.pos], zero, plus

    def describe(self) -> str:
        return f"{self.family}({self.x.row},{self.x.col})<-({self.y.row},{self.y.col})"

    def __repr__(self) -> str:
        return f"MoveTemplate[{self.describe()}]"


def open_interval(p: PosetQ, kx: int, ky: int) -> list[int]:
    return [k for k in range(len(p.boxes)) if k not in (kx, ky) and p.leq(kx, k) and p.leq(k, ky)]


def make_template(p: PosetQ, x: tuple[int, int], y: tuple[int, int],
                  filling: Mapping[tuple[int, int], str] | Callable[[tuple[int, int]], str],
                  family: str = "") -> MoveTemplate:
    kx, ky = p.index[x], p.index[y]
    sym = filling if callable(filling) else filling.__getitem__
    S = tuple((p.boxes[k].pos, sym(p.boxes[k].pos)) for k in open_interval(p, kx, ky))
    return MoveTemplate(p, p.boxes[kx], p.boxes[ky], S, family)


# --- compatibility and application ---------------------------------------------


def compatible(d: OPlusDiagram, m: MoveTemplate) -> bool:
    _, ybit, zero, plus = m.masks()
    if not d.ideal.mask & ybit:
        raise ValueError("interval is not inside the diagram's shape")
    return not (d.plus & zero) and not (d.zeros & plus)


def performable(d: OPlusDiagram, m: MoveTemplate) -> bool:
    _, ybit, _, _ = m.masks()
    return compatible(d, m) and not d.plus & ybit


def apply_move(d: OPlusDiagram, m: MoveTemplate) -> OPlusDiagram:
    if not performable(d, m):
        raise ValueError(f"move {m.describe()} cannot be performed")
    xbit, ybit, _, _ = m.masks()
    return OPlusDiagram(d.ideal, (d.plus | ybit) ^ xbit)


# --- the root criterion -----------------------------------------------------------


def verify_move_triple(p: PosetQ, x: Box | tuple[int, int], y: Box | tuple[int, int],
                       S: Mapping[tuple[int, int], str], cap: int = 24) -> bool:
    """Check ``v(D)^{-1} beta_y = alpha_x`` for every filling ``D`` of
    ``(x, y)`` compatible with ``S``."""
    xpos = x.pos if isinstance(x, Box) else x
    ypos = y.pos if isinstance(y, Box) else y
    kx, ky = p.index[xpos], p.index[ypos]
    if kx == ky or not p.leq(kx, ky):
        raise ValueError("verify_move_triple needs x < y")
    inside = open_interval(p, kx, ky)
    if {p.boxes[k].pos for k in inside} != set(S):
        raise ValueError("S must be defined exactly on the open interval (x, y)")
    wild = [k for k in inside if S[p.boxes[k].pos] == WILD]
    if len(wild) > cap:
        raise ValueError(f"{len(wild)} wildcard cells exceed the cap of {cap}")
    data = p.data
    alpha = data.simple_index[p.boxes[kx].label - 1]
    beta = data.simple_index[p.boxes[ky].label - 1]
    # reading order of the interval is the canonical order restricted to it
    for choice in itertools.product((False, True), repeat=len(wild)):
        plus = {k for k in inside if S[p.boxes[k].pos] == PLUS}
        plus |= {k for k, c in zip(wild, choice) if c}
        perm = tuple(range(len(data.roots)))
        for k in reversed(inside):
            if k not in plus:
                perm = tuple(perm[m] for m in data.reflections[p.boxes[k].label - 1])
        inv = WeylElement(data, perm).inverse()
        if inv.perm[beta] != alpha:
            return False
    return True


def verify_template(m: MoveTemplate, cap: int = 24) -> bool:
    return verify_move_triple(m.poset, m.x, m.y, m.filling, cap)


# --- move families ------------------------------------------------------------------


def _rectangular(p: PosetQ) -> Iterator[MoveTemplate]:
    for x, y in itertools.permutations(p.boxes, 2):
        if not (x.row > y.row and x.col < y.col):
            continue
        if p.box_at(x.row, y.col) is None or p.box_at(y.row, x.col) is None:
            continue
        corners = {(y.row, x.col), (x.row, y.col)}
        yield make_template(p, x.pos, y.pos, lambda pos: PLUS if pos in corners else ZERO, "rectangular")


def _diagonal_B(p: PosetQ) -> Iterator[MoveTemplate]:
    n = p.n
    diag = [(r, n - 1 - r) for r in range(n)]
    for x, y in itertools.permutations(diag, 2):
        if x[0] > y[0]:
            corner = (y[0], x[1])
            yield make_template(p, x, y, lambda pos: PLUS if pos == corner else ZERO, "diagonal")


def _d_moves(p: PosetQ, which: str) -> Iterator[MoveTemplate]:
    n = p.n
    for y in p.boxes:
        ry, cy = y.pos
        d = n - 2 - cy - ry
        for r in range(d + 2, n):
            k = r - d - 1
            rx = ry + r
            for cx in range(0, n - 1 - rx):
                zr = ry + d + 1
                z1 = (ry, cy - k)
                if which == "S1":
                    z2 = (zr, cx)

                    def sym(pos, z1=z1, z2=z2, zr=zr):
                        if pos in (z1, z2):
                            return PLUS
                        if pos == (zr, z1[1]) or (pos[0] < zr and pos[1] < z1[1]):
                            return WILD
                        return ZERO

                    yield make_template(p, (rx, cx), y.pos, sym, "S1")
                else:
                    z2 = (zr, cy - k)
                    for t in range(ry + 1, zr):
                        z3, z4 = (t, cx), (t, cy - k)

                        def sym(pos, z1=z1, z2=z2, z3=z3, z4=z4, t=t):
                            if pos in (z1, z2, z3, z4):
                                return PLUS
                            if pos[1] < z1[1] and pos[0] < t:
                                return WILD
                            if pos[1] == z1[1] and t < pos[0] < z2[0]:
                                return WILD
                            return ZERO

                        yield make_template(p, (rx, cx), y.pos, sym, "S2")


def _conjugate(p: PosetQ) -> Iterator[MoveTemplate]:
    for x, y in itertools.permutations(p.boxes, 2):
        kx, ky = p.index[x.pos], p.index[y.pos]
        if x.label != y.label or not p.leq(kx, ky):
            continue
        inside = [p.boxes[k] for k in open_interval(p, kx, ky)]
        near = {b.pos for b in inside if p.index[b.pos] in p.lower_covers[ky]
                or kx in p.lower_covers[p.index[b.pos]]}
        yield make_template(p, x.pos, y.pos, lambda pos: PLUS if pos in near else WILD, "conjugate")


def _family_key(p: PosetQ) -> str:
    if p.type_tag == "A":
        return "A"
    if p.type_tag == "B":
        return "B1" if p.j == 1 and p.n > 1 else "B"
    if p.type_tag == "D":
        return "D1" if p.j == 1 else "D"
    raise ValueError(f"no move families are known for {p.name}")


def families_for(p: PosetQ) -> tuple[str, ...]:
    return FAMILIES[_family_key(p)]


def enumerate_moves(p: PosetQ, family: str) -> Iterator[MoveTemplate]:
    if family not in families_for(p):
        raise ValueError(f"family {family!r} does not apply to {p.name}")
    if family == "rectangular":
        return _rectangular(p)
    if family == "diagonal":
        return _diagonal_B(p)
    if family in ("S1", "S2"):
        return _d_moves(p, family)
    return _conjugate(p)


@lru_cache(maxsize=None)
def complete_system(p: PosetQ) -> tuple[MoveTemplate, ...]:
    """All moves of the type's complete families, ordered by ``(y, x)`` in
    reading order (southwestern-most first)."""
    moves = [m for fam in families_for(p) for m in enumerate_moves(p, fam)]
    moves.sort(key=lambda m: (p.index[m.y.pos], p.index[m.x.pos], m.family, m.S))
    return tuple(moves)


@lru_cache(maxsize=None)
def _mask_table(p: PosetQ) -> tuple[np.ndarray, ...]:
    ms = [m.masks() for m in complete_system(p)]
    cols = list(zip(*ms)) if ms else [(), (), (), ()]
    return tuple(np.array(c, dtype=np.uint64) for c in cols)


def performable_moves(d: OPlusDiagram, moves: Sequence[MoveTemplate] | None = None) -> list[MoveTemplate]:
    if moves is not None:
        return [m for m in moves if d.ideal.mask & m.masks()[1] and performable(d, m)]
    p = d.poset
    system = complete_system(p)
    if not system:
        return []
    _, yb, zero, plus = _mask_table(p)
    shape = np.uint64(d.ideal.mask)
    pl = np.uint64(d.plus)
    zs = np.uint64(d.zeros)
    ok = ((yb & shape) != 0) & ((yb & pl) == 0) & ((zero & pl) == 0) & ((plus & zs) == 0)
    return [system[i] for i in np.flatnonzero(ok)]


# --- the game -------------------------------------------------------------------------


Strategy = Callable[[list[MoveTemplate]], MoveTemplate]


def southwest_strategy(moves: list[MoveTemplate]) -> MoveTemplate:
    """Move whose 0 source ``y`` comes first in reading order."""
    return moves[0]


def northeast_strategy(moves: list[MoveTemplate]) -> MoveTemplate:
    p = moves[0].poset
    return max(moves, key=lambda m: (p.index[m.y.pos], -p.index[m.x.pos]))


def random_strategy(seed: int = 0) -> Strategy:
    rng = random.Random(seed)
    return lambda moves: rng.choice(moves)


STRATEGIES = {"southwest": southwest_strategy, "northeast": northeast_strategy}


def get_strategy(name: str, seed: int = 0) -> Strategy:
    if name == "random":
        return random_strategy(seed)
    try:
        return STRATEGIES[name]
    except KeyError:
        raise ValueError(f"unknown strategy {name!r}") from None


@dataclass(frozen=True)
class GameStep:
    move: MoveTemplate
    after: OPlusDiagram


def le_game_trace(d: OPlusDiagram, strategy: Strategy = southwest_strategy,
                  check_value: bool = False) -> list[GameStep]:
    steps: list[GameStep] = []
    target = value(d) if check_value else None
    bound = len(d.ideal) * (len(d.ideal) + 1)
    while True:
        moves = performable_moves(d)
        if not moves:
            return steps
        m = strategy(moves)
        d = apply_move(d, m)
        steps.append(GameStep(m, d))
        if target is not None and value(d) != target:
            raise AssertionError(f"move {m.describe()} changed the value")
        if len(steps) > bound:
            raise AssertionError("Le-game failed to terminate")


def play_le_game(d: OPlusDiagram, strategy: Strategy = southwest_strategy,
                 check_value: bool = False) -> OPlusDiagram:
    steps = le_game_trace(d, strategy, check_value)
    return steps[-1].after if steps else d


def check_game(d: OPlusDiagram, strategy: Strategy = southwest_strategy) -> bool:
    """Game result equals the direct Le-ification (values checked at every step)."""
    return play_le_game(d, strategy, check_value=True) == leify_direct(d)
