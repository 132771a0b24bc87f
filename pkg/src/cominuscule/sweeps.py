"""Exhaustive equivalence sweeps.

Each sweep returns a ``SweepResult`` with the number of objects checked and
the first counterexample, if any.  ``max_n`` bounds the rank of every
classical family (type A uses rank ``<= max_n``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import bijections as bij
from . import enumeration as en
from . import legame, preference
from .diagrams import fillings, inline, is_pds, le_count_by_plus, le_diagrams, leify_direct, parse_inline
from .patterns import pattern_predicate
from .posets import OrderIdeal, PosetQ, build_poset
from .weyl import bruhat_interval_below, length


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: int = 0
    first: str | None = None
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.checked > 0

    def fail(self, what: str) -> None:
        self.failures += 1
        if self.first is None:
            self.first = what

    def line(self, timing: bool = True) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"{verdict} {self.name}: {self.checked} checked, {self.failures} failures"
        if timing:
            out += f" ({self.seconds:.1f}s)"
        if self.first:
            out += f"; first: {self.first}"
        return out


def _timed(fn: Callable[..., SweepResult]) -> Callable[..., SweepResult]:
    def wrapper(*args, **kwargs) -> SweepResult:
        t = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def classical_pairs(max_n: int, d_max: int | None = None) -> Iterator[PosetQ]:
    """Type A of rank ``<= max_n`` (every ``j``), then ``(B_n,n)``, ``(B_n,1)``,
    ``(D_n,n)`` and ``(D_n,1)`` for ``n <= max_n`` (``n <= d_max`` for type D)."""
    d_max = max_n if d_max is None else d_max
    for r in range(1, max_n + 1):
        for j in range(1, r + 1):
            yield build_poset("A", r, j)
    for n in range(1, max_n + 1):
        yield build_poset("B", n, n)
    for n in range(2, max_n + 1):
        yield build_poset("B", n, 1)
    for n in range(2, d_max + 1):
        yield build_poset("D", n, n)
    for n in range(3, d_max + 1):
        yield build_poset("D", n, 1)


def _where(d) -> str:
    return f"{d.poset.name} {inline(d)!r}"


@_timed
def pattern_sweep(max_n: int = 5) -> SweepResult:
    """Pattern predicate agrees with ``is_pds`` on every filling of every ideal."""
    res = SweepResult("pattern <=> PDS")
    for p in classical_pairs(max_n):
        for o in p.ideals:
            for d in fillings(o):
                res.checked += 1
                a = pattern_predicate(d)(d)
                if a != is_pds(d):
                    res.fail(f"{_where(d)} pattern={a}")
    return res


def bruhat_rank_polynomial(o: OrderIdeal) -> list[int]:
    """Coefficients of ``sum_{x <= w} q^(l(w) - l(x))``."""
    w = o.element
    lw = length(w)
    out = [0] * (lw + 1)
    for x in bruhat_interval_below(w):
        out[lw - length(x)] += 1
    return out


@_timed
def cell_count_sweep(max_n: int = 5) -> SweepResult:
    """Graded Le-diagram count of each shape equals the Bruhat rank polynomial."""
    res = SweepResult("cell counts = Bruhat intervals")
    for p in classical_pairs(max_n):
        for o in p.ideals:
            res.checked += 1
            le = le_count_by_plus(o)
            br = bruhat_rank_polynomial(o)
            if le != br:
                res.fail(f"{p.name} rows={o.row_lengths()} le={le} bruhat={br}")
    return res


@_timed
def game_sweep(max_n: int = 5, d_max: int = 4, seed: int = 0) -> SweepResult:
    """The Le-game reaches ``leify_direct`` under two strategies, value kept at every step."""
    res = SweepResult("Le-game completeness")
    rnd = legame.random_strategy(seed)
    for p in classical_pairs(max_n, d_max):
        for o in p.ideals:
            for d in fillings(o):
                res.checked += 1
                target = leify_direct(d)
                try:
                    a = legame.play_le_game(d, legame.southwest_strategy, check_value=True)
                    b = legame.play_le_game(d, rnd, check_value=True)
                except AssertionError as exc:
                    res.fail(f"{_where(d)}: {exc}")
                    continue
                if not (a == b == target):
                    res.fail(f"{_where(d)} -> {inline(a)!r} / {inline(b)!r}, expected {inline(target)!r}")
    return res


A_EXAMPLE = ("A", 7, 4, "/0+/000/+++0")
A_PHI2 = "(1,3,6,2,4,5,8,7), (1,4,6,8,2,3,5,7)"
A_PHI3 = "~1 4 5 3 8 ~6 7 2"
B_EXAMPLE = ("B", 3, 3, "+/00/+")
B_PHI2 = "(2,-1,3), (-3,-1,2)"
B_PHI3 = "~1 3 -2"


@_timed
def triangle_sweep(max_a: int = 5, max_b: int = 4) -> SweepResult:
    """``phi3 = phi1 . phi2`` and ``phi3`` is injective, plus the two worked examples."""
    res = SweepResult("commutative triangles")
    pairs = [build_poset("A", r, j) for r in range(1, max_a + 1) for j in range(1, r + 1)]
    pairs += [build_poset("B", n, n) for n in range(1, max_b + 1)]
    for p in pairs:
        seen: dict[bij.DecoratedPermutation, str] = {}
        total = 0
        for o in p.ideals:
            for d in le_diagrams(o):
                res.checked += 1
                total += 1
                pi = bij.phi3(d)
                if bij.phi1(bij.phi2(d)) != pi:
                    res.fail(f"{_where(d)}: phi1.phi2 != phi3")
                if pi in seen:
                    res.fail(f"{_where(d)} and {seen[pi]} share {pi}")
                seen[pi] = inline(d)
                if bij.phi3_inverse(pi, p) != d:
                    res.fail(f"{_where(d)}: inverse round trip")
        if len(seen) != total:
            res.fail(f"{p.name}: {len(seen)} images for {total} diagrams")
        if p.type_tag == "B" and total != en.big_B(p.n):
            res.fail(f"{p.name}: {total} diagrams, B(n)={en.big_B(p.n)}")
    for spec, want2, want3 in ((A_EXAMPLE, A_PHI2, A_PHI3), (B_EXAMPLE, B_PHI2, B_PHI3)):
        t, n, j, text = spec
        d = parse_inline(build_poset(t, n, j), text)
        res.checked += 1
        c = bij.phi2(d)
        if str(c) != want2 or str(bij.phi3(d)) != want3 or str(bij.phi1(c)) != want3:
            res.fail(f"worked example {text!r}: {c} / {bij.phi3(d)}")
    return res


@_timed
def enumeration_sweep(max_b1: int = 7, max_d1: int = 6, max_bb: int = 4, max_t: int = 5,
                      max_t11: int = 6, max_stair: int = 5) -> SweepResult:
    """Recurrences and closed forms against brute-force censuses."""
    res = SweepResult("enumeration")

    def check(ok: bool, what: str) -> None:
        res.checked += 1
        if not ok:
            res.fail(what)

    check(str(en.bhat_q(2)) == "1+2q+2q^2+q^3", f"bhat_2 = {en.bhat_q(2)}")
    for n in range(1, max_b1 + 1):
        c = en.census("B", n, 1, method="pattern" if n > 1 else "pds")
        check(c == en.bhat_q(n), f"bhat_{n}: census {c} vs {en.bhat_q(n)}")
        check(en.bhat_gf(n) == c(1), f"bhat_{n} generating function")
    for n in range(3, max_d1 + 1):
        c = en.census("D", n, 1, method="pattern")
        check(c == en.dhat_q(n), f"dhat_{n}: census {c} vs {en.dhat_q(n)}")
        check(en.dhat_gf(n) == c(1), f"dhat_{n} generating function")
    for n in range(2, max(max_b1, max_d1) + 1):
        for f in (en.bhat_q, en.dhat_q):
            if n >= 4 or f is en.bhat_q and n >= 3:
                two = en.q_int(2)
                rhs = two * two * f(n - 1) - two * en.QPolynomial.q(2) * f(n - 2)
                check(f(n) == rhs, f"{f.__name__}({n}) recurrence")
    for n in range(0, max_bb + 1):
        census = en.census("B", n, n, scope="all", grading="count") if n else 1
        check(en.big_B(n) == census == en.decorated_signed_count(n) == en.big_B_sum(n),
              f"B({n}) = {en.big_B(n)}, census {census}")
    for n in range(1, max_t + 1):
        check(en.tableau_census(n) == en.T_poly(n), f"T_{n}: census {en.tableau_census(n)}")
    for n in range(1, max_t11 + 1):
        check(en.T_poly(n)(1, 1) == en.signed_count(n), f"T_{n}(1,1)")
    for n in range(1, max_stair + 1):
        c = en.census("B", n, n)
        check(c == en.b_staircase_q(n), f"b({n}): census {c} vs {en.b_staircase_q(n)}")
        check(c(1) == 2 * en.preference_count(n), f"b({n}) at q=1 vs preference functions")
    return res


PSI_EXAMPLE = (4, 6, 3, 1, 7, 5, 7, 2, 1)


@_timed
def preference_sweep(max_round: int = 5, max_count: int = 6, trace_fixture: str | None = None) -> SweepResult:
    """alpha round trips, Phi/Psi inverse to each other, and the two counting theorems."""
    res = SweepResult("preference bijections")

    def check(ok: bool, what: str) -> None:
        res.checked += 1
        if not ok:
            res.fail(what)

    for n in range(1, max_round + 1):
        for f in preference.preference_functions(n):
            pi = preference.alpha_inverse(f)
            check(preference.in_J(pi) and preference.alpha(pi) == f, f"alpha round trip at {f}")
        for f in preference.atomic_preference_functions(n):
            s = preference.psi_staircase(f, debug=True)
            check(preference.phi_D(s) == f, f"Phi(Psi({f}))")
        if n >= 2:
            p = build_poset("D", n, n)
            for d in le_diagrams(OrderIdeal(p, p.full_mask)):
                f = preference.phi_D(d)
                check(preference.is_atomic(f) and preference.psi(f) == d, f"Psi(Phi({inline(d)!r}))")
    for n in range(1, max_count + 1):
        atomic = sum(1 for _ in preference.atomic_preference_functions(n))
        prefs = sum(1 for _ in preference.preference_functions(n))
        check(prefs == en.preference_count(n), f"preference count n={n}")
        if n >= 2:
            d_count = en.census("D", n, n, grading="count", method="dfs")
            check(d_count == atomic, f"(D_{n},{n}): {d_count} diagrams, {atomic} atomic")
        b_count = en.census("B", n, n, grading="count", method="dfs")
        check(b_count == 2 * prefs, f"(B_{n},{n}): {b_count} diagrams, {prefs} preference functions")
    if trace_fixture is not None:
        steps = preference.psi_trace(PSI_EXAMPLE, debug=True)
        got = [st.grid.render() for st in steps]
        want = [block.split("\n", 1)[1] for block in trace_fixture.strip().split("\n\n")]
        check(got[: len(want)] == want, "worked-example trace differs from the figures")
    return res


@_timed
def move_sweep(max_n: int = 5) -> SweepResult:
    """Every move template satisfies the root criterion; a corrupted one does not."""
    res = SweepResult("move verification")
    for p in classical_pairs(max_n):
        for m in legame.complete_system(p):
            res.checked += 1
            if not legame.verify_template(m):
                res.fail(f"{p.name} {m.describe()}")
    p = build_poset("A", 3, 2)
    good = next(m for m in legame.complete_system(p) if m.family == "rectangular")
    bad_S = {pos: (legame.ZERO if sym == legame.PLUS else legame.PLUS) for pos, sym in good.S}
    res.checked += 1
    if legame.verify_move_triple(p, good.x, good.y, bad_S):
        res.fail("corrupted template passed")
    return res


SWEEPS: dict[str, Callable[..., SweepResult]] = {
    "patterns": pattern_sweep,
    "cells": cell_count_sweep,
    "game": game_sweep,
    "triangles": triangle_sweep,
    "enumeration": enumeration_sweep,
    "preference": preference_sweep,
    "moves": move_sweep,
}


def run_all(max_n: int = 4) -> list[SweepResult]:
    """Every sweep at a uniform scale (used by the CLI oracle)."""
    n = max_n
    return [
        pattern_sweep(n),
        cell_count_sweep(n),
        game_sweep(n, min(n, 4)),
        triangle_sweep(n, n),
        enumeration_sweep(n, n, n, n, n, n),
        preference_sweep(n, n),
        move_sweep(n),
    ]
