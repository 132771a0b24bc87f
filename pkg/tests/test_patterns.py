from pathlib import Path

import pytest

from cominuscule.diagrams import all_plus, all_zero, fillings, is_pds, parse_inline
from cominuscule.patterns import (
    conjugate_B1,
    conjugate_D1,
    is_le,
    is_le_A,
    is_le_B_1,
    is_le_B_n,
    is_le_D_1,
    is_le_D_n,
    pattern_predicate,
)
from cominuscule.posets import build_poset
from cominuscule.preference import Staircase

TRACE = Path(__file__).parent / "data" / "psi_example_trace.txt"


def _staircase_from_block(block):
    lines = block.splitlines()[2:]
    n = len(lines)
    cells = {}
    for a, line in enumerate(lines, start=1):
        glyphs = line.split()[1:]
        for b, g in zip(range(n, 0, -1), glyphs):
            if a < b:
                cells[(a, b)] = None if g == "." else g
    return Staircase(n, cells)


def test_type_a_examples():
    p = build_poset("A", 3, 2)
    assert is_le_A(all_plus(p.top))
    assert not is_le_A(parse_inline(p, "+0/0+"))
    assert is_le_A(parse_inline(build_poset("A", 7, 4), "/0+/000/+++0"))


def test_type_b_examples():
    assert is_le_B_n(all_zero(build_poset("B", 4, 4).top))
    assert is_le_B_n(parse_inline(build_poset("B", 3, 3), "+/00/+"))
    d = parse_inline(build_poset("B", 2, 2), "+0/0")
    assert not is_le_B_n(d) and not is_pds(d)


def test_type_b1_examples():
    p = build_poset("B", 2, 1)
    assert [b.label for b in p.boxes] == [1, 2, 1]
    assert is_le_B_1(all_plus(p.top))
    assert not is_le_B_1(parse_inline(p, "++0"))
    assert is_le_B_1(parse_inline(p, "+00"))
    for d in fillings(p.top):
        assert is_le_B_1(d) == is_pds(d)


def test_type_d_examples():
    assert is_le_D_n(all_zero(build_poset("D", 5, 5).top))
    # found by diffing against is_pds with condition (2) switched off
    d = parse_inline(build_poset("D", 4, 4), "0+0/+0/0")
    assert not is_pds(d) and not is_le_D_n(d)


def test_worked_example_final_grid_is_le():
    final = TRACE.read_text().strip().split("\n\n")[-1]
    assert final.startswith("D_2")
    d = _staircase_from_block(final).to_diagram()
    assert is_le_D_n(d) and is_pds(d)


def test_type_d1_examples():
    p = build_poset("D", 4, 1)
    assert is_le_D_1(all_plus(p.top))
    d = parse_inline(p, "+00/00+")
    assert not is_le_D_1(d) and not is_pds(d)


@pytest.mark.parametrize("pair", [("A", 3, 1), ("A", 3, 2), ("A", 4, 2), ("B", 3, 3), ("B", 4, 4),
                                  ("B", 3, 1), ("B", 4, 1), ("D", 4, 4), ("D", 4, 1), ("D", 5, 1)])
def test_pattern_matches_pds(pair):
    p = build_poset(*pair)
    pred = pattern_predicate(all_zero(p.top))
    for o in p.ideals:
        for d in fillings(o):
            assert pred(d) == is_pds(d)


def test_wrong_type_rejected():
    d = all_zero(build_poset("B", 3, 3).top)
    with pytest.raises(ValueError):
        is_le_A(d)
    with pytest.raises(ValueError):
        is_le_B_1(d)
    assert is_le(all_zero(build_poset("E6", None, 1).top)) is None


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_conjugates_are_involutions(n):
    b1 = build_poset("B", n, 1)
    for box in b1.boxes:
        c = conjugate_B1(n, box.col)
        assert conjugate_B1(n, c) == box.col
        assert b1.box_at(0, c).label == box.label
    d1 = build_poset("D", n, 1)
    for box in d1.boxes:
        other = conjugate_D1(n, box.pos)
        assert other != box.pos
        assert conjugate_D1(n, other) == box.pos
        assert d1.box_at(*other).label == box.label or {box.label, d1.box_at(*other).label} == {n - 1, n}
