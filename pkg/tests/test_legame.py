from math import comb

import pytest

from cominuscule.diagrams import fillings, is_pds, leify_direct, parse_inline, value, all_zero
from cominuscule.legame import (
    WILD,
    apply_move,
    check_game,
    compatible,
    complete_system,
    enumerate_moves,
    families_for,
    get_strategy,
    le_game_trace,
    make_template,
    performable,
    performable_moves,
    play_le_game,
    verify_move_triple,
    verify_template,
)
from cominuscule.patterns import is_le_A
from cominuscule.posets import build_poset

A32 = build_poset("A", 3, 2)


@pytest.mark.parametrize("rank,j", [(3, 2), (4, 2), (5, 3), (6, 3)])
def test_rectangle_census(rank, j):
    p = build_poset("A", rank, j)
    rows, cols = j, rank + 1 - j
    assert len(list(enumerate_moves(p, "rectangular"))) == comb(rows, 2) * comb(cols, 2)


def test_rectangular_moves_verify_a53():
    p = build_poset("A", 5, 3)
    assert all(verify_template(m) for m in enumerate_moves(p, "rectangular"))


def test_diagonal_moves_verify_b44():
    p = build_poset("B", 4, 4)
    moves = list(enumerate_moves(p, "diagonal"))
    assert len(moves) == comb(4, 2)
    assert all(verify_template(m) for m in moves)


def test_swapped_corners_fail():
    m = next(enumerate_moves(A32, "rectangular"))
    assert verify_template(m)
    assert not verify_move_triple(A32, m.x, m.y, {pos: "0" for pos, _ in m.S})


@pytest.mark.parametrize("pair", [("B", 4, 1), ("D", 4, 4), ("D", 5, 5), ("D", 4, 1), ("D", 5, 1)])
def test_type_families_verify(pair):
    p = build_poset(*pair)
    for m in complete_system(p):
        assert verify_template(m), m.describe()


def test_compatibility_rules():
    p = build_poset("A", 5, 3)
    x, y = (2, 0), (0, 2)
    wild = make_template(p, x, y, lambda pos: WILD)
    zeros = make_template(p, x, y, lambda pos: "0")
    full = p.top
    for d in list(fillings(full))[:64]:
        assert compatible(d, wild)
    d = parse_inline(p, "000/0+0/000")
    assert not compatible(d, zeros)


def test_witness_move_repairs_violation():
    # the violation picture: + left of y, + below y, the 0 at y
    d = parse_inline(A32, "+0/0+")
    assert not is_le_A(d)
    m = next(enumerate_moves(A32, "rectangular"))
    assert compatible(d, m) and performable(d, m)
    after = apply_move(d, m)
    assert value(after) == value(d)
    assert is_le_A(after)
    with pytest.raises(ValueError):
        apply_move(after, m)


def test_moves_preserve_value_a52():
    p = build_poset("A", 5, 2)
    checked = 0
    for o in p.ideals:
        for d in fillings(o):
            for m in performable_moves(d):
                assert value(apply_move(d, m)) == value(d)
                checked += 1
    assert checked > 100


def test_game_on_le_diagram_is_idle():
    d = parse_inline(A32, "0+/0+")
    assert is_pds(d)
    assert le_game_trace(d) == []
    assert play_le_game(d) == d


def test_game_on_section_example():
    p = build_poset("A", 4, 2)
    d = parse_inline(p, "0+0/00+")
    assert play_le_game(d) == leify_direct(d)


def test_game_complete_for_d44():
    p = build_poset("D", 4, 4)
    assert set(families_for(p)) == {"rectangular", "S1", "S2"}
    for o in p.ideals:
        for d in fillings(o):
            assert check_game(d)


@pytest.mark.parametrize("name", ["southwest", "northeast", "random"])
def test_strategies_agree(name):
    p = build_poset("B", 3, 3)
    strat = get_strategy(name, seed=3)
    for o in p.ideals:
        for d in fillings(o):
            assert play_le_game(d, strat, check_value=True) == leify_direct(d)


def test_strategy_and_family_errors():
    with pytest.raises(ValueError):
        get_strategy("latest")
    with pytest.raises(ValueError):
        list(enumerate_moves(A32, "diagonal"))
    with pytest.raises(ValueError):
        families_for(build_poset("E6", None, 1))
    with pytest.raises(ValueError):
        make_template(A32, (0, 1), (1, 0), lambda pos: "0")


def test_verify_rejects_wrong_interval():
    m = next(enumerate_moves(A32, "rectangular"))
    with pytest.raises(ValueError):
        verify_move_triple(A32, m.x, m.y, {})


def test_all_zero_has_no_moves():
    p = build_poset("D", 5, 5)
    assert performable_moves(all_zero(p.top)) == []
