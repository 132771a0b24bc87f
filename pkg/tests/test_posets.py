import json
from math import comb

import pytest

from cominuscule import weyl
from cominuscule.posets import (
    Box,
    build_poset,
    expected_size,
    ideal_to_word,
    is_linear_extension,
    linear_extensions,
    order_ideals,
    poset_from_json,
    dumps,
)

PAIRS = [("A", 4, 2), ("A", 5, 3), ("B", 3, 3), ("B", 4, 1), ("D", 4, 4), ("D", 5, 4),
         ("D", 4, 1), ("E6", None, 1), ("E6", None, 6), ("E7", None, 7)]


def _rows(p):
    rows = {}
    for b in p.boxes:
        rows.setdefault(b.row, []).append((b.col, b.label))
    return ["".join(str(lab) for _, lab in sorted(v)) for _, v in sorted(rows.items())]


def test_figure_labels():
    assert _rows(build_poset("A", 7, 3)) == ["12345", "23456", "34567"]
    assert _rows(build_poset("B", 4, 4)) == ["1234", "234", "34", "4"]
    assert _rows(build_poset("D", 5, 5)) == ["1234", "235", "34", "5"]


@pytest.mark.parametrize("type_tag,n,j", PAIRS)
def test_size_matches_classification(type_tag, n, j):
    p = build_poset(type_tag, n, j)
    assert len(p.boxes) == expected_size(type_tag, p.n, p.j)
    assert p.top.element.length == len(p.boxes)


def _min_coset_reps(p):
    data = p.data
    others = [i for i in range(1, data.rank + 1) if i != p.j]
    return {w for w in weyl.elements(data) if not any(weyl.is_right_descent(w, i) for i in others)}


@pytest.mark.parametrize("type_tag,n,j", [("A", 4, 2), ("B", 3, 3), ("B", 3, 1), ("D", 4, 4),
                                          ("D", 4, 1), ("E6", None, 1)])
def test_ideals_are_the_minimal_coset_representatives(type_tag, n, j):
    p = build_poset(type_tag, n, j)
    assert {o.element for o in order_ideals(p)} == _min_coset_reps(p)


@pytest.mark.parametrize("p,count", [
    (("A", 6, 3), comb(7, 3)), (("B", 3, 3), 8), (("B", 5, 5), 32), (("B", 4, 1), 8),
    (("D", 5, 5), 16), (("D", 5, 1), 10), (("E6", None, 1), 27), (("E7", None, 7), 56),
])
def test_ideal_counts(p, count):
    assert len(list(order_ideals(build_poset(*p)))) == count


def test_e7_alias():
    assert build_poset("E7", None, 1) is build_poset("E7", None, 7)


@pytest.mark.parametrize("args", [("B", 4, 2), ("D", 2, 1), ("A", 3, 4), ("E6", None, 2),
                                  ("C", 3, 1), ("A", 0, 1)])
def test_non_cominuscule_rejected(args):
    with pytest.raises(ValueError):
        build_poset(*args)


def test_linear_extensions():
    p = build_poset("A", 4, 2)
    assert list(linear_extensions(p.ideal([]))) == [()]
    square = p.ideal([(1, 0), (1, 1), (0, 0), (0, 1)])
    assert len(list(linear_extensions(square))) == 2
    # bottom row read first, left to right
    e = [p.box_at(1, c) for c in range(3)] + [p.box_at(0, c) for c in range(3)]
    assert tuple(e) in list(linear_extensions(p.top))
    assert ideal_to_word(p.top, e) == (3, 2, 1, 4, 3, 2)
    assert ideal_to_word(p.ideal([])) == ()


def test_all_extensions_give_same_element():
    p = build_poset("B", 3, 3)
    elems = {weyl.from_word(p.data, ideal_to_word(p.top, e)) for e in linear_extensions(p.top)}
    assert elems == {p.top.element}


def test_bad_extension_and_ideal():
    p = build_poset("A", 4, 2)
    with pytest.raises(ValueError):
        ideal_to_word(p.top, list(reversed(p.top.boxes)))
    assert not is_linear_extension(p.top, [Box(9, 9, 1)])
    with pytest.raises(ValueError, match=r"\(0,2\)"):
        p.ideal([(0, 2)])
    with pytest.raises(ValueError):
        p.ideal([(5, 5)])


@pytest.mark.parametrize("type_tag,n,j", PAIRS)
def test_json_round_trip(type_tag, n, j):
    p = build_poset(type_tag, n, j)
    assert poset_from_json(json.loads(dumps(p))) is p
