import json

import pytest
from hypothesis import given, settings, strategies as st

from cominuscule import weyl
from cominuscule.diagrams import (
    all_plus,
    all_zero,
    fillings,
    from_filling,
    from_json,
    inline,
    is_pds,
    le_count_by_plus,
    le_diagrams,
    leify_direct,
    parse_inline,
    pds_filling,
    render_ascii,
    to_json,
    to_subexpression,
    value,
)
from cominuscule.posets import build_poset, linear_extensions, order_ideals

A42 = build_poset("A", 4, 2)


def _pds_oracle(d):
    """Prefix products must grow in length at every letter, kept or not."""
    data = d.poset.data
    sub = to_subexpression(d)
    v = weyl.identity(data)
    # the subexpression is read left to right as v_(1), v_(2), ...
    for i, kept in zip(sub.word, sub.kept):
        if (v * weyl.simple_reflection(data, i)).length < v.length:
            return False
        if kept:
            v = v * weyl.simple_reflection(data, i)
    return True


def test_section_examples():
    first = parse_inline(A42, "000/000")
    second = parse_inline(A42, "0+0/00+")
    third = parse_inline(A42, "000/+0+")
    assert str(to_subexpression(first)) == "s3 s2 s1 s4 s3 s2"
    assert str(to_subexpression(second)) == "s3 1 s1 1 s3 s2"
    assert str(to_subexpression(third)) == "s3 s2 s1 1 s3 1"
    assert is_pds(first) and not is_pds(second) and is_pds(third)
    data = A42.data
    assert value(second) == weyl.from_word(data, [3, 1, 3, 2]) == weyl.from_word(data, [1, 2])


def test_leify_second_example():
    second = parse_inline(A42, "0+0/00+")
    target = [d for d in fillings(A42.top) if is_pds(d) and value(d) == value(second)]
    assert len(target) == 1
    assert leify_direct(second) == target[0]
    assert inline(target[0]) == "0++/0++"


def test_trivial_values():
    o = A42.top
    assert value(all_plus(o)) == weyl.identity(A42.data)
    assert value(all_zero(o)) == o.element
    assert leify_direct(all_plus(o)) == all_plus(o)


@pytest.mark.parametrize("pair", [("A", 3, 2), ("A", 4, 2), ("B", 3, 3), ("B", 3, 1), ("D", 4, 4),
                                  ("D", 4, 1), ("D", 5, 4)])
def test_pds_against_length_oracle(pair):
    p = build_poset(*pair)
    for o in order_ideals(p):
        for d in fillings(o):
            assert is_pds(d) == _pds_oracle(d), inline(d)


@pytest.mark.parametrize("pair", [("A", 4, 2), ("B", 3, 3), ("D", 4, 1), ("E6", None, 1)])
def test_unique_pds_per_interval_element(pair):
    p = build_poset(*pair)
    for o in order_ideals(p):
        les = list(le_diagrams(o))
        vals = [value(d) for d in les]
        assert len(set(vals)) == len(vals)
        assert set(vals) == weyl.bruhat_interval_below(o.element)
        for d, v in zip(les, vals):
            assert pds_filling(o, v) == d


def test_le_diagrams_match_filter():
    p = build_poset("B", 3, 3)
    for o in order_ideals(p):
        assert set(le_diagrams(o)) == {d for d in fillings(o) if is_pds(d)}


def test_pds_filling_rejects_element_outside_interval():
    o = A42.ideal([(1, 0)])
    with pytest.raises(ValueError):
        pds_filling(o, A42.top.element)


def test_graded_count_b21():
    assert le_count_by_plus(build_poset("B", 2, 1).top) == [1, 2, 2, 1]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("A", 4, 2), ("B", 3, 3), ("D", 4, 4)]), st.data())
def test_value_independent_of_reading_order(pair, data):
    p = build_poset(*pair)
    o = data.draw(st.sampled_from(p.ideals))
    d = data.draw(st.sampled_from(list(fillings(o))))
    exts = list(linear_extensions(o))
    e = data.draw(st.sampled_from(exts))
    assert value(d, e) == value(d)
    assert is_pds(d, e) == is_pds(d)


def test_text_formats_round_trip():
    for o in A42.ideals:
        for d in fillings(o):
            assert parse_inline(A42, inline(d)) == d
            assert from_json(json.dumps(to_json(d))) == d


def test_render_ascii():
    d = parse_inline(A42, "+/0+")
    assert render_ascii(d) == "+..\n0+."
    assert render_ascii(d, french=True) == "0+.\n+.."


def test_parse_errors_name_the_box():
    with pytest.raises(ValueError, match=r"\(1,1\)"):
        parse_inline(A42, "000/0x0")
    with pytest.raises(ValueError):
        parse_inline(A42, "000")
    with pytest.raises(ValueError):
        parse_inline(A42, "0000/000")
    with pytest.raises(ValueError, match="box"):
        from_json({"poset": {"type": "A", "n": 4, "j": 2}, "ideal_rows": [3, 3], "filling": ["000", "00"]})
    with pytest.raises(ValueError):
        from_json({"filling": []})
    with pytest.raises(ValueError, match="not an order ideal"):
        parse_inline(A42, "000/")


def test_from_filling():
    o = A42.top
    d = from_filling(o, {b: "+" if b.row == 0 else "0" for b in o.boxes})
    assert inline(d) == "+++/000"
    with pytest.raises(ValueError):
        from_filling(o, {o.boxes[0]: "+"})
    with pytest.raises(ValueError, match="invalid symbol"):
        from_filling(o, {b: "?" for b in o.boxes})
