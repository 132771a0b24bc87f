import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cominuscule.weyl import (
    SignedPermutation,
    bruhat_interval_below,
    bruhat_le,
    bruhat_leq,
    delta_embed,
    elements,
    from_one_line,
    from_signed,
    from_word,
    identity,
    iota_embed,
    is_reduced,
    is_right_descent,
    iter_words,
    one_line,
    reduced_word,
    root_system,
    simple_reflection,
)

ALL_TYPES = [("A", r) for r in range(1, 9)] + [("B", r) for r in range(2, 9)] + \
    [("D", r) for r in range(3, 9)] + [("E6", None), ("E7", None)]


@pytest.mark.parametrize("type_tag,rank,count", [
    ("A", 3, 6), ("A", 5, 15), ("B", 3, 9), ("B", 4, 16), ("D", 4, 12), ("D", 5, 20),
    ("E6", None, 36), ("E7", None, 63),
])
def test_positive_root_counts(type_tag, rank, count):
    assert root_system(type_tag, rank).n_positive == count


@pytest.mark.parametrize("type_tag,rank,order", [
    ("A", 3, 24), ("B", 3, 48), ("D", 4, 192), ("E6", None, 51840),
])
def test_group_orders(type_tag, rank, order):
    assert len(elements(root_system(type_tag, rank))) == order


def test_a2_reflection_swaps_coordinates():
    data = root_system("A", 2)
    s1 = simple_reflection(data, 1)
    for k, r in enumerate(data.roots):
        swapped = (r[1], r[0], r[2])
        assert data.roots[s1.perm[k]] == swapped


@pytest.mark.parametrize("type_tag,rank", ALL_TYPES)
def test_simple_reflections_are_involutions(type_tag, rank):
    data = root_system(type_tag, rank)
    e = identity(data)
    for i in range(1, data.rank + 1):
        s = simple_reflection(data, i)
        assert s * s == e
        assert s.length == 1


def test_b2_coxeter_relation():
    data = root_system("B", 2)
    st12 = from_word(data, [1, 2])
    assert st12 * st12 != identity(data)
    assert st12 * st12 * st12 * st12 == identity(data)


def test_multiply_basics():
    data = root_system("A", 3)
    s1 = simple_reflection(data, 1)
    assert s1 * identity(data) == s1
    assert s1 * s1 == identity(data)
    assert from_word(root_system("A", 4), [3, 2, 1, 4, 3, 2]).length == 6


def test_multiply_rejects_mixed_systems():
    with pytest.raises(ValueError):
        simple_reflection(root_system("A", 2), 1) * simple_reflection(root_system("A", 3), 1)


def test_bad_simple_index():
    with pytest.raises(ValueError):
        simple_reflection(root_system("A", 2), 3)
    with pytest.raises(ValueError):
        from_word(root_system("A", 2), [0])


def test_right_descent_matches_length_drop():
    data = root_system("A", 3)
    e = identity(data)
    assert not any(is_right_descent(e, i) for i in (1, 2, 3))
    assert is_right_descent(simple_reflection(root_system("A", 2), 1), 1)
    for w in elements(data):
        for i in (1, 2, 3):
            assert is_right_descent(w, i) == ((w * simple_reflection(data, i)).length < w.length)


def _subword_oracle(x, word):
    data = x.data
    for mask in range(1 << len(word)):
        sub = [a for t, a in enumerate(word) if mask >> t & 1]
        if len(sub) == x.length and from_word(data, sub) == x:
            return True
    return False


def test_bruhat_against_subword_property():
    data = root_system("A", 3)
    els = elements(data)
    for w in els:
        word = reduced_word(w)
        assert bruhat_leq(identity(data), word)
        assert bruhat_leq(w, word)
        for x in els:
            assert bruhat_leq(x, word) == _subword_oracle(x, word)


def test_bruhat_two_routes_agree_b3():
    data = root_system("B", 3)
    els = elements(data)
    for w in els:
        below = bruhat_interval_below(w)
        assert {x for x in els if bruhat_le(x, w)} == below


def test_bruhat_rejects_non_reduced_word():
    data = root_system("A", 2)
    with pytest.raises(ValueError):
        bruhat_leq(identity(data), [1, 1])


def test_iota_examples():
    data = root_system("B", 3)
    assert iota_embed(identity(data)).window == (1, 2, 3)
    # s~0 s~1 and s~2 s~0 s~1 s~0 in the signed labelling
    assert iota_embed(from_word(data, [3, 2])).window == (2, -1, 3)
    assert iota_embed(from_word(data, [1, 3, 2, 3])).window == (-3, -1, 2)


def test_iota_is_homomorphism_b3():
    data = root_system("B", 3)
    els = elements(data)
    images = {w: iota_embed(w) for w in els}
    assert len(set(images.values())) == 48
    for u in els:
        for v in els:
            assert images[u * v] == images[u] * images[v]


def test_delta_embed_even_and_invertible():
    data = root_system("D", 4)
    assert delta_embed(identity(data)).window == (1, 2, 3, 4)
    seen = set()
    for w in elements(data):
        pi = delta_embed(w)
        assert pi.negatives % 2 == 0
        assert from_signed(data, pi) == w
        seen.add(pi)
    assert len(seen) == 192


def test_embed_type_guards():
    with pytest.raises(ValueError):
        iota_embed(identity(root_system("D", 4)))
    with pytest.raises(ValueError):
        delta_embed(identity(root_system("B", 3)))
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))


def test_one_line_round_trip():
    data = root_system("A", 3)
    perms = {one_line(w) for w in elements(data)}
    assert perms == set(itertools.permutations(range(1, 5)))
    for p in perms:
        assert one_line(from_one_line(data, p)) == p


def test_iter_words_counts():
    # w0 of A3 has 16 reduced words
    data = root_system("A", 3)
    w0 = max(elements(data), key=lambda w: w.length)
    words = list(iter_words(data, w0))
    assert len(words) == 16 and all(is_reduced(data, a) for a in words)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([("A", 4), ("B", 4), ("D", 5), ("E6", None)]),
       st.lists(st.integers(1, 4), max_size=14))
def test_random_words(system, word):
    data = root_system(*system)
    w = from_word(data, word)
    rw = reduced_word(w)
    assert w.length <= len(word)
    assert len(rw) == w.length
    assert from_word(data, rw) == w
    assert w.inverse() == from_word(data, reversed(word))
    assert (w.length - len(word)) % 2 == 0
