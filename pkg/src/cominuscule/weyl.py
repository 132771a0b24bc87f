"""Finite Weyl groups of types A, B, D, E6 and E7.

An element is stored as the permutation it induces on the root set.  Roots
are indexed so that the ``N`` positive roots come first and ``-beta`` sits at
index ``N + index(beta)``; a root index ``k`` is negative iff ``k >= N``.

Composition is functional: ``(u * v)(beta) = u(v(beta))``, so a word
``s_{i_1} ... s_{i_m}`` acts by ``s_{i_m}`` first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

TYPES = ("A", "B", "D", "E6", "E7")

_E8_SIMPLE_DOUBLED = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
)


def _unit(dim: int, k: int, scale: int = 1) -> list[int]:
    v = [0] * dim
    v[k] = scale
    return v


def _simple_roots(type_tag: str, rank: int) -> list[tuple[int, ...]]:
    if type_tag == "A":
        dim = rank + 1
        return [tuple(np.subtract(_unit(dim, i), _unit(dim, i + 1))) for i in range(rank)]
    if type_tag == "B":
        out = [tuple(np.subtract(_unit(rank, i), _unit(rank, i + 1))) for i in range(rank - 1)]
        out.append(tuple(_unit(rank, rank - 1)))
        return out
    if type_tag == "D":
        if rank < 2:
            raise ValueError("type D needs rank >= 2")
        out = [tuple(np.subtract(_unit(rank, i), _unit(rank, i + 1))) for i in range(rank - 1)]
        out.append(tuple(np.add(_unit(rank, rank - 2), _unit(rank, rank - 1))))
        return out
    if type_tag in ("E6", "E7"):
        return [tuple(v) for v in _E8_SIMPLE_DOUBLED[:rank]]
    raise ValueError(f"unsupported type {type_tag!r}")


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """Root data of one finite type, with cached reflection permutations.

    ``roots[k]`` holds integer coordinates (doubled for E types) and
    ``coeffs[k]`` the expansion in simple roots.
    """

    type_tag: str
    rank: int
    simple_roots: tuple[tuple[int, ...], ...]
    roots: tuple[tuple[int, ...], ...]
    coeffs: tuple[tuple[int, ...], ...]
    simple_index: tuple[int, ...]
    reflections: tuple[tuple[int, ...], ...]
    root_index: dict = field(repr=False)

    @property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: self.n_positive]

    @property
    def name(self) -> str:
        return self.type_tag if self.type_tag.startswith("E") else f"{self.type_tag}{self.rank}"

    def reflection_of(self, beta: int) -> tuple[int, ...]:
        """Root permutation of the reflection in root ``beta`` (any index)."""
        return _all_reflections(self)[beta % self.n_positive]

    def __repr__(self) -> str:
        return f"RootSystemData({self.name})"


def _reflect(v: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    k = 2 * int(np.dot(v, a)) // int(np.dot(a, a))
    return tuple(int(x) for x in np.subtract(v, np.multiply(k, a)))


@lru_cache(maxsize=None)
def root_system(type_tag: str, rank: int | None = None) -> RootSystemData:
    """Return the (cached) root data for ``type_tag``.

    For E types the rank is implied and may be omitted.
    """
    if type_tag in ("E6", "E7"):
        expected = int(type_tag[1])
        if rank not in (None, expected):
            raise ValueError(f"{type_tag} has rank {expected}")
        rank = expected
    if type_tag not in TYPES:
        raise ValueError(f"unsupported type {type_tag!r}")
    if rank is None or rank < 1:
        raise ValueError("rank must be a positive integer")
    simple = _simple_roots(type_tag, rank)

    # BFS closure of the simple roots, tracking coordinates and coefficients.
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    queue: deque[tuple[tuple[int, ...], tuple[int, ...]]] = deque()
    for i, a in enumerate(simple):
        c = tuple(1 if k == i else 0 for k in range(rank))
        found[a] = c
        queue.append((a, c))
    while queue:
        v, c = queue.popleft()
        for i, a in enumerate(simple):
            w = _reflect(v, a)
            if w in found:
                continue
            shift = 2 * int(np.dot(v, a)) // int(np.dot(a, a))
            cw = tuple(x - (shift if m == i else 0) for m, x in enumerate(c))
            found[w] = cw
            queue.append((w, cw))

    positive = sorted(
        (c, v) for v, c in found.items() if all(x >= 0 for x in c)
    )
    positive.sort(key=lambda cv: (sum(cv[0]), cv[0]))
    pos_roots = [v for _, v in positive]
    pos_coeffs = [c for c, _ in positive]
    roots = pos_roots + [tuple(-x for x in v) for v in pos_roots]
    coeffs = pos_coeffs + [tuple(-x for x in c) for c in pos_coeffs]
    index = {v: k for k, v in enumerate(roots)}
    simple_index = tuple(index[a] for a in simple)
    reflections = tuple(
        tuple(index[_reflect(v, a)] for v in roots) for a in simple
    )
    return RootSystemData(
        type_tag=type_tag,
        rank=rank,
        simple_roots=tuple(simple),
        roots=tuple(roots),
        coeffs=tuple(coeffs),
        simple_index=simple_index,
        reflections=reflections,
        root_index=index,
    )


@lru_cache(maxsize=None)
def _all_reflections(data: RootSystemData) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(data.root_index[_reflect(v, beta)] for v in data.roots)
        for beta in data.positive_roots
    )


def positive_root_count(type_tag: str, rank: int) -> int:
    """Textbook number of positive roots."""
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "D": rank * (rank - 1),
        "E6": 36,
        "E7": 63,
    }[type_tag]


@dataclass(frozen=True, eq=False)
class WeylElement:
    data: RootSystemData
    perm: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.data is other.data and self.perm == other.perm

    def __hash__(self) -> int:
        return hash((id(self.data), self.perm))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    @property
    def simple_images(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.data.roots[self.perm[k]] for k in self.data.simple_index)

    @property
    def length(self) -> int:
        n = self.data.n_positive
        return sum(1 for k in self.perm[:n] if k >= n)

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for k, m in enumerate(self.perm):
            inv[m] = k
        return WeylElement(self.data, tuple(inv))

    def apply_root(self, k: int) -> int:
        return self.perm[k]

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self)

    def __repr__(self) -> str:
        word = " ".join(f"s{i}" for i in self.reduced_word()) or "1"
        return f"<{self.data.name}: {word}>"


def identity(data: RootSystemData) -> WeylElement:
    return WeylElement(data, tuple(range(len(data.roots))))


def _check_index(data: RootSystemData, i: int) -> None:
    if not 1 <= i <= data.rank:
        raise ValueError(f"simple index {i} out of range 1..{data.rank}")


def simple_reflection(data: RootSystemData, i: int) -> WeylElement:
    _check_index(data, i)
    return WeylElement(data, data.reflections[i - 1])


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    if u.data is not v.data:
        raise ValueError("elements belong to different root systems")
    up = u.perm
    return WeylElement(u.data, tuple(up[k] for k in v.perm))


def rmul_simple(w: WeylElement, i: int) -> WeylElement:
    """``w * s_i`` without building ``s_i``."""
    p = w.perm
    return WeylElement(w.data, tuple(p[k] for k in w.data.reflections[i - 1]))


def lmul_simple(i: int, w: WeylElement) -> WeylElement:
    r = w.data.reflections[i - 1]
    return WeylElement(w.data, tuple(r[k] for k in w.perm))


def from_word(data: RootSystemData, word: Iterable[int]) -> WeylElement:
    """Product ``s_{i_1} s_{i_2} ...`` of the given letters."""
    p = tuple(range(len(data.roots)))
    refl = data.reflections
    for i in word:
        _check_index(data, i)
        p = tuple(p[k] for k in refl[i - 1])
    return WeylElement(data, p)


def is_right_descent(w: WeylElement, i: int) -> bool:
    """True iff ``l(w s_i) < l(w)``, i.e. ``w`` sends ``alpha_i`` negative."""
    _check_index(w.data, i)
    return w.perm[w.data.simple_index[i - 1]] >= w.data.n_positive


def is_left_descent(w: WeylElement, i: int) -> bool:
    return is_right_descent(w.inverse(), i)


def length(w: WeylElement) -> int:
    return w.length


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Some reduced word, found by repeatedly stripping right descents."""
    data = w.data
    n = data.n_positive
    p = w.perm
    letters: list[int] = []
    while True:
        for i, k in enumerate(data.simple_index):
            if p[k] >= n:
                p = tuple(p[m] for m in data.reflections[i])
                letters.append(i + 1)
                break
        else:
            break
    return tuple(reversed(letters))


def is_reduced(data: RootSystemData, word: Sequence[int]) -> bool:
    return from_word(data, word).length == len(word)


def bruhat_leq(x: WeylElement, w_word: Sequence[int]) -> bool:
    """Bruhat comparison ``x <= w`` for ``w`` given by a reduced word.

    Scans the word right to left, peeling off a letter whenever it is a
    right descent of the current element; ``x <= w`` iff this ends at 1.
    """
    data = x.data
    if not is_reduced(data, w_word):
        raise ValueError("word is not reduced")
    n = data.n_positive
    p = x.perm
    for i in reversed(w_word):
        if p[data.simple_index[i - 1]] >= n:
            p = tuple(p[k] for k in data.reflections[i - 1])
    return p == tuple(range(len(p)))


def bruhat_le(x: WeylElement, w: WeylElement) -> bool:
    return bruhat_leq(x, reduced_word(w))


def elements(data: RootSystemData, generators: Iterable[int] | None = None) -> list[WeylElement]:
    """All elements of the (parabolic) subgroup generated by the given simple indices."""
    gens = list(range(1, data.rank + 1)) if generators is None else list(generators)
    start = tuple(range(len(data.roots)))
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for i in gens:
            q = tuple(p[k] for k in data.reflections[i - 1])
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return [WeylElement(data, p) for p in seen]


def bruhat_interval_below(w: WeylElement) -> set[WeylElement]:
    """``{x : x <= w}`` from the definition: close downward under ``w -> w t``
    for reflections ``t`` with ``l(w t) < l(w)``."""
    data = w.data
    n = data.n_positive
    refl = _all_reflections(data)
    seen = {w.perm}
    stack = [w.perm]
    while stack:
        p = stack.pop()
        for b in range(n):
            if p[b] >= n:
                q = tuple(p[k] for k in refl[b])
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return {WeylElement(data, p) for p in seen}


def from_simple_images(data: RootSystemData, images: Sequence[Sequence[int]]) -> WeylElement:
    """Build the element sending ``alpha_i`` to ``images[i-1]`` (coordinates)."""
    coeffs = np.array(data.coeffs, dtype=np.int64)
    img = np.array(images, dtype=np.int64)
    out = coeffs @ img
    try:
        perm = tuple(data.root_index[tuple(int(x) for x in row)] for row in out)
    except KeyError as exc:
        raise ValueError("images do not define a Weyl group element") from exc
    if len(set(perm)) != len(perm):
        raise ValueError("images do not define a Weyl group element")
    return WeylElement(data, perm)


# --- classical one-line notation -------------------------------------------


def one_line(w: WeylElement) -> tuple[int, ...]:
    """Type A: ``(w(1), ..., w(m))`` for ``w`` in ``S_m``."""
    data = w.data
    if data.type_tag != "A":
        raise ValueError("one-line notation is for type A")
    m = data.rank + 1
    out = []
    for k in range(m):
        l = (k + 1) % m
        v = [0] * m
        v[k], v[l] = 1, -1
        img = data.roots[w.perm[data.root_index[tuple(v)]]]
        out.append(img.index(1) + 1)
    return tuple(out)


def from_one_line(data: RootSystemData, perm: Sequence[int]) -> WeylElement:
    if data.type_tag != "A" or sorted(perm) != list(range(1, data.rank + 2)):
        raise ValueError("not a permutation of the right size")
    m = data.rank + 1
    images = []
    for i in range(data.rank):
        v = [0] * m
        v[perm[i] - 1] += 1
        v[perm[i + 1] - 1] -= 1
        images.append(v)
    return from_simple_images(data, images)


@dataclass(frozen=True)
class SignedPermutation:
    """Window ``(a_1, ..., a_n)``; as a map ``pi(i) = a_i`` and ``pi(-i) = -a_i``."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(abs(a) for a in self.window) != list(range(1, len(self.window) + 1)):
            raise ValueError(f"not a signed permutation: {self.window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> SignedPermutation:
        out = [0] * self.n
        for i, a in enumerate(self.window, start=1):
            out[abs(a) - 1] = i if a > 0 else -i
        return SignedPermutation(tuple(out))

    @property
    def negatives(self) -> int:
        return sum(1 for a in self.window if a < 0)

    def letters(self) -> list[int]:
        """``-n, ..., -1, 1, ..., n`` in increasing order."""
        return list(range(-self.n, 0)) + list(range(1, self.n + 1))

    def as_type_a(self) -> tuple[int, ...]:
        """One-line permutation of positions ``1..2n`` standing for ``-n..-1, 1..n``."""
        pos = {a: k for k, a in enumerate(self.letters(), start=1)}
        return tuple(pos[self(a)] for a in self.letters())

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.window) + ")"


def _coordinate_image(w: WeylElement, k: int) -> tuple[int, ...]:
    """Image of the basis vector ``e_k`` (1-based) for types B and D."""
    data = w.data
    n = data.rank
    if data.type_tag == "B":
        return data.roots[w.perm[data.root_index[tuple(_unit(n, k - 1))]]]
    l = 0 if k != 1 else 1
    a = tuple(np.subtract(_unit(n, k - 1), _unit(n, l)))
    b = tuple(np.add(_unit(n, k - 1), _unit(n, l)))
    ia = data.roots[w.perm[data.root_index[a]]]
    ib = data.roots[w.perm[data.root_index[b]]]
    return tuple((x + y) // 2 for x, y in zip(ia, ib))


def _signed_window(w: WeylElement) -> SignedPermutation:
    # The coordinate e_k corresponds to the letter n+1-k.
    n = w.data.rank
    out = [0] * n
    for i in range(1, n + 1):
        img = _coordinate_image(w, n + 1 - i)
        m = next(t for t, x in enumerate(img) if x)
        out[i - 1] = (n - m) * (1 if img[m] > 0 else -1)
    return SignedPermutation(tuple(out))


def iota_embed(w: WeylElement) -> SignedPermutation:
    """Type B element as a signed permutation.

    The generator ``s_n`` (short root) acts as ``(-1, 1)`` and ``s_k`` for
    ``k < n`` swaps the letters ``n-k`` and ``n-k+1`` (and their negatives).
    """
    if w.data.type_tag != "B":
        raise ValueError("iota_embed needs a type B element")
    return _signed_window(w)


def delta_embed(w: WeylElement) -> SignedPermutation:
    """Type D element as an even signed permutation; ``s_n -> (1,-2)(2,-1)``."""
    if w.data.type_tag != "D":
        raise ValueError("delta_embed needs a type D element")
    return _signed_window(w)


def from_signed(data: RootSystemData, pi: SignedPermutation) -> WeylElement:
    """Inverse of :func:`iota_embed` / :func:`delta_embed`."""
    if data.type_tag not in ("B", "D") or pi.n != data.rank:
        raise ValueError("signed permutation does not fit this root system")
    n = data.rank

    def coord(letter: int) -> np.ndarray:
        img = pi(letter)
        return np.multiply(_unit(n, n - abs(img)), 1 if img > 0 else -1)

    images = []
    for a in data.simple_roots:
        v = np.zeros(n, dtype=np.int64)
        for m, x in enumerate(a):
            if x:
                v = v + x * coord(n - m)
        images.append(v)
    return from_simple_images(data, images)


def iter_words(data: RootSystemData, w: WeylElement) -> Iterator[tuple[int, ...]]:
    """All reduced words of ``w`` (small elements only)."""
    if w.length == 0:
        yield ()
        return
    for i in range(1, data.rank + 1):
        if is_right_descent(w, i):
            for word in iter_words(data, rmul_simple(w, i)):
                yield word + (i,)
