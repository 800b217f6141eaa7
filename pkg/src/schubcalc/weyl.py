"""
Weyl group elements, Bruhat order and minimal coset representatives.

An element u is identified by the dominant-chamber image u(rho), written in
fundamental-weight coordinates.  Since rho is regular this vector determines
u, and it makes left multiplication by s_i and the left descent test
(coordinate i negative) trivial.  Everything else (words, right products,
lengths) is derived from it and cached on the group.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, ResourceError
from .rootsys import RootSystem, build, parse_group

DEFAULT_QUOTIENT_CAP = 500_000


class WeylGroup:
    """Arithmetic tables and caches for the Weyl group of one root system."""

    def __init__(self, system: RootSystem):
        self.system = system
        r = system.rank
        self.rank = r
        self.cartan = np.array(system.cartan, dtype=np.int64)
        self.coroots = np.array(system.coroots, dtype=np.int64)
        roots = np.array(system.positive_roots, dtype=np.int64)
        # column j of the Cartan matrix is alpha_j in weight coordinates
        self.roots_w = roots @ self.cartan.T
        self.rho = tuple([1] * r)
        self._length: dict[tuple, int] = {self.rho: 0}
        self._matrix: dict[tuple, np.ndarray] = {self.rho: np.eye(r, dtype=np.int64)}
        self._word: dict[tuple, tuple[int, ...]] = {self.rho: ()}
        self._bruhat: dict[tuple, bool] = {}

    # low-level operations on keys ---------------------------------------

    def length_of(self, key: tuple) -> int:
        n = self._length.get(key)
        if n is None:
            n = int(np.count_nonzero(self.coroots @ np.array(key, dtype=np.int64) < 0))
            self._length[key] = n
        return n

    def left_mul(self, i: int, key: tuple) -> tuple:
        vi = key[i - 1]
        col = self.system.cartan
        return tuple(key[j] - vi * col[j][i - 1] for j in range(self.rank))

    def matrix_of(self, key: tuple) -> np.ndarray:
        """Matrix of u acting on fundamental-weight coordinates."""
        m = self._matrix.get(key)
        if m is None:
            word = self.word_of(key)
            m = np.eye(self.rank, dtype=np.int64)
            for i in reversed(word):
                m = m - np.outer(self.cartan[:, i - 1], m[i - 1])
            self._matrix[key] = m
        return m

    def act(self, key: tuple, weight) -> np.ndarray:
        return self.matrix_of(key) @ np.asarray(weight, dtype=np.int64)

    def right_mul(self, key: tuple, i: int) -> tuple:
        # u s_i rho = u(rho - alpha_i)
        shift = self.matrix_of(key) @ self.cartan[:, i - 1]
        return tuple(int(x) for x in np.array(key, dtype=np.int64) - shift)

    def word_of(self, key: tuple) -> tuple[int, ...]:
        """Lexicographically smallest reduced word."""
        w = self._word.get(key)
        if w is None:
            letters = []
            v = key
            while any(x < 0 for x in v):
                i = next(j for j, x in enumerate(v) if x < 0) + 1
                letters.append(i)
                v = self.left_mul(i, v)
            w = tuple(letters)
            self._word[key] = w
        return w

    def key_from_word(self, word) -> tuple:
        v = self.rho
        for i in reversed(tuple(word)):
            if not 1 <= i <= self.rank:
                raise DomainError(f"letter {i} out of range for {self.system.label}")
            if v[i - 1] < 0:
                raise DomainError(f"word {format_word(word)} is not reduced")
            v = self.left_mul(i, v)
        return v

    def right_descent(self, key: tuple, i: int) -> bool:
        return self.length_of(self.right_mul(key, i)) < self.length_of(key)

    def reflect_left(self, key: tuple, root_index: int) -> tuple:
        d = int(self.coroots[root_index] @ np.array(key, dtype=np.int64))
        return tuple(int(x) for x in np.array(key, dtype=np.int64) - d * self.roots_w[root_index])

    # elements --------------------------------------------------------------

    def element(self, word=()) -> "WeylElement":
        if isinstance(word, str):
            word = parse_word(word)
        return WeylElement(self, self.key_from_word(word))

    def identity(self) -> "WeylElement":
        return WeylElement(self, self.rho)

    def longest(self) -> "WeylElement":
        v = self.rho
        while True:
            for i in range(1, self.rank + 1):
                if v[i - 1] > 0:
                    v = self.left_mul(i, v)
                    break
            else:
                return WeylElement(self, v)

    def all_elements(self, cap: int = DEFAULT_QUOTIENT_CAP) -> list["WeylElement"]:
        return minimal_reps(self.system, list(self.system.nodes), cap=cap).reps

    def bruhat_leq_keys(self, u: tuple, w: tuple) -> bool:
        memo = self._bruhat.get((u, w))
        if memo is not None:
            return memo
        lw, lu = self.length_of(w), self.length_of(u)
        if lu > lw:
            res = False
        elif lw == 0:
            res = u == w
        elif lu == 0:
            res = True
        else:
            i = next(j for j in range(1, self.rank + 1) if self.right_descent(w, j))
            ws = self.right_mul(w, i)
            us = self.right_mul(u, i)
            if self.length_of(us) < lu:
                res = self.bruhat_leq_keys(us, ws)
            else:
                res = self.bruhat_leq_keys(u, ws)
        self._bruhat[(u, w)] = res
        return res


@lru_cache(maxsize=None)
def weyl_group(system: RootSystem) -> WeylGroup:
    return WeylGroup(system)


def group(label: str, rank: int | None = None) -> WeylGroup:
    return weyl_group(parse_group(label, rank))


@dataclass(frozen=True, eq=False)
class WeylElement:
    group: WeylGroup
    key: tuple

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and other.group is self.group
            and other.key == self.key
        )

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"WeylElement({self.group.system.label}, {self.word_str or 'e'})"

    @property
    def system(self) -> RootSystem:
        return self.group.system

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.word_of(self.key)

    @property
    def word_str(self) -> str:
        return format_word(self.word)

    @property
    def length(self) -> int:
        return self.group.length_of(self.key)

    def is_identity(self) -> bool:
        return self.key == self.group.rho

    def left(self, i: int) -> "WeylElement":
        return WeylElement(self.group, self.group.left_mul(i, self.key))

    def right(self, i: int) -> "WeylElement":
        return WeylElement(self.group, self.group.right_mul(self.key, i))

    def has_right_descent(self, i: int) -> bool:
        return self.group.right_descent(self.key, i)

    def has_left_descent(self, i: int) -> bool:
        return self.key[i - 1] < 0

    def right_descents(self) -> list[int]:
        return [i for i in self.system.nodes if self.has_right_descent(i)]

    def sort_key(self):
        return (self.length, self.word)


def length(w: WeylElement) -> int:
    return w.length


def _check_same(u: WeylElement, w: WeylElement) -> None:
    if u.group is not w.group:
        raise DomainError("elements belong to different Weyl groups")


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """u <= w in Bruhat order (right-descent recursion)."""
    _check_same(u, w)
    return u.group.bruhat_leq_keys(u.key, w.key)


def parse_word(text: str) -> tuple[int, ...]:
    """Digit strings ('24315') or comma lists ('2,4,10'); 'e' or '' is the identity."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        if "," in text:
            return tuple(int(t) for t in text.split(",") if t.strip())
        return tuple(int(c) for c in text)
    except ValueError:
        raise DomainError(f"cannot parse word {text!r}") from None


def format_word(word) -> str:
    word = tuple(word)
    if any(i > 9 for i in word):
        return ",".join(map(str, word))
    return "".join(map(str, word))


def in_quotient(w: WeylElement, excluded) -> bool:
    """w is minimal in its coset w W_P, W_P generated by nodes outside `excluded`."""
    return all(not w.has_right_descent(j) for j in w.system.nodes if j not in excluded)


@dataclass(frozen=True)
class ParabolicQuotient:
    system: RootSystem
    excluded: tuple[int, ...]
    reps: tuple[WeylElement, ...]

    @property
    def group(self) -> WeylGroup:
        return weyl_group(self.system)

    def __len__(self):
        return len(self.reps)

    def __contains__(self, w):
        return isinstance(w, WeylElement) and w.key in self._keys

    @property
    def _keys(self):
        ks = self.__dict__.get("_keyset")
        if ks is None:
            ks = frozenset(r.key for r in self.reps)
            object.__setattr__(self, "_keyset", ks)
        return ks

    def contains_key(self, key) -> bool:
        return key in self._keys

    def is_full(self) -> bool:
        return set(self.excluded) == set(self.system.nodes)

    def element(self, word) -> WeylElement:
        w = self.group.element(word)
        if w not in self:
            raise DomainError(f"{w.word_str or 'e'} is not a minimal coset representative")
        return w


def _normalize_excluded(system: RootSystem, excluded) -> tuple[int, ...]:
    ex = tuple(sorted(set(int(j) for j in excluded)))
    for j in ex:
        if j not in system.nodes:
            raise DomainError(f"node {j} is not a simple root of {system.label}")
    return ex


@lru_cache(maxsize=None)
def _minimal_reps(system: RootSystem, excluded: tuple[int, ...], cap: int) -> ParabolicQuotient:
    g = weyl_group(system)
    inside = [j for j in system.nodes if j not in excluded]
    level = [g.rho]
    seen = {g.rho}
    out = []
    while level:
        out.extend(level)
        if len(seen) > cap:
            raise ResourceError(f"coset space of {system.label} exceeds cap {cap}")
        nxt = []
        for key in level:
            for i in system.nodes:
                if key[i - 1] <= 0:
                    continue
                new = g.left_mul(i, key)
                if new in seen:
                    continue
                if all(not g.right_descent(new, j) for j in inside):
                    seen.add(new)
                    nxt.append(new)
        level = nxt
    elems = sorted((WeylElement(g, k) for k in out), key=WeylElement.sort_key)
    return ParabolicQuotient(system, excluded, tuple(elems))


def minimal_reps(system: RootSystem, excluded, cap: int = DEFAULT_QUOTIENT_CAP) -> ParabolicQuotient:
    """All minimal-length representatives of W/W_P, sorted by (length, word).

    `excluded` lists the marked nodes; W_P is generated by the other simple
    reflections.  Marking every node gives the whole group.
    """
    return _minimal_reps(system, _normalize_excluded(system, excluded), cap)


def phi_w(w: WeylElement, excluded) -> list[int]:
    """Marked nodes j with l(w s_j) < l(w)."""
    ex = _normalize_excluded(w.system, excluded)
    if not in_quotient(w, ex):
        raise DomainError(f"{w.word_str} is not a minimal coset representative")
    return [j for j in ex if w.has_right_descent(j)]


def element(label: str, word, rank: int | None = None) -> WeylElement:
    return group(label, rank).element(word)


def reduced_words(w: WeylElement, limit: int | None = None) -> list[tuple[int, ...]]:
    """All reduced words of w in lexicographic order (at most `limit` of them)."""
    memo: dict[tuple, list[tuple[int, ...]]] = {}

    def words(x: WeylElement):
        hit = memo.get(x.key)
        if hit is None:
            if x.is_identity():
                hit = [()]
            else:
                hit = sorted(p + (i,) for i in x.right_descents() for p in words(x.right(i)))
            memo[x.key] = hit
        return hit

    out = words(w)
    return out if limit is None else out[:limit]


def random_reduced_word(w: WeylElement, rng) -> tuple[int, ...]:
    """A reduced word of w built by peeling uniformly chosen right descents."""
    letters = []
    while not w.is_identity():
        i = rng.choice(w.right_descents())
        letters.append(i)
        w = w.right(i)
    return tuple(reversed(letters))


__all__ = [
    "WeylGroup", "WeylElement", "ParabolicQuotient", "weyl_group", "group",
    "element", "length", "bruhat_leq", "minimal_reps", "phi_w", "parse_word",
    "format_word", "in_quotient", "build", "reduced_words", "random_reduced_word",
]
