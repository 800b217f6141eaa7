"""
Integer combinations of Schubert classes on G/P and the homological
Chevalley formula.

A class is a sparse map from minimal coset representatives to integers.
Internally terms are keyed by the element's u(rho) vector.
"""
from __future__ import annotations

from collections import defaultdict

import numpy as np

from .errors import DomainError
from .weyl import (
    ParabolicQuotient,
    WeylElement,
    WeylGroup,
    format_word,
    minimal_reps,
)


class SchubertClass:
    """Finitely supported integer combination of classes sigma_w, w in W^P."""

    __slots__ = ("quotient", "_terms")

    def __init__(self, quotient: ParabolicQuotient, terms=None):
        self.quotient = quotient
        clean = {}
        for key, c in (terms or {}).items():
            if isinstance(key, WeylElement):
                key = key.key
            if c:
                if not quotient.contains_key(key):
                    raise DomainError("term outside the coset space of this class")
                clean[key] = int(c)
        self._terms = clean

    @classmethod
    def basis(cls, quotient: ParabolicQuotient, w: WeylElement, coeff: int = 1):
        return cls(quotient, {w.key: coeff})

    @classmethod
    def point(cls, quotient: ParabolicQuotient):
        return cls(quotient, {quotient.group.rho: 1})

    @property
    def group(self) -> WeylGroup:
        return self.quotient.group

    def _raw(self):
        return self._terms

    def coefficient(self, w) -> int:
        if isinstance(w, str) or isinstance(w, tuple) and all(isinstance(i, int) for i in w) and len(w) != self.group.rank:
            w = self.group.element(w)
        key = w.key if isinstance(w, WeylElement) else w
        return self._terms.get(key, 0)

    def terms(self) -> list[tuple[WeylElement, int]]:
        """Terms sorted by (length, word)."""
        items = [(WeylElement(self.group, k), c) for k, c in self._terms.items()]
        items.sort(key=lambda t: t[0].sort_key())
        return items

    def component(self, k: int) -> "SchubertClass":
        g = self.group
        return SchubertClass(self.quotient, {key: c for key, c in self._terms.items() if g.length_of(key) == k})

    def support(self) -> list[WeylElement]:
        return [w for w, _ in self.terms()]

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other):
        if not isinstance(other, SchubertClass) or other.quotient is not self.quotient:
            raise DomainError("classes live on different coset spaces")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return SchubertClass(self.quotient, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return SchubertClass(self.quotient, {k: scalar * c for k, c in self._terms.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, SchubertClass)
            and other.quotient is self.quotient
            and other._terms == self._terms
        )

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def as_pairs(self) -> list[tuple[str, int]]:
        """[(word, coeff)], identity written 'e'."""
        return [(w.word_str or "e", c) for w, c in self.terms()]

    def to_json(self) -> dict:
        return {
            "group": self.quotient.system.label,
            "parabolic": list(self.quotient.excluded),
            "terms": [{"word": w, "coeff": c} for w, c in self.as_pairs()],
        }

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*s[{w}]" for w, c in self.as_pairs())


def full_flag(group_or_system) -> ParabolicQuotient:
    system = getattr(group_or_system, "system", group_or_system)
    return minimal_reps(system, list(system.nodes))


def _cap_basis(quotient: ParabolicQuotient, weight: tuple, key: tuple) -> dict:
    g = quotient.group
    cache = g.__dict__.setdefault("_cap_cache", {})
    ck = (quotient.excluded, weight, key)
    hit = cache.get(ck)
    if hit is not None:
        return hit
    v = np.array(key, dtype=np.int64)
    ell = g.length_of(key)
    u_lambda = g.matrix_of(key) @ np.array(weight, dtype=np.int64)
    pair_v = g.coroots @ v
    pair_l = g.coroots @ u_lambda
    out = {}
    # u s_beta = s_gamma u with gamma = -u(beta); the inversions of u^{-1}
    # are exactly the gamma with <u rho, gamma^vee> < 0
    for idx in np.nonzero(pair_v < 0)[0]:
        new = tuple(int(x) for x in v - pair_v[idx] * g.roots_w[idx])
        if g.length_of(new) != ell - 1 or not quotient.contains_key(new):
            continue
        coeff = -int(pair_l[idx])
        if coeff:
            out[new] = out.get(new, 0) + coeff
    cache[ck] = out
    return out


def _as_weight(group: WeylGroup, weight) -> tuple:
    w = tuple(int(x) for x in weight)
    if len(w) != group.rank:
        raise DomainError("weight has the wrong number of coordinates")
    return w


def chevalley_cap(weight, c: SchubertClass) -> SchubertClass:
    """Cap with c_1 of the line bundle of `weight` (fundamental-weight coordinates).

    sigma_w maps to the sum over positive roots beta with w s_beta a
    codimension-one element of W^P, weighted by <weight, beta^vee>.
    """
    weight = _as_weight(c.group, weight)
    out = defaultdict(int)
    for key, coeff in c._raw().items():
        for new, m in _cap_basis(c.quotient, weight, key).items():
            out[new] += coeff * m
    return SchubertClass(c.quotient, out)


def simple_root_weight(group: WeylGroup, i: int) -> tuple:
    return tuple(int(x) for x in group.cartan[:, i - 1])


def push_to_parabolic(c: SchubertClass, excluded) -> SchubertClass:
    """Pushforward G/B -> G/P: keep the terms whose index is already in W^P."""
    if not c.quotient.is_full():
        raise DomainError("pushforward expects a class on the full flag variety")
    target = minimal_reps(c.quotient.system, excluded)
    return SchubertClass(target, {k: v for k, v in c._raw().items() if target.contains_key(k)})


def pull_push_i(c: SchubertClass, i: int) -> SchubertClass:
    """Pull back after pushing forward along G/B -> G/P_i."""
    if not c.quotient.is_full():
        raise DomainError("pull_push_i expects a class on the full flag variety")
    g = c.group
    out = {}
    for key, coeff in c._raw().items():
        new = g.right_mul(key, i)
        if g.length_of(new) > g.length_of(key):
            out[new] = out.get(new, 0) + coeff
    return SchubertClass(c.quotient, out)


def default_polarization(quotient: ParabolicQuotient) -> tuple:
    return tuple(int(j in quotient.excluded) for j in quotient.system.nodes)


def degree(w: WeylElement, quotient: ParabolicQuotient, weight=None) -> int:
    """Degree of X_P(w) under the embedding given by `weight`.

    The default weight is the sum of the fundamental weights of the marked nodes.
    """
    if w not in quotient:
        raise DomainError(f"{w.word_str} is not a minimal coset representative")
    if weight is None:
        weight = default_polarization(quotient)
    weight = _as_weight(quotient.group, weight)
    for j in quotient.system.nodes:
        marked = j in quotient.excluded
        if (marked and weight[j - 1] <= 0) or (not marked and weight[j - 1] != 0):
            raise DomainError(f"weight {weight} is not ample on {quotient.system.label}/P")
    c = SchubertClass.basis(quotient, w)
    for _ in range(w.length):
        c = chevalley_cap(weight, c)
    return c.coefficient(quotient.group.rho)


def count_saturated_chains(w: WeylElement, quotient: ParabolicQuotient) -> int:
    """Number of maximal chains from w down to e in the Bruhat order of W^P.

    Covers are found by testing every lower-length element with bruhat_leq,
    independently of the Chevalley coefficients.
    """
    g = quotient.group
    by_len = defaultdict(list)
    for r in quotient.reps:
        by_len[r.length].append(r.key)
    memo = {g.rho: 1}

    def chains(key):
        if key in memo:
            return memo[key]
        ell = g.length_of(key)
        total = sum(chains(k) for k in by_len[ell - 1] if g.bruhat_leq_keys(k, key))
        memo[key] = total
        return total

    return chains(w.key)


__all__ = [
    "SchubertClass", "chevalley_cap", "push_to_parabolic", "pull_push_i",
    "degree", "count_saturated_chains", "full_flag", "simple_root_weight",
    "default_polarization", "format_word",
]
