"""
Chern-Schwartz-MacPherson classes of Schubert cells.

On G/B the class of a cell is built by the operators

    T_i(c) = q + (alpha_i cap q) - c,   q = pull-push of c along G/B -> G/P_i,

applied along a reduced word, starting from the point class.  Classes on
G/P are pushforwards of the G/B classes.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import DomainError
from .schubmod import (
    SchubertClass,
    chevalley_cap,
    full_flag,
    pull_push_i,
    push_to_parabolic,
    simple_root_weight,
)
from .weyl import ParabolicQuotient, WeylElement, in_quotient, minimal_reps

_lock = threading.Lock()
_memo: dict[tuple, SchubertClass] = {}


@dataclass(frozen=True)
class CsmClass:
    cell: WeylElement
    value: SchubertClass

    def coefficient(self, w) -> int:
        return self.value.coefficient(w)

    def top_coefficient(self) -> int:
        return self.value.coefficient(self.cell)

    def point_coefficient(self) -> int:
        return self.value.coefficient(self.value.group.rho)

    def to_json(self) -> dict:
        out = self.value.to_json()
        out["cell"] = self.cell.word_str or "e"
        return out


def dl_operator(i: int, c: SchubertClass) -> SchubertClass:
    q = pull_push_i(c, i)
    return q + chevalley_cap(simple_root_weight(c.group, i), q) - c


def csm_of_word(quotient: ParabolicQuotient, word) -> SchubertClass:
    """Fold the operators along `word` without any memoization."""
    c = SchubertClass.point(quotient)
    for i in word:
        c = dl_operator(i, c)
    return c


def _csm_value(w: WeylElement) -> SchubertClass:
    g = w.group
    key = (id(g), w.key)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    quotient = full_flag(g)
    if w.is_identity():
        value = SchubertClass.point(quotient)
    else:
        last = w.word[-1]
        value = dl_operator(last, _csm_value(w.right(last)))
    with _lock:
        _memo.setdefault(key, value)
    return value


def csm_cell(w: WeylElement, word=None) -> CsmClass:
    """CSM class of the cell of w in G/B.

    With `word` given, that reduced word is used and nothing is cached.
    """
    if word is None:
        return CsmClass(w, _csm_value(w))
    word = tuple(word)
    if w.group.element(word) != w:
        raise DomainError("word does not represent the given element")
    return CsmClass(w, csm_of_word(full_flag(w.group), word))


def csm_cell_parabolic(w: WeylElement, excluded, word=None) -> CsmClass:
    """CSM class of the cell of w in G/P, w a minimal coset representative."""
    quotient = minimal_reps(w.system, excluded)
    if not in_quotient(w, quotient.excluded):
        raise DomainError(f"{w.word_str} is not a minimal coset representative")
    full = csm_cell(w, word)
    return CsmClass(w, push_to_parabolic(full.value, quotient.excluded))


def homogeneous_component(c: CsmClass, k: int) -> SchubertClass:
    if not 0 <= k <= c.cell.length:
        raise DomainError(f"degree {k} outside 0..{c.cell.length}")
    return c.value.component(k)


def check_invariants(c: CsmClass) -> list[str]:
    """Names of the violated invariants (empty when all hold)."""
    problems = []
    if c.top_coefficient() != 1:
        problems.append("top coefficient")
    if c.point_coefficient() != 1:
        problems.append("point coefficient")
    if any(coeff < 1 for _, coeff in c.value.terms()):
        problems.append("positivity")
    g = c.cell.group
    if any(not g.bruhat_leq_keys(w.key, c.cell.key) for w in c.value.support()):
        problems.append("support below the cell")
    return problems


def clear_cache() -> None:
    with _lock:
        _memo.clear()
