"""
Schubert data for the Cayley plane E6/P6 and the Freudenthal variety E7/P7:
dimension/degree tables, Bruhat-interval filters and the dimension/degree
matching underlying the Tits transform.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import DomainError
from .rootsys import parse_group
from .schubmod import degree
from .weyl import WeylElement, bruhat_leq, minimal_reps, parse_word

EXCEPTIONAL_NODES = {"E6": 6, "E7": 7}


@dataclass(frozen=True)
class Row:
    element: WeylElement
    dim: int
    deg: int

    @property
    def word(self) -> str:
        return self.element.word_str or "e"

    def to_json(self):
        return {"word": self.word, "dim": self.dim, "deg": self.deg}


def schubert_table(label: str, node: int, rank: int | None = None) -> list[Row]:
    """Rows (w, dim, deg) for every w in W^P, P maximal for `node`, sorted by (dim, word)."""
    system = parse_group(label, rank)
    if node not in system.nodes:
        raise DomainError(f"node {node} is not a simple root of {system.label}")
    quotient = minimal_reps(system, [node])
    weight = tuple(int(j == node) for j in system.nodes)
    rows = [Row(w, w.length, degree(w, quotient, weight)) for w in quotient.reps]
    return sorted(rows, key=lambda r: (r.dim, r.element.word))


def table(label: str, node: int | None = None) -> list[Row]:
    label = label.upper()
    if label not in EXCEPTIONAL_NODES:
        raise DomainError(f"tables are provided for E6 and E7, not {label}")
    expected = EXCEPTIONAL_NODES[label]
    if node is not None and node != expected:
        raise DomainError(f"{label} tables use node {expected}")
    return schubert_table(label, expected)


def bruhat_filter(rows: list[Row], bound) -> list[Row]:
    """Rows whose element lies below `bound` (an element or a word) in the Bruhat order."""
    if not rows:
        return []
    g = rows[0].element.group
    if not isinstance(bound, WeylElement):
        bound = g.element(parse_word(bound) if isinstance(bound, str) else tuple(bound))
    if all(r.element != bound for r in rows):
        raise DomainError(f"{bound.word_str or 'e'} is not a row of this table")
    return [r for r in rows if bruhat_leq(r.element, bound)]


@dataclass(frozen=True)
class TitsMatch:
    pairs: tuple[tuple[Row, Row], ...]  # (upper, lower)
    unmatched_upper: tuple[Row, ...]
    unmatched_lower: tuple[Row, ...]

    @property
    def perfect(self) -> bool:
        return not self.unmatched_upper and not self.unmatched_lower

    def to_json(self):
        return {
            "perfect": self.perfect,
            "pairs": [{"upper": u.to_json(), "lower": lo.to_json()} for u, lo in self.pairs],
            "unmatched_upper": [r.to_json() for r in self.unmatched_upper],
            "unmatched_lower": [r.to_json() for r in self.unmatched_lower],
        }


def tits_match(lower: list[Row], upper: list[Row]) -> TitsMatch:
    """Match each upper row (d, g) with a lower row (d - 1, g).

    The upper identity row (the cone vertex) has no source and is dropped.
    Within a (dim, deg) class rows are paired in word order, so the result is
    deterministic.
    """
    pool = defaultdict(list)
    for r in lower:
        pool[r.dim, r.deg].append(r)
    pairs, lost = [], []
    for r in sorted((r for r in upper if r.dim > 0), key=lambda r: (r.dim, r.element.word)):
        bucket = pool.get((r.dim - 1, r.deg))
        if bucket:
            pairs.append((r, bucket.pop(0)))
        else:
            lost.append(r)
    left = sorted((r for rs in pool.values() for r in rs), key=lambda r: (r.dim, r.element.word))
    return TitsMatch(tuple(pairs), tuple(lost), tuple(left))


E6_BOUND = "24315423456"
E7_BOUND = "243154234567"


def spinor_over_cayley() -> TitsMatch:
    """OG(5,10) rows against the E6/P6 interval below 24315423456."""
    lower = schubert_table("D", 5, rank=5)
    return tits_match(lower, bruhat_filter(table("E6"), E6_BOUND))


def cayley_over_freudenthal() -> TitsMatch:
    """E6/P6 interval below 24315423456 against the E7/P7 interval below 243154234567."""
    lower = bruhat_filter(table("E6"), E6_BOUND)
    return tits_match(lower, bruhat_filter(table("E7"), E7_BOUND))
