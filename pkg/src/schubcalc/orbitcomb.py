"""
Orbits of a flag stabilizer S inside B acting on the Schubert cells of P^{n-1}.

Permutations are in one-line notation on 1..n.  The cell of index a is the
set of lines spanned by a vector v with v_a = 1 and v_j = 0 for j > a.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exactla
from .errors import DomainError


def _check_perm(w) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def inverse_perm(w) -> tuple[int, ...]:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


@dataclass(frozen=True)
class StabilizerPattern:
    n: int
    w: tuple[int, ...]
    forced_zero: frozenset[tuple[int, int]]

    def allowed(self, i: int, j: int) -> bool:
        """Entry (i, j) of the stabilizer may be nonzero."""
        return i <= j and (i, j) not in self.forced_zero


def stabilizer_pattern(w) -> StabilizerPattern:
    w = _check_perm(w)
    inv = inverse_perm(w)
    n = len(w)
    zeros = frozenset((i, j) for i, j in combinations(range(1, n + 1), 2) if inv[i - 1] > inv[j - 1])
    return StabilizerPattern(n, w, zeros)


def _check_column(w, a: int) -> None:
    if not 1 <= a <= len(w):
        raise DomainError(f"column {a} outside 1..{len(w)}")


def ibar(w, a: int) -> frozenset[int]:
    """Rows i < a where every element of the stabilizer has a zero in column a."""
    pat = stabilizer_pattern(w)
    _check_column(w, a)
    return frozenset(i for i in range(1, a) if (i, a) in pat.forced_zero)


@dataclass(frozen=True)
class OrbitCell:
    a: int
    I: frozenset[int]
    ibar: frozenset[int]

    @property
    def dim(self) -> int:
        return self.a - 1 - len(self.I)

    def contains(self, v) -> bool:
        a = self.a
        if v[a - 1] != 1 or any(v[i] != 0 for i in range(a, len(v))):
            return False
        return all((v[i - 1] == 0) == (i in self.I) for i in self.ibar)

    def description(self) -> str:
        parts = [f"v{self.a}=1"]
        parts += [f"v{i}=0" for i in sorted(self.I)]
        parts += [f"v{i}!=0" for i in sorted(self.ibar - self.I)]
        return ", ".join(parts)

    def to_json(self):
        return {"a": self.a, "I": sorted(self.I), "dim": self.dim, "pattern": self.description()}


def orbit_cells(w, a: int) -> list[OrbitCell]:
    bar = ibar(w, a)
    members = sorted(bar)
    return [
        OrbitCell(a, frozenset(I), bar)
        for r in range(len(members) + 1)
        for I in combinations(members, r)
    ]


def cell_of(w, v) -> OrbitCell:
    """The orbit cell containing the normalized vector v (v_a = 1, zeros below)."""
    nonzero = [i for i, x in enumerate(v, start=1) if x != 0]
    if not nonzero or v[nonzero[-1] - 1] != 1:
        raise DomainError("vector must be normalized with last nonzero entry 1")
    a = nonzero[-1]
    bar = ibar(w, a)
    return OrbitCell(a, frozenset(i for i in bar if v[i - 1] == 0), bar)


def sample_point(cell: OrbitCell, n: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[cell.a - 1] = Fraction(1)
    for i in range(1, cell.a):
        if i not in cell.I:
            v[i - 1] = Fraction(i + 1)
    return v


def orbit_dimension(w, cell: OrbitCell) -> int:
    """Dimension of the Lie-algebra image at a sample point, modulo its line."""
    pat = stabilizer_pattern(w)
    n = pat.n
    v = sample_point(cell, n)
    vectors = [v]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if pat.allowed(i, j) and v[j - 1] != 0:
                e = [Fraction(0)] * n
                e[i - 1] = v[j - 1]
                vectors.append(e)
    return exactla.rank(vectors) - 1


def verify_transitivity(w, a: int, I) -> bool:
    bar = ibar(w, a)
    I = frozenset(I)
    if not I <= bar:
        raise DomainError(f"{sorted(I)} is not a subset of {sorted(bar)}")
    cell = OrbitCell(a, I, bar)
    return orbit_dimension(w, cell) == cell.dim


def pattern_preserves(w, cell: OrbitCell) -> bool:
    """Applying any single allowed entry to the sample point stays in the cell's closure."""
    pat = stabilizer_pattern(w)
    v = sample_point(cell, pat.n)
    for i in range(1, pat.n + 1):
        for j in range(i, pat.n + 1):
            if not pat.allowed(i, j) or v[j - 1] == 0:
                continue
            # the image of v under 1 + E_ij must keep the zero pattern on I and below a
            if i in cell.I or i > cell.a:
                return False
    return True


def orbit_report(w, a: int) -> dict:
    cells = orbit_cells(w, a)
    return {
        "w": list(_check_perm(w)),
        "a": a,
        "ibar": sorted(ibar(w, a)),
        "cells": [dict(c.to_json(), transitive=verify_transitivity(w, a, c.I)) for c in cells],
    }
