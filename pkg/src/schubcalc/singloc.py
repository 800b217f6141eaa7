"""
Singular loci of Schubert varieties in symplectic Grassmannians SG(k, n).

Two independent routes are provided:

* the case analysis of the exceptional locus of the tower resolution
  (`candidate_components`, `singular_locus`, `case_codimension`), and
* a Jacobian oracle computing Zariski tangent spaces in an affine chart with
  exact rational arithmetic (`tangent_dim_fixed_point`, `oracle_singular_points`).

Conventions: V has basis e_1..e_n, the form pairs e_i with e_{n+1-i}
(omega(e_i, e_{n+1-i}) = 1 for i <= n/2), F_c = span(e_1..e_c) and
F_d^perp = span(e_1..e_{n-d}).  A torus-fixed point is an isotropic
coordinate subspace, written as the ascending tuple of its coordinates.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import exactla
from .errors import DomainError
from .schubidx import IsotropicIndex, dimension, validate, x_seq

log = logging.getLogger(__name__)

Point = tuple[int, ...]


@dataclass(frozen=True)
class Condition:
    """dim(Lambda cap span(e_1..e_cut)) >= rank."""

    cut: int
    rank: int

    @staticmethod
    def flag(c: int, r: int) -> "Condition":
        return Condition(c, r)

    @staticmethod
    def perp(n: int, d: int, r: int) -> "Condition":
        return Condition(n - d, r)


def _check_sg(index: IsotropicIndex) -> IsotropicIndex:
    validate(index)
    if index.family != "SG":
        raise DomainError("singular loci are computed for symplectic Grassmannians only")
    return index


def conditions_of(index: IsotropicIndex) -> list[Condition]:
    k, n = index.k, index.n
    conds = [Condition.flag(ai, i) for i, ai in enumerate(index.a, start=1)]
    conds += [Condition.perp(n, bj, k - j + 1) for j, bj in enumerate(index.b, start=1)]
    return conds


def satisfies(point: Point, conds) -> bool:
    return all(sum(1 for p in point if p <= c.cut) >= c.rank for c in conds)


def contains(index: IsotropicIndex, point: Point) -> bool:
    return satisfies(point, conditions_of(index))


@lru_cache(maxsize=None)
def fixed_points(k: int, n: int) -> tuple[Point, ...]:
    return tuple(p for p in combinations(range(1, n + 1), k) if not any(n + 1 - x in p for x in p))


def point_index(point: Point, n: int) -> IsotropicIndex:
    m = n // 2
    a = tuple(p for p in point if p <= m)
    b = tuple(sorted(n - p for p in point if p > m))
    return IsotropicIndex("SG", len(point), n, a, b)


def index_point(index: IsotropicIndex) -> Point:
    return tuple(sorted(index.a + tuple(index.n - bj for bj in index.b)))


def points_of(index: IsotropicIndex) -> list[Point]:
    conds = conditions_of(index)
    return [p for p in fixed_points(index.k, index.n) if satisfies(p, conds)]


def point_leq(p: Point, q: Point, n: int) -> bool:
    """p lies in the Schubert variety whose open cell contains q."""
    return contains(point_index(q, n), p)


def maximal_points(points, n: int) -> list[Point]:
    pts = list(points)
    return [p for p in pts if not any(q != p and point_leq(p, q, n) for q in pts)]


def canonicalize_conditions(conds, k: int, n: int) -> IsotropicIndex:
    """The index whose Schubert variety is the locus cut out by `conds`.

    Raises DomainError when no isotropic k-plane satisfies the conditions or
    the locus is reducible.
    """
    pts = [p for p in fixed_points(k, n) if satisfies(p, conds)]
    if not pts:
        raise DomainError("no isotropic subspace satisfies these conditions")
    top = maximal_points(pts, n)
    if len(top) > 1:
        raise DomainError(f"conditions cut out a reducible locus with {len(top)} components")
    return point_index(top[0], n)


# ------------------------------------------------------------ Jacobian oracle

def form_matrix(n: int) -> list[list[int]]:
    m = n // 2
    J = [[0] * n for _ in range(n)]
    for i in range(n):
        J[i][n - 1 - i] = 1 if i < m else -1
    return J


def _chart_matrix_at(point: Point, n: int) -> list[list[Fraction]]:
    return [[Fraction(int(c == p - 1)) for c in range(n)] for p in point]


def jacobian_rows(index: IsotropicIndex, mat, pivots) -> tuple[list[list[Fraction]], int]:
    """Gradients of the local equations of Sigma at the chart point `mat`.

    `mat` is k x n with the identity in the (0-based) pivot columns; the
    remaining entries are the chart coordinates.
    """
    k, n = index.k, index.n
    piv = set(pivots)
    variables = [(t, c) for t in range(k) for c in range(n) if c not in piv]
    col = {v: i for i, v in enumerate(variables)}
    J = form_matrix(n)
    rows = []
    for t, s in combinations(range(k), 2):
        g = [Fraction(0)] * len(variables)
        for c in range(n):
            c2 = n - 1 - c
            if (t, c) in col:
                g[col[t, c]] += J[c][c2] * mat[s][c2]
            if (s, c) in col:
                g[col[s, c]] += mat[t][c2] * J[c2][c]
        rows.append(g)
    for cond in conditions_of(index):
        q = k - cond.rank + 1
        cols = range(cond.cut, n)
        if q > len(cols):
            continue
        for R in combinations(range(k), q):
            for C in combinations(cols, q):
                grad = exactla.minor_gradient(mat, R, C)
                if not grad:
                    continue
                g = [Fraction(0)] * len(variables)
                for (r, c), val in grad.items():
                    if (r, c) in col:
                        g[col[r, c]] += val
                rows.append(g)
    return rows, len(variables)


def tangent_dim_at(index: IsotropicIndex, mat, pivots) -> int:
    rows, nvars = jacobian_rows(index, mat, pivots)
    return nvars - exactla.rank(rows)


@lru_cache(maxsize=None)
def _tangent_dim_fixed(index: IsotropicIndex, point: Point) -> int:
    mat = _chart_matrix_at(point, index.n)
    return tangent_dim_at(index, mat, [p - 1 for p in point])


def tangent_dim_fixed_point(index: IsotropicIndex, point) -> int:
    """Zariski tangent space dimension of Sigma at a torus-fixed point."""
    _check_sg(index)
    point = tuple(sorted(point))
    if point not in fixed_points(index.k, index.n):
        raise DomainError(f"{point} is not an isotropic coordinate subspace")
    if not contains(index, point):
        raise DomainError(f"{point} does not lie in {index}")
    return _tangent_dim_fixed(index, point)


def random_unipotent(n: int, rng: random.Random, spread: int = 3):
    """exp of a random strictly upper triangular element of sp(n)."""
    J = form_matrix(n)
    Y = [[Fraction(rng.randint(-spread, spread)) if i < j else Fraction(0) for j in range(n)] for i in range(n)]
    # X = Y - J^{-1} Y^T J lies in sp(n); J^{-1} = -J
    YtJ = exactla.matmul([list(r) for r in zip(*Y)], J)
    X = [[Y[i][j] + sum(J[i][l] * YtJ[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
    b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    term = [row[:] for row in b]
    for r in range(1, n):
        term = exactla.matmul(term, X)
        term = [[x / r for x in row] for row in term]
        b = [[x + y for x, y in zip(rb, rt)] for rb, rt in zip(b, term)]
    bt = [list(r) for r in zip(*b)]
    assert exactla.matmul(exactla.matmul(bt, J), b) == [[Fraction(x) for x in r] for r in J]
    return b


def random_cell_point(index: IsotropicIndex, seed: int = 0):
    """A random point of the open cell, as a chart matrix with its pivots."""
    _check_sg(index)
    rng = random.Random(seed)
    n = index.n
    b = random_unipotent(n, rng)
    pt = index_point(index)
    mat = [[b[r][p - 1] for r in range(n)] for p in pt]
    pivots = [p - 1 for p in pt]
    head = [[row[c] for c in pivots] for row in mat]
    mat = exactla.matmul(exactla.inverse(head), mat)
    return mat, pivots


def generic_tangent_dim(index: IsotropicIndex, seed: int = 0) -> int:
    mat, pivots = random_cell_point(index, seed)
    return tangent_dim_at(index, mat, pivots)


def oracle_singular_points(index: IsotropicIndex) -> set[Point]:
    _check_sg(index)
    d = dimension(index)
    return {p for p in points_of(index) if _tangent_dim_fixed(index, p) > d}


def oracle_singular_locus(index: IsotropicIndex) -> list[IsotropicIndex]:
    """Components of the singular locus found by the Jacobian oracle."""
    pts = oracle_singular_points(index)
    return sorted((point_index(p, index.n) for p in maximal_points(pts, index.n)), key=str)


def oracle_is_smooth(index: IsotropicIndex) -> bool:
    # the singular locus is closed and Borel-stable, so it is empty iff it
    # misses the smallest fixed point
    _check_sg(index)
    bottom = tuple(range(1, index.k + 1))
    return _tangent_dim_fixed(index, bottom) == dimension(index)


# ------------------------------------------------------- case analysis

@dataclass(frozen=True)
class SingularComponent:
    locus_type: str  # "I", "II" or "III"
    pivot: int
    component_index: IsotropicIndex
    codim_in_sigma: int
    case: str = ""
    preimage_codim: int | None = None

    def to_json(self):
        return {
            "type": self.locus_type,
            "pivot": self.pivot,
            "component": self.component_index.to_json(),
            "codim": self.codim_in_sigma,
            "case": self.case,
            "preimage_codim": self.preimage_codim,
        }


def stratum_points(index: IsotropicIndex, locus_type: str, pivot: int) -> list[Point]:
    """Fixed points of Sigma whose cell lies in the defining stratum of the locus."""
    k, n = index.k, index.n
    if locus_type == "I":
        cut, want = index.b[pivot - 1], x_seq(index)[pivot - 1] + 1
    elif locus_type == "II":
        cut, want = index.a[pivot - 1], pivot + 1
    elif locus_type == "III":
        cut, want = n - index.b[pivot - 1], k - pivot + 2
    else:
        raise DomainError(f"unknown locus type {locus_type!r}")
    return [p for p in points_of(index) if sum(1 for x in p if x <= cut) == want]


def locus_components(index: IsotropicIndex, locus_type: str, pivot: int) -> list[IsotropicIndex]:
    pts = stratum_points(index, locus_type, pivot)
    return [point_index(p, index.n) for p in maximal_points(pts, index.n)]


def essential_a_pivots(index: IsotropicIndex) -> list[int]:
    a, k, s = index.a, index.k, index.s
    return [
        i for i in range(1, s + 1)
        if i < k and a[i - 1] > i and (i == s or a[i] != a[i - 1] + 1)
    ]


def _i0(a, i):
    """Smallest i0 <= i with a_i - a_i0 = i - i0 (1-based)."""
    i0 = i
    while i0 > 1 and a[i0 - 2] == a[i0 - 1] - 1:
        i0 -= 1
    return i0


def _j0(b, j):
    j0 = j
    while j0 < len(b) and b[j0] == b[j0 - 1] + 1:
        j0 += 1
    return j0


def exclusion_applies(index: IsotropicIndex) -> bool:
    """The equality case for Sigma(F_{a_s}) excluded from the case-analysis list."""
    s, k, n = index.s, index.k, index.n
    if s == 0 or s == k:
        return False
    x = x_seq(index)
    return 2 * index.a[-1] == n and 2 * x[k - s - 1] == 2 * (s + 1) - (n - 2 * index.b[k - s - 1])


def classify(index: IsotropicIndex, locus_type: str, pivot: int, component_dim: int | None = None):
    """(sub-case label, codimension of the exceptional preimage or None)."""
    a, b, n, k, s = index.a, index.b, index.n, index.k, index.s
    x = x_seq(index)
    dim_sigma = dimension(index)
    if locus_type == "I":
        j = pivot
        bj = b[j - 1]
        if s == 0 or bj >= a[-1]:
            return "I-tangent", None
        if bj not in a:
            tau0 = x[j - 1] + 1
            if j >= 2 and bj == b[j - 2] + 1:
                if component_dim is None:
                    return "I-1-2", None
                return "I-1-2", dim_sigma - component_dim - (a[tau0 - 1] - bj - 1)
            return "I-1-1", a[tau0 - 1] - bj
        tau0 = a.index(bj) + 1
        i0 = _i0(a, tau0)
        if any(bb == a[i0 - 1] - 2 for bb in b):
            if component_dim is None:
                return "I-2-2", None
            return "I-2-2", dim_sigma - component_dim - (a[tau0] - a[tau0 - 1])
        return "I-2-1", tau0 - i0 + 2 + a[tau0] - a[tau0 - 1]
    if locus_type == "II":
        i = pivot
        i0 = _i0(a, i)
        if i < s:
            if any(a[i - 1] - bj == 2 for bj in b):
                return "II-1-uncovered", None
            if any(a[i - 1] <= bj < a[i] for bj in b):
                return "II-1-inside-I", None
            return "II-1", a[i] - a[i0 - 1] - (i - i0)
        if any(a[i0 - 1] - bj == 2 for bj in b):
            return "II-2-uncovered", None
        if a[s - 1] <= b[k - s - 1]:
            return "II-2-inside-I", None
        return "II-2", n - b[k - s - 1] + x[k - s - 1] - a[s - 1] - s
    if locus_type == "III":
        j = pivot
        return "III", b[j - 1] - b[j - 2] + x[j - 2] - x[j - 1] + j - 1
    raise DomainError(f"unknown locus type {locus_type!r}")


def stated_dimension_drop(index: IsotropicIndex, locus_type: str, pivot: int) -> int | None:
    """dim Sigma - dim of the locus, as asserted by the case analysis (None if not stated)."""
    a, b, n, s = index.a, index.b, index.n, index.s
    x = x_seq(index)
    case, _ = classify(index, locus_type, pivot)
    if case == "I-1-1":
        tau0 = x[pivot - 1] + 1
        return 2 * a[tau0 - 1] - 2 * b[pivot - 1] - 1
    if case == "I-2-1":
        tau0 = a.index(b[pivot - 1]) + 1
        i0 = _i0(a, tau0)
        return tau0 - i0 + 2 + 2 * a[tau0] - 2 * a[tau0 - 1]
    if case == "II-1":
        i0 = _i0(a, pivot)
        return a[pivot] - (a[i0 - 1] - 1)
    if case == "II-2":
        i0 = _i0(a, pivot)
        kk = index.k - s
        return n - b[kk - 1] + x[kk - 1] - a[i0 - 1] - s + 1
    if case == "III":
        j = pivot
        return _j0(b, j) + b[j - 1] - b[j - 2] + x[j - 2] - x[j - 1]
    return None


def _candidates(index: IsotropicIndex):
    k, s = index.k, index.s
    out = [("I", j) for j in range(1, k - s + 1)]
    out += [("II", i) for i in essential_a_pivots(index)]
    out += [("III", j) for j in range(2, k - s + 1)]
    return out


def candidate_components(index: IsotropicIndex) -> list[SingularComponent]:
    _check_sg(index)
    dim_sigma = dimension(index)
    out = []
    for locus_type, pivot in _candidates(index):
        comps = locus_components(index, locus_type, pivot)
        if not comps:
            log.debug("empty candidate %s(%d) for %s", locus_type, pivot, index)
            continue
        for comp in comps:
            cdim = dimension(comp)
            case, pre = classify(index, locus_type, pivot, cdim)
            out.append(SingularComponent(locus_type, pivot, comp, dim_sigma - cdim, case, pre))
    return out


def case_codimension(index: IsotropicIndex, component: SingularComponent) -> int | None:
    """Codimension of the exceptional preimage per the matching sub-case.

    None for the sub-cases that are settled by the tangent-space comparison
    instead of a codimension count.
    """
    if (component.locus_type, component.pivot) not in _candidates(index):
        raise DomainError("component does not belong to this index")
    if component.component_index not in locus_components(index, component.locus_type, component.pivot):
        raise DomainError("component does not belong to this index")
    cdim = dimension(component.component_index)
    return classify(index, component.locus_type, component.pivot, cdim)[1]


def singular_locus(index: IsotropicIndex) -> list[SingularComponent]:
    """Components listed by the case analysis, deduplicated."""
    out, seen = [], set()
    s = index.s
    for c in candidate_components(index):
        if c.locus_type == "II" and c.pivot == s and exclusion_applies(index):
            continue
        if c.component_index in seen:
            continue
        seen.add(c.component_index)
        out.append(c)
    return out


def theorem_singular_points(index: IsotropicIndex) -> set[Point]:
    pts = set()
    for c in singular_locus(index):
        pts.update(p for p in points_of(index) if contains(c.component_index, p))
    return pts


# ------------------------------------------------------------ smoothness

HOMOGENEOUS_FORMS = ("sub-Grassmannian", "sub-symplectic-Grassmannian")


def structural_form(index: IsotropicIndex) -> str | None:
    """Name of the homogeneous form of Sigma, or None.

    Sigma has such a form when it equals {F_t in Lambda in U, Lambda isotropic}.
    The form on U/F_t then decides: nondegenerate gives an SG(k-t, .), zero
    (or k - t = 1) a Grassmannian, corank one an odd symplectic Grassmannian.
    Both sides are unions of Schubert cells, so comparing torus-fixed points
    decides equality.
    """
    _check_sg(index)
    k, n = index.k, index.n
    pts = points_of(index)
    forced = set.intersection(*(set(p) for p in pts))
    span = set().union(*(set(p) for p in pts))
    free = span - forced
    bar = lambda i: n + 1 - i
    if any(bar(i) in span for i in forced):
        return None
    cands = (forced | set(c) for c in combinations(sorted(free), k - len(forced)))
    if sum(1 for q in cands if not any(bar(i) in q for i in q)) != len(pts):
        return None
    paired = sum(1 for i in free if bar(i) in free)
    if paired == len(free):
        return "sub-symplectic-Grassmannian"
    if paired == 0 or k - len(forced) == 1:
        return "sub-Grassmannian"
    if len(free) - paired == 1:
        return "odd-symplectic-Grassmannian"
    return None


@dataclass(frozen=True)
class Smoothness:
    smooth: bool
    form: str | None

    @property
    def agrees(self) -> bool:
        return self.smooth == (self.form in HOMOGENEOUS_FORMS)

    def to_json(self):
        return {"smooth": self.smooth, "form": self.form, "agrees": self.agrees}


def smoothness(index: IsotropicIndex) -> Smoothness:
    _check_sg(index)
    return Smoothness(not singular_locus(index), structural_form(index))


def report(index: IsotropicIndex) -> dict:
    comps = singular_locus(index)
    return {
        "index": index.to_json(),
        "components": [c.to_json() for c in comps],
        "smooth": not comps,
    }
