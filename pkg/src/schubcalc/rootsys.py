"""
Finite root systems of types A, B, C, D (rank <= 8) and E6, E7.

Roots are integer coefficient vectors over the simple roots.  Weights are
integer vectors in the basis of fundamental weights, so the pairing
<lambda, beta^vee> is a dot product with the coroot's coefficient vector
over the simple coroots.

Node numbering is Bourbaki's.  For E6 and E7 the chain is 1-3-4-5-6(-7)
with node 2 attached to the branch node 4.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigurationError, DomainError

Vector = tuple[int, ...]

MAX_CLASSICAL_RANK = 8

_EXCEPTIONAL_EDGES = {
    6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
}

_ROOT_COUNTS = {
    "A": lambda m: m * (m + 1) // 2,
    "B": lambda m: m * m,
    "C": lambda m: m * m,
    "D": lambda m: m * (m - 1),
    "E": lambda m: {6: 36, 7: 63}[m],
}


def expected_root_count(kind: str, rank: int) -> int:
    """Closed-form number of positive roots."""
    return _ROOT_COUNTS[kind](rank)


def _epsilon_simple_roots(kind: str, m: int) -> list[list[Fraction]]:
    dim = m + 1 if kind == "A" else m
    def eps(i, j=None, sj=-1, scale=1):
        v = [Fraction(0)] * dim
        v[i] = Fraction(scale)
        if j is not None:
            v[j] += sj
        return v
    roots = [eps(i, i + 1) for i in range(m - 1)]
    if kind == "A":
        roots.append(eps(m - 1, m))
    elif kind == "B":
        roots.append(eps(m - 1))
    elif kind == "C":
        roots.append(eps(m - 1, scale=2))
    elif kind == "D":
        roots.append(eps(m - 2, m - 1, sj=1))
    return roots


def _check_supported(kind: str, rank: int) -> None:
    low = {"A": 1, "B": 2, "C": 2, "D": 3}
    if kind in low:
        if not low[kind] <= rank <= MAX_CLASSICAL_RANK:
            raise ConfigurationError(f"unsupported rank {rank} for type {kind}")
    elif kind == "E":
        if rank not in (6, 7):
            raise ConfigurationError(f"unsupported exceptional type E{rank}")
    else:
        raise ConfigurationError(f"unsupported root system type {kind!r}")


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: tuple[Vector, ...]
    # squared length of each simple root, normalised so the short ones have 2
    simple_norms: tuple[int, ...]
    positive_roots: tuple[Vector, ...] = field(repr=False)
    coroots: tuple[Vector, ...] = field(repr=False)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def root_index(self, root: Vector) -> int:
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise DomainError(f"{root} is not a positive root of {self.label}") from None

    @property
    def _index(self) -> dict[Vector, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {r: n for n, r in enumerate(self.positive_roots)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def simple_root(self, i: int) -> Vector:
        return tuple(int(j == i) for j in self.nodes)

    def root_as_weight(self, root: Vector) -> Vector:
        """Coordinates of a root in the fundamental-weight basis."""
        return tuple(
            sum(root[j] * self.cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def fundamental_weight(self, i: int) -> Vector:
        return self.simple_root(i)

    def pairing(self, weight: Vector, root: Vector) -> int:
        """<weight, root^vee> for a weight in fundamental-weight coordinates."""
        if len(weight) != self.rank:
            raise DomainError("weight has the wrong number of coordinates")
        coroot = self.coroots[self.root_index(root)]
        return sum(w * c for w, c in zip(weight, coroot))

    def reflect_root(self, i: int, root: Vector) -> Vector:
        """s_i applied to a root given by simple-root coefficients."""
        c = sum(root[j] * self.cartan[i - 1][j] for j in range(self.rank))
        out = list(root)
        out[i - 1] -= c
        return tuple(out)

    def reflect_weight(self, i: int, weight: Vector) -> Vector:
        out = list(weight)
        wi = weight[i - 1]
        for j in range(self.rank):
            out[j] -= wi * self.cartan[j][i - 1]
        return tuple(out)

    def highest_root(self) -> Vector:
        return max(self.positive_roots, key=sum)


def _cartan_from_norms(inner) -> tuple[tuple[int, ...], ...]:
    m = len(inner)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            v = 2 * inner[i][j] / inner[i][i]
            assert v.denominator == 1
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def build(kind: str, rank: int) -> RootSystem:
    """Construct the root system of the given type; results are cached."""
    kind = kind.upper()
    _check_supported(kind, rank)
    if kind == "E":
        inner = [[Fraction(0)] * rank for _ in range(rank)]
        for i in range(rank):
            inner[i][i] = Fraction(2)
        for a, b in _EXCEPTIONAL_EDGES[rank]:
            inner[a - 1][b - 1] = inner[b - 1][a - 1] = Fraction(-1)
    else:
        simple = _epsilon_simple_roots(kind, rank)
        inner = [[sum(x * y for x, y in zip(u, v)) for v in simple] for u in simple]
    # rescale so the shortest simple root has squared length 2
    short = min(inner[i][i] for i in range(rank))
    inner = [[x * 2 / short for x in row] for row in inner]
    cartan = _cartan_from_norms(inner)
    norms = tuple(int(inner[i][i]) for i in range(rank))

    # close the simple roots under simple reflections
    def reflect(i, root):
        c = sum(root[j] * cartan[i][j] for j in range(rank))
        out = list(root)
        out[i] -= c
        return tuple(out)

    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(rank):
                image = reflect(i, root)
                if min(image) >= 0 and image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    roots = sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))

    coroots = []
    for root in roots:
        norm = sum(root[i] * root[j] * inner[i][j] for i in range(rank) for j in range(rank))
        co = []
        for i in range(rank):
            c = root[i] * inner[i][i] / norm
            assert c.denominator == 1
            co.append(int(c))
        coroots.append(tuple(co))

    system = RootSystem(kind, rank, cartan, norms, tuple(roots), tuple(coroots))
    if len(roots) != expected_root_count(kind, rank):
        raise AssertionError(f"root closure produced {len(roots)} roots for {system.label}")
    return system


def parse_group(label: str, rank: int | None = None) -> RootSystem:
    """Parse labels such as 'A2', 'E6', or ('B', 3)."""
    label = label.strip().upper()
    kind, digits = label[:1], label[1:]
    if digits:
        r = int(digits)
        if rank is not None and rank != r:
            raise ConfigurationError(f"group {label} conflicts with rank {rank}")
    elif rank is not None:
        r = rank
    else:
        raise ConfigurationError(f"group {label!r} needs a rank")
    return build(kind, r)
