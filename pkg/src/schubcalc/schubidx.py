"""
Schubert index families for Grassmannians, partial flag varieties and their
symplectic and orthogonal analogues.

Flags are coordinate flags: F_i = span(e_1, ..., e_i) and, in the isotropic
case with pairing e_i <-> e_{n+1-i}, F_j^perp = span(e_1, ..., e_{n-j}).  The
torus-fixed point of the open cell of an index places a_i at coordinate a_i
and b_j at coordinate n - b_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ConfigurationError, DomainError, NotSupported


@dataclass(frozen=True)
class Violation:
    constraint: str
    detail: str

    def __str__(self):
        return f"{self.constraint}: {self.detail}"


class InvalidIndex(DomainError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(map(str, violations)))


@dataclass(frozen=True)
class GrassIndex:
    k: int
    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))

    def to_json(self):
        return {"family": "G", "k": self.k, "n": self.n, "a": list(self.a)}


@dataclass(frozen=True)
class FlagIndex:
    n: int
    steps: tuple[int, ...]
    a: tuple[int, ...]
    alpha: tuple[int, ...]

    def __post_init__(self):
        for f in ("steps", "a", "alpha"):
            object.__setattr__(self, f, tuple(getattr(self, f)))

    @property
    def h(self) -> int:
        return len(self.steps)

    def to_json(self):
        return {"family": "F", "n": self.n, "steps": list(self.steps),
                "a": list(self.a), "alpha": list(self.alpha)}


@dataclass(frozen=True)
class IsotropicIndex:
    family: str  # "SG" or "OG"
    k: int
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    # for OG(k, 2k): which family of maximal isotropic subspaces
    parity: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "family", self.family.upper())

    @property
    def s(self) -> int:
        return len(self.a)

    def to_json(self):
        out = {"family": self.family, "k": self.k, "n": self.n, "a": list(self.a), "b": list(self.b)}
        if self.parity is not None:
            out["parity"] = self.parity
        return out

    def __str__(self):
        return f"{self.family}({self.k},{self.n})[{','.join(map(str, self.a))};{','.join(map(str, self.b))}]"


@dataclass(frozen=True)
class FlaggedIsotropicIndex:
    family: str
    n: int
    steps: tuple[int, ...]
    a: tuple[int, ...]
    alpha: tuple[int, ...]
    b: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", self.family.upper())
        for f in ("steps", "a", "alpha", "b", "beta"):
            object.__setattr__(self, f, tuple(getattr(self, f)))

    @property
    def h(self) -> int:
        return len(self.steps)

    @property
    def s(self) -> int:
        return len(self.a)

    def to_json(self):
        return {"family": "S" + ("F" if self.family == "SG" else "OF"), "n": self.n,
                "steps": list(self.steps), "a": list(self.a), "alpha": list(self.alpha),
                "b": list(self.b), "beta": list(self.beta)}


Index = Union[GrassIndex, FlagIndex, IsotropicIndex, FlaggedIsotropicIndex]


def sg(k: int, n: int, a=(), b=()) -> IsotropicIndex:
    return validate(IsotropicIndex("SG", k, n, tuple(a), tuple(b)))


def og(k: int, n: int, a=(), b=(), parity=None) -> IsotropicIndex:
    return validate(IsotropicIndex("OG", k, n, tuple(a), tuple(b), parity))


# ---------------------------------------------------------------- validation

def _increasing(seq, name, lo, hi, out):
    if any(x >= y for x, y in zip(seq, seq[1:])):
        out.append(Violation(f"{name} strictly increasing", f"{name}={list(seq)}"))
    for x in seq:
        if not lo <= x <= hi:
            out.append(Violation(f"{lo}<={name}_i<={hi}", f"{name} contains {x}"))
            break


def _labels(labels, steps, name, out, counts):
    h = len(steps)
    for t in labels:
        if not 1 <= t <= h:
            out.append(Violation(f"{name}_i in [1,h]", f"{name} contains {t}"))
            return
    for t in labels:
        counts[t] = counts.get(t, 0) + 1


def _check_steps(steps, top, out):
    if not steps or any(x >= y for x, y in zip(steps, steps[1:])) or steps[0] < 1:
        out.append(Violation("1<=k_1<...<k_h", f"steps={list(steps)}"))
    elif steps[-1] > top:
        out.append(Violation(f"k_h<={top}", f"steps={list(steps)}"))


def violations(index: Index) -> list[Violation]:
    out: list[Violation] = []
    if isinstance(index, GrassIndex):
        if not 1 <= index.k <= index.n:
            out.append(Violation("1<=k<=n", f"k={index.k}, n={index.n}"))
        if len(index.a) != index.k:
            out.append(Violation("len(a)=k", f"len(a)={len(index.a)}"))
        _increasing(index.a, "a", 1, index.n, out)
    elif isinstance(index, FlagIndex):
        _check_steps(index.steps, index.n, out)
        top = index.steps[-1] if index.steps else 0
        if len(index.a) != top or len(index.alpha) != top:
            out.append(Violation("len(a)=len(alpha)=k_h", f"len(a)={len(index.a)}, len(alpha)={len(index.alpha)}"))
        _increasing(index.a, "a", 1, index.n, out)
        counts: dict[int, int] = {}
        _labels(index.alpha, index.steps, "alpha", out, counts)
        _check_label_counts(index.steps, counts, out)
    elif isinstance(index, (IsotropicIndex, FlaggedIsotropicIndex)):
        n = index.n
        fam = index.family
        if fam not in ("SG", "OG"):
            out.append(Violation("family in {SG, OG}", f"family={fam}"))
            return out
        if fam == "SG" and n % 2:
            out.append(Violation("n even", f"n={n}"))
        k = index.k if isinstance(index, IsotropicIndex) else (index.steps[-1] if index.steps else 0)
        if isinstance(index, FlaggedIsotropicIndex):
            _check_steps(index.steps, n // 2, out)
        elif not 1 <= k <= n // 2:
            out.append(Violation("1<=k<=n/2", f"k={k}, n={n}"))
        if len(index.a) + len(index.b) != k:
            out.append(Violation("s+len(b)=k", f"len(a)+len(b)={len(index.a) + len(index.b)}, k={k}"))
        _increasing(index.a, "a", 1, n // 2, out)
        _increasing(index.b, "b", 0, (n - 2) // 2, out)
        for ai in index.a:
            for bj in index.b:
                if ai == bj + 1:
                    out.append(Violation("a_i!=b_j+1", f"a_i={ai}, b_j={bj}"))
        if fam == "OG" and n == 2 * k and (len(index.a) - k) % 2:
            out.append(Violation("s=k mod 2", f"s={len(index.a)}, k={k}"))
        if isinstance(index, FlaggedIsotropicIndex):
            if len(index.alpha) != len(index.a) or len(index.beta) != len(index.b):
                out.append(Violation("len(alpha)=s, len(beta)=k_h-s", "label lengths"))
            counts = {}
            _labels(index.alpha, index.steps, "alpha", out, counts)
            _labels(index.beta, index.steps, "beta", out, counts)
            _check_label_counts(index.steps, counts, out)
    else:
        raise DomainError(f"not a Schubert index: {index!r}")
    return out


def _check_label_counts(steps, counts, out):
    prev = 0
    for t, kt in enumerate(steps, start=1):
        if counts.get(t, 0) != kt - prev:
            out.append(Violation("#{labels=t}=k_t-k_{t-1}", f"t={t}: {counts.get(t, 0)} != {kt - prev}"))
        prev = kt


def validate(index: Index) -> Index:
    bad = violations(index)
    if bad:
        raise InvalidIndex(bad)
    return index


def is_valid(index: Index) -> bool:
    return not violations(index)


# ---------------------------------------------------------- derived tables

def mu(index) -> dict[tuple[int, int], int]:
    """mu[i, t] = #{i' <= i : alpha_{i'} <= t}."""
    labels = index.alpha
    h = len(index.steps)
    return {
        (i, t): sum(1 for lab in labels[:i] if lab <= t)
        for i in range(1, len(labels) + 1)
        for t in range(1, h + 1)
    }


def nu(index: FlaggedIsotropicIndex) -> dict[tuple[int, int], int]:
    h = index.h
    return {
        (j, t): sum(1 for lab in index.alpha if lab <= t)
        + sum(1 for lab in index.beta[j - 1:] if lab <= t)
        for j in range(1, len(index.b) + 1)
        for t in range(1, h + 1)
    }


def x_seq(index: IsotropicIndex) -> tuple[int, ...]:
    return tuple(sum(1 for ai in index.a if ai <= bj) for bj in index.b)


def z_seq(index: IsotropicIndex) -> tuple[int, ...]:
    s, k = index.s, index.k
    return tuple(
        sum(1 for bj in index.b if bj < index.a[t - 1]) if t <= s else k - t + 1
        for t in range(1, k + 1)
    )


def derived_sg(index: IsotropicIndex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return x_seq(index), z_seq(index)


# -------------------------------------------------------------- dimension

def _sg_dimension(index: IsotropicIndex) -> int:
    n, k = index.n, index.k
    x = x_seq(index)
    total = sum(ai - i for i, ai in enumerate(index.a, start=1))
    for j, bj in enumerate(index.b, start=1):
        total += n - bj - 2 * (k - j + 1) + x[j - 1] + 1
    return total


def inversions(perm) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def signed_length(perm) -> int:
    """Type B/C length of a permutation of 1..2m commuting with i -> 2m+1-i."""
    m = len(perm) // 2
    neg = sum(1 for i in range(m) if perm[i] > m)
    return (inversions(perm) + neg) // 2


def dimension(index: Index) -> int:
    validate(index)
    if isinstance(index, GrassIndex):
        return sum(ai - i for i, ai in enumerate(index.a, start=1))
    if isinstance(index, FlagIndex):
        return inversions(to_permutation(index))
    if isinstance(index, IsotropicIndex):
        d = _sg_dimension(index)
        return d if index.family == "SG" else d - (index.k - index.s)
    if index.family == "SG":
        return signed_length(to_permutation(index))
    raise NotSupported("dimension of orthogonal partial flag indices")


# ------------------------------------------------------ fixed points, Weyl

def fixed_point(index: IsotropicIndex | FlaggedIsotropicIndex | GrassIndex) -> tuple[int, ...]:
    """Coordinates of the torus-fixed point in the open cell, ascending."""
    if isinstance(index, GrassIndex):
        return index.a
    return tuple(index.a) + tuple(index.n - bj for bj in reversed(index.b))


def _complete_signed(prefix: list[int], n: int) -> tuple[int, ...]:
    m = n // 2
    used = set(prefix) | {n + 1 - p for p in prefix}
    rest = [c for c in range(1, m + 1) if c not in used]
    first = prefix + rest
    return tuple(first + [n + 1 - c for c in reversed(first)])


def to_permutation(index: Index) -> tuple[int, ...]:
    """One-line notation of the minimal coset representative."""
    validate(index)
    if isinstance(index, GrassIndex):
        rest = [c for c in range(1, index.n + 1) if c not in index.a]
        return tuple(index.a) + tuple(rest)
    if isinstance(index, FlagIndex):
        blocks = []
        for t in range(1, index.h + 1):
            blocks += sorted(ai for ai, lab in zip(index.a, index.alpha) if lab == t)
        rest = [c for c in range(1, index.n + 1) if c not in index.a]
        return tuple(blocks + rest)
    if index.family != "SG":
        raise NotSupported("Weyl group correspondence for orthogonal indices")
    if isinstance(index, IsotropicIndex):
        return _complete_signed(list(fixed_point(index)), index.n)
    entries = [(ai, lab) for ai, lab in zip(index.a, index.alpha)]
    entries += [(index.n - bj, lab) for bj, lab in zip(index.b, index.beta)]
    blocks = []
    for t in range(1, index.h + 1):
        blocks += sorted(p for p, lab in entries if lab == t)
    return _complete_signed(blocks, index.n)


def _reduced_word(perm: tuple[int, ...], signed: bool) -> tuple[int, ...]:
    p = list(perm)
    n = len(p)
    m = n // 2 if signed else n - 1
    letters = []
    while True:
        for i in range(1, m + 1):
            if signed and i == m:
                if p[m - 1] > p[m]:
                    p[m - 1], p[m] = p[m], p[m - 1]
                    break
            elif p[i - 1] > p[i]:
                p[i - 1], p[i] = p[i], p[i - 1]
                if signed:
                    p[n - i - 1], p[n - i] = p[n - i], p[n - i - 1]
                break
        else:
            break
        letters.append(i)
    return tuple(reversed(letters))


def _ambient(index: Index):
    from .rootsys import build

    if isinstance(index, (GrassIndex, FlagIndex)):
        if index.n < 2:
            raise ConfigurationError("type A correspondence needs n >= 2")
        return build("A", index.n - 1), False
    m = index.n // 2
    return (build("C", m) if m >= 2 else build("A", 1)), True


def _marked(index: Index) -> list[int]:
    if isinstance(index, GrassIndex):
        return [index.k] if index.k < index.n else []
    if isinstance(index, IsotropicIndex):
        return [index.k]
    return [kt for kt in index.steps if kt < (index.n if isinstance(index, FlagIndex) else index.n // 2 + 1)]


def to_weyl(index: Index):
    """Minimal coset representative w with Sigma(index) = X_P(w), and the marked nodes."""
    from .weyl import minimal_reps, weyl_group

    perm = to_permutation(index)
    system, signed = _ambient(index)
    w = weyl_group(system).element(_reduced_word(perm, signed))
    return w, _marked(index)


def weyl_element(index: Index):
    return to_weyl(index)[0]


def _perm_from_word(word, n: int, signed: bool) -> list[int]:
    p = list(range(1, n + 1))
    m = n // 2
    for i in word:
        if signed and i == m:
            p[m - 1], p[m] = p[m], p[m - 1]
        else:
            p[i - 1], p[i] = p[i], p[i - 1]
            if signed:
                p[n - i - 1], p[n - i] = p[n - i], p[n - i - 1]
    return p


def from_weyl(w, k: int, n: int, family: str = "SG") -> Index:
    """Inverse of to_weyl for Grassmannian ('G') and symplectic Grassmannian indices."""
    family = family.upper()
    signed = family == "SG"
    p = _perm_from_word(w.word, n, signed)
    pts = sorted(p[:k])
    if family == "G":
        return validate(GrassIndex(k, n, tuple(pts)))
    if family != "SG":
        raise NotSupported("Weyl group correspondence for orthogonal indices")
    m = n // 2
    a = tuple(c for c in pts if c <= m)
    b = tuple(sorted(n - c for c in pts if c > m))
    return validate(IsotropicIndex("SG", k, n, a, b))


# -------------------------------------------------------------- enumeration

def all_sg_indices(k: int, n: int, family: str = "SG", parity=None):
    """Every valid index (a;b) for SG(k,n) or OG(k,n)."""
    from itertools import combinations

    m = n // 2
    out = []
    for s in range(0, k + 1):
        for a in combinations(range(1, m + 1), s):
            for b in combinations(range(0, (n - 2) // 2 + 1), k - s):
                idx = IsotropicIndex(family, k, n, a, b, parity)
                if is_valid(idx):
                    out.append(idx)
    return out


def all_grass_indices(k: int, n: int):
    from itertools import combinations

    return [GrassIndex(k, n, a) for a in combinations(range(1, n + 1), k)]


def all_flag_indices(steps, n: int):
    from itertools import combinations, permutations

    steps = tuple(steps)
    top = steps[-1]
    base = []
    prev = 0
    for t, kt in enumerate(steps, start=1):
        base += [t] * (kt - prev)
        prev = kt
    labelings = sorted(set(permutations(base)))
    return [FlagIndex(n, steps, a, lab) for a in combinations(range(1, n + 1), top) for lab in labelings]


def parse_index(family: str, k=None, n=None, a=(), b=(), alpha=(), beta=(), steps=None) -> Index:
    family = family.upper()
    if family in ("SG", "OG") and not alpha and not beta and steps is None:
        return validate(IsotropicIndex(family, k, n, tuple(a), tuple(b)))
    if family in ("SG", "OG", "SF", "OF"):
        fam = "SG" if family in ("SG", "SF") else "OG"
        return validate(FlaggedIsotropicIndex(fam, n, tuple(steps or ()), tuple(a), tuple(alpha), tuple(b), tuple(beta)))
    if family == "G":
        return validate(GrassIndex(k if k is not None else len(a), n, tuple(a)))
    if family == "F":
        return validate(FlagIndex(n, tuple(steps or ()), tuple(a), tuple(alpha)))
    raise ConfigurationError(f"unknown index family {family!r}")
