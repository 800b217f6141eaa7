"""
Resolution towers of Schubert varieties as iterated (isotropic) Grassmannian
bundles, with dimension bookkeeping and finite-log-resolution verdicts.

Every step records the slot it adds, the two slots bounding it and their
dimensions at a general point; the fiber is read off from those.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotSupported
from .schubidx import (
    FlagIndex,
    GrassIndex,
    IsotropicIndex,
    dimension,
    mu,
    validate,
    x_seq,
    z_seq,
)


@dataclass(frozen=True)
class Fiber:
    kind: str  # "G", "SG" or "OG"
    d: int
    D: int

    @property
    def dim(self) -> int:
        if self.kind == "G":
            return self.d * (self.D - self.d)
        if self.kind == "SG":
            # isotropic d-planes in a symplectic space of dimension D
            return self.d * (self.D - 2 * self.d) + self.d * (self.d + 1) // 2
        # one family of maximal isotropic subspaces, or OG(d, D) in general
        return self.d * (self.D - 2 * self.d) + self.d * (self.d - 1) // 2

    def __str__(self):
        return f"{self.kind}({self.d},{self.D})"


@dataclass(frozen=True)
class Slot:
    name: str
    dim: int


@dataclass(frozen=True)
class TowerStep:
    entry: str
    case_tag: str
    fiber: Fiber
    lower: Slot
    upper: Slot

    @property
    def fiber_dim(self) -> int:
        return self.fiber.dim

    def to_json(self):
        return {
            "entry": self.entry,
            "case": self.case_tag,
            "fiber": str(self.fiber),
            "fiber_dim": self.fiber_dim,
            "lower": self.lower.name,
            "upper": self.upper.name,
        }


@dataclass(frozen=True)
class TowerPlan:
    index: object
    steps: tuple[TowerStep, ...]
    finite_log: bool | None  # None means the theorems at hand do not decide
    reason: str
    total_dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total_dim", sum(s.fiber_dim for s in self.steps))

    @property
    def verdict(self) -> str:
        return "true" if self.finite_log else "unknown"

    def to_json(self):
        return {
            "index": self.index.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "total_dim": self.total_dim,
            "finite_log": self.verdict,
            "reason": self.reason,
        }


def _grass_step(entry, tag, lower: Slot, upper: Slot, d: int) -> TowerStep:
    return TowerStep(entry, tag, Fiber("G", d, upper.dim - lower.dim), lower, upper)


def build_grassmannian_tower(index: GrassIndex) -> TowerPlan:
    validate(index)
    steps = []
    for t, at in enumerate(index.a, start=1):
        lower = Slot(f"L{t - 1}", t - 1)
        upper = Slot(f"F{at}", at)
        steps.append(_grass_step(f"L{t}", "A-grass", lower, upper, 1))
    return TowerPlan(index, tuple(steps), True, "Grassmannian Schubert variety: full-flag tower")


def flag_finite_log(index: FlagIndex) -> tuple[bool | None, str]:
    if index.h == 1:
        return True, "Grassmannian Schubert variety: full-flag tower"
    if index.h == 2 and index.steps[0] == 1:
        return True, "two-step flag with k_1 = 1"
    return None, "outside the two-step k_1 = 1 hypothesis"


def build_flag_tower(index: FlagIndex) -> TowerPlan:
    validate(index)
    m = mu(index)
    h, top = index.h, len(index.a)

    def dim(t, i):
        if i == 0:
            return 0
        return index.a[i - 1] if t == h + 1 else m[i, t]

    def kept(t):
        # leftmost entry for every nonzero value of mu_{., t}
        seen, out = set(), []
        for i in range(1, top + 1):
            v = m[i, t]
            if v and v not in seen:
                seen.add(v)
                out.append(i)
        return out

    def first_with(t, value):
        return next(i for i in range(1, top + 1) if m[i, t] == value)

    steps = []
    for t in range(h, 0, -1):
        for i in kept(t):
            v = m[i, t]
            i0 = first_with(t, v - 1) if v > 1 else 0
            lower = Slot(f"W{t},{i0}" if i0 else "0", dim(t, i0))
            upper = Slot(f"F{index.a[i - 1]}" if t == h else f"W{t + 1},{i}", dim(t + 1, i))
            steps.append(_grass_step(f"W{t},{i}", "A-grass", lower, upper, v - lower.dim))
    ok, reason = flag_finite_log(index)
    return TowerPlan(index, tuple(steps), ok, reason)


def sg_finite_log(index: IsotropicIndex) -> tuple[bool | None, str]:
    if index.s == index.k - 1:
        return True, "s = k - 1"
    return None, "s != k - 1: no finite-log criterion applies"


def slot_dim(index: IsotropicIndex, tau: int, j: int) -> int:
    """Dimension of W^{tau,j} = span(Lambda_tau, F_{b_j}) at a general point."""
    return tau + index.b[j - 1] - x_seq(index)[j - 1]


def build_sg_tower(index: IsotropicIndex) -> TowerPlan:
    validate(index)
    if index.family != "SG":
        raise NotSupported("the isotropic tower is built for symplectic indices")
    k, s, n = index.k, index.s, index.n
    z = z_seq(index)
    steps = []
    for tau in range(1, k + 1):
        zt = z[tau - 1]
        exists_prev = lambda j: tau >= 2 and j <= z[tau - 2]
        for j in range(zt, 0, -1):
            entry = f"W{tau},{j}"
            here = slot_dim(index, tau, j)
            if exists_prev(j):
                lower = Slot(f"W{tau - 1},{j}", slot_dim(index, tau - 1, j))
            else:
                lower = Slot(f"F{index.b[j - 1]}", index.b[j - 1])
            if j < zt:
                tag = "II-2" if exists_prev(j) else "II-1"
                upper = Slot(f"W{tau},{j + 1}", slot_dim(index, tau, j + 1))
                steps.append(_grass_step(entry, tag, lower, upper, here - lower.dim))
            elif tau <= s:
                tag = "III-2" if exists_prev(j) else "III-1"
                upper = Slot(f"F{index.a[tau - 1]}", index.a[tau - 1])
                steps.append(_grass_step(entry, tag, lower, upper, here - lower.dim))
            else:
                bj = index.b[k - tau]
                upper = Slot(f"F{bj}perp", n - bj)
                fiber = Fiber("SG", here - lower.dim, n - 2 * lower.dim)
                steps.append(TowerStep(entry, "III-3", fiber, lower, upper))
        lower = Slot(f"L{tau - 1}", tau - 1)
        if zt == 0:
            upper = Slot(f"F{index.a[tau - 1]}", index.a[tau - 1])
            steps.append(_grass_step(f"L{tau}", "I-1", lower, upper, 1))
        else:
            upper = Slot(f"W{tau},1", slot_dim(index, tau, 1))
            steps.append(_grass_step(f"L{tau}", "I-2", lower, upper, 1))
    ok, reason = sg_finite_log(index)
    return TowerPlan(index, tuple(steps), ok, reason)


def build_maximal_isotropic_tower(index: IsotropicIndex) -> TowerPlan:
    """Tower for Lagrangian (SG) or spinor (OG) Schubert varieties, n = 2k.

    Lambda_1 .. Lambda_s are added inside F_{a_t}; the last step is the
    whole maximal isotropic Grassmannian of Lambda_s^perp / Lambda_s.
    """
    validate(index)
    k, s, n = index.k, index.s, index.n
    if n != 2 * k:
        raise NotSupported("maximal isotropic towers need n = 2k")
    steps = []
    for t in range(1, s + 1):
        at = index.a[t - 1]
        steps.append(_grass_step(f"L{t}", "A-grass", Slot(f"L{t - 1}", t - 1), Slot(f"F{at}", at), 1))
    if s < k:
        fiber = Fiber(index.family, k - s, n - 2 * s)
        steps.append(TowerStep(f"L{k}", "III-3", fiber, Slot(f"L{s}", s), Slot(f"L{s}perp", n - s)))
    name = "Lagrangian" if index.family == "SG" else "spinor"
    return TowerPlan(index, tuple(steps), True, f"{name} Schubert variety: isotropic flag tower")


def build_og_tower(index: IsotropicIndex) -> TowerPlan:
    if index.family != "OG":
        raise NotSupported("expected an orthogonal index")
    return build_maximal_isotropic_tower(index)


def build_tower(index) -> TowerPlan:
    if isinstance(index, GrassIndex):
        return build_grassmannian_tower(index)
    if isinstance(index, FlagIndex):
        return build_flag_tower(index)
    if isinstance(index, IsotropicIndex):
        if index.family == "OG":
            return build_og_tower(index)
        return build_sg_tower(index)
    raise NotSupported(f"no tower for {type(index).__name__}")


def check_total(plan: TowerPlan) -> bool:
    return plan.total_dim == dimension(plan.index)
