"""Dynamical properties of enumerated shift spaces.

Entropy on a finite group is log(#configs)/|group| and is kept exact as an
integer pair; all entropy comparisons go through big-integer cross powers,
never floats.  Measures are exact rationals until a final logarithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import DomainError, InputError, ResourceError
from .groups import GroupTower, all_subgroups
from .patterns import Pattern, shift_config
from .shiftspace import (
    DEFAULT_ORBIT_CAP,
    ShiftSpace,
    enumerate_subshifts,
    language,
    orbits,
)

FLOAT_TOL = 1e-9
DEFAULT_AUT_CAP = 10


def _int_root(n: int, d: int):
    """Exact d-th root of n, or None if n is not a perfect d-th power."""
    if n < 1:
        return None
    if n == 1:
        return 1
    lo, hi = 1, 1 << (n.bit_length() // d + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** d < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** d == n else None


@dataclass(frozen=True, order=False)
class EntropyValue:
    """Exact entropy log(count)/denom, stored in canonical reduced form.

    Canonicalization strips perfect powers whose exponent divides the
    denominator, so e.g. log(4)/2 and log(2)/1 coincide as values and as
    representations.  log(1)/m normalizes to log(1)/1 (zero).
    """

    count: int
    denom: int

    def __post_init__(self):
        n, m = self.count, self.denom
        if n < 1 or m < 1:
            raise InputError("entropy parameters must be positive integers")
        if n == 1:
            m = 1
        else:
            reduced = True
            while reduced:
                reduced = False
                for d in range(m, 1, -1):
                    if m % d == 0:
                        r = _int_root(n, d)
                        if r is not None:
                            n, m = r, m // d
                            reduced = True
                            break
        object.__setattr__(self, "count", n)
        object.__setattr__(self, "denom", m)

    def is_zero(self) -> bool:
        return self.count == 1

    # log(n1)/m1 <= log(n2)/m2  iff  n1^m2 <= n2^m1, exactly
    def __le__(self, other):
        return self.count ** other.denom <= other.count ** self.denom

    def __lt__(self, other):
        return self.count ** other.denom < other.count ** self.denom

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def cross_equal(self, other) -> bool:
        return self.count ** other.denom == other.count ** self.denom

    def __float__(self):
        return math.log(self.count) / self.denom

    def __str__(self):
        return f"log({self.count})/{self.denom}"


def entropy(y: ShiftSpace) -> EntropyValue:
    """Exact topological entropy of a nonempty shift on a finite group."""
    if not y.configs:
        raise DomainError("entropy of the empty shift space is undefined")
    return EntropyValue(len(y.configs), y.group.order)


def entropy_set(
    tower: GroupTower,
    max_level: int,
    max_n: int,
    all_subgroup_orders: bool = True,
    budget: int = 1 << 20,
) -> set[EntropyValue]:
    """All values log(n)/|H| for subgroups H of the tower levels and n <= max_n.

    With ``all_subgroup_orders`` every subgroup of every level up to
    ``max_level`` is enumerated (budgeted); in fast mode only the levels
    themselves plus the trivial subgroup contribute.
    """
    if max_level < 1 or max_level > len(tower.levels):
        raise InputError(f"max_level must be in [1, {len(tower.levels)}]")
    if max_n < 1:
        raise InputError("max_n must be >= 1")
    orders = {1}
    for level in tower.levels[:max_level]:
        if all_subgroup_orders:
            for sub in all_subgroups(level, budget=budget):
                orders.add(sub.order)
        else:
            orders.add(level.order)
    return {EntropyValue(n, m) for n in range(1, max_n + 1) for m in orders}


@dataclass(frozen=True)
class SiVerdict:
    """Outcome of a strong-irreducibility check for one witness set."""

    ok: bool
    counterexample: tuple[Pattern, Pattern] | None = None


def _joint_fillable(y: ShiftSpace, u: Pattern, v: Pattern) -> bool:
    for x in y.configs:
        if all(x[g] == s for g, s in zip(u.shape, u.symbols)) and all(
            x[g] == s for g, s in zip(v.shape, v.symbols)
        ):
            return True
    return False


def strongly_irreducible_witness(y: ShiftSpace, k) -> SiVerdict:
    """Exhaustively check the separation property for the witness set ``k``.

    For every ordered pair of language patterns u, v whose shapes satisfy
    shape(u) disjoint from k*shape(v), some configuration must contain
    both.  Returns the lexicographically least counterexample otherwise.
    """
    G = y.group
    k = tuple(sorted(set(k)))
    for a in k:
        if not (0 <= a < G.order):
            raise InputError(f"{a} is not an element index")
    elems = list(G.elements())
    shapes = []
    for r in range(G.order + 1):
        shapes.extend(combinations(elems, r))
    langs = {f: sorted(language(y, f), key=lambda w: w.symbols) for f in shapes}

    for fu in shapes:
        for fv in shapes:
            kfv = {G.mul[a][f] for a in k for f in fv}
            if set(fu) & kfv:
                continue
            for u in langs[fu]:
                for v in langs[fv]:
                    if not _joint_fillable(y, u, v):
                        return SiVerdict(False, (u, v))
    return SiVerdict(True)


def minimal_si_witnesses(y: ShiftSpace) -> list[tuple[int, ...]]:
    """All inclusion-minimal witness sets for which the space is strongly
    irreducible.  Uses monotonicity: supersets of a witness always work."""
    G = y.group
    elems = list(G.elements())
    good = []
    for r in range(G.order + 1):
        for k in combinations(elems, r):
            ks = set(k)
            if any(set(m) <= ks for m in good):
                continue  # superset of a known witness
            if strongly_irreducible_witness(y, k).ok:
                good.append(k)
    return good


@dataclass(frozen=True)
class EntropyMinimalVerdict:
    ok: bool
    counterexample: ShiftSpace | None = None


def is_entropy_minimal(
    y: ShiftSpace, subshifts=None, cap: int = DEFAULT_ORBIT_CAP
) -> EntropyMinimalVerdict:
    """True iff every nonempty proper subshift has strictly smaller entropy.

    On a finite group this reduces to strict cardinality decrease; the
    reduction is asserted as a cross-check.  ``subshifts`` may be injected
    (e.g. by tests); it defaults to all orbit unions.
    """
    if not y.configs:
        raise DomainError("entropy minimality of the empty space is undefined")
    h = entropy(y)
    if subshifts is None:
        subshifts = enumerate_subshifts(y, cap=cap)
    for z in subshifts:
        if not z.configs or z.configs == y.configs:
            continue
        if not entropy(z) < h:
            return EntropyMinimalVerdict(False, z)
        assert len(z.configs) < len(y.configs)
    return EntropyMinimalVerdict(True)


ZERO_SINGLETON = "zero-and-singleton-fixed-point"
POSITIVE = "positive-entropy"
ZERO_NON_SINGLETON = "zero-but-not-singleton"


def zero_entropy_classify(y: ShiftSpace) -> str:
    """Classify a nonempty space by entropy: zero entropy forces a single
    fixed point on a finite group, and any other zero-entropy outcome is a
    bug signal."""
    if not y.configs:
        raise DomainError("cannot classify the empty shift space")
    h = entropy(y)
    if not h.is_zero():
        return POSITIVE
    if len(y.configs) != 1:
        return ZERO_NON_SINGLETON  # unreachable on finite groups
    (x,) = y.configs
    for g in y.group.elements():
        if shift_config(y.group, g, x) != x:
            return ZERO_NON_SINGLETON
    return ZERO_SINGLETON


@dataclass(frozen=True)
class AutomorphismGroup:
    """All self-conjugacies of a space, as permutations of its sorted
    configurations."""

    space: ShiftSpace
    elements: tuple[tuple[int, ...], ...]
    composition: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def automorphism_group(y: ShiftSpace, cap: int = DEFAULT_AUT_CAP) -> AutomorphismGroup:
    """Brute-force search for all permutations of the configurations that
    commute with every shift map."""
    n = len(y.configs)
    if n > cap:
        raise ResourceError(f"{n} configurations exceed the automorphism cap {cap}")
    configs = sorted(y.configs)
    pos = {c: i for i, c in enumerate(configs)}
    # shift maps as permutations of config indices
    shifts = [
        tuple(pos[shift_config(y.group, g, c)] for c in configs)
        for g in y.group.elements()
    ]
    autos = []
    for perm in permutations(range(n)):
        if all(
            perm[s[i]] == s[perm[i]] for s in shifts for i in range(n)
        ):
            autos.append(perm)
    autos.sort()
    index = {p: i for i, p in enumerate(autos)}
    table = []
    for p in autos:
        row = []
        for q in autos:
            comp = tuple(p[q[i]] for i in range(n))
            row.append(index[comp])
        table.append(tuple(row))
    return AutomorphismGroup(y, tuple(autos), tuple(table))


@dataclass(frozen=True)
class InvariantMeasure:
    """A shift-invariant probability vector over the configurations.

    Weights are exact rationals keyed by configuration and must be constant
    on every orbit.
    """

    space: ShiftSpace
    weights: dict

    def __post_init__(self):
        total = sum(self.weights.values(), Fraction(0))
        if set(self.weights) != set(self.space.configs):
            raise InputError("weights must cover exactly the configurations")
        if any(w < 0 for w in self.weights.values()):
            raise InputError("weights must be non-negative")
        if total != 1:
            raise InputError(f"weights sum to {total}, expected 1")
        for orb in orbits(self.space):
            vals = {self.weights[c] for c in orb}
            if len(vals) != 1:
                raise InputError("measure is not constant on a shift orbit")

    def cylinder_mass(self, w: Pattern) -> Fraction:
        cells = list(zip(w.shape, w.symbols))
        return sum(
            (
                wt
                for c, wt in self.weights.items()
                if all(c[g] == s for g, s in cells)
            ),
            Fraction(0),
        )


def mme(y: ShiftSpace) -> InvariantMeasure:
    """The uniform measure, which attains the topological entropy."""
    if not y.configs:
        raise DomainError("the empty shift space carries no measure")
    w = Fraction(1, len(y.configs))
    return InvariantMeasure(y, {c: w for c in y.configs})


def measure_from_orbit_masses(y: ShiftSpace, masses) -> InvariantMeasure:
    """Spread one rational mass per orbit uniformly over that orbit."""
    parts = orbits(y)
    if len(masses) != len(parts):
        raise InputError(f"expected {len(parts)} orbit masses, got {len(masses)}")
    weights = {}
    for mass, orb in zip(masses, parts):
        share = Fraction(mass) / len(orb)
        for c in orb:
            weights[c] = share
    return InvariantMeasure(y, weights)


def partition_entropy(y: ShiftSpace, mu: InvariantMeasure, f) -> float:
    """-sum of mass*log(mass) over cylinder masses on the shape ``f``.

    Masses are exact rationals; floats appear only in the final log terms.
    The 0*log(0) convention drops empty cylinders.
    """
    if mu.space != y:
        raise InputError("measure defined on a different space")
    total = 0.0
    for w in language(y, f):
        mass = mu.cylinder_mass(w)
        if mass > 0:
            total -= float(mass) * math.log(mass)
    return total


def measure_entropy(y: ShiftSpace, mu: InvariantMeasure) -> float:
    """Partition entropy over the whole group, normalized by the group
    order."""
    whole = tuple(y.group.elements())
    return partition_entropy(y, mu, whole) / y.group.order


@dataclass(frozen=True)
class MmeUniqueVerdict:
    """Result of a grid sweep over orbit-constant invariant measures."""

    unique: bool
    uniform_is_max: bool
    max_entropy: float
    maximizers: tuple  # orbit-mass vectors attaining the maximum


def mme_unique_check(
    y: ShiftSpace, grid: int, budget: int = 1 << 22, tol: float = FLOAT_TOL
) -> MmeUniqueVerdict:
    """Sweep the simplex of orbit-constant measures at the given resolution.

    The exact uniform measure is always included as a candidate alongside
    the grid points.  Reports the set of maximizers of measure entropy
    within ``tol`` of the maximum.
    """
    if not y.configs:
        raise DomainError("cannot sweep measures on the empty space")
    parts = orbits(y)
    r = len(parts)
    est = math.comb(grid + r - 1, r - 1)
    if est > budget:
        raise ResourceError(
            f"simplex grid of ~{est} points exceeds the budget {budget}"
        )

    def compositions(total, bins):
        if bins == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, bins - 1):
                yield (first,) + rest

    uniform_masses = tuple(Fraction(len(orb), len(y.configs)) for orb in parts)
    candidates = [uniform_masses]
    for comp in compositions(grid, r):
        masses = tuple(Fraction(c, grid) for c in comp)
        if masses != uniform_masses:
            candidates.append(masses)

    best = -1.0
    scored = []
    for masses in candidates:
        h = measure_entropy(y, measure_from_orbit_masses(y, masses))
        scored.append((masses, h))
        best = max(best, h)
    maximizers = tuple(m for m, h in scored if h >= best - tol)
    uniform_is_max = uniform_masses in maximizers
    return MmeUniqueVerdict(
        unique=len(maximizers) == 1,
        uniform_is_max=uniform_is_max,
        max_entropy=best,
        maximizers=maximizers,
    )
