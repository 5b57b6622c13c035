"""Finite groups, subgroups, right-coset decompositions and subgroup towers.

Groups are explicit multiplication tables over element indices ``0..n-1``.
Countable locally finite groups are modeled at desk scale by towers of
finite groups connected by injective homomorphisms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce

from .errors import InputError, ValidationError

# Orders up to this bound get an exhaustive associativity check; larger
# tables are spot-checked with ASSOC_SAMPLES random triples.
EXHAUSTIVE_ASSOC_ORDER = 64
ASSOC_SAMPLES = 100_000


@dataclass(frozen=True)
class FiniteGroup:
    """An explicit finite group.

    ``mul[a][b]`` is the element index of the product ``a * b``.  Instances
    are immutable and validated on construction; see :func:`from_table`.
    """

    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.mul)

    def elements(self) -> range:
        return range(self.order)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.mul[x][a]
            n += 1
        return n

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def _find_identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            return e
    return None


def from_table(table, labels=None, rng=None) -> FiniteGroup:
    """Build and validate a group from an explicit multiplication table.

    Raises :class:`ValidationError` naming the first violated group law.
    Associativity is checked exhaustively up to order 64 and on random
    triples above that.
    """
    n = len(table)
    if n == 0:
        raise ValidationError("empty table: a group needs at least one element")
    rows = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise ValidationError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise ValidationError(
                    f"closure violated: entry ({i},{j}) = {v!r} is not an "
                    f"element index in [0,{n})"
                )
        rows.append(row)
    mul = tuple(rows)

    e = _find_identity(mul)
    if e is None:
        raise ValidationError("no identity: no element acts neutrally on both sides")

    inv = []
    for a in range(n):
        b = next((b for b in range(n) if mul[a][b] == e and mul[b][a] == e), None)
        if b is None:
            raise ValidationError(f"no inverse: element {a} has no two-sided inverse")
        inv.append(b)

    if n <= EXHAUSTIVE_ASSOC_ORDER:
        triples = (
            (a, b, c) for a in range(n) for b in range(n) for c in range(n)
        )
    else:
        rng = rng or random.Random(0)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(ASSOC_SAMPLES)
        )
    for a, b, c in triples:
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise ValidationError(
                f"non-associative: ({a}*{b})*{c} != {a}*({b}*{c})"
            )

    return FiniteGroup(mul, e, tuple(inv), tuple(labels) if labels else None)


def cyclic(n: int) -> FiniteGroup:
    """The cyclic group of order ``n`` (addition mod n)."""
    if n < 1:
        raise InputError(f"cyclic group order must be >= 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return from_table(table, labels=[str(a) for a in range(n)])


def product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product with mixed-radix index encoding: index = i + |g1|*j."""
    n1, n2 = g1.order, g2.order
    table = []
    for a in range(n1 * n2):
        i, j = a % n1, a // n1
        row = []
        for b in range(n1 * n2):
            k, l = b % n1, b // n1
            row.append(g1.mul[i][k] + n1 * g2.mul[j][l])
        table.append(row)
    labels = [
        f"({g1.label(a % n1)},{g2.label(a // n1)})" for a in range(n1 * n2)
    ]
    return from_table(table, labels=labels)


def make_group(spec) -> FiniteGroup:
    """Build a group from a description tuple.

    Accepted forms: ``("cyclic", n)``, ``("product", spec, spec)`` and
    ``("table", rows)``.
    """
    kind = spec[0]
    if kind == "cyclic":
        return cyclic(spec[1])
    if kind == "product":
        return product(make_group(spec[1]), make_group(spec[2]))
    if kind == "table":
        return from_table(spec[1])
    raise InputError(f"unknown group description {kind!r}")


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member indices inside a parent group."""

    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in set(self.members)

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """The subgroup as a standalone group plus its embedding.

        Returns ``(group, embed)`` where ``embed[i]`` is the parent index of
        standalone element ``i``.  Standalone indices follow the sorted
        member order.
        """
        members = self.members
        pos = {m: i for i, m in enumerate(members)}
        table = [
            [pos[self.parent.mul[a][b]] for b in members] for a in members
        ]
        labels = [self.parent.label(m) for m in members]
        return from_table(table, labels=labels), members


def _close_under(parent: FiniteGroup, seed: set[int]) -> tuple[int, ...]:
    seen = set(seed) | {parent.identity}
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for b in list(seen):
            for c in (parent.mul[a][b], parent.mul[b][a]):
                if c not in seen:
                    seen.add(c)
                    frontier.append(c)
        ia = parent.inv[a]
        if ia not in seen:
            seen.add(ia)
            frontier.append(ia)
    return tuple(sorted(seen))


def generated_subgroup(g: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup of ``g`` containing ``gens`` (worklist closure)."""
    gens = set(gens)
    for a in gens:
        if not (isinstance(a, int) and 0 <= a < g.order):
            raise InputError(f"generator {a!r} is not an element index of the group")
    return Subgroup(g, _close_under(g, gens))


def is_subgroup(g: FiniteGroup, members) -> bool:
    s = set(members)
    if g.identity not in s:
        return False
    return all(g.mul[a][b] in s and g.inv[a] in s for a in s for b in s)


def all_subgroups(g: FiniteGroup, budget: int = 1 << 20) -> list[Subgroup]:
    """Every subgroup of ``g``, found by closing all subsets of generators.

    Cost grows as ``2^|g|``; a :class:`ResourceError` guards the budget.
    """
    from itertools import combinations

    from .errors import ResourceError

    if 2 ** g.order > budget:
        raise ResourceError(
            f"subgroup enumeration over 2^{g.order} subsets exceeds budget {budget}"
        )
    found = set()
    elems = list(g.elements())
    for r in range(g.order + 1):
        for gens in combinations(elems, r):
            found.add(_close_under(g, set(gens)))
    return [Subgroup(g, m) for m in sorted(found, key=lambda m: (len(m), m))]


@dataclass(frozen=True)
class CosetDecomposition:
    """Right cosets H\\g with one chosen representative per coset.

    Cosets are ordered by their minimum element; ``reps[i]`` is the chosen
    representative of ``cosets[i]`` and defaults to that minimum.
    """

    parent: FiniteGroup
    subgroup: Subgroup
    cosets: tuple[frozenset, ...]
    reps: tuple[int, ...]
    coset_of: tuple[int, ...] = field(repr=False)  # element index -> coset index

    @property
    def index(self) -> int:
        return len(self.cosets)


def right_cosets(g: FiniteGroup, h: Subgroup, reps=None) -> CosetDecomposition:
    """Partition ``g`` into right cosets of ``h``.

    ``reps`` optionally overrides the canonical (minimum-element) choice of
    representatives; it may be a sequence of element indices, one per coset
    in coset order.
    """
    if h.parent is not g and h.parent != g:
        raise InputError("subgroup belongs to a different parent group")
    if not is_subgroup(g, h.members):
        raise InputError("member set is not closed under the group laws")
    coset_of = [-1] * g.order
    cosets = []
    for c in g.elements():
        if coset_of[c] >= 0:
            continue
        coset = frozenset(g.mul[m][c] for m in h.members)
        idx = len(cosets)
        cosets.append(coset)
        for k in coset:
            coset_of[k] = idx
    if reps is None:
        chosen = tuple(min(c) for c in cosets)
    else:
        chosen = tuple(reps)
        if len(chosen) != len(cosets):
            raise InputError(
                f"expected {len(cosets)} representatives, got {len(chosen)}"
            )
        for i, r in enumerate(chosen):
            if r not in cosets[i]:
                raise InputError(f"representative {r} is not in coset {i}")
    return CosetDecomposition(g, h, tuple(cosets), chosen, tuple(coset_of))


def coset_action(dec: CosetDecomposition, g: int):
    """The permutation of coset indices induced by right translation by ``g``.

    Returns ``(perm, corrections)``: ``perm[i]`` is the index of the coset
    containing ``reps[i] * g``, and ``corrections[i]`` is the subgroup
    element ``c*g * rep(target)^-1`` by which the member moving into coset
    ``i`` must be shifted.  Every correction lies in the subgroup.
    """
    G = dec.parent
    if not (0 <= g < G.order):
        raise InputError(f"{g} is not an element index")
    perm = []
    corrections = []
    sub = set(dec.subgroup.members)
    for c in dec.reps:
        cg = G.mul[c][g]
        j = dec.coset_of[cg]
        perm.append(j)
        corr = G.mul[cg][G.inv[dec.reps[j]]]
        assert corr in sub  # guaranteed since Hcg = H*rep(j)
        corrections.append(corr)
    return tuple(perm), tuple(corrections)


@dataclass(frozen=True)
class GroupTower:
    """A chain of finite groups with injective connecting homomorphisms.

    ``embeddings[i]`` maps element indices of ``levels[i]`` into
    ``levels[i+1]``.
    """

    levels: tuple[FiniteGroup, ...]
    embeddings: tuple[tuple[int, ...], ...]

    def embed_up(self, i: int, j: int) -> tuple[int, ...]:
        """The composed embedding of level ``i`` into level ``j >= i``."""
        if not (0 <= i <= j < len(self.levels)):
            raise InputError(f"invalid tower levels {i} -> {j}")
        emb = tuple(range(self.levels[i].order))
        for k in range(i, j):
            step = self.embeddings[k]
            emb = tuple(step[a] for a in emb)
        return emb


def _check_embedding(lo: FiniteGroup, hi: FiniteGroup, emb) -> None:
    if len(emb) != lo.order:
        raise ValidationError(
            f"embedding must be total: got {len(emb)} entries for order {lo.order}"
        )
    if len(set(emb)) != len(emb):
        dup = next(a for a in emb if list(emb).count(a) > 1)
        raise ValidationError(f"embedding is not injective: image {dup} repeated")
    for a in emb:
        if not (0 <= a < hi.order):
            raise ValidationError(f"embedding image {a} outside the larger group")
    for a in range(lo.order):
        for b in range(lo.order):
            if emb[lo.mul[a][b]] != hi.mul[emb[a]][emb[b]]:
                raise ValidationError(
                    f"not a homomorphism: witness pair ({a},{b})"
                )


def build_tower(levels, embeddings) -> GroupTower:
    """Validate and assemble a tower from groups and index maps."""
    levels = tuple(levels)
    embeddings = tuple(tuple(e) for e in embeddings)
    if len(embeddings) != max(len(levels) - 1, 0):
        raise InputError(
            f"{len(levels)} levels need {len(levels) - 1} embeddings, "
            f"got {len(embeddings)}"
        )
    for i, emb in enumerate(embeddings):
        lo, hi = levels[i], levels[i + 1]
        if hi.order % lo.order != 0:
            raise ValidationError(
                f"level {i} order {lo.order} does not divide level {i+1} "
                f"order {hi.order}"
            )
        _check_embedding(lo, hi, emb)
        if not is_subgroup(hi, emb):
            raise ValidationError(f"embedding image at level {i} is not a subgroup")
    return GroupTower(levels, embeddings)


def z2_power_tower(depth: int) -> GroupTower:
    """The tower Z/2 -> (Z/2)^2 -> ... -> (Z/2)^depth by coordinate inclusion."""
    levels = [cyclic(2)]
    for _ in range(depth - 1):
        levels.append(product(levels[-1], cyclic(2)))
    embeddings = [tuple(range(levels[i].order)) for i in range(depth - 1)]
    return build_tower(levels, embeddings)
