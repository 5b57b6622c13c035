"""Free extensions of shift spaces along subgroup inclusions and towers.

The core device is the bijection between coset-indexed families of base
configurations and configurations on the ambient group: ``assemble`` places
each family member on its coset (suitably translated) and ``disassemble``
reads the members back off.  ``family_action`` is the ambient-group action
on families that makes ``assemble`` equivariant: assembling the acted
family equals shifting the assembled configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import InputError, ResourceError
from .groups import (
    CosetDecomposition,
    FiniteGroup,
    GroupTower,
    Subgroup,
    coset_action,
    right_cosets,
)
from .patterns import CosetFamily, Pattern, shift_config
from .shiftspace import (
    DEFAULT_CANDIDATE_BUDGET,
    SftSpec,
    ShiftSpace,
    enumerate_sft,
    forbidden_patterns,
)


@dataclass(frozen=True)
class ExtensionContext:
    """Everything needed to extend shifts from a base group to an ambient one.

    ``base_embed[i]`` is the ambient element index of base element ``i``;
    the decomposition fixes the coset representatives used to index
    families.
    """

    ambient: FiniteGroup
    base: Subgroup
    base_group: FiniteGroup
    base_embed: tuple[int, ...]
    decomposition: CosetDecomposition

    @property
    def cosets(self) -> int:
        return self.decomposition.index

    def base_index(self, ambient_elem: int) -> int:
        try:
            return self.base_embed.index(ambient_elem)
        except ValueError:
            raise InputError(
                f"ambient element {ambient_elem} is not in the base subgroup"
            ) from None


def extension_context(
    ambient: FiniteGroup, base_group: FiniteGroup, base_embed, reps=None
) -> ExtensionContext:
    """Build a context from an injective homomorphism ``base_group -> ambient``.

    ``reps`` optionally overrides the canonical coset representatives.
    """
    base_embed = tuple(base_embed)
    sub = Subgroup(ambient, tuple(sorted(base_embed)))
    dec = right_cosets(ambient, sub, reps=reps)
    return ExtensionContext(ambient, sub, base_group, base_embed, dec)


def subgroup_context(ambient: FiniteGroup, sub: Subgroup, reps=None) -> ExtensionContext:
    """Context for a subgroup given directly inside the ambient group."""
    base_group, embed = sub.as_group()
    return extension_context(ambient, base_group, embed, reps=reps)


def _base_lookup(ctx: ExtensionContext) -> dict[int, int]:
    return {amb: i for i, amb in enumerate(ctx.base_embed)}


def family_action(ctx: ExtensionContext, g: int, fam: CosetFamily) -> CosetFamily:
    """Act on a coset family by an ambient element.

    The member at coset c is replaced by the member from the coset c moves
    to, shifted inside the base by the correction element that keeps
    ``assemble`` equivariant.
    """
    if fam.decomposition != ctx.decomposition:
        raise InputError("family indexed by a different coset decomposition")
    perm, corrections = coset_action(ctx.decomposition, g)
    lookup = _base_lookup(ctx)
    members = []
    for i in range(ctx.cosets):
        corr = lookup[corrections[i]]
        members.append(shift_config(ctx.base_group, corr, fam.members[perm[i]]))
    return CosetFamily(ctx.decomposition, tuple(members))


def assemble(ctx: ExtensionContext, fam: CosetFamily):
    """Glue a coset family into a single ambient configuration.

    The restriction of the result to the coset with representative c is the
    member of that coset translated by c^-1; inverting the translation, the
    value at ambient element k is the member read at ``k * c^-1``.
    """
    if fam.decomposition != ctx.decomposition:
        raise InputError("family indexed by a different coset decomposition")
    G = ctx.ambient
    lookup = _base_lookup(ctx)
    dec = ctx.decomposition
    out = [0] * G.order
    for k in G.elements():
        i = dec.coset_of[k]
        c = dec.reps[i]
        out[k] = fam.members[i][lookup[G.mul[k][G.inv[c]]]]
    return tuple(out)


def disassemble(ctx: ExtensionContext, config) -> CosetFamily:
    """Inverse of :func:`assemble`: member c reads the configuration at
    ``h * c``."""
    G = ctx.ambient
    if len(config) != G.order:
        raise InputError("configuration length must equal the ambient order")
    members = []
    for c in ctx.decomposition.reps:
        members.append(
            tuple(config[G.mul[h][c]] for h in ctx.base_embed)
        )
    return CosetFamily(ctx.decomposition, tuple(members))


def all_families(ctx: ExtensionContext, base_configs) -> list[CosetFamily]:
    """Every assignment of one base configuration per coset, in coset-rep
    order."""
    base_configs = sorted(base_configs)
    return [
        CosetFamily(ctx.decomposition, combo)
        for combo in iproduct(base_configs, repeat=ctx.cosets)
    ]


def free_extension(
    y: ShiftSpace, ctx: ExtensionContext, budget: int = DEFAULT_CANDIDATE_BUDGET
) -> ShiftSpace:
    """Extend a base shift to the ambient group: one independent copy of
    the base per coset, glued by :func:`assemble`."""
    if y.group != ctx.base_group:
        raise InputError("space is not defined on the context's base group")
    if len(y.configs) ** ctx.cosets > budget:
        raise ResourceError(
            f"extension would enumerate {len(y.configs)}^{ctx.cosets} "
            f"families, over budget {budget}"
        )
    # precomputed form of assemble: ambient element k reads family member
    # coset_of[k] at base position of k * rep^-1
    G = ctx.ambient
    dec = ctx.decomposition
    lookup = _base_lookup(ctx)
    placement = [
        (dec.coset_of[k], lookup[G.mul[k][G.inv[dec.reps[dec.coset_of[k]]]]])
        for k in G.elements()
    ]
    configs = frozenset(
        tuple(combo[i][j] for i, j in placement)
        for combo in iproduct(sorted(y.configs), repeat=ctx.cosets)
    )
    return ShiftSpace(ctx.ambient, y.alphabet, configs)


def free_extension_spec(spec: SftSpec, ctx: ExtensionContext) -> SftSpec:
    """Reinterpret a base-group SFT spec over the ambient group.

    The forbidden patterns are unchanged as symbol data; only their shape
    is carried through the subgroup inclusion.  Enumerating the result
    agrees with extending the enumerated base.
    """
    if spec.group != ctx.base_group:
        raise InputError("spec is not defined on the context's base group")
    amb_shape = [ctx.base_embed[f] for f in spec.forbidden_shape]
    order = sorted(range(len(amb_shape)), key=lambda i: amb_shape[i])
    new_shape = tuple(amb_shape[i] for i in order)
    lifted = frozenset(
        Pattern(ctx.ambient, new_shape, tuple(w.symbols[i] for i in order))
        for w in spec.forbidden
    )
    return SftSpec(ctx.ambient, spec.alphabet, new_shape, lifted)


@dataclass(frozen=True)
class BaseExtractResult:
    """Outcome of :func:`base_extract`.

    ``ok`` is False when re-extending the recovered spec fails to reproduce
    the input space, in which case ``witness`` is a configuration in the
    symmetric difference.
    """

    ok: bool
    spec: SftSpec | None
    witness: tuple | None


def base_extract(
    x: ShiftSpace,
    spec_shape,
    ctx: ExtensionContext,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
) -> BaseExtractResult:
    """Recover a base-group SFT spec from an extension.

    Given a forbidden shape for ``x``, the shape is folded into the base
    subgroup coset by coset (E), re-spread over the touched cosets (the
    hat shape), and a base pattern is forbidden exactly when all of its
    re-spread placements are forbidden in ``x``.  The result is verified by
    round trip; on mismatch a witness configuration is returned instead of
    trusting the precondition that ``x`` really was a free extension.
    """
    G = ctx.ambient
    dec = ctx.decomposition
    F = tuple(sorted(set(spec_shape)))
    touched = sorted({dec.coset_of[f] for f in F})
    reps0 = [dec.reps[i] for i in touched]

    # E = union of F_c c^-1 over touched cosets, inside the base subgroup
    e_amb = sorted(
        {G.mul[f][G.inv[dec.reps[dec.coset_of[f]]]] for f in F}
    )
    hat = tuple(sorted({G.mul[h][c] for h in e_amb for c in reps0}))
    bad_hat = {w.symbols for w in forbidden_patterns(x, hat)}

    e_base = tuple(sorted(ctx.base_index(a) for a in e_amb))
    lookup = {amb: i for i, amb in enumerate(e_amb)}

    # placements[c][j] = position in hat of E-cell j pushed onto coset c
    placements = []
    for c in reps0:
        placements.append(tuple(hat.index(G.mul[h][c]) for h in e_amb))
    free_cells = [
        [j for j in range(len(hat)) if j not in set(p)] for p in placements
    ]

    k = x.alphabet.size
    forbidden = set()
    for sym in iproduct(range(k), repeat=len(e_amb)):
        all_bad = True
        for p, free in zip(placements, free_cells):
            fixed = [0] * len(hat)
            for j, s in zip(p, sym):
                fixed[j] = s
            placed_ok = False
            for fill in iproduct(range(k), repeat=len(free)):
                for j, s in zip(free, fill):
                    fixed[j] = s
                if tuple(fixed) not in bad_hat:
                    placed_ok = True
                    break
            if placed_ok:
                all_bad = False
                break
        if all_bad:
            base_sym = tuple(
                sym[lookup[ctx.base_embed[b]]] for b in e_base
            )
            forbidden.add(Pattern(ctx.base_group, e_base, base_sym))

    spec = SftSpec(ctx.base_group, x.alphabet, e_base, frozenset(forbidden))
    redone = enumerate_sft(free_extension_spec(spec, ctx), budget=budget)
    if redone.configs != x.configs:
        diff = sorted(redone.configs ^ x.configs)
        return BaseExtractResult(False, spec, diff[0])
    return BaseExtractResult(True, spec, None)


def tower_context(tower: GroupTower, i: int, j: int, reps=None) -> ExtensionContext:
    """Context extending tower level ``i`` directly into level ``j``."""
    return extension_context(
        tower.levels[j], tower.levels[i], tower.embed_up(i, j), reps=reps
    )


def tower_extend(
    y: ShiftSpace,
    tower: GroupTower,
    i: int,
    j: int,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
) -> ShiftSpace:
    """Extend level by level from tower level ``i`` up to level ``j``.

    Composing one-step extensions equals the direct extension; both are
    exercised against each other in the test suite.
    """
    if y.group != tower.levels[i]:
        raise InputError("space is not defined on the requested tower level")
    current = y
    for k in range(i, j):
        ctx = extension_context(
            tower.levels[k + 1], tower.levels[k], tower.embeddings[k]
        )
        current = free_extension(current, ctx, budget=budget)
    return current
