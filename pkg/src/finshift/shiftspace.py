"""SFT specifications and fully enumerated shift spaces on finite groups.

An :class:`SftSpec` is declarative (forbidden patterns on a fixed shape);
a :class:`ShiftSpace` is the enumerated, shift-invariant set of
configurations.  Two independent enumeration routes exist: a pruned
depth-first search (:func:`enumerate_sft`) and a naive filter over the full
configuration space (:func:`enumerate_sft_naive`), kept as each other's
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import InputError, ResourceError, ValidationError
from .groups import FiniteGroup
from .patterns import (
    Alphabet,
    Pattern,
    pattern_from_config,
    restrict,
    shift_config,
)

DEFAULT_CANDIDATE_BUDGET = 1 << 24
DEFAULT_ORBIT_CAP = 20


@dataclass(frozen=True)
class SftSpec:
    """Forbidden-pattern presentation of an SFT on a finite group."""

    group: FiniteGroup
    alphabet: Alphabet
    forbidden_shape: tuple[int, ...]
    forbidden: frozenset[Pattern]

    def __post_init__(self):
        shape = tuple(sorted(set(self.forbidden_shape)))
        object.__setattr__(self, "forbidden_shape", shape)
        if shape and shape[-1] >= self.group.order:
            raise InputError("forbidden shape contains indices outside the group")
        for w in self.forbidden:
            if w.shape != shape:
                raise InputError(
                    "every forbidden pattern must live exactly on the spec shape"
                )


@dataclass(frozen=True)
class ShiftSpace:
    """A shift-invariant set of full configurations (symbol tuples)."""

    group: FiniteGroup
    alphabet: Alphabet
    configs: frozenset

    def __len__(self):
        return len(self.configs)

    def sorted_configs(self) -> list:
        return sorted(self.configs)

    def patterns(self) -> list[Pattern]:
        return [pattern_from_config(self.group, c) for c in self.sorted_configs()]


def full_shift(group: FiniteGroup, alphabet: Alphabet) -> ShiftSpace:
    configs = frozenset(iproduct(range(alphabet.size), repeat=group.order))
    return ShiftSpace(group, alphabet, configs)


def is_shift_invariant(y: ShiftSpace) -> bool:
    return all(
        shift_config(y.group, g, x) in y.configs
        for x in y.configs
        for g in y.group.elements()
    )


def _windows(spec: SftSpec):
    """For each group element g, the cells read by the shifted shape.

    Cell k of window g is ``f_k * g`` so that matching a forbidden pattern
    against the window realizes the condition on ``(shifted x)|_F``.
    """
    mul = spec.group.mul
    return [
        tuple(mul[f][g] for f in spec.forbidden_shape)
        for g in spec.group.elements()
    ]


def enumerate_sft(spec: SftSpec, budget: int = DEFAULT_CANDIDATE_BUDGET) -> ShiftSpace:
    """Enumerate the configurations avoiding every shifted forbidden pattern.

    Depth-first assignment over element indices ascending, symbols
    ascending; a partial assignment is pruned as soon as some fully
    assigned window matches a forbidden pattern.
    """
    n = spec.group.order
    k = spec.alphabet.size
    if k ** n > budget:
        raise ResourceError(
            f"search space {k}^{n} exceeds the candidate budget {budget}"
        )
    forbidden = {w.symbols for w in spec.forbidden}
    windows = _windows(spec)
    # windows that become fully assigned exactly when position p is set
    by_last = [[] for _ in range(n)]
    for cells in windows:
        if cells:
            by_last[max(cells)].append(cells)

    found = []
    config = [0] * n

    def descend(p):
        if p == n:
            found.append(tuple(config))
            return
        for s in range(k):
            config[p] = s
            ok = True
            for cells in by_last[p]:
                if tuple(config[c] for c in cells) in forbidden:
                    ok = False
                    break
            if ok:
                descend(p + 1)

    if forbidden and not spec.forbidden_shape:
        # forbidding the empty pattern kills every configuration
        return ShiftSpace(spec.group, spec.alphabet, frozenset())
    descend(0)
    return ShiftSpace(spec.group, spec.alphabet, frozenset(found))


def enumerate_sft_naive(spec: SftSpec, budget: int = DEFAULT_CANDIDATE_BUDGET) -> ShiftSpace:
    """Brute-force oracle: filter all |A|^|G| configurations directly."""
    n = spec.group.order
    k = spec.alphabet.size
    if k ** n > budget:
        raise ResourceError(
            f"search space {k}^{n} exceeds the candidate budget {budget}"
        )
    forbidden = {w.symbols for w in spec.forbidden}
    windows = _windows(spec)
    if forbidden and not spec.forbidden_shape:
        return ShiftSpace(spec.group, spec.alphabet, frozenset())
    keep = []
    for config in iproduct(range(k), repeat=n):
        if all(
            tuple(config[c] for c in cells) not in forbidden for cells in windows
        ):
            keep.append(config)
    return ShiftSpace(spec.group, spec.alphabet, frozenset(keep))


def language(y: ShiftSpace, f) -> set[Pattern]:
    """All restrictions of the space's configurations to the shape ``f``."""
    f = tuple(sorted(set(f)))
    if f and f[-1] >= y.group.order:
        raise InputError("shape contains indices outside the group")
    return {
        restrict(pattern_from_config(y.group, x), f) for x in y.configs
    }


def forbidden_patterns(y: ShiftSpace, f) -> set[Pattern]:
    """The complement of the f-language inside all patterns on ``f``."""
    f = tuple(sorted(set(f)))
    lang = {w.symbols for w in language(y, f)}
    return {
        Pattern(y.group, f, sym)
        for sym in iproduct(range(y.alphabet.size), repeat=len(f))
        if sym not in lang
    }


def spec_from_space(y: ShiftSpace, f) -> SftSpec:
    """Present ``y`` by forbidding exactly the non-occurring f-patterns."""
    f = tuple(sorted(set(f)))
    return SftSpec(y.group, y.alphabet, f, frozenset(forbidden_patterns(y, f)))


def orbits(y: ShiftSpace) -> list[frozenset]:
    """Partition of the configurations into shift orbits, sorted by their
    least member."""
    remaining = set(y.configs)
    parts = []
    while remaining:
        x = min(remaining)
        orb = frozenset(shift_config(y.group, g, x) for g in y.group.elements())
        parts.append(orb)
        remaining -= orb
    return sorted(parts, key=min)


def enumerate_subshifts(y: ShiftSpace, cap: int = DEFAULT_ORBIT_CAP) -> list[ShiftSpace]:
    """All unions of orbits, including the empty and the full space."""
    parts = orbits(y)
    if len(parts) > cap:
        raise ResourceError(
            f"{len(parts)} orbits exceed the subshift enumeration cap {cap}"
        )
    out = []
    for mask in range(1 << len(parts)):
        configs = frozenset().union(
            *(parts[i] for i in range(len(parts)) if mask >> i & 1)
        )
        out.append(ShiftSpace(y.group, y.alphabet, configs))
    return out


@dataclass(frozen=True)
class BlockMap:
    """A local rule: window patterns of the domain to target symbols.

    ``table`` maps a symbol tuple (aligned with the sorted window) to a
    target symbol index.
    """

    domain: ShiftSpace
    window: tuple[int, ...]
    table: dict
    target_alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(sorted(set(self.window))))


def apply_block_code(x: ShiftSpace, b: BlockMap) -> ShiftSpace:
    """Image of ``x`` under the code induced by the local rule.

    Output symbol at g is the rule applied to the window of the g-shifted
    configuration, i.e. to the cells ``f*g`` for f in the window.
    """
    if b.domain != x:
        raise InputError("block map domain does not match the space")
    mul = x.group.mul
    cells_for = [
        tuple(mul[f][g] for f in b.window) for g in x.group.elements()
    ]
    images = set()
    for config in x.configs:
        out = []
        for g in x.group.elements():
            key = tuple(config[c] for c in cells_for[g])
            if key not in b.table:
                raise ValidationError(
                    f"window pattern {key} missing from the block map table"
                )
            out.append(b.table[key])
        images.add(tuple(out))
    return ShiftSpace(x.group, b.target_alphabet, frozenset(images))
