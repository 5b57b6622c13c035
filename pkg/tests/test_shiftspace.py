"""SFT enumeration, languages, orbits, subshifts and block codes."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finshift.errors import InputError, ResourceError, ValidationError
from finshift.fixtures import (
    golden_mean_like_spec,
    random_sft_spec,
    standard_specs,
    two_point_spec,
)
from finshift.groups import cyclic
from finshift.patterns import BINARY, Pattern
from finshift.shiftspace import (
    BlockMap,
    SftSpec,
    apply_block_code,
    enumerate_sft,
    enumerate_sft_naive,
    enumerate_subshifts,
    forbidden_patterns,
    full_shift,
    is_shift_invariant,
    language,
    orbits,
    spec_from_space,
)


def test_spec_normalizes_shape():
    g = cyclic(4)
    spec = SftSpec(g, BINARY, (1, 0, 1), frozenset())
    assert spec.forbidden_shape == (0, 1)
    with pytest.raises(InputError):
        SftSpec(g, BINARY, (0, 9), frozenset())
    with pytest.raises(InputError):
        SftSpec(g, BINARY, (0,), frozenset({Pattern(g, (0, 1), (1, 1))}))


def test_full_shift():
    y = full_shift(cyclic(3), BINARY)
    assert len(y) == 8
    assert is_shift_invariant(y)


def test_two_point_space():
    y = enumerate_sft(two_point_spec(cyclic(4)))
    assert y.configs == {(0, 0, 0, 0), (1, 1, 1, 1)}


def test_golden_mean_on_z5():
    y = enumerate_sft(golden_mean_like_spec(cyclic(5)))
    assert len(y) == 11
    assert is_shift_invariant(y)
    for x in y.configs:
        assert all(not (x[i] and x[(i + 1) % 5]) for i in range(5))


def test_forbidding_empty_pattern_kills_everything():
    g = cyclic(3)
    spec = SftSpec(g, BINARY, (), frozenset({Pattern(g, (), ())}))
    assert len(enumerate_sft(spec)) == 0
    spec = SftSpec(g, BINARY, (), frozenset())
    assert len(enumerate_sft(spec)) == 8


def test_budget_guard():
    spec = SftSpec(cyclic(8), BINARY, (0,), frozenset())
    with pytest.raises(ResourceError):
        enumerate_sft(spec, budget=100)
    with pytest.raises(ResourceError):
        enumerate_sft_naive(spec, budget=100)


def test_enumeration_matches_naive_on_fixtures():
    for name, spec in standard_specs():
        fast = enumerate_sft(spec)
        slow = enumerate_sft_naive(spec)
        assert fast.configs == slow.configs, name
        assert is_shift_invariant(fast), name


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10_000), st.sampled_from([2, 3, 4, 5]))
def test_enumeration_matches_naive_on_random_specs(seed, n):
    spec = random_sft_spec(cyclic(n), random.Random(seed))
    assert enumerate_sft(spec).configs == enumerate_sft_naive(spec).configs


def test_language_and_forbidden_patterns():
    y = enumerate_sft(two_point_spec(cyclic(4)))
    lang = {w.symbols for w in language(y, (0, 2))}
    assert lang == {(0, 0), (1, 1)}
    bad = {w.symbols for w in forbidden_patterns(y, (0, 2))}
    assert bad == {(0, 1), (1, 0)}


def test_spec_from_space_round_trip():
    for name, spec in standard_specs():
        y = enumerate_sft(spec)
        again = enumerate_sft(spec_from_space(y, tuple(y.group.elements())))
        assert again.configs == y.configs, name


def test_orbits():
    y = enumerate_sft(two_point_spec(cyclic(4)))
    assert [len(o) for o in orbits(y)] == [1, 1]
    y = enumerate_sft(golden_mean_like_spec(cyclic(5)))
    assert sorted(len(o) for o in orbits(y)) == [1, 5, 5]


def test_enumerate_subshifts():
    y = enumerate_sft(two_point_spec(cyclic(4)))
    subs = enumerate_subshifts(y)
    assert len(subs) == 4
    y = enumerate_sft(golden_mean_like_spec(cyclic(5)))
    subs = enumerate_subshifts(y)
    assert len(subs) == 8
    assert all(is_shift_invariant(z) for z in subs)
    with pytest.raises(ResourceError):
        enumerate_subshifts(full_shift(cyclic(5), BINARY), cap=3)


def test_xor_block_code_image():
    y = full_shift(cyclic(4), BINARY)
    xor = {(a, b): (a + b) % 2 for a in (0, 1) for b in (0, 1)}
    image = apply_block_code(y, BlockMap(y, (0, 1), xor, BINARY))
    assert len(image) == 8
    assert all(sum(c) % 2 == 0 for c in image.configs)
    assert is_shift_invariant(image)


def test_block_code_missing_key():
    y = full_shift(cyclic(2), BINARY)
    code = BlockMap(y, (0,), {(0,): 0}, BINARY)
    with pytest.raises(ValidationError):
        apply_block_code(y, code)


def test_block_code_domain_mismatch():
    y = full_shift(cyclic(2), BINARY)
    z = enumerate_sft(two_point_spec(cyclic(2)))
    code = BlockMap(y, (0,), {(0,): 0, (1,): 1}, BINARY)
    with pytest.raises(InputError):
        apply_block_code(z, code)


def test_block_code_commutes_with_shift():
    from finshift.patterns import shift_config

    y = full_shift(cyclic(4), BINARY)
    xor = {(a, b): (a + b) % 2 for a in (0, 1) for b in (0, 1)}
    mul = y.group.mul
    for config in y.configs:
        out = tuple(
            xor[(config[mul[0][g]], config[mul[1][g]])] for g in y.group.elements()
        )
        for g in y.group.elements():
            shifted_then_coded = tuple(
                xor[
                    (
                        shift_config(y.group, g, config)[mul[0][h]],
                        shift_config(y.group, g, config)[mul[1][h]],
                    )
                ]
                for h in y.group.elements()
            )
            assert shifted_then_coded == shift_config(y.group, g, out)
