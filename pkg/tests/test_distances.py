"""Tests for the distance-profile machinery.

The dynamic program is cross-checked three independent ways: against the
brute-force path enumeration, against the full-state (uncollapsed) dynamic
program, and against the bound formulas that the chain construction is
guaranteed to meet.
"""

import random
from fractions import Fraction

import pytest

from pumrank.distances import (
    ConvEncoder,
    brute_force_row_distance,
    compare_hamming,
    construction_lower_bound,
    free_rank_distance,
    full_state_row_distances,
    row_distance_profile,
    slope_estimate,
    state_classes,
    upper_bounds,
)
from pumrank.errors import BudgetExceeded
from pumrank.pum import build_code

from helpers import get_field, random_matrix


@pytest.fixture(scope="module")
def small_pum():
    """The (3,2|1) chain construction over F_{2^6}."""
    return build_code(get_field(2, 6), 3, 2, 1, 1)


@pytest.fixture(scope="module")
def small_pum_profile(small_pum):
    return row_distance_profile(small_pum, 8)


@pytest.fixture(scope="module")
def small_um():
    """A (2,1|1) code with full-memory rate 1/2 over F_{2^4}."""
    return build_code(get_field(2, 4), 2, 1, 1, 1)


def catastrophic_encoder():
    """G0 = I and G1 of rank 1 over F_4; the input (1, 0) repeated forever
    adds zero weight after the first block, so minimum accumulated weights
    plateau and the free distance can never be certified."""
    f = get_field(2, 2)
    return ConvEncoder(f, ((1, 0), (0, 1)), ((1, 0), (0, 0)))


# ---------------------------------------------------------------------------
# the (3,2|1) construction: exact values and bound compliance


def test_construction_profile_values(small_pum_profile):
    p = small_pum_profile
    assert p.d_row == (3, 4, 5, 6, 7, 8, 9, 10)
    assert p.d_free == 3
    assert p.status == "certified"
    assert p.certified_at == 2
    assert not p.zero_weight_cycle
    assert p.zero_block_on_min_path == (False,) * 8
    assert p.state_count == 65  # 2^6 images of G1 plus the resting state
    assert p.metric == "sum_rank"
    assert (p.n, p.k, p.k1, p.mh, p.kind) == (3, 2, 1, 1, "PUM")


def test_construction_profile_summaries(small_pum_profile):
    p = small_pum_profile
    assert p.slope_estimate == Fraction(1)
    assert p.window == (2, 8)
    assert p.intercept_estimate == Fraction(2)
    assert p.bounds is not None
    assert p.bounds.kind == "PUM"
    assert p.bounds.d_free_bound == 3
    assert p.bounds.slope_bound == 1
    assert p.bounds.d_free_ok is True
    assert p.bounds.slope_ok is True


def test_construction_bound_check(small_pum_profile):
    cb = small_pum_profile.construction_bound
    assert cb is not None and cb.applies
    assert cb.values == (3, 4, 4, 6, 6, 8, 8, 10)
    assert cb.satisfied == (True,) * 8
    assert cb.equality_at_one is True


def test_construction_meets_lower_bounds(small_pum_profile):
    for ell, d in enumerate(small_pum_profile.d_row, start=1):
        assert d >= construction_lower_bound(ell, 3, 2)
    assert small_pum_profile.d_row[0] == construction_lower_bound(1, 3, 2)


def test_profile_line_fit_sits_below_values(small_pum_profile):
    p = small_pum_profile
    touched = False
    for ell, d in enumerate(p.d_row, start=1):
        bound = p.slope_estimate * ell + p.intercept_estimate
        assert d >= bound
        touched = touched or d == bound
    assert touched  # the fitted line is tight somewhere


def test_brute_force_matches_dp_on_construction(small_pum, small_pum_profile):
    assert brute_force_row_distance(small_pum, 1) == 3
    assert brute_force_row_distance(small_pum, 2) == 4
    assert small_pum_profile.d_row[:2] == (3, 4)


def test_construction_hamming_domination(small_pum):
    cmp = compare_hamming(small_pum, 4)
    assert cmp.ok
    assert cmp.per_order_ok == (True,) * 4
    assert cmp.d_free_ok is True
    for a, b in zip(cmp.sum_rank.d_row, cmp.hamming.d_row):
        assert a <= b


# ---------------------------------------------------------------------------
# oracle agreement on randomized small encoders


def _random_encoders(count, seed):
    rng = random.Random(seed)
    encs = []
    while len(encs) < count:
        q, s = 2, rng.choice((2, 3))
        f = get_field(q, s)
        n = rng.choice((2, 3))
        k = rng.choice((1, 2))
        g0 = random_matrix(rng, f, k, n)
        g1 = list(random_matrix(rng, f, k, n))
        if rng.random() < 0.4:  # force a rank-deficient memory matrix
            g1[rng.randrange(k)] = (0,) * n
        encs.append(ConvEncoder(f, g0, tuple(g1)))
    return encs


@pytest.mark.parametrize("seed", [11, 12, 13])
def test_dp_matches_brute_force(seed):
    for enc in _random_encoders(4, seed):
        profile = row_distance_profile(enc, 4)
        for ell in range(1, 5):
            assert profile.d_row[ell - 1] == \
                brute_force_row_distance(enc, ell), enc
        assert profile.d_free == (None if all(d is None for d in profile.d_row)
                                  else min(d for d in profile.d_row
                                           if d is not None))


@pytest.mark.parametrize("seed", [21, 22])
def test_collapsed_dp_matches_full_state_dp(seed):
    for enc in _random_encoders(5, seed):
        profile = row_distance_profile(enc, 5)
        assert list(profile.d_row) == full_state_row_distances(enc, 5), enc


@pytest.mark.parametrize("seed", [31, 32])
def test_hamming_domination_random(seed):
    for enc in _random_encoders(4, seed):
        cmp = compare_hamming(enc, 4)
        assert cmp.ok, enc


def test_full_state_dp_on_construction(small_pum, small_pum_profile):
    # 2^12 information words is within the full-state guard's default
    assert full_state_row_distances(small_pum, 2, max_states=1 << 12) == \
        list(small_pum_profile.d_row[:2])


# ---------------------------------------------------------------------------
# codes whose path sets are empty


def test_full_memory_profile_is_empty(small_um):
    p = row_distance_profile(small_um, 3)
    assert p.d_row == (None, None, None)
    assert p.zero_block_on_min_path == (None, None, None)
    assert p.d_free is None
    assert p.status == "empty"
    assert p.certified_at is None
    assert p.slope_estimate is None and p.window is None
    assert p.kind == "UM"
    with pytest.raises(ValueError, match="empty"):
        free_rank_distance(p)


def test_full_memory_brute_force_is_empty(small_um):
    for ell in (1, 2, 3):
        assert brute_force_row_distance(small_um, ell) is None


def test_full_memory_domination_is_vacuous(small_um):
    cmp = compare_hamming(small_um, 2)
    assert cmp.per_order_ok == (None, None)
    assert cmp.d_free_ok is None
    assert cmp.ok


# ---------------------------------------------------------------------------
# certification and the zero-weight-cycle guard


def test_catastrophic_encoder_never_certifies():
    enc = catastrophic_encoder()
    p = row_distance_profile(enc, 4)
    assert p.d_row == (1, 2, 2, 2)
    assert p.zero_weight_cycle
    assert p.status == "lower_bound_only"
    assert p.certified_at is None
    assert p.zero_block_on_min_path == (False, False, True, True)
    assert free_rank_distance(p) == (1, "lower_bound_only")


def test_catastrophic_encoder_oracles_agree():
    enc = catastrophic_encoder()
    assert full_state_row_distances(enc, 4) == [1, 2, 2, 2]
    for ell in range(1, 5):
        assert brute_force_row_distance(enc, ell) == [1, 2, 2, 2][ell - 1]


def test_single_layer_profile_not_certified(small_pum):
    # at depth one the cheapest surviving state is cheaper than d^r_1
    p = row_distance_profile(small_pum, 1)
    assert p.d_row == (3,)
    assert p.status == "lower_bound_only"
    assert free_rank_distance(p) == (3, "lower_bound_only")


def test_all_zero_encoder_degenerates():
    f = get_field(2, 2)
    enc = ConvEncoder(f, ((0, 0),), ((0, 0),))
    p = row_distance_profile(enc, 3)
    assert p.d_row == (0, 0, 0)
    assert p.zero_block_on_min_path == (True, True, True)
    assert p.zero_weight_cycle
    assert p.status == "lower_bound_only"


# ---------------------------------------------------------------------------
# budgets


def test_state_budget_refuses_large_memory():
    code = build_code(get_field(2, 12), 6, 4, 2, 1)
    with pytest.raises(BudgetExceeded, match="state budget"):
        row_distance_profile(code, 2)


def test_input_budget_refuses_large_information_space(small_um):
    with pytest.raises(BudgetExceeded, match="input budget"):
        row_distance_profile(small_um, 2, max_inputs=8)


def test_path_budget_refuses_deep_enumeration(small_pum):
    with pytest.raises(BudgetExceeded, match="path budget"):
        brute_force_row_distance(small_pum, 3)


def test_full_state_budget(small_pum):
    with pytest.raises(BudgetExceeded, match="full-state budget"):
        full_state_row_distances(small_pum, 2, max_states=256)


def test_order_validation(small_pum):
    with pytest.raises(ValueError, match="at least 1"):
        row_distance_profile(small_pum, 0)
    with pytest.raises(ValueError, match="at least 1"):
        brute_force_row_distance(small_pum, 0)
    with pytest.raises(ValueError, match="at least 1"):
        full_state_row_distances(small_pum, 0)
    with pytest.raises(ValueError, match="metric"):
        row_distance_profile(small_pum, 1, metric="euclidean")


# ---------------------------------------------------------------------------
# slope, bounds, and class listing


def test_slope_estimate_windows(small_pum_profile):
    assert slope_estimate(small_pum_profile, (2, 8)) == Fraction(1)
    assert slope_estimate(small_pum_profile, (1, 2)) == Fraction(1)
    assert slope_estimate(small_pum_profile, (1, 8)) == Fraction(1)


def test_slope_estimate_constant_profile():
    p = row_distance_profile(catastrophic_encoder(), 4)
    assert slope_estimate(p, (2, 4)) == Fraction(0)
    assert slope_estimate(p, (3, 4)) == Fraction(0)


def test_slope_estimate_window_validation(small_pum_profile, small_um):
    for window in ((0, 2), (2, 2), (3, 2), (2, 9)):
        with pytest.raises(ValueError, match="window"):
            slope_estimate(small_pum_profile, window)
    empty = row_distance_profile(small_um, 3)
    with pytest.raises(ValueError, match="empty"):
        slope_estimate(empty, (1, 3))


def test_upper_bounds_frozen_values():
    b = upper_bounds(6, 4, 2, 1)
    assert (b.kind, b.d_free_bound, b.slope_bound) == ("PUM", 5, 2)
    b = upper_bounds(6, 3, 3, 1)
    assert (b.kind, b.d_free_bound, b.slope_bound) == ("UM", 10, 3)
    b = upper_bounds(3, 2, 1, 1)
    assert (b.kind, b.d_free_bound, b.slope_bound) == ("PUM", 3, 1)
    with pytest.raises(ValueError, match="invalid"):
        upper_bounds(6, 2, 2, 1)


def test_construction_lower_bound_frozen_values():
    assert construction_lower_bound(1, 3, 2) == 3
    assert construction_lower_bound(4, 3, 2) == 6
    assert construction_lower_bound(2, 6, 4) == 6
    assert [construction_lower_bound(ell, 3, 2) for ell in range(1, 9)] == \
        [3, 4, 4, 6, 6, 8, 8, 10]
    with pytest.raises(ValueError, match="at least 1"):
        construction_lower_bound(0, 3, 2)
    with pytest.raises(ValueError, match="0 < k < n"):
        construction_lower_bound(1, 3, 3)


def test_state_classes_listing(small_pum, small_pum_profile):
    classes = state_classes(small_pum)
    assert len(classes) == small_pum_profile.state_count
    assert classes[0].is_zero_state and classes[0].image == (0, 0, 0)
    images = [c.image for c in classes[1:]]
    assert len(set(images)) == len(images)
    assert (0, 0, 0) in images  # k1 < k: some nonzero input maps to zero
    assert all(not c.is_zero_state for c in classes[1:])


def test_state_classes_full_rank_memory(small_um):
    classes = state_classes(small_um)
    assert classes[0].is_zero_state
    assert (0, 0) not in [c.image for c in classes[1:]]
    assert len(classes) == 16  # 15 nonzero images plus the resting state


def test_state_classes_budget():
    code = build_code(get_field(2, 12), 6, 4, 2, 1)
    with pytest.raises(BudgetExceeded, match="state budget"):
        state_classes(code)


# ---------------------------------------------------------------------------
# encoder construction and coercion


def test_encoder_validation():
    f = get_field(2, 2)
    with pytest.raises(ValueError, match="nonempty"):
        ConvEncoder(f, (), ())
    with pytest.raises(ValueError, match="k x n"):
        ConvEncoder(f, ((1, 0),), ((1, 0), (0, 1)))
    with pytest.raises(ValueError, match="k x n"):
        ConvEncoder(f, ((1, 0),), ((1, 0, 0),))
    with pytest.raises(ValueError, match="outside field"):
        ConvEncoder(f, ((1, 7),), ((0, 0),))
    with pytest.raises(TypeError, match="ConvEncoder"):
        row_distance_profile("not a code", 1)


def test_encoder_rank_fields(small_pum):
    enc = ConvEncoder(small_pum.params.field, small_pum.G0, small_pum.G1)
    assert (enc.n, enc.k, enc.k1) == (3, 2, 1)
    p = row_distance_profile(enc, 2)
    assert p.mh is None and p.kind is None
    assert p.bounds is None and p.construction_bound is None
    assert p.d_row == (3, 4)  # same numbers as through the built code
