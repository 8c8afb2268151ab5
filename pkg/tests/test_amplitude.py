import numpy as np
import pytest

from fiesta import (
    InvalidInputError,
    amp_transform,
    angular_density,
    apply_mask,
    extreme_angles,
    intra_modulate,
    sector_mask,
)

from oracles import (
    angular_density_oracle,
    disk_count_oracle,
    rotate_bin_oracle,
    sector_mask_oracle,
)


# --- amplitude transform -------------------------------------------------

def test_amp_transform_low_p_is_identity(np_rng):
    amp = np_rng.random((16, 16)) * 40.0
    out = amp_transform(amp, 0.3)
    assert np.array_equal(out, amp)


def test_amp_transform_reverses_about_median():
    amp = np.array([[1.0, 2.0, 3.0, 4.0, 5.0]])
    assert np.array_equal(amp_transform(amp, 0.9), np.array([[2.0, 1.0, 0.0, 1.0, 2.0]]))


def test_amp_transform_even_count_median():
    amp = np.array([[1.0, 2.0], [3.0, 4.0]])
    # median of {1,2,3,4} is 2.5 (mean of the middle pair)
    assert np.array_equal(amp_transform(amp, 0.5), np.array([[1.5, 0.5], [0.5, 1.5]]))


def test_amp_transform_constant_plane_zeroes():
    amp = np.full((8, 8), 3.25)
    assert np.array_equal(amp_transform(amp, 0.9), np.zeros((8, 8)))


def test_amp_transform_boundary_probability():
    amp = np.array([[1.0, 2.0, 3.0]])
    assert not np.array_equal(amp_transform(amp, 0.5), amp)  # p >= 0.5 reverses


# --- angular density ------------------------------------------------------

def test_density_of_zeros_is_zero():
    assert np.array_equal(angular_density(np.zeros((32, 32))), np.zeros(360))


def test_density_ones_65x65_along_plus_x():
    density = angular_density(np.ones((65, 65)))
    assert density[0] == 31.0  # R = 65//2 - 1 in-bounds samples


def test_density_bright_row_peaks_at_zero_degrees():
    amp = np.zeros((65, 65))
    amp[32, 33:] = 1.0  # straight right of the center bin
    density = angular_density(amp)
    assert int(np.argmax(density)) == 0
    assert density[0] == angular_density_oracle(amp)[0]


@pytest.mark.parametrize("shape", [(192, 192), (65, 65), (64, 96)])
def test_density_matches_oracle(np_rng, shape):
    for _ in range(4):
        amp = np_rng.random(shape) * 25.0
        assert np.array_equal(angular_density(amp), angular_density_oracle(amp))


# --- extreme angles -------------------------------------------------------

def test_extreme_angles_unique_max():
    density = np.ones(360)
    density[90] = 10.0
    assert extreme_angles(density) == (90, 0)


def test_extreme_angles_full_tie():
    assert extreme_angles(np.ones(360)) == (0, 0)


def test_extreme_angles_bright_row():
    amp = np.zeros((65, 65))
    amp[32, 33:] = 1.0
    theta_max, _ = extreme_angles(angular_density(amp))
    assert theta_max == 0


# --- sector masks ----------------------------------------------------------

def test_full_circle_mask_matches_disk_count():
    mask = sector_mask(123.0, 360.0, 20.0, 64, 64)
    assert int(mask.data.sum()) == disk_count_oracle(64, 64, 20.0)


def test_mask_values_binary(np_rng):
    mask = sector_mask(10.0, 45.0, 15.0, 48, 48)
    assert set(np.unique(mask.data)).issubset({0, 1})


def test_mask_excludes_center_bin():
    mask = sector_mask(0.0, 360.0, 5.0, 33, 33)
    assert mask.data[16, 16] == 0


def test_mask_192_theta0_k90_r20_predicate():
    mask = sector_mask(0.0, 90.0, 20.0, 192, 192)
    cy, cx = 96, 96
    rows, cols = np.nonzero(mask.data)
    assert len(rows) > 0
    for row, col in zip(rows, cols):
        dy, dx = row - cy, col - cx
        ang = np.degrees(np.arctan2(dy, dx))
        assert -45.0 <= ang <= 45.0
        assert 1.0 <= np.hypot(dy, dx) <= 20.0


def test_mask_matches_scalar_oracle(np_rng):
    for _ in range(20):
        theta = float(np_rng.uniform(0.0, 360.0))
        k = float(np_rng.uniform(5.0, 360.0))
        radius = float(np_rng.uniform(2.0, 31.0))
        mask = sector_mask(theta, k, radius, 65, 65)
        assert np.array_equal(mask.data, sector_mask_oracle(theta, k, radius, 65, 65))


def test_mask_radius_out_of_range():
    with pytest.raises(InvalidInputError):
        sector_mask(0.0, 90.0, 96.0, 192, 192)
    with pytest.raises(InvalidInputError):
        sector_mask(0.0, 90.0, 0.0, 192, 192)


def test_mask_angle_out_of_range():
    with pytest.raises(InvalidInputError):
        sector_mask(0.0, 0.0, 10.0, 64, 64)
    with pytest.raises(InvalidInputError):
        sector_mask(0.0, 361.0, 10.0, 64, 64)


# --- amplitude masking -----------------------------------------------------

def test_apply_mask_zero_mask_is_identity(np_rng):
    amp = np_rng.random((48, 48))
    mask = sector_mask(0.0, 30.0, 10.0, 48, 48)
    zero = type(mask)(data=np.zeros_like(mask.data), theta_deg=0.0, k_deg=30.0, radius=10.0, center=mask.center)
    assert np.array_equal(apply_mask(amp, zero), amp)


def test_apply_mask_counts_and_zeroes():
    mask = sector_mask(45.0, 60.0, 18.0, 64, 64)
    amp = np.ones((64, 64))
    out = apply_mask(amp, mask)
    n = int(mask.data.sum())
    assert out.sum() == 64 * 64 - n
    assert np.all(out[mask.data == 1] == 0.0)


def test_apply_mask_never_increases(np_rng):
    amp = np_rng.random((64, 64)) * 12.0
    mask = sector_mask(200.0, 75.0, 25.0, 64, 64)
    out = apply_mask(amp, mask)
    assert np.all(out <= amp)
    assert out.sum() <= amp.sum()


def test_apply_mask_dimension_mismatch(np_rng):
    mask = sector_mask(0.0, 30.0, 10.0, 48, 48)
    with pytest.raises(InvalidInputError):
        apply_mask(np.ones((32, 32)), mask)


# --- intra-modulation -------------------------------------------------------

def test_intra_modulate_identity_when_angles_equal(np_rng):
    amp = np_rng.random((64, 64))
    m = sector_mask(30.0, 40.0, 20.0, 64, 64)
    assert np.array_equal(intra_modulate(amp, m, m), amp)


def test_intra_modulate_swaps_disjoint_sectors():
    h = w = 192
    m_max = sector_mask(0.0, 60.0, 20.0, h, w)
    m_min = sector_mask(90.0, 60.0, 20.0, h, w)
    a, b = 3.0, 7.0
    amp = np.zeros((h, w))
    amp[m_max.data == 1] = a
    amp[m_min.data == 1] = b
    out = intra_modulate(amp, m_max, m_min)

    swapped = 0
    rows, cols = np.nonzero(m_max.data)
    for row, col in zip(rows, cols):
        pr, pc = rotate_bin_oracle(row, col, (96, 96), 90.0)
        if m_min.data[pr, pc]:
            assert out[row, col] == b
            assert out[pr, pc] == a
            swapped += 1
    assert swapped > 0


def test_intra_modulate_involution(np_rng):
    for _ in range(50):
        h, w = 64, 64
        theta_max = float(np_rng.uniform(0.0, 360.0))
        theta_min = float(np_rng.uniform(0.0, 360.0))
        k = float(np_rng.uniform(15.0, 90.0))
        radius = float(np_rng.uniform(5.0, 30.0))
        m_max = sector_mask(theta_max, k, radius, h, w)
        m_min = sector_mask(theta_min, k, radius, h, w)
        amp = np_rng.random((h, w)) * 9.0
        twice = intra_modulate(intra_modulate(amp, m_max, m_min), m_max, m_min)
        assert np.array_equal(twice, amp)


def test_intra_modulate_rejects_incongruent_sectors():
    m1 = sector_mask(0.0, 40.0, 20.0, 64, 64)
    m2 = sector_mask(90.0, 50.0, 20.0, 64, 64)
    with pytest.raises(InvalidInputError):
        intra_modulate(np.ones((64, 64)), m1, m2)
    m3 = sector_mask(90.0, 40.0, 15.0, 64, 64)
    with pytest.raises(InvalidInputError):
        intra_modulate(np.ones((64, 64)), m1, m3)
