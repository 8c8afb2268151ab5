import numpy as np

from fiesta import bilateral_filter, decompose, fft2_centered, gaussian_blur, phase_image

from conftest import rand_image


def test_zero_phase_gives_impulse_at_shift_origin():
    out = phase_image(np.zeros((16, 16)), alpha=1.0)
    assert out[0, 0] == 1.0
    rest = out.copy()
    rest[0, 0] = 0.0
    assert np.abs(rest).max() < 1e-9


def test_phase_image_normalized(np_rng):
    x = rand_image(np_rng, 64, 64)
    _, phase = decompose(fft2_centered(x))
    out = phase_image(phase, alpha=1.0)
    assert out.min() == 0.0
    assert out.max() == 1.0


def test_phase_image_scale_invariant(np_rng):
    x = rand_image(np_rng, 64, 64)
    _, phase1 = decompose(fft2_centered(x))
    _, phase10 = decompose(fft2_centered(10.0 * x))
    out1 = phase_image(phase1)
    out10 = phase_image(phase10)
    assert np.abs(out1 - out10).max() < 1e-9


def test_bilateral_constant_fixpoint():
    img = np.full((32, 32), 0.42)
    out = bilateral_filter(img, 75.0, 75.0, 7)
    assert np.abs(out - img).max() <= 1e-12


def test_bilateral_window_convexity(np_rng):
    radius = 3
    for _ in range(20):
        img = np_rng.random((24, 24))
        out = bilateral_filter(img, 5.0, 0.2, radius)
        padded = np.pad(img, radius, mode="edge")
        for i in range(img.shape[0]):
            for j in range(img.shape[1]):
                window = padded[i : i + 2 * radius + 1, j : j + 2 * radius + 1]
                assert window.min() - 1e-12 <= out[i, j] <= window.max() + 1e-12


def test_bilateral_preserves_step_edge_better_than_blur():
    img = np.zeros((40, 40))
    img[:, 20:] = 1.0  # vertical step edge between columns 19 and 20
    radius = 7
    filtered = bilateral_filter(img, 75.0, 0.05, radius)
    blurred = gaussian_blur(img, 75.0, radius)
    cols = np.arange(40)
    far = (cols <= 17) | (cols >= 22)  # distance >= 2 from the edge
    dev_bilateral = np.abs(filtered - img)[:, far].max()
    dev_blur = np.abs(blurred - img)[:, far].max()
    assert dev_bilateral < dev_blur
