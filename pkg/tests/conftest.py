import numpy as np
import pytest

from fiesta import LabelMap, validate_image
from fiesta.uncertainty import softmax


def make_phantom(rng: np.random.Generator, h: int = 192, w: int = 192):
    """Synthetic slice: two elliptic structures on a textured background,
    plus a label map and a pair of plausible probability maps."""
    yy, xx = np.mgrid[0:h, 0:w].astype(np.float64)
    labels = np.zeros((h, w), dtype=np.int32)
    e1 = ((yy - h * 0.4) / (h * 0.18)) ** 2 + ((xx - w * 0.35) / (w * 0.12)) ** 2
    e2 = ((yy - h * 0.65) / (h * 0.1)) ** 2 + ((xx - w * 0.7) / (w * 0.15)) ** 2
    labels[e1 < 1.0] = 1
    labels[e2 < 1.0] = 2
    img = 0.25 + 0.1 * np.sin(2 * np.pi * xx / 31.0) + 0.05 * rng.random((h, w))
    img[labels == 1] += 0.35
    img[labels == 2] += 0.2
    img = (img - img.min()) / (img.max() - img.min())

    def prob_from(noise_scale):
        logits = np.zeros((h, w, 3))
        for c in range(3):
            logits[..., c] = 4.0 * (labels == c)
        logits += noise_scale * rng.normal(size=(h, w, 3))
        return softmax(logits)

    return img, LabelMap(data=labels, num_classes=3), prob_from(1.0), prob_from(1.5)


def rand_image(rng: np.random.Generator, h: int = 192, w: int = 192) -> np.ndarray:
    """Random [0, 1] image with some low-frequency structure so spectra
    are not pure noise."""
    yy, xx = np.mgrid[0:h, 0:w]
    base = 0.5 + 0.25 * np.sin(2 * np.pi * xx / 24.0) * np.cos(2 * np.pi * yy / 36.0)
    noise = rng.random((h, w))
    img = 0.6 * base + 0.4 * noise
    return (img - img.min()) / (img.max() - img.min())


@pytest.fixture
def np_rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def assert_valid_image(img: np.ndarray, name: str = "image") -> None:
    validate_image(img, name)
