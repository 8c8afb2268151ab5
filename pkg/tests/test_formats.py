import numpy as np
import pytest

from fiesta import (
    InvalidInputError,
    LabelMap,
    read_pfm,
    read_pgm,
    read_probability_maps,
    write_pfm,
    write_pgm,
    write_probability_maps,
)
from fiesta.uncertainty import softmax


def test_pfm_round_trip(tmp_path, np_rng):
    img = np_rng.random((13, 21)).astype(np.float32).astype(np.float64)
    path = tmp_path / "x.pfm"
    write_pfm(path, img)
    back = read_pfm(path)
    assert back.shape == (13, 21)
    assert np.array_equal(back, img)  # float32-representable values survive exactly


def test_pfm_write_is_deterministic(tmp_path, np_rng):
    img = np_rng.random((8, 8))
    a = tmp_path / "a.pfm"
    b = tmp_path / "b.pfm"
    write_pfm(a, img)
    write_pfm(b, img)
    assert a.read_bytes() == b.read_bytes()


def test_pfm_rejects_color(tmp_path):
    path = tmp_path / "c.pfm"
    path.write_bytes(b"PF\n2 2\n-1.0\n" + b"\x00" * 48)
    with pytest.raises(InvalidInputError):
        read_pfm(path)


def test_pfm_rejects_truncated(tmp_path):
    path = tmp_path / "t.pfm"
    path.write_bytes(b"Pf\n4 4\n-1.0\n" + b"\x00" * 10)
    with pytest.raises(InvalidInputError):
        read_pfm(path)


def test_pfm_rejects_wrong_magic(tmp_path):
    path = tmp_path / "w.pfm"
    path.write_bytes(b"P5\n2 2\n255\n" + b"\x00" * 4)
    with pytest.raises(InvalidInputError):
        read_pfm(path)


def test_pgm_round_trip(tmp_path):
    data = np.array([[0, 1, 2], [3, 2, 1]], dtype=np.int32)
    labels = LabelMap(data=data, num_classes=4)
    path = tmp_path / "l.pgm"
    write_pgm(path, labels)
    back = read_pgm(path)
    assert back.num_classes == 4
    assert np.array_equal(back.data, data)


def test_pgm_num_classes_override(tmp_path):
    labels = LabelMap(data=np.zeros((2, 2), dtype=np.int32), num_classes=1)
    path = tmp_path / "z.pgm"
    write_pgm(path, labels)
    assert read_pgm(path, num_classes=5).num_classes == 5


def test_probability_maps_round_trip(tmp_path, np_rng):
    prob = softmax(np_rng.normal(size=(6, 7, 3)))
    stem = tmp_path / "slice0"
    paths = write_probability_maps(stem, prob)
    assert [p.name for p in paths] == ["slice0.c0.pfm", "slice0.c1.pfm", "slice0.c2.pfm"]
    back = read_probability_maps(stem)
    assert back.shape == (6, 7, 3)
    assert np.abs(back - prob).max() < 1e-6  # float32 storage


def test_probability_maps_require_simplex(tmp_path):
    stem = tmp_path / "bad"
    write_pfm(tmp_path / "bad.c0.pfm", np.full((4, 4), 0.9))
    write_pfm(tmp_path / "bad.c1.pfm", np.full((4, 4), 0.9))
    with pytest.raises(InvalidInputError):
        read_probability_maps(stem)


def test_probability_maps_need_two_planes(tmp_path):
    write_pfm(tmp_path / "solo.c0.pfm", np.ones((4, 4)))
    with pytest.raises(InvalidInputError):
        read_probability_maps(tmp_path / "solo")
