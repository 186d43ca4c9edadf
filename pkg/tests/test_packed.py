"""Packed lane encoding and the bit-parallel kernel against the digitwise
reference."""

import random

import numpy as np
import pytest

from floretion.packed import (
    lane_masks,
    pack_word,
    packed_identity,
    packed_mul,
    packed_mul_many,
    unpack_word,
)
from floretion.words import all_words, parse_word, word_mul


def test_pack_unpack_roundtrip_exhaustive():
    for n in (1, 2, 3):
        for i, w in enumerate(all_words(n)):
            assert pack_word(w) == i  # canonical order is ascending packed value
            assert unpack_word(i, n) == w


def test_pack_unpack_roundtrip_random_large():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(4, 32)
        v = rng.randint(0, 4**n - 1)
        assert pack_word(unpack_word(v, n)) == v


def test_packed_identity():
    assert unpack_word(packed_identity(5), 5) == "77777"


def test_packed_mul_example():
    n = 3
    s, p = packed_mul(pack_word(parse_word("iji")), pack_word(parse_word("jek")), n)
    assert s == -1
    assert unpack_word(p, n) == parse_word("kjj")


def test_packed_mul_identity():
    e = packed_identity(4)
    assert packed_mul(e, e, 4) == (1, e)


def test_packed_mul_matches_word_mul_exhaustive():
    # the kernel's sign formula is locked by this oracle, not by derivation
    for n in (1, 2, 3, 4):
        words = list(all_words(n))
        for i, a in enumerate(words):
            for j, b in enumerate(words):
                sign, packed = packed_mul(i, j, n)
                ref = word_mul(a, b)
                assert sign == ref.sign and unpack_word(packed, n) == ref.word


def test_packed_mul_matches_word_mul_random_wide():
    rng = random.Random(99)
    for n in (5, 8, 13, 21, 32):
        for _ in range(500):
            x = rng.randint(0, 4**n - 1)
            y = rng.randint(0, 4**n - 1)
            sign, packed = packed_mul(x, y, n)
            ref = word_mul(unpack_word(x, n), unpack_word(y, n))
            assert sign == ref.sign and unpack_word(packed, n) == ref.word


def test_stray_bits_rejected():
    with pytest.raises(ValueError):
        packed_mul(1 << 6, 0, 3)
    with pytest.raises(ValueError):
        packed_mul(0, -1, 3)
    with pytest.raises(ValueError):
        unpack_word(1 << 4, 2)


def test_order_bounds():
    with pytest.raises(ValueError):
        lane_masks(0)
    with pytest.raises(ValueError):
        lane_masks(33)


def test_batch_kernel_matches_scalar():
    rng = random.Random(5)
    for n in (1, 2, 4, 7, 10, 12):
        xs = np.array([rng.randint(0, 4**n - 1) for _ in range(512)], dtype=np.uint64)
        ys = np.array([rng.randint(0, 4**n - 1) for _ in range(512)], dtype=np.uint64)
        signs, prods = packed_mul_many(xs, ys, n)
        for x, y, s, p in zip(xs.tolist(), ys.tolist(), signs.tolist(), prods.tolist()):
            assert (s, p) == packed_mul(x, y, n)


def test_batch_kernel_broadcasts():
    n = 6
    xs = np.arange(100, dtype=np.uint64)
    signs, prods = packed_mul_many(xs, np.uint64(packed_identity(n)), n)
    assert (signs == 1).all()
    assert (prods == xs).all()
