import itertools
import random

import pytest

from cartoonga.blades import (
    BladeIndex,
    DimensionMismatch,
    all_blades,
    blade_product,
    format_blade,
    grade,
    parse_blade,
    product_sign,
    reversion_sign,
)
from cartoonga.oracle import canonical_product, canonicalize

E1, E2, E12 = BladeIndex.from_bits("10"), BladeIndex.from_bits("01"), BladeIndex.from_bits("11")


def test_bit_order_matches_written_label():
    b = BladeIndex.from_bits("110010")
    assert b.indices == (1, 2, 5)
    assert b.mask == 0b10011
    assert b.bits == "110010"
    assert BladeIndex.from_indices([1, 2, 5], 6) == b


@pytest.mark.parametrize("bits, g", [("000", 0), ("110010", 3), ("1111", 4), ("1" * 24, 24)])
def test_grade(bits, g):
    assert grade(BladeIndex.from_bits(bits)) == g


def test_invalid_blades():
    with pytest.raises(ValueError):
        BladeIndex(4, 2)
    with pytest.raises(ValueError):
        BladeIndex(0, 25)
    with pytest.raises(ValueError):
        BladeIndex.from_indices([1, 1], 3)


@pytest.mark.parametrize("a, b, sign", [
    (E1, E2, 1),
    (E2, E1, -1),
    (E1, E1, 1),
    (E12, E1, -1),
])
def test_product_sign_examples(a, b, sign):
    assert product_sign(a, b) == sign


def test_blade_product_examples():
    assert blade_product(E1, E2) == (1, E12)
    # frozen from canonicalize([1, 2, 1, 2])
    assert canonicalize([1, 2, 1, 2], 2) == (-1, BladeIndex(0, 2))
    assert blade_product(E12, E12) == (-1, BladeIndex(0, 2))
    for a in all_blades(4):
        assert blade_product(a, BladeIndex(0, 4)) == (1, a)
        assert blade_product(BladeIndex(0, 4), a) == (1, a)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        product_sign(E1, BladeIndex(1, 3))
    with pytest.raises(DimensionMismatch):
        blade_product(E1, BladeIndex(1, 3))


def test_reversion_sign_examples():
    assert reversion_sign(BladeIndex(0, 3)) == 1
    assert reversion_sign(BladeIndex.from_bits("010")) == 1
    # (e1 e2)^rev = e2 e1
    assert canonicalize([2, 1], 2)[0] == -1
    assert reversion_sign(E12) == -1
    assert canonicalize([4, 3, 2, 1], 4)[0] == 1
    assert reversion_sign(BladeIndex.from_bits("1111")) == 1


def test_reversion_sign_matches_reversed_factor_word():
    for a in all_blades(8):
        sign, b = canonicalize(a.indices[::-1], 8)
        assert b == a and sign == reversion_sign(a)


@pytest.mark.parametrize("dim", range(1, 6))
def test_xor_law_exhaustive(dim):
    for a, b in itertools.product(all_blades(dim), repeat=2):
        assert blade_product(a, b)[1].mask == a.mask ^ b.mask


def test_clifford_relation_on_vectors():
    dim = 6
    vecs = [BladeIndex.from_indices([k], dim) for k in range(1, dim + 1)]
    for a, b in itertools.product(vecs, repeat=2):
        if a == b:
            assert blade_product(a, a) == (1, BladeIndex(0, dim))
        else:
            assert product_sign(a, b) == -product_sign(b, a)


def _assoc(a, b, c):
    s1, ab = blade_product(a, b)
    s2, ab_c = blade_product(ab, c)
    t1, bc = blade_product(b, c)
    t2, a_bc = blade_product(a, bc)
    return (s1 * s2, ab_c) == (t1 * t2, a_bc)


@pytest.mark.parametrize("dim", range(1, 5))
def test_associativity_exhaustive(dim):
    blades = list(all_blades(dim))
    assert all(_assoc(a, b, c) for a, b, c in itertools.product(blades, repeat=3))


def test_associativity_random_high_dim():
    rng = random.Random(7)
    for _ in range(10_000):
        dim = rng.randint(1, 16)
        a, b, c = (BladeIndex(rng.randrange(1 << dim), dim) for _ in range(3))
        assert _assoc(a, b, c)


def test_reversion_involution_and_self_product():
    for dim in range(1, 9):
        for a in all_blades(dim):
            assert reversion_sign(a) * reversion_sign(a) == 1
            assert reversion_sign(a) * product_sign(a, a) == 1


@pytest.mark.parametrize("dim", range(1, 6))
def test_oracle_equivalence_exhaustive(dim):
    for a, b in itertools.product(all_blades(dim), repeat=2):
        assert blade_product(a, b) == canonical_product(a, b)


def test_oracle_equivalence_random_dim16():
    rng = random.Random(11)
    for _ in range(10_000):
        a, b = (BladeIndex(rng.randrange(1 << 16), 16) for _ in range(2))
        assert blade_product(a, b) == canonical_product(a, b)


@pytest.mark.parametrize("text, dim, indices", [
    ("1", 3, ()),
    ("e12", 2, (1, 2)),
    ("e{1,2,5}", 6, (1, 2, 5)),
    ("e{ 3 }", 3, (3,)),
    ("eb110010", 6, (1, 2, 5)),
    ("e{10,12}", 12, (10, 12)),
])
def test_parse_blade(text, dim, indices):
    assert parse_blade(text, dim).indices == indices


@pytest.mark.parametrize("text", ["e21", "e{2,1}", "e{0}", "e", "e1 2", "eb", "e{1,1}"])
def test_parse_blade_rejects(text):
    with pytest.raises(ValueError):
        parse_blade(text, 4)


def test_binary_blade_width_must_match_dim():
    with pytest.raises(DimensionMismatch):
        parse_blade("eb101", 4)


def test_format_blade():
    assert format_blade(BladeIndex(0, 3)) == "1"
    assert format_blade(BladeIndex.from_bits("110010")) == "e{1,2,5}"
    for a in all_blades(5):
        assert parse_blade(format_blade(a), 5) == a
