"""Basis blades as bitmasks.

A blade of an ``n``-dimensional Euclidean algebra is identified with an n-bit
word ``A_1 ... A_n``; bit ``A_k`` is set iff ``e_k`` is one of its factors.
Internally bit position 0 stores ``A_1`` so that the written form reads left
to right exactly like the binary label, while mask values still sort
``1 < e1 < e2 < e12 < e3 < ...``.

The geometric product of two blades is the XOR of their masks together with a
sign that counts how many factor transpositions the reordering needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_DIM = 24


class DimensionMismatch(ValueError):
    """Operands belong to algebras of different dimension."""


@dataclass(frozen=True, order=True)
class BladeIndex:
    mask: int
    dim: int

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in [1, {MAX_DIM}], got {self.dim}")
        if not 0 <= self.mask < (1 << self.dim):
            raise ValueError(f"mask {self.mask} does not fit in {self.dim} bits")

    @classmethod
    def scalar(cls, dim: int) -> BladeIndex:
        return cls(0, dim)

    @classmethod
    def from_indices(cls, indices: Iterable[int], dim: int) -> BladeIndex:
        """Blade ``e_{i,j,...}`` from 1-based vector indices (each used once)."""
        mask = 0
        for i in indices:
            if not 1 <= i <= dim:
                raise ValueError(f"basis index {i} out of range for dim {dim}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"basis index {i} repeated")
            mask |= bit
        return cls(mask, dim)

    @classmethod
    def from_bits(cls, bits: str) -> BladeIndex:
        """Blade from its written binary label ``A_1 ... A_n``."""
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a binary label: {bits!r}")
        mask = sum(1 << k for k, ch in enumerate(bits) if ch == "1")
        return cls(mask, len(bits))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(k + 1 for k in range(self.dim) if self.mask >> k & 1)

    @property
    def bits(self) -> str:
        return "".join("1" if self.mask >> k & 1 else "0" for k in range(self.dim))

    @property
    def grade(self) -> int:
        return grade(self)

    def __str__(self):
        return format_blade(self)


def all_blades(dim: int) -> Iterator[BladeIndex]:
    """Every blade of the algebra, in ascending mask order."""
    for mask in range(1 << dim):
        yield BladeIndex(mask, dim)


def grade(a: BladeIndex) -> int:
    return a.mask.bit_count()


def _check_dims(a: BladeIndex, b: BladeIndex) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"blades from algebras of dim {a.dim} and {b.dim}")


def product_sign_masks(left: int, right: int) -> int:
    """Sign of ``e_left e_right`` for raw masks.

    For every factor of the right blade at position k, count the factors of
    the left blade at positions > k; each such pair is one transposition.
    """
    swaps = 0
    r = right
    while r:
        low = r & -r
        k = low.bit_length() - 1
        swaps += (left >> (k + 1)).bit_count()
        r ^= low
    return -1 if swaps & 1 else 1


def product_sign(a: BladeIndex, b: BladeIndex) -> int:
    """Sign (+1 or -1) carried by the geometric product ``a b``."""
    _check_dims(a, b)
    return product_sign_masks(a.mask, b.mask)


def blade_product(a: BladeIndex, b: BladeIndex) -> tuple[int, BladeIndex]:
    """Geometric product of two blades as ``(sign, blade)``."""
    _check_dims(a, b)
    return product_sign_masks(a.mask, b.mask), BladeIndex(a.mask ^ b.mask, a.dim)


def reversion_sign_grade(g: int) -> int:
    return -1 if (g * (g - 1) // 2) & 1 else 1


def reversion_sign(a: BladeIndex) -> int:
    """Sign picked up by reversing the factor order of ``a``."""
    return reversion_sign_grade(grade(a))


# -- text form ----------------------------------------------------------------

_BRACED = re.compile(r"e\{\s*(\d+(?:\s*,\s*\d+)*)\s*\}", re.ASCII)
_SHORT = re.compile(r"e([1-9]+)")
_BINARY = re.compile(r"eb([01]+)")


def format_blade(a: BladeIndex) -> str:
    """``1`` for the scalar, otherwise ``e{i,j,...}``."""
    if a.mask == 0:
        return "1"
    return "e{" + ",".join(map(str, a.indices)) + "}"


def blade_indices_from_text(text: str) -> tuple[tuple[int, ...], int | None]:
    """Parse a blade literal to ``(indices, width)``.

    ``width`` is the bit count for the binary form and ``None`` otherwise.
    Indices must be strictly increasing.
    """
    text = text.strip()
    if text == "1":
        return (), None
    if m := _BINARY.fullmatch(text):
        bits = m.group(1)
        return tuple(k + 1 for k, ch in enumerate(bits) if ch == "1"), len(bits)
    if m := _BRACED.fullmatch(text):
        indices = tuple(int(s) for s in m.group(1).split(","))
    elif m := _SHORT.fullmatch(text):
        indices = tuple(int(ch) for ch in m.group(1))
    else:
        raise ValueError(f"not a blade literal: {text!r}")
    if any(i < 1 for i in indices):
        raise ValueError(f"basis indices are 1-based: {text!r}")
    if any(i >= j for i, j in zip(indices, indices[1:])):
        raise ValueError(f"basis indices must be strictly increasing: {text!r}")
    return indices, None


def parse_blade(text: str, dim: int) -> BladeIndex:
    indices, width = blade_indices_from_text(text)
    if width is not None and width != dim:
        raise DimensionMismatch(f"binary blade {text!r} has {width} bits, algebra has dim {dim}")
    return BladeIndex.from_indices(indices, dim)
