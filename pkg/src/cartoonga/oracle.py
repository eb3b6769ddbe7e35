"""Brute-force reduction of words in basis vectors.

Used only to cross-check the bitmask product: it shares no code with the
parity formula in :mod:`cartoonga.blades` and works directly from the Clifford
relations ``e_l e_k = -e_k e_l`` (k != l) and ``e_k e_k = 1``.
"""

from __future__ import annotations

from typing import Sequence

from .blades import BladeIndex


def canonicalize(factors: Sequence[int], dim: int, *, reverse_sweep: bool = False):
    """Reduce the word ``e_{f1} e_{f2} ...`` to ``(sign, blade)``.

    Bubble sort by adjacent transpositions. ``reverse_sweep`` scans each pass
    right-to-left instead of left-to-right; the result must not depend on it.
    """
    word = list(factors)
    for i in word:
        if not 1 <= i <= dim:
            raise ValueError(f"factor e_{i} out of range for dim {dim}")
    sign = 1
    changed = True
    while changed:
        changed = False
        positions = range(len(word) - 2, -1, -1) if reverse_sweep else range(len(word) - 1)
        for p in positions:
            if p + 1 >= len(word):
                continue
            a, b = word[p], word[p + 1]
            if a == b:
                del word[p:p + 2]
                changed = True
                break
            if a > b:
                word[p], word[p + 1] = b, a
                sign = -sign
                changed = True
    return sign, BladeIndex.from_indices(word, dim)


def canonical_product(a: BladeIndex, b: BladeIndex, *, reverse_sweep: bool = False):
    """Product of two blades computed by concatenating their factor words."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return canonicalize(a.indices + b.indices, a.dim, reverse_sweep=reverse_sweep)
