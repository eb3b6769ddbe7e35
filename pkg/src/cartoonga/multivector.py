"""Sparse multivectors: bags of blades with real coefficients."""

from __future__ import annotations

import json
import math
from numbers import Real
from typing import Iterable, Iterator, Mapping

from .blades import (
    MAX_DIM,
    BladeIndex,
    DimensionMismatch,
    format_blade,
    product_sign_masks,
    reversion_sign_grade,
)


def _coeff(c) -> float:
    if isinstance(c, bool) or not isinstance(c, Real):
        raise TypeError(f"coefficient must be a real number, got {type(c).__name__}")
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"coefficient must be finite, got {c}")
    return c


def format_coeff(c: float) -> str:
    if c.is_integer():
        return str(int(c))
    return repr(c)


class Multivector:
    """Immutable sparse map ``blade mask -> coefficient`` over a fixed dim.

    Zero coefficients are never stored, so the zero multivector is the empty
    bag. Supports ``+``, ``-``, unary ``-``, ``*`` (geometric product, or
    scaling by a real) and ``~`` (reversion).
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[int, float] | Iterable[tuple[int, float]] = ()):
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dim must be in [1, {MAX_DIM}], got {dim}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, float] = {}
        limit = 1 << dim
        for mask, c in items:
            if isinstance(mask, BladeIndex):
                if mask.dim != dim:
                    raise DimensionMismatch(f"blade of dim {mask.dim} in multivector of dim {dim}")
                mask = mask.mask
            if not 0 <= mask < limit:
                raise ValueError(f"mask {mask} does not fit in {dim} bits")
            acc[mask] = acc.get(mask, 0.0) + _coeff(c)
        self.dim = dim
        self._terms = {m: c for m, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, dim: int, terms: dict[int, float]) -> Multivector:
        # trusted constructor: terms already validated and nonzero
        mv = cls.__new__(cls)
        mv.dim = dim
        mv._terms = terms
        return mv

    @classmethod
    def zero(cls, dim: int) -> Multivector:
        return cls(dim)

    @classmethod
    def from_blade(cls, blade: BladeIndex, coeff: float = 1) -> Multivector:
        return cls(blade.dim, [(blade.mask, coeff)])

    @classmethod
    def scalar(cls, value: float, dim: int) -> Multivector:
        return cls(dim, [(0, value)])

    # -- inspection -----------------------------------------------------------

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, blade: BladeIndex | int) -> float:
        mask = blade.mask if isinstance(blade, BladeIndex) else blade
        return self._terms.get(mask, 0.0)

    def terms(self) -> Iterator[tuple[BladeIndex, float]]:
        """Nonzero terms in ascending mask order."""
        for mask in sorted(self._terms):
            yield BladeIndex(mask, self.dim), self._terms[mask]

    def masks(self) -> dict[int, float]:
        return dict(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def _check(self, other: Multivector) -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"multivectors of dim {self.dim} and {other.dim}")

    # -- linear structure -----------------------------------------------------

    def add(self, other: Multivector) -> Multivector:
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0.0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Multivector._raw(self.dim, out)

    def scale(self, c: float) -> Multivector:
        c = _coeff(c)
        if c == 0:
            return Multivector.zero(self.dim)
        # products of nonzero finite doubles can still underflow to 0
        return Multivector._raw(self.dim, {m: v * c for m, v in self._terms.items() if v * c != 0})

    def gp(self, other: Multivector) -> Multivector:
        """Geometric product, expanded term by term (left-term-major)."""
        self._check(other)
        out: dict[int, float] = {}
        right = list(other._terms.items())
        for ma, ca in self._terms.items():
            for mb, cb in right:
                m = ma ^ mb
                v = ca * cb
                out[m] = out.get(m, 0.0) + (v if product_sign_masks(ma, mb) > 0 else -v)
        return Multivector._raw(self.dim, {m: c for m, c in out.items() if c != 0})

    def scalar_product(self, other: Multivector) -> float:
        """Scalar part of ``self * other`` without forming the full product.

        Only pairs with equal masks land on the scalar blade, so this is
        linear in the number of terms.
        """
        self._check(other)
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        total = 0.0
        for m, c in small._terms.items():
            d = big._terms.get(m)
            if d is not None:
                v = c * d
                total += v if product_sign_masks(m, m) > 0 else -v
        return total

    def reverse(self) -> Multivector:
        return Multivector._raw(
            self.dim,
            {m: c * reversion_sign_grade(m.bit_count()) for m, c in self._terms.items()},
        )

    def grade_project(self, k: int) -> Multivector:
        if not 0 <= k <= self.dim:
            raise ValueError(f"grade {k} out of range for dim {self.dim}")
        return Multivector._raw(self.dim, {m: c for m, c in self._terms.items() if m.bit_count() == k})

    def scalar_part(self) -> float:
        return self._terms.get(0, 0.0)

    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self._terms.values())

    # -- operators ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            return self.add(other)
        if isinstance(other, Real):
            return self.add(Multivector.scalar(other, self.dim))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.dim, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (Multivector, Real)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.gp(other)
        if isinstance(other, Real):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self.scale(other)
        return NotImplemented

    def __invert__(self):
        return self.reverse()

    # -- text and JSON --------------------------------------------------------

    def to_text(self) -> str:
        """Canonical form, e.g. ``2 - e{1} + 3 e{1,2}``."""
        if not self._terms:
            return "0"
        parts = []
        for i, (blade, c) in enumerate(self.terms()):
            mag = abs(c)
            if blade.mask == 0:
                body = format_coeff(mag)
            elif mag == 1:
                body = format_blade(blade)
            else:
                body = f"{format_coeff(mag)} {format_blade(blade)}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Multivector(dim={self.dim}, {self.to_text()!r})"

    def to_dict(self) -> dict:
        terms = []
        for blade, c in self.terms():
            terms.append({"mask_bits": blade.bits, "coeff": int(c) if c.is_integer() else c})
        return {"dim": self.dim, "terms": terms}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> Multivector:
        try:
            dim = data["dim"]
            raw = data["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed multivector JSON: {exc}") from None
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise ValueError("multivector JSON: 'dim' must be an integer")
        items = []
        for t in raw:
            blade = BladeIndex.from_bits(t["mask_bits"])
            if blade.dim != dim:
                raise DimensionMismatch(f"mask_bits {t['mask_bits']!r} has {blade.dim} bits, dim is {dim}")
            items.append((blade.mask, t["coeff"]))
        return cls(dim, items)

    @classmethod
    def from_json(cls, text: str) -> Multivector:
        return cls.from_dict(json.loads(text))
