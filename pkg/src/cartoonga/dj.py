"""Deutsch-Jozsa as a sequence of geometric products.

For ``f: {0,1}^n -> {0,1}`` work in the algebra of dim ``m = n + 1``:

1. ``E = sum of all blades`` times the probe vector ``e_n``: every blade
   appears with sign ``(-1)^{A_{n+1}}``.
2. The oracle right-multiplies each blade ``e_{A_1..A_n A_{n+1}}`` by
   ``e_{n+1}`` whenever ``f(A_1..A_n) = 1``.
3. Left-multiply by ``F = sum of reversed blades with last bit 0``.
4. Read the scalar coefficient: ``(-1)^{f(0..0)} 2^n`` for constant ``f``,
   ``0`` for balanced ``f``.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from typing import Sequence

from .blades import BladeIndex, blade_product, reversion_sign
from .multivector import Multivector

MAX_BITS = 16
# full pipeline product is quadratic in 2^n; beyond this only the scalar is formed
FULL_PRODUCT_MAX_BITS = 8


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of ``f``; ``table[A]`` with ``A_1`` the most significant bit."""

    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_BITS:
            raise ValueError(f"number of input bits must be in [1, {MAX_BITS}], got {self.n}")
        table = tuple(self.table)
        if len(table) != 1 << self.n:
            raise ValueError(f"truth table for n={self.n} needs {1 << self.n} entries, got {len(table)}")
        if any(v not in (0, 1) for v in table):
            raise ValueError("truth table entries must be 0 or 1")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_bits(cls, bits: str, n: int | None = None) -> BooleanFunction:
        bits = bits.strip()
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"truth table must be a string over {{0,1}}, got {bits!r}")
        size = len(bits)
        if size & (size - 1):
            raise ValueError(f"truth table length {size} is not a power of two")
        width = size.bit_length() - 1
        if n is not None and n != width:
            raise ValueError(f"truth table of length {size} does not match n={n} (needs {1 << n})")
        return cls(width, tuple(int(ch) for ch in bits))

    @classmethod
    def constant(cls, n: int, value: int) -> BooleanFunction:
        return cls(n, (value,) * (1 << n))

    def __call__(self, bits: Sequence[int]) -> int:
        index = 0
        for b in bits:
            index = (index << 1) | b
        return self.table[index]

    def at_mask(self, mask: int) -> int:
        """``f`` of the first ``n`` paper bits of a blade mask of dim ``n+1``."""
        index = 0
        for k in range(self.n):
            index = (index << 1) | (mask >> k & 1)
        return self.table[index]

    @property
    def ones(self) -> int:
        return sum(self.table)

    @property
    def is_constant(self) -> bool:
        return self.ones in (0, len(self.table))

    @property
    def is_balanced(self) -> bool:
        return 2 * self.ones == len(self.table)

    def to_bits(self) -> str:
        return "".join(map(str, self.table))


_RANDOM_SPEC = re.compile(r"balanced:random\?seed=(\d+)")


def parse_function(spec: str, n: int) -> BooleanFunction:
    """Truth table from a bit string or a named generator.

    Named generators: ``constant0``, ``constant1``, ``balanced:parity``,
    ``balanced:tophalf``, ``balanced:random?seed=<u64>``.
    """
    spec = spec.strip()
    size = 1 << n
    if spec == "constant0":
        return BooleanFunction.constant(n, 0)
    if spec == "constant1":
        return BooleanFunction.constant(n, 1)
    if spec == "balanced:parity":
        return BooleanFunction(n, tuple(a.bit_count() & 1 for a in range(size)))
    if spec == "balanced:tophalf":
        return BooleanFunction(n, tuple(int(a >= size // 2) for a in range(size)))
    if m := _RANDOM_SPEC.fullmatch(spec):
        seed = int(m.group(1))
        if seed >= 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        ones = set(random.Random(seed).sample(range(size), size // 2))
        return BooleanFunction(n, tuple(int(a in ones) for a in range(size)))
    return BooleanFunction.from_bits(spec, n)


class Classification(enum.Enum):
    CONSTANT = "constant"
    BALANCED = "balanced"
    PROMISE_VIOLATED = "promise_violated"


@dataclass(frozen=True)
class DJOutcome:
    n: int
    scalar_witness: int

    @property
    def classification(self) -> Classification:
        if abs(self.scalar_witness) == 1 << self.n:
            return Classification.CONSTANT
        if self.scalar_witness == 0:
            return Classification.BALANCED
        return Classification.PROMISE_VIOLATED

    @property
    def f_at_zero(self) -> int | None:
        """Value of ``f(0..0)`` implied by a constant outcome, else ``None``."""
        if self.classification is not Classification.CONSTANT:
            return None
        return 0 if self.scalar_witness > 0 else 1

    def describe(self) -> str:
        label = {
            Classification.CONSTANT: "Constant",
            Classification.BALANCED: "Balanced",
            Classification.PROMISE_VIOLATED: "PromiseViolated",
        }[self.classification]
        w = self.scalar_witness
        return f"{label}, witness {w:+d}" if w else f"{label}, witness 0"


def _check_dim(m: int, low: int) -> None:
    if not low <= m <= MAX_BITS + 1:
        raise ValueError(f"algebra dimension must be in [{low}, {MAX_BITS + 1}], got {m}")


def build_E(m: int) -> Multivector:
    """Sum of all ``2^m`` blades with unit coefficients."""
    _check_dim(m, 1)
    return Multivector._raw(m, dict.fromkeys(range(1 << m), 1.0))


def probe_blade(m: int) -> BladeIndex:
    """``e_{0..010}``: the unit vector at the second-to-last position."""
    _check_dim(m, 2)
    return BladeIndex(1 << (m - 2), m)


def first_step(m: int) -> Multivector:
    return build_E(m) * Multivector.from_blade(probe_blade(m))


def apply_oracle(f: BooleanFunction, x: Multivector) -> Multivector:
    """Right-multiply every blade with ``f(A_1..A_n) = 1`` by ``e_{n+1}``."""
    m = f.n + 1
    if x.dim != m:
        raise ValueError(f"oracle for n={f.n} acts on dim {m}, got multivector of dim {x.dim}")
    last = BladeIndex(1 << f.n, m)
    out: dict[int, float] = {}
    for blade, c in x.terms():
        if f.at_mask(blade.mask):
            sign, blade = blade_product(blade, last)
            c = sign * c
        out[blade.mask] = out.get(blade.mask, 0.0) + c
    return Multivector(m, out)


def build_F(m: int) -> Multivector:
    """Sum of reversed blades whose last bit is 0."""
    _check_dim(m, 2)
    return Multivector._raw(
        m,
        {mask: float(reversion_sign(BladeIndex(mask, m))) for mask in range(1 << (m - 1))},
    )


def pipeline_stages(f: BooleanFunction) -> list[tuple[str, Multivector]]:
    """Every intermediate bag, in pipeline order.

    The third stage is the full product ``F E_f E e_n``, which is quadratic
    in ``2^n``; it is refused above ``FULL_PRODUCT_MAX_BITS`` input bits.
    """
    if f.n > FULL_PRODUCT_MAX_BITS:
        raise ValueError(f"full stage products are limited to n <= {FULL_PRODUCT_MAX_BITS}")
    m = f.n + 1
    step = first_step(m)
    oracle = apply_oracle(f, step)
    final = build_F(m) * oracle
    return [
        ("E*e_n", step),
        ("oracle", oracle),
        ("F*", final),
        ("Pi", final.grade_project(0)),
    ]


def run_dj(f: BooleanFunction, method: str = "auto") -> DJOutcome:
    """Classify ``f`` from the scalar coefficient of ``F E_f E e_n``.

    ``method="full"`` forms the whole final product and projects it;
    ``"scalar"`` contracts only the terms that can reach the scalar blade.
    ``"auto"`` picks ``full`` for small ``n``.
    """
    if method == "auto":
        method = "full" if f.n <= 6 else "scalar"
    m = f.n + 1
    x = apply_oracle(f, first_step(m))
    if method == "full":
        witness = (build_F(m) * x).scalar_part()
    elif method == "scalar":
        witness = build_F(m).scalar_product(x)
    else:
        raise ValueError(f"unknown method {method!r}")
    return DJOutcome(f.n, int(witness))
