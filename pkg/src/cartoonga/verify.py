"""Built-in verification suites run by ``cartoonga selftest``.

Each suite returns a :class:`SuiteResult`; ``counterexample`` is ``None`` on
success. The blade product under test is injectable so that a deliberately
broken convention can be shown to fail.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .blades import BladeIndex, all_blades, blade_product
from .dj import BooleanFunction, Classification, run_dj
from .oracle import canonical_product

BladeProduct = Callable[[BladeIndex, BladeIndex], "tuple[int, BladeIndex]"]


@dataclass
class SuiteResult:
    name: str
    checked: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checked)"
        if not self.ok:
            line += f"\n  counterexample: {self.counterexample}"
        return line


def oracle_equivalence(product: BladeProduct = blade_product, max_dim: int = 5,
                       random_dim: int = 16, random_pairs: int = 10_000, seed: int = 0) -> SuiteResult:
    """Bitmask product vs. brute-force reduction on blade pairs."""
    checked = 0

    def check(a, b):
        nonlocal checked
        checked += 1
        got = product(a, b)
        want = canonical_product(a, b)
        if got != want:
            return f"{a} * {b}: product gives {got[0]:+d} {got[1]}, oracle gives {want[0]:+d} {want[1]}"
        return None

    for dim in range(1, max_dim + 1):
        for a, b in itertools.product(all_blades(dim), repeat=2):
            if msg := check(a, b):
                return SuiteResult("oracle equivalence", checked, msg)
    rng = random.Random(seed)
    for _ in range(random_pairs):
        a = BladeIndex(rng.randrange(1 << random_dim), random_dim)
        b = BladeIndex(rng.randrange(1 << random_dim), random_dim)
        if msg := check(a, b):
            return SuiteResult("oracle equivalence", checked, msg)
    return SuiteResult("oracle equivalence", checked)


def dj_exhaustive(max_bits: int = 3) -> SuiteResult:
    """Every Boolean function on up to ``max_bits`` inputs: witness and class."""
    checked = 0
    for n in range(1, max_bits + 1):
        size = 1 << n
        for code in range(1 << size):
            table = tuple(code >> (size - 1 - i) & 1 for i in range(size))
            f = BooleanFunction(n, table)
            outcome = run_dj(f)
            checked += 1
            expected = sum(-1 if v else 1 for v in table)
            if f.is_constant:
                want = Classification.CONSTANT
            elif f.is_balanced:
                want = Classification.BALANCED
            else:
                want = Classification.PROMISE_VIOLATED
            if outcome.scalar_witness != expected or outcome.classification is not want:
                return SuiteResult(
                    "deutsch-jozsa exhaustive", checked,
                    f"f={f.to_bits()}: witness {outcome.scalar_witness} ({outcome.classification.value}), "
                    f"expected {expected} ({want.value})",
                )
    return SuiteResult("deutsch-jozsa exhaustive", checked)


def run_all(product: BladeProduct | None = None) -> list[SuiteResult]:
    results = [oracle_equivalence(product or blade_product)]
    if results[-1].ok:
        results.append(dj_exhaustive())
    return results
