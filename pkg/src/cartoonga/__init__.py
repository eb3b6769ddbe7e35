"""Exact geometric algebra on bitmask blades, with a Deutsch-Jozsa pipeline,
an expression language and bag-of-shapes cartoons."""

from .blades import (
    BladeIndex,
    DimensionMismatch,
    blade_product,
    grade,
    parse_blade,
    product_sign,
    reversion_sign,
)
from .dj import (
    BooleanFunction,
    Classification,
    DJOutcome,
    apply_oracle,
    build_E,
    build_F,
    first_step,
    parse_function,
    probe_blade,
    run_dj,
)
from .expr import ExprError, evaluate, evaluate_text, format_multivector, parse
from .multivector import Multivector
from .render import ShapeSpec, bag_of_shapes, render_ascii, render_svg

__version__ = "0.1.0"

__all__ = [
    "BladeIndex", "DimensionMismatch", "blade_product", "grade", "parse_blade",
    "product_sign", "reversion_sign", "BooleanFunction", "Classification",
    "DJOutcome", "apply_oracle", "build_E", "build_F", "first_step",
    "parse_function", "probe_blade", "run_dj", "ExprError", "evaluate",
    "evaluate_text", "format_multivector", "parse", "Multivector", "ShapeSpec",
    "bag_of_shapes", "render_ascii", "render_svg",
]
