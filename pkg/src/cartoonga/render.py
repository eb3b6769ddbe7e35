"""Bag-of-shapes cartoons for 2D and 3D multivectors.

Every nonzero term becomes one :class:`ShapeSpec`; its multiplicity is drawn
as that many copies of the shape (white for positive coefficients, black or
reversed for negative ones). Plane: dots, arrows, squares. Space: dots,
edges, walls, cubes.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .multivector import Multivector

KINDS_2D = ("dot", "arrow", "square")
KINDS_3D = ("dot", "edge", "wall", "cube")
KIND_ORDER = ("dot", "arrow", "square", "edge", "wall", "cube")
PLURAL = {"dot": "dots", "arrow": "arrows", "square": "squares",
          "edge": "edges", "wall": "walls", "cube": "cubes"}

# beyond this a shape is drawn once with a count label
MAX_REPEAT = 12


@dataclass(frozen=True)
class ShapeSpec:
    kind: str
    orientation: int  # +1 white / forward, -1 black / reversed
    axes: tuple[int, ...]  # 1-based basis indices of the blade
    multiplicity: int


def bag_of_shapes(x: Multivector) -> list[ShapeSpec]:
    if x.dim == 2:
        kinds = KINDS_2D
    elif x.dim == 3:
        kinds = KINDS_3D
    else:
        raise ValueError(f"cartoons exist only for dim 2 and 3, got dim {x.dim}")
    if not x.is_integral():
        raise ValueError("cartoons need integer coefficients")
    return [
        ShapeSpec(kinds[blade.grade], 1 if c > 0 else -1, blade.indices, int(abs(c)))
        for blade, c in x.terms()
    ]


def _grouped(shapes: list[ShapeSpec]) -> list[tuple[str, list[ShapeSpec]]]:
    return [
        (kind, [s for s in shapes if s.kind == kind])
        for kind in KIND_ORDER
        if any(s.kind == kind for s in shapes)
    ]


def _copies(s: ShapeSpec) -> tuple[int, str | None]:
    if s.multiplicity > MAX_REPEAT:
        return 1, f"x{s.multiplicity}"
    return s.multiplicity, None


# -- ASCII --------------------------------------------------------------------


def ascii_glyph(s: ShapeSpec) -> str:
    white = s.orientation > 0
    label = "".join(map(str, s.axes))
    if s.kind == "dot":
        return "o" if white else "*"
    if s.kind == "arrow":
        return {(1, True): "->", (1, False): "<-", (2, True): "^", (2, False): "v"}[(s.axes[0], white)]
    if s.kind == "square":
        return "[ ]" if white else "[#]"
    if s.kind == "edge":
        return f"e{label}>" if white else f"<e{label}"
    if s.kind == "wall":
        return f"[{label}]" if white else f"#{label}#"
    if s.kind == "cube":
        return f"{{{label}}}" if white else f"#{label}#"
    raise ValueError(f"unknown shape kind {s.kind!r}")


def render_ascii(shapes: list[ShapeSpec]) -> str:
    """Framed, 7-bit text picture: one row per shape kind."""
    groups = _grouped(shapes)
    if groups:
        width = max(len(PLURAL[k]) for k, _ in groups)
        rows = []
        for kind, group in groups:
            tokens = []
            for s in group:
                n, label = _copies(s)
                tokens.extend([ascii_glyph(s)] * n)
                if label:
                    tokens[-1] += label
            rows.append(f"{PLURAL[kind]:<{width}} : " + " ".join(tokens))
    else:
        rows = ["(empty bag)"]
    inner = max(len(r) for r in rows)
    title = " bag of shapes "
    inner = max(inner, len(title) + 2)
    top = "+-" + title + "-" * (inner - len(title)) + "-+"
    body = [f"| {r:<{inner}} |" for r in rows]
    bottom = "+" + "-" * (inner + 2) + "+"
    return "\n".join([top, *body, bottom]) + "\n"


# -- SVG ----------------------------------------------------------------------

CELL = 40
LABEL_W = 80
ROW_H = 50
MARGIN = 10

# fixed isometric projection of the basis vectors (SVG y grows downward)
_AXIS = {1: (1.0, 0.0), 2: (0.0, -1.0), 3: (-0.6, 0.45)}


def _fill(s: ShapeSpec) -> str:
    return "white" if s.orientation > 0 else "black"


def _f(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _polygon(points, fill: str) -> str:
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
    return f'<polygon points="{pts}" fill="{fill}" stroke="black" stroke-width="1"/>'


def _arrow(cx: float, cy: float, direction: tuple[float, float], length: float) -> list[str]:
    dx, dy = direction
    x0, y0 = cx - dx * length / 2, cy - dy * length / 2
    x1, y1 = cx + dx * length / 2, cy + dy * length / 2
    # head: triangle at (x1, y1) pointing along direction
    px, py = -dy, dx
    head = [
        (x1, y1),
        (x1 - dx * 6 + px * 4, y1 - dy * 6 + py * 4),
        (x1 - dx * 6 - px * 4, y1 - dy * 6 - py * 4),
    ]
    return [
        f'<line x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" stroke="black" stroke-width="2"/>',
        _polygon(head, "black"),
    ]


def _parallelogram(cx: float, cy: float, u, v, size: float) -> list[tuple[float, float]]:
    ox = cx - (u[0] + v[0]) * size / 2
    oy = cy - (u[1] + v[1]) * size / 2
    return [
        (ox, oy),
        (ox + u[0] * size, oy + u[1] * size),
        (ox + (u[0] + v[0]) * size, oy + (u[1] + v[1]) * size),
        (ox + v[0] * size, oy + v[1] * size),
    ]


def svg_shape(s: ShapeSpec, cx: float, cy: float) -> list[str]:
    fill = _fill(s)
    if s.kind == "dot":
        return [f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="7" fill="{fill}" stroke="black" stroke-width="1.5"/>']
    if s.kind in ("arrow", "edge"):
        dx, dy = _AXIS[s.axes[0]]
        if s.orientation < 0:
            dx, dy = -dx, -dy
        norm = (dx * dx + dy * dy) ** 0.5
        return _arrow(cx, cy, (dx / norm, dy / norm), 26)
    if s.kind == "square":
        return [f'<rect x="{_f(cx - 12)}" y="{_f(cy - 12)}" width="24" height="24" fill="{fill}" stroke="black" stroke-width="1.5"/>']
    if s.kind == "wall":
        k, l = s.axes
        return [_polygon(_parallelogram(cx, cy, _AXIS[k], _AXIS[l], 20), fill)]
    if s.kind == "cube":
        size = 16
        ox = cx - (_AXIS[1][0] + _AXIS[3][0]) * size / 2
        oy = cy - (_AXIS[2][1] + _AXIS[3][1]) * size / 2
        out = []
        for k, l in ((1, 2), (1, 3), (2, 3)):
            u, v = _AXIS[k], _AXIS[l]
            out.append(_polygon([
                (ox, oy),
                (ox + u[0] * size, oy + u[1] * size),
                (ox + (u[0] + v[0]) * size, oy + (u[1] + v[1]) * size),
                (ox + v[0] * size, oy + v[1] * size),
            ], fill))
        return out
    raise ValueError(f"unknown shape kind {s.kind!r}")


def render_svg(shapes: list[ShapeSpec]) -> str:
    """Standalone SVG document; identical input gives identical bytes."""
    groups = _grouped(shapes)
    cells_per_row = []
    for _, group in groups:
        cells_per_row.append(sum(_copies(s)[0] for s in group))
    cols = max(cells_per_row, default=0)
    width = 2 * MARGIN + LABEL_W + max(cols, 3) * CELL
    height = 2 * MARGIN + max(len(groups), 1) * ROW_H
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="1" y="1" width="{width - 2}" height="{height - 2}" rx="12" fill="none" stroke="gray" stroke-width="2"/>',
    ]
    if not groups:
        out.append(
            f'<text x="{width // 2}" y="{height // 2 + 5}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">empty bag</text>'
        )
    for row, (kind, group) in enumerate(groups):
        cy = MARGIN + row * ROW_H + ROW_H / 2
        out.append(f'<g class="{kind}">')
        out.append(
            f'<text x="{MARGIN}" y="{_f(cy + 5)}" font-family="sans-serif" font-size="12">'
            f"{escape(PLURAL[kind])}</text>"
        )
        col = 0
        for s in group:
            n, label = _copies(s)
            for _ in range(n):
                cx = MARGIN + LABEL_W + col * CELL + CELL / 2
                out.extend(svg_shape(s, cx, cy))
                col += 1
            if label:
                out.append(
                    f'<text x="{_f(cx + 14)}" y="{_f(cy + 18)}" font-family="sans-serif" '
                    f'font-size="10">{escape(label)}</text>'
                )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
