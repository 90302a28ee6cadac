"""Minimal self-contained SVG line charts (no external assets)."""

from __future__ import annotations

from .errors import InvalidInputError

__all__ = ["line_chart"]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")

_WIDTH = 720
_HEIGHT = 480
_MARGIN_L = 70
_MARGIN_R = 20
_MARGIN_T = 40
_MARGIN_B = 55


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:.4g}"


def line_chart(
    series: list[tuple[str, list[tuple[float, float]]]],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
    marker_x: float | None = None,
) -> str:
    """Render one polyline per series plus axes and an optional vertical marker."""
    if not series or any(not pts for _, pts in series):
        raise InvalidInputError("each series needs at least one point")

    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def sx(x: float) -> float:
        return _MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return _MARGIN_T + (y_hi - y) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#444" stroke-width="1"/>',
    ]

    n_ticks = 6
    for i in range(n_ticks):
        frac = i / (n_ticks - 1)
        tx = x_lo + frac * (x_hi - x_lo)
        px = sx(tx)
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{_MARGIN_T + plot_h}" x2="{_fmt(px)}" '
            f'y2="{_MARGIN_T + plot_h + 5}" stroke="#444"/>'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{_MARGIN_T + plot_h + 20}" font-size="12" '
            f'text-anchor="middle" font-family="sans-serif">{_tick_label(tx)}</text>'
        )
        ty = y_lo + frac * (y_hi - y_lo)
        py = sy(ty)
        parts.append(
            f'<line x1="{_MARGIN_L - 5}" y1="{_fmt(py)}" x2="{_MARGIN_L}" '
            f'y2="{_fmt(py)}" stroke="#444"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 9}" y="{_fmt(py + 4)}" font-size="12" '
            f'text-anchor="end" font-family="sans-serif">{_tick_label(ty)}</text>'
        )

    if marker_x is not None and x_lo <= marker_x <= x_hi:
        px = sx(marker_x)
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{_MARGIN_T}" x2="{_fmt(px)}" '
            f'y2="{_MARGIN_T + plot_h}" stroke="#999" stroke-width="1" '
            'stroke-dasharray="5,4"/>'
        )

    for idx, (name, pts) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        coords = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_WIDTH - _MARGIN_R - 8}" y="{_MARGIN_T + 16 + 16 * idx}" '
            f'font-size="12" text-anchor="end" font-family="sans-serif" '
            f'fill="{color}">{name}</text>'
        )

    if title:
        parts.append(
            f'<text x="{_WIDTH / 2}" y="24" font-size="15" text-anchor="middle" '
            f'font-family="sans-serif">{title}</text>'
        )
    if x_label:
        parts.append(
            f'<text x="{_MARGIN_L + plot_w / 2}" y="{_HEIGHT - 14}" font-size="13" '
            f'text-anchor="middle" font-family="sans-serif">{x_label}</text>'
        )
    if y_label:
        parts.append(
            f'<text x="18" y="{_MARGIN_T + plot_h / 2}" font-size="13" '
            f'text-anchor="middle" font-family="sans-serif" '
            f'transform="rotate(-90 18 {_MARGIN_T + plot_h / 2})">{y_label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
