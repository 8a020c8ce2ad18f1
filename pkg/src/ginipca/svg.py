"""Minimal SVG rendering of projections and contribution profiles.

Hand-built markup, no plotting dependency. The charts favor legibility of
labeled points over styling.
"""

from xml.sax.saxutils import escape

_WIDTH = 860
_HEIGHT = 620
_MARGIN = 70


def _scale(values, lo_px, hi_px):
    """Affine map from data range (padded 5%) to pixel range."""
    lo, hi = min(values), max(values)
    if hi == lo:
        lo -= 1.0
        hi += 1.0
    pad = 0.05 * (hi - lo)
    lo -= pad
    hi += pad
    span = hi - lo

    def to_px(v):
        return lo_px + (v - lo) / span * (hi_px - lo_px)

    return to_px, lo, hi


def _ticks(lo, hi, count=5):
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def projection_scatter(xs, ys, labels, x_name, y_name, title):
    """Labeled scatter of observations on two axes; returns SVG text."""
    sx, xlo, xhi = _scale(xs, _MARGIN, _WIDTH - _MARGIN)
    sy, ylo, yhi = _scale(ys, _HEIGHT - _MARGIN, _MARGIN)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.1f}" y="30" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{escape(title)}</text>',
    ]
    # zero lines when the origin is inside the view
    if xlo < 0.0 < xhi:
        x0 = sx(0.0)
        parts.append(
            f'<line x1="{x0:.2f}" y1="{_MARGIN}" x2="{x0:.2f}" '
            f'y2="{_HEIGHT - _MARGIN}" stroke="#cccccc"/>'
        )
    if ylo < 0.0 < yhi:
        y0 = sy(0.0)
        parts.append(
            f'<line x1="{_MARGIN}" y1="{y0:.2f}" x2="{_WIDTH - _MARGIN}" '
            f'y2="{y0:.2f}" stroke="#cccccc"/>'
        )
    # frame and tick labels
    parts.append(
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_WIDTH - 2 * _MARGIN}" '
        f'height="{_HEIGHT - 2 * _MARGIN}" fill="none" stroke="black"/>'
    )
    for v in _ticks(xlo, xhi):
        parts.append(
            f'<text x="{sx(v):.2f}" y="{_HEIGHT - _MARGIN + 18}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="11">'
            f"{v:.3g}</text>"
        )
    for v in _ticks(ylo, yhi):
        parts.append(
            f'<text x="{_MARGIN - 8}" y="{sy(v):.2f}" text-anchor="end" '
            f'dominant-baseline="middle" font-family="sans-serif" '
            f'font-size="11">{v:.3g}</text>'
        )
    parts.append(
        f'<text x="{_WIDTH / 2:.1f}" y="{_HEIGHT - 20}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{escape(x_name)}</text>'
    )
    parts.append(
        f'<text x="22" y="{_HEIGHT / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 22 {_HEIGHT / 2:.1f})">{escape(y_name)}</text>'
    )
    for x, y, label in zip(xs, ys, labels):
        px, py = sx(x), sy(y)
        parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3" fill="#1f5fa8"/>')
        parts.append(
            f'<text x="{px + 5:.2f}" y="{py - 5:.2f}" font-family="sans-serif" '
            f'font-size="10">{escape(str(label))}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def contribution_bars(values_pct, labels, reference_pct, title):
    """Bar chart of one axis's contributions in percent.

    A horizontal rule marks reference_pct, the level every observation
    would sit at if contributions were uniform.
    """
    n = len(values_pct)
    sy, vlo, vhi = _scale([*values_pct, reference_pct, 0.0], _HEIGHT - _MARGIN, _MARGIN)
    inner = _WIDTH - 2 * _MARGIN
    slot = inner / max(n, 1)
    bar = 0.7 * slot
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.1f}" y="30" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{escape(title)}</text>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner}" '
        f'height="{_HEIGHT - 2 * _MARGIN}" fill="none" stroke="black"/>',
    ]
    base = sy(max(0.0, vlo))
    for i, v in enumerate(values_pct):
        x = _MARGIN + i * slot + 0.5 * (slot - bar)
        top = sy(v)
        y = min(top, base)
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar:.2f}" '
            f'height="{abs(base - top):.2f}" fill="#6b9bd1"/>'
        )
        parts.append(
            f'<text x="{x + bar / 2:.2f}" y="{_HEIGHT - _MARGIN + 12}" '
            f'font-family="sans-serif" font-size="8" text-anchor="end" '
            f'transform="rotate(-60 {x + bar / 2:.2f} {_HEIGHT - _MARGIN + 12})">'
            f"{escape(str(labels[i]))}</text>"
        )
    ry = sy(reference_pct)
    parts.append(
        f'<line x1="{_MARGIN}" y1="{ry:.2f}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{ry:.2f}" stroke="#c03030" stroke-dasharray="6 3"/>'
    )
    parts.append(
        f'<text x="{_WIDTH - _MARGIN + 4}" y="{ry:.2f}" font-family="sans-serif" '
        f'font-size="10" dominant-baseline="middle" fill="#c03030">'
        f"{reference_pct:.3g}%</text>"
    )
    for v in _ticks(vlo, vhi):
        parts.append(
            f'<text x="{_MARGIN - 8}" y="{sy(v):.2f}" text-anchor="end" '
            f'dominant-baseline="middle" font-family="sans-serif" '
            f'font-size="11">{v:.3g}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
