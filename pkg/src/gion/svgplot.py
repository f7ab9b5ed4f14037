"""Minimal standalone SVG line plots."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Sequence

import numpy as np

from .geometry import constants, phi_from_t, pq_of_t

WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=70, right=20, top=30, bottom=50)


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    span = hi - lo
    raw = span / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((k * mag for k in (1, 2, 2.5, 5, 10) if k * mag >= raw), default=raw)
    start = math.ceil(lo / step) * step
    return [float(v) for v in np.arange(start, hi + step * 1e-9, step)]


def line_plot(
    xs: Sequence[float],
    ys: Sequence[float],
    *,
    title: str,
    xlabel: str,
    ylabel: str,
) -> str:
    """SVG document with axes, ticks and one polyline through ``(xs, ys)``."""
    xs, ys = np.asarray(xs, float), np.asarray(ys, float)
    x_lo, x_hi = float(xs.min()), float(xs.max())
    y_lo, y_hi = float(ys.min()), float(ys.max())
    pad = 0.05 * (y_hi - y_lo or 1.0)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    px0, px1 = MARGIN["left"], WIDTH - MARGIN["right"]
    py0, py1 = HEIGHT - MARGIN["bottom"], MARGIN["top"]

    def sx(v):
        return px0 + (v - x_lo) / (x_hi - x_lo) * (px1 - px0)

    def sy(v):
        return py0 + (v - y_lo) / (y_hi - y_lo) * (py1 - py0)

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(WIDTH),
        height=str(HEIGHT),
        viewBox=f"0 0 {WIDTH} {HEIGHT}",
    )
    ET.SubElement(svg, "title").text = title
    ET.SubElement(svg, "rect", x="0", y="0", width=str(WIDTH), height=str(HEIGHT), fill="white")
    axes = ET.SubElement(svg, "g", stroke="black", fill="none")
    ET.SubElement(axes, "line", x1=f"{px0}", y1=f"{py0}", x2=f"{px1}", y2=f"{py0}")
    ET.SubElement(axes, "line", x1=f"{px0}", y1=f"{py0}", x2=f"{px0}", y2=f"{py1}")

    labels = ET.SubElement(svg, "g", attrib={"font-family": "sans-serif", "font-size": "12"})
    for v in _ticks(x_lo, x_hi):
        X = sx(v)
        ET.SubElement(axes, "line", x1=f"{X:.2f}", y1=f"{py0}", x2=f"{X:.2f}", y2=f"{py0 + 5}")
        ET.SubElement(labels, "text", x=f"{X:.2f}", y=f"{py0 + 18}", attrib={"text-anchor": "middle"}).text = f"{v:g}"
    for v in _ticks(y_lo, y_hi):
        Y = sy(v)
        ET.SubElement(axes, "line", x1=f"{px0 - 5}", y1=f"{Y:.2f}", x2=f"{px0}", y2=f"{Y:.2f}")
        ET.SubElement(labels, "text", x=f"{px0 - 8}", y=f"{Y + 4:.2f}", attrib={"text-anchor": "end"}).text = f"{v:g}"
    ET.SubElement(labels, "text", x=f"{(px0 + px1) / 2}", y=f"{HEIGHT - 12}", attrib={"text-anchor": "middle"}).text = xlabel
    ET.SubElement(
        labels,
        "text",
        x="16",
        y=f"{(py0 + py1) / 2}",
        transform=f"rotate(-90 16 {(py0 + py1) / 2})",
        attrib={"text-anchor": "middle"},
    ).text = ylabel
    ET.SubElement(labels, "text", x=f"{(px0 + px1) / 2}", y="18", attrib={"text-anchor": "middle"}).text = title

    points = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in zip(xs, ys))
    ET.SubElement(svg, "polyline", points=points, fill="none", stroke="#1f5fa8", attrib={"stroke-width": "2"})
    body = ET.tostring(svg, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n' + body + "\n"


def curve_samples(kind: str, n: int = 400) -> tuple[np.ndarray, np.ndarray]:
    """Sampled curve for ``kind`` in ``{"q_of_t", "phi_of_q"}``.

    Both curves are traced along ``t``; the grid ends exactly at ``t0``.
    """
    t0 = constants().t0
    ts = np.linspace(t0 / n, t0, n)
    qs = np.array([pq_of_t(t)[1] for t in ts])
    if kind == "q_of_t":
        return ts, qs
    if kind == "phi_of_q":
        from fractions import Fraction

        phis = np.array([math.degrees(phi_from_t(Fraction(float(t)))) for t in ts])
        return qs, phis
    raise ValueError(f"unknown plot kind {kind!r}")


def plot_svg(kind: str, n: int = 400) -> str:
    xs, ys = curve_samples(kind, n)
    if kind == "q_of_t":
        return line_plot(xs, ys, title="q(t)", xlabel="t", ylabel="q")
    return line_plot(xs, ys, title="phi(q)", xlabel="q", ylabel="phi (degrees)")
