"""Color space definitions and conversions.

Supported spaces: sRGB, CIELAB (D65, 2° observer), LCH (cylindrical CIELAB),
HSL and HSV. Conversions route through sRGB except for the direct LAB/LCH
rectangular-polar transform, which needs to stay exact for out-of-gamut
colors.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    is_hue: bool = False


# Axis ranges double as the clamp bounds for perturbation-style edits.
SPACES: dict[str, tuple[Axis, Axis, Axis]] = {
    "srgb": (Axis("r", 0.0, 1.0), Axis("g", 0.0, 1.0), Axis("b", 0.0, 1.0)),
    "lab": (Axis("l", 0.0, 100.0), Axis("a", -125.0, 125.0), Axis("b", -125.0, 125.0)),
    "lch": (Axis("l", 0.0, 100.0), Axis("c", 0.0, 150.0), Axis("h", 0.0, 360.0, is_hue=True)),
    "hsl": (Axis("h", 0.0, 360.0, is_hue=True), Axis("s", 0.0, 1.0), Axis("l", 0.0, 1.0)),
    "hsv": (Axis("h", 0.0, 360.0, is_hue=True), Axis("s", 0.0, 1.0), Axis("v", 0.0, 1.0)),
}

Triple = tuple[float, float, float]

# D65 reference white, 2° observer.
_XN, _YN, _ZN = 0.95047, 1.0, 1.08883
# Exact CIE constants: epsilon = (6/29)^3, kappa = (29/3)^3.
_EPS = 216.0 / 24389.0
_KAPPA = 24389.0 / 27.0

# Standard sRGB matrix with each row scaled so white maps to the reference
# white exactly (the published Y row sums to 1.0000001); the inverse is
# computed from the forward matrix so round trips do not drift.
def _row_normalized():
    rows = (
        (0.4124564, 0.3575761, 0.1804375),
        (0.2126729, 0.7151522, 0.0721750),
        (0.0193339, 0.1191920, 0.9503041),
    )
    targets = (_XN, _YN, _ZN)
    return tuple(
        tuple(v * t / sum(row) for v in row) for row, t in zip(rows, targets)
    )


def _inverse_3x3(m):
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return (
        ((e * i - f * h) / det, (c * h - b * i) / det, (b * f - c * e) / det),
        ((f * g - d * i) / det, (a * i - c * g) / det, (c * d - a * f) / det),
        ((d * h - e * g) / det, (b * g - a * h) / det, (a * e - b * d) / det),
    )


_RGB_TO_XYZ = _row_normalized()
_XYZ_TO_RGB = _inverse_3x3(_RGB_TO_XYZ)


def axis_names(space: str) -> tuple[str, str, str]:
    return tuple(a.name for a in SPACES[space])  # type: ignore[return-value]


def srgb_to_linear(v: float) -> float:
    if v <= 0.04045:
        return v / 12.92
    return ((v + 0.055) / 1.055) ** 2.4


def linear_to_srgb(v: float) -> float:
    if v <= 0.0031308:
        return v * 12.92
    # Algebraically 1.055 * v^(1/2.4) - 0.055, arranged so v = 1 maps to
    # exactly 1.0 (white must survive round trips bit-for-bit).
    return 1.055 * (v ** (1 / 2.4) - 1.0) + 1.0


def _matmul(m, v: Triple) -> Triple:
    return (
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    )


def _linearize(rgb: Triple) -> Triple:
    # Mirror the transfer curve for negative (out-of-gamut) channel values so
    # the mapping stays monotone and invertible.
    return tuple(math.copysign(srgb_to_linear(abs(v)), v) for v in rgb)  # type: ignore[return-value]


def _delinearize(rgb: Triple) -> Triple:
    return tuple(math.copysign(linear_to_srgb(abs(v)), v) for v in rgb)  # type: ignore[return-value]


def srgb_to_xyz(rgb: Triple) -> Triple:
    return _matmul(_RGB_TO_XYZ, _linearize(rgb))


def xyz_to_srgb(xyz: Triple) -> Triple:
    return _delinearize(_matmul(_XYZ_TO_RGB, xyz))


def _f(t: float) -> float:
    if t > _EPS:
        return t ** (1 / 3)
    return (_KAPPA * t + 16.0) / 116.0


def _f_inv(t: float) -> float:
    t3 = t * t * t
    if t3 > _EPS:
        return t3
    return (116.0 * t - 16.0) / _KAPPA


def srgb_to_lab(rgb: Triple) -> Triple:
    x, y, z = srgb_to_xyz(rgb)
    fx, fy, fz = _f(x / _XN), _f(y / _YN), _f(z / _ZN)
    return (116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def lab_to_srgb(lab: Triple) -> Triple:
    l, a, b = lab
    fy = (l + 16.0) / 116.0
    fx = fy + a / 500.0
    fz = fy - b / 200.0
    return xyz_to_srgb((_f_inv(fx) * _XN, _f_inv(fy) * _YN, _f_inv(fz) * _ZN))


def lab_to_lch(lab: Triple) -> Triple:
    l, a, b = lab
    c = math.hypot(a, b)
    h = math.degrees(math.atan2(b, a)) % 360.0
    return (l, c, h)


def lch_to_lab(lch: Triple) -> Triple:
    l, c, h = lch
    hr = math.radians(h)
    return (l, c * math.cos(hr), c * math.sin(hr))


def srgb_to_hsl(rgb: Triple) -> Triple:
    h, l, s = colorsys.rgb_to_hls(*rgb)
    return (h * 360.0 % 360.0, s, l)


def hsl_to_srgb(hsl: Triple) -> Triple:
    h, s, l = hsl
    return colorsys.hls_to_rgb(h / 360.0 % 1.0, l, s)


def srgb_to_hsv(rgb: Triple) -> Triple:
    h, s, v = colorsys.rgb_to_hsv(*rgb)
    return (h * 360.0 % 360.0, s, v)


def hsv_to_srgb(hsv: Triple) -> Triple:
    h, s, v = hsv
    return colorsys.hsv_to_rgb(h / 360.0 % 1.0, s, v)


_TO_SRGB = {
    "srgb": lambda c: c,
    "lab": lab_to_srgb,
    "lch": lambda c: lab_to_srgb(lch_to_lab(c)),
    "hsl": hsl_to_srgb,
    "hsv": hsv_to_srgb,
}
_FROM_SRGB = {
    "srgb": lambda c: c,
    "lab": srgb_to_lab,
    "lch": lambda c: lab_to_lch(srgb_to_lab(c)),
    "hsl": srgb_to_hsl,
    "hsv": srgb_to_hsv,
}


def convert_coords(coords: Triple, source: str, target: str) -> Triple:
    """Re-express coordinates in another space. Identity when source == target."""
    if source == target:
        return coords
    # LAB <-> LCH must not round-trip through sRGB: the polar transform is
    # exact, while sRGB clamping semantics would be lossy out of gamut.
    if source == "lab" and target == "lch":
        return lab_to_lch(coords)
    if source == "lch" and target == "lab":
        return lch_to_lab(coords)
    return _FROM_SRGB[target](_TO_SRGB[source](coords))
