"""Perceptual measurement functions: CIEDE2000, contrast, distances, size JNDs."""

from __future__ import annotations

import math

from ._data import load
from .color import Color, lab_coords, srgb_coords
from .spaces import SPACES, convert_coords, srgb_to_linear

CONTRAST_ALGORITHMS = ("wcag21", "apca", "lstar")
SIZE_CLASSES = ("thin", "medium", "wide")


def delta_e_2000(a: Color, b: Color) -> float:
    """CIEDE2000 color difference on the CIELAB forms of both colors."""
    return ciede2000(lab_coords(a), lab_coords(b))


def ciede2000(lab1, lab2) -> float:
    """CIEDE2000 per the CIE formulation (kL = kC = kH = 1)."""
    L1, a1, b1 = lab1
    L2, a2, b2 = lab2

    C1 = math.hypot(a1, b1)
    C2 = math.hypot(a2, b2)
    Cm = (C1 + C2) / 2.0
    G = 0.5 * (1.0 - math.sqrt(Cm**7 / (Cm**7 + 25.0**7)))
    a1p = (1.0 + G) * a1
    a2p = (1.0 + G) * a2
    C1p = math.hypot(a1p, b1)
    C2p = math.hypot(a2p, b2)

    h1p = math.degrees(math.atan2(b1, a1p)) % 360.0 if (a1p or b1) else 0.0
    h2p = math.degrees(math.atan2(b2, a2p)) % 360.0 if (a2p or b2) else 0.0

    dLp = L2 - L1
    dCp = C2p - C1p
    if C1p * C2p == 0.0:
        dhp = 0.0
    else:
        dhp = h2p - h1p
        if dhp > 180.0:
            dhp -= 360.0
        elif dhp < -180.0:
            dhp += 360.0
    dHp = 2.0 * math.sqrt(C1p * C2p) * math.sin(math.radians(dhp) / 2.0)

    Lmp = (L1 + L2) / 2.0
    Cmp = (C1p + C2p) / 2.0
    if C1p * C2p == 0.0:
        hmp = h1p + h2p
    else:
        s = h1p + h2p
        if abs(h1p - h2p) <= 180.0:
            hmp = s / 2.0
        elif s < 360.0:
            hmp = (s + 360.0) / 2.0
        else:
            hmp = (s - 360.0) / 2.0

    T = (
        1.0
        - 0.17 * math.cos(math.radians(hmp - 30.0))
        + 0.24 * math.cos(math.radians(2.0 * hmp))
        + 0.32 * math.cos(math.radians(3.0 * hmp + 6.0))
        - 0.20 * math.cos(math.radians(4.0 * hmp - 63.0))
    )
    dTheta = 30.0 * math.exp(-(((hmp - 275.0) / 25.0) ** 2))
    Rc = 2.0 * math.sqrt(Cmp**7 / (Cmp**7 + 25.0**7))
    Sl = 1.0 + (0.015 * (Lmp - 50.0) ** 2) / math.sqrt(20.0 + (Lmp - 50.0) ** 2)
    Sc = 1.0 + 0.045 * Cmp
    Sh = 1.0 + 0.015 * Cmp * T
    Rt = -math.sin(math.radians(2.0 * dTheta)) * Rc

    tL = dLp / Sl
    tC = dCp / Sc
    tH = dHp / Sh
    return math.sqrt(tL * tL + tC * tC + tH * tH + Rt * tC * tH)


def relative_luminance(c: Color) -> float:
    """WCAG 2.1 relative luminance of the sRGB form (channels clamped to gamut)."""
    r, g, b = (srgb_to_linear(min(1.0, max(0.0, v))) for v in srgb_coords(c))
    return 0.2126 * r + 0.7152 * g + 0.0722 * b


def wcag21_contrast(a: Color, b: Color) -> float:
    la, lb = relative_luminance(a), relative_luminance(b)
    lighter, darker = max(la, lb), min(la, lb)
    return (lighter + 0.05) / (darker + 0.05)


def lstar_difference(a: Color, b: Color) -> float:
    return abs(lab_coords(a)[0] - lab_coords(b)[0])


def _apca_y(c: Color) -> float:
    k = load("apca_constants.json")
    r, g, b = (min(1.0, max(0.0, v)) for v in srgb_coords(c))
    trc = k["mainTRC"]
    return k["sRco"] * r**trc + k["sGco"] * g**trc + k["sBco"] * b**trc


def apca_contrast(text: Color, background: Color) -> float:
    """Absolute APCA lightness contrast Lc of `text` against `background`."""
    k = load("apca_constants.json")
    ytx, ybg = _apca_y(text), _apca_y(background)
    if ytx < k["blkThrs"]:
        ytx += (k["blkThrs"] - ytx) ** k["blkClmp"]
    if ybg < k["blkThrs"]:
        ybg += (k["blkThrs"] - ybg) ** k["blkClmp"]
    if abs(ybg - ytx) < k["deltaYmin"]:
        return 0.0
    if ybg > ytx:
        sapc = (ybg ** k["normBG"] - ytx ** k["normTXT"]) * k["scaleBoW"]
        lc = 0.0 if sapc < k["loClip"] else sapc - k["loBoWoffset"]
    else:
        sapc = (ybg ** k["revBG"] - ytx ** k["revTXT"]) * k["scaleWoB"]
        lc = 0.0 if sapc > -k["loClip"] else sapc + k["loWoBoffset"]
    return abs(lc * 100.0)


def contrast(a: Color, b: Color, algorithm: str) -> float:
    if algorithm == "wcag21":
        return wcag21_contrast(a, b)
    if algorithm == "lstar":
        return lstar_difference(a, b)
    if algorithm == "apca":
        return apca_contrast(a, b)
    raise ValueError(f"unknown contrast algorithm: {algorithm!r}")


def euclidean_dist(a: Color, b: Color, space: str) -> float:
    """L2 distance in `space`; hue axes use the shortest angular difference."""
    ca = convert_coords(a.coords, a.space, space)
    cb = convert_coords(b.coords, b.space, space)
    total = 0.0
    for axis, va, vb in zip(SPACES[space], ca, cb):
        d = va - vb
        if axis.is_hue:
            d = abs(d) % 360.0
            d = min(d, 360.0 - d)
        total += d * d
    return math.sqrt(total)


def jnd_thresholds(size: str) -> tuple[float, float, float]:
    """Per-axis (L*, a*, b*) noticeability thresholds for a mark size class."""
    k = load("jnd_thresholds.json")
    if size not in k["sizes"]:
        raise ValueError(f"unknown size class: {size!r}")
    s = k["sizes"][size]
    p = k["p"]
    return tuple(p * (k["A"][ax] + k["B"][ax] / s) for ax in ("l", "a", "b"))  # type: ignore[return-value]


def discriminable_at_size(a: Color, b: Color, size: str) -> bool:
    """True when any CIELAB axis difference reaches its size-class threshold."""
    la, lb = lab_coords(a), lab_coords(b)
    return any(abs(x - y) >= t for x, y, t in zip(la, lb, jnd_thresholds(size)))
