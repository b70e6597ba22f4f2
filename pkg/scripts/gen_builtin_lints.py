"""Regenerate the built-in lint definition files under src/chromalint/data/lints.

Thresholds live inside each program document so users can edit them by
overriding a lint. Evenness tolerances are calibrated so the ColorBrewer
5-class schemes (shipped as the reference corpus) pass: flagging the
canonical palettes would make the defaults unusable.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from chromalint._data import load  # noqa: E402

OUT = ROOT / "src" / "chromalint" / "data" / "lints"

GLANCE_DE = 10  # dE2000 at which two colors read as different at a glance
MAX_COLORS = 10
EVEN_LIGHTNESS_TOL = 0.35  # step-CV bound; ColorBrewer sequential worst is 0.31
EVEN_HUE_TOL = 0.5  # ColorBrewer multi-hue worst inside the checked band is 0.46
HUE_BAND = (60, 180)  # raw hue extent band that even-hue checks (wraps excluded)
UGLY = ["#4a412a", "#c3b03b", "#7a7a2a"]  # dark olive/yellow-green mud tones
EXTREMES = ["#000000", "#ffffff", "#ff0000", "#00ff00", "#0000ff",
            "#ffff00", "#ff00ff", "#00ffff"]


# ---- program builders -------------------------------------------------------

def ch(color, space, axis):
    return {"channel": {"color": color, "space": space, "axis": axis}}


def lab_l(x):
    return ch(x, "lab", "l")


def chroma(x):
    return ch(x, "lch", "c")


def hue(x):
    return ch(x, "lch", "h")


def de(a, b):
    return {"deltaE": {"left": a, "right": b, "algorithm": "2000"}}


def wcag(a, b="background"):
    return {"contrast": {"left": a, "right": b, "algorithm": "wcag21"}}


def cvd(x, kind):
    return {"cvdSim": {"color": x, "type": kind}}


def lt(l, r):
    return {"<": {"left": l, "right": r}}


def gt(l, r):
    return {">": {"left": l, "right": r}}


def gte(l, r):
    return {"not": lt(l, r)}


def lte(l, r):
    return {"not": gt(l, r)}


def eq(l, r):
    return {"==": {"left": l, "right": r}}


def neq(l, r):
    return {"!=": {"left": l, "right": r}}


def land(*xs):
    return {"and": list(xs)}


def lor(*xs):
    return {"or": list(xs)}


def lnot(x):
    return {"not": x}


def sim(l, r, t):
    return {"similar": {"left": l, "right": r, "threshold": t}}


def absdiff(l, r):
    return {"absDiff": {"left": l, "right": r}}


def plus(l, r):
    return {"+": {"left": l, "right": r}}


def quant(kind, varbs, pred, where=None, src="colors"):
    body = {"in": src, "varbs": varbs, "predicate": pred}
    if where is not None:
        body["where"] = where
    return {kind: body}


def all_colors(pred, where=None):
    return quant("all", ["a"], pred, where)


def all_pairs(pred, extra_where=None):
    where = lt("index(a)", "index(b)")
    if extra_where is not None:
        where = land(where, extra_where)
    return quant("all", ["a", "b"], pred, where)


def all_consecutive(pred):
    return quant("all", ["a", "b"], pred, eq("index(b)", plus("index(a)", 1)))


def lab_channel_values():
    return {"map": {"in": "colors", "varb": "x", "func": lab_l("x")}}


def hue_values():
    return {"map": {"in": "colors", "varb": "x", "func": hue("x")}}


def chroma_values():
    return {"map": {"in": "colors", "varb": "x", "func": chroma("x")}}


def sorted_values(values):
    return {"sort": {"in": values, "varb": "v", "func": "v"}}


def evenness(values, tol):
    steps = {"speed": sorted_values(values)}
    mean_abs = {"mean": {"map": {"in": steps, "varb": "d", "func": absdiff("d", 0)}}}
    return lte({"std": steps}, {"*": {"left": tol, "right": mean_abs}})


# ---- lint table -------------------------------------------------------------

def jnd_row(size):
    k = load("jnd_thresholds.json")
    s = k["sizes"][size]
    return {ax: round(k["p"] * (k["A"][ax] + k["B"][ax] / s), 2) for ax in ("l", "a", "b")}


def distinct_at(size):
    t = jnd_row(size)
    return all_pairs(
        lor(
            gte(absdiff(ch("a", "lab", "l"), ch("b", "lab", "l")), t["l"]),
            gte(absdiff(ch("a", "lab", "a"), ch("b", "lab", "a")), t["a"]),
            gte(absdiff(ch("a", "lab", "b"), ch("b", "lab", "b")), t["b"]),
        )
    )


def cvd_lint(kind):
    return all_pairs(gte(de(cvd("a", kind), cvd("b", kind)), GLANCE_DE))


def hue_diff_about(x, y, target, tol):
    d = absdiff(hue(x), hue(y))
    if target == 90:
        return lor(sim(d, 90, tol), sim(d, 270, tol))
    return sim(d, 180, tol)  # 360-d in [175,185] iff d is


def monotone(direction):
    pred = gt(lab_l("b"), lab_l("a")) if direction == "up" else lt(lab_l("b"), lab_l("a"))
    return all_consecutive(pred)


def diverging_shape():
    def arm(cmp_op, side):
        pred = gt(lab_l("b"), lab_l("a")) if cmp_op == "up" else lt(lab_l("b"), lab_l("a"))
        if side == "prefix":
            bound = lor(lt("index(b)", "index(m)"), eq("index(b)", "index(m)"))
        else:
            bound = lor(gt("index(a)", "index(m)"), eq("index(a)", "index(m)"))
        where = land(eq("index(b)", plus("index(a)", 1)), bound)
        return quant("all", ["a", "b"], pred, where)

    peak = land(arm("up", "prefix"), arm("down", "suffix"))
    valley = land(arm("down", "prefix"), arm("up", "suffix"))
    # The pivot must be interior: a pivot at either end degenerates to a
    # monotone (sequential) shape.
    interior = land(
        gt("index(m)", 0),
        lt("index(m)", {"-": {"left": {"count": "colors"}, "right": 1}}),
    )
    return quant("exist", ["m"], lor(peak, valley), where=interior)


def blue_names():
    names = load("color_names.json")["names"]
    return sorted(n for n in names if "blue" in n)


def in_gamut_program():
    checks = []
    for axis in ("r", "g", "b"):
        v = ch("a", "srgb", axis)
        checks.append(lte(v, 1.000001))
        checks.append(gte(v, -0.000001))
    return all_colors(land(*checks))


def affect_saturation(tag):
    return {
        "id": f"affect-saturated-not-{tag}",
        "name": f"Saturated colors are not {tag}",
        "group": "design",
        "level": "warning",
        "description": (
            f"Palettes tagged '{tag}' should avoid strongly saturated colors "
            "(LCH chroma above 60), following affective color guidance (Bartram et al.)."
        ),
        "failMessage": f"These colors ({{{{blame}}}}) are too saturated for a {tag} palette.",
        "taskTypes": ["any"],
        "requiredTags": [tag],
        "blameMode": "single",
        "program": all_colors(lte(chroma("a"), 60)),
    }


LINTS = [
    affect_saturation("calm"),
    affect_saturation("serious"),
    affect_saturation("trustworthy"),
    {
        "id": "affect-positive-no-dark-reds",
        "name": "Dark reds and browns are not positive",
        "group": "design",
        "level": "warning",
        "description": (
            "Palettes tagged 'positive' should avoid dark reds and browns "
            "(LCH hue below 60 with L* under 40 and enough chroma to read as a color), "
            "per affective color guidance (Bartram et al.)."
        ),
        "failMessage": "These colors ({{blame}}) read as dark reds or browns, which do not feel positive.",
        "taskTypes": ["any"],
        "requiredTags": ["positive"],
        "blameMode": "single",
        "program": all_colors(
            lnot(land(lt(hue("a"), 60), lt(lab_l("a"), 40), gt(chroma("a"), 15)))
        ),
    },
    {
        "id": "affect-negative-no-light-greens",
        "name": "Negative palettes should not have light colors, particularly greens",
        "group": "design",
        "level": "warning",
        "description": (
            "Palettes tagged 'negative' should avoid light greens "
            "(L* above 70 with hue between 90 and 150), per affective color guidance (Bartram et al.)."
        ),
        "failMessage": "These colors ({{blame}}) are light greens, which undercut a negative affect.",
        "taskTypes": ["any"],
        "requiredTags": ["negative"],
        "blameMode": "single",
        "program": all_colors(
            lnot(land(gt(lab_l("a"), 70), gt(hue("a"), 90), lt(hue("a"), 150)))
        ),
    },
    {
        "id": "affect-playful-light-colors",
        "name": "Playful palettes can lean on light blues, beiges, and grays",
        "group": "design",
        "level": "warning",
        "description": (
            "Palettes tagged 'playful' should include at least one light blue, beige, "
            "or light gray, per affective color guidance (Bartram et al.)."
        ),
        "failMessage": "No light blue, beige, or light gray found; consider adding one for a playful feel.",
        "taskTypes": ["any"],
        "requiredTags": ["playful"],
        "blameMode": "none",
        "program": quant(
            "exist",
            ["a"],
            lor(
                land(gt(lab_l("a"), 70), lt(chroma("a"), 15)),
                land(gt(lab_l("a"), 70), gt(hue("a"), 200), lt(hue("a"), 280)),
                land(gt(lab_l("a"), 70), gt(hue("a"), 60), lt(hue("a"), 110), lt(chroma("a"), 35)),
            ),
        ),
    },
    {
        "id": "cvd-friendly-deuteranopia",
        "name": "Colorblind friendly: deuteranopia",
        "group": "accessibility",
        "level": "error",
        "description": (
            "All color pairs should stay glanceably different (dE2000 >= 10) "
            "under simulated deuteranopia."
        ),
        "failMessage": "These color pairs ({{blame}}) are hard to tell apart under deuteranopia.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": cvd_lint("deuteranopia"),
    },
    {
        "id": "cvd-friendly-protanopia",
        "name": "Colorblind friendly: protanopia",
        "group": "accessibility",
        "level": "error",
        "description": (
            "All color pairs should stay glanceably different (dE2000 >= 10) "
            "under simulated protanopia."
        ),
        "failMessage": "These color pairs ({{blame}}) are hard to tell apart under protanopia.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": cvd_lint("protanopia"),
    },
    {
        "id": "cvd-friendly-tritanopia",
        "name": "Colorblind friendly: tritanopia",
        "group": "accessibility",
        "level": "error",
        "description": (
            "All color pairs should stay glanceably different (dE2000 >= 10) "
            "under simulated tritanopia."
        ),
        "failMessage": "These color pairs ({{blame}}) are hard to tell apart under tritanopia.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": cvd_lint("tritanopia"),
    },
    {
        "id": "right-in-black-and-white",
        "name": "Right in black and white",
        "group": "accessibility",
        "level": "warning",
        "description": (
            "Grayscale renditions of all color pairs should differ in L* by at "
            "least the thin-mark noticeability threshold, so the palette survives "
            "grayscale printing."
        ),
        "failMessage": "These color pairs ({{blame}}) become indistinguishable in grayscale.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": all_pairs(
            gte(
                absdiff(lab_l(cvd("a", "grayscale")), lab_l(cvd("b", "grayscale"))),
                jnd_row("thin")["l"],
            )
        ),
    },
    {
        "id": "wcag-text-contrast-aa",
        "name": "WCAG text contrast: AA",
        "group": "accessibility",
        "level": "error",
        "description": (
            "Colors tagged 'text' must reach WCAG 2.1 contrast 4.5:1 against the "
            "background (AA, normal text). Applies to palettes tagged 'text'."
        ),
        "failMessage": "These text colors ({{blame}}) fall short of WCAG AA contrast (4.5:1).",
        "taskTypes": ["any"],
        "requiredTags": ["text"],
        "blameMode": "single",
        "program": quant(
            "all", ["a"], gte(wcag("a"), 4.5), where={"isTag": {"color": "a", "value": "text"}}
        ),
    },
    {
        "id": "wcag-text-contrast-aaa",
        "name": "WCAG text contrast: AAA",
        "group": "accessibility",
        "level": "warning",
        "description": (
            "Colors tagged 'text' should reach WCAG 2.1 contrast 7:1 against the "
            "background (AAA, normal text). Applies to palettes tagged 'text'."
        ),
        "failMessage": "These text colors ({{blame}}) fall short of WCAG AAA contrast (7:1).",
        "taskTypes": ["any"],
        "requiredTags": ["text"],
        "blameMode": "single",
        "program": quant(
            "all", ["a"], gte(wcag("a"), 7), where={"isTag": {"color": "a", "value": "text"}}
        ),
    },
    {
        "id": "wcag-contrast-graphical-objects",
        "name": "WCAG contrast: graphical objects",
        "group": "accessibility",
        "level": "error",
        "description": (
            "Every color must exceed WCAG 2.1 contrast 3:1 against the background, "
            "the bar for graphical objects and UI components."
        ),
        "failMessage": (
            "These colors ({{blame}}) do not have sufficient contrast with the "
            "background to be easily readable."
        ),
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": all_colors(gt(wcag("a"), 3)),
    },
    {
        "id": "avoid-too-much-contrast-with-background",
        "name": "Avoid too much contrast with the background",
        "group": "design",
        "level": "warning",
        "description": (
            "No color should exceed WCAG contrast 20:1 against the background; "
            "extreme contrast everywhere is harsh (Muth)."
        ),
        "failMessage": "These colors ({{blame}}) scream against the background (contrast over 20:1).",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": all_colors(lte(wcag("a"), 20)),
    },
    {
        "id": "axes-low-contrast-with-background",
        "name": "Axes should have low contrast with the background",
        "group": "design",
        "level": "warning",
        "description": (
            "Colors tagged 'axis' should sit between WCAG contrast 1.2:1 and 3:1 "
            "against the background: visible, but a whisper (Bartram et al.)."
        ),
        "failMessage": "These axis colors ({{blame}}) are outside the 1.2-3 contrast whisper range.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": quant(
            "all",
            ["a"],
            land(gte(wcag("a"), 1.2), lte(wcag("a"), 3)),
            where={"isTag": {"color": "a", "value": "axis"}},
        ),
    },
    {
        "id": "background-desaturation-sufficient",
        "name": "Background is sufficiently desaturated",
        "group": "design",
        "level": "warning",
        "description": "The background color should be desaturated: LCH chroma at most 20 (Muth).",
        "failMessage": "The background is too saturated (LCH chroma above 20).",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "none",
        "program": lte(chroma("background"), 20),
    },
    {
        "id": "blue-nameable-as-blue",
        "name": "Colors marked as blue should be nameable as blue",
        "group": "usability",
        "level": "warning",
        "description": (
            "Colors tagged 'blue' should land on a lexicon name containing 'blue' "
            "(Heer & Stone name model, simplified to the shipped lexicon)."
        ),
        "failMessage": "These colors ({{blame}}) are tagged blue but do not name as a blue.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": quant(
            "all",
            ["a"],
            lor(*[eq({"name": "a"}, name) for name in blue_names()]),
            where={"isTag": {"color": "a", "value": "blue"}},
        ),
    },
    {
        "id": "color-name-discriminability",
        "name": "Color name discriminability",
        "group": "usability",
        "level": "error",
        "description": (
            "No two colors should share the same nearest color name "
            "(Heer & Stone), so the palette can be talked about unambiguously."
        ),
        "failMessage": "These color pairs ({{blame}}) collide on the same color name.",
        "taskTypes": ["categorical"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": all_pairs(neq({"name": "a"}, {"name": "b"})),
    },
    {
        "id": "mutually-distinct",
        "name": "Mutually distinct",
        "group": "usability",
        "level": "error",
        "description": (
            "All color pairs should be glanceably different: dE2000 at least 10 "
            "(Bujack et al. discriminability guidance)."
        ),
        "failMessage": "These color pairs ({{blame}}) are not glanceably different.",
        "taskTypes": ["categorical"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": all_pairs(gte(de("a", "b"), GLANCE_DE)),
    },
    {
        "id": "colors-distinguishable-in-order",
        "name": "Colors distinguishable in order",
        "group": "usability",
        "level": "warning",
        "description": (
            "Consecutive colors in an ordered palette should be glanceably "
            "different (dE2000 at least 10), after Bujack et al."
        ),
        "failMessage": "These consecutive pairs ({{blame}}) blur together in order.",
        "taskTypes": ["sequential", "diverging"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": all_consecutive(gte(de("a", "b"), GLANCE_DE)),
    },
    {
        "id": "color-distinctness-thin",
        "name": "Color distinctness: thin marks",
        "group": "usability",
        "level": "warning",
        "description": (
            "All pairs should be noticeably different for thin marks (lines): some "
            "CIELAB axis difference must reach the size-dependent threshold "
            "(Szafir model, as shipped with d3-jnd; p=0.5, 0.1 deg)."
        ),
        "failMessage": "These color pairs ({{blame}}) are too close to distinguish on thin marks.",
        "taskTypes": ["categorical"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": distinct_at("thin"),
    },
    {
        "id": "color-distinctness-medium",
        "name": "Color distinctness: medium marks",
        "group": "usability",
        "level": "warning",
        "description": (
            "All pairs should be noticeably different for medium marks (points): "
            "Szafir size-dependent thresholds at p=0.5, 0.5 deg."
        ),
        "failMessage": "These color pairs ({{blame}}) are too close to distinguish on medium marks.",
        "taskTypes": ["categorical"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": distinct_at("medium"),
    },
    {
        "id": "color-distinctness-wide",
        "name": "Color distinctness: wide marks",
        "group": "usability",
        "level": "warning",
        "description": (
            "All pairs should be noticeably different for wide marks (areas): "
            "Szafir size-dependent thresholds at p=0.5, 1.0 deg."
        ),
        "failMessage": "These color pairs ({{blame}}) are too close to distinguish on wide marks.",
        "taskTypes": ["categorical"],
        "requiredTags": [],
        "blameMode": "pair",
        "program": distinct_at("wide"),
    },
    {
        "id": "even-distribution-hue",
        "name": "Even distribution in hue",
        "group": "design",
        "level": "warning",
        "description": (
            "Sorted hue steps should be roughly even: their standard deviation at "
            "most 0.5 of the mean absolute step (Bujack et al. local speed). Only "
            "checked when the palette is actually chromatic (max LCH chroma at "
            "least 10; hue angles are numerically arbitrary for grays) and the "
            "raw hue extent is between 60 and 180 degrees; smaller reads as "
            "single-hue and larger as a wrap around 0/360."
        ),
        "failMessage": "Hues bunch up: the hue steps across the palette are uneven.",
        "taskTypes": ["sequential"],
        "requiredTags": [],
        "blameMode": "single",
        "program": lor(
            lt({"max": chroma_values()}, 10),
            lt({"extent": hue_values()}, HUE_BAND[0]),
            gt({"extent": hue_values()}, HUE_BAND[1]),
            evenness(hue_values(), EVEN_HUE_TOL),
        ),
    },
    {
        "id": "even-distribution-lightness",
        "name": "Even distribution in lightness",
        "group": "design",
        "level": "warning",
        "description": (
            "Sorted L* steps should be roughly even: their standard deviation at "
            "most 0.35 of the mean absolute step (Bujack et al. local speed; the "
            "bound is calibrated so ColorBrewer sequential schemes pass)."
        ),
        "failMessage": "Lightness bunches up: the L* steps across the palette are uneven.",
        "taskTypes": ["sequential"],
        "requiredTags": [],
        "blameMode": "single",
        "program": evenness(lab_channel_values(), EVEN_LIGHTNESS_TOL),
    },
    {
        "id": "sequential-palette-order",
        "name": "Sequential palette in appropriate order",
        "group": "usability",
        "level": "error",
        "description": (
            "A sequential palette should be monotone in L*, ascending or "
            "descending. A naive definitional check; perceptual ordering is richer."
        ),
        "failMessage": "The palette is not in a sequential (monotone L*) order.",
        "taskTypes": ["sequential"],
        "requiredTags": [],
        "blameMode": "single",
        "program": lor(monotone("up"), monotone("down")),
    },
    {
        "id": "diverging-palette-order",
        "name": "Diverging palette in appropriate order",
        "group": "usability",
        "level": "error",
        "description": (
            "A diverging palette's L* should run strictly to a single pivot and "
            "strictly back out (lightest or darkest in the middle)."
        ),
        "failMessage": "The palette does not diverge around a single lightness pivot.",
        "taskTypes": ["diverging"],
        "requiredTags": [],
        "blameMode": "single",
        "program": diverging_shape(),
    },
    {
        "id": "in-gamut",
        "name": "In gamut",
        "group": "usability",
        "level": "error",
        "description": "Every color must be representable in sRGB (all channels within [0, 1]).",
        "failMessage": "These colors ({{blame}}) fall outside the sRGB gamut.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": in_gamut_program(),
    },
    {
        "id": "max-colors",
        "name": "Max colors",
        "group": "usability",
        "level": "error",
        "description": "Palettes should carry at most 10 colors (Muth).",
        "failMessage": "The palette has too many colors; keep it to 10 or fewer.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": lte({"count": "colors"}, MAX_COLORS),
    },
    {
        "id": "avoid-extreme-colors",
        "name": "Avoid extreme colors",
        "group": "design",
        "level": "warning",
        "description": (
            "Avoid pure black, pure white, and the six sRGB corner primaries "
            "(within dE2000 of 1), per Muth."
        ),
        "failMessage": "These colors ({{blame}}) sit on an sRGB extreme (pure primary, black, or white).",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": all_colors(land(*[lnot(sim("a", hx, 1)) for hx in EXTREMES])),
    },
    {
        "id": "avoid-tetradic-palettes",
        "name": "Avoid tetradic palettes",
        "group": "design",
        "level": "warning",
        "description": (
            "Avoid four distinct colors whose hues march around the wheel in "
            "90-degree steps (within 5 degrees), per Muth."
        ),
        "failMessage": "Four of these colors form a square tetrad on the hue wheel.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": lnot(
            quant(
                "exist",
                ["a", "b", "c", "d"],
                land(
                    hue_diff_about("a", "b", 90, 5),
                    hue_diff_about("b", "c", 90, 5),
                    hue_diff_about("c", "d", 90, 5),
                ),
                where=land(
                    neq("index(a)", "index(b)"),
                    neq("index(a)", "index(c)"),
                    neq("index(a)", "index(d)"),
                    neq("index(b)", "index(c)"),
                    neq("index(b)", "index(d)"),
                    neq("index(c)", "index(d)"),
                ),
            )
        ),
    },
    {
        "id": "no-ugly-colors",
        "name": "No ugly colors",
        "group": "design",
        "level": "warning",
        "description": (
            "Avoid a small list of widely disliked mud tones (within dE2000 of 10); "
            "the list ships as program constants and is meant to be edited."
        ),
        "failMessage": "These colors ({{blame}}) land on widely disliked mud tones.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": all_colors(land(*[lnot(sim("a", hx, 10)) for hx in UGLY])),
    },
    {
        "id": "prefer-yellowish-bluish-greens",
        "name": "Prefer yellowish or bluish greens",
        "group": "design",
        "level": "warning",
        "description": (
            "Saturated middle greens (hue 128-146 with chroma above 40) read as "
            "artificial; lean yellow or blue instead (Muth)."
        ),
        "failMessage": "These colors ({{blame}}) are dead-center greens; shift them yellow or blue.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "single",
        "program": all_colors(
            lnot(land(gt(hue("a"), 128), lt(hue("a"), 146), gt(chroma("a"), 40)))
        ),
    },
    {
        "id": "require-color-complements",
        "name": "Require color complements",
        "group": "design",
        "level": "warning",
        "description": (
            "At least one pair of colors should be complementary: LCH hues 180 "
            "degrees apart within 5 degrees (classic color theory; a preference)."
        ),
        "failMessage": "No complementary hue pair found in the palette.",
        "taskTypes": ["any"],
        "requiredTags": [],
        "blameMode": "none",
        "program": quant(
            "exist", ["a", "b"], hue_diff_about("a", "b", 180, 5),
            where=lt("index(a)", "index(b)"),
        ),
    },
    {
        "id": "fair",
        "name": "Fair",
        "group": "design",
        "level": "warning",
        "description": (
            "Categorical colors should carry similar visual weight: L* extent at "
            "most 30 and LCH chroma extent at most 40 (cols4all-style fairness)."
        ),
        "failMessage": "The palette is unfair: some colors carry far more visual weight than others.",
        "taskTypes": ["categorical"],
        "requiredTags": [],
        "blameMode": "single",
        "program": land(
            lte({"extent": lab_channel_values()}, 30),
            lte({"extent": chroma_values()}, 40),
        ),
    },
]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    ids = set()
    for lint in LINTS:
        assert lint["id"] not in ids, f"duplicate id {lint['id']}"
        ids.add(lint["id"])
        path = OUT / f"{lint['id']}.json"
        path.write_text(json.dumps(lint, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(LINTS)} lints to {OUT}")


if __name__ == "__main__":
    main()
