// Display-only color plumbing: parsing palette color text, projecting colors
// onto the edit plane's axes, and painting swatches. Perceptual judgments
// (contrast, difference, CVD, naming) always come from the service.

export type Space = 'lab' | 'lch' | 'hsl';
export type Coords = [number, number, number];

const HEX_RE = /^#([0-9a-f]{3}|[0-9a-f]{6})$/i;
const FUNC_RE = /^([a-z]+)\(\s*(-?[\d.]+)\s*,\s*(-?[\d.]+)\s*,\s*(-?[\d.]+)\s*\)$/i;

export interface ParsedColor {
  space: 'srgb' | 'lab' | 'lch' | 'hsl' | 'hsv';
  coords: Coords;
}

export function parseColorText(text: string): ParsedColor | null {
  const hex = HEX_RE.exec(text.trim());
  if (hex) {
    let digits = hex[1].toLowerCase();
    if (digits.length === 3) digits = digits.split('').map((d) => d + d).join('');
    return {
      space: 'srgb',
      coords: [0, 2, 4].map((i) => parseInt(digits.slice(i, i + 2), 16) / 255) as Coords,
    };
  }
  const fn = FUNC_RE.exec(text.trim());
  if (fn) {
    const space = fn[1].toLowerCase();
    if (!['srgb', 'lab', 'lch', 'hsl', 'hsv'].includes(space)) return null;
    return {
      space: space as ParsedColor['space'],
      coords: [parseFloat(fn[2]), parseFloat(fn[3]), parseFloat(fn[4])] as Coords,
    };
  }
  return null;
}

export function formatColorText(space: Space, coords: Coords): string {
  const fmt = (v: number) => Number(v.toFixed(3)).toString();
  return `${space}(${fmt(coords[0])}, ${fmt(coords[1])}, ${fmt(coords[2])})`;
}

// -- sRGB <-> LAB (D65) <-> LCH, sRGB <-> HSL ---------------------------------

const lin = (v: number) => (v <= 0.04045 ? v / 12.92 : ((v + 0.055) / 1.055) ** 2.4);
const delin = (v: number) => (v <= 0.0031308 ? v * 12.92 : 1.055 * v ** (1 / 2.4) - 0.055);
const WHITE = [0.95047, 1.0, 1.08883];
const EPS = 216 / 24389;
const KAPPA = 24389 / 27;

function srgbToLab([r, g, b]: Coords): Coords {
  const [lr, lg, lb] = [lin(r), lin(g), lin(b)];
  const xyz = [
    0.4124564 * lr + 0.3575761 * lg + 0.1804375 * lb,
    0.2126729 * lr + 0.7151522 * lg + 0.072175 * lb,
    0.0193339 * lr + 0.119192 * lg + 0.9503041 * lb,
  ];
  const f = (t: number) => (t > EPS ? Math.cbrt(t) : (KAPPA * t + 16) / 116);
  const [fx, fy, fz] = xyz.map((v, i) => f(v / WHITE[i]));
  return [116 * fy - 16, 500 * (fx - fy), 200 * (fy - fz)];
}

function labToSrgb([l, a, b]: Coords): Coords {
  const fy = (l + 16) / 116;
  const fx = fy + a / 500;
  const fz = fy - b / 200;
  const finv = (t: number) => (t ** 3 > EPS ? t ** 3 : (116 * t - 16) / KAPPA);
  const [x, y, z] = [finv(fx) * WHITE[0], finv(fy) * WHITE[1], finv(fz) * WHITE[2]];
  return [
    delin(3.2404542 * x - 1.5371385 * y - 0.4985314 * z),
    delin(-0.969266 * x + 1.8760108 * y + 0.041556 * z),
    delin(0.0556434 * x - 0.2040259 * y + 1.0572252 * z),
  ];
}

function labToLch([l, a, b]: Coords): Coords {
  const c = Math.hypot(a, b);
  const h = ((Math.atan2(b, a) * 180) / Math.PI + 360) % 360;
  return [l, c, h];
}

function lchToLab([l, c, h]: Coords): Coords {
  const hr = (h * Math.PI) / 180;
  return [l, c * Math.cos(hr), c * Math.sin(hr)];
}

function srgbToHsl([r, g, b]: Coords): Coords {
  const max = Math.max(r, g, b);
  const min = Math.min(r, g, b);
  const l = (max + min) / 2;
  if (max === min) return [0, 0, l];
  const d = max - min;
  const s = l > 0.5 ? d / (2 - max - min) : d / (max + min);
  let h: number;
  if (max === r) h = ((g - b) / d + (g < b ? 6 : 0)) * 60;
  else if (max === g) h = ((b - r) / d + 2) * 60;
  else h = ((r - g) / d + 4) * 60;
  return [h % 360, s, l];
}

function hslToSrgb([h, s, l]: Coords): Coords {
  const k = (n: number) => (n + h / 30) % 12;
  const a = s * Math.min(l, 1 - l);
  const f = (n: number) => l - a * Math.max(-1, Math.min(k(n) - 3, 9 - k(n), 1));
  return [f(0), f(8), f(4)];
}

function hsvToSrgb([h, s, v]: Coords): Coords {
  const l = v * (1 - s / 2);
  const sl = l === 0 || l === 1 ? 0 : (v - l) / Math.min(l, 1 - l);
  return hslToSrgb([h, sl, l]);
}

function toSrgb(c: ParsedColor): Coords {
  switch (c.space) {
    case 'srgb':
      return c.coords;
    case 'lab':
      return labToSrgb(c.coords);
    case 'lch':
      return labToSrgb(lchToLab(c.coords));
    case 'hsl':
      return hslToSrgb(c.coords);
    case 'hsv':
      return hsvToSrgb(c.coords);
  }
}

/** Plane coordinates of a palette color in the active space. */
export function toSpaceCoords(text: string, space: Space): Coords | null {
  const parsed = parseColorText(text);
  if (!parsed) return null;
  if (parsed.space === space) return parsed.coords;
  const srgb = toSrgb(parsed);
  if (space === 'hsl') return srgbToHsl(srgb);
  const lab = srgbToLab(srgb.map((v) => Math.min(1, Math.max(0, v))) as Coords);
  return space === 'lab' ? lab : labToLch(lab);
}

/** CSS-paintable hex for a palette color (gamut-clamped). */
export function displayHex(text: string): string {
  const parsed = parseColorText(text);
  if (!parsed) return '#000000';
  const srgb = toSrgb(parsed).map((v) => Math.min(1, Math.max(0, v)));
  return (
    '#' +
    srgb
      .map((v) => Math.round(v * 255).toString(16).padStart(2, '0'))
      .join('')
  );
}

export function isOutOfGamut(text: string): boolean {
  const parsed = parseColorText(text);
  if (!parsed) return false;
  return toSrgb(parsed).some((v) => v < -1e-6 || v > 1 + 1e-6);
}
