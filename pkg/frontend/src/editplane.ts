// The edit plane: palette colors plotted on a 2D projection of the active
// space (third axis on a slider). Click empty space to add a color, drag dots
// to move colors, shift-click to multi-select; the background swatch is
// selectable too. With a CVD overlay active, dots paint in their simulated
// colors (fetched from the service, never computed here).

import type { ColorEntry } from './api';
import { displayHex, formatColorText, isOutOfGamut, toSpaceCoords, type Coords, type Space } from './color';
import type { EditorState, Store } from './state';

const SIZE = 420;
const DOT = 11;

interface AxisSpec {
  x: [number, number];
  y: [number, number];
  z: [number, number];
  labels: [string, string, string];
}

const AXES: Record<Space, AxisSpec> = {
  lab: { x: [-125, 125], y: [-125, 125], z: [0, 100], labels: ['a*', 'b*', 'L*'] },
  lch: { x: [0, 360], y: [0, 150], z: [0, 100], labels: ['h', 'C', 'L'] },
  hsl: { x: [0, 360], y: [0, 1], z: [0, 1], labels: ['h', 's', 'l'] },
};

export function colorText(entry: ColorEntry): string {
  return typeof entry === 'string' ? entry : entry.color;
}

export function withColorText(entry: ColorEntry, text: string): ColorEntry {
  return typeof entry === 'string' ? text : { ...entry, color: text };
}

function project(space: Space, coords: Coords): { px: number; py: number } {
  const spec = AXES[space];
  const x = space === 'lab' ? coords[1] : space === 'lch' ? coords[2] : coords[0];
  const y = space === 'lab' ? coords[2] : coords[1];
  const px = ((x - spec.x[0]) / (spec.x[1] - spec.x[0])) * SIZE;
  const py = SIZE - ((y - spec.y[0]) / (spec.y[1] - spec.y[0])) * SIZE;
  return { px, py };
}

function unproject(space: Space, px: number, py: number, third: number): Coords {
  const spec = AXES[space];
  const x = spec.x[0] + (px / SIZE) * (spec.x[1] - spec.x[0]);
  const y = spec.y[0] + ((SIZE - py) / SIZE) * (spec.y[1] - spec.y[0]);
  if (space === 'lab') return [third, x, y];
  if (space === 'lch') return [third, y, x];
  return [x, y, third];
}

export class EditPlane {
  readonly root: HTMLElement;
  private svg: SVGSVGElement;
  private slider: HTMLInputElement;
  private sliderLabel: HTMLElement;
  private bgRow: HTMLElement;
  private dragging: number | null = null;

  constructor(private store: Store) {
    this.root = document.createElement('section');
    this.root.className = 'edit-plane';

    this.svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
    this.svg.setAttribute('viewBox', `0 0 ${SIZE} ${SIZE}`);
    this.svg.setAttribute('class', 'plane');
    this.svg.addEventListener('mousedown', (e) => this.onDown(e));
    this.svg.addEventListener('mousemove', (e) => this.onMove(e));
    this.svg.addEventListener('mouseup', () => (this.dragging = null));
    this.svg.addEventListener('mouseleave', () => (this.dragging = null));

    const sliderRow = document.createElement('div');
    sliderRow.className = 'slider-row';
    this.sliderLabel = document.createElement('span');
    this.slider = document.createElement('input');
    this.slider.type = 'range';
    this.slider.className = 'third-axis';
    this.slider.addEventListener('input', () => this.onSlider());
    sliderRow.append(this.sliderLabel, this.slider);

    this.bgRow = document.createElement('div');
    this.bgRow.className = 'background-row';

    this.root.append(this.svg, sliderRow, this.bgRow);
    store.subscribe(() => this.render());
    this.render();
  }

  private planePoint(e: MouseEvent): { px: number; py: number } {
    const rect = this.svg.getBoundingClientRect();
    const scaleX = rect.width ? SIZE / rect.width : 1;
    const scaleY = rect.height ? SIZE / rect.height : 1;
    return { px: (e.clientX - rect.left) * scaleX, py: (e.clientY - rect.top) * scaleY };
  }

  private onDown(e: MouseEvent): void {
    const target = e.target as Element;
    const indexAttr = target.getAttribute && target.getAttribute('data-index');
    if (indexAttr !== null && indexAttr !== undefined && indexAttr !== '') {
      const index = Number(indexAttr);
      const selected = this.store.state.selected;
      if (e.shiftKey) {
        this.store.update(['selection'], (s) => {
          s.selected = selected.includes(index)
            ? selected.filter((i) => i !== index)
            : [...selected, index];
        });
      } else if (!selected.includes(index)) {
        this.store.update(['selection'], (s) => {
          s.selected = [index];
        });
      }
      this.dragging = index;
      return;
    }
    // Empty plane: add a color at the click point in the active space.
    const { px, py } = this.planePoint(e);
    const state = this.store.state;
    const coords = unproject(state.space, px, py, state.thirdAxis);
    const text = formatColorText(state.space, coords);
    this.store.update(['palette'], (s) => {
      s.palette.colors.push(text);
      s.selected = [s.palette.colors.length - 1];
    });
  }

  private onMove(e: MouseEvent): void {
    if (this.dragging === null) return;
    const { px, py } = this.planePoint(e);
    const state = this.store.state;
    const anchor = this.dragging;
    const anchorCoords = toSpaceCoords(colorText(state.palette.colors[anchor]), state.space);
    if (!anchorCoords) return;
    const target = unproject(state.space, px, py, anchorCoords[state.space === 'hsl' ? 2 : 0]);
    const moving = state.selected.includes(anchor) ? state.selected : [anchor];
    this.store.update(['palette'], (s) => {
      for (const i of moving) {
        const current = toSpaceCoords(colorText(s.palette.colors[i]), s.space);
        if (!current) continue;
        const next: Coords = [...current] as Coords;
        if (i === anchor) {
          next[0] = target[0];
          next[1] = target[1];
          next[2] = target[2];
        } else {
          // Group drags preserve offsets in the projected axes.
          const anchorNow = toSpaceCoords(colorText(s.palette.colors[anchor]), s.space)!;
          for (let axis = 0; axis < 3; axis++) {
            next[axis] = current[axis] + (target[axis] - anchorNow[axis]);
          }
        }
        s.palette.colors[i] = withColorText(s.palette.colors[i], formatColorText(s.space, next));
      }
    });
  }

  private onSlider(): void {
    const value = Number(this.slider.value);
    this.store.update(['view'], (s) => {
      s.thirdAxis = value;
    });
    const state = this.store.state;
    if (state.selected.length) {
      this.store.update(['palette'], (s) => {
        for (const i of s.selected) {
          const coords = toSpaceCoords(colorText(s.palette.colors[i]), s.space);
          if (!coords) continue;
          const next: Coords = [...coords] as Coords;
          next[s.space === 'hsl' ? 2 : 0] = value;
          s.palette.colors[i] = withColorText(s.palette.colors[i], formatColorText(s.space, next));
        }
      });
    }
  }

  render(): void {
    const state: EditorState = this.store.state;
    const spec = AXES[state.space];
    this.slider.min = String(spec.z[0]);
    this.slider.max = String(spec.z[1]);
    this.slider.step = String((spec.z[1] - spec.z[0]) / 100);
    this.slider.value = String(state.thirdAxis);
    this.sliderLabel.textContent = `${spec.labels[2]} = ${Number(state.thirdAxis.toFixed(2))}`;

    while (this.svg.firstChild) this.svg.removeChild(this.svg.firstChild);
    const frame = document.createElementNS('http://www.w3.org/2000/svg', 'rect');
    frame.setAttribute('width', String(SIZE));
    frame.setAttribute('height', String(SIZE));
    frame.setAttribute('class', 'plane-frame');
    this.svg.appendChild(frame);

    state.palette.colors.forEach((entry, index) => {
      const text = colorText(entry);
      const coords = toSpaceCoords(text, state.space);
      if (!coords) return;
      const { px, py } = project(state.space, coords);
      const dot = document.createElementNS('http://www.w3.org/2000/svg', 'circle');
      dot.setAttribute('cx', String(px));
      dot.setAttribute('cy', String(py));
      dot.setAttribute('r', String(DOT));
      dot.setAttribute('data-index', String(index));
      const paint = state.cvdHexes ? state.cvdHexes[index] : displayHex(text);
      dot.setAttribute('fill', paint);
      let cls = 'swatch-dot';
      if (state.selected.includes(index)) cls += ' selected';
      if (isOutOfGamut(text)) cls += ' out-of-gamut';
      dot.setAttribute('class', cls);
      this.svg.appendChild(dot);
    });

    this.bgRow.textContent = '';
    const label = document.createElement('span');
    label.textContent = 'background';
    const bg = document.createElement('button');
    bg.className = 'bg-swatch';
    bg.style.background = displayHex(state.palette.background);
    bg.title = state.palette.background;
    bg.addEventListener('click', () => {
      const next = window.prompt('Background color', state.palette.background);
      if (next) {
        this.store.update(['palette'], (s) => {
          s.palette.background = next;
        });
      }
    });
    this.bgRow.append(label, bg);
  }
}
