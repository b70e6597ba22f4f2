// Editor state: the palette being edited, selection, view options,
// customization, and the last report. Every mutation notifies subscribers
// (the app schedules a re-check); state round-trips through localStorage.
// A monotone request counter discards lint responses that are older than the
// latest edit.

import type { CustomizationDoc, PaletteDoc, Report } from './api';
import type { Space } from './color';

export interface EditorState {
  palette: PaletteDoc;
  selected: number[];
  space: Space;
  thirdAxis: number;
  cvd: string | null;
  cvdHexes: string[] | null; // simulated swatches for the active overlay
  customization: CustomizationDoc;
  userLints: unknown[];
  lastReport: Report | null;
}

export const STORAGE_KEY = 'chromalint.editor.v1';

export function defaultPalette(): PaletteDoc {
  return {
    name: 'new palette',
    type: 'categorical',
    background: '#ffffff',
    colors: ['#0084ae', '#e25c36'],
    tags: [],
  };
}

export function defaultState(): EditorState {
  return {
    palette: defaultPalette(),
    selected: [],
    space: 'lab',
    thirdAxis: 55,
    cvd: null,
    cvdHexes: null,
    customization: { globallyIgnored: [], perPaletteIgnored: {}, overrides: {} },
    userLints: [],
    lastReport: null,
  };
}

type Listener = (state: EditorState, changed: string[]) => void;

export class Store {
  state: EditorState;
  private listeners: Listener[] = [];
  private requestCounter = 0;

  constructor(private storage: Pick<Storage, 'getItem' | 'setItem'> | null = null) {
    this.state = this.loadPersisted() ?? defaultState();
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  update(changed: string[], fn: (state: EditorState) => void): void {
    fn(this.state);
    this.persist();
    for (const listener of [...this.listeners]) listener(this.state, changed);
  }

  /** Tag an outgoing check request; stale responses are dropped. */
  issueRequestId(): number {
    return ++this.requestCounter;
  }

  acceptResponse(id: number): boolean {
    // Only the most recently issued request may land.
    return id === this.requestCounter;
  }

  private loadPersisted(): EditorState | null {
    if (!this.storage) return null;
    try {
      const raw = this.storage.getItem(STORAGE_KEY);
      if (!raw) return null;
      const parsed = JSON.parse(raw) as Partial<EditorState>;
      return { ...defaultState(), ...parsed, lastReport: null, cvdHexes: null };
    } catch {
      return null;
    }
  }

  persist(): void {
    if (!this.storage) return;
    const { lastReport, cvdHexes, ...rest } = this.state;
    this.storage.setItem(STORAGE_KEY, JSON.stringify(rest));
  }
}
