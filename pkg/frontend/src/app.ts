// Application wiring: header controls, edit plane, lint panel, and the
// debounced evaluate loop. Every palette or customization mutation schedules
// a re-check; responses older than the latest edit are discarded.

import { ApiClient, type PaletteDoc } from './api';
import { Debouncer } from './debounce';
import { EditPlane } from './editplane';
import { LintPanel } from './lintpanel';
import { Store } from './state';

export interface App {
  store: Store;
  api: ApiClient;
  refreshNow(): Promise<void>;
}

export function createApp(root: HTMLElement, api: ApiClient, store: Store, debounceMs = 150): App {
  root.textContent = '';
  root.className = 'app';

  const header = document.createElement('header');
  header.className = 'toolbar';

  const nameInput = document.createElement('input');
  nameInput.className = 'palette-name';
  nameInput.value = store.state.palette.name ?? '';
  nameInput.addEventListener('change', () => {
    store.update(['palette'], (s) => {
      s.palette.name = nameInput.value;
    });
  });

  const typeSelect = document.createElement('select');
  typeSelect.className = 'palette-type';
  for (const t of ['categorical', 'sequential', 'diverging']) {
    const option = document.createElement('option');
    option.value = t;
    option.textContent = t;
    typeSelect.append(option);
  }
  typeSelect.value = store.state.palette.type;
  typeSelect.addEventListener('change', () => {
    store.update(['palette'], (s) => {
      s.palette.type = typeSelect.value as PaletteDoc['type'];
    });
  });

  const tagsInput = document.createElement('input');
  tagsInput.className = 'palette-tags';
  tagsInput.placeholder = 'context tags, comma separated';
  tagsInput.value = (store.state.palette.tags ?? []).join(', ');
  tagsInput.addEventListener('change', () => {
    store.update(['palette'], (s) => {
      s.palette.tags = tagsInput.value.split(',').map((t) => t.trim()).filter(Boolean);
    });
  });

  const spaceSelect = document.createElement('select');
  spaceSelect.className = 'space-select';
  for (const space of ['lab', 'lch', 'hsl']) {
    const option = document.createElement('option');
    option.value = space;
    option.textContent = space.toUpperCase();
    spaceSelect.append(option);
  }
  spaceSelect.value = store.state.space;
  spaceSelect.addEventListener('change', () => {
    store.update(['view'], (s) => {
      s.space = spaceSelect.value as typeof s.space;
    });
  });

  const cvdSelect = document.createElement('select');
  cvdSelect.className = 'cvd-select';
  for (const kind of ['none', 'deuteranopia', 'protanopia', 'tritanopia', 'grayscale']) {
    const option = document.createElement('option');
    option.value = kind;
    option.textContent = kind === 'none' ? 'true color' : kind;
    cvdSelect.append(option);
  }
  cvdSelect.value = store.state.cvd ?? 'none';
  cvdSelect.addEventListener('change', () => {
    store.update(['view', 'cvd'], (s) => {
      s.cvd = cvdSelect.value === 'none' ? null : cvdSelect.value;
    });
  });

  const status = document.createElement('span');
  status.className = 'check-status';
  header.append(nameInput, typeSelect, tagsInput, spaceSelect, cvdSelect, status);

  const body = document.createElement('main');
  const plane = new EditPlane(store);
  const panel = new LintPanel(store, api);
  body.append(plane.root, panel.root);
  root.append(header, body);

  async function runCheck(): Promise<void> {
    const id = store.issueRequestId();
    status.textContent = 'checking...';
    try {
      const report = await api.evaluate(
        store.state.palette, store.state.customization, store.state.userLints,
      );
      if (!store.acceptResponse(id)) return; // superseded by a newer edit
      store.update(['report'], (s) => {
        s.lastReport = report;
      });
      status.textContent = 'checked';
    } catch (err) {
      if (store.acceptResponse(id)) status.textContent = `check failed: ${String(err)}`;
    }
  }

  async function refreshOverlay(): Promise<void> {
    const kind = store.state.cvd;
    if (!kind) {
      store.update(['overlay'], (s) => {
        s.cvdHexes = null;
      });
      return;
    }
    const { palette } = await api.simulate(store.state.palette, kind);
    const hexes = palette.colors.map((c) => (typeof c === 'string' ? c : c.color));
    store.update(['overlay'], (s) => {
      s.cvdHexes = hexes;
    });
  }

  const checker = new Debouncer(debounceMs, () => void runCheck());
  store.subscribe((_state, changed) => {
    if (changed.includes('palette') || changed.includes('customization')) {
      checker.schedule();
      if (store.state.cvd) void refreshOverlay();
    }
    if (changed.includes('cvd')) void refreshOverlay();
    if (changed.includes('view')) {
      spaceSelect.value = store.state.space;
      cvdSelect.value = store.state.cvd ?? 'none';
    }
    if (changed.includes('palette')) {
      nameInput.value = store.state.palette.name ?? '';
      typeSelect.value = store.state.palette.type;
      tagsInput.value = (store.state.palette.tags ?? []).join(', ');
    }
  });

  void runCheck();
  return { store, api, refreshNow: runCheck };
}
