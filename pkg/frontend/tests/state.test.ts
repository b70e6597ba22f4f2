import { describe, expect, it } from 'vitest';
import { STORAGE_KEY, Store, defaultState } from '../src/state';

function fakeStorage() {
  const map = new Map<string, string>();
  return {
    getItem: (k: string) => map.get(k) ?? null,
    setItem: (k: string, v: string) => void map.set(k, v),
    dump: () => map,
  };
}

describe('Store', () => {
  it('persists mutations and restores them', () => {
    const storage = fakeStorage();
    const store = new Store(storage);
    store.update(['palette'], (s) => {
      s.palette.name = 'persisted';
      s.space = 'lch';
    });
    expect(storage.dump().has(STORAGE_KEY)).toBe(true);

    const reloaded = new Store(storage);
    expect(reloaded.state.palette.name).toBe('persisted');
    expect(reloaded.state.space).toBe('lch');
    expect(reloaded.state.lastReport).toBeNull(); // reports are not persisted
  });

  it('survives corrupted storage', () => {
    const storage = fakeStorage();
    storage.setItem(STORAGE_KEY, '{nope');
    const store = new Store(storage);
    expect(store.state.palette.type).toBe(defaultState().palette.type);
  });

  it('drops responses superseded by newer edits', () => {
    const store = new Store(null);
    const first = store.issueRequestId();
    const second = store.issueRequestId();
    expect(store.acceptResponse(first)).toBe(false); // an edit happened since
    expect(store.acceptResponse(second)).toBe(true);
  });

  it('notifies subscribers with the changed keys', () => {
    const store = new Store(null);
    const seen: string[][] = [];
    store.subscribe((_s, changed) => seen.push(changed));
    store.update(['palette'], (s) => void (s.palette.name = 'x'));
    expect(seen).toEqual([['palette']]);
  });
});
