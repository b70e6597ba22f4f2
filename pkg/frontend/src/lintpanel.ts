// The lint panel: grouped verdicts, blame chips that select the culprit
// colors, ignore toggles, three-strategy fixes with accept/reject preview,
// and a user-defined-lint form with live validation against the service.

import type { ApiClient, PaletteDoc, ReportEntry } from './api';
import { displayHex } from './color';
import { Debouncer } from './debounce';
import { colorText } from './editplane';
import type { Store } from './state';

const STATUS_ORDER = ['fail', 'evalError', 'ignored', 'pass', 'notApplicable'] as const;
const STATUS_HEADINGS: Record<string, string> = {
  fail: 'Issues',
  evalError: 'Broken lints',
  ignored: 'Ignored',
  pass: 'Passing',
  notApplicable: 'Not applicable',
};

export class LintPanel {
  readonly root: HTMLElement;
  private list: HTMLElement;
  private customizeHost: HTMLElement;
  private preview: { lintId: string; palette: PaletteDoc } | null = null;

  constructor(private store: Store, private api: ApiClient) {
    this.root = document.createElement('section');
    this.root.className = 'lint-panel';
    const note = document.createElement('p');
    note.className = 'disclaimer';
    note.textContent = 'Lint advice is imperfect; ignore anything that fights your intent.';
    this.list = document.createElement('div');
    this.list.className = 'lint-list';
    this.customizeHost = document.createElement('div');
    this.root.append(note, this.list, this.customizeHost);
    store.subscribe(() => this.render());
    this.render();
  }

  private isIgnored(lintId: string): boolean {
    const c = this.store.state.customization;
    const name = this.store.state.palette.name ?? '';
    return (
      c.globallyIgnored.includes(lintId) ||
      (c.perPaletteIgnored[name] ?? []).includes(lintId)
    );
  }

  private toggleIgnore(lintId: string): void {
    this.store.update(['customization'], (s) => {
      const ignored = s.customization.globallyIgnored;
      s.customization.globallyIgnored = ignored.includes(lintId)
        ? ignored.filter((i) => i !== lintId)
        : [...ignored, lintId];
    });
  }

  private selectBlamed(index: number): void {
    this.store.update(['selection'], (s) => {
      s.selected = [index];
    });
  }

  private async requestFix(lintId: string, strategy: 'mc' | 'heuristic' | 'llm'): Promise<void> {
    try {
      const response = await this.api.fix(
        this.store.state.palette, lintId, strategy, 7, this.store.state.userLints,
      );
      if (response.fixed && response.palette) {
        this.preview = { lintId, palette: response.palette };
      } else {
        this.preview = null;
        window.alert(`No passing ${strategy} fix found for ${lintId}.`);
      }
    } catch (err) {
      this.preview = null;
      window.alert(`Fix request failed: ${String(err)}`);
    }
    this.render();
  }

  private acceptPreview(): void {
    if (!this.preview) return;
    const palette = this.preview.palette;
    this.preview = null;
    this.store.update(['palette'], (s) => {
      s.palette = palette;
    });
  }

  private rejectPreview(): void {
    this.preview = null;
    this.render();
  }

  private blameChips(entry: ReportEntry): HTMLElement {
    const wrap = document.createElement('span');
    wrap.className = 'blame-chips';
    if (!entry.blame) return wrap;
    const palette = this.store.state.palette;
    const addChip = (index: number) => {
      const chip = document.createElement('button');
      chip.className = 'blame-chip';
      chip.setAttribute('data-blamed-index', String(index));
      const text = colorText(palette.colors[index]);
      chip.style.background = displayHex(text);
      chip.title = `${text} (color ${index})`;
      chip.addEventListener('click', () => this.selectBlamed(index));
      wrap.appendChild(chip);
    };
    if (entry.blame.mode === 'single') {
      for (const index of entry.blame.units as number[]) addChip(index);
    } else {
      for (const [i, j] of entry.blame.units as [number, number][]) {
        const pair = document.createElement('span');
        pair.className = 'blame-pair';
        wrap.appendChild(pair);
        addChip(i);
        addChip(j);
      }
    }
    return wrap;
  }

  private viewHints(entry: ReportEntry): HTMLElement[] {
    const hints: HTMLElement[] = [];
    const cvdMatch = /\b(deuteranopia|protanopia|tritanopia|grayscale)\b/i.exec(
      entry.lintId + ' ' + entry.message,
    );
    if (cvdMatch) {
      const kind = cvdMatch[1].toLowerCase();
      const button = document.createElement('button');
      button.className = 'hint';
      button.textContent = `view as ${kind}`;
      button.addEventListener('click', () => {
        this.store.update(['view', 'cvd'], (s) => {
          s.cvd = kind;
        });
      });
      hints.push(button);
    }
    const spaceMatch = /\b(lightness|hue|lch)\b/i.exec(entry.lintId);
    if (spaceMatch) {
      const button = document.createElement('button');
      button.className = 'hint';
      button.textContent = 'show in LCH';
      button.addEventListener('click', () => {
        this.store.update(['view'], (s) => {
          s.space = 'lch';
        });
      });
      hints.push(button);
    }
    return hints;
  }

  private entryRow(entry: ReportEntry): HTMLElement {
    const row = document.createElement('div');
    row.className = `lint-entry status-${entry.status} level-${entry.level}`;
    row.setAttribute('data-lint-id', entry.lintId);
    row.setAttribute('data-status', entry.status);

    const head = document.createElement('div');
    head.className = 'entry-head';
    const badge = document.createElement('span');
    badge.className = 'badge';
    badge.textContent = entry.status === 'fail' ? entry.level : entry.status;
    const title = document.createElement('span');
    title.className = 'entry-title';
    title.textContent = entry.lintId;
    head.append(badge, title);

    const actions = document.createElement('span');
    actions.className = 'entry-actions';
    const ignore = document.createElement('button');
    ignore.textContent = this.isIgnored(entry.lintId) ? 'Unignore' : 'Ignore';
    ignore.className = 'ignore-toggle';
    ignore.addEventListener('click', () => this.toggleIgnore(entry.lintId));
    actions.append(ignore);
    const customize = document.createElement('button');
    customize.textContent = 'Customize';
    customize.className = 'customize-open';
    customize.addEventListener('click', () => this.openCustomize(entry.lintId));
    actions.append(customize);
    head.append(actions);
    row.append(head);

    if (entry.status === 'fail' || entry.status === 'evalError') {
      const message = document.createElement('p');
      message.className = 'entry-message';
      message.textContent = entry.message;
      row.append(message);
    }
    if (entry.status === 'fail') {
      row.append(this.blameChips(entry));
      for (const hint of this.viewHints(entry)) row.append(hint);

      const fixes = document.createElement('div');
      fixes.className = 'fix-row';
      const label = document.createElement('span');
      label.textContent = 'Try to fix:';
      fixes.append(label);
      for (const [strategy, caption] of [
        ['heuristic', 'Heuristic'],
        ['mc', 'Monte Carlo'],
        ['llm', 'LLM'],
      ] as const) {
        const button = document.createElement('button');
        button.className = `fix-${strategy}`;
        button.textContent = caption;
        button.addEventListener('click', () => void this.requestFix(entry.lintId, strategy));
        fixes.append(button);
      }
      row.append(fixes);

      if (this.preview && this.preview.lintId === entry.lintId) {
        row.append(this.previewBlock());
      }
    }

    const program = document.createElement('details');
    const summary = document.createElement('summary');
    summary.textContent = 'program';
    const code = document.createElement('code');
    code.textContent = entry.printedProgram;
    program.append(summary, code);
    row.append(program);
    return row;
  }

  private swatchRow(palette: PaletteDoc): HTMLElement {
    const row = document.createElement('div');
    row.className = 'swatch-row';
    for (const entry of palette.colors) {
      const cell = document.createElement('span');
      cell.className = 'mini-swatch';
      cell.style.background = displayHex(colorText(entry));
      row.append(cell);
    }
    return row;
  }

  private previewBlock(): HTMLElement {
    const block = document.createElement('div');
    block.className = 'fix-preview';
    const caption = document.createElement('p');
    caption.textContent = 'Proposed fix (current above, proposed below):';
    block.append(caption, this.swatchRow(this.store.state.palette), this.swatchRow(this.preview!.palette));
    const accept = document.createElement('button');
    accept.className = 'fix-accept';
    accept.textContent = 'Accept';
    accept.addEventListener('click', () => this.acceptPreview());
    const reject = document.createElement('button');
    reject.className = 'fix-reject';
    reject.textContent = 'Reject';
    reject.addEventListener('click', () => this.rejectPreview());
    block.append(accept, reject);
    return block;
  }

  private openCustomize(lintId: string): void {
    this.customizeHost.textContent = '';
    const form = document.createElement('div');
    form.className = 'customize-form';
    const heading = document.createElement('h3');
    heading.textContent = `Customize ${lintId}`;
    const textarea = document.createElement('textarea');
    textarea.className = 'lint-editor';
    textarea.rows = 16;
    const status = document.createElement('p');
    status.className = 'validation-status';

    const lints = this.store.state.lastReport?.entries ?? [];
    void lints;
    this.api.lints().then((all) => {
      const found = all.find((l) => l.id === lintId);
      const overridden = this.store.state.customization.overrides[lintId];
      const doc = overridden ?? (found
        ? {
            id: found.id, name: found.name, group: found.group, level: found.level,
            description: found.description, failMessage: found.failMessage,
            taskTypes: found.taskTypes, requiredTags: found.requiredTags,
            blameMode: found.blameMode, program: found.program,
          }
        : null);
      textarea.value = JSON.stringify(doc, null, 2);
    });

    const validator = new Debouncer(300, () => {
      let parsed: unknown;
      try {
        parsed = JSON.parse(textarea.value);
      } catch (err) {
        status.textContent = `invalid JSON: ${String(err)}`;
        status.className = 'validation-status invalid';
        return;
      }
      void this.api.validateLint(parsed).then((result) => {
        if (result.ok) {
          status.textContent = `ok - ${result.printedProgram ?? ''}`;
          status.className = 'validation-status valid';
        } else {
          status.textContent = (result.errors ?? [])
            .map((e) => `${e.path ?? ''} ${e.message}`.trim())
            .join('; ');
          status.className = 'validation-status invalid';
        }
      });
    });
    textarea.addEventListener('input', () => validator.schedule());

    const save = document.createElement('button');
    save.className = 'customize-save';
    save.textContent = 'Save override';
    save.addEventListener('click', () => {
      let parsed: { id?: string };
      try {
        parsed = JSON.parse(textarea.value);
      } catch {
        return;
      }
      void this.api.validateLint(parsed).then((result) => {
        if (!result.ok) return;
        this.store.update(['customization'], (s) => {
          if (parsed.id === lintId) {
            s.customization.overrides[lintId] = parsed;
          } else {
            s.userLints = [...s.userLints.filter((l) => (l as { id?: string }).id !== parsed.id), parsed];
          }
        });
        this.customizeHost.textContent = '';
      });
    });
    const close = document.createElement('button');
    close.textContent = 'Close';
    close.addEventListener('click', () => (this.customizeHost.textContent = ''));

    form.append(heading, textarea, status, save, close);
    this.customizeHost.append(form);
  }

  render(): void {
    this.list.textContent = '';
    const report = this.store.state.lastReport;
    if (!report) {
      const empty = document.createElement('p');
      empty.className = 'no-report';
      empty.textContent = 'No report yet.';
      this.list.append(empty);
      return;
    }
    for (const status of STATUS_ORDER) {
      const entries = report.entries.filter((e) => e.status === status);
      if (!entries.length) continue;
      const section = document.createElement('div');
      section.className = `lint-group group-${status}`;
      const heading = document.createElement('h2');
      heading.textContent = `${STATUS_HEADINGS[status]} (${entries.length})`;
      section.append(heading);
      for (const entry of entries) section.append(this.entryRow(entry));
      this.list.append(section);
    }
  }
}
