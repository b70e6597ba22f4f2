// Typed client for the lint service. All palette judgments (lint verdicts,
// blame, simulation, fixes, program validation) come from these endpoints;
// the UI never re-derives them locally.

export type ColorEntry = string | { color: string; tags: string[] };

export interface PaletteDoc {
  name?: string;
  type: 'categorical' | 'sequential' | 'diverging';
  background: string;
  colors: ColorEntry[];
  tags?: string[];
}

export interface BlameDoc {
  mode: 'single' | 'pair';
  units: number[] | [number, number][];
  hexes: string[] | [string, string][];
}

export interface ReportEntry {
  lintId: string;
  status: 'pass' | 'fail' | 'ignored' | 'notApplicable' | 'evalError';
  level: 'error' | 'warning';
  group: string;
  message: string;
  printedProgram: string;
  blame: BlameDoc | null;
}

export interface Report {
  paletteName: string;
  entries: ReportEntry[];
}

export interface LintInfo {
  id: string;
  name: string;
  group: string;
  level: string;
  description: string;
  failMessage: string;
  taskTypes: string[];
  requiredTags: string[];
  blameMode: string;
  program: unknown;
  printedProgram: string;
}

export interface FixResponse {
  fixed: boolean;
  strategy: string;
  iterations?: number;
  palette?: PaletteDoc;
}

export interface CustomizationDoc {
  globallyIgnored: string[];
  perPaletteIgnored: Record<string, string[]>;
  overrides: Record<string, unknown>;
}

export interface ValidationResult {
  ok: boolean;
  id?: string;
  printedProgram?: string;
  errors?: { path?: string; message: string }[];
}

export class ApiError extends Error {
  constructor(public status: number, public detail: unknown) {
    super(`service error ${status}`);
  }
}

export class ApiClient {
  constructor(private base: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.base + path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await response.json().catch(() => null));
    }
    return response.json() as Promise<T>;
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.base + '/health');
      return response.ok;
    } catch {
      return false;
    }
  }

  async lints(): Promise<LintInfo[]> {
    const response = await fetch(this.base + '/lints');
    if (!response.ok) throw new ApiError(response.status, null);
    const body = (await response.json()) as { lints: LintInfo[] };
    return body.lints;
  }

  evaluate(
    palette: PaletteDoc,
    customization?: CustomizationDoc,
    userLints?: unknown[],
  ): Promise<Report> {
    const body: Record<string, unknown> = { palette };
    if (customization) body.customization = customization;
    if (userLints && userLints.length) body.userLints = userLints;
    return this.post<Report>('/evaluate', body);
  }

  fix(
    palette: PaletteDoc,
    lintId: string,
    strategy: 'mc' | 'heuristic' | 'llm',
    seed = 0,
    userLints?: unknown[],
  ): Promise<FixResponse> {
    const body: Record<string, unknown> = { palette, lintId, strategy, seed };
    if (userLints && userLints.length) body.userLints = userLints;
    return this.post<FixResponse>('/fix', body);
  }

  validateLint(lint: unknown): Promise<ValidationResult> {
    return this.post<ValidationResult>('/lints/validate', { lint }).catch((err) => {
      if (err instanceof ApiError && err.status === 400 && err.detail) {
        return err.detail as ValidationResult;
      }
      throw err;
    });
  }

  simulate(palette: PaletteDoc, type: string): Promise<{ palette: PaletteDoc }> {
    return this.post<{ palette: PaletteDoc }>('/simulate', { palette, type });
  }
}
