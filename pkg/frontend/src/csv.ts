/**
 * Parser for the decoding-success curve CSV schema:
 *   p,g,logit_g,mode,half_width,samples
 * where logit_g is empty when g is exactly 0 or 1, and samples is empty
 * on exact rows.  Any deviation is reported with the offending column
 * named, so a schema drift upstream fails loudly.
 */

export interface CurveRow {
  p: number;
  g: number;
  logitG: number | null;
  mode: 'exact' | 'mc';
  halfWidth: number;
  samples: number | null;
}

export const CURVE_HEADER = 'p,g,logit_g,mode,half_width,samples';

export class SchemaError extends Error {
  readonly column: string;

  constructor(column: string, message: string) {
    super(`column "${column}": ${message}`);
    this.column = column;
  }
}

function requireNumber(column: string, raw: string, line: number): number {
  const value = Number(raw);
  if (raw === '' || !Number.isFinite(value)) {
    throw new SchemaError(column, `expected a finite number, got "${raw}" (line ${line})`);
  }
  return value;
}

export function parseCurveCsv(text: string): CurveRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0 || lines[0] !== CURVE_HEADER) {
    throw new SchemaError('header', `expected "${CURVE_HEADER}", got "${lines[0] ?? ''}"`);
  }
  const rows: CurveRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = (lines[i] as string).split(',');
    if (parts.length !== 6) {
      throw new SchemaError('row', `expected 6 cells, got ${parts.length} (line ${i + 1})`);
    }
    const [pRaw, gRaw, logitRaw, modeRaw, hwRaw, samplesRaw] =
      parts as [string, string, string, string, string, string];
    const p = requireNumber('p', pRaw, i + 1);
    const g = requireNumber('g', gRaw, i + 1);
    if (p < 0 || p > 1) throw new SchemaError('p', `noise rate ${p} outside [0,1] (line ${i + 1})`);
    if (g < 0 || g > 1) throw new SchemaError('g', `probability ${g} outside [0,1] (line ${i + 1})`);
    const logitG = logitRaw === '' ? null : requireNumber('logit_g', logitRaw, i + 1);
    if (modeRaw !== 'exact' && modeRaw !== 'mc') {
      throw new SchemaError('mode', `expected exact|mc, got "${modeRaw}" (line ${i + 1})`);
    }
    const halfWidth = requireNumber('half_width', hwRaw, i + 1);
    const samples = samplesRaw === '' ? null : requireNumber('samples', samplesRaw, i + 1);
    rows.push({ p, g, logitG, mode: modeRaw, halfWidth, samples });
  }
  return rows;
}
