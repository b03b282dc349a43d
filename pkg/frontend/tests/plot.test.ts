import * as fs from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';
import { parseCurveCsv } from '../src/csv.js';
import { buildFigure, renderWithReport } from '../src/plot.js';

const FIXTURES = path.join(__dirname, 'fixtures');
const exactRows = parseCurveCsv(
  fs.readFileSync(path.join(FIXTURES, 'rep-2-8.exact.csv'), 'utf8'));
const mcRows = parseCurveCsv(
  fs.readFileSync(path.join(FIXTURES, 'rep-2-8.mc.csv'), 'utf8'));

describe('buildFigure', () => {
  it('renders the exact curve with the envelope overlay', () => {
    const svg = buildFigure({
      curves: [{ label: 'rep-2-8', rows: exactRows }],
      overlay: { dMin: 8, q: 2, p0: 0.1 },
    });
    expect(svg.startsWith('<svg xmlns="http://www.w3.org/2000/svg"')).toBe(true);
    expect(svg.trimEnd().endsWith('</svg>')).toBe(true);
    expect((svg.match(/class="curve"/g) ?? []).length).toBe(3); // curve + 2 overlay series
    expect(svg).toContain('stroke-dasharray');
    expect(svg).toContain('envelope');
    expect(svg).not.toContain('class="band"');
  });

  it('is byte-deterministic', () => {
    const spec = {
      curves: [{ label: 'rep-2-8', rows: exactRows }],
      overlay: { dMin: 8, q: 2, p0: 0.1 },
    };
    expect(buildFigure(spec)).toBe(buildFigure(spec));
  });

  it('draws a confidence band exactly when Monte Carlo rows are present', () => {
    const withBand = buildFigure({ curves: [{ label: 'mc', rows: mcRows }] });
    expect((withBand.match(/class="band"/g) ?? []).length).toBe(1);
    const noBand = buildFigure({ curves: [{ label: 'exact', rows: exactRows }] });
    expect(noBand).not.toContain('class="band"');
  });

  it('plots several curves in input order', () => {
    const svg = buildFigure({
      curves: [
        { label: 'exact', rows: exactRows },
        { label: 'mc', rows: mcRows },
      ],
    });
    expect((svg.match(/class="curve"/g) ?? []).length).toBe(2);
    expect(svg.indexOf('>exact<')).toBeLessThan(svg.indexOf('>mc<'));
  });

  it('supports the log-odds scale, skipping undefined endpoints', () => {
    const svg = buildFigure({ curves: [{ label: 'steepness', rows: exactRows }], logit: true });
    expect(svg).toContain('log-odds of decoding success');
    // row at p=0 has g=1 and no logit: the polyline must have one point
    // fewer than the row count
    const d = /class="curve"[^]*?d="([^"]+)"|d="([^"]+)"[^]*?class="curve"/.exec(svg);
    expect(d).not.toBeNull();
  });

  it('rejects empty input', () => {
    expect(() => buildFigure({ curves: [] })).toThrowError(/no input curves/);
  });
});

describe('renderWithReport', () => {
  it('reports row-by-row domination for the overlay', () => {
    const { svg, domination } = renderWithReport({
      curves: [{ label: 'rep-2-8', rows: exactRows }],
      overlay: { dMin: 8, q: 2, p0: 0.1 },
    });
    expect(svg).toContain('</svg>');
    expect(domination).toMatch(/envelope dominates at all \d+ rows/);
  });

  it('throws when a doctored curve breaks the envelope', () => {
    const step = exactRows.map((row) => ({ ...row, g: row.p <= 0.1 ? 0 : 1 }));
    expect(() => renderWithReport({
      curves: [{ label: 'bad', rows: step }],
      overlay: { dMin: 8, q: 2, p0: 0.1 },
    })).toThrowError(/envelope violated/);
  });
});
