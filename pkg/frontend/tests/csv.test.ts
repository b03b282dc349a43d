import * as fs from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';
import { CURVE_HEADER, parseCurveCsv, SchemaError } from '../src/csv.js';

const FIXTURES = path.join(__dirname, 'fixtures');

const read = (name: string) => fs.readFileSync(path.join(FIXTURES, name), 'utf8');

describe('parseCurveCsv', () => {
  it('parses the exact repetition-code fixture', () => {
    const rows = parseCurveCsv(read('rep-2-8.exact.csv'));
    expect(rows.length).toBe(51);
    expect(rows[0]).toEqual({
      p: 0, g: 1, logitG: null, mode: 'exact', halfWidth: 0, samples: null,
    });
    expect(rows.every((r) => r.mode === 'exact' && r.halfWidth === 0)).toBe(true);
    const ps = rows.map((r) => r.p);
    expect([...ps].sort((a, b) => a - b)).toEqual(ps);
  });

  it('parses the Monte Carlo fixture with bands and sample counts', () => {
    const rows = parseCurveCsv(read('rep-2-8.mc.csv'));
    expect(rows.every((r) => r.mode === 'mc')).toBe(true);
    expect(rows.every((r) => r.halfWidth > 0)).toBe(true);
    expect(rows.every((r) => r.samples === 100000)).toBe(true);
  });

  it('names the offending column on schema violations', () => {
    expect(() => parseCurveCsv('nope\n')).toThrowError(/column "header"/);
    const bad = (line: string) => `${CURVE_HEADER}\n${line}\n`;
    expect(() => parseCurveCsv(bad('0.1,0.5,0,sideways,0,'))).toThrowError(/column "mode"/);
    expect(() => parseCurveCsv(bad('0.1,oops,0,exact,0,'))).toThrowError(/column "g"/);
    expect(() => parseCurveCsv(bad('1.5,0.5,0,exact,0,'))).toThrowError(/column "p"/);
    expect(() => parseCurveCsv(bad('0.1,0.5,0,exact,0'))).toThrowError(/column "row"/);
    expect(() => parseCurveCsv(bad('0.1,0.5,0,mc,,100'))).toThrowError(/column "half_width"/);
  });

  it('exposes the column on the error object', () => {
    try {
      parseCurveCsv('x\n');
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(SchemaError);
      expect((err as SchemaError).column).toBe('header');
    }
  });
});
