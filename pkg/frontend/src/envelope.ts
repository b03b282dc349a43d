/**
 * The sharp-threshold envelope: for a code with minimum distance dMin
 * over an alphabet of size q, and noise rates p0 <= p1,
 *
 *   g(p1) (1 - g(p0)) <= exp(-((1-p1)/4) * (sqrt(dMin)/q^1.5) * (p1-p0)).
 *
 * Given a curve and a chosen p0 this recomputes both sides row by row.
 */

import type { CurveRow } from './csv.js';

export interface EnvelopeOverlay {
  dMin: number;
  q: number;
  p0: number;
}

export interface EnvelopePoint {
  p1: number;
  product: number; // g(p1) * (1 - g(p0)) from the CSV rows
  envelope: number;
}

export function thresholdEnvelope(q: number, dMin: number, p0: number, p1: number): number {
  const rate = ((1 - p1) / 4) * (Math.sqrt(dMin) / (q * Math.sqrt(q)));
  return Math.exp(-rate * (p1 - p0));
}

export function envelopeSeries(rows: CurveRow[], overlay: EnvelopeOverlay): EnvelopePoint[] {
  const base = rows.find((row) => Math.abs(row.p - overlay.p0) <= 1e-12);
  if (!base) {
    const ps = rows.map((row) => row.p).join(', ');
    throw new Error(`no CSV row at p0=${overlay.p0}; available rates: ${ps}`);
  }
  return rows
    .filter((row) => row.p >= overlay.p0)
    .map((row) => ({
      p1: row.p,
      product: row.g * (1 - base.g),
      envelope: thresholdEnvelope(overlay.q, overlay.dMin, overlay.p0, row.p),
    }));
}

/** True when the envelope sits above the product at every row (up to
 * rounding slack); the violating point is returned otherwise. */
export function checkDomination(points: EnvelopePoint[], slack = 1e-12):
  { ok: true } | { ok: false; at: EnvelopePoint } {
  for (const point of points) {
    if (point.product > point.envelope + slack) {
      return { ok: false, at: point };
    }
  }
  return { ok: true };
}
