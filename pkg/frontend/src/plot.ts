/**
 * Figure composition: decoding-success curves (optionally on the logit
 * scale), Monte Carlo confidence bands, and the threshold envelope
 * overlay with the recomputed product g(p1)(1-g(p0)).
 */

import type { CurveRow } from './csv.js';
import { checkDomination, envelopeSeries, type EnvelopeOverlay } from './envelope.js';
import {
  LinearScale,
  escapeText,
  polygonPath,
  polylinePath,
  px,
  renderElement,
  svgDocument,
  type Extent,
} from './svg.js';

export interface PlotSpec {
  curves: Array<{ label: string; rows: CurveRow[] }>;
  overlay?: EnvelopeOverlay;
  logit?: boolean;
  xRange?: Extent;
  yRange?: Extent;
}

const WIDTH = 800;
const HEIGHT = 500;
const MARGIN = { left: 64, right: 16, top: 40, bottom: 44 };
const CURVE_COLORS = ['#1f77b4', '#2ca02c', '#9467bd', '#8c564b'];
const BAND_OPACITY = '0.25';
const ENVELOPE_COLOR = '#d62728';
const PRODUCT_COLOR = '#ff7f0e';

interface Series {
  label: string;
  color: string;
  dash?: string;
  points: Array<[number, number]>;
  band?: Array<[number, number]>;
}

function yValue(row: CurveRow, logit: boolean): number | null {
  if (!logit) return row.g;
  return row.logitG;
}

function extent(values: number[]): Extent {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (!(max > min)) {
    max = min + 1;
  }
  return { min, max };
}

export function buildFigure(spec: PlotSpec): string {
  if (spec.curves.length === 0) {
    throw new Error('nothing to plot: no input curves');
  }
  const logit = spec.logit ?? false;
  const xs: number[] = [];
  const ys: number[] = [];
  for (const curve of spec.curves) {
    for (const row of curve.rows) {
      const y = yValue(row, logit);
      if (y === null) continue;
      xs.push(row.p);
      ys.push(y);
      if (!logit && row.mode === 'mc' && row.halfWidth > 0) {
        ys.push(Math.min(1, row.g + row.halfWidth), Math.max(0, row.g - row.halfWidth));
      }
    }
  }
  if (xs.length === 0) {
    throw new Error('nothing to plot: every row lacks a finite y value');
  }

  const overlaySeries = spec.overlay
    ? envelopeSeries(spec.curves[0]!.rows, spec.overlay)
    : null;
  if (overlaySeries && !logit) {
    for (const point of overlaySeries) {
      xs.push(point.p1);
      ys.push(point.envelope, point.product);
    }
  }

  const xDomain = spec.xRange ?? extent(xs);
  const yDomain = spec.yRange ?? (logit ? extent(ys) : { min: 0, max: 1 });
  const x = new LinearScale(xDomain, { min: MARGIN.left, max: WIDTH - MARGIN.right });
  const y = new LinearScale(yDomain, { min: HEIGHT - MARGIN.bottom, max: MARGIN.top });

  const series: Series[] = spec.curves.map((curve, i) => {
    const color = CURVE_COLORS[i % CURVE_COLORS.length]!;
    const visible = curve.rows.filter((row) => yValue(row, logit) !== null);
    const points: Array<[number, number]> = visible.map((row) => [
      x.apply(row.p),
      y.apply(yValue(row, logit)!),
    ]);
    const mcRows = visible.filter((row) => row.mode === 'mc' && row.halfWidth > 0);
    let band: Array<[number, number]> | undefined;
    if (!logit && mcRows.length > 1) {
      const upper: Array<[number, number]> = mcRows.map((row) => [
        x.apply(row.p),
        y.apply(Math.min(1, row.g + row.halfWidth)),
      ]);
      const lower: Array<[number, number]> = mcRows
        .slice()
        .reverse()
        .map((row) => [x.apply(row.p), y.apply(Math.max(0, row.g - row.halfWidth))]);
      band = [...upper, ...lower];
    }
    return { label: curve.label, color, points, band };
  });

  if (overlaySeries && !logit) {
    series.push({
      label: 'envelope',
      color: ENVELOPE_COLOR,
      dash: '6 3',
      points: overlaySeries.map((pt) => [x.apply(pt.p1), y.apply(pt.envelope)]),
    });
    series.push({
      label: 'g(p1)(1-g(p0))',
      color: PRODUCT_COLOR,
      dash: '2 3',
      points: overlaySeries.map((pt) => [x.apply(pt.p1), y.apply(pt.product)]),
    });
  }

  const body: string[] = [];
  body.push(renderElement({
    tag: 'rect',
    attrs: { x: '0', y: '0', width: String(WIDTH), height: String(HEIGHT), fill: 'white' },
  }));
  body.push(...axes(x, y, logit));
  for (const s of series) {
    if (s.band) {
      body.push(renderElement({
        tag: 'path',
        attrs: {
          d: polygonPath(s.band),
          fill: s.color,
          'fill-opacity': BAND_OPACITY,
          stroke: 'none',
          class: 'band',
        },
      }));
    }
  }
  for (const s of series) {
    const attrs: Record<string, string> = {
      d: polylinePath(s.points),
      fill: 'none',
      stroke: s.color,
      'stroke-width': '1.5',
      class: 'curve',
    };
    if (s.dash) attrs['stroke-dasharray'] = s.dash;
    body.push(renderElement({ tag: 'path', attrs }));
  }
  body.push(...legend(series));
  return svgDocument(WIDTH, HEIGHT, body);
}

function axes(x: LinearScale, y: LinearScale, logit: boolean): string[] {
  const out: string[] = [];
  const x0 = x.range.min;
  const x1 = x.range.max;
  const y0 = y.range.min;
  const y1 = y.range.max;
  out.push(renderElement({
    tag: 'path',
    attrs: {
      d: `M${px(x0)} ${px(y1)} L${px(x0)} ${px(y0)} L${px(x1)} ${px(y0)}`,
      fill: 'none',
      stroke: '#333333',
      'stroke-width': '1',
    },
  }));
  for (const tick of x.ticks(6)) {
    const tx = x.apply(tick);
    out.push(renderElement({
      tag: 'line',
      attrs: {
        x1: px(tx), y1: px(y0), x2: px(tx), y2: px(y0 + 4),
        stroke: '#333333', 'stroke-width': '1',
      },
    }));
    out.push(renderElement({
      tag: 'text',
      attrs: {
        x: px(tx), y: px(y0 + 18), 'text-anchor': 'middle',
        'font-family': 'sans-serif', 'font-size': '11',
      },
      text: tick.toFixed(2),
    }));
  }
  for (const tick of y.ticks(5)) {
    const ty = y.apply(tick);
    out.push(renderElement({
      tag: 'line',
      attrs: {
        x1: px(x0 - 4), y1: px(ty), x2: px(x0), y2: px(ty),
        stroke: '#333333', 'stroke-width': '1',
      },
    }));
    out.push(renderElement({
      tag: 'text',
      attrs: {
        x: px(x0 - 8), y: px(ty + 4), 'text-anchor': 'end',
        'font-family': 'sans-serif', 'font-size': '11',
      },
      text: tick.toFixed(logit ? 1 : 2),
    }));
  }
  out.push(renderElement({
    tag: 'text',
    attrs: {
      x: px((x0 + x1) / 2), y: px(y0 + 36), 'text-anchor': 'middle',
      'font-family': 'sans-serif', 'font-size': '12',
    },
    text: 'noise rate p',
  }));
  out.push(renderElement({
    tag: 'text',
    attrs: {
      x: px(x0), y: px(y1 - 12), 'text-anchor': 'start',
      'font-family': 'sans-serif', 'font-size': '12',
    },
    text: logit ? 'log-odds of decoding success' : 'decoding success probability g(p)',
  }));
  return out;
}

function legend(series: Series[]): string[] {
  const out: string[] = [];
  series.forEach((s, i) => {
    const yPos = MARGIN.top + 6 + 16 * i;
    const attrs: Record<string, string> = {
      x1: px(WIDTH - 190), y1: px(yPos), x2: px(WIDTH - 160), y2: px(yPos),
      stroke: s.color, 'stroke-width': '1.5',
    };
    if (s.dash) attrs['stroke-dasharray'] = s.dash;
    out.push(renderElement({ tag: 'line', attrs }));
    out.push(renderElement({
      tag: 'text',
      attrs: {
        x: px(WIDTH - 154), y: px(yPos + 4), 'text-anchor': 'start',
        'font-family': 'sans-serif', 'font-size': '11',
      },
      text: escapeText(s.label),
    }));
  });
  return out;
}

/** Render and also report the envelope-domination check when an overlay
 * is present (used by the CLI to fail loudly on a violation). */
export function renderWithReport(spec: PlotSpec): { svg: string; domination: string } {
  const svg = buildFigure(spec);
  if (!spec.overlay) {
    return { svg, domination: 'no overlay requested' };
  }
  const points = envelopeSeries(spec.curves[0]!.rows, spec.overlay);
  const result = checkDomination(points);
  if (!result.ok) {
    throw new Error(
      `envelope violated at p1=${result.at.p1}: product ${result.at.product} ` +
      `> envelope ${result.at.envelope}`,
    );
  }
  return { svg, domination: `envelope dominates at all ${points.length} rows` };
}
