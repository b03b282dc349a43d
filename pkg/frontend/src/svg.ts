/**
 * Minimal deterministic SVG assembly: fixed canvas, fixed precision,
 * no timestamps or generated ids, so identical inputs yield identical
 * bytes.
 */

export interface Extent {
  min: number;
  max: number;
}

export class LinearScale {
  constructor(readonly domain: Extent, readonly range: Extent) {
    if (!(domain.max > domain.min)) {
      throw new Error(`degenerate axis domain [${domain.min}, ${domain.max}]`);
    }
  }

  apply(x: number): number {
    const t = (x - this.domain.min) / (this.domain.max - this.domain.min);
    return this.range.min + t * (this.range.max - this.range.min);
  }

  ticks(count: number): number[] {
    const out: number[] = [];
    for (let i = 0; i <= count; i++) {
      out.push(this.domain.min + ((this.domain.max - this.domain.min) * i) / count);
    }
    return out;
  }
}

export const px = (value: number): string => value.toFixed(2);

export function polylinePath(points: Array<[number, number]>): string {
  return points
    .map(([x, y], i) => `${i === 0 ? 'M' : 'L'}${px(x)} ${px(y)}`)
    .join(' ');
}

export function polygonPath(points: Array<[number, number]>): string {
  return `${polylinePath(points)} Z`;
}

export interface SvgElement {
  tag: string;
  attrs: Record<string, string>;
  text?: string;
}

export function renderElement({ tag, attrs, text }: SvgElement): string {
  const attrText = Object.entries(attrs)
    .map(([key, value]) => ` ${key}="${value}"`)
    .join('');
  return text === undefined
    ? `<${tag}${attrText}/>`
    : `<${tag}${attrText}>${text}</${tag}>`;
}

export function svgDocument(width: number, height: number, body: string[]): string {
  const head =
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">`;
  return [head, ...body, '</svg>', ''].join('\n');
}

export function escapeText(value: string): string {
  return value.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}
