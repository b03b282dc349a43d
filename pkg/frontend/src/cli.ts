#!/usr/bin/env node
/**
 * Render decoding-success curve CSVs to SVG.
 *
 * Usage:
 *   qthreshold-plot --out fig.svg [--logit] [--envelope dmin:q:p0]
 *                   [--x-range a:b] [--y-range a:b] curve.csv [more.csv ...]
 *
 * The envelope overlay draws exp(-((1-p1)/4)(sqrt(dmin)/q^1.5)(p1-p0))
 * together with the recomputed product g(p1)(1-g(p0)) from the first
 * curve, and exits nonzero if the product ever exceeds the envelope.
 */

import * as fs from 'fs';
import * as path from 'path';
import { parseCurveCsv, SchemaError } from './csv.js';
import type { EnvelopeOverlay } from './envelope.js';
import { renderWithReport, type PlotSpec } from './plot.js';
import type { Extent } from './svg.js';

interface CliArgs {
  inputs: string[];
  out: string;
  logit: boolean;
  overlay?: EnvelopeOverlay;
  xRange?: Extent;
  yRange?: Extent;
}

const USAGE =
  'usage: qthreshold-plot --out fig.svg [--logit] [--envelope dmin:q:p0] ' +
  '[--x-range a:b] [--y-range a:b] curve.csv [more.csv ...]';

function parseRange(raw: string, flag: string): Extent {
  const parts = raw.split(':').map(Number);
  if (parts.length !== 2 || parts.some((x) => !Number.isFinite(x))) {
    throw new Error(`${flag} expects two numbers as a:b, got "${raw}"`);
  }
  return { min: parts[0]!, max: parts[1]! };
}

export function parseArgs(argv: string[]): CliArgs {
  const args: CliArgs = { inputs: [], out: '', logit: false };
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i] as string;
    const next = (): string => {
      const value = argv[++i];
      if (value === undefined) throw new Error(`${arg} needs a value\n${USAGE}`);
      return value;
    };
    switch (arg) {
      case '--out':
        args.out = next();
        break;
      case '--logit':
        args.logit = true;
        break;
      case '--envelope': {
        const parts = next().split(':').map(Number);
        if (parts.length !== 3 || parts.some((x) => !Number.isFinite(x))) {
          throw new Error('--envelope expects dmin:q:p0');
        }
        args.overlay = { dMin: parts[0]!, q: parts[1]!, p0: parts[2]! };
        break;
      }
      case '--x-range':
        args.xRange = parseRange(next(), '--x-range');
        break;
      case '--y-range':
        args.yRange = parseRange(next(), '--y-range');
        break;
      case '--help':
        console.log(USAGE);
        process.exit(0);
        break;
      default:
        if (arg.startsWith('--')) throw new Error(`unknown flag ${arg}\n${USAGE}`);
        args.inputs.push(arg);
    }
  }
  if (args.inputs.length === 0) throw new Error(`no input CSVs\n${USAGE}`);
  if (!args.out) throw new Error(`--out is required\n${USAGE}`);
  const ext = path.extname(args.out).toLowerCase();
  if (ext === '.png') {
    throw new Error('PNG output is not supported in this build; write .svg instead');
  }
  if (ext !== '.svg') {
    throw new Error(`unsupported output extension "${ext}"; write .svg`);
  }
  return args;
}

export function run(argv: string[]): number {
  const args = parseArgs(argv);
  const spec: PlotSpec = {
    curves: args.inputs.map((file) => ({
      label: path.basename(file).replace(/\.csv$/, ''),
      rows: parseCurveCsv(fs.readFileSync(file, 'utf8')),
    })),
    logit: args.logit,
    ...(args.overlay ? { overlay: args.overlay } : {}),
    ...(args.xRange ? { xRange: args.xRange } : {}),
    ...(args.yRange ? { yRange: args.yRange } : {}),
  };
  const { svg, domination } = renderWithReport(spec);
  fs.writeFileSync(args.out, svg, 'utf8');
  console.log(`wrote ${args.out} (${domination})`);
  return 0;
}

const invokedDirectly = process.argv[1] !== undefined
  && path.resolve(process.argv[1]) === path.resolve(new URL(import.meta.url).pathname);

if (invokedDirectly) {
  try {
    process.exit(run(process.argv.slice(2)));
  } catch (err) {
    const message = err instanceof SchemaError ? `schema mismatch — ${err.message}`
      : err instanceof Error ? err.message : String(err);
    console.error(`error: ${message}`);
    process.exit(1);
  }
}
