import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { encodePfm, Matrix } from "../src/pfm.js";
import { encodePgm } from "../src/pgm.js";
import { runCli, Volume } from "../src/index.js";

/** xorshift128+ style deterministic generator for reproducible fixtures */
export function makeRand(seed: number): () => number {
  let s0 = BigInt(seed) ^ 0x9e3779b97f4a7c15n;
  let s1 = (BigInt(seed) * 0x2545f4914f6cdd1dn + 1n) & 0xffffffffffffffffn;
  return () => {
    let x = s0;
    const y = s1;
    s0 = y;
    x ^= (x << 23n) & 0xffffffffffffffffn;
    s1 = x ^ y ^ (x >> 17n) ^ (y >> 26n);
    const v = (s1 + y) & 0xffffffffffffffffn;
    return Number(v >> 11n) / 2 ** 53;
  };
}

export function randMatrix(rand: () => number, h: number, w: number): Matrix {
  const out: Matrix = [];
  for (let i = 0; i < h; i++) {
    const row: number[] = [];
    for (let j = 0; j < w; j++) row.push(rand());
    out.push(row);
  }
  return out;
}

export function randLabels(rand: () => number, h: number, w: number, classes: number): Matrix {
  const out: Matrix = [];
  for (let i = 0; i < h; i++) {
    const row: number[] = [];
    for (let j = 0; j < w; j++) row.push(Math.floor(rand() * classes));
    out.push(row);
  }
  return out;
}

export function randSimplex(rand: () => number, h: number, w: number, c: number): Volume {
  const out: Volume = [];
  for (let i = 0; i < h; i++) {
    const row: number[][] = [];
    for (let j = 0; j < w; j++) {
      const raw = Array.from({ length: c }, () => rand() + 1e-3);
      // quantize to float32 per class, then give the last class the exact
      // float32 remainder so the serialized planes still sum to 1
      const partial = raw.slice(0, c - 1).map((v, k) => Math.fround(v / raw.reduce((a, b) => a + b, 0)));
      const last = Math.fround(1 - partial.reduce((a, b) => a + b, 0));
      row.push([...partial, last]);
    }
    out.push(row);
  }
  return out;
}

export interface CliRun {
  dir: string;
  out: string;
}

/** Write inputs and run one CLI subcommand in a scratch dir (not cleaned:
 * vitest tmpdirs are OS-managed, and keeping them makes failures easy to
 * inspect). Returns the output file's raw bytes. */
export function cliBytes(
  sub: string,
  inputs: { pfm?: Record<string, Matrix>; pgm?: Record<string, Matrix>; prob?: Record<string, Volume> },
  extraArgs: string[],
  outputName: string,
  config?: Record<string, unknown>,
): Buffer {
  const dir = mkdtempSync(join(tmpdir(), "fiesta-cli-"));
  const out = join(dir, "out");
  if (config) {
    writeFileSync(join(dir, "cfg.json"), JSON.stringify(config));
  }
  for (const [name, m] of Object.entries(inputs.pfm ?? {})) {
    writeFileSync(join(dir, name), encodePfm(m));
  }
  for (const [name, m] of Object.entries(inputs.pgm ?? {})) {
    writeFileSync(join(dir, name), encodePgm(m));
  }
  for (const [stem, vol] of Object.entries(inputs.prob ?? {})) {
    const c = vol[0][0].length;
    for (let k = 0; k < c; k++) {
      writeFileSync(join(dir, `${stem}.c${k}.pfm`), encodePfm(vol.map((r) => r.map((cell) => cell[k]))));
    }
  }
  const resolved = extraArgs.map((a) => (a.startsWith("@") ? join(dir, a.slice(1)) : a));
  runCli([sub, ...resolved, "--out", out]);
  return readFileSync(join(out, outputName));
}
