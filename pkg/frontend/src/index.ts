/**
 * Array-in/array-out bindings over the `fiesta` command-line engine.
 *
 * Each call round-trips through temporary PFM/PGM files and a CLI
 * invocation, so results are bit-identical to the CLI path by
 * construction; nothing is reimplemented on this side of the boundary.
 * Data is copied at the boundary — the inputs are never aliased.
 *
 * The CLI command defaults to `python3 -m fiesta` and can be overridden
 * with the FIESTA_CLI environment variable (whitespace-separated argv).
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { decodePfm, encodePfm, Matrix } from "./pfm.js";
import { encodePgm } from "./pgm.js";

export const VERSION = "0.1.0";

export type { Matrix };
export type Volume = number[][][];
export type Config = Record<string, unknown>;

function cliCommand(): string[] {
  const override = process.env.FIESTA_CLI;
  return override ? override.split(/\s+/) : ["python3", "-m", "fiesta"];
}

export function runCli(args: string[], cwd?: string): string {
  const [cmd, ...base] = cliCommand();
  try {
    return execFileSync(cmd, [...base, ...args], { cwd, encoding: "utf-8" });
  } catch (err) {
    const stderr = (err as { stderr?: string }).stderr ?? "";
    throw new Error(`fiesta CLI failed: ${stderr || String(err)}`);
  }
}

function checkMatrix(name: string, value: unknown): asserts value is Matrix {
  if (!Array.isArray(value) || value.length === 0) {
    throw new TypeError(`${name}: expected a non-empty 2-D number array (H x W)`);
  }
  const width = Array.isArray(value[0]) ? (value[0] as unknown[]).length : -1;
  if (width <= 0) {
    throw new TypeError(`${name}: expected a non-empty 2-D number array (H x W)`);
  }
  for (const row of value) {
    if (!Array.isArray(row) || row.length !== width) {
      throw new TypeError(`${name}: rows must all have length ${width} (rectangular H x W array)`);
    }
    for (const cell of row) {
      if (Array.isArray(cell)) {
        throw new TypeError(`${name}: expected a 2-D array (H x W), got rank 3 or deeper`);
      }
      if (typeof cell !== "number" || !Number.isFinite(cell)) {
        throw new TypeError(`${name}: entries must be finite numbers`);
      }
    }
  }
}

function checkVolume(name: string, value: unknown): asserts value is Volume {
  if (!Array.isArray(value) || value.length === 0) {
    throw new TypeError(`${name}: expected a non-empty 3-D number array (H x W x C)`);
  }
  for (const row of value) {
    if (!Array.isArray(row) || row.length === 0) {
      throw new TypeError(`${name}: expected a non-empty 3-D number array (H x W x C)`);
    }
    for (const cell of row) {
      if (!Array.isArray(cell) || cell.length === 0) {
        throw new TypeError(`${name}: expected a non-empty 3-D number array (H x W x C)`);
      }
      for (const v of cell) {
        if (Array.isArray(v)) {
          throw new TypeError(`${name}: expected a 3-D array (H x W x C), got rank 4 or deeper`);
        }
        if (typeof v !== "number" || !Number.isFinite(v)) {
          throw new TypeError(`${name}: entries must be finite numbers`);
        }
      }
    }
  }
}

function checkLabels(name: string, value: unknown): asserts value is Matrix {
  checkMatrix(name, value);
  for (const row of value as Matrix) {
    for (const cell of row) {
      if (!Number.isInteger(cell) || cell < 0 || cell > 255) {
        throw new TypeError(`${name}: entries must be integer class ids in [0, 255]`);
      }
    }
  }
}

function checkSeed(seed: number): void {
  if (!Number.isInteger(seed) || seed < 0) {
    throw new TypeError("seed: expected a non-negative integer");
  }
}

function withTempDir<T>(fn: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "fiesta-bind-"));
  try {
    return fn(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

function writeConfig(dir: string, config?: Config): string[] {
  if (!config || Object.keys(config).length === 0) return [];
  const path = join(dir, "config.json");
  writeFileSync(path, JSON.stringify(config));
  return ["--config", path];
}

function writeProbPlanes(dir: string, stem: string, prob: Volume): void {
  const c = prob[0][0].length;
  for (let k = 0; k < c; k++) {
    const plane = prob.map((row) => row.map((cell) => cell[k]));
    writeFileSync(join(dir, `${stem}.c${k}.pfm`), encodePfm(plane));
  }
}

/** Whole-image augmentation; equals `fiesta fat` on the PFM equivalent. */
export function fat(input: Matrix, config?: Config, seed = 0): Matrix {
  checkMatrix("input", input);
  checkSeed(seed);
  return withTempDir((dir) => {
    writeFileSync(join(dir, "input.pfm"), encodePfm(input));
    const out = join(dir, "out");
    runCli([
      "fat",
      "--input", join(dir, "input.pfm"),
      "--out", out,
      "--seed", String(seed),
      ...writeConfig(dir, config),
    ]);
    return decodePfm(readFileSync(join(out, "input.ca.pfm")));
  });
}

/** Per-class remap + augmentation; equals `fiesta lfat`. */
export function lfat(input: Matrix, labels: Matrix, config?: Config, seed = 0): Matrix {
  checkMatrix("input", input);
  checkLabels("labels", labels);
  checkSeed(seed);
  return withTempDir((dir) => {
    writeFileSync(join(dir, "input.pfm"), encodePfm(input));
    writeFileSync(join(dir, "input.pgm"), encodePgm(labels));
    const out = join(dir, "out");
    runCli([
      "lfat",
      "--input", join(dir, "input.pfm"),
      "--labels", join(dir, "input.pgm"),
      "--out", out,
      "--seed", String(seed),
      ...writeConfig(dir, config),
    ]);
    return decodePfm(readFileSync(join(out, "input.la.pfm")));
  });
}

/** Normalized per-pixel entropy of an (H x W x C) probability field. */
export function entropy(prob: Volume): Matrix {
  checkVolume("prob", prob);
  return withTempDir((dir) => {
    writeProbPlanes(dir, "prob", prob);
    const out = join(dir, "out");
    runCli(["entropy", "--prob", join(dir, "prob"), "--out", out]);
    return decodePfm(readFileSync(join(out, "prob.unc.pfm")));
  });
}

/** Guidance field from two uncertainty maps; equals `fiesta fuse`. */
export function fuse(uncCa: Matrix, uncLa: Matrix, config?: Config): Matrix {
  checkMatrix("uncCa", uncCa);
  checkMatrix("uncLa", uncLa);
  return withTempDir((dir) => {
    writeFileSync(join(dir, "uc.pfm"), encodePfm(uncCa));
    writeFileSync(join(dir, "ul.pfm"), encodePfm(uncLa));
    const out = join(dir, "out");
    runCli([
      "fuse",
      "--unc-ca", join(dir, "uc.pfm"),
      "--unc-la", join(dir, "ul.pfm"),
      "--out", out,
      ...writeConfig(dir, config),
    ]);
    return decodePfm(readFileSync(join(out, "uc.umap.pfm")));
  });
}

/** Guided fusion of the two augmented views; equals `fiesta mutual`. */
export function mutual(xCa: Matrix, xLa: Matrix, uMap: Matrix, labels: Matrix): Matrix {
  checkMatrix("xCa", xCa);
  checkMatrix("xLa", xLa);
  checkMatrix("uMap", uMap);
  checkLabels("labels", labels);
  return withTempDir((dir) => {
    writeFileSync(join(dir, "input.pfm"), encodePfm(xCa));
    writeFileSync(join(dir, "input.ca.pfm"), encodePfm(xCa));
    writeFileSync(join(dir, "input.la.pfm"), encodePfm(xLa));
    writeFileSync(join(dir, "input.umap.pfm"), encodePfm(uMap));
    writeFileSync(join(dir, "input.pgm"), encodePgm(labels));
    const out = join(dir, "out");
    runCli([
      "mutual",
      "--input", join(dir, "input.pfm"),
      "--labels", join(dir, "input.pgm"),
      "--ca", join(dir, "input.ca.pfm"),
      "--la", join(dir, "input.la.pfm"),
      "--umap", join(dir, "input.umap.pfm"),
      "--out", out,
      "--seed", "0",
    ]);
    return decodePfm(readFileSync(join(out, "input.ma.pfm")));
  });
}
