import { describe, expect, test } from "vitest";

import { entropy, fat, fuse, lfat, mutual, VERSION, runCli } from "../src/index.js";
import { makeRand, randMatrix } from "./helpers.js";

const rank3 = [[[0.1], [0.2]], [[0.3], [0.4]]] as unknown as number[][];
const img4 = randMatrix(makeRand(1), 4, 4);

describe("argument validation", () => {
  test("rank-3 input rejected with the expected shape in the message", () => {
    expect(() => fat(rank3)).toThrow(/2-D/);
    expect(() => lfat(rank3, img4)).toThrow(/2-D/);
    expect(() => fuse(rank3, img4)).toThrow(/2-D/);
    expect(() => mutual(rank3, img4, img4, img4)).toThrow(/2-D/);
  });

  test("rank-2 input to entropy rejected", () => {
    expect(() => entropy(img4 as unknown as number[][][])).toThrow(/3-D/);
  });

  test("empty arrays rejected", () => {
    expect(() => fat([])).toThrow(/non-empty/);
    expect(() => fat([[]])).toThrow(/non-empty/);
    expect(() => entropy([])).toThrow(/non-empty/);
  });

  test("ragged rows rejected", () => {
    expect(() => fat([[0.1, 0.2], [0.3]])).toThrow(/rectangular|length/);
  });

  test("non-numeric and non-finite entries rejected", () => {
    expect(() => fat([[0.1, "x" as unknown as number]])).toThrow(/finite numbers/);
    expect(() => fat([[0.1, Number.NaN]])).toThrow(/finite numbers/);
  });

  test("label maps must hold integer class ids", () => {
    expect(() => lfat(img4, [[0.5, 0], [0, 0]].concat([[0, 0], [0, 0]]).slice(0, 4) as number[][])).toThrow();
    expect(() => lfat(img4, [[0, -1], [0, 0], [0, 0], [0, 0]])).toThrow(/class ids/);
  });

  test("seed must be a non-negative integer", () => {
    expect(() => fat(img4, undefined, 1.5)).toThrow(/integer/);
  });

  test("out-of-range image values surface the CLI error", () => {
    const bad = [[2.0, 0.0], [0.0, 0.0]];
    expect(() => fat(bad)).toThrow(/fiesta CLI failed/);
  });
});

describe("version", () => {
  test("matches the engine version", () => {
    const reported = runCli(["--version"]).trim();
    expect(reported).toContain(VERSION);
  });
});
