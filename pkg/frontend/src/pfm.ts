/**
 * Grayscale PFM ("Pf", scale -1.0 = little-endian, rows bottom-to-top),
 * byte-compatible with the Python engine's reader and writer.
 */

export type Matrix = number[][];

export function encodePfm(data: Matrix): Buffer {
  const h = data.length;
  const w = data[0].length;
  const header = Buffer.from(`Pf\n${w} ${h}\n-1.0\n`, "ascii");
  const payload = Buffer.alloc(h * w * 4);
  let offset = 0;
  for (let row = h - 1; row >= 0; row--) {
    for (let col = 0; col < w; col++) {
      payload.writeFloatLE(Math.fround(data[row][col]), offset);
      offset += 4;
    }
  }
  return Buffer.concat([header, payload]);
}

function readToken(buf: Buffer, pos: { i: number }): string {
  while (pos.i < buf.length && /\s/.test(String.fromCharCode(buf[pos.i]))) pos.i++;
  const start = pos.i;
  while (pos.i < buf.length && !/\s/.test(String.fromCharCode(buf[pos.i]))) pos.i++;
  if (start === pos.i) throw new Error("truncated PFM header");
  return buf.toString("ascii", start, pos.i);
}

export function decodePfm(buf: Buffer): Matrix {
  const pos = { i: 0 };
  const magic = readToken(buf, pos);
  if (magic !== "Pf") throw new Error(`not a grayscale PFM (magic ${magic})`);
  const w = parseInt(readToken(buf, pos), 10);
  const h = parseInt(readToken(buf, pos), 10);
  const scale = parseFloat(readToken(buf, pos));
  pos.i++; // single whitespace after the scale line
  const littleEndian = scale < 0;
  if (buf.length - pos.i < w * h * 4) throw new Error("truncated PFM payload");
  const out: Matrix = [];
  for (let row = 0; row < h; row++) out.push(new Array<number>(w));
  let offset = pos.i;
  for (let row = h - 1; row >= 0; row--) {
    for (let col = 0; col < w; col++) {
      out[row][col] = littleEndian ? buf.readFloatLE(offset) : buf.readFloatBE(offset);
      offset += 4;
    }
  }
  return out;
}
