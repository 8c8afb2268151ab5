/** Binary PGM (P5, maxval 255) for label maps: pixel value = class id. */

export function encodePgm(labels: number[][]): Buffer {
  const h = labels.length;
  const w = labels[0].length;
  const header = Buffer.from(`P5\n${w} ${h}\n255\n`, "ascii");
  const payload = Buffer.alloc(h * w);
  let offset = 0;
  for (let row = 0; row < h; row++) {
    for (let col = 0; col < w; col++) {
      payload[offset++] = labels[row][col];
    }
  }
  return Buffer.concat([header, payload]);
}
