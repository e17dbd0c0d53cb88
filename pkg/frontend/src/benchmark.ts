/** Benchmark panel: one performance curve per sweep CSV.

Each input contributes the per-latitude median of the truth-candidate
correlation distance; the ground-truth latitude (taken from the first input
that contains the query_latitude = 0 row) is marked by a tick on the
horizontal axis. */

import { SchemaError } from "./csv.js";
import { axes, Frame, line, openSvg, polyline, text, toPx } from "./svg.js";
import { loadSweep, seriesOrFail } from "./sweepdata.js";

const WIDTH = 720;
const HEIGHT = 480;
const PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b"];

export function renderBenchmark(
  inputs: string[],
  labels: string[],
  title = "projection method benchmark",
  xlabel = "query latitude (pi)",
  ylabel = "d_cc(b(T), b(C)) (pi)",
  truthLatitudeOverride: number | null = null,
): string {
  if (inputs.length === 0) {
    throw new SchemaError("benchmark needs at least one input CSV");
  }
  const frame: Frame = {
    left: 70, top: 40, width: 560, height: 360,
    x0: 0, x1: 1, y0: 0, y1: 1,
  };
  let out = openSvg(WIDTH, HEIGHT);
  const ticks: Array<[number, string]> = [0, 0.25, 0.5, 0.75, 1].map(
    (v) => [v, v.toFixed(2)],
  );
  out += axes(frame, ticks, ticks, xlabel, ylabel, title);
  let truthLat: number | null = truthLatitudeOverride;
  inputs.forEach((input, k) => {
    const data = loadSweep(input);
    const series = seriesOrFail(input, data, "dcc_t_c");
    const color = PALETTE[k % PALETTE.length]!;
    out += polyline(
      data.lats.map((lat, i) => toPx(frame, lat, series[i]!)),
      color,
    );
    const label = labels[k]
      ?? input.replace(/\\/g, "/").split("/").pop()!.replace(/\.csv$/, "");
    out += text(frame.left + frame.width + 8, frame.top + 14 + 16 * k,
      label, 10, "start", `fill="${color}"`);
    if (truthLat === null && data.truthLatitude !== null) {
      truthLat = data.truthLatitude;
    }
  });
  if (truthLat !== null) {
    const [px] = toPx(frame, truthLat, 0);
    const base = frame.top + frame.height;
    out += line(px, base, px, base - 10, "#000000", 2);
    out += text(px, base + 28, "l(b(T))", 9, "middle");
  }
  out += `<!-- curves=${inputs.length} -->\n`;
  out += "</svg>\n";
  return out;
}
