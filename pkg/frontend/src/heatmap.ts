/** Heatmap renderer: resolution x latitude grid of truth-candidate correlation.

Cells are placed on the regular (gamma, latitude) grid; the horizontal axis
is annotated with the signed correlation distance to the edge-vector meridian
(the `x` column), which is constant along each meridian. Missing cells (poles
have no meridian) are hatched grey. The color scale is fixed to [-1, 1]. */

import { field, HEATMAP_COLUMNS, parseCsv, requireColumns } from "./csv.js";
import { axes, correlationColor, fmt, Frame, line, openSvg, rect, text, toPx } from "./svg.js";

const WIDTH = 720;
const HEIGHT = 560;

export function renderHeatmap(
  input: string,
  title = "truth-candidate correlation",
  xlabel = "signed corr. distance to edge meridian (pi)",
  ylabel = "query latitude (pi)",
): string {
  const table = parseCsv(input);
  requireColumns(input, table, HEATMAP_COLUMNS);
  const gammas = [...new Set(table.rows.map((r) => field(table, r, "gamma")!))]
    .sort((a, b) => a - b);
  const lats = [...new Set(table.rows.map((r) => field(table, r, "latitude")!))]
    .sort((a, b) => a - b);
  const cell = new Map<string, { x: number | null; value: number | null }>();
  for (const row of table.rows) {
    const key = `${field(table, row, "gamma")}|${field(table, row, "latitude")}`;
    cell.set(key, { x: field(table, row, "x"), value: field(table, row, "value") });
  }

  const frame: Frame = {
    left: 80, top: 40, width: 540, height: 440,
    x0: 0, x1: gammas.length, y0: 0, y1: lats.length,
  };
  let out = openSvg(WIDTH, HEIGHT);
  const cw = frame.width / gammas.length;
  const ch = frame.height / lats.length;
  for (let gi = 0; gi < gammas.length; gi++) {
    for (let li = 0; li < lats.length; li++) {
      const entry = cell.get(`${gammas[gi]}|${lats[li]}`);
      const px = frame.left + gi * cw;
      const py = frame.top + frame.height - (li + 1) * ch;
      if (entry === undefined || entry.value === null) {
        out += rect(px, py, cw, ch, "#cccccc");
        out += line(px, py + ch, px + cw, py, "#888888", 0.7);
      } else {
        out += rect(px, py, cw, ch, correlationColor(entry.value));
      }
    }
  }
  // x ticks: per-column signed meridian coordinate, every few columns
  const xticks: Array<[number, string]> = [];
  const step = Math.max(1, Math.floor(gammas.length / 6));
  for (let gi = 0; gi < gammas.length; gi += step) {
    const sample = lats.map((lat) => cell.get(`${gammas[gi]}|${lat}`))
      .find((e) => e !== undefined && e.x !== null);
    const label = sample ? sample.x!.toFixed(2) : "--";
    xticks.push([gi + 0.5, label]);
  }
  const yticks: Array<[number, string]> = [];
  const ystep = Math.max(1, Math.floor(lats.length / 6));
  for (let li = 0; li < lats.length; li += ystep) {
    yticks.push([li + 0.5, lats[li]!.toFixed(2)]);
  }
  out += axes(frame, xticks, yticks, xlabel, ylabel, title);

  // fixed [-1, 1] colorbar
  const barLeft = frame.left + frame.width + 24;
  const steps = 64;
  const barH = frame.height / steps;
  for (let k = 0; k < steps; k++) {
    const v = -1 + (2 * (k + 0.5)) / steps;
    const py = frame.top + frame.height - (k + 1) * barH;
    out += rect(barLeft, py, 18, barH + 0.5, correlationColor(v));
  }
  for (const v of [-1, 0, 1]) {
    const [, py] = toPx({ ...frame, y0: -1, y1: 1 }, 0, v);
    out += text(barLeft + 24, py + 3.5, v.toFixed(0), 10);
  }
  out += `<!-- cells=${gammas.length}x${lats.length} -->\n`;
  out += "</svg>\n";
  return out;
}
