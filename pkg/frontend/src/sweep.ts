/** Four-panel latitude-sweep figure.

Panels: (a) candidate latitude with the truth-latitude reference line,
(b) angular distances query->candidate and query->truth, (c) the same pair
of correlation distances, (d) truth-candidate correlation distance with a
marker at the latitude minimizing the angular distance to the truth. All
angles are in pi units; series are per-latitude medians over seeds. */

import { axes, Frame, line, openSvg, polyline, text, toPx } from "./svg.js";
import { loadSweep, seriesOrFail } from "./sweepdata.js";

const WIDTH = 760;
const HEIGHT = 600;
const SERIES_A = "#1f77b4";
const SERIES_B = "#ff7f0e";
const REFERENCE = "#777777";

interface Panel {
  title: string;
  columns: Array<{ name: string; color: string; label: string }>;
  truthLine: boolean;
  lambdaMarker: boolean;
}

const PANELS: Panel[] = [
  {
    title: "(a) candidate latitude",
    columns: [{ name: "candidate_latitude", color: SERIES_A, label: "l(b(C))" }],
    truthLine: true,
    lambdaMarker: false,
  },
  {
    title: "(b) angular distances",
    columns: [
      { name: "da_q_c", color: SERIES_A, label: "d_a(q,b(C))" },
      { name: "da_q_t", color: SERIES_B, label: "d_a(q,b(T))" },
    ],
    truthLine: false,
    lambdaMarker: false,
  },
  {
    title: "(c) correlation distances",
    columns: [
      { name: "dcc_q_c", color: SERIES_A, label: "d_cc(q,b(C))" },
      { name: "dcc_q_t", color: SERIES_B, label: "d_cc(q,b(T))" },
    ],
    truthLine: false,
    lambdaMarker: false,
  },
  {
    title: "(d) performance",
    columns: [{ name: "dcc_t_c", color: SERIES_A, label: "d_cc(b(T),b(C))" }],
    truthLine: false,
    lambdaMarker: true,
  },
];

export function renderSweepPanels(
  input: string,
  title = "latitude sweep",
  xlabel = "query latitude (pi)",
  truthLatitudeOverride: number | null = null,
): string {
  const data = loadSweep(input);
  const truthLat = truthLatitudeOverride ?? data.truthLatitude;
  const daTruth = seriesOrFail(input, data, "da_q_t");
  const lambdaPrime = data.lats[daTruth.indexOf(Math.min(...daTruth))]!;

  let out = openSvg(WIDTH, HEIGHT);
  out += text(WIDTH / 2, 18, title, 13, "middle");
  PANELS.forEach((panel, index) => {
    const col = index % 2;
    const row = Math.floor(index / 2);
    const frame: Frame = {
      left: 62 + col * 380,
      top: 48 + row * 280,
      width: 290,
      height: 200,
      x0: 0,
      x1: 1,
      y0: 0,
      y1: 1,
    };
    const ticks: Array<[number, string]> = [0, 0.25, 0.5, 0.75, 1].map(
      (v) => [v, v.toFixed(2)],
    );
    out += axes(frame, ticks, ticks, xlabel, "angle (pi)", panel.title);
    if (panel.truthLine && truthLat !== null) {
      const [, py] = toPx(frame, 0, truthLat);
      out += line(frame.left, py, frame.left + frame.width, py, REFERENCE, 1,
        "5,3");
      out += text(frame.left + frame.width - 2, py - 4, "l(b(T))", 9, "end");
    }
    panel.columns.forEach((column, k) => {
      const series = seriesOrFail(input, data, column.name);
      out += polyline(
        data.lats.map((lat, i) => toPx(frame, lat, series[i]!)),
        column.color,
      );
      out += text(frame.left + 6, frame.top + 12 + 12 * k, column.label, 9,
        "start", `fill="${column.color}"`);
    });
    if (panel.lambdaMarker) {
      const [px] = toPx(frame, lambdaPrime, 0);
      out += line(px, frame.top, px, frame.top + frame.height, REFERENCE, 1,
        "5,3");
      out += text(px + 3, frame.top + 12, "lambda'", 9);
    }
  });
  out += `<!-- points=${data.lats.length} -->\n`;
  out += "</svg>\n";
  return out;
}
