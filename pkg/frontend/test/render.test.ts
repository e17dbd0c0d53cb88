import { existsSync, mkdtempSync, readFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { describe, expect, it } from "vitest";

import { renderBenchmark } from "../src/benchmark.js";
import { SchemaError } from "../src/csv.js";
import { renderHeatmap } from "../src/heatmap.js";
import { parseArgs, run } from "../src/main.js";
import { renderSweepPanels } from "../src/sweep.js";
import { loadSweep } from "../src/sweepdata.js";

const FIX = join(__dirname, "..", "fixtures");
const heatmapCsv = join(FIX, "heatmap.csv");
const sweepCsv = join(FIX, "sweep.csv");
const benchCsvs = [
  join(FIX, "bench_edge.csv"),
  join(FIX, "bench_cm.csv"),
  join(FIX, "bench_wedge.csv"),
];

describe("heatmap rendering", () => {
  it("renders the golden fixture to SVG", () => {
    const svg = renderHeatmap(heatmapCsv);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("cells=12x12");
    // 144 grid cells plus the colorbar strip
    expect((svg.match(/<rect /g) ?? []).length).toBeGreaterThanOrEqual(144);
    expect(svg).toContain("</svg>");
  });

  it("is byte-deterministic", () => {
    expect(renderHeatmap(heatmapCsv)).toEqual(renderHeatmap(heatmapCsv));
  });

  it("uses the fixed correlation color scale", () => {
    const svg = renderHeatmap(heatmapCsv);
    expect(svg).toContain("rgb("); // interpolated scale cells
  });
});

describe("sweep panel rendering", () => {
  it("renders four panels with reference line and marker", () => {
    const svg = renderSweepPanels(sweepCsv);
    for (const panel of ["(a) candidate latitude", "(b) angular distances",
      "(c) correlation distances", "(d) performance"]) {
      expect(svg).toContain(panel);
    }
    expect(svg).toContain("l(b(T))");
    expect(svg).toContain("lambda&apos;".replace("&apos;", "'"));
    expect((svg.match(/<polyline /g) ?? []).length).toBe(6);
  });

  it("reads the truth latitude off the zero-latitude row", () => {
    const data = loadSweep(sweepCsv);
    expect(data.truthLatitude).toBeCloseTo(0.4915, 3);
  });

  it("is byte-deterministic", () => {
    expect(renderSweepPanels(sweepCsv)).toEqual(renderSweepPanels(sweepCsv));
  });
});

describe("benchmark rendering", () => {
  it("draws one curve per input plus the truth tick", () => {
    const svg = renderBenchmark(benchCsvs, ["edge", "cm", "wedge"]);
    expect((svg.match(/<polyline /g) ?? []).length).toBe(3);
    for (const label of ["edge", "cm", "wedge"]) {
      expect(svg).toContain(`>${label}</text>`);
    }
    expect(svg).toContain("l(b(T))");
    expect(svg).toContain("curves=3");
  });

  it("is byte-deterministic", () => {
    const first = renderBenchmark(benchCsvs, []);
    const second = renderBenchmark(benchCsvs, []);
    expect(first).toEqual(second);
  });
});

describe("error handling", () => {
  it("rejects an empty CSV and writes nothing", () => {
    const out = join(mkdtempSync(join(tmpdir(), "fig-")), "out.svg");
    const code = run(["--kind", "heatmap", "--input", join(FIX, "empty.csv"),
      "--output", out]);
    expect(code).toBe(1);
    expect(existsSync(out)).toBe(false);
  });

  it("reports the column diff on schema mismatch", () => {
    expect(() => renderSweepPanels(join(FIX, "bad_header.csv")))
      .toThrowError(/missing: \[candidate_latitude/);
  });

  it("rejects unknown kinds and missing flags", () => {
    expect(() => parseArgs(["--kind", "pie", "--input", "x", "--output", "y"]))
      .toThrowError(SchemaError);
    expect(() => parseArgs(["--kind", "heatmap"])).toThrowError(SchemaError);
  });
});

describe("end-to-end CLI runs", () => {
  it("writes all three figure kinds", () => {
    const dir = mkdtempSync(join(tmpdir(), "fig-"));
    expect(run(["--kind", "heatmap", "--input", heatmapCsv,
      "--output", join(dir, "h.svg")])).toBe(0);
    expect(run(["--kind", "sweep_panels", "--input", sweepCsv,
      "--output", join(dir, "s.svg"), "--title", "sweep demo"])).toBe(0);
    expect(run(["--kind", "benchmark", "--input", benchCsvs[0]!,
      "--input", benchCsvs[1]!, "--label", "edge", "--label", "cm",
      "--output", join(dir, "b.svg")])).toBe(0);
    for (const name of ["h.svg", "s.svg", "b.svg"]) {
      const body = readFileSync(join(dir, name), "utf-8");
      expect(body.startsWith("<svg")).toBe(true);
      expect(body.endsWith("</svg>\n")).toBe(true);
    }
  });
});
