/** CLI: render a figure from pairsphere CSV output.

    --kind heatmap|sweep_panels|benchmark   (required)
    --input PATH                            (repeatable; benchmark takes many)
    --output PATH                           (required)
    --label NAME                            (repeatable; benchmark legend)
    --title / --xlabel / --ylabel           (axis-label overrides)
    --truth-latitude VALUE                  (pi units; reference line override)

Exit codes: 0 rendered, 1 bad input or schema mismatch (no file written). */

import { writeFileSync } from "fs";

import { renderBenchmark } from "./benchmark.js";
import { SchemaError } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderSweepPanels } from "./sweep.js";

export interface FigureJob {
  kind: string;
  inputs: string[];
  output: string;
  labels: string[];
  title?: string;
  xlabel?: string;
  ylabel?: string;
  truthLatitude: number | null;
}

export function parseArgs(argv: string[]): FigureJob {
  const job: FigureJob = {
    kind: "", inputs: [], output: "", labels: [], truthLatitude: null,
  };
  for (let k = 0; k < argv.length; k += 2) {
    const flag = argv[k];
    const value = argv[k + 1];
    if (value === undefined) {
      throw new SchemaError(`flag ${flag} needs a value`);
    }
    switch (flag) {
      case "--kind": job.kind = value; break;
      case "--input": job.inputs.push(value); break;
      case "--output": job.output = value; break;
      case "--label": job.labels.push(value); break;
      case "--title": job.title = value; break;
      case "--xlabel": job.xlabel = value; break;
      case "--ylabel": job.ylabel = value; break;
      case "--truth-latitude": job.truthLatitude = Number(value); break;
      default:
        throw new SchemaError(`unknown flag ${flag}`);
    }
  }
  if (!["heatmap", "sweep_panels", "benchmark"].includes(job.kind)) {
    throw new SchemaError(`--kind must be heatmap, sweep_panels or benchmark`);
  }
  if (job.inputs.length === 0 || !job.output) {
    throw new SchemaError("--input and --output are required");
  }
  if (job.kind !== "benchmark" && job.inputs.length !== 1) {
    throw new SchemaError(`${job.kind} takes exactly one --input`);
  }
  return job;
}

export function render(job: FigureJob): string {
  switch (job.kind) {
    case "heatmap":
      return renderHeatmap(job.inputs[0]!, job.title, job.xlabel, job.ylabel);
    case "sweep_panels":
      return renderSweepPanels(job.inputs[0]!, job.title, job.xlabel,
        job.truthLatitude);
    default:
      return renderBenchmark(job.inputs, job.labels, job.title, job.xlabel,
        job.ylabel, job.truthLatitude);
  }
}

export function run(argv: string[]): number {
  let job: FigureJob;
  let svg: string;
  try {
    job = parseArgs(argv);
    svg = render(job); // render fully before touching the output path
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
  writeFileSync(job.output, svg, "utf-8");
  console.log(`wrote ${job.output}`);
  return 0;
}

const invokedDirectly = process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].split("/").pop()!);
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
