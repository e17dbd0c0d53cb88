/** Shared reading/aggregation of sweep CSVs (one row per latitude x seed). */

import { field, parseCsv, requireColumns, SchemaError, SWEEP_COLUMNS, Table } from "./csv.js";

export interface SweepSeries {
  /** sorted query latitudes (pi units) */
  lats: number[];
  /** per-column medians over seeds, keyed by column name */
  median: Map<string, Array<number | null>>;
  /** latitude of the ground truth, if derivable (pi units) */
  truthLatitude: number | null;
}

function median(values: number[]): number {
  const sorted = [...values].sort((a, b) => a - b);
  const mid = Math.floor(sorted.length / 2);
  return sorted.length % 2 === 1 ? sorted[mid]! : (sorted[mid - 1]! + sorted[mid]!) / 2;
}

const VALUE_COLUMNS = ["candidate_latitude", "da_q_c", "da_q_t", "dcc_q_c",
  "dcc_q_t", "dcc_t_c"] as const;

/**
 * Aggregate a sweep table by query latitude (median over seeds).
 *
 * The truth latitude is read off the query_latitude = 0 row when present:
 * there the angular distance from the query (the fine pole itself) to the
 * truth IS the truth latitude. No geometry is computed here.
 */
export function loadSweep(path: string): SweepSeries {
  const table: Table = parseCsv(path);
  requireColumns(path, table, SWEEP_COLUMNS);
  const groups = new Map<number, string[][]>();
  for (const row of table.rows) {
    const lat = field(table, row, "query_latitude");
    if (lat === null) {
      throw new SchemaError(`${path}: row without query_latitude`);
    }
    if (!groups.has(lat)) {
      groups.set(lat, []);
    }
    groups.get(lat)!.push(row);
  }
  const lats = [...groups.keys()].sort((a, b) => a - b);
  const med = new Map<string, Array<number | null>>();
  for (const col of VALUE_COLUMNS) {
    med.set(col, lats.map((lat) => {
      const values = groups.get(lat)!
        .map((row) => field(table, row, col))
        .filter((v): v is number => v !== null);
      return values.length > 0 ? median(values) : null;
    }));
  }
  let truthLatitude: number | null = null;
  if (lats[0] === 0) {
    truthLatitude = med.get("da_q_t")![0] ?? null;
  }
  return { lats, median: med, truthLatitude };
}

export function seriesOrFail(path: string, data: SweepSeries, col: string): number[] {
  const values = data.median.get(col)!;
  if (values.some((v) => v === null)) {
    throw new SchemaError(`${path}: column ${col} has missing values; ` +
      `was the sweep run with a ground truth?`);
  }
  return values as number[];
}
