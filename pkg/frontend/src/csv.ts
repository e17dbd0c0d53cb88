/** Strict CSV reading for the sweep and heatmap record schemas. */

import { readFileSync } from "fs";

export const SWEEP_COLUMNS = [
  "family",
  "gamma",
  "seed",
  "query_latitude",
  "candidate_latitude",
  "da_q_c",
  "da_q_t",
  "dcc_q_c",
  "dcc_q_t",
  "dcc_t_c",
] as const;

export const HEATMAP_COLUMNS = ["gamma", "latitude", "x", "y", "value"] as const;

export class SchemaError extends Error {}

export interface Table {
  columns: string[];
  rows: string[][];
}

export function parseCsv(path: string): Table {
  const text = readFileSync(path, "utf-8");
  const lines = text.split("\n").filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${path}: empty CSV`);
  }
  const columns = lines[0]!.split(",");
  const rows: string[][] = [];
  for (let k = 1; k < lines.length; k++) {
    const fields = lines[k]!.split(",");
    if (fields.length !== columns.length) {
      throw new SchemaError(
        `${path}: line ${k + 1} has ${fields.length} fields, expected ${columns.length}`,
      );
    }
    rows.push(fields);
  }
  if (rows.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return { columns, rows };
}

/** Check the header matches a schema exactly; report the diff otherwise. */
export function requireColumns(path: string, table: Table, expected: readonly string[]): void {
  const have = new Set(table.columns);
  const want = new Set(expected);
  const missing = expected.filter((c) => !have.has(c));
  const unexpected = table.columns.filter((c) => !want.has(c));
  if (missing.length > 0 || unexpected.length > 0) {
    throw new SchemaError(
      `${path}: column mismatch; missing: [${missing.join(", ")}], ` +
        `unexpected: [${unexpected.join(", ")}]`,
    );
  }
}

/** Typed record access: returns null for empty (missing) fields. */
export function field(table: Table, row: string[], name: string): number | null {
  const idx = table.columns.indexOf(name);
  const raw = row[idx];
  if (raw === undefined || raw === "") {
    return null;
  }
  const value = Number(raw);
  if (Number.isNaN(value)) {
    throw new SchemaError(`bad numeric field ${name}: ${raw}`);
  }
  return value;
}
