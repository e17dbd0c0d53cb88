/** Minimal deterministic SVG assembly: fixed fonts, fixed rounding. */

export const FONT = 'font-family="Menlo, monospace"';

export function fmt(x: number): string {
  // fixed two-decimal pixel grid keeps output bytes reproducible
  return x.toFixed(2);
}

export function openSvg(width: number, height: number): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}">\n` +
    `<rect x="0" y="0" width="${width}" height="${height}" fill="#ffffff"/>\n`
  );
}

export function text(
  x: number,
  y: number,
  content: string,
  size = 11,
  anchor = "start",
  extra = "",
): string {
  const safe = content
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;");
  return (
    `<text x="${fmt(x)}" y="${fmt(y)}" ${FONT} font-size="${size}" ` +
    `text-anchor="${anchor}" ${extra}>${safe}</text>\n`
  );
}

export function line(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  stroke: string,
  width = 1,
  dash = "",
): string {
  const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
  return (
    `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ` +
    `stroke="${stroke}" stroke-width="${width}"${dashAttr}/>\n`
  );
}

export function polyline(points: Array<[number, number]>, stroke: string, width = 1.5): string {
  const path = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return `<polyline points="${path}" fill="none" stroke="${stroke}" stroke-width="${width}"/>\n`;
}

export function rect(
  x: number,
  y: number,
  w: number,
  h: number,
  fill: string,
  extra = "",
): string {
  return (
    `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" ` +
    `fill="${fill}" ${extra}/>\n`
  );
}

/** Diverging blue-white-red map over [-1, 1], fixed endpoints. */
export function correlationColor(v: number): string {
  const clamp = Math.max(-1, Math.min(1, v));
  const lo = [33, 102, 172]; // deep blue at -1
  const mid = [247, 247, 247];
  const hi = [178, 24, 43]; // deep red at +1
  const [a, b, t] = clamp < 0 ? [lo, mid, clamp + 1] : [mid, hi, clamp];
  const channel = (k: number) => Math.round(a[k]! + (b[k]! - a[k]!) * t);
  return `rgb(${channel(0)},${channel(1)},${channel(2)})`;
}

export interface Frame {
  left: number;
  top: number;
  width: number;
  height: number;
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

export function toPx(frame: Frame, x: number, y: number): [number, number] {
  const px = frame.left + ((x - frame.x0) / (frame.x1 - frame.x0)) * frame.width;
  const py = frame.top + frame.height - ((y - frame.y0) / (frame.y1 - frame.y0)) * frame.height;
  return [px, py];
}

export function axes(
  frame: Frame,
  xticks: Array<[number, string]>,
  yticks: Array<[number, string]>,
  xlabel: string,
  ylabel: string,
  title: string,
): string {
  let out = "";
  out += line(frame.left, frame.top + frame.height, frame.left + frame.width,
    frame.top + frame.height, "#222222");
  out += line(frame.left, frame.top, frame.left, frame.top + frame.height, "#222222");
  for (const [x, label] of xticks) {
    const [px] = toPx(frame, x, frame.y0);
    out += line(px, frame.top + frame.height, px, frame.top + frame.height + 4, "#222222");
    out += text(px, frame.top + frame.height + 16, label, 10, "middle");
  }
  for (const [y, label] of yticks) {
    const [, py] = toPx(frame, frame.x0, y);
    out += line(frame.left - 4, py, frame.left, py, "#222222");
    out += text(frame.left - 7, py + 3.5, label, 10, "end");
  }
  out += text(frame.left + frame.width / 2, frame.top + frame.height + 32, xlabel, 11, "middle");
  out += text(frame.left - 38, frame.top + frame.height / 2, ylabel, 11, "middle",
    `transform="rotate(-90 ${fmt(frame.left - 38)} ${fmt(frame.top + frame.height / 2)})"`);
  out += text(frame.left + frame.width / 2, frame.top - 8, title, 12, "middle");
  return out;
}
