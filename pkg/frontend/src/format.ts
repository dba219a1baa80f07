// Display formatting with explicit guards: the UI must never show NaN,
// undefined, or Infinity, whatever the payload contains.

export function num(v: number | null | undefined): string {
  if (v === null || v === undefined || !Number.isFinite(v)) return "–";
  return v.toLocaleString("en-US");
}

export function pct(fraction: number | null | undefined): string {
  if (fraction === null || fraction === undefined || !Number.isFinite(fraction)) return "–";
  return `${(fraction * 100).toFixed(1)}%`;
}

export function seconds(v: number | null | undefined): string {
  if (v === null || v === undefined || !Number.isFinite(v)) return "–";
  if (v < 90) return `${v.toFixed(0)}s`;
  if (v < 5400) return `${(v / 60).toFixed(1)}min`;
  return `${(v / 3600).toFixed(1)}h`;
}

export function timestamp(tsMs: number): string {
  if (!Number.isFinite(tsMs)) return "–";
  return new Date(tsMs).toISOString().replace("T", " ").slice(0, 16) + " UTC";
}

export function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
