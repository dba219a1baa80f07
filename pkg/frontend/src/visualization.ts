import { escapeHtml, num, seconds } from "./format.js";
import type { VisualizationPayload } from "./models.js";
import { VIEWS } from "./models.js";

function usageList(items: { name: string; count: number }[]): string {
  if (!items.length) return '<span class="muted">–</span>';
  return items
    .map((i) => `<div class="usage-item">${escapeHtml(i.name)} <b>${num(i.count)}</b></div>`)
    .join("");
}

/** Table layout: one column per view, one row per shared metric. */
export function renderVisualization(payload: VisualizationPayload): string {
  const anyUsers = VIEWS.some((v) => (payload.columns[v]?.user_count ?? 0) > 0);
  if (!anyUsers) {
    return `<div class="empty-state">No visualization activity in the current snapshot.</div>`;
  }
  const header = VIEWS.map((v) => `<th>${v}</th>`).join("");
  const row = (label: string, cell: (v: (typeof VIEWS)[number]) => string) =>
    `<tr><th class="row-label">${label}</th>${VIEWS.map((v) => `<td data-view="${v}">${cell(v)}</td>`).join("")}</tr>`;

  return `
<table class="vis-table">
  <thead><tr><th></th>${header}</tr></thead>
  <tbody>
    ${row("Users", (v) => num(payload.columns[v]?.user_count ?? 0))}
    ${row("Time per user", (v) => {
      const s = payload.columns[v]?.time_per_user;
      return s ? `median ${seconds(s.median)}<br>mean ${seconds(s.mean)}` : '<span class="muted">–</span>';
    })}
    ${row("Filtering interactions", (v) => usageList(payload.columns[v]?.filtering_usage ?? []))}
    ${row("Representation changes", (v) => usageList(payload.columns[v]?.representation_usage ?? []))}
  </tbody>
</table>`;
}
