import { CATEGORY_COLORS, TYPE_COLORS } from "./colors.js";
import { escapeHtml, num, timestamp } from "./format.js";
import type { CategoryToken, TimelinePayload, UsersPayload } from "./models.js";
import { CATEGORIES } from "./models.js";
import { applyVisibility, layoutTimeline, renderTimeline } from "./timeline.js";

export function renderUserList(payload: UsersPayload): string {
  if (payload.total === 0) {
    return `<div class="empty-state">No users match the current filter.</div>`;
  }
  const rows = payload.users
    .map(
      (u) =>
        `<tr class="user-row" data-user-id="${escapeHtml(u.id)}">` +
        `<td><code>${escapeHtml(u.id)}</code></td>` +
        `<td><span class="type-badge" style="background:${TYPE_COLORS[u.type]}">${u.type}</span></td>` +
        `<td>${num(u.visit_count)}</td>` +
        `<td>${num(u.networks_created)}</td>` +
        `<td>${timestamp(u.last_seen)}</td></tr>`,
    )
    .join("");
  return `
<table class="user-table">
  <thead><tr><th>User</th><th>Type</th><th>Visits</th><th>Networks</th><th>Last seen</th></tr></thead>
  <tbody>${rows}</tbody>
</table>`;
}

export function renderCategoryLegend(enabled: ReadonlySet<CategoryToken>): string {
  return CATEGORIES.map(
    (c) =>
      `<label class="legend-item"><input type="checkbox" data-category="${c}" ` +
      `${enabled.has(c) ? "checked" : ""}>` +
      `<span class="swatch" style="background:${CATEGORY_COLORS[c]}"></span>${c}</label>`,
  ).join("");
}

/**
 * Render one visit timeline with category toggles applied. Layout is
 * computed from the full payload; toggles only flip visibility, so blocks
 * never move when filters change.
 */
export function renderUserTimeline(
  payload: TimelinePayload,
  enabled: ReadonlySet<CategoryToken> = new Set(CATEGORIES),
): string {
  const layout = applyVisibility(layoutTimeline(payload), enabled);
  return (
    `<div class="visit-header">Visit ${payload.visit_index} · ` +
    `${payload.blocks.length} block(s)</div>` +
    renderTimeline(layout)
  );
}

export function renderUserNotFound(userId: string): string {
  return `<div class="empty-state">User ${escapeHtml(userId)} not found.</div>`;
}
