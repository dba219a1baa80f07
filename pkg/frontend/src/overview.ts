import { TYPE_COLORS } from "./colors.js";
import { escapeHtml, num, pct, seconds } from "./format.js";
import type { OverviewPayload, UserTypeToken } from "./models.js";
import { USER_TYPES } from "./models.js";

function statCard(label: string, value: string, sub = ""): string {
  return (
    `<div class="stat-card"><div class="stat-value">${value}</div>` +
    `<div class="stat-label">${escapeHtml(label)}</div>` +
    (sub ? `<div class="stat-sub">${sub}</div>` : "") +
    `</div>`
  );
}

function hbar(label: string, value: number, maxValue: number, color = "#888"): string {
  const w = maxValue > 0 ? (value / maxValue) * 100 : 0;
  return (
    `<div class="hbar-row"><span class="hbar-label">${escapeHtml(label)}</span>` +
    `<div class="hbar"><div class="hbar-fill" style="width:${w.toFixed(1)}%;background:${color}"></div></div>` +
    `<span class="hbar-value">${num(value)}</span></div>`
  );
}

function trendChart(payload: OverviewPayload): string {
  const buckets = payload.annotated_trend;
  const maxCount = Math.max(1, ...buckets.map((b) => b.count));
  const bars = buckets
    .map((b) => {
      const h = (b.count / maxCount) * 100;
      const markers = b.annotations
        .map(
          (a) =>
            `<div class="annotation-marker" data-kind="${escapeHtml(a.kind)}" ` +
            `title="${escapeHtml(a.label)}"></div>`,
        )
        .join("");
      return (
        `<div class="trend-col" data-month="${b.month}">` +
        `<div class="trend-bar" style="height:${h.toFixed(1)}%" title="${b.month}: ${b.count}"></div>` +
        `<div class="trend-markers">${markers}</div>` +
        `<div class="trend-month">${b.month.slice(2)}</div></div>`
      );
    })
    .join("");
  return `<div class="trend-chart">${bars}</div>`;
}

function sessionLengthBoxes(payload: OverviewPayload): string {
  return USER_TYPES.map((t) => {
    const s = payload.session_length_dist[t];
    if (!s) {
      return `<div class="box-row"><span class="hbar-label">${t}</span><span class="muted">no visits</span></div>`;
    }
    return (
      `<div class="box-row"><span class="hbar-label">${t}</span>` +
      `<span>min ${seconds(s.min)} · p25 ${seconds(s.p25)} · median ${seconds(s.median)}` +
      ` · p75 ${seconds(s.p75)} · max ${seconds(s.max)} · mean ${seconds(s.mean)}</span></div>`
    );
  }).join("");
}

function helpUsageChart(payload: OverviewPayload): string {
  const rows: string[] = [];
  let max = 0;
  for (const t of USER_TYPES) {
    for (const c of Object.values(payload.help_usage[t] ?? {})) max = Math.max(max, c);
  }
  for (const t of USER_TYPES) {
    const usage = payload.help_usage[t] ?? {};
    const cells = Object.entries(usage)
      .filter(([, c]) => c > 0)
      .map(([kind, c]) => hbar(kind, c, max, TYPE_COLORS[t]))
      .join("");
    rows.push(`<div class="help-group"><h4>${t}</h4>${cells || '<span class="muted">none</span>'}</div>`);
  }
  return rows.join("");
}

export function renderOverview(payload: OverviewPayload): string {
  if (payload.total_users === 0) {
    return `<div class="empty-state">No users in the current snapshot. Ingest some logs and reload.</div>`;
  }
  const typeCards = USER_TYPES.map((t: UserTypeToken) =>
    statCard(t, num(payload.type_counts[t] ?? 0)),
  ).join("");
  const maxFeature = Math.max(1, ...payload.feature_frequency.map((f) => f.count));
  const featureBars = payload.feature_frequency
    .map((f) => hbar(f.name, f.count, maxFeature, "#2ca02c"))
    .join("");
  const timeRows = USER_TYPES.map((t) => {
    const row = payload.time_by_type[t] ?? { total_s: 0, mean_s: 0 };
    return (
      `<div class="box-row"><span class="hbar-label">${t}</span>` +
      `<span>total ${seconds(row.total_s)} · mean ${seconds(row.mean_s)}</span></div>`
    );
  }).join("");

  return `
<section class="strata" id="user-stats">
  ${statCard("Total users", num(payload.total_users))}
  ${typeCards}
  ${statCard("Returning rate", pct(payload.returning_rate))}
</section>
<section class="strata" id="trend">
  <h3>Monthly visits with external events</h3>
  ${trendChart(payload)}
  <h3>Session length by user type</h3>
  <div id="session-length">${sessionLengthBoxes(payload)}</div>
</section>
<section class="strata" id="feature-usage">
  <div class="col"><h3>Top features</h3>${featureBars}</div>
  <div class="col"><h3>Help resources</h3>${helpUsageChart(payload)}</div>
  <div class="col"><h3>Time by type</h3>${timeRows}</div>
</section>`;
}
