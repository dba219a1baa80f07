import { CATEGORY_COLORS, VIEW_TEXTURES } from "./colors.js";
import { escapeHtml } from "./format.js";
import type { CategoryToken, TimelinePayload } from "./models.js";

export interface BlockLayout {
  name: string;
  category: CategoryToken;
  count: number;
  /** percent offsets within the track; fixed once computed */
  leftPct: number;
  widthPct: number;
  visible: boolean;
}

export interface SegmentLayout {
  view: string;
  leftPct: number;
  widthPct: number;
}

export interface TimelineLayout {
  blocks: BlockLayout[];
  segments: SegmentLayout[];
  startTs: number;
  endTs: number;
}

const MIN_BLOCK_WIDTH_PCT = 0.4; // instantaneous dashes stay clickable

/**
 * Compute the positioned layout from the full payload. Positions depend only
 * on the payload, never on the filter state, so toggling categories cannot
 * shift the remaining blocks.
 */
export function layoutTimeline(payload: TimelinePayload): TimelineLayout {
  const stamps = [
    ...payload.blocks.map((b) => b.start_ts),
    ...payload.blocks.map((b) => b.end_ts),
    ...payload.segments.map((s) => s.start_ts),
    ...payload.segments.map((s) => s.end_ts),
  ];
  const startTs = stamps.length ? Math.min(...stamps) : 0;
  const endTs = stamps.length ? Math.max(...stamps) : 1;
  const span = Math.max(1, endTs - startTs);
  const toPct = (ts: number) => ((ts - startTs) / span) * 100;

  return {
    startTs,
    endTs,
    blocks: payload.blocks.map((b) => ({
      name: b.name,
      category: b.category,
      count: b.count,
      leftPct: toPct(b.start_ts),
      widthPct: Math.max(MIN_BLOCK_WIDTH_PCT, toPct(b.end_ts) - toPct(b.start_ts)),
      visible: true,
    })),
    segments: payload.segments.map((s) => ({
      view: s.view,
      leftPct: toPct(s.start_ts),
      widthPct: toPct(s.end_ts) - toPct(s.start_ts),
    })),
  };
}

/** Pure visibility update: positions untouched, only the flag changes. */
export function applyVisibility(
  layout: TimelineLayout,
  enabled: ReadonlySet<CategoryToken>,
): TimelineLayout {
  return {
    ...layout,
    blocks: layout.blocks.map((b) => ({ ...b, visible: enabled.has(b.category) })),
  };
}

export function renderTimeline(layout: TimelineLayout): string {
  const blocks = layout.blocks
    .map(
      (b) =>
        `<div class="block" data-name="${escapeHtml(b.name)}" data-category="${b.category}"` +
        ` style="left:${b.leftPct.toFixed(3)}%;width:${b.widthPct.toFixed(3)}%;` +
        `background:${CATEGORY_COLORS[b.category]};` +
        `visibility:${b.visible ? "visible" : "hidden"}" ` +
        `title="${escapeHtml(b.name)} ×${b.count}">` +
        (b.count > 1 ? `<span class="badge">${b.count}</span>` : "") +
        `</div>`,
    )
    .join("");
  const segments = layout.segments
    .map(
      (s) =>
        `<div class="segment" data-view="${s.view}" ` +
        `style="left:${s.leftPct.toFixed(3)}%;width:${s.widthPct.toFixed(3)}%;` +
        `background:${VIEW_TEXTURES[s.view as keyof typeof VIEW_TEXTURES] ?? "#f4f4f4"}"></div>`,
    )
    .join("");
  return (
    `<div class="timeline"><div class="track">${blocks}</div>` +
    `<div class="sidebar">${segments}</div></div>`
  );
}
