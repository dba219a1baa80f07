import { describe, expect, it } from "vitest";

import { CATEGORIES } from "../src/models.js";
import type { CategoryToken } from "../src/models.js";
import { applyVisibility, layoutTimeline } from "../src/timeline.js";
import {
  renderCategoryLegend,
  renderUserList,
  renderUserNotFound,
  renderUserTimeline,
} from "../src/user.js";
import { emptyUsersFixture, timelineFixture, usersFixture } from "./fixtures.js";

const ALL = new Set<CategoryToken>(CATEGORIES);

describe("renderUserList", () => {
  it("renders one row per user with type badges", () => {
    const html = renderUserList(usersFixture);
    expect(html).toContain('data-user-id="u1a2b3c4d5e6"');
    expect(html).toContain('data-user-id="u0f9e8d7c6b5"');
    expect(html).toContain("MS_Explorer");
    expect(html).toContain("Data_Struggler");
    expect(html).not.toContain("undefined");
    expect(html).not.toContain("NaN");
  });

  it("shows an empty state for an empty corpus", () => {
    const html = renderUserList(emptyUsersFixture);
    expect(html).toContain("empty-state");
    expect(html).not.toContain("undefined");
  });
});

describe("category toggles", () => {
  it("hide blocks without moving the remaining ones", () => {
    const layout = layoutTimeline(timelineFixture);
    const without = new Set<CategoryToken>(
      CATEGORIES.filter((c) => c !== "VisualizationInteraction"),
    );
    const filtered = applyVisibility(layout, without);

    expect(filtered.blocks.length).toBe(layout.blocks.length);
    filtered.blocks.forEach((b, i) => {
      expect(b.leftPct).toBe(layout.blocks[i].leftPct);
      expect(b.widthPct).toBe(layout.blocks[i].widthPct);
      expect(b.visible).toBe(b.category !== "VisualizationInteraction");
    });
    expect(filtered.segments).toEqual(layout.segments);
  });

  it("hidden blocks stay in the markup with visibility:hidden", () => {
    const full = renderUserTimeline(timelineFixture, ALL);
    const filtered = renderUserTimeline(
      timelineFixture,
      new Set<CategoryToken>(["DataManagement"]),
    );
    expect(full).not.toContain("visibility:hidden");
    expect(filtered).toContain("visibility:hidden");
    expect(filtered).toContain('data-name="hover_node"');
    const leftOf = (html: string, name: string) => {
      const m = html.match(new RegExp(`data-name="${name}"[^>]*left:([0-9.]+)%`));
      return m && m[1];
    };
    for (const name of ["upload_own_data", "hover_node", "bookmark_create"]) {
      expect(leftOf(filtered, name)).toBe(leftOf(full, name));
    }
  });

  it("re-enabling every category restores the original render exactly", () => {
    const full = renderUserTimeline(timelineFixture, ALL);
    const toggledBack = renderUserTimeline(timelineFixture, new Set<CategoryToken>(CATEGORIES));
    expect(toggledBack).toBe(full);
  });

  it("legend renders a checkbox per category reflecting the enabled set", () => {
    const html = renderCategoryLegend(new Set<CategoryToken>(["Bookmark"]));
    for (const c of CATEGORIES) expect(html).toContain(`data-category="${c}"`);
    expect(html).toContain('data-category="Bookmark" checked');
  });
});

describe("timeline layout", () => {
  it("positions blocks and view segments on a shared percent scale", () => {
    const layout = layoutTimeline(timelineFixture);
    expect(layout.startTs).toBe(timelineFixture.blocks[0].start_ts);
    for (const b of layout.blocks) {
      expect(b.leftPct).toBeGreaterThanOrEqual(0);
      expect(b.leftPct).toBeLessThanOrEqual(100);
      expect(b.widthPct).toBeGreaterThan(0);
    }
    const nodelink = layout.segments.find((s) => s.view === "NodeLink");
    expect(nodelink).toBeDefined();
    expect(nodelink!.leftPct + nodelink!.widthPct).toBeCloseTo(100, 6);
  });

  it("renders an unknown-user notice with the id escaped", () => {
    const html = renderUserNotFound('<script>"x"');
    expect(html).toContain("empty-state");
    expect(html).toContain("&lt;script&gt;&quot;x&quot;");
    expect(html).not.toContain("<script>");
  });
});
