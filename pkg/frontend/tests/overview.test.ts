import { describe, expect, it } from "vitest";

import { renderOverview } from "../src/overview.js";
import { emptyOverviewFixture, overviewFixture } from "./fixtures.js";

describe("renderOverview", () => {
  const html = renderOverview(overviewFixture);

  it("shows the headline user stats", () => {
    expect(html).toContain("Total users");
    expect(html).toContain("10");
    expect(html).toContain("Returning rate");
    expect(html).toContain("30.0%");
    for (const t of ["Demo", "Data_Struggler", "SS_Explorer", "MS_Explorer"]) {
      expect(html).toContain(t);
    }
  });

  it("renders the monthly trend with annotation markers", () => {
    expect(html).toContain('data-month="2024-01"');
    expect(html).toContain('data-month="2024-02"');
    expect(html).toContain('data-month="2024-03"');
    expect(html).toContain('data-kind="teaching"');
    expect(html).toContain("Course launch");
  });

  it("renders session length summaries per type", () => {
    expect(html).toContain("median 2.0min");
    expect(html).toContain("median 15.0min");
  });

  it("renders feature frequency, help usage, and time-by-type strata", () => {
    expect(html).toContain("hover_node");
    expect(html).toContain("pan_zoom");
    expect(html).toContain("data_formatting");
    expect(html).toContain("Time by type");
    expect(html).toContain("mean 55.0min");
  });

  it("shows an empty state for an empty corpus, with no junk tokens", () => {
    const empty = renderOverview(emptyOverviewFixture);
    expect(empty).toContain("empty-state");
    expect(empty).not.toContain("undefined");
    expect(empty).not.toContain("NaN");
  });

  it("never leaks undefined or NaN into populated markup", () => {
    expect(html).not.toContain("undefined");
    expect(html).not.toContain("NaN");
  });
});
