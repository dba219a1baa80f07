import { describe, expect, it } from "vitest";

import { renderVisualization } from "../src/visualization.js";
import { emptyVisualizationFixture, visualizationFixture } from "./fixtures.js";

describe("renderVisualization", () => {
  const html = renderVisualization(visualizationFixture);

  it("renders one column per view", () => {
    for (const v of ["NodeLink", "Matrix", "Timeline", "Map", "Coordinated"]) {
      expect(html).toContain(`<th>${v}</th>`);
      expect(html).toContain(`data-view="${v}"`);
    }
  });

  it("renders the per-view metric rows", () => {
    expect(html).toContain("Users");
    expect(html).toContain("Time per user");
    expect(html).toContain("Filtering interactions");
    expect(html).toContain("Representation changes");
    expect(html).toContain("time_slider");
    expect(html).toContain("matrix_reorder");
    expect(html).toContain("median 5.0min");
  });

  it("falls back to a dash for views without timings", () => {
    expect(html).toContain("–");
    expect(html).not.toContain("undefined");
    expect(html).not.toContain("NaN");
  });

  it("shows an empty state when no view has users", () => {
    const empty = renderVisualization(emptyVisualizationFixture);
    expect(empty).toContain("empty-state");
    expect(empty).not.toContain("undefined");
    expect(empty).not.toContain("NaN");
  });
});
