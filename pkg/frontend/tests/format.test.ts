import { describe, expect, it } from "vitest";

import { escapeHtml, num, pct, seconds, timestamp } from "../src/format.js";

describe("formatters", () => {
  it("num formats integers and guards non-finite input", () => {
    expect(num(1234567)).toBe("1,234,567");
    expect(num(0)).toBe("0");
    expect(num(NaN)).toBe("–");
    expect(num(Infinity)).toBe("–");
    expect(num(null)).toBe("–");
    expect(num(undefined)).toBe("–");
  });

  it("pct renders a fraction as a percentage", () => {
    expect(pct(0.375)).toBe("37.5%");
    expect(pct(0)).toBe("0.0%");
    expect(pct(NaN)).toBe("–");
  });

  it("seconds scales units by magnitude", () => {
    expect(seconds(45)).toBe("45s");
    expect(seconds(300)).toBe("5.0min");
    expect(seconds(7200)).toBe("2.0h");
    expect(seconds(null)).toBe("–");
  });

  it("timestamp renders UTC minutes and guards bad input", () => {
    expect(timestamp(1704067200000)).toBe("2024-01-01 00:00 UTC");
    expect(timestamp(NaN)).toBe("–");
  });

  it("escapeHtml neutralizes markup characters", () => {
    expect(escapeHtml('<a href="x">&</a>')).toBe("&lt;a href=&quot;x&quot;&gt;&amp;&lt;/a&gt;");
  });
});
