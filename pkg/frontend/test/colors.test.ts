import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import {
  colorFor,
  effectiveTendency,
  parseTendencyField,
  toRowViews,
  tooltipFor,
} from "../src/rules.js";
import type { AnalysisResponse } from "../src/types.js";

const fixture: AnalysisResponse = JSON.parse(
  readFileSync(new URL("./fixtures/analysis.json", import.meta.url), "utf-8"),
);

describe("color conformance on the fixture poem", () => {
  it("covers all three colors", () => {
    const colors = toRowViews(fixture).map((v) => v.color);
    expect(new Set(colors)).toEqual(new Set(["green", "black", "red"]));
  });

  it("matches the rule computed directly from the JSON", () => {
    const views = toRowViews(fixture);
    fixture.rows.forEach((row, i) => {
      let expected: string;
      if (row.syllables === null) {
        expected = "red";
      } else if (!fixture.tendency.includes(row.syllables)) {
        expected = "red";
      } else if (row.ratio === 1) {
        expected = "green";
      } else {
        expected = "black";
      }
      expect(views[i]!.color).toBe(expected);
    });
  });

  it("agrees with the colors the server chose", () => {
    const views = toRowViews(fixture);
    fixture.rows.forEach((row, i) => {
      expect(views[i]!.color).toBe(row.color);
    });
  });

  it("red takes precedence over a perfect coincidence", () => {
    const offTendency = fixture.rows[3]!;
    expect(offTendency.ratio).toBe(1);
    expect(colorFor(offTendency, [11])).toBe("red");
    // same row inside its own measure would be green
    expect(colorFor(offTendency, [2])).toBe("green");
  });

  it("colors a failed row red", () => {
    const broken = { ...fixture.rows[0]!, syllables: null, ratio: null };
    expect(colorFor(broken, [11])).toBe("red");
  });
});

describe("tendency override", () => {
  it("uses the user field when non-empty", () => {
    expect(effectiveTendency(fixture, [7])).toEqual([7]);
    expect(effectiveTendency(fixture, [])).toEqual([11]);
  });

  it("overriding to the stray measure flips the colors", () => {
    const views = toRowViews(fixture, [2]);
    expect(views.map((v) => v.color)).toEqual(["red", "red", "red", "green"]);
  });

  it("parses the field formats", () => {
    expect(parseTendencyField("11")).toEqual([11]);
    expect(parseTendencyField("7.11")).toEqual([7, 11]);
    expect(parseTendencyField("7, 11")).toEqual([7, 11]);
    expect(parseTendencyField("")).toEqual([]);
    expect(parseTendencyField("once")).toEqual([]);
    expect(parseTendencyField("0")).toEqual([]);
  });
});

describe("tooltips", () => {
  it("carries the scansion columns", () => {
    const tip = tooltipFor(fixture.rows[0]!);
    expect(tip).toContain(fixture.rows[0]!.tagged);
    expect(tip).toContain("pattern: 2.6.10");
    expect(tip).toContain("type: heroico puro");
    expect(tip).toContain("coincidence: 1");
  });

  it("lists the licences", () => {
    const creia = fixture.rows[2]!;
    expect(creia.resources.length).toBeGreaterThan(0);
    expect(tooltipFor(creia)).toContain("synalepha@");
  });

  it("explains failed rows", () => {
    const broken = {
      ...fixture.rows[0]!,
      syllables: null,
      error: "no scannable words",
    };
    expect(tooltipFor(broken)).toContain("no scannable words");
  });
});
