import { beforeEach, describe, expect, it } from "vitest";

import { mountGantt, renderGantt } from "../src/gantt.js";
import type { GanttData } from "../src/types.js";

// the two-job instance's optimal schedule, as the service serves it
const T2_GANTT: GanttData = {
  machines: [
    {
      machine: 0,
      bars: [
        { job: 1, op: 1, start: 0, end: 3 },
        { job: 2, op: 2, start: 3, end: 7 },
      ],
    },
    {
      machine: 1,
      bars: [
        { job: 2, op: 1, start: 0, end: 2 },
        { job: 1, op: 2, start: 3, end: 5 },
      ],
    },
  ],
  horizon: 7,
};

let container: HTMLElement;

beforeEach(() => {
  container = document.createElement("div");
  document.body.replaceChildren(container);
});

function barData(lane: Element): Array<[number, number, number, number]> {
  return [...lane.querySelectorAll<HTMLElement>(".gantt-bar, .gantt-tick")].map(
    (el) => [
      Number(el.dataset.job),
      Number(el.dataset.op),
      Number(el.dataset.start),
      Number(el.dataset.end),
    ],
  );
}

describe("renderGantt", () => {
  it("renders one lane per machine with the served intervals", () => {
    renderGantt(container, T2_GANTT);
    const lanes = container.querySelectorAll(".gantt-lane");
    expect(lanes).toHaveLength(2);
    expect(barData(lanes[0])).toEqual([
      [1, 1, 0, 3],
      [2, 2, 3, 7],
    ]);
    expect(barData(lanes[1])).toEqual([
      [2, 1, 0, 2],
      [1, 2, 3, 5],
    ]);
  });

  it("places bars proportionally on the 0..horizon axis", () => {
    renderGantt(container, T2_GANTT);
    const bars = container.querySelectorAll<HTMLElement>(
      ".gantt-lane:first-of-type .gantt-bar",
    );
    expect(bars[0].style.left).toBe("0%");
    expect(parseFloat(bars[0].style.width)).toBeCloseTo((3 / 7) * 100, 6);
    expect(parseFloat(bars[1].style.left)).toBeCloseTo((3 / 7) * 100, 6);
    expect(parseFloat(bars[1].style.width)).toBeCloseTo((4 / 7) * 100, 6);
  });

  it("labels bars with the job and describes them on hover", () => {
    renderGantt(container, T2_GANTT);
    const first = container.querySelector<HTMLElement>(".gantt-bar")!;
    expect(first.textContent).toBe("J1");
    expect(first.title).toBe("J1 op 1: 0–3");
  });

  it("renders zero-duration operations as ticks, not bars", () => {
    renderGantt(container, {
      machines: [
        { machine: 0, bars: [{ job: 1, op: 1, start: 4, end: 4 }] },
      ],
      horizon: 8,
    });
    expect(container.querySelectorAll(".gantt-bar")).toHaveLength(0);
    const tick = container.querySelector<HTMLElement>(".gantt-tick")!;
    expect(tick.style.left).toBe("50%");
    expect(tick.style.width).toBe("");
  });

  it("shows the horizon as the axis end label", () => {
    renderGantt(container, T2_GANTT);
    expect(container.querySelector(".gantt-horizon")!.textContent).toBe("7");
    const ends = [...container.querySelectorAll<HTMLElement>(".gantt-bar")].map(
      (el) => Number(el.dataset.end),
    );
    expect(Math.max(...ends)).toBe(7);
  });

  it("re-rendering replaces the previous chart", () => {
    renderGantt(container, T2_GANTT);
    renderGantt(container, T2_GANTT);
    expect(container.querySelectorAll(".gantt-lane")).toHaveLength(2);
  });
});

describe("mountGantt", () => {
  it("renders the chart when the fetch succeeds", async () => {
    await mountGantt(container, async () => T2_GANTT);
    expect(container.querySelectorAll(".gantt-lane")).toHaveLength(2);
  });

  it("shows a retriable error panel and recovers on retry", async () => {
    let calls = 0;
    const flaky = async () => {
      calls += 1;
      if (calls === 1) throw new Error("connection refused");
      return T2_GANTT;
    };
    await mountGantt(container, flaky);
    expect(container.querySelector(".gantt-error")!.textContent).toContain(
      "connection refused",
    );
    expect(container.querySelectorAll(".gantt-lane")).toHaveLength(0);

    container.querySelector<HTMLButtonElement>(".gantt-retry")!.click();
    await new Promise((resolve) => setTimeout(resolve, 0));
    expect(container.querySelector(".gantt-error")).toBeNull();
    expect(container.querySelectorAll(".gantt-lane")).toHaveLength(2);
  });
});
