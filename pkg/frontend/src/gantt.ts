import type { GanttData } from "./types.js";

/** Percent position helper; horizon 0 collapses everything to the origin. */
function pct(value: number, horizon: number): string {
  if (horizon <= 0) return "0%";
  return `${(value / horizon) * 100}%`;
}

/**
 * Render one lane per machine with bars placed proportionally on a
 * 0..horizon axis. Zero-duration operations become tick marks. Bars carry
 * data-* attributes with the served numbers so nothing is lost to CSS
 * rounding, and a title for hover inspection.
 */
export function renderGantt(container: HTMLElement, data: GanttData): void {
  container.textContent = "";
  container.classList.add("gantt");

  for (const lane of data.machines) {
    const row = document.createElement("div");
    row.className = "gantt-lane";
    row.dataset.machine = String(lane.machine);

    const label = document.createElement("span");
    label.className = "gantt-lane-label";
    label.textContent = `M${lane.machine}`;
    row.appendChild(label);

    const track = document.createElement("div");
    track.className = "gantt-track";
    for (const bar of lane.bars) {
      const el = document.createElement("div");
      el.className = bar.start === bar.end ? "gantt-tick" : "gantt-bar";
      el.style.left = pct(bar.start, data.horizon);
      if (bar.start !== bar.end) {
        el.style.width = pct(bar.end - bar.start, data.horizon);
      }
      el.dataset.job = String(bar.job);
      el.dataset.op = String(bar.op);
      el.dataset.start = String(bar.start);
      el.dataset.end = String(bar.end);
      el.title = `J${bar.job} op ${bar.op}: ${bar.start}–${bar.end}`;
      el.textContent = `J${bar.job}`;
      track.appendChild(el);
    }
    row.appendChild(track);
    container.appendChild(row);
  }

  const axis = document.createElement("div");
  axis.className = "gantt-axis";
  const origin = document.createElement("span");
  origin.textContent = "0";
  const horizon = document.createElement("span");
  horizon.className = "gantt-horizon";
  horizon.textContent = String(data.horizon);
  axis.append(origin, horizon);
  container.appendChild(axis);
}

/**
 * Fetch-and-render with a retriable error panel: a failed load leaves a
 * message and a retry button in place of the chart.
 */
export async function mountGantt(container: HTMLElement,
                                 load: () => Promise<GanttData>): Promise<void> {
  try {
    renderGantt(container, await load());
  } catch (error) {
    container.textContent = "";
    const panel = document.createElement("div");
    panel.className = "gantt-error";
    const message = document.createElement("span");
    message.textContent = `could not load schedule: ${(error as Error).message}`;
    const retry = document.createElement("button");
    retry.className = "gantt-retry";
    retry.textContent = "retry";
    retry.addEventListener("click", () => {
      void mountGantt(container, load);
    });
    panel.append(message, retry);
    container.appendChild(panel);
  }
}
