import { ApiClient } from "./client.js";
import { FrontView } from "./frontView.js";
import { mountGantt } from "./gantt.js";

/**
 * Page wiring: the user names a finished run, the front view opens an
 * aspiration session on it, and clicking any solution shows its schedule.
 * Objective names for the run are not served separately, so the page asks
 * for them next to the run id (they only label the controls).
 */
export function wirePage(root: HTMLElement, client: ApiClient): void {
  const form = document.createElement("form");
  form.className = "run-picker";
  const runInput = document.createElement("input");
  runInput.placeholder = "run id";
  runInput.name = "run";
  const objectivesInput = document.createElement("input");
  objectivesInput.placeholder = "objectives (e.g. cmax,tmax)";
  objectivesInput.name = "objectives";
  const button = document.createElement("button");
  button.type = "submit";
  button.textContent = "open";
  form.append(runInput, objectivesInput, button);

  const frontContainer = document.createElement("div");
  const ganttContainer = document.createElement("div");
  const status = document.createElement("div");
  status.className = "page-status";
  root.append(form, status, frontContainer, ganttContainer);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const runId = runInput.value.trim();
    const objectives = objectivesInput.value.split(",").map((s) => s.trim()).filter(Boolean);
    if (!runId || objectives.length === 0) {
      status.textContent = "a run id and its objective names are required";
      return;
    }
    const view = new FrontView(frontContainer, client, objectives, {
      onSelect: (solutionId) => {
        void mountGantt(ganttContainer, () => client.gantt(runId, solutionId));
      },
      onFinalized: (solutionId) => {
        void mountGantt(ganttContainer, () => client.gantt(runId, solutionId));
      },
    });
    status.textContent = "loading…";
    view.open(runId).then(
      () => { status.textContent = ""; },
      (error) => { status.textContent = (error as Error).message; },
    );
  });
}

declare global {
  interface Window {
    shopfrontBase?: string;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const base = window.shopfrontBase
    ?? new URLSearchParams(window.location.search).get("api")
    ?? "http://127.0.0.1:8080";
  wirePage(document.getElementById("app")!, new ApiClient(base));
}
