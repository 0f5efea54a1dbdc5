import { ApiError } from "./client.js";
import type { ApiClient } from "./client.js";
import type { AimState, FrontSolution } from "./types.js";

export interface FrontViewOptions {
  /** called when the user picks a solution row or point */
  onSelect?: (solutionId: string) => void;
  /** called after a successful finalize */
  onFinalized?: (solutionId: string, vector: number[]) => void;
}

/**
 * Outcome-space explorer bound to one finished run.
 *
 * The view holds no scheduling logic of its own: the accepted/rejected
 * split, the level vector, and the survivor all come verbatim from the
 * latest server response. Level edits are coalesced so at most one
 * mutation is in flight; edits made while waiting are folded into the
 * next request (latest value per objective wins).
 */
export class FrontView {
  private readonly container: HTMLElement;
  private readonly client: ApiClient;
  private readonly objectives: string[];
  private readonly options: FrontViewOptions;

  private front: FrontSolution[] = [];
  private state: AimState | null = null;
  private axisX = 0;
  private axisY = 1;
  private sortColumn = -1;
  private sortAscending = true;
  private errorText = "";

  private readonly pendingLevels = new Map<number, number>();
  private pump: Promise<void> | null = null;

  constructor(container: HTMLElement, client: ApiClient, objectives: string[],
              options: FrontViewOptions = {}) {
    this.container = container;
    this.client = client;
    this.objectives = objectives;
    this.options = options;
    this.axisY = objectives.length > 1 ? 1 : 0;
  }

  /** Load the run's front and open an aspiration session on it. */
  async open(runId: string): Promise<void> {
    this.front = await this.client.front(runId);
    this.state = await this.client.openAim(runId);
    this.errorText = "";
    this.render();
  }

  acceptedIds(): string[] {
    return this.state ? [...this.state.as_ids] : [];
  }

  levels(): number[] {
    return this.state ? [...this.state.levels] : [];
  }

  /**
   * Request a new aspiration level for a 1-based objective index. Values
   * snap to integers. Returns immediately; await idle() to observe the
   * settled state.
   */
  applyLevel(objectiveIndex: number, value: number): void {
    this.pendingLevels.set(objectiveIndex, Math.round(value));
    if (!this.pump) {
      this.pump = this.drainPending();
    }
  }

  /** Resolves once every queued level change has been answered. */
  async idle(): Promise<void> {
    while (this.pump) {
      await this.pump;
    }
  }

  private async drainPending(): Promise<void> {
    try {
      while (this.pendingLevels.size > 0) {
        const [index, value] = this.pendingLevels.entries().next().value as [number, number];
        this.pendingLevels.delete(index);
        if (!this.state) return;
        try {
          this.state = await this.client.setLevel(this.state.id, index, value);
          this.errorText = "";
        } catch (error) {
          if (!(error instanceof ApiError)) throw error;
          this.errorText = error.detail;
        }
        this.render();
      }
    } finally {
      this.pump = null;
      if (this.pendingLevels.size > 0) {
        this.pump = this.drainPending();
      }
    }
  }

  async finalizeSelection(): Promise<void> {
    if (!this.state) return;
    try {
      const result = await this.client.finalize(this.state.id);
      this.errorText = "";
      this.render();
      this.renderWinner(result.id, result.vector);
      this.options.onFinalized?.(result.id, result.vector);
    } catch (error) {
      if (!(error instanceof ApiError)) throw error;
      this.errorText = error.count !== undefined
        ? `${error.detail} (${error.count} accepted)`
        : error.detail;
      this.render();
    }
  }

  /** Swap the plotted axis pair; membership is untouched by design. */
  selectAxes(x: number, y: number): void {
    this.axisX = x;
    this.axisY = y;
    this.render();
  }

  sortBy(column: number): void {
    if (this.sortColumn === column) {
      this.sortAscending = !this.sortAscending;
    } else {
      this.sortColumn = column;
      this.sortAscending = true;
    }
    this.render();
  }

  // -- rendering ---------------------------------------------------------

  private render(): void {
    if (!this.state) return;
    const accepted = new Set(this.state.as_ids);
    this.container.textContent = "";
    this.container.classList.add("front-view");

    this.container.appendChild(this.renderLevels());
    this.container.appendChild(this.renderCounter());
    if (this.errorText) {
      const error = document.createElement("div");
      error.className = "fv-error";
      error.textContent = this.errorText;
      this.container.appendChild(error);
    }
    if (this.objectives.length > 2) {
      this.container.appendChild(this.renderAxisPickers());
    }
    this.container.appendChild(this.renderPlot(accepted));
    this.container.appendChild(this.renderTable(accepted));
    this.container.appendChild(this.renderFinalize());
  }

  private renderLevels(): HTMLElement {
    const panel = document.createElement("div");
    panel.className = "fv-levels";
    this.state!.levels.forEach((level, i) => {
      const label = document.createElement("label");
      label.textContent = `${this.objectives[i]} ≤ `;
      const input = document.createElement("input");
      input.type = "number";
      input.step = "1";
      input.value = String(level);
      input.dataset.objective = String(i + 1);
      input.addEventListener("change", () => {
        this.applyLevel(i + 1, Number(input.value));
      });
      label.appendChild(input);
      panel.appendChild(label);
    });
    return panel;
  }

  private renderCounter(): HTMLElement {
    const row = document.createElement("div");
    row.className = "fv-status";
    const counter = document.createElement("span");
    counter.className = "fv-count";
    counter.textContent = String(this.state!.as_ids.length);
    row.appendChild(counter);
    const caption = document.createElement("span");
    caption.textContent = ` of ${this.front.length} accepted`;
    row.appendChild(caption);
    if (this.state!.as_ids.length === 0) {
      const badge = document.createElement("span");
      badge.className = "fv-warning";
      badge.textContent = "no solution satisfies every level";
      row.appendChild(badge);
    }
    return row;
  }

  private renderAxisPickers(): HTMLElement {
    const panel = document.createElement("div");
    panel.className = "fv-axes";
    const make = (axis: "x" | "y", selected: number) => {
      const select = document.createElement("select");
      select.dataset.axis = axis;
      this.objectives.forEach((name, i) => {
        const option = document.createElement("option");
        option.value = String(i);
        option.textContent = name;
        option.selected = i === selected;
        select.appendChild(option);
      });
      select.addEventListener("change", () => {
        const index = Number(select.value);
        if (axis === "x") this.selectAxes(index, this.axisY);
        else this.selectAxes(this.axisX, index);
      });
      panel.appendChild(select);
    };
    make("x", this.axisX);
    make("y", this.axisY);
    return panel;
  }

  private renderPlot(accepted: Set<string>): HTMLElement {
    const plot = document.createElement("div");
    plot.className = "fv-plot";
    plot.dataset.x = this.objectives[this.axisX];
    plot.dataset.y = this.objectives[this.axisY];
    const xs = this.front.map((s) => s.vector[this.axisX]);
    const ys = this.front.map((s) => s.vector[this.axisY]);
    const spanOf = (values: number[]) => {
      const lo = Math.min(...values);
      const hi = Math.max(...values);
      return { lo, span: hi > lo ? hi - lo : 1 };
    };
    const x = spanOf(xs);
    const y = spanOf(ys);
    for (const solution of this.front) {
      const point = document.createElement("div");
      point.className = accepted.has(solution.id)
        ? "fv-point accepted"
        : "fv-point rejected";
      point.dataset.id = solution.id;
      point.style.left = `${((solution.vector[this.axisX] - x.lo) / x.span) * 100}%`;
      point.style.bottom = `${((solution.vector[this.axisY] - y.lo) / y.span) * 100}%`;
      point.title = `${solution.id}: (${solution.vector.join(", ")})`;
      point.addEventListener("click", () => this.options.onSelect?.(solution.id));
      plot.appendChild(point);
    }
    return plot;
  }

  private renderTable(accepted: Set<string>): HTMLElement {
    const table = document.createElement("table");
    table.className = "fv-table";
    const head = table.createTHead().insertRow();
    ["solution", ...this.objectives].forEach((name, column) => {
      const th = document.createElement("th");
      th.textContent = name;
      th.addEventListener("click", () => this.sortBy(column - 1));
      head.appendChild(th);
    });
    const rows = [...this.front];
    if (this.sortColumn >= 0) {
      const c = this.sortColumn;
      const sign = this.sortAscending ? 1 : -1;
      rows.sort((a, b) => sign * (a.vector[c] - b.vector[c]));
    }
    const body = table.createTBody();
    for (const solution of rows) {
      const row = body.insertRow();
      row.dataset.id = solution.id;
      row.className = accepted.has(solution.id) ? "accepted" : "rejected";
      row.insertCell().textContent = solution.id;
      for (const value of solution.vector) {
        row.insertCell().textContent = String(value);
      }
      row.addEventListener("click", () => this.options.onSelect?.(solution.id));
    }
    return table;
  }

  private renderFinalize(): HTMLElement {
    const button = document.createElement("button");
    button.className = "fv-finalize";
    button.textContent = "finalize";
    button.disabled = this.state!.as_ids.length !== 1;
    button.addEventListener("click", () => {
      void this.finalizeSelection();
    });
    return button;
  }

  private renderWinner(solutionId: string, vector: number[]): void {
    const panel = document.createElement("div");
    panel.className = "fv-winner";
    panel.dataset.id = solutionId;
    panel.textContent = `compromise: ${solutionId} (${vector.join(", ")})`;
    this.container.appendChild(panel);
  }
}
