import type {
  AimResult,
  AimState,
  FrontSolution,
  GanttData,
  InstanceSummary,
  RunRequest,
  RunStatus,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: string;
  /** finalize conflicts report how many solutions are still accepted */
  count?: number;

  constructor(status: number, detail: string, count?: number) {
    super(`HTTP ${status}: ${detail}`);
    this.status = status;
    this.detail = detail;
    this.count = count;
  }
}

export interface ExchangeRecord {
  method: string;
  path: string;
  status: number;
  body: string;
}

/** Thin fetch wrapper around the service. Every response body is kept
 * verbatim in `log`, so tests can prove the view renders exactly what the
 * server sent and nothing the client computed on its own. */
export class ApiClient {
  readonly baseUrl: string;
  readonly log: ExchangeRecord[] = [];

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  lastExchange(): ExchangeRecord | undefined {
    return this.log[this.log.length - 1];
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await fetch(this.baseUrl + path, init);
    const text = await response.text();
    this.log.push({ method, path, status: response.status, body: text });
    if (!response.ok) {
      let detail = text;
      let count: number | undefined;
      try {
        const parsed = JSON.parse(text);
        detail = parsed.detail ?? text;
        if (typeof parsed.count === "number") count = parsed.count;
      } catch {
        // non-JSON error body: keep the raw text
      }
      throw new ApiError(response.status, detail, count);
    }
    return JSON.parse(text) as T;
  }

  listInstances(): Promise<InstanceSummary[]> {
    return this.request("GET", "/instances");
  }

  uploadInstance(format: "json" | "jss" | "fsp", content: string, name?: string): Promise<InstanceSummary> {
    const body: Record<string, unknown> = { format, content };
    if (name !== undefined) body.name = name;
    return this.request("POST", "/instances", body);
  }

  startRun(request: RunRequest): Promise<{ id: string }> {
    return this.request("POST", "/runs", request);
  }

  runStatus(runId: string): Promise<RunStatus> {
    return this.request("GET", `/runs/${runId}`);
  }

  front(runId: string): Promise<FrontSolution[]> {
    return this.request("GET", `/runs/${runId}/front`);
  }

  gantt(runId: string, solutionId: string): Promise<GanttData> {
    return this.request("GET", `/runs/${runId}/solutions/${solutionId}/gantt`);
  }

  openAim(runId: string): Promise<AimState> {
    return this.request("POST", "/aim", { run: runId });
  }

  setLevel(sessionId: string, objectiveIndex: number, value: number): Promise<AimState> {
    return this.request("PATCH", `/aim/${sessionId}/levels/${objectiveIndex}`, { value });
  }

  finalize(sessionId: string): Promise<AimResult> {
    return this.request("POST", `/aim/${sessionId}/finalize`);
  }

  /** Poll a run until it leaves the queue; rejects if it failed. */
  async waitForRun(runId: string, intervalMs = 100, timeoutMs = 60000): Promise<RunStatus> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const status = await this.runStatus(runId);
      if (status.state === "done") return status;
      if (status.state === "failed") {
        throw new ApiError(500, status.error ?? "run failed");
      }
      if (Date.now() > deadline) {
        throw new ApiError(408, `run ${runId} still ${status.state} after ${timeoutMs}ms`);
      }
      await new Promise((resolve) => setTimeout(resolve, intervalMs));
    }
  }
}
