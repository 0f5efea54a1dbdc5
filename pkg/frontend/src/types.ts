/** Payload shapes of the scheduling service. Field names mirror the HTTP
 * API exactly; the UI never invents or reorders data on top of them. */

export interface InstanceSummary {
  name: string;
  kind: string;
  jobs: number;
  machines: number;
}

export type RunState = "queued" | "running" | "done" | "failed";

export interface RunStatus {
  id: string;
  state: RunState;
  evaluations: number;
  front_size?: number;
  error?: string;
}

export interface RunRequest {
  instance: string;
  method: string;
  budget: number;
  objectives: string[];
  seed?: number;
  [knob: string]: unknown;
}

export interface FrontSolution {
  id: string;
  vector: number[];
}

export interface GanttBar {
  job: number;
  op: number;
  start: number;
  end: number;
}

export interface GanttMachine {
  machine: number;
  bars: GanttBar[];
}

export interface GanttData {
  machines: GanttMachine[];
  horizon: number;
}

export interface AimState {
  id: string;
  levels: number[];
  as_ids: string[];
  not_as_ids: string[];
}

export interface AimResult {
  id: string;
  vector: number[];
}
