/** App state shared between the controller and the view. */

import type { SessionSnapshot } from "./api.js";

export interface JustificationView {
  goal: string;
  ruleText: string;
}

export interface AppState {
  snapshot: SessionSnapshot | null;
  busy: boolean;
  error: string | null;
  justification: JustificationView | null;
}

export interface Handlers {
  onAnswer(value: "true" | "false" | "unavailable"): Promise<void>;
  onWhy(goal: string): Promise<void>;
  onNewSession(): Promise<void>;
  onRetry(): Promise<void>;
}

export function initialState(): AppState {
  return { snapshot: null, busy: false, error: null, justification: null };
}
