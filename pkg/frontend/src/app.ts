/** Controller: one active session per tab, no optimistic updates.
 *
 * Every mutation waits for the service's snapshot before re-rendering, and
 * the session id is kept in sessionStorage so a page reload rebuilds the
 * identical view from GET /sessions/{id}.
 */

import { ApiClient, ApiError, formatRule } from "./api.js";
import type { AnswerValue } from "./api.js";
import { initialState } from "./state.js";
import type { AppState, Handlers } from "./state.js";
import { render } from "./view.js";

export const SESSION_STORAGE_KEY = "conexsys.session";

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export class ConsultApp {
  readonly state: AppState = initialState();

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly storage: StorageLike,
  ) {}

  private readonly handlers: Handlers = {
    onAnswer: (value) => this.submitAnswer(value),
    onWhy: (goal) => this.requestWhy(goal),
    onNewSession: () => this.newSession(),
    onRetry: () => this.start(),
  };

  private paint(): void {
    render(this.root, this.state, this.handlers);
  }

  private fail(error: unknown, fallback: string): void {
    this.state.error = error instanceof ApiError ? error.detail : fallback;
  }

  /** Resume the stored session if the service still has it, else start fresh. */
  async start(): Promise<void> {
    this.state.busy = true;
    this.state.error = null;
    this.paint();
    const stored = this.storage.getItem(SESSION_STORAGE_KEY);
    try {
      if (stored !== null) {
        try {
          this.state.snapshot = await this.api.getSession(stored);
          return;
        } catch (error) {
          if (!(error instanceof ApiError && error.status === 404)) throw error;
          this.storage.removeItem(SESSION_STORAGE_KEY);
        }
      }
      this.state.snapshot = await this.api.createSession();
      this.storage.setItem(SESSION_STORAGE_KEY, this.state.snapshot.id);
    } catch (error) {
      this.fail(error, "cannot reach the consultation service");
    } finally {
      this.state.busy = false;
      this.paint();
    }
  }

  async newSession(): Promise<void> {
    this.storage.removeItem(SESSION_STORAGE_KEY);
    this.state.snapshot = null;
    this.state.justification = null;
    await this.start();
  }

  async submitAnswer(value: AnswerValue): Promise<void> {
    const snapshot = this.state.snapshot;
    if (this.state.busy || !snapshot || snapshot.question === null) return;
    this.state.busy = true;
    this.state.error = null;
    this.paint();
    try {
      this.state.snapshot = await this.api.answer(snapshot.id, snapshot.question, value);
      this.state.justification = null;
    } catch (error) {
      if (error instanceof ApiError && (error.status === 409 || error.status === 422)) {
        // stale question or bad token: surface inline and resync the snapshot
        this.state.error = error.detail;
        try {
          this.state.snapshot = await this.api.getSession(snapshot.id);
        } catch {
          // keep the previous snapshot if the resync also fails
        }
      } else {
        this.fail(error, "the service did not accept the answer");
      }
    } finally {
      this.state.busy = false;
      this.paint();
    }
  }

  async requestWhy(goal: string): Promise<void> {
    const snapshot = this.state.snapshot;
    if (!snapshot) return;
    try {
      const payload = await this.api.justification(snapshot.id, goal);
      this.state.justification = { goal, ruleText: formatRule(payload) };
      this.state.error = null;
    } catch (error) {
      this.fail(error, `no justification available for ${goal}`);
    }
    this.paint();
  }
}

export function mount(
  root: HTMLElement,
  baseUrl: string,
  storage: StorageLike,
  fetchImpl?: ConstructorParameters<typeof ApiClient>[1],
): ConsultApp {
  const app = new ConsultApp(root, new ApiClient(baseUrl, fetchImpl), storage);
  void app.start();
  return app;
}
