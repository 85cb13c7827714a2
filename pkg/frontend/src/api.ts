/** Typed client for the consultation service wire contract. */

export type TruthToken = "true" | "false" | "unknown" | "unavailable";
export type AnswerValue = "true" | "false" | "unavailable";
export type SessionStatus = "concluded" | "needs_input" | "unconfirmed";

export interface GoalSum {
  goal: string;
  sum: number;
}

export interface Elimination {
  goal: string;
  dominated_by: string;
}

export interface TranscriptEvent {
  event: "answer" | "eliminated";
  variable?: string;
  value?: TruthToken;
  goal?: string;
  dominated_by?: string;
  gap?: number;
  bound?: number;
}

export interface SessionSnapshot {
  id: string;
  kb: string;
  status: SessionStatus;
  question: string | null;
  conclusion: string | null;
  assignment: Record<string, TruthToken>;
  viable: GoalSum[];
  eliminated: Elimination[];
  transcript: TranscriptEvent[];
}

export interface JustificationPayload {
  goal: string;
  dominated_by: string;
  literals: Array<Record<string, "true" | "false">>;
  rule: string;
}

export interface HealthPayload {
  status: string;
  inputs: number;
  goals: number;
  fingerprint: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`service error ${status}: ${detail}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: unknown };
      if (typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  health(): Promise<HealthPayload> {
    return this.fetchImpl(this.url("/health")).then((r) => parseOrThrow(r));
  }

  createSession(): Promise<SessionSnapshot> {
    return this.fetchImpl(this.url("/sessions"), { method: "POST" }).then((r) =>
      parseOrThrow(r),
    );
  }

  getSession(id: string): Promise<SessionSnapshot> {
    return this.fetchImpl(this.url(`/sessions/${id}`)).then((r) => parseOrThrow(r));
  }

  answer(id: string, variable: string, value: AnswerValue): Promise<SessionSnapshot> {
    return this.fetchImpl(this.url(`/sessions/${id}/answers`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ variable, value }),
    }).then((r) => parseOrThrow(r));
  }

  justification(id: string, goal: string): Promise<JustificationPayload> {
    const query = new URLSearchParams({ goal }).toString();
    return this.fetchImpl(this.url(`/sessions/${id}/justification?${query}`)).then(
      (r) => parseOrThrow(r),
    );
  }
}

/** Human-facing rule text; literal values capitalized, spaces around "=". */
export function formatRule(payload: JustificationPayload): string {
  const parts = payload.literals.map((literal) => {
    const [variable, value] = Object.entries(literal)[0]!;
    return `${variable} = ${value === "true" ? "True" : "False"}`;
  });
  const condition = parts.length > 0 ? parts.join(" AND ") : "TRUE";
  return `IF ${condition} THEN not ${payload.goal}`;
}
