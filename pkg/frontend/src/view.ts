/** DOM rendering for the consultation panel.
 *
 * The view is a pure function of the app state: every change re-renders the
 * whole panel from the latest service snapshot, so the screen can never
 * drift from the engine.  Eliminated goals stay visible, struck through.
 */

import type { SessionSnapshot, TranscriptEvent } from "./api.js";
import type { AppState, Handlers } from "./state.js";

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function verdictBanner(doc: Document, snapshot: SessionSnapshot): HTMLElement {
  const banner = el(doc, "div", "verdict-banner");
  if (snapshot.status === "concluded") {
    banner.classList.add("concluded");
    banner.textContent = `Concluded: ${snapshot.conclusion}`;
  } else if (snapshot.status === "unconfirmed") {
    banner.classList.add("unconfirmed");
    banner.textContent = `Unconfirmed best guess: ${snapshot.conclusion}`;
  } else {
    banner.classList.add("open");
    banner.textContent = "Consultation in progress";
  }
  return banner;
}

function questionPanel(
  doc: Document,
  state: AppState,
  handlers: Handlers,
): HTMLElement {
  const panel = el(doc, "section", "question-panel");
  const snapshot = state.snapshot!;
  if (snapshot.status !== "needs_input" || snapshot.question === null) {
    return panel;
  }
  panel.append(el(doc, "h2", "question-text", `${snapshot.question}?`));
  const buttons = el(doc, "div", "answer-buttons");
  const options: Array<[string, "true" | "false" | "unavailable"]> = [
    ["True", "true"],
    ["False", "false"],
    ["Not available", "unavailable"],
  ];
  for (const [label, value] of options) {
    const button = el(doc, "button", `answer answer-${value}`, label);
    button.disabled = state.busy;
    button.addEventListener("click", () => void handlers.onAnswer(value));
    buttons.append(button);
  }
  panel.append(buttons);
  return panel;
}

function goalBars(doc: Document, state: AppState, handlers: Handlers): HTMLElement {
  const snapshot = state.snapshot!;
  const section = el(doc, "section", "goals");
  section.append(el(doc, "h2", undefined, "Goals"));
  const list = el(doc, "ul", "goal-list");
  const maxAbs = Math.max(1, ...snapshot.viable.map((v) => Math.abs(v.sum)));
  for (const { goal, sum } of snapshot.viable) {
    const item = el(doc, "li", "goal viable");
    item.dataset.goal = goal;
    const bar = el(doc, "div", sum >= 0 ? "bar positive" : "bar negative");
    bar.style.width = `${(Math.abs(sum) / maxAbs) * 100}%`;
    item.append(
      el(doc, "span", "goal-name", goal),
      el(doc, "span", "goal-sum", String(sum)),
      bar,
    );
    list.append(item);
  }
  for (const { goal, dominated_by } of snapshot.eliminated) {
    const item = el(doc, "li", "goal eliminated");
    item.dataset.goal = goal;
    const name = el(doc, "s", "goal-name", goal);
    const why = el(doc, "button", "why", "why?");
    why.addEventListener("click", () => void handlers.onWhy(goal));
    item.append(name, el(doc, "span", "dominated-by", `out (vs ${dominated_by})`), why);
    list.append(item);
  }
  section.append(list);
  return section;
}

function describeEvent(event: TranscriptEvent): string {
  if (event.event === "answer") {
    return `answered ${event.variable} = ${event.value}`;
  }
  return `ruled out ${event.goal} (behind ${event.dominated_by}: gap ${event.gap} > swing ${event.bound})`;
}

function transcriptPane(doc: Document, snapshot: SessionSnapshot): HTMLElement {
  const pane = el(doc, "section", "transcript");
  pane.append(el(doc, "h2", undefined, "Transcript"));
  const list = el(doc, "ol", "transcript-events");
  for (const event of snapshot.transcript) {
    list.append(el(doc, "li", `event-${event.event}`, describeEvent(event)));
  }
  pane.append(list);
  return pane;
}

function justificationDrawer(doc: Document, state: AppState): HTMLElement {
  const drawer = el(doc, "aside", "justification-drawer");
  if (state.justification) {
    drawer.classList.add("open");
    drawer.append(
      el(doc, "h3", undefined, `Why not ${state.justification.goal}?`),
      el(doc, "p", "rule-text", state.justification.ruleText),
    );
  }
  return drawer;
}

export function render(root: HTMLElement, state: AppState, handlers: Handlers): void {
  const doc = root.ownerDocument;
  root.textContent = "";
  const container = el(doc, "div", "consult-panel");

  if (state.error !== null) {
    const banner = el(doc, "div", "error-banner", state.error);
    const retry = el(doc, "button", "retry", "Retry");
    retry.disabled = state.busy;
    retry.addEventListener("click", () => void handlers.onRetry());
    banner.append(retry);
    container.append(banner);
  }

  if (state.snapshot) {
    container.append(verdictBanner(doc, state.snapshot));
    container.append(questionPanel(doc, state, handlers));
    container.append(goalBars(doc, state, handlers));
    container.append(transcriptPane(doc, state.snapshot));
    container.append(justificationDrawer(doc, state));
  } else if (state.error === null) {
    container.append(el(doc, "div", "loading", "Connecting to the service..."));
  }

  const restart = el(doc, "button", "new-session", "New session");
  restart.disabled = state.busy;
  restart.addEventListener("click", () => void handlers.onNewSession());
  container.append(restart);

  root.append(container);
}
