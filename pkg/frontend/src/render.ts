// View builders. Pure DOM construction from state; no sorting, no rescaling:
// whatever order and values the service sent is what gets rendered.

import type { ServiceError } from "./api.js";
import { highlightJava } from "./highlight.js";
import { checkedApis, type SessionState } from "./state.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function scoreBar(kind: string, label: string, value: number): HTMLElement {
  const bar = el("div", "score-bar");
  bar.dataset.kind = kind;
  bar.title = `${label} ${value.toFixed(2)}`;
  const fill = el("div", "bar-fill");
  fill.style.width = `${Math.round(value * 100)}%`;
  bar.appendChild(fill);
  bar.appendChild(el("span", "score-label", `${label} ${value.toFixed(2)}`));
  return bar;
}

export function renderKeywords(container: HTMLElement, state: SessionState): void {
  container.textContent = state.keywords.length
    ? `keywords: ${state.keywords.join(" ")}`
    : "";
}

export function renderSuggestions(
  container: HTMLElement,
  state: SessionState,
  onToggle: (api: string, checked: boolean) => void,
): void {
  container.replaceChildren();
  if (!state.suggestions.length) {
    if (state.keywords.length) {
      container.appendChild(el("li", "empty-state", "no suggestions for this query"));
    }
    return;
  }
  for (const entry of state.suggestions) {
    const row = el("li", "suggestion-row");
    const label = el("label", "api-label");
    const checkbox = el("input", "api-check") as HTMLInputElement;
    checkbox.type = "checkbox";
    checkbox.checked = entry.checked;
    checkbox.dataset.api = entry.candidate.api;
    checkbox.addEventListener("change", () => onToggle(entry.candidate.api, checkbox.checked));
    label.appendChild(checkbox);
    label.appendChild(el("code", "api-name", entry.candidate.api));
    row.appendChild(label);

    const scores = el("div", "scores");
    scores.appendChild(scoreBar("kac", "KAC", entry.candidate.kac));
    scores.appendChild(scoreBar("kkc", "KKC", entry.candidate.kkc));
    scores.appendChild(scoreBar("relevance", "Relevance", entry.candidate.relevance));
    row.appendChild(scores);
    container.appendChild(row);
  }
}

export function renderPending(container: HTMLElement, state: SessionState): void {
  const apis = checkedApis(state);
  container.textContent = apis.length ? `search with: ${apis.join(", ")}` : "no APIs selected";
}

export function renderResults(
  container: HTMLElement,
  state: SessionState,
  onSelect: (index: number) => void,
): void {
  container.replaceChildren();
  if (!state.searched) return;
  if (!state.results.length) {
    container.appendChild(
      el(
        "p",
        "empty-state",
        state.notice ?? "no results; try checking different API classes and searching again",
      ),
    );
    return;
  }
  state.results.forEach((row, index) => {
    const card = el("article", "result-card");
    card.dataset.index = String(index);

    const header = el("header", "result-header");
    header.appendChild(el("span", "badge", row.combined.toFixed(2)));
    header.appendChild(
      el("span", "provenance", `${row.repo}:${row.path}:${row.start_line}-${row.end_line}`),
    );
    header.appendChild(el("span", "method-name", row.name));
    header.addEventListener("click", () => onSelect(index));
    card.appendChild(header);

    const chips = el("div", "chips");
    for (const keyword of row.matched_keywords) {
      chips.appendChild(el("span", "chip", keyword));
    }
    card.appendChild(chips);

    const viewer = el("pre", "code-viewer");
    const code = el("code", "language-java");
    code.appendChild(highlightJava(row.body, row.matched_keywords));
    viewer.appendChild(code);
    if (state.selectedResult !== index) viewer.classList.add("hidden");
    card.appendChild(viewer);
    container.appendChild(card);
  });
}

export function renderBanner(container: HTMLElement, error: ServiceError | null): void {
  if (!error) {
    container.classList.add("hidden");
    container.replaceChildren();
    return;
  }
  container.classList.remove("hidden");
  container.replaceChildren();
  container.appendChild(el("strong", "banner-code", error.code));
  container.appendChild(document.createTextNode(` ${error.message}`));
}
