// Session controller: owns the state, wires DOM events to service calls.
// Flow: submit query -> /v1/reformulate; check APIs -> /v1/search; reset
// clears everything. Service errors surface as a non-blocking banner and
// leave the current view untouched.

import {
  RequestCancelled,
  ServiceClient,
  ServiceError,
  type SearchMode,
  type SearchRequest,
} from "./api.js";
import {
  renderBanner,
  renderKeywords,
  renderPending,
  renderResults,
  renderSuggestions,
} from "./render.js";
import {
  applyResults,
  applySuggestions,
  checkedApis,
  initialState,
  searchEnabled,
  selectResult,
  setMode,
  toggleApi,
  type SessionState,
} from "./state.js";

const TEMPLATE = `
  <form class="query-form">
    <input class="query-input" type="text" placeholder="Describe the programming task..." />
    <button type="submit" class="suggest-button">Suggest APIs</button>
    <button type="button" class="reset-button">Reset</button>
  </form>
  <div class="banner hidden"></div>
  <section class="suggestions">
    <div class="keywords"></div>
    <ul class="suggestion-list"></ul>
    <div class="pending-apis"></div>
    <div class="search-controls">
      <label><input type="radio" name="search-mode" value="top1" /> Top-1</label>
      <label><input type="radio" name="search-mode" value="topk" checked /> Top-K</label>
      <input class="k-input" type="number" min="1" value="10" />
      <button type="button" class="search-button" disabled>Search code</button>
    </div>
  </section>
  <section class="results"></section>
`;

export class App {
  state: SessionState = initialState();

  private queryInput: HTMLInputElement;
  private banner: HTMLElement;
  private keywordsEl: HTMLElement;
  private suggestionList: HTMLElement;
  private pendingEl: HTMLElement;
  private searchButton: HTMLButtonElement;
  private kInput: HTMLInputElement;
  private resultsEl: HTMLElement;

  constructor(
    private root: HTMLElement,
    private client: ServiceClient,
  ) {
    root.innerHTML = TEMPLATE;
    const pick = <T extends HTMLElement>(selector: string): T => {
      const node = root.querySelector<T>(selector);
      if (!node) throw new Error(`missing element ${selector}`);
      return node;
    };
    this.queryInput = pick<HTMLInputElement>(".query-input");
    this.banner = pick(".banner");
    this.keywordsEl = pick(".keywords");
    this.suggestionList = pick(".suggestion-list");
    this.pendingEl = pick(".pending-apis");
    this.searchButton = pick<HTMLButtonElement>(".search-button");
    this.kInput = pick<HTMLInputElement>(".k-input");
    this.resultsEl = pick(".results");

    pick<HTMLFormElement>(".query-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitQuery(this.queryInput.value);
    });
    pick(".reset-button").addEventListener("click", () => this.reset());
    this.searchButton.addEventListener("click", () => void this.runSearch());
    for (const radio of root.querySelectorAll<HTMLInputElement>('input[name="search-mode"]')) {
      radio.addEventListener("change", () => {
        if (radio.checked) this.setMode(radio.value as SearchMode);
      });
    }
    this.kInput.addEventListener("change", () => {
      const k = Number.parseInt(this.kInput.value, 10);
      if (Number.isFinite(k) && k >= 1) this.setMode("topk", k);
    });
    this.rerender();
  }

  async submitQuery(text: string): Promise<void> {
    const query = text.trim();
    if (!query) return;
    try {
      const response = await this.client.reformulate(query);
      this.state = applySuggestions(this.state, query, response);
      renderBanner(this.banner, null);
      this.rerender();
    } catch (error) {
      this.handleError(error);
    }
  }

  async runSearch(): Promise<void> {
    if (!searchEnabled(this.state)) return;
    const request: SearchRequest = {
      query: this.state.query,
      apis: checkedApis(this.state),
      mode: this.state.mode,
    };
    if (this.state.mode === "topk") request.k = this.state.k;
    try {
      const response = await this.client.search(request);
      this.state = applyResults(this.state, response);
      renderBanner(this.banner, null);
      this.rerender();
    } catch (error) {
      this.handleError(error);
    }
  }

  setMode(mode: SearchMode, k?: number): void {
    this.state = setMode(this.state, mode, k);
  }

  reset(): void {
    this.state = initialState();
    this.queryInput.value = "";
    renderBanner(this.banner, null);
    this.rerender();
  }

  private handleError(error: unknown): void {
    if (error instanceof RequestCancelled) return; // superseded by a newer call
    if (error instanceof ServiceError) {
      renderBanner(this.banner, error);
      return;
    }
    throw error;
  }

  private onToggle = (api: string, checked: boolean): void => {
    this.state = toggleApi(this.state, api, checked);
    renderPending(this.pendingEl, this.state);
    this.searchButton.disabled = !searchEnabled(this.state);
  };

  private onSelect = (index: number): void => {
    this.state = selectResult(this.state, index);
    renderResults(this.resultsEl, this.state, this.onSelect);
  };

  private rerender(): void {
    renderKeywords(this.keywordsEl, this.state);
    renderSuggestions(this.suggestionList, this.state, this.onToggle);
    renderPending(this.pendingEl, this.state);
    this.searchButton.disabled = !searchEnabled(this.state);
    renderResults(this.resultsEl, this.state, this.onSelect);
  }
}
