// Session state and pure transitions. The UI never reorders or rescales
// what the service returned; suggestions and results keep response order.

import type {
  ApiCandidate,
  ReformulateResponse,
  SearchMode,
  SearchResponse,
  SnippetRow,
} from "./api.js";

export interface SuggestionEntry {
  candidate: ApiCandidate;
  checked: boolean;
}

export interface SessionState {
  query: string;
  keywords: string[];
  suggestions: SuggestionEntry[];
  mode: SearchMode;
  k: number;
  results: SnippetRow[];
  notice: string | null;
  searched: boolean;
  selectedResult: number | null;
}

export function initialState(): SessionState {
  return {
    query: "",
    keywords: [],
    suggestions: [],
    mode: "topk",
    k: 10,
    results: [],
    notice: null,
    searched: false,
    selectedResult: null,
  };
}

export function applySuggestions(
  state: SessionState,
  query: string,
  response: ReformulateResponse,
): SessionState {
  const previouslyChecked = new Set(checkedApis(state));
  return {
    ...state,
    query,
    keywords: response.keywords,
    suggestions: response.candidates.map((candidate) => ({
      candidate,
      // checkbox state survives re-suggestion only for APIs still present
      checked: previouslyChecked.has(candidate.api),
    })),
    results: [],
    notice: null,
    searched: false,
    selectedResult: null,
  };
}

export function toggleApi(state: SessionState, api: string, checked: boolean): SessionState {
  return {
    ...state,
    suggestions: state.suggestions.map((entry) =>
      entry.candidate.api === api ? { ...entry, checked } : entry,
    ),
  };
}

export function checkedApis(state: SessionState): string[] {
  return state.suggestions.filter((entry) => entry.checked).map((entry) => entry.candidate.api);
}

export function searchEnabled(state: SessionState): boolean {
  return checkedApis(state).length > 0;
}

export function setMode(state: SessionState, mode: SearchMode, k?: number): SessionState {
  return { ...state, mode, k: k ?? state.k };
}

export function applyResults(state: SessionState, response: SearchResponse): SessionState {
  return {
    ...state,
    results: response.results,
    notice: response.notice ?? null,
    searched: true,
    selectedResult: null,
  };
}

export function selectResult(state: SessionState, index: number): SessionState {
  return { ...state, selectedResult: state.selectedResult === index ? null : index };
}
