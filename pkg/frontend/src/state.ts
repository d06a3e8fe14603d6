// Console state is a pure mirror of service responses: every number shown
// in the UI originates from a response field, never from local computation.

import type { ObserveResponse, SuccessorRow } from './types.js';

export interface ConsoleState {
  sessionId: string | null;
  currentState: string | null;
  latest: ObserveResponse | null;
  runningTwsa: number | null;
  subgraph: SuccessorRow | null;
  error: { code: string; message: string } | null;
}

export function initialState(): ConsoleState {
  return {
    sessionId: null,
    currentState: null,
    latest: null,
    runningTwsa: null,
    subgraph: null,
    error: null,
  };
}

export function withSession(state: ConsoleState, sessionId: string, initial: string): ConsoleState {
  return { ...initialState(), sessionId, currentState: initial };
}

export function withObservation(state: ConsoleState, response: ObserveResponse): ConsoleState {
  // Repeat guidance freezes the state server-side; mirror that here by
  // keeping the previous state label on repeat outcomes.
  const advanced = response.guidance.variant === 'recommend' ? response.label : state.currentState;
  return {
    ...state,
    currentState: advanced,
    latest: response,
    runningTwsa: response.running_twsa,
    error: null,
  };
}

export function withSubgraph(state: ConsoleState, subgraph: SuccessorRow): ConsoleState {
  return { ...state, subgraph };
}

export function withError(state: ConsoleState, code: string, message: string): ConsoleState {
  // Failure isolation: session data stays untouched, only the banner changes.
  return { ...state, error: { code, message } };
}

export function dismissError(state: ConsoleState): ConsoleState {
  return { ...state, error: null };
}
