import type { ObserveResponse, ServiceError, SessionTrace, SuccessorRow } from './types.js';

export class ApiError extends Error {
  constructor(public code: string, message: string) {
    super(message);
  }
}

async function request<T>(input: string, init?: RequestInit): Promise<T> {
  let resp: Response;
  try {
    resp = await fetch(input, init);
  } catch (err) {
    throw new ApiError('ServiceOffline', String(err));
  }
  if (!resp.ok) {
    let payload: ServiceError | null = null;
    try {
      payload = (await resp.json()) as ServiceError;
    } catch {
      // non-JSON error body; fall through to the generic message
    }
    throw new ApiError(payload?.code ?? `HTTP${resp.status}`, payload?.message ?? resp.statusText);
  }
  return (await resp.json()) as T;
}

export interface CreateSessionOptions {
  graph_id: string;
  dictionary_id?: string;
  initial_state?: string;
  k?: number;
}

export class SessionApi {
  constructor(private base = '') {}

  createSession(options: CreateSessionOptions): Promise<{ session_id: string; initial_state: string }> {
    return request(`${this.base}/api/sessions`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(options),
    });
  }

  observe(sessionId: string, label: string, durationS: number): Promise<ObserveResponse> {
    return request(`${this.base}/api/sessions/${sessionId}/observe`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ label, duration_s: durationS }),
    });
  }

  getSession(sessionId: string): Promise<SessionTrace> {
    return request(`${this.base}/api/sessions/${sessionId}`);
  }

  getSuccessors(graphId: string, state: string): Promise<SuccessorRow> {
    return request(
      `${this.base}/api/graphs/${graphId}/successors?state=${encodeURIComponent(state)}`,
    );
  }

  getVocabulary(graphId: string): Promise<string[]> {
    return request<{ vocab: string[] }>(`${this.base}/api/graphs/${graphId}`).then(
      (doc) => doc.vocab,
    );
  }
}
