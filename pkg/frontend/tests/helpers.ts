// Fake fetch backed by traces recorded from the real session service, so the
// console renders exactly what the service would send without re-deriving it.

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';
import type { ObserveResponse, SuccessorRow } from '../src/types';

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), 'fixtures');

export function loadGoldenTrace(): ObserveResponse[] {
  const doc = JSON.parse(readFileSync(join(FIXTURES, 'golden_session_trace.json'), 'utf-8'));
  return doc.trace as ObserveResponse[];
}

export function loadRepeatFixtures(): {
  empty_repeat: ObserveResponse;
  valid_repeat: ObserveResponse;
  successors: Record<string, SuccessorRow>;
} {
  return JSON.parse(readFileSync(join(FIXTURES, 'repeat_and_rows.json'), 'utf-8'));
}

export class FakeService {
  observeQueue: ObserveResponse[] = [];
  offline = false;
  successorRows: Record<string, SuccessorRow>;

  constructor() {
    this.successorRows = loadRepeatFixtures().successors;
  }

  install(): void {
    globalThis.fetch = this.handle.bind(this) as typeof fetch;
  }

  private async handle(input: RequestInfo | URL): Promise<Response> {
    if (this.offline) throw new TypeError('fetch failed');
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, '');

    if (path === '/api/sessions') {
      return json({ session_id: 'test-session', initial_state: 'A' });
    }
    if (/^\/api\/sessions\/[^/]+\/observe$/.test(path)) {
      const next = this.observeQueue.shift();
      if (!next) {
        return json({ code: 'UnknownLabel', message: 'script exhausted' }, 422);
      }
      return json(next);
    }
    if (/^\/api\/graphs\/[^/]+\/successors/.test(path)) {
      const state = new URL(url, 'http://test').searchParams.get('state') ?? '';
      return json(this.successorRows[state] ?? { state, successors: [] });
    }
    if (/^\/api\/graphs\/[^/]+$/.test(path)) {
      return json({ level: 'action', vocab: ['A', 'B', 'C', 'D'], total_transitions: 8, edges: [] });
    }
    return json({ code: 'NotFound', message: path }, 404);
  }
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

export function mountSkeleton(): void {
  document.body.innerHTML = `
    <div id="status"></div>
    <div id="error"></div>
    <input id="action-picker" list="vocab-options" />
    <datalist id="vocab-options"></datalist>
    <input id="duration-override" type="number" />
    <button id="submit"></button>
    <button id="follow"></button>
    <div id="guidance"></div>
    <div id="gauge"></div>
    <div id="suggestions"></div>
    <div id="subgraph"></div>
  `;
}

export async function flush(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}
