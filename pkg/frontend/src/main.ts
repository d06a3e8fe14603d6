import { ApiError, SessionApi } from './api.js';
import {
  ConsoleState,
  dismissError,
  initialState,
  withError,
  withObservation,
  withSession,
  withSubgraph,
} from './state.js';
import { renderAll } from './render.js';

const GRAPH_ID = 'default';

export class ConsoleApp {
  state: ConsoleState = initialState();
  private stopwatchStart: number | null = null;

  constructor(
    private api: SessionApi,
    private roots: {
      status: HTMLElement;
      guidance: HTMLElement;
      gauge: HTMLElement;
      suggestions: HTMLElement;
      subgraph: HTMLElement;
      error: HTMLElement;
    },
  ) {}

  private update(next: ConsoleState): void {
    this.state = next;
    renderAll(this.roots, this.state, () => this.update(dismissError(this.state)));
  }

  async start(initialStateLabel?: string): Promise<void> {
    try {
      const created = await this.api.createSession({
        graph_id: GRAPH_ID,
        initial_state: initialStateLabel,
      });
      this.update(withSession(this.state, created.session_id, created.initial_state));
      await this.refreshSubgraph(created.initial_state);
      this.stopwatchStart = Date.now();
    } catch (err) {
      this.fail(err);
    }
  }

  // Duration defaults to the stopwatch interval since the last submission;
  // an explicit value overrides it.
  async submitObservation(label: string, durationOverrideS?: number): Promise<void> {
    if (!this.state.sessionId) return;
    const elapsed =
      this.stopwatchStart === null ? 1.0 : (Date.now() - this.stopwatchStart) / 1000;
    const duration = durationOverrideS ?? elapsed;
    try {
      const response = await this.api.observe(this.state.sessionId, label, duration);
      this.update(withObservation(this.state, response));
      this.stopwatchStart = Date.now();
      if (this.state.currentState) {
        await this.refreshSubgraph(this.state.currentState);
      }
    } catch (err) {
      this.fail(err);
    }
  }

  async followRecommendation(durationOverrideS?: number): Promise<void> {
    const latest = this.state.latest;
    if (latest && latest.guidance.variant === 'recommend') {
      await this.submitObservation(latest.guidance.label, durationOverrideS);
    }
  }

  private async refreshSubgraph(state: string): Promise<void> {
    try {
      const row = await this.api.getSuccessors(GRAPH_ID, state);
      this.update(withSubgraph(this.state, row));
    } catch (err) {
      this.fail(err);
    }
  }

  private fail(err: unknown): void {
    if (err instanceof ApiError) {
      this.update(withError(this.state, err.code, err.message));
    } else {
      this.update(withError(this.state, 'ClientError', String(err)));
    }
  }
}

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

export function mount(): ConsoleApp {
  const api = new SessionApi('');
  const app = new ConsoleApp(api, {
    status: byId('status'),
    guidance: byId('guidance'),
    gauge: byId('gauge'),
    suggestions: byId('suggestions'),
    subgraph: byId('subgraph'),
    error: byId('error'),
  });

  const picker = byId('action-picker') as HTMLInputElement;
  const durationField = byId('duration-override') as HTMLInputElement;
  const submit = byId('submit') as HTMLButtonElement;
  const follow = byId('follow') as HTMLButtonElement;

  api
    .getVocabulary(GRAPH_ID)
    .then((vocab) => {
      const list = byId('vocab-options');
      for (const label of vocab) {
        const option = document.createElement('option');
        option.value = label;
        list.append(option);
      }
    })
    .catch(() => {
      // vocabulary picker degrades to free text when the graph is unreachable
    });

  submit.addEventListener('click', () => {
    const override = durationField.value ? Number(durationField.value) : undefined;
    void app.submitObservation(picker.value, override);
    durationField.value = '';
  });
  follow.addEventListener('click', () => {
    const override = durationField.value ? Number(durationField.value) : undefined;
    void app.followRecommendation(override);
    durationField.value = '';
  });

  void app.start();
  return app;
}

declare global {
  interface Window {
    opguideConsole?: ConsoleApp;
  }
}

if (typeof document !== 'undefined' && document.getElementById('status')) {
  window.opguideConsole = mount();
}
