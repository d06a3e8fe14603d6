// DOM rendering. Values are passed through verbatim from service responses;
// the only arithmetic here is presentational (layout angles, gauge hue).

import type { ConsoleState } from './state.js';
import type { RepeatGuidance, SuccessorRow, Suggestion } from './types.js';

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderStatus(root: HTMLElement, state: ConsoleState): void {
  root.replaceChildren();
  root.append(
    el('span', 'current-state', state.currentState ?? '—'),
    el('span', 'running-twsa', state.runningTwsa === null ? '—' : String(state.runningTwsa)),
  );
}

export function renderGuidance(root: HTMLElement, state: ConsoleState): void {
  root.replaceChildren();
  const latest = state.latest;
  if (!latest) {
    root.append(el('p', 'placeholder', 'No observations yet.'));
    return;
  }
  if (latest.guidance.variant === 'recommend') {
    const g = latest.guidance;
    const panel = el('div', 'recommendation agreement');
    panel.append(
      el('span', 'next-action', g.label),
      el('span', 'rank-detail', `graph #${g.graph_rank} · model #${g.model_rank}`),
    );
    root.append(panel);
  } else {
    root.append(renderRepeatBanner(latest.guidance));
  }
}

function renderRepeatBanner(guidance: RepeatGuidance): HTMLElement {
  const banner = el('div', 'repeat-banner');
  banner.append(el('strong', undefined, 'Please repeat the previous action'));
  const list = el('ul', 'repeat-suggestions');
  for (const s of guidance.suggestions) {
    list.append(el('li', 'suggestion', `${s.label} (${s.p.toFixed(3)})`));
  }
  if (guidance.suggestions.length === 0) {
    list.append(el('li', 'suggestion empty', 'no valid next actions known'));
  }
  banner.append(list);
  if (guidance.warning) banner.classList.add('warning');
  return banner;
}

export function renderGauge(root: HTMLElement, state: ConsoleState): void {
  root.replaceChildren();
  const gauge = el('div', 'anomaly-gauge');
  const a = state.latest ? state.latest.assessment.a : null;
  gauge.dataset.value = a === null ? '' : String(a);
  // blue (hue 220) at a = 0 to red (hue 0) at a = 1; presentation only
  const hue = a === null ? 220 : 220 * (1 - a);
  gauge.style.background = `hsl(${hue}, 80%, 50%)`;
  gauge.append(el('span', 'gauge-value', a === null ? '—' : a.toFixed(3)));
  root.append(gauge);
}

export function renderSuggestions(root: HTMLElement, suggestions: Suggestion[]): void {
  root.replaceChildren();
  const list = el('ol', 'topk-list');
  for (const s of suggestions) {
    list.append(el('li', 'topk-entry', `${s.label} (${s.p.toFixed(3)})`));
  }
  root.append(list);
}

export function renderErrorBanner(
  root: HTMLElement,
  state: ConsoleState,
  onDismiss: () => void,
): void {
  root.replaceChildren();
  if (!state.error) return;
  const banner = el('div', 'error-banner');
  banner.append(el('span', 'error-code', state.error.code));
  banner.append(el('span', 'error-message', state.error.message));
  const dismiss = el('button', 'dismiss', '×') as HTMLButtonElement;
  dismiss.addEventListener('click', onDismiss);
  banner.append(dismiss);
  root.append(banner);
}

// Ring layout: current state in the middle, successors spread on a circle,
// edges labeled with the service-supplied row probability. The first five
// successors (already probability-sorted by the service) are highlighted.
export function renderSubgraph(root: HTMLElement, subgraph: SuccessorRow | null): void {
  root.replaceChildren();
  if (!subgraph) return;
  const svgNS = 'http://www.w3.org/2000/svg';
  const svg = document.createElementNS(svgNS, 'svg');
  svg.setAttribute('viewBox', '0 0 400 300');
  svg.setAttribute('class', 'subgraph');

  const cx = 200;
  const cy = 150;
  const radius = 110;
  const n = subgraph.successors.length;

  if (n === 0) {
    const warn = document.createElementNS(svgNS, 'text');
    warn.setAttribute('x', String(cx));
    warn.setAttribute('y', String(cy - 30));
    warn.setAttribute('class', 'absorbing-warning');
    warn.textContent = '⚠ no known next actions';
    svg.append(warn);
  }

  subgraph.successors.forEach((succ, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    const x = cx + radius * Math.cos(angle);
    const y = cy + radius * Math.sin(angle);

    const edge = document.createElementNS(svgNS, 'line');
    edge.setAttribute('x1', String(cx));
    edge.setAttribute('y1', String(cy));
    edge.setAttribute('x2', String(x));
    edge.setAttribute('y2', String(y));
    edge.setAttribute('class', 'edge');
    svg.append(edge);

    const edgeLabel = document.createElementNS(svgNS, 'text');
    edgeLabel.setAttribute('x', String(cx + (radius / 2) * Math.cos(angle)));
    edgeLabel.setAttribute('y', String(cy + (radius / 2) * Math.sin(angle)));
    edgeLabel.setAttribute('class', 'edge-label');
    edgeLabel.textContent = succ.p.toFixed(3);
    svg.append(edgeLabel);

    const node = document.createElementNS(svgNS, 'circle');
    node.setAttribute('cx', String(x));
    node.setAttribute('cy', String(y));
    node.setAttribute('r', '22');
    node.setAttribute('class', i < 5 ? 'successor topk' : 'successor');
    node.setAttribute('data-label', succ.label);
    svg.append(node);

    const nodeLabel = document.createElementNS(svgNS, 'text');
    nodeLabel.setAttribute('x', String(x));
    nodeLabel.setAttribute('y', String(y + 36));
    nodeLabel.setAttribute('class', 'node-label');
    nodeLabel.textContent = succ.label;
    svg.append(nodeLabel);
  });

  const center = document.createElementNS(svgNS, 'circle');
  center.setAttribute('cx', String(cx));
  center.setAttribute('cy', String(cy));
  center.setAttribute('r', '28');
  center.setAttribute('class', n === 0 ? 'center absorbing' : 'center');
  center.setAttribute('data-label', subgraph.state);
  svg.append(center);

  const centerLabel = document.createElementNS(svgNS, 'text');
  centerLabel.setAttribute('x', String(cx));
  centerLabel.setAttribute('y', String(cy + 5));
  centerLabel.setAttribute('class', 'center-label');
  centerLabel.textContent = subgraph.state;
  svg.append(centerLabel);

  root.append(svg);
}

export function renderAll(
  roots: {
    status: HTMLElement;
    guidance: HTMLElement;
    gauge: HTMLElement;
    suggestions: HTMLElement;
    subgraph: HTMLElement;
    error: HTMLElement;
  },
  state: ConsoleState,
  onDismissError: () => void,
): void {
  renderStatus(roots.status, state);
  renderGuidance(roots.guidance, state);
  renderGauge(roots.gauge, state);
  renderSuggestions(roots.suggestions, state.latest ? state.latest.assessment.suggestions : []);
  renderSubgraph(roots.subgraph, state.subgraph);
  renderErrorBanner(roots.error, state, onDismissError);
}
