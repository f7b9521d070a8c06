// Evaluator view: one button per property; values come verbatim from the
// service, with a pending marker while a request is in flight and server
// errors rendered inline.

import { ApiRequestError, type ApiClient } from '../api.js';
import type { AppState } from '../state.js';
import type { PropertyName, PropertyReport, PropertyValue } from '../types.js';

const PROPERTIES: PropertyName[] = [
  'nl',
  'du',
  'ccv',
  'mto',
  'rto',
  'wcf',
  'bijective',
  'hw-signature',
  'all',
];

function formatValue(value: PropertyValue): string {
  if (Array.isArray(value)) {
    return value.join(' ');
  }
  if (typeof value === 'object' && value !== null) {
    const report = value as PropertyReport;
    return (['bijective', 'nl', 'du', 'ccv', 'mto', 'rto', 'wcf'] as const)
      .map((key) => {
        const entry = report[key];
        return `${key}=${entry === null ? `unavailable (${report.errors[key] ?? ''})` : entry}`;
      })
      .join('\n');
  }
  return String(value);
}

export class EvaluatorView {
  private readonly results = new Map<PropertyName, HTMLElement>();
  private readonly hint: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly state: AppState,
    private readonly api: ApiClient,
  ) {
    root.innerHTML = '<h2>Evaluate properties</h2><p class="evaluator-hint"></p>';
    this.hint = root.querySelector('.evaluator-hint') as HTMLElement;
    const list = document.createElement('div');
    list.className = 'evaluator-list';
    for (const property of PROPERTIES) {
      const row = document.createElement('div');
      row.className = 'evaluator-row';
      const button = document.createElement('button');
      button.textContent = property;
      button.dataset.property = property;
      button.addEventListener('click', () => void this.evaluate(property));
      const output = document.createElement('pre');
      output.className = `evaluator-value evaluator-${property}`;
      row.append(button, output);
      list.appendChild(row);
      this.results.set(property, output);
    }
    root.appendChild(list);
    this.state.subscribe(() => this.reset());
    this.reset();
  }

  private reset(): void {
    const box = this.state.activeSBox;
    this.hint.textContent = box
      ? `active S-box: n=${box.n}, m=${box.m} (${box.source})`
      : 'load an S-box first';
    for (const output of this.results.values()) {
      output.textContent = '';
      output.classList.remove('evaluator-error');
    }
  }

  async evaluate(property: PropertyName): Promise<void> {
    const box = this.state.activeSBox;
    const output = this.results.get(property)!;
    if (!box) {
      output.textContent = 'no S-box loaded';
      output.classList.add('evaluator-error');
      return;
    }
    output.textContent = 'computing...';
    output.classList.remove('evaluator-error');
    try {
      const value = await this.api.evaluate(property, {
        n: box.n,
        m: box.m,
        sbox: box.entries,
      });
      output.textContent = formatValue(value);
    } catch (error) {
      if (error instanceof ApiRequestError) {
        output.textContent = `${error.code}: ${error.message}`;
        output.classList.add('evaluator-error');
        return;
      }
      output.textContent = String(error);
      output.classList.add('evaluator-error');
    }
  }

  valueText(property: PropertyName): string {
    return this.results.get(property)?.textContent ?? '';
  }
}
