// Experiment view: start a search toward NL 100 or 102, poll its progress
// into a bar, offer cancellation, and load the found S-box on success.

import { ApiRequestError, type ApiClient } from '../api.js';
import type { AppState } from '../state.js';
import type { ExperimentResource, UiExperiment } from '../types.js';

export const DEFAULT_POLL_INTERVAL_MS = 1000;

export class ExperimentView {
  private readonly status: HTMLElement;
  private readonly bar: HTMLElement;
  private readonly error: HTMLElement;
  private timer: ReturnType<typeof setTimeout> | null = null;
  current: UiExperiment | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly state: AppState,
    private readonly api: ApiClient,
    private readonly pollIntervalMs: number = DEFAULT_POLL_INTERVAL_MS,
  ) {
    root.innerHTML = `
      <h2>Local search experiment</h2>
      <div class="experiment-controls">
        <button class="experiment-start-100">search NL 100</button>
        <button class="experiment-start-102">search NL 102</button>
        <button class="experiment-cancel" disabled>cancel</button>
      </div>
      <p class="experiment-status">idle</p>
      <p class="experiment-error" role="alert" hidden></p>
      <div class="progress-track"><div class="progress-bar" style="width: 0%"></div></div>
    `;
    this.status = root.querySelector('.experiment-status') as HTMLElement;
    this.bar = root.querySelector('.progress-bar') as HTMLElement;
    this.error = root.querySelector('.experiment-error') as HTMLElement;
    (root.querySelector('.experiment-start-100') as HTMLButtonElement).addEventListener(
      'click',
      () => void this.start(100),
    );
    (root.querySelector('.experiment-start-102') as HTMLButtonElement).addEventListener(
      'click',
      () => void this.start(102),
    );
    (root.querySelector('.experiment-cancel') as HTMLButtonElement).addEventListener(
      'click',
      () => void this.cancel(),
    );
  }

  private setCancelEnabled(enabled: boolean): void {
    (this.root.querySelector('.experiment-cancel') as HTMLButtonElement).disabled = !enabled;
  }

  async start(targetNl: 100 | 102, seed?: number): Promise<void> {
    this.stopPolling();
    this.error.hidden = true;
    try {
      const started = await this.api.startExperiment({
        n: 8,
        target_nl: targetNl,
        ...(targetNl === 102 ? { wcf_x: 8 } : {}),
        ...(seed !== undefined ? { seed } : {}),
      });
      this.current = {
        id: started.id,
        target_nl: targetNl,
        progress: 0,
        status: 'running',
        best_nl: 0,
      };
      this.status.textContent = `experiment ${started.id}: running`;
      this.setCancelEnabled(true);
      this.schedulePoll();
    } catch (error) {
      this.showError(error);
    }
  }

  async cancel(): Promise<void> {
    if (!this.current) {
      return;
    }
    try {
      await this.api.cancelExperiment(this.current.id);
    } catch (error) {
      this.showError(error);
    }
  }

  private schedulePoll(): void {
    this.timer = setTimeout(() => void this.poll(), this.pollIntervalMs);
  }

  private stopPolling(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  async poll(): Promise<void> {
    if (!this.current) {
      return;
    }
    let resource: ExperimentResource;
    try {
      resource = await this.api.getExperiment(this.current.id);
    } catch (error) {
      this.showError(error);
      this.stopPolling();
      this.setCancelEnabled(false);
      return;
    }
    this.current = {
      ...this.current,
      progress: resource.progress,
      status: resource.status,
      best_nl: resource.best_nl,
    };
    this.bar.style.width = `${Math.round(resource.progress * 100)}%`;
    this.status.textContent =
      `experiment ${this.current.id}: ${resource.status}, ` +
      `iteration ${resource.iteration}, best NL ${resource.best_nl}`;
    if (resource.status === 'running') {
      this.schedulePoll();
      return;
    }
    // terminal: polling ceases
    this.stopPolling();
    this.setCancelEnabled(false);
    if (resource.status === 'succeeded' && resource.result) {
      this.state.setActive({
        n: resource.result.n,
        m: resource.result.m,
        entries: resource.result.sbox,
        source: 'search-result',
      });
    }
  }

  private showError(error: unknown): void {
    const text =
      error instanceof ApiRequestError ? `${error.code}: ${error.message}` : String(error);
    this.error.textContent = text;
    this.error.hidden = false;
  }

  get isPolling(): boolean {
    return this.timer !== null;
  }
}
