// Loader view: pick a text file, parse and validate it locally, show the
// table as a grid.  Invalid input renders an inline message and sends
// nothing over the network.

import { ParseError, parseSBoxText, validateSBox } from '../parse.js';
import type { AppState } from '../state.js';
import type { SBoxSource, UiSBox } from '../types.js';

export class LoaderView {
  private readonly errorBox: HTMLElement;
  private readonly grid: HTMLElement;
  private readonly info: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly state: AppState,
  ) {
    root.innerHTML = `
      <h2>Load S-box</h2>
      <input type="file" class="loader-file" accept=".txt,text/plain">
      <p class="loader-error" role="alert" hidden></p>
      <p class="loader-info"></p>
      <div class="sbox-grid"></div>
    `;
    this.errorBox = root.querySelector('.loader-error') as HTMLElement;
    this.grid = root.querySelector('.sbox-grid') as HTMLElement;
    this.info = root.querySelector('.loader-info') as HTMLElement;
    const input = root.querySelector('.loader-file') as HTMLInputElement;
    input.addEventListener('change', () => {
      const file = input.files?.[0];
      if (file) {
        void file.text().then((text) => this.loadFromText(text));
      }
    });
    this.state.subscribe((box) => this.renderBox(box));
  }

  /** Parse text into the active S-box; returns true when it validated. */
  loadFromText(text: string, source: SBoxSource = 'file-upload'): boolean {
    try {
      const box = parseSBoxText(text);
      box.source = source;
      validateSBox(box);
      this.clearError();
      this.state.setActive(box);
      return true;
    } catch (error) {
      if (error instanceof ParseError) {
        this.showError(error.message);
        return false;
      }
      throw error;
    }
  }

  private showError(message: string): void {
    this.errorBox.textContent = message;
    this.errorBox.hidden = false;
  }

  private clearError(): void {
    this.errorBox.textContent = '';
    this.errorBox.hidden = true;
  }

  private renderBox(box: UiSBox | null): void {
    this.grid.textContent = '';
    if (!box) {
      this.info.textContent = 'no S-box loaded';
      return;
    }
    this.info.textContent = `n=${box.n}, m=${box.m}, source=${box.source}`;
    const columns = Math.min(16, box.entries.length);
    this.grid.style.gridTemplateColumns = `repeat(${columns}, max-content)`;
    for (const value of box.entries) {
      const cell = document.createElement('span');
      cell.className = 'sbox-cell';
      cell.textContent = String(value);
      this.grid.appendChild(cell);
    }
  }
}
