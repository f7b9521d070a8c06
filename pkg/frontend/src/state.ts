// Session state: the single active S-box, shared by all views.

import type { UiSBox } from './types.js';

export type StateListener = (box: UiSBox | null) => void;

export class AppState {
  private active: UiSBox | null = null;
  private readonly listeners: StateListener[] = [];

  get activeSBox(): UiSBox | null {
    return this.active;
  }

  setActive(box: UiSBox | null): void {
    this.active = box;
    for (const listener of this.listeners) {
      listener(box);
    }
  }

  subscribe(listener: StateListener): void {
    this.listeners.push(listener);
  }
}
