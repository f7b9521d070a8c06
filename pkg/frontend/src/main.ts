// Application bootstrap: wires the API client, session state and views.

import { ApiClient } from './api.js';
import { EvaluatorView } from './components/evaluator.js';
import { ExperimentView } from './components/experiment.js';
import { LoaderView } from './components/loader.js';
import { MenuView } from './components/menu.js';
import { AppState } from './state.js';

export interface App {
  state: AppState;
  api: ApiClient;
  menu: MenuView;
  loader: LoaderView;
  evaluator: EvaluatorView;
  experiment: ExperimentView;
}

export interface AppOptions {
  apiBaseUrl?: string;
  pollIntervalMs?: number;
}

export function createApp(root: HTMLElement, options: AppOptions = {}): App {
  const base =
    options.apiBaseUrl ??
    (window as { SBOXKIT_API_BASE?: string }).SBOXKIT_API_BASE ??
    'http://127.0.0.1:8000';
  const api = new ApiClient(base);
  const state = new AppState();

  root.innerHTML = `
    <header><h1>S-box workbench</h1><div class="menu-root"></div></header>
    <main>
      <section class="view-loader"></section>
      <section class="view-evaluator" hidden></section>
      <section class="view-experiment" hidden></section>
    </main>
  `;
  const loaderRoot = root.querySelector('.view-loader') as HTMLElement;
  const evaluatorRoot = root.querySelector('.view-evaluator') as HTMLElement;
  const experimentRoot = root.querySelector('.view-experiment') as HTMLElement;

  const loader = new LoaderView(loaderRoot, state);
  const evaluator = new EvaluatorView(evaluatorRoot, state, api);
  const experiment = new ExperimentView(experimentRoot, state, api, options.pollIntervalMs);
  const menu = new MenuView(root.querySelector('.menu-root') as HTMLElement, {
    loader: loaderRoot,
    evaluator: evaluatorRoot,
    experiment: experimentRoot,
  });

  return { state, api, menu, loader, evaluator, experiment };
}

declare global {
  interface Window {
    SBOXKIT_API_BASE?: string;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  createApp(document.getElementById('app') as HTMLElement);
}
