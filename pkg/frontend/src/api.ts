// Typed client for the evaluation service; the SPA performs no metric
// arithmetic, every displayed value comes verbatim from these responses.

import type {
  ClassicalEntry,
  ExperimentConfig,
  ExperimentResource,
  GeneratedSBox,
  PropertyName,
  PropertyValue,
  SBoxPayload,
} from './types.js';

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseResponse<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = 'http-error';
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { error?: { code: string; message: string } };
    if (body.error) {
      code = body.error.code;
      message = body.error.message;
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiRequestError(response.status, code, message);
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async get<T>(path: string): Promise<T> {
    return parseResponse<T>(await this.fetchFn(`${this.baseUrl}${path}`));
  }

  private async send<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers: { 'content-type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return parseResponse<T>(response);
  }

  classical(): Promise<ClassicalEntry[]> {
    return this.get('/api/classical');
  }

  generate(n: number, seed?: number): Promise<GeneratedSBox> {
    return this.send('POST', '/api/generate', seed === undefined ? { n } : { n, seed });
  }

  evaluate(
    property: PropertyName,
    payload: SBoxPayload,
    params?: { x?: number; r?: number },
  ): Promise<PropertyValue> {
    const query =
      params && (params.x !== undefined || params.r !== undefined)
        ? '?' +
          Object.entries(params)
            .filter(([, v]) => v !== undefined)
            .map(([k, v]) => `${k}=${v}`)
            .join('&')
        : '';
    return this.send<{ value: PropertyValue }>(
      'POST',
      `/api/evaluate/${property}${query}`,
      payload,
    ).then((body) => body.value);
  }

  startExperiment(config: ExperimentConfig): Promise<{ id: string; seed: number }> {
    return this.send('POST', '/api/experiments', config);
  }

  getExperiment(id: string): Promise<ExperimentResource> {
    return this.get(`/api/experiments/${id}`);
  }

  cancelExperiment(id: string): Promise<{ id: string; cancelled: boolean }> {
    return this.send('DELETE', `/api/experiments/${id}`);
  }
}
