// Shared types mirroring the REST API's JSON schemas.

export type SBoxSource = 'file-upload' | 'generated' | 'classical' | 'search-result';

export interface UiSBox {
  n: number;
  m: number;
  entries: number[];
  source: SBoxSource;
}

export interface SBoxPayload {
  n: number;
  m: number;
  sbox: number[];
}

export interface ClassicalEntry extends SBoxPayload {
  name: string;
  nl: number;
  du: number;
  citation: string;
}

export interface GeneratedSBox extends SBoxPayload {
  seed: number;
}

export type PropertyName =
  | 'nl'
  | 'du'
  | 'ccv'
  | 'mto'
  | 'rto'
  | 'wcf'
  | 'bijective'
  | 'hw-signature'
  | 'all';

export interface PropertyReport {
  bijective: boolean;
  hw_signature: number[];
  nl: number | null;
  du: number | null;
  ccv: number | null;
  mto: number | null;
  rto: number | null;
  wcf: number | null;
  errors: Record<string, string>;
}

export type PropertyValue = number | boolean | number[] | PropertyReport;

export interface ExperimentConfig {
  n: number;
  target_nl: number;
  max_iterations?: number;
  restarts?: number;
  wcf_x?: number;
  wcf_r?: number;
  seed?: number;
}

export type ExperimentStatus = 'running' | 'succeeded' | 'exhausted' | 'cancelled';

export interface ExperimentResource {
  id: string;
  status: ExperimentStatus;
  iteration: number;
  best_nl: number;
  current_nl: number;
  current_wcf: number | null;
  progress: number;
  result?: SBoxPayload;
}

export interface UiExperiment {
  id: string;
  target_nl: number;
  progress: number;
  status: ExperimentStatus;
  best_nl: number;
}
