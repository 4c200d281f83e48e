/**
 * Wire types of the evaluation service (mirrors its JSON contract).
 */

export type Task = 'support' | 'mss' | 'tightest' | 'all';

export interface ColumnInfo {
  name: string;
  kind: 'numeric' | 'date' | 'text';
}

export interface DatasetInfo {
  id: string;
  name: string;
  row_count: number;
  columns: ColumnInfo[];
}

export interface RegionSpec {
  from: string;
  to: string;
}

export interface BoundsSpec {
  lower: number | null;
  upper: number | null;
}

export interface SamplingSpec {
  budgets: number[] | null;
  seed: number | null;
}

export interface EvaluationRequest {
  dataset_id: string;
  task: Task;
  target_column: string;
  trend_column: string;
  trend_is_date: boolean;
  bounds: BoundsSpec;
  regions: { begin: RegionSpec; end: RegionSpec };
  window: number | null;
  row_limit: number | null;
  sampling: SamplingSpec;
  mss_width: number | null;
  tightest_support: number | null;
}

export interface SupportResult {
  support: number;
  supporting_pairs: number;
  total_pairs: number;
}

export interface SupportEstimate {
  budget: number;
  estimate: number;
  epsilon95: number;
}

export interface SupportSection {
  exact_baseline: SupportResult | null;
  exact: SupportResult;
  random: SupportEstimate[];
}

export interface DiscoveredStatement {
  lo: number;
  hi: number;
  support: number;
  width: number;
}

export interface EvaluationEcho {
  dataset_id: string;
  task: Task;
  target_column: string;
  trend_column: string;
  trend_is_date: boolean;
  bounds: BoundsSpec | null;
  regions: { begin: RegionSpec; end: RegionSpec };
  window: number | null;
  row_limit: number | null;
  sampling: SamplingSpec | null;
  mss_width: number | null;
  tightest_support: number | null;
}

export interface EvaluationResponse {
  support: SupportSection | null;
  mss: DiscoveredStatement | null;
  tightest: DiscoveredStatement | null;
  echo: EvaluationEcho;
  warnings: string[];
}

export interface ServiceError {
  error: string;
  details: { loc?: (string | number)[]; msg: string }[];
}
