/**
 * Statement-parameter form state and validation.
 *
 * Validation here is deliberately a subset of what the service enforces:
 * anything this module accepts must be syntactically valid server-side,
 * so a passing form can only fail for data reasons (empty region, empty
 * pair space), never for shape.
 */

import type { EvaluationRequest, Task } from './types.js';

export interface FormState {
  datasetId: string;
  task: Task;
  targetColumn: string;
  trendColumn: string;
  trendIsDate: boolean;
  lower: string;
  upper: string;
  beginFrom: string;
  beginTo: string;
  endFrom: string;
  endTo: string;
  window: string;
  rowLimit: string;
  budgets: string;
  seed: string;
  mssWidth: string;
  tightestSupport: string;
}

export function emptyForm(): FormState {
  return {
    datasetId: '',
    task: 'all',
    targetColumn: '',
    trendColumn: '',
    trendIsDate: false,
    lower: '',
    upper: '',
    beginFrom: '',
    beginTo: '',
    endFrom: '',
    endTo: '',
    window: '',
    rowLimit: '',
    budgets: '',
    seed: '',
    mssWidth: '',
    tightestSupport: '',
  };
}

export type FieldErrors = Partial<Record<keyof FormState, string>>;

export interface ValidationResult {
  errors: FieldErrors;
  request: EvaluationRequest | null;
}

const DATE_SHAPE = /^\d{4}-\d{2}-\d{2}( \d{2}:\d{2}:\d{2})?$/;

/** Epoch seconds for the service's two UTC date layouts, or null. */
export function parseTrendInput(raw: string, isDate: boolean): number | null {
  const text = raw.trim();
  if (!text) return null;
  if (!isDate) {
    const value = Number(text);
    return Number.isFinite(value) ? value : null;
  }
  if (!DATE_SHAPE.test(text)) return null;
  const [datePart, timePart] = text.split(' ');
  const [y, mo, d] = datePart!.split('-').map(Number);
  const [h, mi, s] = timePart ? timePart.split(':').map(Number) : [0, 0, 0];
  const stamp = Date.UTC(y!, mo! - 1, d!, h!, mi!, s!);
  const roundTrip = new Date(stamp);
  // Date.UTC silently rolls over out-of-range fields (2013-02-30 -> Mar 2)
  if (
    roundTrip.getUTCFullYear() !== y ||
    roundTrip.getUTCMonth() !== mo! - 1 ||
    roundTrip.getUTCDate() !== d ||
    roundTrip.getUTCHours() !== h ||
    roundTrip.getUTCMinutes() !== mi ||
    roundTrip.getUTCSeconds() !== s
  ) {
    return null;
  }
  return stamp / 1000;
}

function finiteOrNull(raw: string): number | null | undefined {
  const text = raw.trim();
  if (!text) return null;
  const value = Number(text);
  return Number.isFinite(value) ? value : undefined; // undefined = unparseable
}

function positiveIntOrNull(raw: string): number | null | undefined {
  const value = finiteOrNull(raw);
  if (value === null || value === undefined) return value;
  return Number.isInteger(value) && value >= 1 ? value : undefined;
}

function nonNegativeIntOrNull(raw: string): number | null | undefined {
  const value = finiteOrNull(raw);
  if (value === null || value === undefined) return value;
  return Number.isInteger(value) && value >= 0 ? value : undefined;
}

export function validateForm(form: FormState, rowCount: number | null): ValidationResult {
  const errors: FieldErrors = {};
  const kind = form.trendIsDate ? 'date (YYYY-MM-DD [HH:MM:SS])' : 'number';

  if (!form.datasetId) errors.datasetId = 'select a dataset';
  if (!form.targetColumn) errors.targetColumn = 'select a target attribute';
  if (!form.trendColumn) errors.trendColumn = 'select a trend attribute';
  if (form.targetColumn && form.targetColumn === form.trendColumn) {
    errors.targetColumn = 'target and trend attributes must differ';
  }

  const region = (fromKey: 'beginFrom' | 'endFrom', toKey: 'beginTo' | 'endTo') => {
    const from = parseTrendInput(form[fromKey], form.trendIsDate);
    const to = parseTrendInput(form[toKey], form.trendIsDate);
    if (from === null) errors[fromKey] = `enter a ${kind}`;
    if (to === null) errors[toKey] = `enter a ${kind}`;
    if (from !== null && to !== null && from > to) {
      errors[toKey] = 'region end precedes its start';
    }
    return from !== null && to !== null && from <= to ? ([from, to] as const) : null;
  };
  const begin = region('beginFrom', 'beginTo');
  const end = region('endFrom', 'endTo');
  if (begin && end && begin[0] <= end[1] && end[0] <= begin[1]) {
    errors.endFrom = 'begin and end regions must be disjoint';
  }

  const lower = finiteOrNull(form.lower);
  const upper = finiteOrNull(form.upper);
  if (lower === undefined) errors.lower = 'enter a number or leave blank for -∞';
  if (upper === undefined) errors.upper = 'enter a number or leave blank for +∞';
  if (typeof lower === 'number' && typeof upper === 'number' && lower > upper) {
    errors.upper = 'upper bound below lower bound';
  }

  const window = finiteOrNull(form.window);
  if (window === undefined || (typeof window === 'number' && window <= 0)) {
    errors.window = 'window must be a positive number (blank = unconstrained)';
  }

  const rowLimit = positiveIntOrNull(form.rowLimit);
  if (rowLimit === undefined) errors.rowLimit = 'enter a positive whole number';
  else if (rowLimit !== null && rowCount !== null && rowLimit > rowCount) {
    errors.rowLimit = `dataset has only ${rowCount} rows`;
  }

  let budgets: number[] | null = null;
  if (form.budgets.trim()) {
    const parts = form.budgets.split(',').map((part) => Number(part.trim()));
    if (parts.some((n) => !Number.isInteger(n) || n < 1)) {
      errors.budgets = 'comma-separated positive whole numbers';
    } else {
      budgets = parts;
    }
  }

  const seed = nonNegativeIntOrNull(form.seed);
  if (seed === undefined) errors.seed = 'enter a non-negative whole number';
  const seedValue = seed === undefined ? null : seed;

  const wantsMss = form.task === 'mss' || form.task === 'all';
  const wantsTightest = form.task === 'tightest' || form.task === 'all';
  const mssWidth = finiteOrNull(form.mssWidth);
  if (wantsMss) {
    if (typeof mssWidth !== 'number' || mssWidth <= 0) {
      errors.mssWidth = 'statement range width must be > 0';
    }
  }
  const tightestSupport = finiteOrNull(form.tightestSupport);
  if (wantsTightest) {
    if (typeof tightestSupport !== 'number' || tightestSupport <= 0 || tightestSupport > 1) {
      errors.tightestSupport = 'support threshold must lie in (0, 1]';
    }
  }

  if (Object.keys(errors).length > 0) {
    return { errors, request: null };
  }
  return {
    errors,
    request: {
      dataset_id: form.datasetId,
      task: form.task,
      target_column: form.targetColumn,
      trend_column: form.trendColumn,
      trend_is_date: form.trendIsDate,
      bounds: { lower: lower as number | null, upper: upper as number | null },
      regions: {
        begin: { from: form.beginFrom.trim(), to: form.beginTo.trim() },
        end: { from: form.endFrom.trim(), to: form.endTo.trim() },
      },
      window: window as number | null,
      row_limit: rowLimit as number | null,
      sampling: { budgets, seed: seedValue },
      mss_width: wantsMss ? (mssWidth as number) : null,
      tightest_support: wantsTightest ? (tightestSupport as number) : null,
    },
  };
}
