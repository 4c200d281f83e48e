import { describe, expect, it } from 'vitest';

import { emptyForm, FormState, parseTrendInput, validateForm } from '../src/form.js';

function filledForm(overrides: Partial<FormState> = {}): FormState {
  return {
    ...emptyForm(),
    datasetId: 'toy',
    task: 'support',
    targetColumn: 'value',
    trendColumn: 'step',
    beginFrom: '1',
    beginTo: '2',
    endFrom: '3',
    endTo: '4',
    ...overrides,
  };
}

describe('parseTrendInput', () => {
  it('parses the two UTC date layouts to epoch seconds', () => {
    expect(parseTrendInput('2013-06-01 00:00:00', true)).toBe(1370044800);
    expect(parseTrendInput('2013-06-01', true)).toBe(1370044800);
  });

  it('rejects other date layouts and rolled-over dates', () => {
    expect(parseTrendInput('2013-6-1', true)).toBeNull();
    expect(parseTrendInput('2013-06-01T00:00:00', true)).toBeNull();
    expect(parseTrendInput('2013-02-30', true)).toBeNull();
  });

  it('parses finite numbers only in numeric mode', () => {
    expect(parseTrendInput('42.5', false)).toBe(42.5);
    expect(parseTrendInput('-3', false)).toBe(-3);
    expect(parseTrendInput('abc', false)).toBeNull();
    expect(parseTrendInput('Infinity', false)).toBeNull();
  });
});

describe('validateForm', () => {
  it('accepts a complete support form and builds the request', () => {
    const { errors, request } = validateForm(filledForm(), 4);
    expect(errors).toEqual({});
    expect(request).not.toBeNull();
    expect(request!.task).toBe('support');
    expect(request!.bounds).toEqual({ lower: null, upper: null });
    expect(request!.regions.begin).toEqual({ from: '1', to: '2' });
    expect(request!.mss_width).toBeNull();
  });

  it('requires a positive width for the MSS task', () => {
    const bad = validateForm(filledForm({ task: 'mss', mssWidth: '-5' }), 4);
    expect(bad.request).toBeNull();
    expect(bad.errors.mssWidth).toMatch(/> 0/);
    const good = validateForm(filledForm({ task: 'mss', mssWidth: '2' }), 4);
    expect(good.request?.mss_width).toBe(2);
  });

  it('requires a threshold in (0, 1] for the tightest task', () => {
    for (const value of ['0', '1.5', '-0.2', '']) {
      const result = validateForm(filledForm({ task: 'tightest', tightestSupport: value }), 4);
      expect(result.request).toBeNull();
    }
    const good = validateForm(filledForm({ task: 'tightest', tightestSupport: '1' }), 4);
    expect(good.request?.tightest_support).toBe(1);
  });

  it('flags overlapping regions before submission', () => {
    const result = validateForm(filledForm({ beginTo: '3' }), 4);
    expect(result.request).toBeNull();
    expect(result.errors.endFrom).toMatch(/disjoint/);
  });

  it('flags a reversed region', () => {
    const result = validateForm(filledForm({ beginFrom: '2', beginTo: '1' }), 4);
    expect(result.errors.beginTo).toMatch(/precedes/);
  });

  it('validates date regions with the dates flag', () => {
    const form = filledForm({
      trendIsDate: true,
      beginFrom: '2012-12-01 00:00:00',
      beginTo: '2013-03-01 01:00:00',
      endFrom: '2013-06-01 00:00:00',
      endTo: '2013-09-01 01:00:00',
    });
    expect(validateForm(form, 45253).errors).toEqual({});
    const bad = validateForm(filledForm({ trendIsDate: true }), 45253);
    expect(bad.errors.beginFrom).toMatch(/date/);
  });

  it('treats blank bounds as infinite and checks their order', () => {
    expect(validateForm(filledForm({ lower: '', upper: '' }), 4).errors).toEqual({});
    const reversed = validateForm(filledForm({ lower: '5', upper: '0' }), 4);
    expect(reversed.errors.upper).toMatch(/below/);
  });

  it('rejects a row limit beyond the dataset', () => {
    const result = validateForm(filledForm({ rowLimit: '10' }), 4);
    expect(result.errors.rowLimit).toMatch(/only 4 rows/);
    expect(validateForm(filledForm({ rowLimit: '4' }), 4).errors).toEqual({});
  });

  it('parses budget lists and rejects junk', () => {
    const good = validateForm(filledForm({ budgets: '100, 2000' }), 4);
    expect(good.request?.sampling.budgets).toEqual([100, 2000]);
    const bad = validateForm(filledForm({ budgets: '100,zero' }), 4);
    expect(bad.errors.budgets).toBeDefined();
  });

  it('rejects identical target and trend attributes', () => {
    const result = validateForm(filledForm({ targetColumn: 'step' }), 4);
    expect(result.errors.targetColumn).toMatch(/differ/);
  });

  it('window must be positive when present', () => {
    expect(validateForm(filledForm({ window: '0' }), 4).errors.window).toBeDefined();
    expect(validateForm(filledForm({ window: '2' }), 4).request?.window).toBe(2);
  });
});
