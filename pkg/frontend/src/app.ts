/**
 * Composition root: the three-section console.
 *
 *   1. dataset & task selection
 *   2. statement-parameter configuration (inline validation)
 *   3. evaluation results (table, charts, warnings, refine shortcuts)
 *
 * At most one evaluation is in flight; responses from superseded requests
 * are discarded by token.
 */

import { ApiClient, ApiError } from './api.js';
import { renderDifferenceChart, renderSeriesChart, SeriesPoint, RegionSpan } from './charts.js';
import { emptyForm, FormState, parseTrendInput, validateForm } from './form.js';
import { renderResultsTable } from './table.js';
import type { DatasetInfo, EvaluationResponse, Task } from './types.js';

const TASKS: { value: Task; label: string }[] = [
  { value: 'support', label: 'Support value' },
  { value: 'mss', label: 'Most supported statement' },
  { value: 'tightest', label: 'Tightest statement' },
  { value: 'all', label: 'All tasks' },
];

/** Minimal RFC-4180 line splitter for the preview payload. */
export function splitCsvLine(line: string): string[] {
  const cells: string[] = [];
  let cell = '';
  let quoted = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (quoted) {
      if (ch === '"' && line[i + 1] === '"') {
        cell += '"';
        i++;
      } else if (ch === '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ',') {
      cells.push(cell);
      cell = '';
    } else {
      cell += ch;
    }
  }
  cells.push(cell);
  return cells;
}

export class App {
  form: FormState = emptyForm();
  private datasets: DatasetInfo[] = [];
  private selected: DatasetInfo | null = null;
  private previewLines: string[] = [];
  private requestToken = 0;
  private pending = false;

  private readonly selectionSection: HTMLElement;
  private readonly parameterSection: HTMLElement;
  private readonly resultsSection: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {
    this.selectionSection = this.section('selection', 'Dataset and task');
    this.parameterSection = this.section('parameters', 'Statement parameters');
    this.resultsSection = this.section('results', 'Evaluation results');
  }

  private section(id: string, title: string): HTMLElement {
    const el = document.createElement('section');
    el.id = `section-${id}`;
    const heading = document.createElement('h2');
    heading.textContent = title;
    el.appendChild(heading);
    const body = document.createElement('div');
    body.className = 'section-body';
    el.appendChild(body);
    this.root.appendChild(el);
    return body;
  }

  async mount(): Promise<void> {
    await this.loadDatasets();
  }

  private async loadDatasets(): Promise<void> {
    this.selectionSection.textContent = 'Loading datasets…';
    try {
      this.datasets = await this.api.listDatasets();
    } catch (err) {
      this.renderServiceDown(String(err));
      return;
    }
    this.renderSelectionPanel();
  }

  private renderServiceDown(message: string): void {
    this.selectionSection.textContent = '';
    const banner = document.createElement('div');
    banner.className = 'banner error-banner';
    banner.textContent = `Evaluation service unreachable: ${message}`;
    const retry = document.createElement('button');
    retry.textContent = 'Retry';
    retry.addEventListener('click', () => void this.loadDatasets());
    banner.appendChild(retry);
    this.selectionSection.appendChild(banner);
  }

  private renderSelectionPanel(): void {
    this.selectionSection.textContent = '';

    const datasetLabel = document.createElement('label');
    datasetLabel.textContent = 'Dataset ';
    const datasetSelect = document.createElement('select');
    datasetSelect.name = 'datasetId';
    if (this.datasets.length === 0) {
      datasetSelect.disabled = true;
      const note = document.createElement('p');
      note.className = 'empty-registry-note';
      note.textContent = 'No datasets are loaded; add CSV files to the dataset directory and restart the service.';
      this.selectionSection.appendChild(note);
    }
    datasetSelect.appendChild(new Option('— select —', ''));
    for (const ds of this.datasets) {
      datasetSelect.appendChild(new Option(`${ds.name} (${ds.row_count} rows)`, ds.id));
    }
    datasetSelect.addEventListener('change', () => void this.selectDataset(datasetSelect.value));
    datasetLabel.appendChild(datasetSelect);
    this.selectionSection.appendChild(datasetLabel);

    const taskLabel = document.createElement('label');
    taskLabel.textContent = 'Task ';
    const taskSelect = document.createElement('select');
    taskSelect.name = 'task';
    for (const task of TASKS) {
      taskSelect.appendChild(new Option(task.label, task.value));
    }
    taskSelect.value = this.form.task;
    taskSelect.addEventListener('change', () => {
      this.form.task = taskSelect.value as Task;
      this.renderParameterPanel();
    });
    taskLabel.appendChild(taskSelect);
    this.selectionSection.appendChild(taskLabel);
  }

  private async selectDataset(id: string): Promise<void> {
    this.selected = this.datasets.find((d) => d.id === id) ?? null;
    this.form = { ...emptyForm(), task: this.form.task, datasetId: id };
    this.previewLines = [];
    if (this.selected) {
      const dateColumn = this.selected.columns.find((c) => c.kind === 'date');
      this.form.trendColumn = dateColumn?.name ?? '';
      this.form.trendIsDate = dateColumn !== undefined;
      try {
        this.previewLines = await this.api.preview(id, 100);
      } catch {
        this.previewLines = []; // chart is optional; the form still works
      }
    }
    this.renderParameterPanel();
  }

  private input(
    name: keyof FormState,
    label: string,
    options: { placeholder?: string; hint?: string } = {},
  ): HTMLElement {
    const wrap = document.createElement('div');
    wrap.className = 'field';
    const labelEl = document.createElement('label');
    labelEl.textContent = label;
    const inputEl = document.createElement('input');
    inputEl.name = name;
    inputEl.value = String(this.form[name] ?? '');
    if (options.placeholder) inputEl.placeholder = options.placeholder;
    inputEl.addEventListener('input', () => {
      (this.form[name] as string) = inputEl.value;
      this.refreshValidation();
    });
    labelEl.appendChild(inputEl);
    wrap.appendChild(labelEl);
    if (options.hint) {
      const hint = document.createElement('small');
      hint.className = 'hint';
      hint.textContent = options.hint;
      wrap.appendChild(hint);
    }
    const error = document.createElement('small');
    error.className = 'field-error';
    error.dataset.errorFor = name;
    wrap.appendChild(error);
    return wrap;
  }

  private columnPicker(name: 'targetColumn' | 'trendColumn', label: string): HTMLElement {
    const wrap = document.createElement('div');
    wrap.className = 'field';
    const labelEl = document.createElement('label');
    labelEl.textContent = label;
    const select = document.createElement('select');
    select.name = name;
    select.appendChild(new Option('— select —', ''));
    for (const column of this.selected?.columns ?? []) {
      select.appendChild(new Option(`${column.name} (${column.kind})`, column.name));
    }
    select.value = this.form[name];
    select.addEventListener('change', () => {
      this.form[name] = select.value;
      if (name === 'trendColumn') {
        const kind = this.selected?.columns.find((c) => c.name === select.value)?.kind;
        this.form.trendIsDate = kind === 'date';
        const checkbox = this.parameterSection.querySelector<HTMLInputElement>(
          'input[name="trendIsDate"]',
        );
        if (checkbox) checkbox.checked = this.form.trendIsDate;
      }
      this.refreshValidation();
    });
    labelEl.appendChild(select);
    wrap.appendChild(labelEl);
    const error = document.createElement('small');
    error.className = 'field-error';
    error.dataset.errorFor = name;
    wrap.appendChild(error);
    return wrap;
  }

  private renderParameterPanel(): void {
    this.parameterSection.textContent = '';
    if (!this.selected) {
      const note = document.createElement('p');
      note.textContent = 'Select a dataset to configure a statement.';
      this.parameterSection.appendChild(note);
      return;
    }

    const form = document.createElement('form');
    form.addEventListener('submit', (event) => {
      event.preventDefault();
      void this.evaluate();
    });

    form.appendChild(this.columnPicker('targetColumn', 'Target attribute '));
    form.appendChild(this.columnPicker('trendColumn', 'Trend attribute '));

    const datesWrap = document.createElement('div');
    datesWrap.className = 'field';
    const datesLabel = document.createElement('label');
    const datesBox = document.createElement('input');
    datesBox.type = 'checkbox';
    datesBox.name = 'trendIsDate';
    datesBox.checked = this.form.trendIsDate;
    datesBox.addEventListener('change', () => {
      this.form.trendIsDate = datesBox.checked;
      this.refreshValidation();
    });
    datesLabel.appendChild(datesBox);
    datesLabel.appendChild(document.createTextNode(' trend attribute holds dates'));
    datesWrap.appendChild(datesLabel);
    form.appendChild(datesWrap);

    form.appendChild(
      this.input('lower', 'Lower bound ', { hint: 'blank: set to -∞ by default' }),
    );
    form.appendChild(
      this.input('upper', 'Upper bound ', { hint: 'blank: set to +∞ by default' }),
    );
    const regionHint = this.form.trendIsDate
      ? 'YYYY-MM-DD HH:MM:SS or YYYY-MM-DD (UTC)'
      : 'numeric trend value';
    form.appendChild(this.input('beginFrom', 'Begin region from ', { hint: regionHint }));
    form.appendChild(this.input('beginTo', 'Begin region to '));
    form.appendChild(this.input('endFrom', 'End region from ', { hint: regionHint }));
    form.appendChild(this.input('endTo', 'End region to '));
    form.appendChild(
      this.input('window', 'Window constraint ', {
        hint: 'exact trend span per pair; seconds for dates; blank = unconstrained',
      }),
    );
    form.appendChild(
      this.input('rowLimit', 'Number of data points ', {
        hint: `blank = all ${this.selected.row_count} rows`,
      }),
    );
    form.appendChild(
      this.input('budgets', 'Budgets for random sampling ', {
        hint: 'comma-separated; blank = 1000, 5000, 10000, 50000, 100000',
      }),
    );
    form.appendChild(this.input('seed', 'Sampling seed ', { hint: 'blank = fresh seed' }));
    if (this.form.task === 'mss' || this.form.task === 'all') {
      form.appendChild(this.input('mssWidth', 'Width of the statement range ', { hint: '> 0' }));
    }
    if (this.form.task === 'tightest' || this.form.task === 'all') {
      form.appendChild(
        this.input('tightestSupport', 'Support value of the tightest statement ', {
          hint: 'in (0, 1]',
        }),
      );
    }

    const submit = document.createElement('button');
    submit.type = 'submit';
    submit.name = 'evaluate';
    submit.textContent = 'Evaluate!';
    form.appendChild(submit);

    this.parameterSection.appendChild(form);
    this.refreshValidation();
  }

  /** Re-run client validation, paint inline errors, gate the submit button. */
  refreshValidation(): void {
    const { errors, request } = validateForm(this.form, this.selected?.row_count ?? null);
    for (const el of this.parameterSection.querySelectorAll<HTMLElement>('[data-error-for]')) {
      const field = el.dataset.errorFor as keyof FormState;
      el.textContent = errors[field] ?? '';
    }
    const submit = this.parameterSection.querySelector<HTMLButtonElement>('button[type="submit"]');
    if (submit) submit.disabled = request === null || this.pending;
  }

  private async evaluate(): Promise<void> {
    const { request } = validateForm(this.form, this.selected?.row_count ?? null);
    if (!request || this.pending) return;
    const token = ++this.requestToken;
    this.pending = true;
    this.refreshValidation();
    this.resultsSection.textContent = 'Evaluating…';
    try {
      const response = await this.api.evaluate(request);
      if (token !== this.requestToken) return; // superseded
      this.renderResults(response);
    } catch (err) {
      if (token !== this.requestToken) return;
      this.renderEvaluationError(err);
    } finally {
      if (token === this.requestToken) {
        this.pending = false;
        this.refreshValidation();
      }
    }
  }

  private renderEvaluationError(err: unknown): void {
    this.resultsSection.textContent = '';
    const banner = document.createElement('div');
    banner.className = 'banner error-banner';
    if (err instanceof ApiError) {
      banner.textContent = `${err.payload.error}: `;
      const list = document.createElement('ul');
      for (const detail of err.payload.details ?? []) {
        const item = document.createElement('li');
        item.textContent = detail.loc ? `${detail.loc.join('.')}: ${detail.msg}` : detail.msg;
        list.appendChild(item);
        const field = detail.loc?.[detail.loc.length - 1];
        const input = this.parameterSection.querySelector<HTMLElement>(
          `[name="${String(field)}"]`,
        );
        input?.classList.add('input-error');
      }
      banner.appendChild(list);
    } else {
      banner.textContent = String(err);
    }
    this.resultsSection.appendChild(banner);
  }

  private renderResults(response: EvaluationResponse): void {
    this.resultsSection.textContent = '';

    if (response.warnings.length > 0) {
      const chips = document.createElement('div');
      chips.className = 'warning-chips';
      for (const warning of response.warnings) {
        const chip = document.createElement('span');
        chip.className = 'chip';
        chip.textContent = warning;
        chips.appendChild(chip);
      }
      this.resultsSection.appendChild(chips);
    }

    this.resultsSection.appendChild(renderResultsTable(response));
    this.renderRefineActions(response);
    this.renderCharts(response);
  }

  private renderRefineActions(response: EvaluationResponse): void {
    const refinable: [string, { lo: number; hi: number } | null][] = [
      ['most supported', response.mss],
      ['tightest', response.tightest],
    ];
    const actions = document.createElement('div');
    actions.className = 'refine-actions';
    for (const [label, found] of refinable) {
      if (!found) continue;
      const button = document.createElement('button');
      button.type = 'button';
      button.dataset.refine = label;
      button.textContent = `Refine: use ${label} bounds`;
      button.addEventListener('click', () => {
        this.form.lower = String(found.lo);
        this.form.upper = String(found.hi);
        this.renderParameterPanel();
      });
      actions.appendChild(button);
    }
    if (actions.childNodes.length > 0) this.resultsSection.appendChild(actions);
  }

  private renderCharts(response: EvaluationResponse): void {
    if (this.previewLines.length < 2 || !this.selected) {
      this.resultsSection.appendChild(renderDifferenceChart(response, null));
      return;
    }
    const header = splitCsvLine(this.previewLines[0]!);
    const ti = header.indexOf(response.echo.trend_column);
    const yi = header.indexOf(response.echo.target_column);
    const isDate = response.echo.trend_is_date;

    const points: SeriesPoint[] = [];
    for (const line of this.previewLines.slice(1)) {
      const cells = splitCsvLine(line);
      const x = ti >= 0 ? parseTrendInput(cells[ti] ?? '', isDate) : null;
      const y = yi >= 0 ? parseTrendInput(cells[yi] ?? '', false) : null;
      if (x !== null && y !== null) points.push({ x, y });
    }
    points.sort((a, b) => a.x - b.x);

    const regions: RegionSpan[] = [];
    for (const which of ['begin', 'end'] as const) {
      const spec = response.echo.regions[which];
      const from = parseTrendInput(spec.from, isDate);
      const to = parseTrendInput(spec.to, isDate);
      if (from !== null && to !== null) regions.push({ from, to, label: which });
    }
    this.resultsSection.appendChild(
      renderSeriesChart(
        points,
        regions,
        `${response.echo.target_column} over ${response.echo.trend_column} ` +
          `(first ${points.length} preview rows; regions shaded where visible)`,
      ),
    );

    // client-side sample of differences, purely for the histogram backdrop
    let diffs: number[] | null = null;
    const inRegion = (span: RegionSpan) => points.filter((p) => p.x >= span.from && p.x <= span.to);
    const beginSpan = regions.find((r) => r.label === 'begin');
    const endSpan = regions.find((r) => r.label === 'end');
    if (beginSpan && endSpan) {
      const beginPts = inRegion(beginSpan);
      const endPts = inRegion(endSpan);
      if (beginPts.length > 0 && endPts.length > 0) {
        diffs = [];
        for (const b of beginPts) {
          for (const e of endPts) diffs.push(e.y - b.y);
        }
      }
    }
    this.resultsSection.appendChild(renderDifferenceChart(response, diffs));
  }
}
