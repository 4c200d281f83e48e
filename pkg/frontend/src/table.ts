/**
 * Results table in the three-column style of the evaluation console:
 * condition/output label, value, and provenance.  User-specified
 * conditions render plain; algorithm outputs render bold; conditions the
 * task did not need render as "- -".
 *
 * Every value cell carries `data-field` (dot path into the response) and,
 * for numbers, `data-value` with the full-precision figure, so a test can
 * trace each rendered cell back to the response payload.
 */

import type { EvaluationResponse } from './types.js';

export const UNUSED = '- -';

const fmt = (value: number): string => value.toFixed(3);

interface Row {
  label: string;
  text: string;
  field: string;
  computed: boolean;
  value?: number;
}

function conditionRow(label: string, field: string, text: string | null): Row {
  return { label, text: text ?? UNUSED, field, computed: false };
}

function outputRow(label: string, field: string, value: number | null): Row {
  return value === null
    ? { label, text: UNUSED, field, computed: false }
    : { label, text: fmt(value), field, computed: true, value };
}

function buildRows(response: EvaluationResponse): Row[] {
  const { echo, support, mss, tightest } = response;
  const rows: Row[] = [];

  rows.push(conditionRow('Target attribute', 'echo.target_column', echo.target_column));
  rows.push(
    conditionRow(
      'Trend attribute',
      'echo.trend_column',
      echo.trend_is_date ? `${echo.trend_column} (dates)` : echo.trend_column,
    ),
  );
  rows.push(
    conditionRow(
      'Statement bounds',
      'echo.bounds',
      echo.bounds === null
        ? null
        : `[${echo.bounds.lower ?? '-∞'}, ${echo.bounds.upper ?? '+∞'}]`,
    ),
  );
  rows.push(
    conditionRow(
      'Begin region',
      'echo.regions.begin',
      `${echo.regions.begin.from} .. ${echo.regions.begin.to}`,
    ),
  );
  rows.push(
    conditionRow(
      'End region',
      'echo.regions.end',
      `${echo.regions.end.from} .. ${echo.regions.end.to}`,
    ),
  );
  rows.push(conditionRow('Window constraint', 'echo.window', echo.window?.toString() ?? null));
  rows.push(
    conditionRow('Number of data points', 'echo.row_limit', echo.row_limit?.toString() ?? null),
  );
  rows.push(
    conditionRow(
      'Sampling budgets',
      'echo.sampling.budgets',
      echo.sampling?.budgets?.join(', ') ?? null,
    ),
  );
  rows.push(
    conditionRow('Sampling seed', 'echo.sampling.seed', echo.sampling?.seed?.toString() ?? null),
  );

  rows.push(
    outputRow(
      'Support (exact baseline)',
      'support.exact_baseline.support',
      support?.exact_baseline?.support ?? null,
    ),
  );
  rows.push(outputRow('Support (exact)', 'support.exact.support', support?.exact.support ?? null));
  if (support) {
    support.random.forEach((estimate, i) => {
      rows.push(
        outputRow(
          `Support (random, N=${estimate.budget})`,
          `support.random.${i}.estimate`,
          estimate.estimate,
        ),
      );
    });
  } else {
    rows.push(outputRow('Support (random)', 'support.random', null));
  }

  rows.push(
    conditionRow('MSS width', 'echo.mss_width', echo.mss_width?.toString() ?? null),
  );
  rows.push(outputRow('MSS lower bound', 'mss.lo', mss?.lo ?? null));
  rows.push(outputRow('MSS upper bound', 'mss.hi', mss?.hi ?? null));
  rows.push(outputRow('MSS support', 'mss.support', mss?.support ?? null));

  rows.push(
    conditionRow(
      'Tightest threshold',
      'echo.tightest_support',
      echo.tightest_support?.toString() ?? null,
    ),
  );
  rows.push(outputRow('Tightest lower bound', 'tightest.lo', tightest?.lo ?? null));
  rows.push(outputRow('Tightest upper bound', 'tightest.hi', tightest?.hi ?? null));
  rows.push(outputRow('Tightest range', 'tightest.width', tightest?.width ?? null));

  return rows;
}

export function renderResultsTable(response: EvaluationResponse): HTMLTableElement {
  const table = document.createElement('table');
  table.className = 'results-table';
  const head = table.createTHead().insertRow();
  for (const title of ['Condition / output', 'Value']) {
    const cell = document.createElement('th');
    cell.textContent = title;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const row of buildRows(response)) {
    const tr = body.insertRow();
    tr.insertCell().textContent = row.label;
    const cell = tr.insertCell();
    cell.dataset.field = row.field;
    if (row.value !== undefined) cell.dataset.value = String(row.value);
    if (row.computed) {
      const strong = document.createElement('strong');
      strong.textContent = row.text;
      cell.appendChild(strong);
    } else {
      cell.textContent = row.text;
    }
  }
  return table;
}
