/**
 * SVG charts: a preview time-series with the support regions shaded, and a
 * difference axis showing where the statement bounds and any discovered
 * intervals sit (with a histogram behind them when preview rows land in
 * both regions).
 *
 * Charts are visual aids over data already fetched from the service: the
 * preview rows and the evaluation response.  No support number is computed
 * here.
 */

import type { DiscoveredStatement, EvaluationResponse } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export interface SeriesPoint {
  x: number;
  y: number;
}

export interface RegionSpan {
  from: number;
  to: number;
  label: string;
}

const WIDTH = 640;
const HEIGHT = 180;
const PAD = { left: 48, right: 12, top: 12, bottom: 24 };

function scale(domain: [number, number], range: [number, number]) {
  const span = domain[1] - domain[0] || 1;
  return (v: number) => range[0] + ((v - domain[0]) / span) * (range[1] - range[0]);
}

/** Line chart of preview points; region spans intersecting the domain are shaded. */
export function renderSeriesChart(
  points: SeriesPoint[],
  regions: RegionSpan[],
  caption: string,
): SVGSVGElement {
  const svg = svgElement('svg', {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: 'chart series-chart',
    role: 'img',
  });
  if (points.length === 0) return svg;

  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const sx = scale([Math.min(...xs), Math.max(...xs)], [PAD.left, WIDTH - PAD.right]);
  const sy = scale([Math.min(...ys), Math.max(...ys)], [HEIGHT - PAD.bottom, PAD.top]);

  for (const region of regions) {
    const lo = Math.max(region.from, Math.min(...xs));
    const hi = Math.min(region.to, Math.max(...xs));
    if (lo > hi) continue;
    svg.appendChild(
      svgElement('rect', {
        x: sx(lo),
        y: PAD.top,
        width: Math.max(sx(hi) - sx(lo), 1),
        height: HEIGHT - PAD.top - PAD.bottom,
        class: `region-shade region-${region.label}`,
      }),
    );
  }

  svg.appendChild(
    svgElement('polyline', {
      points: points.map((p) => `${sx(p.x).toFixed(1)},${sy(p.y).toFixed(1)}`).join(' '),
      class: 'series-line',
      fill: 'none',
    }),
  );
  const yTicks = [Math.min(...ys), Math.max(...ys)];
  for (const tick of yTicks) {
    const label = svgElement('text', {
      x: 4,
      y: sy(tick) + 4,
      class: 'tick-label',
    });
    label.textContent = tick.toFixed(1);
    svg.appendChild(label);
  }
  const captionEl = svgElement('text', {
    x: PAD.left,
    y: HEIGHT - 6,
    class: 'chart-caption',
  });
  captionEl.textContent = caption;
  svg.appendChild(captionEl);
  return svg;
}

interface Band {
  lo: number;
  hi: number;
  label: string;
  cls: string;
}

function collectBands(response: EvaluationResponse): Band[] {
  const bands: Band[] = [];
  const bounds = response.echo.bounds;
  const finite = (v: number | null) => v !== null && Number.isFinite(v);
  if (bounds && (finite(bounds.lower) || finite(bounds.upper))) {
    bands.push({
      lo: bounds.lower ?? Number.NEGATIVE_INFINITY,
      hi: bounds.upper ?? Number.POSITIVE_INFINITY,
      label: 'statement bounds',
      cls: 'band-statement',
    });
  }
  const discovered: [DiscoveredStatement | null, string, string][] = [
    [response.mss, 'most supported', 'band-mss'],
    [response.tightest, 'tightest', 'band-tightest'],
  ];
  for (const [found, label, cls] of discovered) {
    if (found) {
      bands.push({
        lo: found.lo,
        hi: found.hi,
        label: `${label} (support ${found.support.toFixed(3)})`,
        cls,
      });
    }
  }
  return bands;
}

/**
 * Difference-axis chart: every band comes straight from the response; the
 * optional histogram shows client-sampled differences from preview rows.
 */
export function renderDifferenceChart(
  response: EvaluationResponse,
  sampledDiffs: number[] | null,
): SVGSVGElement {
  const svg = svgElement('svg', {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: 'chart difference-chart',
    role: 'img',
  });
  const bands = collectBands(response);
  const finiteEdges = bands
    .flatMap((b) => [b.lo, b.hi])
    .concat(sampledDiffs ?? [])
    .filter((v) => Number.isFinite(v));
  if (finiteEdges.length === 0) return svg;

  let lo = Math.min(...finiteEdges);
  let hi = Math.max(...finiteEdges);
  const margin = (hi - lo || 1) * 0.08;
  lo -= margin;
  hi += margin;
  const sx = scale([lo, hi], [PAD.left, WIDTH - PAD.right]);
  const axisY = HEIGHT - PAD.bottom - 20;

  if (sampledDiffs && sampledDiffs.length > 0) {
    const binCount = 24;
    const step = (hi - lo) / binCount;
    const counts = new Array<number>(binCount).fill(0);
    for (const d of sampledDiffs) {
      const idx = Math.min(Math.floor((d - lo) / step), binCount - 1);
      if (idx >= 0) counts[idx]! += 1;
    }
    const peak = Math.max(...counts, 1);
    counts.forEach((count, i) => {
      if (count === 0) return;
      const barHeight = ((axisY - PAD.top) * count) / peak;
      svg.appendChild(
        svgElement('rect', {
          x: sx(lo + i * step),
          y: axisY - barHeight,
          width: Math.max((WIDTH - PAD.left - PAD.right) / binCount - 1, 1),
          height: barHeight,
          class: 'hist-bar',
        }),
      );
    });
  }

  svg.appendChild(
    svgElement('line', {
      x1: PAD.left,
      x2: WIDTH - PAD.right,
      y1: axisY,
      y2: axisY,
      class: 'axis-line',
    }),
  );
  for (const tick of [lo, (lo + hi) / 2, hi]) {
    const label = svgElement('text', { x: sx(tick), y: axisY + 14, class: 'tick-label' });
    label.textContent = tick.toFixed(2);
    svg.appendChild(label);
  }

  bands.forEach((band, i) => {
    const x1 = sx(Number.isFinite(band.lo) ? band.lo : lo);
    const x2 = sx(Number.isFinite(band.hi) ? band.hi : hi);
    const y = axisY - 16 - i * 18;
    svg.appendChild(
      svgElement('line', { x1, x2, y1: y, y2: y, class: `band-line ${band.cls}` }),
    );
    for (const x of [x1, x2]) {
      svg.appendChild(
        svgElement('line', { x1: x, x2: x, y1: y - 4, y2: y + 4, class: `band-line ${band.cls}` }),
      );
    }
    const text = svgElement('text', { x: Math.min(x1, x2), y: y - 6, class: 'band-label' });
    text.textContent = band.label;
    svg.appendChild(text);
  });

  return svg;
}
