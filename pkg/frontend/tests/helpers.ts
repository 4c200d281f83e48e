/**
 * Test utilities: spawn the real evaluation service over generated CSVs,
 * and small DOM-driving helpers for the scripted walkthrough.
 */

import { ChildProcess, execFileSync, spawn } from 'node:child_process';
import { mkdtempSync, rmSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

export interface RunningService {
  baseUrl: string;
  stop: () => void;
}

export async function startService(): Promise<RunningService> {
  const dir = mkdtempSync(join(tmpdir(), 'trendcheck-ui-'));
  execFileSync('python3', [
    '-c',
    'import sys; from trendcheck.sampledata import write_hourly_temperatures, write_toy_series;' +
      'write_hourly_temperatures(sys.argv[1] + "/temperature.csv");' +
      'write_toy_series(sys.argv[1] + "/toy.csv")',
    dir,
  ]);
  const port = 8400 + Math.floor(Math.random() * 2000);
  const proc: ChildProcess = spawn(
    'python3',
    ['-m', 'trendcheck.cli', 'serve', '--datasets', dir, '--port', String(port)],
    { stdio: 'ignore' },
  );
  const baseUrl = `http://127.0.0.1:${port}`;

  const deadline = Date.now() + 45_000;
  for (;;) {
    try {
      const response = await fetch(`${baseUrl}/api/datasets`);
      if (response.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      proc.kill();
      throw new Error('service did not come up in time');
    }
    await sleep(150);
  }

  return {
    baseUrl,
    stop: () => {
      proc.kill();
      rmSync(dir, { recursive: true, force: true });
    },
  };
}

export function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export async function waitFor(
  condition: () => boolean,
  label: string,
  timeoutMs = 30_000,
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!condition()) {
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${label}`);
    await sleep(25);
  }
}

export function setSelect(root: ParentNode, name: string, value: string): void {
  const select = root.querySelector<HTMLSelectElement>(`select[name="${name}"]`);
  if (!select) throw new Error(`no select named ${name}`);
  select.value = value;
  select.dispatchEvent(new Event('change', { bubbles: true }));
}

export function setInput(root: ParentNode, name: string, value: string): void {
  const input = root.querySelector<HTMLInputElement>(`input[name="${name}"]`);
  if (!input) throw new Error(`no input named ${name}`);
  input.value = value;
  input.dispatchEvent(new Event('input', { bubbles: true }));
}
