/**
 * Thin typed client for the evaluation service.
 *
 * Everything the UI knows about the data comes through these three
 * endpoints; the client never computes a support value itself.
 */

import type { DatasetInfo, EvaluationRequest, EvaluationResponse, ServiceError } from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ServiceError,
  ) {
    super(payload.details?.map((d) => d.msg).join('; ') || payload.error);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl = '',
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  async listDatasets(): Promise<DatasetInfo[]> {
    const response = await this.fetchFn(`${this.baseUrl}/api/datasets`);
    if (!response.ok) throw new ApiError(response.status, await response.json());
    return response.json();
  }

  /** First `limit` raw CSV rows (header included) as text lines. */
  async preview(datasetId: string, limit = 100): Promise<string[]> {
    const response = await this.fetchFn(
      `${this.baseUrl}/api/datasets/${encodeURIComponent(datasetId)}/preview?limit=${limit}`,
    );
    if (!response.ok) throw new ApiError(response.status, await response.json());
    return (await response.text()).trimEnd().split('\n');
  }

  async evaluate(request: EvaluationRequest): Promise<EvaluationResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/evaluate`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(request),
    });
    if (!response.ok) throw new ApiError(response.status, await response.json());
    return response.json();
  }
}
