import type { EvaluationReport, RatingBody, TradesRequest, TradesResponse } from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly reason: string;

  constructor(status: number, reason: string, detail?: unknown) {
    super(detail ? `${reason}: ${JSON.stringify(detail)}` : reason);
    this.status = status;
    this.reason = reason;
  }
}

async function parseError(resp: Response): Promise<ApiError> {
  try {
    const body = (await resp.json()) as { error?: string; detail?: unknown };
    return new ApiError(resp.status, body.error ?? `http_${resp.status}`, body.detail);
  } catch {
    return new ApiError(resp.status, `http_${resp.status}`);
  }
}

export class TradeServiceClient {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async requestTrades(body: TradesRequest): Promise<TradesResponse> {
    const resp = await fetch(this.url("/v1/trades"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      throw await parseError(resp);
    }
    return (await resp.json()) as TradesResponse;
  }

  async submitRating(rating: RatingBody): Promise<void> {
    const resp = await fetch(this.url("/v1/ratings"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(rating),
    });
    if (!resp.ok) {
      throw await parseError(resp);
    }
  }

  async evaluationReport(): Promise<EvaluationReport> {
    const resp = await fetch(this.url("/v1/reports/evaluation"));
    if (!resp.ok) {
      throw await parseError(resp);
    }
    return (await resp.json()) as EvaluationReport;
  }
}
