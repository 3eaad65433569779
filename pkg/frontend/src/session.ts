import { Blinding } from "./blinding.js";
import type { LeagueDoc, PersonalizationBody, Trade, TradesRequest } from "./types.js";

export const RISK_SLIDER_MIN = 5;
export const RISK_SLIDER_MAX = 100;

/** Map a 5..100 slider position to the risk scalar in (0, 1]. */
export function riskFromSlider(position: number): number {
  const clamped = Math.min(RISK_SLIDER_MAX, Math.max(RISK_SLIDER_MIN, Math.round(position)));
  return clamped / 100;
}

export type RatingDraft = {
  sideA: number | null;
  sideB: number | null;
  submitted: boolean;
  error: string | null;
};

/** One user's working state: selections, blinding, fetched trades, ratings. */
export class SessionState {
  league: LeagueDoc | null = null;
  teamId = "";
  raterId = "anon";
  risk = 1.0;
  watchlist = new Set<string>();
  preferRelease = new Set<string>();
  untradables = new Set<string>();
  targetPositions = new Set<string>();
  mustAcquire = new Set<string>();
  mustRelease = new Set<string>();
  trades: Trade[] = [];
  ratings = new Map<string, RatingDraft>();
  revealed = false;
  private blinding_: Blinding | null = null;
  readonly sessionId: string;

  constructor(sessionId?: string) {
    this.sessionId = sessionId ?? `session-${Date.now()}-${Math.floor(Math.random() * 1e6)}`;
  }

  setRiskFromSlider(position: number): void {
    this.risk = riskFromSlider(position);
  }

  get isPersonalized(): boolean {
    return (
      this.watchlist.size > 0 ||
      this.preferRelease.size > 0 ||
      this.untradables.size > 0 ||
      this.targetPositions.size > 0 ||
      this.mustAcquire.size > 0 ||
      this.mustRelease.size > 0
    );
  }

  personalization(): PersonalizationBody {
    return {
      watchlist: [...this.watchlist].sort(),
      prefer_release: [...this.preferRelease].sort(),
      untradables: [...this.untradables].sort(),
      target_positions: [...this.targetPositions].sort(),
      must_acquire: [...this.mustAcquire].sort(),
      must_release: [...this.mustRelease].sort(),
      risk: this.risk,
    };
  }

  buildRequestBody(): TradesRequest {
    if (this.league === null) {
      throw new Error("no league loaded");
    }
    return {
      league: this.league,
      requesting_team: this.teamId,
      personalization: this.personalization(),
    };
  }

  /** Blinding is created once per session and never reshuffled. */
  blinding(modes: string[]): Blinding {
    if (this.blinding_ === null) {
      this.blinding_ = new Blinding(modes, this.sessionId);
    }
    return this.blinding_;
  }

  setTrades(trades: Trade[]): void {
    this.trades = trades;
    this.ratings = new Map(
      trades.map((t) => [
        t.fingerprint,
        { sideA: null, sideB: null, submitted: false, error: null },
      ]),
    );
    this.revealed = false;
  }

  allSubmitted(): boolean {
    if (this.ratings.size === 0) {
      return false;
    }
    return [...this.ratings.values()].every((r) => r.submitted);
  }
}
