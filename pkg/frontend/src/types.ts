// Wire types for the trade service JSON API.

export type TradeInsights = {
  parity: number;
  impact_a: number;
  impact_b: number;
  pain_a: number;
  pain_b: number;
  upside: number;
};

export type Trade = {
  fingerprint: string;
  team_a: string;
  team_b: string;
  a_receives: string[];
  b_receives: string[];
  compute_mode: string;
  pairing_angle: number;
  insights: TradeInsights;
};

export type TradesResponse = {
  requesting_team: string;
  trades: Trade[];
  rejections: { fingerprint: string; rule_id: string; line: string }[];
  modes_used: string[];
};

export type PersonalizationBody = {
  watchlist: string[];
  prefer_release: string[];
  untradables: string[];
  target_positions: string[];
  must_acquire: string[];
  must_release: string[];
  risk: number;
};

export type TradesRequest = {
  league: unknown;
  requesting_team: string;
  personalization?: PersonalizationBody;
  compute_modes?: string[];
  max_results?: number;
};

export type RatingBody = {
  fingerprint: string;
  side: "A" | "B";
  rating: number;
  rater_id: string;
  blinded_mode_label: string;
};

export type EvaluationReport = {
  rating_count: number;
  good_trade_accuracy: number | null;
  rating_distribution: Record<string, number>;
  pairwise_kappa: Record<string, number>;
  mean_kappa: number | null;
  uniqueness?: number | null;
};

export type LeagueDoc = {
  rules: { slot_rules: unknown[]; team_count: number; current_week: number };
  teams: { team_id: string; roster: string[] }[];
  players: { player_id: string; name: string; position: string }[];
};
