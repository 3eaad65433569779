"""Fantasy-football trade recommendation engine.

Values players under several computing modes, pairs complementary teams by
cosine dissimilarity, generates trade packages with a cardinality-capped
0-1 knapsack, scores trades for fairness, and serves results through a
batch job, an HTTP service, and a CLI.
"""

__version__ = "0.1.0"

from .league import (
    LeagueRules,
    Position,
    PlayerRecord,
    PlayerStatus,
    SlotRule,
    Team,
    starters_fillable,
    validate_league,
)
from .valuation import (
    ModelImportanceProfile,
    SmeWeights,
    TierScores,
    ValuationRange,
    boom_ratio,
    bust_ratio,
    model_valuation,
    momentum_blend,
    normalize_to_sme_range,
    projection_valuation,
    roster_adjustments,
    sme_raw_valuation,
)
from .engine import PersonalizationRequest, TradePackage, generate_trades, knapsack_01
from .insights import FilterConfig, UpsideWeights, filter_trades
from .sheets import ValuationSheet, batch_valuate

__all__ = [
    "LeagueRules",
    "Position",
    "PlayerRecord",
    "PlayerStatus",
    "SlotRule",
    "Team",
    "starters_fillable",
    "validate_league",
    "ModelImportanceProfile",
    "SmeWeights",
    "TierScores",
    "ValuationRange",
    "boom_ratio",
    "bust_ratio",
    "model_valuation",
    "momentum_blend",
    "normalize_to_sme_range",
    "projection_valuation",
    "roster_adjustments",
    "sme_raw_valuation",
    "PersonalizationRequest",
    "TradePackage",
    "generate_trades",
    "knapsack_01",
    "FilterConfig",
    "UpsideWeights",
    "filter_trades",
    "ValuationSheet",
    "batch_valuate",
]
