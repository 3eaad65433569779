"""Batch valuation snapshots, one JSON file per compute mode.

The expert (sme) pipeline runs first and its day's min/max define the
common valuation range; each model-backed mode is normalized into that
range.  Output files are deterministic: entries sorted by valuation then
player id, floats rounded to six decimals, and the generation stamp
derived from the content itself unless a timestamp is supplied.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from typing import Mapping, Sequence

from .cost import CostBreakdown, player_cost, roster_position_ranks
from .features import (
    build_position_pools,
    compute_tier_scores,
    extract_features,
    positional_ranks,
)
from .importance import DiversityTriple, ensemble_weights, importance_variance, rank_diff_pct
from .league import League
from .valuation import (
    ModelImportanceProfile,
    SmeWeights,
    ValuationRange,
    apply_state_and_equivalence,
    boom_ratio,
    bust_ratio,
    model_raw_valuation,
    momentum_blend,
    normalize_to_sme_range,
    sme_raw_valuation,
)

logger = logging.getLogger(__name__)

COMPUTE_MODES = ("sme", "classical", "quantum")


@dataclass(frozen=True)
class SheetEntry:
    player_id: str
    valuation: float
    cost: CostBreakdown | None
    boom: float
    bust: float
    percent_owned: float
    opponent_rank: int
    games_left: int
    season_actual: float
    season_projection: float


@dataclass(frozen=True)
class ValuationSheet:
    compute_mode: str
    generated_at: str
    range: ValuationRange
    entries: tuple[SheetEntry, ...]

    def valuations(self) -> dict[str, float]:
        return {e.player_id: e.valuation for e in self.entries}


def _round6(value):
    if isinstance(value, float):
        return float(f"{value:.6f}")
    if isinstance(value, dict):
        return {k: _round6(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round6(v) for v in value]
    return value


def sheet_to_dict(sheet: ValuationSheet) -> dict:
    return _round6(
        {
            "compute_mode": sheet.compute_mode,
            "generated_at": sheet.generated_at,
            "range": {
                "sme_low": sheet.range.sme_low,
                "sme_high": sheet.range.sme_high,
                "mode_low": sheet.range.mode_low,
                "mode_high": sheet.range.mode_high,
            },
            "entries": [
                {
                    "player_id": e.player_id,
                    "valuation": e.valuation,
                    "cost": e.cost.as_dict() if e.cost is not None else None,
                    "boom": e.boom,
                    "bust": e.bust,
                    "percent_owned": e.percent_owned,
                    "opponent_rank": e.opponent_rank,
                    "games_left": e.games_left,
                    "season_actual": e.season_actual,
                    "season_projection": e.season_projection,
                }
                for e in sheet.entries
            ],
        }
    )


def sheet_from_dict(doc: Mapping) -> ValuationSheet:
    rng = doc["range"]
    entries = []
    for e in doc["entries"]:
        cost = None
        if e.get("cost") is not None:
            c = e["cost"]
            cost = CostBreakdown(
                position_importance_term=c["position_importance_term"],
                all_roster_projection_term=c["all_roster_projection_term"],
                position_projection_term=c["position_projection_term"],
                rank_term=c["rank_term"],
                pre_pc=c["pre_pc"],
                norm_pcost=c["norm_pcost"],
            )
        entries.append(
            SheetEntry(
                player_id=e["player_id"],
                valuation=float(e["valuation"]),
                cost=cost,
                boom=float(e["boom"]),
                bust=float(e["bust"]),
                percent_owned=float(e["percent_owned"]),
                opponent_rank=int(e["opponent_rank"]),
                games_left=int(e["games_left"]),
                season_actual=float(e["season_actual"]),
                season_projection=float(e["season_projection"]),
            )
        )
    return ValuationSheet(
        compute_mode=doc["compute_mode"],
        generated_at=doc["generated_at"],
        range=ValuationRange(
            sme_low=float(rng["sme_low"]),
            sme_high=float(rng["sme_high"]),
            mode_low=float(rng["mode_low"]),
            mode_high=float(rng["mode_high"]),
        ),
        entries=tuple(entries),
    )


def write_sheet(sheet: ValuationSheet, path: str) -> None:
    doc = sheet_to_dict(sheet)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_sheet(path: str) -> ValuationSheet:
    with open(path, "r", encoding="utf-8") as fh:
        return sheet_from_dict(json.load(fh))


def sheet_filename(mode: str) -> str:
    return f"valuations_{mode}.json"


def load_sheet_dir(directory: str) -> dict[str, ValuationSheet]:
    sheets: dict[str, ValuationSheet] = {}
    for mode in COMPUTE_MODES:
        path = os.path.join(directory, sheet_filename(mode))
        if os.path.exists(path):
            sheets[mode] = load_sheet(path)
    return sheets


# ----------------------------------------------------------------------
# Valuation pipelines
# ----------------------------------------------------------------------

def sme_valuations(league: League, weights: SmeWeights) -> dict[str, float]:
    """Expert pipeline: tier combination, state and equivalence
    adjustments, then prior-season momentum."""
    players = sorted(league.players.values(), key=lambda p: p.player_id)
    pools = build_position_pools(players)
    tiers = compute_tier_scores(players, pools)
    ranks = positional_ranks(players)
    week = league.rules.current_week
    out: dict[str, float] = {}
    for p in players:
        raw = sme_raw_valuation(tiers[p.player_id], week, weights)
        adjusted = apply_state_and_equivalence(raw, p, weights, position_rank=ranks[p.player_id])
        out[p.player_id] = momentum_blend(adjusted, p.avg_points_prev, week)
    return out


def _combined_importances(profiles: Sequence[ModelImportanceProfile]) -> Mapping[str, float]:
    """One importance map per mode; multiple profiles ensemble together.

    Each profile's rank diversity is measured against the other supplied
    profiles, its variance over its own normalized importances.
    """
    if len(profiles) == 1:
        return profiles[0].importances
    models = []
    for profile in profiles:
        others = [q for q in profiles if q.model_id != profile.model_id]
        diffs = []
        for other in others:
            if sorted(other.rank_order) == sorted(profile.rank_order):
                diffs.append(rank_diff_pct(profile.rank_order, other.rank_order))
        ard = sum(diffs) / len(diffs) if diffs else 0.0
        total = sum(profile.importances.values())
        normalized = [w / total for w in profile.importances.values()] if total > 0 else []
        variance = importance_variance(normalized) if normalized else 0.0
        models.append((profile.importances, DiversityTriple(profile.accuracy, ard, variance)))
    return ensemble_weights(models)


def model_valuations(
    league: League,
    profiles: Sequence[ModelImportanceProfile],
    weights: SmeWeights,
    sme_range: tuple[float, float],
) -> tuple[dict[str, float], ValuationRange]:
    """Importance-weighted pipeline for one mode, normalized into the
    expert range.  Returns the valuations and the range used, whose mode
    bounds are the observed raw extremes."""
    players = sorted(league.players.values(), key=lambda p: p.player_id)
    pools = build_position_pools(players)
    importances = _combined_importances(profiles)
    profile = ModelImportanceProfile(
        model_id="+".join(sorted(p.model_id for p in profiles)),
        compute_mode=profiles[0].compute_mode,
        accuracy=max(p.accuracy for p in profiles),
        importances=importances,
        rank_order=tuple(sorted(importances, key=lambda f: (-importances[f], f))),
    )
    raws: dict[str, float] = {}
    for p in players:
        features = extract_features(p, pools[p.position])
        raws[p.player_id] = model_raw_valuation(features, profile, p, weights)
    lo, hi = min(raws.values()), max(raws.values())
    rng = ValuationRange(sme_low=sme_range[0], sme_high=sme_range[1], mode_low=lo, mode_high=hi)
    return {pid: normalize_to_sme_range(x, rng) for pid, x in raws.items()}, rng


def _build_sheet(
    league: League,
    mode: str,
    valuations: Mapping[str, float],
    rng: ValuationRange,
    top_n: int,
    generated_at: str | None,
) -> ValuationSheet:
    players = sorted(league.players.values(), key=lambda p: p.player_id)
    pools = build_position_pools(players)

    costs: dict[str, CostBreakdown] = {}
    for team in league.teams:
        roster = league.roster_players(team)
        ranks = roster_position_ranks(roster, valuations)
        for p in roster:
            costs[p.player_id] = player_cost(p, roster, league.rules, ranks)

    ordered = sorted(players, key=lambda p: (-valuations[p.player_id], p.player_id))[:top_n]
    entries = []
    for p in ordered:
        pool = pools[p.position]
        boom = bust = 0.0
        if pool.log_scores and p.game_log:
            boom = boom_ratio(p.game_log, pool.log_scores)
            bust = bust_ratio(p.game_log, pool.log_scores)
        entries.append(
            SheetEntry(
                player_id=p.player_id,
                valuation=valuations[p.player_id],
                cost=costs.get(p.player_id),
                boom=boom,
                bust=bust,
                percent_owned=p.percent_owned,
                opponent_rank=p.opponent_rank,
                games_left=p.games_left,
                season_actual=p.season_actual,
                season_projection=p.season_projection,
            )
        )
    sheet = ValuationSheet(
        compute_mode=mode,
        generated_at=generated_at or "",
        range=rng,
        entries=tuple(entries),
    )
    if generated_at is None:
        digest = hashlib.sha256(
            json.dumps(sheet_to_dict(sheet), sort_keys=True).encode("utf-8")
        ).hexdigest()[:16]
        sheet = ValuationSheet(
            compute_mode=mode,
            generated_at=f"snapshot-{digest}",
            range=rng,
            entries=sheet.entries,
        )
    return sheet


def batch_valuate(
    league: League,
    profiles: Sequence[ModelImportanceProfile],
    weights: SmeWeights,
    top_n: int = 400,
    out_dir: str | None = None,
    generated_at: str | None = None,
) -> dict[str, ValuationSheet]:
    """Produce one sheet per compute mode and optionally write them.

    Modes without an importance profile are skipped with a warning; the
    expert mode always runs.  Identical inputs yield byte-identical files.
    """
    sme_vals = sme_valuations(league, weights)
    lo, hi = min(sme_vals.values()), max(sme_vals.values())
    sme_range = ValuationRange(sme_low=lo, sme_high=hi, mode_low=lo, mode_high=hi)

    sheets: dict[str, ValuationSheet] = {
        "sme": _build_sheet(league, "sme", sme_vals, sme_range, top_n, generated_at)
    }
    for mode in ("classical", "quantum"):
        mode_profiles = sorted(
            (p for p in profiles if p.compute_mode == mode), key=lambda p: p.model_id
        )
        if not mode_profiles:
            logger.warning("no importance profile for mode %s; skipping", mode)
            continue
        vals, rng = model_valuations(league, mode_profiles, weights, (lo, hi))
        sheets[mode] = _build_sheet(league, mode, vals, rng, top_n, generated_at)

    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        for mode, sheet in sheets.items():
            write_sheet(sheet, os.path.join(out_dir, sheet_filename(mode)))
    return sheets
