"""Application configuration: one JSON file covering expert weights,
personalization multipliers, filter thresholds, and engine options."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .engine import EngineConfig, PersonalizationWeights
from .insights import FilterConfig, UpsideWeights
from .league import Position
from .valuation import SmeWeights, sme_weights_from_dict


@dataclass(frozen=True)
class AppConfig:
    sme_weights: SmeWeights = field(default_factory=SmeWeights)
    engine: EngineConfig = field(default_factory=EngineConfig)
    filters: FilterConfig = field(default_factory=FilterConfig)
    upside: UpsideWeights = field(default_factory=UpsideWeights)
    top_n: int = 400


def app_config_from_dict(doc: Mapping) -> AppConfig:
    personalization = PersonalizationWeights(
        watchlist_boost=float(doc.get("personalization", {}).get("watchlist_boost", 1.25)),
        release_discount=float(doc.get("personalization", {}).get("release_discount", 0.8)),
        position_boost=float(doc.get("personalization", {}).get("position_boost", 1.2)),
    )
    engine_doc = doc.get("engine", {})
    engine = EngineConfig(
        top_pairings=int(engine_doc.get("top_pairings", 3)),
        max_results=int(engine_doc.get("max_results", 10)),
        max_items=int(engine_doc.get("max_items", 3)),
        risk_multipliers=tuple(engine_doc.get("risk_multipliers", (1.0, 0.75, 0.5))),
        mode_order=tuple(engine_doc.get("mode_order", ("sme", "classical", "quantum"))),
        personalization=personalization,
    )
    filters_doc = doc.get("filters", {})
    filters = FilterConfig(
        max_parity=float(filters_doc.get("max_parity", 0.35)),
        max_pain=float(filters_doc.get("max_pain", 1.5)),
        max_count_diff=int(filters_doc.get("max_count_diff", 1)),
        min_upside=float(filters_doc.get("min_upside", 0.5)),
        best_player_gap=int(filters_doc.get("best_player_gap", 40)),
        swap_positions=frozenset(
            Position(p) for p in filters_doc.get("swap_positions", ["QB"])
        ),
        disabled=frozenset(filters_doc.get("disabled", [])),
    )
    upside_doc = doc.get("upside", {})
    upside = UpsideWeights(
        bias=float(upside_doc.get("bias", 1.5)),
        parity_coeff=float(upside_doc.get("parity_coeff", -6.0)),
        pain_coeff=float(upside_doc.get("pain_coeff", -0.8)),
        similarity_coeff=float(upside_doc.get("similarity_coeff", -0.6)),
        impact_coeff=float(upside_doc.get("impact_coeff", 1.2)),
    )
    return AppConfig(
        sme_weights=sme_weights_from_dict(doc.get("sme_weights", {})),
        engine=engine,
        filters=filters,
        upside=upside,
        top_n=int(doc.get("top_n", 400)),
    )


def load_app_config(path: str | None) -> AppConfig:
    if path is None:
        return AppConfig()
    with open(path, "r", encoding="utf-8") as fh:
        return app_config_from_dict(json.load(fh))
