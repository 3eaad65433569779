"""HTTP trade service.

Valuation sheets load from disk into an immutable in-memory snapshot that
is swapped atomically on refresh, so concurrent trade requests never see
a half-loaded state.  Requests carry the league document; sheets supply
the market valuations.
"""

from __future__ import annotations

import os
import threading
import time
from dataclasses import dataclass, field
from typing import Mapping

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .config import AppConfig
from .engine import generate_trades, mode_context
from .evaluation import RatingStore, TradeRating, evaluation_report
from .league import League
from .schemas import (
    PersonalizationBody,
    RatingAck,
    RatingBody,
    TradesRequest,
    TradesResponse,
    TradeBody,
    RejectionBody,
)
from .sheets import ValuationSheet, load_sheet_dir, sheet_to_dict


@dataclass(frozen=True)
class Snapshot:
    sheets: Mapping[str, ValuationSheet]
    loaded_at: float


@dataclass
class ServedTradeLog:
    """Fingerprints served per compute mode, for the uniqueness report."""

    by_mode: dict[str, set[str]] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def record(self, mode: str, fingerprint: str) -> None:
        with self._lock:
            self.by_mode.setdefault(mode, set()).add(fingerprint)

    def snapshot(self) -> dict[str, set[str]]:
        with self._lock:
            return {mode: set(fps) for mode, fps in self.by_mode.items()}


class SnapshotStore:
    """Holds the current immutable snapshot; replacement is a single
    attribute assignment, atomic under the interpreter."""

    def __init__(self, sheets_dir: str):
        self.sheets_dir = sheets_dir
        self._snapshot = Snapshot(sheets={}, loaded_at=0.0)

    @property
    def snapshot(self) -> Snapshot:
        return self._snapshot

    def refresh(self) -> Snapshot:
        sheets = load_sheet_dir(self.sheets_dir)
        snap = Snapshot(sheets=sheets, loaded_at=time.time())
        self._snapshot = snap
        return snap


def _error(status: int, reason: str, detail=None) -> JSONResponse:
    body = {"error": reason}
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)


def create_app(
    sheets_dir: str,
    config: AppConfig | None = None,
    ratings_path: str | None = None,
    refresh_interval: float = 0.0,
) -> FastAPI:
    config = config or AppConfig()
    store = SnapshotStore(sheets_dir)
    store.refresh()
    ratings = RatingStore(ratings_path or os.path.join(sheets_dir, "ratings.jsonl"))
    served = ServedTradeLog()

    app = FastAPI(title="gridiron-trades", version="0.1.0")
    app.state.store = store
    app.state.ratings = ratings
    app.state.served = served

    # The web client is served from its own origin at desk scale.
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    if refresh_interval > 0:

        def _refresher() -> None:
            while True:
                time.sleep(refresh_interval)
                try:
                    store.refresh()
                except Exception:  # keep serving the old snapshot
                    pass

        threading.Thread(target=_refresher, daemon=True).start()

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        detail = [
            {"loc": [str(x) for x in err.get("loc", [])], "msg": err.get("msg", "")}
            for err in exc.errors()
        ]
        return _error(400, "validation_error", detail)

    @app.get("/v1/health")
    def health():
        snap = store.snapshot
        return {"status": "ok", "modes": sorted(snap.sheets), "loaded_at": snap.loaded_at}

    @app.get("/v1/valuations")
    def valuations(mode: str = Query(...)):
        snap = store.snapshot
        sheet = snap.sheets.get(mode)
        if sheet is None:
            return _error(404, "unknown_mode", f"no sheet for mode {mode!r}")
        return sheet_to_dict(sheet)

    @app.post("/v1/trades")
    def trades(body: TradesRequest):
        snap = store.snapshot
        league: League = body.league.to_league()

        team_ids = {t.team_id for t in league.teams}
        if body.requesting_team not in team_ids:
            return _error(404, "unknown_team", body.requesting_team)
        known = set(league.players)
        for team in league.teams:
            unknown = [pid for pid in team.roster if pid not in known]
            if unknown:
                return _error(404, "unknown_player", unknown)

        try:
            request = (body.personalization or PersonalizationBody()).to_request()
        except ValueError as exc:
            return _error(400, "invalid_personalization", str(exc))
        referenced = (
            request.watchlist
            | request.prefer_release
            | request.untradables
            | request.must_acquire
            | request.must_release
        )
        missing = sorted(referenced - known)
        if missing:
            return _error(404, "unknown_player", missing)

        modes = body.compute_modes or list(snap.sheets)
        unknown_modes = [m for m in modes if m not in snap.sheets]
        if unknown_modes:
            return _error(404, "unknown_mode", unknown_modes)

        contexts = [
            mode_context(league, mode, snap.sheets[mode].valuations(), snap.sheets[mode].range.sme_high)
            for mode in modes
        ]
        engine_config = config.engine
        if body.max_results is not None:
            from dataclasses import replace

            engine_config = replace(engine_config, max_results=body.max_results)
        try:
            survivors, rejections = generate_trades(
                league,
                body.requesting_team,
                request,
                contexts,
                engine_config,
                config.filters,
                config.upside,
            )
        except ValueError as exc:
            return _error(400, "invalid_request", str(exc))

        for trade in survivors:
            served.record(trade.compute_mode, trade.fingerprint)
        response = TradesResponse(
            requesting_team=body.requesting_team,
            trades=[TradeBody.from_package(t) for t in survivors],
            rejections=[
                RejectionBody(fingerprint=r.fingerprint, rule_id=r.rule_id, line=r.line)
                for r in rejections
            ],
            modes_used=modes,
        )
        return response

    @app.post("/v1/ratings")
    def post_rating(body: RatingBody):
        rating = TradeRating(
            fingerprint=body.fingerprint,
            rater_id=body.rater_id,
            side=body.side,
            rating=body.rating,
            blinded_mode_label=body.blinded_mode_label,
        )
        ratings.append(rating)
        return RatingAck(status="accepted", fingerprint=body.fingerprint)

    @app.get("/v1/reports/evaluation")
    def report():
        return evaluation_report(ratings.load(), served.snapshot())

    return app
