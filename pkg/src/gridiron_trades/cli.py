"""Command-line client: batch valuation, one-shot trade generation from
files, pairing inspection, evaluation reports, and the HTTP server."""

from __future__ import annotations

import json
import sys

import click

from .config import load_app_config
from .engine import generate_trades, mode_context
from .evaluation import RatingStore, evaluation_report
from .importance import diversity_report
from .league import load_league
from .pairing import rank_pairings, team_vector
from .schemas import PersonalizationBody
from .sheets import batch_valuate, load_sheet_dir, _round6
from .valuation import SmeWeights, load_profile, load_sme_weights


def _dump(payload) -> None:
    click.echo(json.dumps(_round6(payload), indent=2, sort_keys=True))


def _personalization(watchlist, prefer_release, untradable, positions, acquire, release, risk):
    body = PersonalizationBody(
        watchlist=sorted(watchlist),
        prefer_release=sorted(prefer_release),
        untradables=sorted(untradable),
        target_positions=sorted(positions),
        must_acquire=sorted(acquire),
        must_release=sorted(release),
        risk=risk,
    )
    return body.to_request()


@click.group()
def main() -> None:
    """Fantasy-football trade recommendation toolkit."""


@main.command()
@click.option("--league", "league_path", required=True, type=click.Path(exists=True))
@click.option("--profile", "profile_paths", multiple=True, type=click.Path(exists=True),
              help="Model importance profile JSON; repeatable.")
@click.option("--weights", "weights_path", type=click.Path(exists=True), default=None,
              help="Expert weights JSON (defaults built in).")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--top-n", default=400, show_default=True)
@click.option("--generated-at", default=None, help="Explicit snapshot stamp; defaults to a content digest.")
def valuate(league_path, profile_paths, weights_path, out_dir, top_n, generated_at):
    """Compute per-mode valuation sheets and write them to files."""
    league = load_league(league_path)
    weights = load_sme_weights(weights_path) if weights_path else SmeWeights()
    profiles = [load_profile(p) for p in profile_paths]
    sheets = batch_valuate(league, profiles, weights, top_n=top_n, out_dir=out_dir,
                           generated_at=generated_at)
    click.echo(f"wrote {len(sheets)} sheet(s) to {out_dir}: {', '.join(sorted(sheets))}")


@main.command()
@click.option("--league", "league_path", required=True, type=click.Path(exists=True))
@click.option("--sheets", "sheets_dir", required=True, type=click.Path(exists=True))
@click.option("--team", "team_id", required=True)
@click.option("--risk", default=1.0, show_default=True)
@click.option("--watchlist", multiple=True)
@click.option("--prefer-release", multiple=True)
@click.option("--untradable", multiple=True)
@click.option("--position", "positions", multiple=True, help="Target position, repeatable.")
@click.option("--acquire", multiple=True, help="Player that must be acquired.")
@click.option("--release", multiple=True, help="Player that must be released.")
@click.option("--mode", "modes", multiple=True, help="Compute mode; defaults to every available sheet.")
@click.option("--max-results", default=None, type=int)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def trade(league_path, sheets_dir, team_id, risk, watchlist, prefer_release, untradable,
          positions, acquire, release, modes, max_results, config_path):
    """One-shot trade generation from files; prints trades as JSON."""
    league = load_league(league_path)
    config = load_app_config(config_path)
    sheets = load_sheet_dir(sheets_dir)
    if not sheets:
        raise click.ClickException(f"no valuation sheets found in {sheets_dir}")
    use_modes = list(modes) if modes else sorted(sheets)
    unknown = [m for m in use_modes if m not in sheets]
    if unknown:
        raise click.ClickException(f"no sheet for mode(s): {', '.join(unknown)}")

    request = _personalization(watchlist, prefer_release, untradable, positions, acquire, release, risk)
    contexts = [
        mode_context(league, m, sheets[m].valuations(), sheets[m].range.sme_high)
        for m in use_modes
    ]
    engine_config = config.engine
    if max_results is not None:
        from dataclasses import replace

        engine_config = replace(engine_config, max_results=max_results)
    survivors, rejections = generate_trades(
        league, team_id, request, contexts, engine_config, config.filters, config.upside
    )
    _dump(
        {
            "requesting_team": team_id,
            "trades": [
                {
                    "fingerprint": t.fingerprint,
                    "team_a": t.team_a,
                    "team_b": t.team_b,
                    "a_receives": list(t.a_receives),
                    "b_receives": list(t.b_receives),
                    "compute_mode": t.compute_mode,
                    "pairing_angle": t.pairing_angle,
                    "insights": t.insights.as_dict(),
                }
                for t in survivors
            ],
            "rejections": [r.line for r in rejections],
        }
    )


@main.command()
@click.option("--league", "league_path", required=True, type=click.Path(exists=True))
@click.option("--sheets", "sheets_dir", required=True, type=click.Path(exists=True))
@click.option("--team", "team_id", required=True)
@click.option("--mode", default="sme", show_default=True)
def pair(league_path, sheets_dir, team_id, mode):
    """Print candidate trading partners ranked by dissimilarity angle."""
    league = load_league(league_path)
    sheets = load_sheet_dir(sheets_dir)
    if mode not in sheets:
        raise click.ClickException(f"no sheet for mode {mode!r} in {sheets_dir}")
    valuations = sheets[mode].valuations()
    vectors = {t.team_id: team_vector(t, league, valuations) for t in league.teams}
    pairings = rank_pairings(league.team(team_id), league.teams, vectors)
    _dump({"requesting_team": team_id, "mode": mode,
           "pairings": [{"team_id": tid, "angle": angle} for tid, angle in pairings]})


@main.command()
@click.option("--ratings", "ratings_path", type=click.Path(exists=True), default=None)
@click.option("--trades-by-mode", "trades_path", type=click.Path(exists=True), default=None,
              help="JSON {mode: [fingerprint, ...]} for the uniqueness metric.")
@click.option("--profile", "profile_paths", multiple=True, type=click.Path(exists=True))
@click.option("--sme-ranking", "sme_ranking_path", type=click.Path(exists=True), default=None,
              help="JSON array: expert feature ranking for diversity comparison.")
def report(ratings_path, trades_path, profile_paths, sme_ranking_path):
    """Evaluation metrics (accuracy, distribution, kappa, uniqueness) and
    the model diversity table."""
    payload = {}
    if ratings_path:
        trades_by_mode = None
        if trades_path:
            with open(trades_path, "r", encoding="utf-8") as fh:
                trades_by_mode = json.load(fh)
        payload["evaluation"] = evaluation_report(RatingStore(ratings_path).load(), trades_by_mode)
    if profile_paths:
        profiles = [load_profile(p) for p in profile_paths]
        sme_ranking = None
        if sme_ranking_path:
            with open(sme_ranking_path, "r", encoding="utf-8") as fh:
                sme_ranking = json.load(fh)
        payload["diversity"] = diversity_report(profiles, sme_ranking)
    if not payload:
        raise click.ClickException("nothing to report: pass --ratings and/or --profile")
    _dump(payload)


@main.command()
@click.option("--sheets", "sheets_dir", required=True, type=click.Path(exists=True),
              envvar="GRIDIRON_SHEETS_DIR")
@click.option("--port", default=8000, show_default=True, envvar="GRIDIRON_PORT")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None,
              envvar="GRIDIRON_CONFIG")
@click.option("--ratings", "ratings_path", type=click.Path(), default=None,
              envvar="GRIDIRON_RATINGS")
@click.option("--refresh-interval", default=0.0, show_default=True,
              help="Seconds between snapshot reloads; 0 disables.")
def serve(sheets_dir, port, host, config_path, ratings_path, refresh_interval):
    """Run the HTTP trade service."""
    import uvicorn

    from .service import create_app

    app = create_app(
        sheets_dir,
        config=load_app_config(config_path),
        ratings_path=ratings_path,
        refresh_interval=refresh_interval,
    )
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
