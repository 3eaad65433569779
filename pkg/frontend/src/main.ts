// Page bootstrap: league loading, personalization form, trade fetch,
// rating console.

import { ApiError, TradeServiceClient } from "./api.js";
import { renderInlineError, renderTradeList } from "./cards.js";
import { RatingConsole } from "./ratings.js";
import { RISK_SLIDER_MAX, RISK_SLIDER_MIN, SessionState } from "./session.js";
import type { LeagueDoc } from "./types.js";

const state = new SessionState();

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function parseIdList(value: string): Set<string> {
  return new Set(
    value
      .split(/[\s,]+/)
      .map((s) => s.trim())
      .filter((s) => s.length > 0),
  );
}

function populateTeams(league: LeagueDoc): void {
  const select = byId<HTMLSelectElement>("team-select");
  select.replaceChildren();
  for (const team of league.teams) {
    const option = document.createElement("option");
    option.value = team.team_id;
    option.textContent = team.team_id;
    select.appendChild(option);
  }
  state.teamId = select.value;
}

function nameOf(playerId: string): string {
  const player = state.league?.players.find((p) => p.player_id === playerId);
  return player ? `${player.name} (${player.position})` : playerId;
}

function readFormIntoState(): void {
  state.teamId = byId<HTMLSelectElement>("team-select").value;
  state.raterId = byId<HTMLInputElement>("rater-id").value || "anon";
  state.setRiskFromSlider(Number(byId<HTMLInputElement>("risk-slider").value));
  state.watchlist = parseIdList(byId<HTMLInputElement>("watchlist").value);
  state.preferRelease = parseIdList(byId<HTMLInputElement>("prefer-release").value);
  state.untradables = parseIdList(byId<HTMLInputElement>("untradables").value);
  state.mustAcquire = parseIdList(byId<HTMLInputElement>("must-acquire").value);
  state.mustRelease = parseIdList(byId<HTMLInputElement>("must-release").value);
  state.targetPositions = new Set(
    [...byId<HTMLSelectElement>("target-positions").selectedOptions].map((o) => o.value),
  );
}

async function fetchTrades(): Promise<void> {
  const listContainer = byId<HTMLElement>("trade-list");
  const revealContainer = byId<HTMLElement>("reveal");
  revealContainer.replaceChildren();
  readFormIntoState();
  if (state.league === null) {
    renderInlineError(listContainer, "Load a league file first.", () => void fetchTrades());
    return;
  }
  const client = new TradeServiceClient(byId<HTMLInputElement>("service-url").value);
  listContainer.replaceChildren(document.createTextNode("Fetching trades..."));
  try {
    const response = await client.requestTrades(state.buildRequestBody());
    state.setTrades(response.trades);
    const blinding = state.blinding(response.modes_used);
    renderTradeList(listContainer, response.trades, blinding, nameOf);
    new RatingConsole(
      listContainer,
      revealContainer,
      state,
      (rating) => client.submitRating(rating),
      blinding,
    ).attach();
  } catch (err) {
    const message =
      err instanceof ApiError ? `Service error: ${err.reason}` : `Request failed: ${String(err)}`;
    renderInlineError(listContainer, message, () => void fetchTrades());
  }
}

function init(): void {
  const slider = byId<HTMLInputElement>("risk-slider");
  slider.min = String(RISK_SLIDER_MIN);
  slider.max = String(RISK_SLIDER_MAX);
  const riskValue = byId<HTMLElement>("risk-value");
  slider.addEventListener("input", () => {
    state.setRiskFromSlider(Number(slider.value));
    riskValue.textContent = state.risk.toFixed(2);
  });

  byId<HTMLInputElement>("league-file").addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) {
      return;
    }
    void file.text().then((text) => {
      state.league = JSON.parse(text) as LeagueDoc;
      populateTeams(state.league);
    });
  });

  byId<HTMLButtonElement>("fetch-trades").addEventListener("click", () => void fetchTrades());
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  init();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", init);
}
