// UI/core parity: with empty personalization, the rendered trade list
// must match the CLI's output on the same fixture (same fingerprints,
// same order). Both fixtures were recorded from identical inputs.

import { describe, expect, it } from "vitest";

import { Blinding } from "../src/blinding";
import { renderTradeList } from "../src/cards";
import type { Trade, TradesResponse } from "../src/types";

import serviceFixture from "./fixtures/trades_response.json";
import cliFixture from "./fixtures/cli_trades.json";

const response = serviceFixture as unknown as TradesResponse;
const cliTrades = (cliFixture as { trades: { fingerprint: string }[] }).trades;

function renderAll(): HTMLElement {
  const container = document.createElement("section");
  document.body.replaceChildren(container);
  const blinding = new Blinding(response.modes_used, "parity-session");
  renderTradeList(container, response.trades, blinding, (id) => id);
  return container;
}

describe("trade explorer parity with the CLI", () => {
  it("renders the same fingerprints in the same order as the CLI output", () => {
    const container = renderAll();
    const rendered = [...container.querySelectorAll<HTMLElement>(".trade-card")].map(
      (card) => card.dataset.fingerprint,
    );
    expect(rendered).toEqual(cliTrades.map((t) => t.fingerprint));
    expect(rendered.length).toBeGreaterThan(0);
  });

  it("shows every insight badge plus the pairing angle on each card", () => {
    const container = renderAll();
    for (const card of container.querySelectorAll(".trade-card")) {
      for (const cls of ["parity", "pain-a", "pain-b", "impact-a", "impact-b", "upside", "angle"]) {
        expect(card.querySelector(`.badge.${cls}`), cls).not.toBeNull();
      }
      expect(card.querySelectorAll(".side").length).toBe(2);
      expect(card.querySelectorAll(".player").length).toBeGreaterThanOrEqual(2);
    }
  });

  it("re-rendering replaces the list instead of appending", () => {
    const container = renderAll();
    const blinding = new Blinding(response.modes_used, "parity-session");
    renderTradeList(container, response.trades.slice(0, 1) as Trade[], blinding, (id) => id);
    expect(container.querySelectorAll(".trade-card").length).toBe(1);
  });
});
