// Trade explorer: renders fetched trades as cards with insight badges.
// Compute modes are shown only as blinded session labels; the raw mode
// name never reaches the DOM here.

import { Blinding } from "./blinding.js";
import type { Trade } from "./types.js";

export type NameResolver = (playerId: string) => string;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function playerList(title: string, ids: string[], nameOf: NameResolver): HTMLElement {
  const wrap = el("div", "side");
  wrap.appendChild(el("h4", "side-title", title));
  const ul = el("ul", "players");
  for (const id of ids) {
    const li = el("li", "player", nameOf(id));
    li.dataset.playerId = id;
    ul.appendChild(li);
  }
  wrap.appendChild(ul);
  return wrap;
}

function badge(label: string, value: string, className = "badge"): HTMLElement {
  const node = el("span", className);
  node.appendChild(el("strong", "badge-label", label));
  node.appendChild(el("span", "badge-value", value));
  return node;
}

function ratingForm(fingerprint: string): HTMLElement {
  const form = el("div", "rating-form");
  form.dataset.fingerprint = fingerprint;
  for (const side of ["a", "b"] as const) {
    const field = el("label", "rating-field", `side ${side.toUpperCase()} `);
    const input = el("input", `rating-input side-${side}`);
    input.type = "number";
    input.min = "1";
    input.max = "10";
    input.step = "1";
    field.appendChild(input);
    form.appendChild(field);
  }
  const submit = el("button", "submit-rating", "Submit rating");
  submit.type = "button";
  form.appendChild(submit);
  const error = el("div", "rating-error");
  error.hidden = true;
  form.appendChild(error);
  const done = el("div", "rating-done", "rated ✓");
  done.hidden = true;
  form.appendChild(done);
  return form;
}

export function renderTradeCard(trade: Trade, blinding: Blinding, nameOf: NameResolver): HTMLElement {
  const card = el("article", "trade-card");
  card.dataset.fingerprint = trade.fingerprint;

  const header = el("header", "trade-header");
  header.appendChild(el("span", "teams", `${trade.team_a} ⇄ ${trade.team_b}`));
  const label = el("span", "blind-label", `model ${blinding.labelOf(trade.compute_mode)}`);
  header.appendChild(label);
  card.appendChild(header);

  const sides = el("div", "sides");
  sides.appendChild(playerList(`${trade.team_a} receives`, trade.a_receives, nameOf));
  sides.appendChild(playerList(`${trade.team_b} receives`, trade.b_receives, nameOf));
  card.appendChild(sides);

  const ins = trade.insights;
  const badges = el("div", "badges");
  badges.appendChild(badge("parity", ins.parity.toFixed(3), "badge parity"));
  badges.appendChild(badge("pain A", ins.pain_a.toFixed(2), "badge pain-a"));
  badges.appendChild(badge("pain B", ins.pain_b.toFixed(2), "badge pain-b"));
  badges.appendChild(badge("impact A", ins.impact_a.toFixed(2), "badge impact-a"));
  badges.appendChild(badge("impact B", ins.impact_b.toFixed(2), "badge impact-b"));
  badges.appendChild(badge("upside", `${(ins.upside * 100).toFixed(0)}%`, "badge upside"));
  badges.appendChild(badge("angle", `${trade.pairing_angle.toFixed(1)}°`, "badge angle"));
  card.appendChild(badges);

  card.appendChild(ratingForm(trade.fingerprint));
  return card;
}

/** Replace the container's content with one card per trade. */
export function renderTradeList(
  container: HTMLElement,
  trades: Trade[],
  blinding: Blinding,
  nameOf: NameResolver,
): void {
  container.replaceChildren();
  if (trades.length === 0) {
    container.appendChild(el("p", "empty", "No trades passed the filters. Adjust risk or personalization."));
    return;
  }
  for (const trade of trades) {
    container.appendChild(renderTradeCard(trade, blinding, nameOf));
  }
}

export function renderInlineError(container: HTMLElement, message: string, onRetry: () => void): void {
  container.replaceChildren();
  const box = el("div", "fetch-error");
  box.appendChild(el("p", "fetch-error-message", message));
  const retry = el("button", "retry", "Retry");
  retry.type = "button";
  retry.addEventListener("click", onRetry);
  box.appendChild(retry);
  container.appendChild(box);
}
