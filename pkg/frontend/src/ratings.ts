// Rating console: two 1-10 inputs per rendered trade, one per side.
// Submissions post to the service; failures re-queue with a visible
// error; once every trade is rated the session's label-to-mode mapping
// is revealed.

import { Blinding } from "./blinding.js";
import { SessionState } from "./session.js";
import type { RatingBody } from "./types.js";

export type SubmitFn = (rating: RatingBody) => Promise<void>;

function parseRating(input: HTMLInputElement): number | null {
  const value = Number(input.value);
  if (!Number.isInteger(value) || value < 1 || value > 10) {
    return null;
  }
  return value;
}

export function renderReveal(container: HTMLElement, blinding: Blinding): void {
  container.replaceChildren();
  const box = document.createElement("div");
  box.className = "reveal";
  const title = document.createElement("h3");
  title.textContent = "Session complete: computing modes revealed";
  box.appendChild(title);
  const list = document.createElement("ul");
  list.className = "reveal-mapping";
  for (const [label, mode] of blinding.entries()) {
    const li = document.createElement("li");
    li.className = "reveal-entry";
    li.dataset.label = label;
    li.dataset.mode = mode;
    li.textContent = `model ${label} = ${mode}`;
    list.appendChild(li);
  }
  box.appendChild(list);
  container.appendChild(box);
}

export class RatingConsole {
  constructor(
    private readonly listContainer: HTMLElement,
    private readonly revealContainer: HTMLElement,
    private readonly state: SessionState,
    private readonly submit: SubmitFn,
    private readonly blinding: Blinding,
  ) {}

  attach(): void {
    const forms = this.listContainer.querySelectorAll<HTMLElement>(".rating-form");
    forms.forEach((form) => {
      const button = form.querySelector<HTMLButtonElement>(".submit-rating");
      button?.addEventListener("click", () => {
        void this.handleSubmit(form);
      });
    });
  }

  private async handleSubmit(form: HTMLElement): Promise<void> {
    const fingerprint = form.dataset.fingerprint ?? "";
    const draft = this.state.ratings.get(fingerprint);
    if (draft === undefined || draft.submitted) {
      return;
    }
    const inputA = form.querySelector<HTMLInputElement>(".side-a");
    const inputB = form.querySelector<HTMLInputElement>(".side-b");
    const error = form.querySelector<HTMLElement>(".rating-error");
    const done = form.querySelector<HTMLElement>(".rating-done");
    if (!inputA || !inputB || !error || !done) {
      return;
    }

    const sideA = parseRating(inputA);
    const sideB = parseRating(inputB);
    if (sideA === null || sideB === null) {
      error.textContent = "Both sides need a whole-number rating from 1 to 10.";
      error.hidden = false;
      return;
    }
    draft.sideA = sideA;
    draft.sideB = sideB;

    const trade = this.state.trades.find((t) => t.fingerprint === fingerprint);
    const label = trade ? this.blinding.labelOf(trade.compute_mode) : "";
    try {
      await this.submit({
        fingerprint,
        side: "A",
        rating: sideA,
        rater_id: this.state.raterId,
        blinded_mode_label: label,
      });
      await this.submit({
        fingerprint,
        side: "B",
        rating: sideB,
        rater_id: this.state.raterId,
        blinded_mode_label: label,
      });
    } catch (err) {
      // Stays queued: the user can resubmit once the service recovers.
      draft.error = err instanceof Error ? err.message : String(err);
      error.textContent = `Submission failed (${draft.error}); try again.`;
      error.hidden = false;
      return;
    }

    draft.submitted = true;
    draft.error = null;
    error.hidden = true;
    done.hidden = false;
    inputA.disabled = true;
    inputB.disabled = true;
    form.querySelector<HTMLButtonElement>(".submit-rating")?.setAttribute("disabled", "true");

    if (this.state.allSubmitted() && !this.state.revealed) {
      this.state.revealed = true;
      renderReveal(this.revealContainer, this.blinding);
    }
  }
}
