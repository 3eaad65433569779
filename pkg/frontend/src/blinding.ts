// Compute-mode blinding: a deterministic per-session shuffle of mode
// names behind neutral A/B/C labels. The mapping is fixed for the whole
// session so every card stays consistent, and revealed only after all
// ratings are in.

const LABELS = ["A", "B", "C", "D", "E", "F"] as const;

function fnv1a(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export class Blinding {
  readonly labelToMode: ReadonlyMap<string, string>;
  private readonly modeToLabel: Map<string, string>;

  constructor(modes: string[], sessionSeed: string) {
    const rng = mulberry32(fnv1a(sessionSeed));
    const shuffled = [...modes];
    for (let i = shuffled.length - 1; i > 0; i--) {
      const j = Math.floor(rng() * (i + 1));
      [shuffled[i], shuffled[j]] = [shuffled[j], shuffled[i]];
    }
    const pairs: [string, string][] = shuffled.map((mode, i) => [LABELS[i] ?? `M${i}`, mode]);
    this.labelToMode = new Map(pairs);
    this.modeToLabel = new Map(pairs.map(([label, mode]) => [mode, label]));
  }

  labelOf(mode: string): string {
    const label = this.modeToLabel.get(mode);
    if (label === undefined) {
      throw new Error(`mode not registered in this session`);
    }
    return label;
  }

  entries(): [string, string][] {
    return [...this.labelToMode.entries()].sort((a, b) => a[0].localeCompare(b[0]));
  }
}
