/**
 * Challenge mode: transform the session's plat into a target plat by hand.
 *
 * Starting a challenge compares invariants first; provably different link
 * types are blocked with the service's explanation.  Progress is estimated
 * by the edit distance between the service-reduced words, success is
 * detected when the reduced words coincide, and the hint button runs a
 * short server-side search job and reveals the first move of a found trace.
 */

import { ApiClient, BudgetJson, PlatJson, SearchResult, ServiceMove, certificatesEqual } from "./api.js";
import { Session, UiMove } from "./session.js";

export interface ChallengeBlocked {
  blocked: true;
  reason: string;
}

export interface ChallengeNeedsStabilization {
  blocked: true;
  reason: string;
  needsStabilization: true;
  sessionStrands: number;
  targetStrands: number;
}

export type ChallengeStart = Challenge | ChallengeBlocked | ChallengeNeedsStabilization;

/** Levenshtein distance between two letter sequences (a UI affordance over
 * service-provided reduced words, not a topology computation). */
export function editDistance(a: readonly number[], b: readonly number[]): number {
  const rows = a.length + 1;
  const cols = b.length + 1;
  let prev = Array.from({ length: cols }, (_, j) => j);
  for (let i = 1; i < rows; i++) {
    const row = new Array<number>(cols);
    row[0] = i;
    for (let j = 1; j < cols; j++) {
      const substitution = (prev[j - 1] ?? 0) + (a[i - 1] === b[j - 1] ? 0 : 1);
      row[j] = Math.min((prev[j] ?? 0) + 1, (row[j - 1] ?? 0) + 1, substitution);
    }
    prev = row;
  }
  return prev[cols - 1] ?? 0;
}

const HINT_BUDGET: BudgetJson = { max_nodes: 20_000, max_seconds: 5 };
const HINT_COOLDOWN_MS = 2_000;

export class Challenge {
  private lastHintAt = 0;

  private constructor(
    readonly session: Session,
    readonly target: PlatJson,
  ) {}

  static async start(api: ApiClient, session: Session, target: PlatJson): Promise<ChallengeStart> {
    const current = session.current();
    if (current.strands !== target.strands) {
      return {
        blocked: true,
        needsStabilization: true,
        reason:
          `strand counts differ (${current.strands} vs ${target.strands}); ` +
          "stabilize the smaller plat to continue",
        sessionStrands: current.strands,
        targetStrands: target.strands,
      };
    }
    const [certCurrent, certTarget] = await Promise.all([
      api.invariants(current),
      api.invariants(target),
    ]);
    if (!certificatesEqual(certCurrent, certTarget)) {
      const result = await api.equivalence(current, target, { max_nodes: 1 });
      const reason =
        result.result === "distinct"
          ? result.reason
          : "certificates differ: the plats are provably different link types";
      return { blocked: true, reason };
    }
    return new Challenge(session, target);
  }

  /** Edit distance between the reduced current and target words. */
  async progress(): Promise<number> {
    const api = this.session.api;
    const [current, target] = await Promise.all([
      api.validate(this.session.current()),
      api.validate(this.target),
    ]);
    return editDistance(current.reduced_word, target.reduced_word);
  }

  /** Solved when the current word free-reduces to the target's. */
  async solved(): Promise<boolean> {
    return (await this.progress()) === 0;
  }

  /**
   * Run a short, budget-capped server-side search and reveal the first
   * move of a found trace.  Rate-limited to keep the activity human-driven.
   */
  async hint(now: () => number = Date.now): Promise<UiMove | null> {
    const at = now();
    if (at - this.lastHintAt < HINT_COOLDOWN_MS) {
      return null;
    }
    this.lastHintAt = at;
    const api = this.session.api;
    const handle = await api.equivalenceJob(this.session.current(), this.target, HINT_BUDGET);
    const status = await api.pollJob(handle.job_id);
    if (status.state !== "found" || !status.result) {
      return null;
    }
    const result = status.result as unknown as SearchResult;
    if (result.result !== "found" || result.trace.moves.length === 0) {
      return null;
    }
    const first = result.trace.moves[0];
    return first === undefined ? null : serviceMoveToUiMove(first);
  }
}

export function serviceMoveToUiMove(move: ServiceMove): UiMove | null {
  const payload = move.payload;
  switch (move.kind) {
    case "hilden-left":
      return {
        kind: "hilden",
        side: "bottom",
        gen: String(payload.gen),
        inverse: Boolean(payload.inverse),
      };
    case "hilden-right":
      return {
        kind: "hilden",
        side: "top",
        gen: String(payload.gen),
        inverse: Boolean(payload.inverse),
      };
    case "braid-relation": {
      const rule = String(payload.rule);
      if (rule !== "commute" && rule !== "triangle") {
        return null;
      }
      return { kind: "rewrite", rewriteKind: rule, pos: Number(payload.pos) };
    }
    case "free-delete":
      return { kind: "rewrite", rewriteKind: "cancel", pos: Number(payload.pos) };
    case "free-insert":
      return null; // never produced by searches over reduced words
    default:
      return null;
  }
}
