/**
 * Session state: the current plat, an undo/redo history of moves, and
 * service-validated replay.  Every move is applied by the service; the
 * session only records what was asked for, so replaying the history from
 * the initial plat must reproduce the current word exactly.
 */

import { ApiClient, PlatJson, CertificateJson, PocketStep } from "./api.js";

export type UiMove =
  | { kind: "hilden"; side: "top" | "bottom"; gen: string; inverse: boolean }
  | { kind: "rewrite"; rewriteKind: "commute" | "triangle" | "cancel"; pos: number }
  | { kind: "reduce" }
  | { kind: "stabilize"; sign: 1 | -1 }
  | { kind: "destabilize" }
  | { kind: "flip" }
  | { kind: "pocket"; side: "top" | "bottom"; bridge: number; path: PocketStep[] };

export interface SessionExport {
  initial: PlatJson;
  history: UiMove[];
}

export async function applyUiMove(api: ApiClient, plat: PlatJson, move: UiMove): Promise<PlatJson> {
  switch (move.kind) {
    case "hilden":
      return api.move(plat, move.side, move.gen, move.inverse);
    case "rewrite":
      return api.rewrite(plat, move.rewriteKind, move.pos);
    case "reduce":
      return api.rewrite(plat, "reduce");
    case "stabilize":
      return api.stabilize(plat, move.sign);
    case "destabilize": {
      const result = await api.destabilize(plat);
      if (!result.found || result.plat === null) {
        throw new Error("no syntactic destabilization available");
      }
      return result.plat;
    }
    case "flip":
      return api.flip(plat);
    case "pocket": {
      const result = await api.pocket(plat, move.side, move.bridge, move.path);
      return result.plat;
    }
  }
}

export class Session {
  private currentPlat: PlatJson;
  private undoStack: UiMove[] = [];
  private redoStack: UiMove[] = [];

  constructor(
    readonly api: ApiClient,
    readonly initial: PlatJson,
  ) {
    this.currentPlat = initial;
  }

  current(): PlatJson {
    return this.currentPlat;
  }

  history(): readonly UiMove[] {
    return this.undoStack;
  }

  canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  async apply(move: UiMove): Promise<PlatJson> {
    const next = await applyUiMove(this.api, this.currentPlat, move);
    this.undoStack.push(move);
    this.redoStack = [];
    this.currentPlat = next;
    return next;
  }

  /** Replay the whole history from the initial plat through the service. */
  async replayFromInitial(upTo?: number): Promise<PlatJson> {
    const end = upTo ?? this.undoStack.length;
    let plat = this.initial;
    for (const move of this.undoStack.slice(0, end)) {
      plat = await applyUiMove(this.api, plat, move);
    }
    return plat;
  }

  /** The session invariant: replayed history reproduces the current word. */
  async verifyReplay(): Promise<boolean> {
    const replayed = await this.replayFromInitial();
    return (
      replayed.strands === this.currentPlat.strands &&
      JSON.stringify(replayed.word) === JSON.stringify(this.currentPlat.word)
    );
  }

  /** Undo restores the prior word exactly, by replaying the shorter history. */
  async undo(): Promise<PlatJson | null> {
    const last = this.undoStack.pop();
    if (last === undefined) {
      return null;
    }
    this.redoStack.push(last);
    this.currentPlat = await this.replayFromInitial();
    return this.currentPlat;
  }

  async redo(): Promise<PlatJson | null> {
    const move = this.redoStack.pop();
    if (move === undefined) {
      return null;
    }
    this.currentPlat = await applyUiMove(this.api, this.currentPlat, move);
    this.undoStack.push(move);
    return this.currentPlat;
  }

  certificate(): Promise<CertificateJson> {
    return this.api.invariants(this.currentPlat);
  }

  export(): SessionExport {
    return { initial: this.initial, history: [...this.undoStack] };
  }

  static async import(api: ApiClient, data: SessionExport): Promise<Session> {
    const session = new Session(api, data.initial);
    for (const move of data.history) {
      await session.apply(move);
    }
    return session;
  }
}
