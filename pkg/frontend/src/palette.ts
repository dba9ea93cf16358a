/**
 * The move palette: catalog generators for the session's bridge count,
 * braid-rewrite hotspots for the current word, and the structural buttons.
 * The model is pure data (testable headless); rendering attaches it to the
 * DOM and routes clicks through the session.
 */

import { ApiClient, PlatJson, RewriteSite } from "./api.js";
import { Session, UiMove } from "./session.js";

export interface PaletteEntry {
  id: string;
  label: string;
  move: UiMove;
  /** crossing heights (1-based) this entry highlights on the diagram */
  highlights: number[];
}

export interface PaletteModel {
  catalog: PaletteEntry[];
  rewrites: PaletteEntry[];
  structural: PaletteEntry[];
}

export async function paletteModel(api: ApiClient, plat: PlatJson): Promise<PaletteModel> {
  const n = plat.strands / 2;
  const [gens, sites] = await Promise.all([api.generators(n), api.rewriteSites(plat)]);

  const catalog: PaletteEntry[] = [];
  for (const gen of gens.generators) {
    for (const side of ["bottom", "top"] as const) {
      for (const inverse of [false, true]) {
        catalog.push({
          id: `gen-${gen.name}-${side}${inverse ? "-inv" : ""}`,
          label: `${gen.name}${inverse ? "⁻¹" : ""} (${side})`,
          move: { kind: "hilden", side, gen: gen.name, inverse },
          highlights: [],
        });
      }
    }
  }

  const rewrites: PaletteEntry[] = sites.sites.map((site: RewriteSite) => ({
    id: `rewrite-${site.kind}-${site.pos}`,
    label: site.kind === "commute" ? `swap @${site.pos + 1}` : `triangle @${site.pos + 1}`,
    move: { kind: "rewrite", rewriteKind: site.kind, pos: site.pos },
    // a commute touches crossings pos+1, pos+2; a triangle pos+1..pos+3
    highlights:
      site.kind === "commute"
        ? [site.pos + 1, site.pos + 2]
        : [site.pos + 1, site.pos + 2, site.pos + 3],
  }));
  for (const pos of sites.cancel) {
    rewrites.push({
      id: `rewrite-cancel-${pos}`,
      label: `cancel @${pos + 1}`,
      move: { kind: "rewrite", rewriteKind: "cancel", pos },
      highlights: [pos + 1, pos + 2],
    });
  }

  const structural: PaletteEntry[] = [
    {
      id: "stabilize",
      label: "stabilize",
      move: { kind: "stabilize", sign: 1 },
      highlights: [],
    },
    {
      id: "destabilize",
      label: "destabilize",
      move: { kind: "destabilize" },
      highlights: [],
    },
    { id: "flip", label: "flip", move: { kind: "flip" }, highlights: [] },
    { id: "reduce", label: "free reduce", move: { kind: "reduce" }, highlights: [] },
  ];

  return { catalog, rewrites, structural };
}

export type MoveHandler = (move: UiMove) => void;

/** Render the palette into a container; every click issues one move. */
export function renderPalette(
  container: HTMLElement,
  model: PaletteModel,
  onMove: MoveHandler,
): void {
  container.textContent = "";
  const sections: [string, PaletteEntry[]][] = [
    ["Catalog moves", model.catalog],
    ["Rewrites", model.rewrites],
    ["Structure", model.structural],
  ];
  for (const [title, entries] of sections) {
    const heading = document.createElement("h3");
    heading.textContent = title;
    container.appendChild(heading);
    const group = document.createElement("div");
    group.className = "palette-group";
    for (const entry of entries) {
      const button = document.createElement("button");
      button.id = entry.id;
      button.textContent = entry.label;
      button.addEventListener("click", () => onMove(entry.move));
      group.appendChild(button);
    }
    container.appendChild(group);
  }
}

/** Wire a session to a palette container with re-rendering after each move. */
export async function mountPalette(
  container: HTMLElement,
  session: Session,
  onMoved: (plat: PlatJson) => void,
  onError: (message: string) => void,
): Promise<void> {
  const refresh = async () => {
    const model = await paletteModel(session.api, session.current());
    renderPalette(container, model, (move) => {
      session
        .apply(move)
        .then((plat) => {
          onMoved(plat);
          void refresh();
        })
        .catch((err: unknown) => onError(err instanceof Error ? err.message : String(err)));
    });
  };
  await refresh();
}
