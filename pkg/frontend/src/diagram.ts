/**
 * Diagram panel: fetches the service's SVG (the single renderer; the UI
 * never re-lays-out the diagram) and attaches interaction handlers to the
 * stable element ids (crossing-<k>, cup-<j>, cap-<j>).
 */

import { ApiClient, PlatJson } from "./api.js";

export interface DiagramHandlers {
  onCrossingClick?: (height: number) => void;
}

export async function mountDiagram(
  api: ApiClient,
  container: HTMLElement,
  plat: PlatJson,
  handlers: DiagramHandlers = {},
): Promise<void> {
  const svg = await api.renderSvg(plat);
  container.innerHTML = svg;
  if (!handlers.onCrossingClick) {
    return;
  }
  for (let height = 1; height <= plat.word.length; height++) {
    const node = container.querySelector(`#crossing-${height}`);
    if (node instanceof SVGElement || node instanceof HTMLElement) {
      node.addEventListener("click", () => handlers.onCrossingClick?.(height));
      node.setAttribute("cursor", "pointer");
    }
  }
}

/** Toggle a highlight class on crossing groups by height. */
export function highlightCrossings(container: HTMLElement, heights: number[]): void {
  container.querySelectorAll("[data-highlight]").forEach((el) => {
    el.removeAttribute("data-highlight");
    el.removeAttribute("stroke");
  });
  for (const height of heights) {
    const node = container.querySelector(`#crossing-${height}`);
    if (node) {
      node.setAttribute("data-highlight", "true");
      node.setAttribute("stroke", "#0b6fa4");
    }
  }
}
