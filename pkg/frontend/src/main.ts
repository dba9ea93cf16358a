/**
 * Browser entry point: load or type a plat, apply moves one at a time,
 * watch the diagram and certificate panel, and optionally play a challenge
 * against a target plat.
 */

import { ApiClient, CertificateJson, PlatJson, PolynomialJson } from "./api.js";
import { Challenge, ChallengeStart } from "./challenge.js";
import { highlightCrossings, mountDiagram } from "./diagram.js";
import { mountPalette, paletteModel } from "./palette.js";
import { Session, SessionExport } from "./session.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function polyToString(p: PolynomialJson): string {
  const entries = Object.entries(p.terms).sort(([a], [b]) => Number(b) - Number(a));
  if (entries.length === 0) {
    return "0";
  }
  return entries
    .map(([exp, coeff], index) => {
      const e = Number(exp);
      const mag = Math.abs(coeff);
      const body =
        e === 0 ? `${mag}` : `${mag === 1 ? "" : mag}${p.var}${e === 1 ? "" : `^${e}`}`;
      const sign = coeff < 0 ? "− " : index === 0 ? "" : "+ ";
      return `${index === 0 && coeff < 0 ? "−" : sign}${body}`;
    })
    .join(" ");
}

function renderCertificate(panel: HTMLElement, cert: CertificateJson): void {
  panel.innerHTML = "";
  const rows: [string, string][] = [
    ["components", String(cert.components)],
    ["coset type", `[${cert.coset_type.join(", ")}]`],
    ["jones", polyToString(cert.jones)],
    ["alexander", polyToString(cert.alexander_normalized)],
  ];
  for (const [label, value] of rows) {
    const div = document.createElement("div");
    const name = document.createElement("strong");
    name.textContent = `${label}: `;
    div.appendChild(name);
    div.appendChild(document.createTextNode(value));
    panel.appendChild(div);
  }
}

async function boot(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const api = new ApiClient(params.get("service") ?? "http://127.0.0.1:8042");

  let session: Session | null = null;
  let challenge: Challenge | null = null;

  const wordInput = el<HTMLInputElement>("word-input");
  const strandsInput = el<HTMLInputElement>("strands-input");
  const status = el<HTMLDivElement>("status");
  const certPanel = el<HTMLDivElement>("certificate-panel");
  const targetCertPanel = el<HTMLDivElement>("target-certificate-panel");
  const diagram = el<HTMLDivElement>("diagram");
  const targetDiagram = el<HTMLDivElement>("target-diagram");
  const palette = el<HTMLDivElement>("palette");
  const wordDisplay = el<HTMLDivElement>("word-display");
  const progress = el<HTMLDivElement>("progress");

  const say = (message: string) => {
    status.textContent = message;
  };

  const refresh = async () => {
    if (!session) {
      return;
    }
    const plat = session.current();
    wordDisplay.textContent = `strands=${plat.strands}; ${plat.word.join(" ")}`;
    await mountDiagram(api, diagram, plat, {
      onCrossingClick: async (height) => {
        const model = await paletteModel(api, plat);
        const hit = model.rewrites.find((entry) => entry.highlights.includes(height));
        if (hit && session) {
          await session.apply(hit.move);
          await refresh();
        }
      },
    });
    renderCertificate(certPanel, await session.certificate());
    if (challenge) {
      const distance = await challenge.progress();
      progress.textContent = (await challenge.solved())
        ? "solved!"
        : `progress: reduced-word edit distance ${distance}`;
    }
  };

  el<HTMLButtonElement>("load-button").addEventListener("click", () => {
    void (async () => {
      try {
        const strands = Number(strandsInput.value);
        const word = wordInput.value.trim()
          ? wordInput.value.trim().split(/\s+/).map(Number)
          : [];
        const plat: PlatJson = { strands, word };
        await api.validate(plat);
        session = new Session(api, plat);
        challenge = null;
        await mountPalette(
          palette,
          session,
          () => void refresh(),
          (message) => say(`move failed: ${message}`),
        );
        await refresh();
        say("session started");
      } catch (err) {
        say(err instanceof Error ? err.message : String(err));
      }
    })();
  });

  el<HTMLButtonElement>("undo-button").addEventListener("click", () => {
    void session?.undo().then(() => refresh());
  });
  el<HTMLButtonElement>("redo-button").addEventListener("click", () => {
    void session?.redo().then(() => refresh());
  });

  el<HTMLButtonElement>("export-button").addEventListener("click", () => {
    if (!session) {
      return;
    }
    const blob = new Blob([JSON.stringify(session.export(), null, 2)], {
      type: "application/json",
    });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "plat-session.json";
    link.click();
  });

  el<HTMLInputElement>("import-input").addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) {
      return;
    }
    void file.text().then(async (text) => {
      const data = JSON.parse(text) as SessionExport;
      session = await Session.import(api, data);
      await mountPalette(
        palette,
        session,
        () => void refresh(),
        (message) => say(`move failed: ${message}`),
      );
      await refresh();
      say("session imported");
    });
  });

  el<HTMLButtonElement>("challenge-button").addEventListener("click", () => {
    void (async () => {
      if (!session) {
        say("start a session first");
        return;
      }
      const strands = Number(el<HTMLInputElement>("target-strands").value);
      const text = el<HTMLInputElement>("target-word").value.trim();
      const target: PlatJson = {
        strands,
        word: text ? text.split(/\s+/).map(Number) : [],
      };
      const started: ChallengeStart = await Challenge.start(api, session, target);
      if ("blocked" in started) {
        say(`challenge blocked: ${started.reason}`);
        challenge = null;
        return;
      }
      challenge = started;
      await mountDiagram(api, targetDiagram, target);
      renderCertificate(targetCertPanel, await api.invariants(target));
      say("challenge started");
      await refresh();
    })();
  });

  el<HTMLButtonElement>("hint-button").addEventListener("click", () => {
    void (async () => {
      if (!challenge || !session) {
        say("no active challenge");
        return;
      }
      const move = await challenge.hint();
      if (!move) {
        say("no hint available (rate limit, exhausted budget, or unsolved)");
        return;
      }
      await session.apply(move);
      await refresh();
      say(`hint applied: ${JSON.stringify(move)}`);
    })();
  });

  say("enter a plat and press load");
  void highlightCrossings; // exported for handlers; referenced to keep tsc honest
}

window.addEventListener("DOMContentLoaded", () => {
  void boot();
});
