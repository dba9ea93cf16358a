/**
 * Typed client for the platkit HTTP service.
 *
 * Every operation the UI performs goes through this client; the UI itself
 * never computes topology.  Errors from the service ({"error": {code,
 * message}}) surface as ApiError.
 */

export interface PlatJson {
  strands: number;
  word: number[];
  convention?: string;
}

export interface PolynomialJson {
  var: string;
  terms: Record<string, number>;
}

export interface CertificateJson {
  components: number;
  coset_type: number[];
  jones: PolynomialJson;
  alexander_normalized: PolynomialJson;
}

export interface ValidateResponse {
  ok: boolean;
  strands: number;
  bridges: number;
  components: number;
  writhe: number;
  word_length: number;
  reduced_word: number[];
}

export interface GeneratorJson {
  name: string;
  word: PlatJson;
}

export interface RewriteSite {
  kind: "commute" | "triangle";
  pos: number;
}

export interface RewriteSitesResponse {
  sites: RewriteSite[];
  cancel: number[];
}

export interface PocketStep {
  direction: "left" | "right";
  layer: "over" | "under";
}

export interface TraceStep {
  gen: string;
  inverse: boolean;
  side: "top" | "bottom";
}

export interface ServiceMove {
  kind: string;
  payload: Record<string, unknown>;
}

export interface TraceJson {
  start: PlatJson;
  moves: ServiceMove[];
  end: PlatJson;
}

export type SearchResult =
  | { result: "found"; moves: number; trace: TraceJson }
  | { result: "distinct"; reason: string }
  | { result: "exhausted"; nodes_expanded: number; reason: string };

export interface BudgetJson {
  max_nodes?: number;
  max_word_length?: number;
  max_seconds?: number;
}

export interface JobHandle {
  job_id: string;
  state: string;
}

export interface JobStatus {
  id: string;
  kind: string;
  state: string;
  result?: Record<string, unknown>;
  error?: string;
}

export interface CorpusEntryJson {
  name: string;
  note: string;
  plat: PlatJson;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let code = "unknown";
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { error?: { code?: string; message?: string } };
    if (body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>("POST", path, body);
  }

  validate(plat: PlatJson): Promise<ValidateResponse> {
    return this.post("/plat/validate", { plat });
  }

  invariants(plat: PlatJson): Promise<CertificateJson> {
    return this.post("/plat/invariants", { plat });
  }

  move(plat: PlatJson, side: "top" | "bottom", gen: string, inverse: boolean): Promise<PlatJson> {
    return this.post("/plat/move", { plat, side, gen, inverse });
  }

  stabilize(plat: PlatJson, sign: 1 | -1 = 1): Promise<PlatJson> {
    return this.post("/plat/stabilize", { plat, sign });
  }

  destabilize(plat: PlatJson): Promise<{ found: boolean; plat: PlatJson | null }> {
    return this.post("/plat/destabilize", { plat });
  }

  flip(plat: PlatJson): Promise<PlatJson> {
    return this.post("/plat/flip", { plat });
  }

  pocket(
    plat: PlatJson,
    side: "top" | "bottom",
    bridge: number,
    path: PocketStep[],
  ): Promise<{ plat: PlatJson; trace: TraceStep[] }> {
    return this.post("/plat/pocket", { plat, side, bridge, path });
  }

  rewriteSites(plat: PlatJson): Promise<RewriteSitesResponse> {
    return this.post("/plat/rewrite-sites", { plat });
  }

  rewrite(
    plat: PlatJson,
    kind: "commute" | "triangle" | "cancel" | "reduce",
    pos?: number,
  ): Promise<PlatJson> {
    return this.post("/plat/rewrite", { plat, kind, pos });
  }

  async renderSvg(plat: PlatJson, spec?: Record<string, unknown>): Promise<string> {
    const response = await fetch(this.baseUrl + "/plat/render", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ plat, spec }),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return await response.text();
  }

  generators(n: number): Promise<{ n: number; generators: GeneratorJson[] }> {
    return this.request("GET", `/hilden/generators?n=${n}`);
  }

  corpus(): Promise<{ entries: CorpusEntryJson[] }> {
    return this.request("GET", "/corpus");
  }

  equivalence(plat1: PlatJson, plat2: PlatJson, budget?: BudgetJson): Promise<SearchResult> {
    return this.post("/search/equivalence", { plat1, plat2, budget });
  }

  equivalenceJob(plat1: PlatJson, plat2: PlatJson, budget?: BudgetJson): Promise<JobHandle> {
    return this.post("/search/equivalence", { plat1, plat2, budget, async: true });
  }

  jobStatus(jobId: string): Promise<JobStatus> {
    return this.request("GET", `/search/jobs/${jobId}`);
  }

  /** Poll a job until it leaves the running state. */
  async pollJob(jobId: string, intervalMs = 150, timeoutMs = 60_000): Promise<JobStatus> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const status = await this.jobStatus(jobId);
      if (status.state !== "running") {
        return status;
      }
      if (Date.now() > deadline) {
        throw new ApiError(0, "timeout", `job ${jobId} still running after ${timeoutMs}ms`);
      }
      await new Promise((resolve) => setTimeout(resolve, intervalMs));
    }
  }

  explore(plat: PlatJson, maxLevel: number, budget?: BudgetJson): Promise<Record<string, unknown>> {
    return this.post("/graph/explore", { plat, max_level: maxLevel, budget });
  }
}

/** Exact equality of certificates as JSON values (the service emits
 * canonical structures, so deep equality is the right comparison). */
export function certificatesEqual(a: CertificateJson, b: CertificateJson): boolean {
  return JSON.stringify(normalizeCertificate(a)) === JSON.stringify(normalizeCertificate(b));
}

function normalizeCertificate(c: CertificateJson): unknown {
  const poly = (p: PolynomialJson) => ({
    var: p.var,
    terms: Object.fromEntries(Object.entries(p.terms).sort(([x], [y]) => Number(x) - Number(y))),
  });
  return {
    components: c.components,
    coset_type: c.coset_type,
    jones: poly(c.jones),
    alexander_normalized: poly(c.alexander_normalized),
  };
}
