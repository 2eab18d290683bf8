import type { CreateSessionBody, PresetJson, SessionState } from "./protocol.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** A non-2xx reply from the service, carrying its explanation. */
export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`service replied ${status}: ${detail}`);
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: unknown };
      if (typeof body.detail === "string") detail = body.detail;
      else if (body.detail !== undefined) detail = JSON.stringify(body.detail);
    } catch {
      // keep the status text
    }
    throw new ServiceError(response.status, detail);
  }
  return (await response.json()) as T;
}

/** Thin typed wrapper over the session endpoints; no game logic lives here. */
export class ServiceClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.fetchImpl(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    }).then((r) => parseOrThrow<T>(r));
  }

  presets(): Promise<PresetJson[]> {
    return this.fetchImpl(this.baseUrl + "/presets")
      .then((r) => parseOrThrow<{ presets: PresetJson[] }>(r))
      .then((data) => data.presets);
  }

  createSession(body: CreateSessionBody): Promise<SessionState> {
    return this.post("/session", body);
  }

  state(id: string): Promise<SessionState> {
    return this.fetchImpl(`${this.baseUrl}/session/${id}`).then((r) =>
      parseOrThrow<SessionState>(r),
    );
  }

  fire(id: string, vertex: number): Promise<SessionState> {
    return this.post(`/session/${id}/fire`, { vertex });
  }

  undo(id: string): Promise<SessionState> {
    return this.post(`/session/${id}/undo`);
  }

  reset(id: string): Promise<SessionState> {
    return this.post(`/session/${id}/reset`);
  }
}
