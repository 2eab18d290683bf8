import { ServiceClient, ServiceError } from "./client.js";
import { computeLayout, type Layout } from "./layout.js";
import { buildViewState, type ViewState } from "./project.js";
import type { PresetJson, SessionState } from "./protocol.js";

export interface Banner {
  message: string;
  retryable: boolean;
}

export interface PlaygroundView {
  view: ViewState | null;
  banner: Banner | null;
  notice: string | null; // inline message (rejected move etc); state unchanged
  busy: boolean;
}

type Listener = (view: PlaygroundView) => void;

/**
 * Session controller: owns the latest service response and republishes it as
 * a ViewState. At most one mutation is in flight at a time; a rejected move
 * surfaces as an inline notice and leaves the state untouched, while a
 * network failure raises a retryable banner.
 */
export class Playground {
  private state: SessionState | null = null;
  private layout: Layout = new Map();
  private banner: Banner | null = null;
  private notice: string | null = null;
  private busy = false;
  private lastLoad: (() => Promise<SessionState>) | null = null;
  private readonly listeners: Listener[] = [];

  constructor(private readonly client: ServiceClient) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.snapshot());
  }

  snapshot(): PlaygroundView {
    return {
      view: this.state ? buildViewState(this.state, this.layout) : null,
      banner: this.banner,
      notice: this.notice,
      busy: this.busy,
    };
  }

  get sessionId(): string | null {
    return this.state?.id ?? null;
  }

  private publish(): void {
    const snapshot = this.snapshot();
    for (const listener of this.listeners) listener(snapshot);
  }

  private apply(state: SessionState): void {
    this.state = state;
    this.layout = computeLayout(state.graph);
    this.notice = null;
    this.banner = null;
  }

  presets(): Promise<PresetJson[]> {
    return this.client.presets();
  }

  async loadPreset(name: string, mode?: string): Promise<void> {
    await this.load(() => this.client.createSession({ preset: name, mode }));
  }

  async loadGraph(text: string, mode?: string): Promise<void> {
    await this.load(() => this.client.createSession({ graph: text, mode }));
  }

  private async load(request: () => Promise<SessionState>): Promise<void> {
    this.lastLoad = request;
    this.busy = true;
    this.publish();
    try {
      this.apply(await request());
    } catch (error) {
      this.fail(error);
    } finally {
      this.busy = false;
      this.publish();
    }
  }

  async retry(): Promise<void> {
    if (this.lastLoad) await this.load(this.lastLoad);
  }

  async fire(vertex: number): Promise<void> {
    await this.mutate((id) => this.client.fire(id, vertex));
  }

  async undo(): Promise<void> {
    await this.mutate((id) => this.client.undo(id));
  }

  async reset(): Promise<void> {
    await this.mutate((id) => this.client.reset(id));
  }

  private async mutate(request: (id: string) => Promise<SessionState>): Promise<void> {
    if (this.busy || !this.state) return; // one in-flight mutation at a time
    this.busy = true;
    this.notice = null;
    this.publish();
    try {
      this.apply(await request(this.state.id));
    } catch (error) {
      this.fail(error);
    } finally {
      this.busy = false;
      this.publish();
    }
  }

  private fail(error: unknown): void {
    if (error instanceof ServiceError) {
      // the service refused the request; existing state is still valid
      this.notice = error.detail;
    } else {
      this.banner = {
        message: "service unreachable: " + (error instanceof Error ? error.message : String(error)),
        retryable: true,
      };
    }
  }
}
