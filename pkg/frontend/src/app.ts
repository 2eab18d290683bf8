import { ServiceClient, type FetchLike } from "./client.js";
import { Playground, type PlaygroundView } from "./controller.js";
import type { NodeView } from "./project.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 400;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function nodeTitle(node: NodeView): string {
  const pieces = [`${node.label}`];
  if (node.exact !== null) pieces.push(`value ${node.exact} (${node.approx})`);
  if (node.moveClass) pieces.push(`firing would be ${node.moveClass}`);
  return pieces.join(" - ");
}

export class PlaygroundApp {
  private readonly playground: Playground;
  private readonly graphHost: HTMLElement;
  private readonly sidebar: HTMLElement;
  private readonly bannerHost: HTMLElement;
  private presetSelect: HTMLSelectElement | null = null;

  constructor(root: HTMLElement, serviceUrl: string, fetchImpl?: FetchLike) {
    this.playground = new Playground(new ServiceClient(serviceUrl, fetchImpl));
    root.innerHTML = "";
    this.bannerHost = el("div", "banner-host");
    const main = el("div", "main");
    this.graphHost = el("div", "graph-host");
    this.sidebar = el("aside", "sidebar");
    main.append(this.graphHost, this.sidebar);
    root.append(this.bannerHost, main);
    this.playground.subscribe((view) => this.render(view));
  }

  async start(preset = "a2"): Promise<void> {
    await this.buildPresetPicker();
    await this.playground.loadPreset(preset);
  }

  private async buildPresetPicker(): Promise<void> {
    try {
      const presets = await this.playground.presets();
      const select = el("select", "preset-picker") as HTMLSelectElement;
      for (const preset of presets) {
        const option = el("option", undefined, `${preset.name} - ${preset.title}`);
        option.setAttribute("value", preset.name);
        select.append(option);
      }
      select.addEventListener("change", () => {
        void this.playground.loadPreset(select.value);
      });
      this.presetSelect = select;
    } catch {
      this.presetSelect = null; // banner will surface on load
    }
  }

  private render(view: PlaygroundView): void {
    this.renderBanner(view);
    this.renderGraph(view);
    this.renderSidebar(view);
  }

  private renderBanner(view: PlaygroundView): void {
    this.bannerHost.innerHTML = "";
    if (view.banner) {
      const banner = el("div", "banner error", view.banner.message + " ");
      if (view.banner.retryable) {
        const retry = el("button", "retry", "retry");
        retry.addEventListener("click", () => void this.playground.retry());
        banner.append(retry);
      }
      this.bannerHost.append(banner);
    }
    if (view.notice) {
      this.bannerHost.append(el("div", "banner notice", view.notice));
    }
  }

  private renderGraph(view: PlaygroundView): void {
    this.graphHost.innerHTML = "";
    if (!view.view) return;
    const svg = svgEl("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      width: String(WIDTH),
      height: String(HEIGHT),
      class: "graph",
    });
    for (const edge of view.view.edges) {
      svg.append(
        svgEl("line", {
          x1: String(edge.x1),
          y1: String(edge.y1),
          x2: String(edge.x2),
          y2: String(edge.y2),
          class: "edge",
        }),
      );
      if (edge.label) {
        const label = svgEl("text", {
          x: String((edge.x1 + edge.x2) / 2),
          y: String((edge.y1 + edge.y2) / 2 - 6),
          class: "edge-label",
          "text-anchor": "middle",
        });
        label.textContent = edge.label;
        svg.append(label);
      }
    }
    for (const node of view.view.nodes) {
      const group = svgEl("g", {
        class: [
          "node",
          node.moveClass ? `move-${node.moveClass}` : "",
          node.isDescent ? "descent" : "",
          node.fireable ? "fireable" : "",
        ]
          .filter(Boolean)
          .join(" "),
        "data-vertex": String(node.vertex),
      });
      const title = svgEl("title", {});
      title.textContent = nodeTitle(node);
      group.append(title);
      group.append(
        svgEl("circle", { cx: String(node.x), cy: String(node.y), r: "26" }),
      );
      const name = svgEl("text", {
        x: String(node.x),
        y: String(node.y - 4),
        "text-anchor": "middle",
        class: "node-name",
      });
      name.textContent = node.label;
      group.append(name);
      const value = svgEl("text", {
        x: String(node.x),
        y: String(node.y + 12),
        "text-anchor": "middle",
        class: "node-value",
      });
      value.textContent = node.exact ?? "";
      group.append(value);
      group.addEventListener("click", () => void this.playground.fire(node.vertex));
      svg.append(group);
    }
    this.graphHost.append(svg);
  }

  private renderSidebar(view: PlaygroundView): void {
    this.sidebar.innerHTML = "";
    if (this.presetSelect) this.sidebar.append(this.presetSelect);
    if (!view.view) {
      if (!view.banner) this.sidebar.append(el("p", "hint", "loading..."));
      return;
    }
    const state = view.view;

    const verdict = el("div", `verdict verdict-${state.verdictKind}`, state.verdictSummary);
    this.sidebar.append(verdict);

    const meta = el("p", "meta", `${state.mode} game`);
    this.sidebar.append(meta);
    if (!state.playable && state.refusal) {
      this.sidebar.append(el("p", "refusal", `play disabled: ${state.refusal}`));
    }

    const reduced = el(
      "div",
      state.reduced ? "badge reduced-on" : "badge reduced-off",
      state.reduced === null ? "" : state.reduced ? "word is reduced" : "word is not reduced",
    );
    this.sidebar.append(reduced);

    const controls = el("div", "controls");
    const undo = el("button", "undo", "undo");
    undo.addEventListener("click", () => void this.playground.undo());
    const reset = el("button", "reset", "reset");
    reset.addEventListener("click", () => void this.playground.reset());
    controls.append(undo, reset);
    this.sidebar.append(controls);

    const history = el("ol", "history");
    for (const entry of state.history) {
      history.append(el("li", `move move-${entry.moveClass}`, `fire s${entry.vertex} (${entry.moveClass})`));
    }
    this.sidebar.append(el("h3", undefined, `history (${state.history.length})`), history);

    const descents = state.nodes.filter((n) => n.isDescent).map((n) => n.label);
    this.sidebar.append(el("p", "descents", `descents: {${descents.join(", ")}}`));
  }
}

export function mount(rootId = "app"): PlaygroundApp {
  const params = new URLSearchParams(window.location.search);
  const service = params.get("service") ?? "http://127.0.0.1:8640";
  const root = document.getElementById(rootId);
  if (!root) throw new Error(`no element with id ${rootId}`);
  const app = new PlaygroundApp(root, service);
  void app.start(params.get("preset") ?? "a2");
  return app;
}
