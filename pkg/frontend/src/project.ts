import type { Layout } from "./layout.js";
import type { SessionState, VerdictJson } from "./protocol.js";

// ViewState is a pure projection of the last service response: every value
// shown on screen is taken verbatim from the wire (exact literals first).

export interface NodeView {
  vertex: number;
  label: string;
  x: number;
  y: number;
  exact: string | null;
  approx: string | null;
  moveClass: string | null;
  isDescent: boolean;
  fireable: boolean;
}

export interface EdgeView {
  i: number;
  j: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  label: string;
}

export interface HistoryEntry {
  vertex: number;
  moveClass: string;
}

export interface ViewState {
  mode: string;
  playable: boolean;
  refusal: string | null;
  nodes: NodeView[];
  edges: EdgeView[];
  word: number[];
  history: HistoryEntry[];
  reduced: boolean | null;
  verdictKind: string;
  verdictSummary: string;
}

const POSITIVE_CLASSES = new Set(["positive", "pseudo-positive"]);

export function verdictSummary(verdict: VerdictJson): string {
  switch (verdict.kind) {
    case "FaithfulBalanced": {
      const pots = (verdict.potentials ?? []).map((p) => p.exact).join(", ");
      return `Faithful: balanced weights, potentials (${pots})`;
    }
    case "NotFaithful": {
      const cycle = (verdict.cycle ?? []).join(" ");
      const weight = verdict.cycleWeight?.exact ?? "?";
      return (
        `Not faithful: cycle ${cycle} has weight ${weight} of order ` +
        `${verdict.order}; monomial quotient of order ${verdict.quotientOrder}`
      );
    }
    case "FaithfulAffineCycle":
      return (
        `Faithful: cycle weight ${verdict.cycleWeight?.exact ?? "?"} has infinite ` +
        `order; the image is the affine group of the ${verdict.n}-cycle`
      );
    case "Unknown":
      return "Unknown: outside the decided regimes (open problem territory)";
    default:
      return verdict.kind;
  }
}

function edgeLabel(m: number | "inf", w: string | undefined): string {
  const parts: string[] = [];
  if (m === "inf") parts.push("m=inf");
  else if (m > 3) parts.push(`m=${m}`);
  if (w !== undefined && w !== "1") parts.push(w);
  return parts.join("  ");
}

export function buildViewState(state: SessionState, layout: Layout): ViewState {
  const descents = new Set(state.descents);
  const nodes: NodeView[] = [];
  for (let v = 1; v <= state.graph.vertices; v++) {
    const at = layout.get(v) ?? { x: 0, y: 0 };
    const moveClass = state.moveClasses[String(v)] ?? null;
    nodes.push({
      vertex: v,
      label: `s${v}`,
      x: at.x,
      y: at.y,
      exact: state.position ? (state.position.exact[v - 1] ?? null) : null,
      approx: state.position ? (state.position.approx[v - 1] ?? null) : null,
      moveClass,
      isDescent: descents.has(v),
      fireable: state.playable && moveClass !== null && POSITIVE_CLASSES.has(moveClass),
    });
  }
  const edges: EdgeView[] = state.graph.edges.map((e) => {
    const a = layout.get(e.i) ?? { x: 0, y: 0 };
    const b = layout.get(e.j) ?? { x: 0, y: 0 };
    return {
      i: e.i,
      j: e.j,
      x1: a.x,
      y1: a.y,
      x2: b.x,
      y2: b.y,
      label: edgeLabel(e.m, e.w),
    };
  });
  return {
    mode: state.mode,
    playable: state.playable,
    refusal: state.refusal,
    nodes,
    edges,
    word: [...state.word],
    history: state.moves.map((m) => ({ vertex: m.vertex, moveClass: m.class })),
    reduced: state.reduced,
    verdictKind: state.verdict.kind,
    verdictSummary: verdictSummary(state.verdict),
  };
}
