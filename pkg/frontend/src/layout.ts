import type { GraphJson } from "./protocol.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<number, Point>;

function neighbours(graph: GraphJson): Map<number, number[]> {
  const adj = new Map<number, number[]>();
  for (let v = 1; v <= graph.vertices; v++) adj.set(v, []);
  for (const e of graph.edges) {
    adj.get(e.i)!.push(e.j);
    adj.get(e.j)!.push(e.i);
  }
  return adj;
}

function pathOrder(graph: GraphJson): number[] | null {
  // a single path: connected, all degrees <= 2, exactly two endpoints
  const adj = neighbours(graph);
  if (graph.vertices === 1) return [1];
  const degrees = [...adj.values()].map((ns) => ns.length);
  if (degrees.some((d) => d > 2)) return null;
  const ends = [...adj.entries()].filter(([, ns]) => ns.length === 1).map(([v]) => v);
  if (ends.length !== 2) return null;
  const order = [Math.min(...ends)];
  let prev = -1;
  while (order.length < graph.vertices) {
    const current = order[order.length - 1]!;
    const next = adj.get(current)!.find((u) => u !== prev);
    if (next === undefined) return null; // disconnected
    prev = current;
    order.push(next);
  }
  return order;
}

function cycleOrder(graph: GraphJson): number[] | null {
  const adj = neighbours(graph);
  if (graph.vertices < 3 || graph.edges.length !== graph.vertices) return null;
  if ([...adj.values()].some((ns) => ns.length !== 2)) return null;
  const order = [1];
  let prev = -1;
  while (order.length < graph.vertices) {
    const current = order[order.length - 1]!;
    const options = adj.get(current)!.filter((u) => u !== prev);
    const next = order.length === 1 ? Math.min(...options) : options[0];
    if (next === undefined || order.includes(next)) return null;
    prev = current;
    order.push(next);
  }
  return order;
}

/** Deterministic PRNG so force layouts are reproducible run to run. */
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function forceLayout(graph: GraphJson, width: number, height: number): Layout {
  const rng = mulberry32(graph.vertices * 7919 + graph.edges.length * 104729 + 1);
  const pos: Point[] = [];
  for (let v = 0; v < graph.vertices; v++) {
    pos.push({ x: (rng() - 0.5) * width * 0.6, y: (rng() - 0.5) * height * 0.6 });
  }
  const edges = graph.edges.map((e) => [e.i - 1, e.j - 1] as const);
  const ideal = Math.min(width, height) / 3;
  for (let step = 0; step < 250; step++) {
    const fx = new Array<number>(graph.vertices).fill(0);
    const fy = new Array<number>(graph.vertices).fill(0);
    for (let a = 0; a < graph.vertices; a++) {
      for (let b = a + 1; b < graph.vertices; b++) {
        const dx = pos[a]!.x - pos[b]!.x;
        const dy = pos[a]!.y - pos[b]!.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = (ideal * ideal) / d2;
        const d = Math.sqrt(d2);
        fx[a]! += (dx / d) * push;
        fy[a]! += (dy / d) * push;
        fx[b]! -= (dx / d) * push;
        fy[b]! -= (dy / d) * push;
      }
    }
    for (const [a, b] of edges) {
      const dx = pos[a]!.x - pos[b]!.x;
      const dy = pos[a]!.y - pos[b]!.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - ideal) * 0.08;
      fx[a]! -= (dx / d) * pull;
      fy[a]! -= (dy / d) * pull;
      fx[b]! += (dx / d) * pull;
      fy[b]! += (dy / d) * pull;
    }
    const damp = 0.85 * (1 - step / 300);
    for (let v = 0; v < graph.vertices; v++) {
      pos[v]!.x += Math.max(-12, Math.min(12, fx[v]! * damp));
      pos[v]!.y += Math.max(-12, Math.min(12, fy[v]! * damp));
    }
  }
  // normalize into the viewport
  const xs = pos.map((p) => p.x);
  const ys = pos.map((p) => p.y);
  const spanX = Math.max(Math.max(...xs) - Math.min(...xs), 1);
  const spanY = Math.max(Math.max(...ys) - Math.min(...ys), 1);
  const layout: Layout = new Map();
  pos.forEach((p, v) => {
    layout.set(v + 1, {
      x: 60 + ((p.x - Math.min(...xs)) / spanX) * (width - 120),
      y: 60 + ((p.y - Math.min(...ys)) / spanY) * (height - 120),
    });
  });
  return layout;
}

/**
 * Node coordinates: a circle for cycles, a horizontal line for chains, and a
 * deterministic force layout for everything else.
 */
export function computeLayout(graph: GraphJson, width = 640, height = 400): Layout {
  const layout: Layout = new Map();
  const cycle = cycleOrder(graph);
  if (cycle) {
    const r = Math.min(width, height) / 2 - 60;
    cycle.forEach((v, idx) => {
      const angle = -Math.PI / 2 + (2 * Math.PI * idx) / cycle.length;
      layout.set(v, {
        x: width / 2 + r * Math.cos(angle),
        y: height / 2 + r * Math.sin(angle),
      });
    });
    return layout;
  }
  const path = pathOrder(graph);
  if (path) {
    path.forEach((v, idx) => {
      const t = path.length === 1 ? 0.5 : idx / (path.length - 1);
      layout.set(v, { x: 60 + t * (width - 120), y: height / 2 });
    });
    return layout;
  }
  return forceLayout(graph, width, height);
}
