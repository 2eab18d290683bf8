// Wire types of the playground service. The exact strings are the source
// of truth; approx strings are display-only decorations computed server-side.

export interface ScalarJson {
  exact: string;
  approx: string;
}

export interface EdgeJson {
  i: number;
  j: number;
  m: number | "inf";
  w?: string;
  wApprox?: string;
}

export interface GraphJson {
  vertices: number;
  edges: EdgeJson[];
}

export interface PositionJson {
  exact: string[];
  approx: string[];
}

export interface MoveJson {
  vertex: number;
  class: string;
}

export interface VerdictJson {
  kind: "FaithfulBalanced" | "NotFaithful" | "FaithfulAffineCycle" | "Unknown";
  potentials?: ScalarJson[];
  cycle?: number[];
  cycleWeight?: ScalarJson;
  order?: number;
  quotientOrder?: number;
  n?: number;
}

export interface SessionState {
  id: string;
  mode: "classical" | "generalized";
  playable: boolean;
  refusal: string | null;
  graph: GraphJson;
  position: PositionJson | null;
  moveClasses: Record<string, string>;
  word: number[];
  moves: MoveJson[];
  descents: number[];
  reduced: boolean | null;
  verdict: VerdictJson;
}

export interface PresetJson {
  name: string;
  title: string;
  mode: string;
  graph: string;
  description: string;
}

export interface CreateSessionBody {
  graph?: string;
  preset?: string;
  mode?: string;
  asymmetric?: boolean;
}
