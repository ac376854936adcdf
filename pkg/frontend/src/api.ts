/** Typed client for the game/compute API. All game decisions come from the
 * server; this module only moves JSON. */

export interface BoardPayload {
  k: number;
  text: string;
  cells: string[][]; // row 0 is the north row (z2 = k)
  toMove: string;
  winner: string | null;
  winningChain: number[][] | null;
}

export interface MoveResponse {
  board: BoardPayload;
  winner: string | null;
  solverMove: { z1: number; z2: number } | null;
}

export interface GameResponse {
  id: string;
  opponent: string;
  board: BoardPayload;
  history: { z1: number; z2: number; player: string; t: number }[];
}

export interface InterfaceNode {
  pos: [number, number];
  u?: string;
}

export interface InterfacePath {
  endpoints: [string, string];
  nodes: InterfaceNode[];
}

export interface InterfacePayload {
  winner: string | null;
  paths: InterfacePath[];
}

export type CoveringSetName = "hplus" | "hminus" | "vplus" | "vminus";

export interface FixedPointPayload {
  point: { x: number; y: number };
  residual: number;
  k: number;
  z: [number, number];
  coveringCounts: Record<CoveringSetName, number>;
  coveringSets?: Record<CoveringSetName, [number, number][]>;
}

export interface SpernerPayload {
  completelyLabeledCells: number[];
  count: number;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public offset?: number,
  ) {
    super(message);
  }
}

async function request<T>(base: string, method: string, path: string, body?: unknown): Promise<T> {
  const resp = await fetch(base + path, {
    method,
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, payload.code ?? "Unknown", payload.message ?? "", payload.offset);
  }
  return payload as T;
}

export class ApiClient {
  constructor(private base: string = "") {}

  createGame(k: number, opponent: "none" | "solver"): Promise<{ id: string; board: BoardPayload }> {
    return request(this.base, "POST", "/games", { k, opponent });
  }

  getGame(id: string): Promise<GameResponse> {
    return request(this.base, "GET", `/games/${id}`);
  }

  move(id: string, z1: number, z2: number): Promise<MoveResponse> {
    return request(this.base, "POST", `/games/${id}/moves`, { z1, z2 });
  }

  interfacePaths(id: string): Promise<InterfacePayload> {
    return request(this.base, "GET", `/games/${id}/interface`);
  }

  fixedPoint(body: { map?: string; mapName?: string; eps: number; lipschitz?: number }): Promise<FixedPointPayload> {
    return request(this.base, "POST", "/fixedpoint", body);
  }

  sperner(m: number, n: number, map: string): Promise<SpernerPayload> {
    return request(this.base, "POST", "/sperner", { m, n, map });
  }
}
