/** Board rendering: API payload in, SVG string out.  Pure and deterministic;
 * every game fact (cell states, winner, chain) is copied verbatim from the
 * payload -- nothing is recomputed here. */

import { BoardPayload, InterfacePayload } from "./api.js";
import {
  boardViewBox,
  boundarySides,
  cellPolygonPoints,
  centerInt,
  round3,
  sideSegment,
  toPlane,
} from "./hexgeom.js";

export const SCALE = 16;

// V connects N-S and is red, H connects E-W and is blue
export const PLAYER_COLOR: Record<string, string> = { H: "#2b6cb0", V: "#c53030" };
const CELL_FILL: Record<string, string> = { ".": "#f3efe7", H: "#5b9bd5", V: "#e06666" };

export interface CellModel {
  z1: number;
  z2: number;
  state: string; // "." | "H" | "V", straight from the payload
}

export interface BoardRenderModel {
  k: number;
  cells: CellModel[];
  toMove: string;
  winner: string | null;
  winningChain: number[][];
  lastMove: { z1: number; z2: number } | null;
  full: boolean;
}

export function boardModel(payload: BoardPayload, lastMove: { z1: number; z2: number } | null): BoardRenderModel {
  const cells: CellModel[] = [];
  for (let z2 = 1; z2 <= payload.k; z2++) {
    for (let z1 = 1; z1 <= payload.k; z1++) {
      cells.push({ z1, z2, state: payload.cells[payload.k - z2][z1 - 1] });
    }
  }
  return {
    k: payload.k,
    cells,
    toMove: payload.toMove,
    winner: payload.winner,
    winningChain: payload.winningChain ?? [],
    lastMove,
    full: cells.every((c) => c.state !== "."),
  };
}

export function boardSvg(model: BoardRenderModel, overlay: InterfacePayload | null): string {
  const parts: string[] = [];
  const vb = boardViewBox(model.k, SCALE, SCALE);
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" viewBox="${vb}" class="board">`);

  const chain = new Set(model.winningChain.map(([a, b]) => `${a},${b}`));
  for (const cell of model.cells) {
    const classes = ["cell"];
    if (cell.state === ".") classes.push("empty");
    if (chain.has(`${cell.z1},${cell.z2}`)) classes.push("chain");
    if (model.lastMove && model.lastMove.z1 === cell.z1 && model.lastMove.z2 === cell.z2) {
      classes.push("last");
    }
    parts.push(
      `<polygon points="${cellPolygonPoints(cell.z1, cell.z2, SCALE)}" ` +
      `fill="${CELL_FILL[cell.state]}" class="${classes.join(" ")}" ` +
      `data-z1="${cell.z1}" data-z2="${cell.z2}" data-state="${cell.state}"/>`,
    );
  }

  for (const side of boundarySides(model.k)) {
    const { from, to } = sideSegment(side.z1, side.z2, side.a, SCALE);
    parts.push(
      `<line x1="${round3(from.x)}" y1="${round3(from.y)}" x2="${round3(to.x)}" y2="${round3(to.y)}" ` +
      `stroke="${PLAYER_COLOR[side.owner]}" stroke-width="4" stroke-linecap="round" class="edge-${side.region}"/>`,
    );
  }

  if (model.lastMove) {
    const { x, y } = toPlane(centerInt(model.lastMove.z1, model.lastMove.z2), SCALE);
    parts.push(`<circle cx="${round3(x)}" cy="${round3(y)}" r="4" class="last-marker" fill="#222"/>`);
  }

  if (overlay) {
    for (const path of overlay.paths) {
      const pts = path.nodes
        .map((n) => toPlane([n.pos[0], n.pos[1]], SCALE))
        .map((p) => `${round3(p.x)},${round3(p.y)}`)
        .join(" ");
      parts.push(
        `<polyline points="${pts}" fill="none" stroke="#1a202c" stroke-width="2.5" ` +
        `stroke-dasharray="6 3" class="interface-path" data-endpoints="${path.endpoints.join("-")}"/>`,
      );
    }
  }

  parts.push("</svg>");
  return parts.join("");
}
