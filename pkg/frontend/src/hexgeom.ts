/** Exact hex geometry in the same sheared integer basis the server uses:
 * tile (z1, z2) is centered at (2*z1 - z2, 3*z2); corner c adds the offset
 * below; a plane point is x = u * sqrt(3)/2, y = -v / 2 (svg y grows south).
 * Integer corners from adjacent tiles coincide exactly. */

export const SQRT3_2 = Math.sqrt(3) / 2;

const CORNER: [number, number][] = [
  [1, 1], [0, 2], [-1, 1], [-1, -1], [0, -2], [1, -1],
];

/** side a of a tile faces the neighbour in this direction */
const DIR: [number, number][] = [
  [1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1],
];

export function centerInt(z1: number, z2: number): [number, number] {
  return [2 * z1 - z2, 3 * z2];
}

export function cornerInt(z1: number, z2: number, c: number): [number, number] {
  const [cu, cv] = CORNER[c];
  return [2 * z1 - z2 + cu, 3 * z2 + cv];
}

export function toPlane(uv: [number, number], scale: number): { x: number; y: number } {
  return { x: uv[0] * SQRT3_2 * scale, y: -uv[1] * 0.5 * scale };
}

export function cellPolygonPoints(z1: number, z2: number, scale: number): string {
  const pts = [];
  for (let c = 0; c < 6; c++) {
    const { x, y } = toPlane(cornerInt(z1, z2, c), scale);
    pts.push(`${round3(x)},${round3(y)}`);
  }
  return pts.join(" ");
}

/** Which compass region the out-of-board side a of boundary tile z meets.
 * Mirrors the server's convention: the diagonal sides at the two acute
 * corners belong to the vertical player's region. */
export function regionForSide(z1: number, z2: number, k: number, a: number): "N" | "S" | "E" | "W" {
  if (a === 0) return "E";
  if (a === 3) return "W";
  if (a === 2) return "N";
  if (a === 5) return "S";
  if (a === 1) return z2 === k ? "N" : "E";
  return z2 === 1 ? "S" : "W";
}

export interface BoundarySide {
  z1: number;
  z2: number;
  a: number;
  region: "N" | "S" | "E" | "W";
  owner: "H" | "V";
}

/** Every tile side that faces off the board, with the owning player. */
export function boundarySides(k: number): BoundarySide[] {
  const out: BoundarySide[] = [];
  for (let z2 = 1; z2 <= k; z2++) {
    for (let z1 = 1; z1 <= k; z1++) {
      for (let a = 0; a < 6; a++) {
        const n1 = z1 + DIR[a][0];
        const n2 = z2 + DIR[a][1];
        if (n1 >= 1 && n1 <= k && n2 >= 1 && n2 <= k) continue;
        const region = regionForSide(z1, z2, k, a);
        out.push({ z1, z2, a, region, owner: region === "E" || region === "W" ? "H" : "V" });
      }
    }
  }
  return out;
}

/** Segment endpoints (plane coords) of side a of a tile. */
export function sideSegment(z1: number, z2: number, a: number, scale: number) {
  const from = toPlane(cornerInt(z1, z2, (a + 5) % 6), scale);
  const to = toPlane(cornerInt(z1, z2, a), scale);
  return { from, to };
}

export function boardViewBox(k: number, scale: number, pad: number): string {
  // hull corners: west-most at tile (1,k) corner 3, east-most at (k,1) corner 0
  const xs: number[] = [];
  const ys: number[] = [];
  for (const [z1, z2] of [[1, 1], [k, 1], [1, k], [k, k]] as [number, number][]) {
    for (let c = 0; c < 6; c++) {
      const { x, y } = toPlane(cornerInt(z1, z2, c), scale);
      xs.push(x);
      ys.push(y);
    }
  }
  const minX = Math.min(...xs) - pad;
  const minY = Math.min(...ys) - pad;
  const w = Math.max(...xs) - minX + pad;
  const h = Math.max(...ys) - minY + pad;
  return `${round3(minX)} ${round3(minY)} ${round3(w)} ${round3(h)}`;
}

export function round3(v: number): number {
  return Math.round(v * 1000) / 1000;
}
