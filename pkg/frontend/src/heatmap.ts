/** Covering-set heatmap: lattice points colored by which displacement set
 * holds them, the returned point marked.  Pure payload -> SVG. */

import { CoveringSetName, FixedPointPayload } from "./api.js";

export const SET_COLOR: Record<CoveringSetName | "free", string> = {
  hplus: "#f6ad55",   // pushed east
  hminus: "#90cdf4",  // pushed west
  vplus: "#fc8181",   // pushed north
  vminus: "#9ae6b4",  // pushed south
  free: "#edf2f7",    // uncovered: an eps-approximate fixed point
};

export interface HeatmapModel {
  k: number;
  classes: Map<string, CoveringSetName | "free">; // "z1,z2" -> set name
  marked: [number, number];
  residual: number;
  counts: Record<CoveringSetName, number>;
}

export function heatmapModel(payload: FixedPointPayload): HeatmapModel | null {
  if (!payload.coveringSets) return null;
  const classes = new Map<string, CoveringSetName | "free">();
  for (let z2 = 1; z2 <= payload.k; z2++) {
    for (let z1 = 1; z1 <= payload.k; z1++) {
      classes.set(`${z1},${z2}`, "free");
    }
  }
  for (const name of ["hplus", "hminus", "vplus", "vminus"] as CoveringSetName[]) {
    for (const [z1, z2] of payload.coveringSets[name]) {
      classes.set(`${z1},${z2}`, name);
    }
  }
  return {
    k: payload.k,
    classes,
    marked: payload.z,
    residual: payload.residual,
    counts: payload.coveringCounts,
  };
}

export function heatmapSvg(model: HeatmapModel): string {
  const cell = Math.max(2, Math.floor(320 / model.k));
  const size = cell * model.k;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="heatmap">`,
  );
  for (let z2 = 1; z2 <= model.k; z2++) {
    for (let z1 = 1; z1 <= model.k; z1++) {
      const cls = model.classes.get(`${z1},${z2}`) ?? "free";
      const x = (z1 - 1) * cell;
      const y = size - z2 * cell; // z2 grows north, svg y grows south
      parts.push(
        `<rect x="${x}" y="${y}" width="${cell}" height="${cell}" ` +
        `fill="${SET_COLOR[cls]}" class="hm-${cls}" data-z1="${z1}" data-z2="${z2}"/>`,
      );
    }
  }
  const [m1, m2] = model.marked;
  const cx = (m1 - 0.5) * cell;
  const cy = size - (m2 - 0.5) * cell;
  parts.push(
    `<circle cx="${cx}" cy="${cy}" r="${cell * 0.6}" fill="none" ` +
    `stroke="#1a202c" stroke-width="2" class="hm-marked"/>`,
  );
  parts.push("</svg>");
  return parts.join("");
}
