/** View state and its pure reducers.  Every game truth inside the state is a
 * verbatim copy of an API response field; the UI never derives legality,
 * winners or chains on its own. */

import { ApiError, BoardPayload, FixedPointPayload, InterfacePayload, MoveResponse } from "./api.js";

export interface FixedPointPanel {
  mapText: string;
  eps: number;
  result: FixedPointPayload | null;
  error: { code: string; message: string; offset?: number } | null;
}

export interface ViewState {
  sessionId: string | null;
  board: BoardPayload | null;
  lastMove: { z1: number; z2: number } | null;
  winnerBanner: string | null;
  overlay: InterfacePayload | null;
  overlayVisible: boolean;
  fixedPoint: FixedPointPanel;
  toast: string | null;
  busy: boolean; // one in-flight request per session
}

export const initialState: ViewState = {
  sessionId: null,
  board: null,
  lastMove: null,
  winnerBanner: null,
  overlay: null,
  overlayVisible: false,
  fixedPoint: { mapText: "1 - x; 1 - y", eps: 0.01, result: null, error: null },
  toast: null,
  busy: false,
};

export function reduceGameCreated(s: ViewState, id: string, board: BoardPayload): ViewState {
  return {
    ...s,
    sessionId: id,
    board,
    lastMove: null,
    winnerBanner: board.winner,
    overlay: null,
    overlayVisible: false,
    toast: null,
    busy: false,
  };
}

export function reduceMove(
  s: ViewState,
  played: { z1: number; z2: number },
  resp: MoveResponse,
): ViewState {
  return {
    ...s,
    board: resp.board,
    lastMove: resp.solverMove ?? played,
    winnerBanner: resp.winner,
    overlay: null, // stale once the position changed
    overlayVisible: false,
    busy: false,
  };
}

export function reduceOverlay(s: ViewState, payload: InterfacePayload): ViewState {
  return { ...s, overlay: payload, overlayVisible: true, busy: false };
}

export function reduceFixedPoint(s: ViewState, result: FixedPointPayload): ViewState {
  return { ...s, fixedPoint: { ...s.fixedPoint, result, error: null }, busy: false };
}

export function reduceApiError(s: ViewState, err: unknown): ViewState {
  if (err instanceof ApiError) {
    const isParse = err.code === "SyntaxError" || err.code === "ArityError";
    return {
      ...s,
      busy: false,
      toast: `${err.code}: ${err.message}`,
      fixedPoint: isParse
        ? { ...s.fixedPoint, result: null, error: { code: err.code, message: err.message, offset: err.offset } }
        : s.fixedPoint,
    };
  }
  return { ...s, busy: false, toast: String(err) };
}

/** Board is full when no cell reads "." -- a payload fact, not a rule. */
export function overlayAvailable(s: ViewState): boolean {
  return s.board !== null && s.board.cells.every((row) => row.every((c) => c !== "."));
}
