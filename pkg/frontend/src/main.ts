/** Browser wiring: DOM events in, API calls out, render on new state. */

import { ApiClient } from "./api.js";
import { boardModel, boardSvg, PLAYER_COLOR } from "./boardview.js";
import { heatmapModel, heatmapSvg } from "./heatmap.js";
import {
  initialState,
  overlayAvailable,
  reduceApiError,
  reduceFixedPoint,
  reduceGameCreated,
  reduceMove,
  reduceOverlay,
  ViewState,
} from "./state.js";

const api = new ApiClient("");
let state: ViewState = initialState;

function set(next: ViewState) {
  state = next;
  render();
}

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function render() {
  const boardHost = el<HTMLDivElement>("board");
  if (state.board) {
    const model = boardModel(state.board, state.lastMove);
    boardHost.innerHTML = boardSvg(model, state.overlayVisible ? state.overlay : null);
    for (const poly of boardHost.querySelectorAll<SVGPolygonElement>("polygon.cell")) {
      poly.addEventListener("click", () => {
        if (poly.dataset.state !== ".") return; // occupied clicks are inert
        onMove(Number(poly.dataset.z1), Number(poly.dataset.z2));
      });
    }
  } else {
    boardHost.innerHTML = "<p class='hint'>create a game to start</p>";
  }

  const banner = el<HTMLDivElement>("banner");
  if (state.winnerBanner) {
    banner.textContent = `${state.winnerBanner} wins`;
    banner.style.background = PLAYER_COLOR[state.winnerBanner] ?? "#444";
    banner.classList.add("on");
  } else {
    banner.textContent = state.board ? `${state.board.toMove} to move` : "";
    banner.style.background = "#718096";
    banner.classList.toggle("on", state.board !== null);
  }

  const toggle = el<HTMLButtonElement>("overlay-toggle");
  toggle.disabled = !overlayAvailable(state);
  toggle.textContent = state.overlayVisible ? "hide separating paths" : "show separating paths";

  const toast = el<HTMLDivElement>("toast");
  toast.textContent = state.toast ?? "";
  toast.classList.toggle("on", state.toast !== null);

  const fp = state.fixedPoint;
  const fpError = el<HTMLDivElement>("fp-error");
  const caret = el<HTMLPreElement>("fp-caret");
  if (fp.error) {
    fpError.textContent = `${fp.error.code}: ${fp.error.message}`;
    const off = fp.error.offset ?? 0;
    caret.textContent = `${el<HTMLInputElement>("fp-map").value}\n${" ".repeat(off)}^`;
  } else {
    fpError.textContent = "";
    caret.textContent = "";
  }
  const fpOut = el<HTMLDivElement>("fp-result");
  const host = el<HTMLDivElement>("heatmap");
  if (fp.result) {
    fpOut.textContent =
      `point (${fp.result.point.x.toFixed(4)}, ${fp.result.point.y.toFixed(4)})  ` +
      `residual ${fp.result.residual.toExponential(2)}  k=${fp.result.k}`;
    const model = heatmapModel(fp.result);
    host.innerHTML = model
      ? heatmapSvg(model)
      : "<p class='hint'>lattice too fine to ship; counts only</p>";
  } else {
    fpOut.textContent = "";
    host.innerHTML = "";
  }
}

async function guarded(fn: () => Promise<ViewState>) {
  if (state.busy) return; // one in-flight request per session
  set({ ...state, busy: true, toast: null });
  try {
    set(await fn());
  } catch (err) {
    set(reduceApiError(state, err));
  }
}

function onMove(z1: number, z2: number) {
  const id = state.sessionId;
  if (!id) return;
  guarded(async () => reduceMove(state, { z1, z2 }, await api.move(id, z1, z2)));
}

function wire() {
  el<HTMLFormElement>("new-game").addEventListener("submit", (ev) => {
    ev.preventDefault();
    const k = Number(el<HTMLInputElement>("game-k").value);
    const opponent = el<HTMLSelectElement>("game-opponent").value as "none" | "solver";
    guarded(async () => {
      const created = await api.createGame(k, opponent);
      return reduceGameCreated(state, created.id, created.board);
    });
  });

  el<HTMLButtonElement>("overlay-toggle").addEventListener("click", () => {
    if (state.overlayVisible) {
      set({ ...state, overlayVisible: false });
      return;
    }
    const id = state.sessionId;
    if (!id) return;
    if (state.overlay) {
      set({ ...state, overlayVisible: true });
      return;
    }
    guarded(async () => reduceOverlay(state, await api.interfacePaths(id)));
  });

  el<HTMLFormElement>("fp-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    const mapText = el<HTMLInputElement>("fp-map").value;
    const eps = Number(el<HTMLInputElement>("fp-eps").value);
    guarded(async () => {
      const result = await api.fixedPoint({ map: mapText, eps });
      return reduceFixedPoint({ ...state, fixedPoint: { ...state.fixedPoint, mapText, eps } }, result);
    });
  });
}

wire();
render();
