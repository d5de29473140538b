/** Browser wiring: mount the board, delegate events, download exports. */

import { SessionApi } from "./api.js";
import { BoardStore } from "./board.js";
import { renderBoard } from "./render.js";

const baseUrl =
  new URLSearchParams(window.location.search).get("api") ??
  window.location.origin;
const store = new BoardStore(new SessionApi(baseUrl));
const root = document.getElementById("board")!;
const loader = document.getElementById("loader") as HTMLFormElement;

function mount(): void {
  root.innerHTML = renderBoard(store.view());
}

store.subscribe(mount);

root.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const memberEl = target.closest<HTMLElement>("[data-member]");
  if (memberEl && !memberEl.classList.contains("disabled")) {
    void store.select(Number(memberEl.dataset.member));
    return;
  }
  if (target.id === "commit-swap" && !target.hasAttribute("disabled")) {
    void store.commit();
    return;
  }
  if (target.id === "finalize" && !target.hasAttribute("disabled")) {
    void store.finalize();
    return;
  }
  if (target.id === "export" && !target.hasAttribute("disabled")) {
    downloadExport();
  }
});

function downloadExport(): void {
  const doc = store.exportDocument();
  if (!doc) return;
  const blob = new Blob([JSON.stringify(doc, null, 2)], {
    type: "application/json",
  });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = `final-roles-${store.view().sessionId}.json`;
  anchor.click();
  URL.revokeObjectURL(url);
}

loader.addEventListener("submit", (event) => {
  event.preventDefault();
  const input = document.getElementById("session-id") as HTMLInputElement;
  const id = input.value.trim();
  if (id) void store.load(id);
});

const initial = new URLSearchParams(window.location.search).get("session");
if (initial) void store.load(initial);
mount();
