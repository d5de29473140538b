/**
 * Pure HTML templates for the board view. Kept free of DOM access so they
 * can be unit-tested as strings; main.ts mounts them and wires events.
 */

import { MemberView, TeamBoardView, TeamView } from "./board.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function memberHtml(member: MemberView, finalized: boolean): string {
  const classes = ["member"];
  if (member.selected) classes.push("selected");
  if (!member.selectable || finalized) classes.push("disabled");
  const chipClass = member.preAssigned ? "chip pre-assigned" : "chip adjusted";
  const chipTitle = member.preAssigned
    ? "pre-assigned based on CTF"
    : `adjusted (was ${escapeHtml(member.initialRole)})`;
  const bars = member.bars
    .map(
      (bar) => `
      <div class="bar-row">
        <span class="bar-role">${escapeHtml(bar.role)}</span>
        <div class="bar-track"><div class="bar-fill" style="width:${bar.width}%"></div></div>
        <span class="bar-value">${escapeHtml(bar.value)}</span>
      </div>`,
    )
    .join("");
  return `
    <li class="${classes.join(" ")}" data-member="${member.id}">
      <div class="member-head">
        <span class="member-label">${escapeHtml(member.label)}</span>
        <span class="${chipClass}" title="${chipTitle}">${escapeHtml(member.role)}</span>
      </div>
      <div class="bars">${bars}</div>
    </li>`;
}

function teamHtml(team: TeamView, finalized: boolean): string {
  return `
    <section class="team" data-team="${team.id}">
      <header>
        <h2>Team ${team.id}</h2>
        <dl class="team-stats">
          <dt>team score</dt><dd class="team-score">${escapeHtml(team.teamScore)}</dd>
          <dt>capacity</dt><dd class="team-capacity">${escapeHtml(team.capacity)}</dd>
        </dl>
      </header>
      <ul class="members">
        ${team.members.map((m) => memberHtml(m, finalized)).join("")}
      </ul>
    </section>`;
}

function previewHtml(view: TeamBoardView): string {
  const swap = view.pendingSwap;
  if (!swap) {
    return `
      <div class="preview idle">
        <p>Select two members of one team to preview a role swap.</p>
        <button id="commit-swap" disabled>Commit swap</button>
      </div>`;
  }
  const warnings = swap.warnings
    .map((w) => `<li class="warning">${escapeHtml(w)}</li>`)
    .join("");
  return `
    <div class="preview active">
      <p>
        Swapping <strong>${swap.i}</strong> and <strong>${swap.j}</strong>:
        team score becomes <span class="preview-score">${escapeHtml(swap.newTeamScore)}</span>
        (delta <span class="preview-delta">${escapeHtml(swap.delta)}</span>)
      </p>
      ${warnings ? `<ul class="warnings">${warnings}</ul>` : ""}
      <button id="commit-swap">Commit swap</button>
    </div>`;
}

export function renderBoard(view: TeamBoardView): string {
  if (!view.sessionId) {
    return view.error
      ? `<div class="banner error">${escapeHtml(view.error)}</div>`
      : `<div class="banner">No session loaded.</div>`;
  }
  const banner = view.error
    ? `<div class="banner error">${escapeHtml(view.error)}</div>`
    : "";
  const finalizedBanner = view.finalized
    ? `<div class="banner final">Assignment finalized (stage ${escapeHtml(view.stage)}) — read only.</div>`
    : "";
  return `
    ${banner}
    ${finalizedBanner}
    <div class="session-meta">
      session <code>${escapeHtml(view.sessionId)}</code>
      · version ${view.version} · ${view.swapCount} swap(s)
    </div>
    <div class="teams">
      ${view.teams.map((t) => teamHtml(t, view.finalized)).join("")}
    </div>
    ${view.finalized ? "" : previewHtml(view)}
    <div class="actions">
      <button id="finalize" ${view.finalized ? "disabled" : ""}>Finalize roles</button>
      <button id="export" ${view.finalized ? "" : "disabled"}>Export final assignment</button>
    </div>`;
}
