/**
 * Board state machine for the discussion phase.
 *
 * Two-click swap selection keeps the preview-before-commit step explicit:
 * selecting two members of one team fetches a what-if preview; committing
 * and finalizing go through the service. All displayed score values are the
 * service's own numbers, converted to text verbatim — the board never does
 * arithmetic on them.
 */

import { SessionApi, SessionBody, WhatIfBody } from "./api.js";

export interface MemberView {
  id: number;
  label: string;
  role: string;
  initialRole: string;
  /** true while the member still holds the pre-assigned (CTF-based) role */
  preAssigned: boolean;
  selected: boolean;
  selectable: boolean;
  /** full score row for the per-role bars: value text + relative width */
  bars: { role: string; value: string; width: number }[];
}

export interface TeamView {
  id: number;
  capacity: string;
  teamScore: string;
  sigma: string;
  members: MemberView[];
}

export interface PendingSwap {
  i: number;
  j: number;
  delta: string;
  newTeamScore: string;
  warnings: string[];
}

export interface TeamBoardView {
  sessionId: string;
  version: number;
  finalized: boolean;
  stage: string;
  teams: TeamView[];
  pendingSwap: PendingSwap | null;
  error: string | null;
  swapCount: number;
}

export class BoardStore {
  private session: SessionBody | null = null;
  private selection: number[] = [];
  private preview: WhatIfBody | null = null;
  private previewPair: [number, number] | null = null;
  private error: string | null = null;
  private listeners: (() => void)[] = [];

  constructor(private readonly api: SessionApi) {}

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  private setError(err: unknown): void {
    this.error = err instanceof Error ? err.message : String(err);
    this.notify();
  }

  async load(sessionId: string): Promise<void> {
    try {
      this.session = await this.api.loadSession(sessionId);
      this.selection = [];
      this.preview = null;
      this.previewPair = null;
      this.error = null;
    } catch (err) {
      this.session = null;
      this.setError(err);
      return;
    }
    this.notify();
  }

  adopt(session: SessionBody): void {
    this.session = session;
    this.selection = [];
    this.preview = null;
    this.previewPair = null;
    this.error = null;
    this.notify();
  }

  /** Two-click selection; a cross-team second click restarts the pair. */
  async select(participantId: number): Promise<void> {
    const session = this.session;
    if (!session || session.finalized) return;
    this.preview = null;
    this.previewPair = null;
    if (this.selection.includes(participantId)) {
      this.selection = this.selection.filter((id) => id !== participantId);
      this.notify();
      return;
    }
    if (this.selection.length === 1) {
      const first = this.selection[0]!;
      if (this.teamOf(first) !== this.teamOf(participantId)) {
        this.selection = [participantId];
        this.notify();
        return;
      }
      this.selection = [first, participantId];
      this.notify();
      await this.fetchPreview(first, participantId);
      return;
    }
    this.selection = [participantId];
    this.notify();
  }

  private async fetchPreview(i: number, j: number): Promise<void> {
    const session = this.session;
    if (!session) return;
    try {
      this.preview = await this.api.whatIf(session.session_id, i, j);
      this.previewPair = [i, j];
      this.error = null;
    } catch (err) {
      this.setError(err);
      return;
    }
    this.notify();
  }

  async commit(): Promise<void> {
    const session = this.session;
    if (!session || !this.previewPair) return;
    const [i, j] = this.previewPair;
    try {
      this.adopt(await this.api.commitSwap(session.session_id, i, j));
    } catch (err) {
      this.setError(err);
    }
  }

  async finalize(): Promise<void> {
    const session = this.session;
    if (!session) return;
    try {
      this.adopt(await this.api.finalize(session.session_id));
    } catch (err) {
      this.setError(err);
    }
  }

  /** The finalized assignment document, exactly as the service returned it. */
  exportDocument(): unknown {
    const session = this.session;
    if (!session || !session.finalized) return null;
    return session.solution;
  }

  private teamOf(participantId: number): number {
    return this.session?.assembly[participantId - 1] ?? 0;
  }

  view(): TeamBoardView {
    const session = this.session;
    if (!session) {
      return {
        sessionId: "",
        version: 0,
        finalized: false,
        stage: "",
        teams: [],
        pendingSwap: null,
        error: this.error,
        swapCount: 0,
      };
    }
    const teams = session.solution.teams.map((team) => ({
      id: team.id,
      capacity: String(team.capacity),
      teamScore: String(session.team_scores[String(team.id)]),
      sigma: team.sigma === null ? "" : String(team.sigma),
      members: team.members.map((member) =>
        this.memberView(session, member.id, team.id),
      ),
    }));
    let pendingSwap: PendingSwap | null = null;
    if (this.preview && this.previewPair) {
      const [i, j] = this.previewPair;
      pendingSwap = {
        i,
        j,
        delta: String(this.preview.delta),
        newTeamScore: String(
          this.preview.new_team_scores[String(this.preview.team)],
        ),
        warnings: this.preview.rule3_warnings,
      };
    }
    return {
      sessionId: session.session_id,
      version: session.version,
      finalized: session.finalized,
      stage: session.solution.stage,
      teams,
      pendingSwap,
      error: this.error,
      swapCount: session.swap_log.length,
    };
  }

  private memberView(
    session: SessionBody,
    id: number,
    teamId: number,
  ): MemberView {
    const row = session.scores[id - 1] ?? [];
    const rowMax = Math.max(...row, 1);
    const role = session.current[id - 1] ?? "";
    const initialRole = session.initial[id - 1] ?? "";
    const firstSelected = this.selection[0];
    const selectable =
      !session.finalized &&
      (this.selection.length === 0 ||
        this.selection.includes(id) ||
        (firstSelected !== undefined && this.teamOf(firstSelected) === teamId));
    return {
      id,
      label: session.labels?.[id - 1] ?? String(id),
      role,
      initialRole,
      preAssigned: role === initialRole,
      selected: this.selection.includes(id),
      selectable,
      bars: row.map((value, col) => ({
        role: session.roles[col] ?? "",
        value: String(value),
        width: Math.round((value / rowMax) * 100),
      })),
    };
  }
}
