import type {
  OverviewPayload,
  TimelinePayload,
  UsersPayload,
  VisualizationPayload,
} from "./models.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

/**
 * Thin typed client. Tracks the snapshot id from response headers so callers
 * can discard responses that arrive after a newer snapshot was observed.
 */
export class ApiClient {
  private latestSnapshot = 0;

  constructor(private readonly baseUrl: string) {}

  get snapshotId(): number {
    return this.latestSnapshot;
  }

  private async get<T>(path: string): Promise<{ body: T; snapshotId: number }> {
    const res = await fetch(`${this.baseUrl}${path}`);
    if (!res.ok) throw new ApiError(res.status, `${path}: HTTP ${res.status}`);
    const snapshotId = Number(res.headers.get("X-Snapshot-Id") ?? 0);
    this.latestSnapshot = Math.max(this.latestSnapshot, snapshotId);
    return { body: (await res.json()) as T, snapshotId };
  }

  /** true when the response belongs to an older snapshot and should be dropped */
  isStale(snapshotId: number): boolean {
    return snapshotId < this.latestSnapshot;
  }

  overview() {
    return this.get<OverviewPayload>("/api/overview");
  }

  visualizations() {
    return this.get<VisualizationPayload>("/api/visualizations");
  }

  users(type?: string, page = 1, pageSize = 50) {
    const params = new URLSearchParams({ page: String(page), page_size: String(pageSize) });
    if (type) params.set("type", type);
    return this.get<UsersPayload>(`/api/users?${params}`);
  }

  timeline(userId: string, visit = 0) {
    return this.get<TimelinePayload>(
      `/api/users/${encodeURIComponent(userId)}/timeline?visit=${visit}`,
    );
  }
}
