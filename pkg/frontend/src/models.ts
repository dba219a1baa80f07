// Typed mirrors of the API payloads. Every number the UI shows comes from
// one of these fields; the UI never re-derives KPIs beyond display formatting.

export type UserTypeToken = "Demo" | "Data_Struggler" | "SS_Explorer" | "MS_Explorer";

export const USER_TYPES: UserTypeToken[] = [
  "Demo",
  "Data_Struggler",
  "SS_Explorer",
  "MS_Explorer",
];

export type ViewToken = "NodeLink" | "Matrix" | "Timeline" | "Map" | "Coordinated";

export const VIEWS: ViewToken[] = ["NodeLink", "Matrix", "Timeline", "Map", "Coordinated"];

export type CategoryToken =
  | "DataManagement"
  | "VisualizationInteraction"
  | "SupportHelp"
  | "Communication"
  | "Bookmark"
  | "ErrorTracking"
  | "ActivityLogs";

export const CATEGORIES: CategoryToken[] = [
  "DataManagement",
  "VisualizationInteraction",
  "SupportHelp",
  "Communication",
  "Bookmark",
  "ErrorTracking",
  "ActivityLogs",
];

export interface Summary {
  min: number;
  p25: number;
  median: number;
  p75: number;
  max: number;
  mean: number;
}

export interface AnnotationPayload {
  label: string;
  kind: string;
  start_date: string;
  end_date: string;
}

export interface TrendBucket {
  month: string;
  count: number;
  annotations: AnnotationPayload[];
}

export interface OverviewPayload {
  total_users: number;
  type_counts: Record<UserTypeToken, number>;
  monthly_visits: { month: string; count: number }[];
  session_length_dist: Record<UserTypeToken, Summary | null>;
  returning_rate: number;
  annotated_trend: TrendBucket[];
  feature_frequency: { name: string; count: number }[];
  help_usage: Record<UserTypeToken, Record<string, number>>;
  time_by_type: Record<UserTypeToken, { total_s: number; mean_s: number }>;
}

export interface ViewColumnPayload {
  user_count: number;
  time_per_user: Summary | null;
  filtering_usage: { name: string; count: number }[];
  representation_usage: { name: string; count: number }[];
}

export interface VisualizationPayload {
  columns: Record<ViewToken, ViewColumnPayload>;
}

export interface UserRow {
  id: string;
  type: UserTypeToken;
  visit_count: number;
  networks_created: number;
  first_seen: number;
  last_seen: number;
}

export interface UsersPayload {
  total: number;
  page: number;
  page_size: number;
  users: UserRow[];
}

export interface TimelineBlockPayload {
  name: string;
  category: CategoryToken;
  start_ts: number;
  end_ts: number;
  count: number;
}

export interface ViewSegmentPayload {
  view: ViewToken | "NoView";
  start_ts: number;
  end_ts: number;
}

export interface TimelinePayload {
  user_id: string;
  visit_index: number;
  blocks: TimelineBlockPayload[];
  segments: ViewSegmentPayload[];
}
