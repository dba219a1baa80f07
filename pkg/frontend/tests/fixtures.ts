// Canned API payloads mirroring what the analytics service returns.
// One populated corpus covering all four user types, plus empty variants.

import type {
  OverviewPayload,
  TimelinePayload,
  UsersPayload,
  VisualizationPayload,
} from "../src/models.js";

export const overviewFixture: OverviewPayload = {
  total_users: 10,
  type_counts: { Demo: 4, Data_Struggler: 2, SS_Explorer: 1, MS_Explorer: 3 },
  monthly_visits: [
    { month: "2024-01", count: 6 },
    { month: "2024-02", count: 0 },
    { month: "2024-03", count: 9 },
  ],
  session_length_dist: {
    Demo: { min: 30, p25: 60, median: 120, p75: 240, max: 600, mean: 180 },
    Data_Struggler: { min: 90, p25: 150, median: 300, p75: 480, max: 900, mean: 360 },
    SS_Explorer: { min: 200, p25: 350, median: 500, p75: 700, max: 1200, mean: 560 },
    MS_Explorer: { min: 300, p25: 600, median: 900, p75: 1500, max: 3600, mean: 1100 },
  },
  returning_rate: 0.3,
  annotated_trend: [
    { month: "2024-01", count: 6, annotations: [] },
    {
      month: "2024-02",
      count: 0,
      annotations: [
        { label: "Course launch", kind: "teaching", start_date: "2024-02-05", end_date: "2024-02-09" },
      ],
    },
    { month: "2024-03", count: 9, annotations: [] },
  ],
  feature_frequency: [
    { name: "hover_node", count: 42 },
    { name: "pan_zoom", count: 31 },
    { name: "open_nodelink", count: 12 },
  ],
  help_usage: {
    Demo: { examples: 3, tutorial: 1 },
    Data_Struggler: { data_formatting: 5 },
    SS_Explorer: {},
    MS_Explorer: { video: 2 },
  },
  time_by_type: {
    Demo: { total_s: 2400, mean_s: 600 },
    Data_Struggler: { total_s: 1800, mean_s: 900 },
    SS_Explorer: { total_s: 560, mean_s: 560 },
    MS_Explorer: { total_s: 9900, mean_s: 3300 },
  },
};

export const emptyOverviewFixture: OverviewPayload = {
  total_users: 0,
  type_counts: { Demo: 0, Data_Struggler: 0, SS_Explorer: 0, MS_Explorer: 0 },
  monthly_visits: [],
  session_length_dist: {
    Demo: null,
    Data_Struggler: null,
    SS_Explorer: null,
    MS_Explorer: null,
  },
  returning_rate: 0,
  annotated_trend: [],
  feature_frequency: [],
  help_usage: { Demo: {}, Data_Struggler: {}, SS_Explorer: {}, MS_Explorer: {} },
  time_by_type: {
    Demo: { total_s: 0, mean_s: 0 },
    Data_Struggler: { total_s: 0, mean_s: 0 },
    SS_Explorer: { total_s: 0, mean_s: 0 },
    MS_Explorer: { total_s: 0, mean_s: 0 },
  },
};

export const visualizationFixture: VisualizationPayload = {
  columns: {
    NodeLink: {
      user_count: 7,
      time_per_user: { min: 60, p25: 120, median: 300, p75: 600, max: 1800, mean: 420 },
      filtering_usage: [
        { name: "time_slider", count: 14 },
        { name: "search_label", count: 3 },
      ],
      representation_usage: [{ name: "change_encoding", count: 2 }],
    },
    Matrix: {
      user_count: 3,
      time_per_user: { min: 30, p25: 45, median: 90, p75: 150, max: 300, mean: 110 },
      filtering_usage: [],
      representation_usage: [{ name: "matrix_reorder", count: 8 }],
    },
    Timeline: { user_count: 1, time_per_user: null, filtering_usage: [], representation_usage: [] },
    Map: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
    Coordinated: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
  },
};

export const emptyVisualizationFixture: VisualizationPayload = {
  columns: {
    NodeLink: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
    Matrix: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
    Timeline: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
    Map: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
    Coordinated: { user_count: 0, time_per_user: null, filtering_usage: [], representation_usage: [] },
  },
};

export const usersFixture: UsersPayload = {
  total: 3,
  page: 1,
  page_size: 50,
  users: [
    {
      id: "u1a2b3c4d5e6",
      type: "MS_Explorer",
      visit_count: 4,
      networks_created: 2,
      first_seen: 1704067200000,
      last_seen: 1711929600000,
    },
    {
      id: "u0f9e8d7c6b5",
      type: "Demo",
      visit_count: 1,
      networks_created: 0,
      first_seen: 1706745600000,
      last_seen: 1706749200000,
    },
    {
      id: "uaabbccddeeff",
      type: "Data_Struggler",
      visit_count: 2,
      networks_created: 0,
      first_seen: 1709251200000,
      last_seen: 1709337600000,
    },
  ],
};

export const emptyUsersFixture: UsersPayload = { total: 0, page: 1, page_size: 50, users: [] };

const T0 = 1704067200000;

export const timelineFixture: TimelinePayload = {
  user_id: "u1a2b3c4d5e6",
  visit_index: 0,
  blocks: [
    { name: "upload_own_data", category: "DataManagement", start_ts: T0, end_ts: T0, count: 1 },
    {
      name: "open_nodelink",
      category: "VisualizationInteraction",
      start_ts: T0 + 5_000,
      end_ts: T0 + 5_000,
      count: 1,
    },
    {
      name: "hover_node",
      category: "VisualizationInteraction",
      start_ts: T0 + 10_000,
      end_ts: T0 + 12_500,
      count: 4,
    },
    {
      name: "help_tutorial",
      category: "SupportHelp",
      start_ts: T0 + 60_000,
      end_ts: T0 + 60_000,
      count: 1,
    },
    {
      name: "bookmark_create",
      category: "Bookmark",
      start_ts: T0 + 90_000,
      end_ts: T0 + 90_000,
      count: 1,
    },
  ],
  segments: [
    { view: "NoView", start_ts: T0, end_ts: T0 + 5_000 },
    { view: "NodeLink", start_ts: T0 + 5_000, end_ts: T0 + 90_000 },
  ],
};
