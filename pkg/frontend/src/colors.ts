import type { CategoryToken, UserTypeToken, ViewToken } from "./models.js";

// One fixed color per event category, identical on every page.
export const CATEGORY_COLORS: Record<CategoryToken, string> = {
  DataManagement: "#1f77b4",
  VisualizationInteraction: "#2ca02c",
  SupportHelp: "#9467bd",
  Communication: "#17becf",
  Bookmark: "#ff7f0e",
  ErrorTracking: "#d62728",
  ActivityLogs: "#7f7f7f",
};

export const TYPE_COLORS: Record<UserTypeToken, string> = {
  Demo: "#bcbd22",
  Data_Struggler: "#d62728",
  SS_Explorer: "#1f77b4",
  MS_Explorer: "#2ca02c",
};

// Five distinguishable CSS background patterns for the view sidebars.
export const VIEW_TEXTURES: Record<ViewToken | "NoView", string> = {
  NodeLink: "repeating-linear-gradient(45deg,#ccc 0 4px,#fff 4px 8px)",
  Matrix: "repeating-linear-gradient(0deg,#ccc 0 3px,#fff 3px 6px)",
  Timeline: "repeating-linear-gradient(90deg,#ccc 0 3px,#fff 3px 6px)",
  Map: "radial-gradient(#ccc 1.5px, #fff 1.5px)",
  Coordinated: "repeating-linear-gradient(135deg,#999 0 2px,#eee 2px 7px)",
  NoView: "#f4f4f4",
};
