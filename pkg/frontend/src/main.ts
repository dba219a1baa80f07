import { ApiClient, ApiError } from "./api.js";
import type { CategoryToken, TimelinePayload } from "./models.js";
import { CATEGORIES } from "./models.js";
import { renderOverview } from "./overview.js";
import { renderCategoryLegend, renderUserList, renderUserNotFound, renderUserTimeline } from "./user.js";
import { renderVisualization } from "./visualization.js";

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get("api") ?? "http://127.0.0.1:8000");

const content = document.getElementById("content")!;
const nav = document.querySelectorAll<HTMLButtonElement>("nav button");

const enabledCategories = new Set<CategoryToken>(CATEGORIES);
let currentTimeline: TimelinePayload | null = null;

async function showOverview(): Promise<void> {
  const { body } = await api.overview();
  content.innerHTML = renderOverview(body);
}

async function showVisualization(): Promise<void> {
  const { body } = await api.visualizations();
  content.innerHTML = renderVisualization(body);
}

function redrawTimeline(): void {
  const host = document.getElementById("timeline-host");
  if (host && currentTimeline) {
    host.innerHTML = renderUserTimeline(currentTimeline, enabledCategories);
  }
}

async function showUserPage(): Promise<void> {
  const { body, snapshotId } = await api.users();
  if (api.isStale(snapshotId)) return;
  content.innerHTML =
    `<div id="legend">${renderCategoryLegend(enabledCategories)}</div>` +
    `<div id="user-list">${renderUserList(body)}</div>` +
    `<div id="timeline-host"></div>`;

  document.querySelectorAll<HTMLInputElement>("#legend input").forEach((box) => {
    box.addEventListener("change", () => {
      const cat = box.dataset.category as CategoryToken;
      if (box.checked) enabledCategories.add(cat);
      else enabledCategories.delete(cat);
      redrawTimeline();
    });
  });

  document.querySelectorAll<HTMLTableRowElement>(".user-row").forEach((row) => {
    row.addEventListener("click", async () => {
      const userId = row.dataset.userId!;
      try {
        const { body: timeline } = await api.timeline(userId);
        currentTimeline = timeline;
        redrawTimeline();
      } catch (err) {
        if (err instanceof ApiError && err.status === 404) {
          document.getElementById("timeline-host")!.innerHTML = renderUserNotFound(userId);
        } else {
          throw err;
        }
      }
    });
  });
}

const pages: Record<string, () => Promise<void>> = {
  overview: showOverview,
  visualization: showVisualization,
  user: showUserPage,
};

nav.forEach((button) => {
  button.addEventListener("click", () => {
    nav.forEach((b) => b.classList.toggle("active", b === button));
    pages[button.dataset.page!]().catch((err) => {
      content.innerHTML = `<div class="empty-state">Failed to load: ${String(err)}</div>`;
    });
  });
});

pages.overview().catch((err) => {
  content.innerHTML = `<div class="empty-state">API unreachable: ${String(err)}</div>`;
});
