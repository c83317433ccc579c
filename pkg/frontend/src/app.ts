// DOM wiring for the design-space explorer: a mark picker and an
// attribute-by-channel table on the left, the live preview on the right.

import {
  ATTR_ROWS,
  CHANNELS,
  MARKS,
  type AttrRow,
  type Channel,
  type DataRow,
  type Mark,
  type ParsedConfig,
  type SelectionState,
  applyCell,
  applyMark,
  eligibilityMap,
  emptySelection,
  isComplete,
  isEplusmCell,
  markEnabled,
  missingBindings,
  parseConfigString,
  parseCsv,
  partialText,
  serializeSelection,
} from "./model.js";
import {
  LatestWins,
  fetchSpace,
  fetchViableConfigs,
  renderConfig,
  validateConfig,
} from "./api.js";

const ROW_TITLES: Record<AttrRow, string> = {
  exp: "Exponent",
  mant: "Mantissa",
  nominal: "Nominal",
  ordinal: "Ordinal",
  temporal: "Temporal",
  quant: "Quantitative",
};

let viable: ParsedConfig[] = [];
let state: SelectionState = emptySelection();
let dataset: DataRow[] | null = null; // null: the server's built-in sample
let lastSvg: string | null = null;
const previewGate = new LatestWins<{ svg: string | null; message: string }>();

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function banner(message: string | null): void {
  const node = el<HTMLDivElement>("banner");
  node.textContent = message ?? "";
  node.hidden = message === null;
}

function buildMarkPicker(): void {
  const host = el<HTMLDivElement>("marks");
  host.replaceChildren();
  for (const mark of MARKS) {
    const button = document.createElement("button");
    button.textContent = mark;
    button.id = `mark-${mark}`;
    button.addEventListener("click", () => {
      state = applyMark(state, mark as Mark);
      refresh();
    });
    host.appendChild(button);
  }
}

function buildTable(): void {
  const table = el<HTMLTableElement>("matrix");
  table.replaceChildren();
  const head = table.insertRow();
  head.insertCell().textContent = "";
  for (const channel of CHANNELS) {
    const cell = head.insertCell();
    cell.textContent = channel;
    cell.className = "col-head";
  }
  for (const row of ATTR_ROWS) {
    const tr = table.insertRow();
    const name = tr.insertCell();
    name.textContent = ROW_TITLES[row];
    name.className = "row-head";
    for (const channel of CHANNELS) {
      const cell = tr.insertCell();
      const button = document.createElement("button");
      button.id = `cell-${row}-${channel}`;
      button.addEventListener("click", () => {
        state = applyCell(state, row, channel as Channel);
        refresh();
      });
      cell.appendChild(button);
    }
  }
}

function selectedInRow(row: AttrRow): Channel | null {
  if (row === "exp") return state.exp;
  if (row === "mant") return state.mant;
  return state.otherRow === row ? state.otherChannel : null;
}

function refreshCells(): void {
  const map = eligibilityMap(viable, state);
  for (const mark of MARKS) {
    const button = el<HTMLButtonElement>(`mark-${mark}`);
    button.disabled = !markEnabled(viable, state, mark as Mark);
    button.classList.toggle("selected", state.mark === mark);
  }
  for (const row of ATTR_ROWS) {
    for (const channel of CHANNELS) {
      const button = el<HTMLButtonElement>(`cell-${row}-${channel}`);
      const enabled = map[row][channel];
      button.disabled = !enabled;
      button.classList.toggle("selected", selectedInRow(row) === channel);
      // the circled-plus affordance marks the combined-scale double assignment
      button.textContent = isEplusmCell(state, row, channel as Channel) ? "⊕" : "";
    }
  }
}

function refreshPreview(): void {
  const configNode = el<HTMLDivElement>("config-text");
  const statusNode = el<HTMLDivElement>("status");
  const preview = el<HTMLDivElement>("preview");
  const exportSvg = el<HTMLButtonElement>("export-svg");
  const exportText = el<HTMLButtonElement>("export-config");

  const text = serializeSelection(state);
  configNode.textContent = text ?? partialText(state);
  if (!isComplete(state) || text === null) {
    statusNode.textContent = `incomplete selection, missing: ${missingBindings(state).join(", ")}`;
    preview.replaceChildren();
    lastSvg = null;
    exportSvg.disabled = true;
    exportText.disabled = true;
    return;
  }
  exportText.disabled = false;
  void previewGate.run(
    async () => {
      const verdict = await validateConfig(text);
      if (!verdict.viable) {
        return { svg: null, message: `not viable: ${verdict.violations.join(", ")}` };
      }
      const svg = await renderConfig(text, dataset);
      return { svg, message: "viable" };
    },
    ({ svg, message }) => {
      statusNode.textContent = message;
      lastSvg = svg;
      exportSvg.disabled = svg === null;
      if (svg === null) {
        preview.replaceChildren();
      } else {
        preview.innerHTML = svg;
      }
      banner(null);
    },
    () => banner("service unavailable; selection shown may be stale"),
  );
}

function refresh(): void {
  refreshCells();
  refreshPreview();
}

function download(name: string, contents: string, type: string): void {
  const blob = new Blob([contents], { type });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = name;
  link.click();
  URL.revokeObjectURL(url);
}

function wireExports(): void {
  el<HTMLButtonElement>("export-svg").addEventListener("click", () => {
    if (lastSvg) download("chart.svg", lastSvg, "image/svg+xml");
  });
  el<HTMLButtonElement>("export-config").addEventListener("click", () => {
    const text = serializeSelection(state);
    if (text) download("config.txt", text + "\n", "text/plain");
  });
  el<HTMLButtonElement>("reset").addEventListener("click", () => {
    state = emptySelection();
    refresh();
  });
}

function wireDataset(): void {
  const input = el<HTMLInputElement>("csv-file");
  const status = el<HTMLSpanElement>("dataset-status");
  input.addEventListener("change", async () => {
    const file = input.files?.[0];
    if (!file) return;
    try {
      dataset = parseCsv(await file.text());
      status.textContent = `${file.name} (${dataset.length} rows)`;
    } catch (err) {
      dataset = null;
      status.textContent = `upload rejected: ${(err as Error).message}`;
    }
    refresh();
  });
  el<HTMLButtonElement>("use-sample").addEventListener("click", () => {
    dataset = null;
    status.textContent = "built-in sample";
    refresh();
  });
}

export async function start(): Promise<void> {
  buildMarkPicker();
  buildTable();
  wireExports();
  wireDataset();
  try {
    await fetchSpace(); // reachability check with structured dimensions
    const configs = await fetchViableConfigs();
    viable = configs.map(parseConfigString);
    banner(null);
  } catch {
    banner("service unavailable; the table is disabled");
    return;
  }
  refresh();
}

if (typeof document !== "undefined" && document.getElementById("matrix") !== null) {
  void start();
}
