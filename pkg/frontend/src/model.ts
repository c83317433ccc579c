// Selection state and eligibility logic for the design-space explorer.
//
// Eligibility is computed from the server's enumerated viable set, never
// from a client-side reimplementation of the constraints: a cell is enabled
// exactly when some viable configuration is consistent with the selection
// that clicking the cell would produce.

export type Mark = "point" | "line" | "area";
export type Channel =
  | "PosX" | "PosY" | "Row" | "Col" | "Length"
  | "Area" | "Intensity" | "Hue" | "Shape";
export type OtherRow = "nominal" | "ordinal" | "temporal" | "quant";
export type AttrRow = "exp" | "mant" | OtherRow;

export const MARKS: Mark[] = ["point", "line", "area"];
export const CHANNELS: Channel[] = [
  "PosX", "PosY", "Row", "Col", "Length", "Area", "Intensity", "Hue", "Shape",
];
export const OTHER_ROWS: OtherRow[] = ["nominal", "ordinal", "temporal", "quant"];
export const ATTR_ROWS: AttrRow[] = ["exp", "mant", ...OTHER_ROWS];
export const POSITIONAL: Channel[] = ["PosX", "PosY"];

export interface ParsedConfig {
  mark: Mark;
  exp: Channel;
  mant: Channel;
  otherType: OtherRow;
  other: Channel;
}

/** Parse the server's config notation: "point | exp->Row | mant->PosY | nominal->PosX". */
export function parseConfigString(text: string): ParsedConfig {
  const parts = text.split("|").map((p) => p.trim());
  if (parts.length !== 4) {
    throw new Error(`malformed config string: ${text}`);
  }
  const mark = parts[0] as Mark;
  const bindings: Partial<Record<string, Channel>> = {};
  let otherType: OtherRow | null = null;
  for (const part of parts.slice(1)) {
    const [attr, channel] = part.split("->").map((p) => p.trim());
    bindings[attr] = channel as Channel;
    if ((OTHER_ROWS as string[]).includes(attr)) {
      otherType = attr as OtherRow;
    }
  }
  if (!bindings["exp"] || !bindings["mant"] || otherType === null) {
    throw new Error(`incomplete config string: ${text}`);
  }
  return {
    mark,
    exp: bindings["exp"],
    mant: bindings["mant"],
    otherType,
    other: bindings[otherType]!,
  };
}

export interface SelectionState {
  mark: Mark | null;
  exp: Channel | null;
  mant: Channel | null;
  otherRow: OtherRow | null;
  otherChannel: Channel | null;
}

export function emptySelection(): SelectionState {
  return { mark: null, exp: null, mant: null, otherRow: null, otherChannel: null };
}

export function applyMark(state: SelectionState, mark: Mark): SelectionState {
  return { ...state, mark };
}

/**
 * The selection that clicking a cell produces: radio semantics per row,
 * radio across the four other-attribute rows, click-again to unbind.
 */
export function applyCell(
  state: SelectionState, row: AttrRow, channel: Channel,
): SelectionState {
  if (row === "exp") {
    return { ...state, exp: state.exp === channel ? null : channel };
  }
  if (row === "mant") {
    return { ...state, mant: state.mant === channel ? null : channel };
  }
  if (state.otherRow === row && state.otherChannel === channel) {
    return { ...state, otherRow: null, otherChannel: null };
  }
  return { ...state, otherRow: row, otherChannel: channel };
}

export function isConsistent(cfg: ParsedConfig, state: SelectionState): boolean {
  if (state.mark !== null && cfg.mark !== state.mark) return false;
  if (state.exp !== null && cfg.exp !== state.exp) return false;
  if (state.mant !== null && cfg.mant !== state.mant) return false;
  if (state.otherRow !== null) {
    if (cfg.otherType !== state.otherRow) return false;
    if (state.otherChannel !== null && cfg.other !== state.otherChannel) return false;
  }
  return true;
}

export function hasCompletion(viable: ParsedConfig[], state: SelectionState): boolean {
  return viable.some((cfg) => isConsistent(cfg, state));
}

export function cellEnabled(
  viable: ParsedConfig[], state: SelectionState, row: AttrRow, channel: Channel,
): boolean {
  return hasCompletion(viable, applyCell(state, row, channel));
}

export function markEnabled(
  viable: ParsedConfig[], state: SelectionState, mark: Mark,
): boolean {
  return hasCompletion(viable, applyMark(state, mark));
}

export type EligibilityMap = Record<AttrRow, Record<Channel, boolean>>;

export function eligibilityMap(
  viable: ParsedConfig[], state: SelectionState,
): EligibilityMap {
  const map = {} as EligibilityMap;
  for (const row of ATTR_ROWS) {
    map[row] = {} as Record<Channel, boolean>;
    for (const channel of CHANNELS) {
      map[row][channel] = cellEnabled(viable, state, row, channel);
    }
  }
  return map;
}

/** Cells that would form the combined exponent-plus-mantissa scale. */
export function isEplusmCell(
  state: SelectionState, row: AttrRow, channel: Channel,
): boolean {
  if (!POSITIONAL.includes(channel)) return false;
  if (row === "mant") return state.exp === channel;
  if (row === "exp") return state.mant === channel;
  return false;
}

export function isComplete(state: SelectionState): boolean {
  return (
    state.mark !== null &&
    state.exp !== null &&
    state.mant !== null &&
    state.otherRow !== null &&
    state.otherChannel !== null
  );
}

export function missingBindings(state: SelectionState): string[] {
  const missing: string[] = [];
  if (state.mark === null) missing.push("mark");
  if (state.exp === null) missing.push("exp");
  if (state.mant === null) missing.push("mant");
  if (state.otherRow === null || state.otherChannel === null) {
    missing.push("other attribute");
  }
  return missing;
}

/** The canonical config text of a complete selection (matches the server). */
export function serializeSelection(state: SelectionState): string | null {
  if (!isComplete(state)) return null;
  return (
    `${state.mark} | exp->${state.exp} | mant->${state.mant}` +
    ` | ${state.otherRow}->${state.otherChannel}`
  );
}

/** Any state, complete or not, as text; unbound slots render as "?". */
export function partialText(state: SelectionState): string {
  const other =
    state.otherRow === null
      ? "?->?"
      : `${state.otherRow}->${state.otherChannel ?? "?"}`;
  return (
    `${state.mark ?? "?"} | exp->${state.exp ?? "?"}` +
    ` | mant->${state.mant ?? "?"} | ${other}`
  );
}

export interface DataRow {
  label: string;
  value: number;
}

export const MAX_UPLOAD_ROWS = 50;

/** Parse an uploaded label,value CSV; at most 50 rows, positive values. */
export function parseCsv(text: string): DataRow[] {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length && lines[0].toLowerCase().replace(/\s/g, "") === "label,value") {
    lines.shift();
  }
  if (lines.length === 0) throw new Error("empty dataset");
  if (lines.length > MAX_UPLOAD_ROWS) {
    throw new Error(`too many rows: ${lines.length} > ${MAX_UPLOAD_ROWS}`);
  }
  const rows: DataRow[] = [];
  for (const line of lines) {
    const comma = line.indexOf(",");
    if (comma < 0) throw new Error(`missing comma: ${line}`);
    const label = line.slice(0, comma).trim();
    const value = Number(line.slice(comma + 1).trim());
    if (!label) throw new Error(`missing label: ${line}`);
    if (!Number.isFinite(value) || value <= 0) {
      throw new Error(`values must be positive numbers: ${line}`);
    }
    rows.push({ label, value });
  }
  return rows;
}
