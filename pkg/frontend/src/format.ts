/**
 * Text renderings of listings and volume info.
 *
 * These must stay byte-identical to what the CLI prints for the same state,
 * so the pane body and footer read exactly like `ls` and `info` output.
 * The sort key uses full Unicode case folding (generated table) because
 * that is what the canonical renderer uses; names never leave the BMP.
 */

import { FOLDS } from "./casefold_data.js";

export interface Entry {
  name: string;
  path: string;
  size_bytes: number;
  is_dir: boolean;
  mtime: number | null;
}

export interface VolumeInfo {
  label: string;
  variant: string;
  total_bytes: number;
  free_bytes: number;
}

export function foldCase(text: string): string {
  let out = "";
  for (const ch of text) {
    out += FOLDS.get(ch.codePointAt(0) as number) ?? ch;
  }
  return out;
}

/** Folders first, then files, each group case-folded and code-point sorted. */
export function sortEntries(entries: readonly Entry[]): Entry[] {
  const keyed = entries.map((e, index) => ({
    e,
    index,
    group: e.is_dir ? 0 : 1,
    folded: foldCase(e.name),
  }));
  keyed.sort((a, b) => {
    if (a.group !== b.group) return a.group - b.group;
    if (a.folded < b.folded) return -1;
    if (a.folded > b.folded) return 1;
    return a.index - b.index;
  });
  return keyed.map(({ e }) => e);
}

/** Type flag, byte size right-aligned to 10, name. */
export function formatLine(e: Entry): string {
  const flag = e.is_dir ? "d" : "-";
  return `${flag} ${String(e.size_bytes).padStart(10)} ${e.name}`;
}

/** One line per entry, sorted; identical to the CLI's directory listing. */
export function listingLines(entries: readonly Entry[]): string[] {
  return sortEntries(entries).map(formatLine);
}

/** Single footer line with label, variant, and byte totals. */
export function infoLine(v: VolumeInfo): string {
  return (
    `label=${v.label} variant=${v.variant} ` +
    `total=${v.total_bytes} free=${v.free_bytes}`
  );
}
