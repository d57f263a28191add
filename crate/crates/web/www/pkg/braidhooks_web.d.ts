/* tslint:disable */
/* eslint-disable */

/**
 * Orbit averages of the braid hook count over all tableaux of `shape`
 * (such as `right:4,3,2,1`) under `group` (`dihedral`, `gyration`, ...).
 */
export function orbits(shape: string, group: string): string;

/**
 * Sliding paths, crossings and braid hooks of a tableau given in text form
 * (one row per line, `.` for empty columns on the left).
 */
export function paths(text: string): string;

/**
 * Moving-window table of a reduced word and its preimage under the braid map.
 */
export function window(word: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly orbits: (a: number, b: number, c: number, d: number) => [number, number];
    readonly paths: (a: number, b: number) => [number, number];
    readonly window: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
