/* tslint:disable */
/* eslint-disable */

/**
 * Condition numbers of the Vandermonde and TM triangular systems for a
 * generated pole set. `generator` is `"allpass"` or `"clustered"`.
 */
export function condnum_compare(m: number, seed: bigint, generator: string): string;

/**
 * Delayed LTI demo on the reference system. `method` is `"grop"`, `"gb"` or
 * `"classical"`.
 */
export function delay_identify(method: string): string;

/**
 * Sample `Σ c_k / (1 - conj(λ_k) z)` on `n_grid` points and recover the
 * poles with `method` (`"grop"` or `"gb"`). Poles and coefficients are JSON
 * lists of `{"re", "im"}`.
 */
export function recover_poles(poles_json: string, coeffs_json: string, method: string, n_grid: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly condnum_compare: (a: number, b: bigint, c: number, d: number) => [number, number];
    readonly delay_identify: (a: number, b: number) => [number, number];
    readonly recover_poles: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
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
