/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const condnum_compare: (a: number, b: bigint, c: number, d: number) => [number, number];
export const delay_identify: (a: number, b: number) => [number, number];
export const recover_poles: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
