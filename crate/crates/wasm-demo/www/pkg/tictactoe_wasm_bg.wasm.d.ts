/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demo_free: (a: number, b: number) => void;
export const demo_click: (a: number, b: number, c: number) => [number, number];
export const demo_computerMove: (a: number) => [number, number];
export const demo_computerToMove: (a: number) => number;
export const demo_initialize: (a: number) => void;
export const demo_moveValues: (a: number) => [number, number];
export const demo_navigate: (a: number, b: number, c: number) => [number, number];
export const demo_new: (a: number, b: number, c: number, d: number) => [number, number, number];
export const demo_setUp: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const demo_viewJson: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
