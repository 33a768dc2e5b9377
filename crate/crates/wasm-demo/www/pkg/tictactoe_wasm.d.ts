/* tslint:disable */
/* eslint-disable */

export class Demo {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Human move at (row, col).
     */
    click(row: number, col: number): void;
    /**
     * One ply by the perfect computer player.
     */
    computerMove(): void;
    /**
     * Whether the side to move at the latest state is a computer.
     */
    computerToMove(): boolean;
    initialize(): void;
    /**
     * Perfect-play value of each cell for the side to move, row-major:
     * 1 win, 0 draw, -1 loss, [`NOT_PLAYABLE`] for occupied cells or when
     * the viewed state is not the live one.
     */
    moveValues(): Int8Array;
    /**
     * `first`, `prev`, `next` or `last`.
     */
    navigate(target: string): void;
    constructor(mode: string, lead: string);
    setUp(mode: string, lead: string): void;
    /**
     * Session at the cursor as JSON, with the same field names the HTTP
     * service uses.
     */
    viewJson(): string;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly demo_click: (a: number, b: number, c: number) => [number, number];
    readonly demo_computerMove: (a: number) => [number, number];
    readonly demo_computerToMove: (a: number) => number;
    readonly demo_initialize: (a: number) => void;
    readonly demo_moveValues: (a: number) => [number, number];
    readonly demo_navigate: (a: number, b: number, c: number) => [number, number];
    readonly demo_new: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly demo_setUp: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly demo_viewJson: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
