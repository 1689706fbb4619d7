/**
 * Controller for the five master-table forms. All five share one layout:
 * an id, a name and an amount, a row grid, and explicit
 * Insert/Edit/Delete/Post/Cancel/Refresh actions over the selected row.
 *
 * State changes always re-read from the service; nothing is shown
 * optimistically.
 */

import { ApiClient, ApiError, NetworkError } from "../api.js";
import { amountError, widthError, type WidthField } from "../format.js";
import type { MasterRow, MasterTable } from "../types.js";

export interface MasterFormConfig {
  table: MasterTable;
  idField: string;
  nameField: WidthField;
  tarifField: string;
  title: string;
  nameLabel: string;
  tarifLabel: string;
}

export const MASTER_FORMS: Record<MasterTable, MasterFormConfig> = {
  golongan: {
    table: "golongan", idField: "gol_id", nameField: "nama_gol",
    tarifField: "gapok", title: "Golongan", nameLabel: "Nama Golongan",
    tarifLabel: "Gaji Pokok",
  },
  jfa: {
    table: "jfa", idField: "jfa_id", nameField: "nama_jfa",
    tarifField: "tunj_fa", title: "Jabatan Fungsional Akademik",
    nameLabel: "Nama Jabatan", tarifLabel: "Tunjangan Fung. Akademik",
  },
  jstr: {
    table: "jstr", idField: "jstr_id", nameField: "nama_jstr",
    tarifField: "tunj_str", title: "Jabatan Struktural",
    nameLabel: "Nama Jabatan", tarifLabel: "Tunjangan Struktural",
  },
  jkhs: {
    table: "jkhs", idField: "jkhs_id", nameField: "nama_jkhs",
    tarifField: "tunj_khs", title: "Jabatan Khusus",
    nameLabel: "Nama Jabatan", tarifLabel: "Tunjangan Khusus",
  },
  pendidikan: {
    table: "pendidikan", idField: "pend_id", nameField: "nama_pend",
    tarifField: "tarif_mgjr", title: "Pendidikan", nameLabel: "Nama Pendidikan",
    tarifLabel: "Tarif Mengajar",
  },
};

export type Mode = "view" | "insert" | "edit";

export interface Banner {
  text: string;
  retriable: boolean;
  details?: string[];
}

export class MasterForm {
  rows: MasterRow[] = [];
  selectedId: number | null = null;
  mode: Mode = "view";
  nama = "";
  tarif = "";
  fieldErrors: { nama: string | null; tarif: string | null } = { nama: null, tarif: null };
  banner: Banner | null = null;
  private listeners: Array<() => void> = [];

  constructor(
    private readonly api: ApiClient,
    readonly config: MasterFormConfig,
  ) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  rowId(row: MasterRow): number {
    return (row as unknown as Record<string, number>)[this.config.idField];
  }

  rowNama(row: MasterRow): string {
    return (row as unknown as Record<string, string>)[this.config.nameField];
  }

  rowTarif(row: MasterRow): number {
    return (row as unknown as Record<string, number>)[this.config.tarifField];
  }

  selectedRow(): MasterRow | null {
    return this.rows.find((row) => this.rowId(row) === this.selectedId) ?? null;
  }

  async refresh(): Promise<void> {
    try {
      this.rows = await this.api.listMaster(this.config.table);
      this.banner = null;
      if (this.selectedId === null && this.rows.length > 0) {
        this.selectedId = this.rowId(this.rows[0]);
      }
      if (!this.selectedRow()) {
        this.selectedId = this.rows.length > 0 ? this.rowId(this.rows[0]) : null;
      }
    } catch (error) {
      this.fail(error);
    }
    this.notify();
  }

  select(id: number): void {
    this.selectedId = id;
    this.notify();
  }

  /** first / prev / next / last over the grid rows. */
  navigate(where: "first" | "prev" | "next" | "last"): void {
    if (this.rows.length === 0) return;
    const ids = this.rows.map((row) => this.rowId(row));
    const at = this.selectedId === null ? 0 : Math.max(0, ids.indexOf(this.selectedId));
    const target = {
      first: 0,
      prev: Math.max(0, at - 1),
      next: Math.min(ids.length - 1, at + 1),
      last: ids.length - 1,
    }[where];
    this.selectedId = ids[target];
    this.notify();
  }

  beginInsert(): void {
    this.mode = "insert";
    this.nama = "";
    this.tarif = "";
    this.fieldErrors = { nama: null, tarif: null };
    this.banner = null;
    this.notify();
  }

  beginEdit(): void {
    const row = this.selectedRow();
    if (!row) return;
    this.mode = "edit";
    this.nama = this.rowNama(row);
    this.tarif = String(this.rowTarif(row));
    this.fieldErrors = { nama: null, tarif: null };
    this.banner = null;
    this.notify();
  }

  cancel(): void {
    this.mode = "view";
    this.fieldErrors = { nama: null, tarif: null };
    this.banner = null;
    this.notify();
  }

  setNama(value: string): void {
    this.nama = value;
    this.fieldErrors.nama = widthError(this.config.nameField, value);
    this.notify();
  }

  setTarif(value: string): void {
    this.tarif = value;
    this.fieldErrors.tarif = amountError(value);
    this.notify();
  }

  /** Width and format rules hold client-side before any request is sent. */
  canPost(): boolean {
    return (
      this.mode !== "view" &&
      widthError(this.config.nameField, this.nama) === null &&
      amountError(this.tarif) === null
    );
  }

  async post(): Promise<void> {
    this.fieldErrors.nama = widthError(this.config.nameField, this.nama);
    this.fieldErrors.tarif = amountError(this.tarif);
    if (!this.canPost()) {
      this.notify();
      return;
    }
    const body = {
      [this.config.nameField]: this.nama,
      [this.config.tarifField]: Number(this.tarif),
    };
    try {
      let saved: MasterRow;
      if (this.mode === "insert") {
        saved = await this.api.insertMaster(this.config.table, body);
      } else {
        saved = await this.api.updateMaster(this.config.table, this.selectedId!, body);
      }
      this.mode = "view";
      this.selectedId = this.rowId(saved);
      await this.refresh();
    } catch (error) {
      this.fail(error);
      this.notify();
    }
  }

  async remove(): Promise<void> {
    if (this.selectedId === null) return;
    try {
      await this.api.deleteMaster(this.config.table, this.selectedId);
      this.selectedId = null;
      await this.refresh();
    } catch (error) {
      this.fail(error);
      this.notify();
    }
  }

  private fail(error: unknown): void {
    if (error instanceof ApiError) {
      if (error.code === "referential_conflict") {
        this.banner = {
          text: `tidak bisa dihapus, masih dipakai oleh: ${error.details.join(", ")}`,
          retriable: false,
          details: error.details,
        };
      } else {
        this.banner = { text: error.message, retriable: false };
      }
    } else if (error instanceof NetworkError) {
      this.banner = { text: error.message, retriable: true };
    } else {
      throw error;
    }
  }
}
