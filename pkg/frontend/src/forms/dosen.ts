/**
 * Lecturer form: NII + name plus five lookup combos whose options come
 * from live master list calls. Choosing a combo value immediately shows
 * the amount carried by that master row (service data, nothing computed
 * here). Posting is blocked until every combo has a selection and the
 * text fields pass the width rules.
 */

import { ApiClient, ApiError, NetworkError } from "../api.js";
import { formatMoney, widthError } from "../format.js";
import type { Banner } from "./master.js";
import type { DosenRow, MasterRow, MasterTable } from "../types.js";

export const LOOKUPS: Array<{
  field: keyof Pick<DosenRow, "golongan" | "jab_fa" | "jab_str" | "jab_khs" | "pendidikan">;
  table: MasterTable;
  idField: string;
  nameField: string;
  tarifField: string;
  label: string;
  tarifLabel: string;
}> = [
  { field: "golongan", table: "golongan", idField: "gol_id", nameField: "nama_gol",
    tarifField: "gapok", label: "Golongan", tarifLabel: "Gaji Pokok" },
  { field: "jab_fa", table: "jfa", idField: "jfa_id", nameField: "nama_jfa",
    tarifField: "tunj_fa", label: "Jabatan Fung. Akademik",
    tarifLabel: "Tunjangan Fung. Akademik" },
  { field: "jab_str", table: "jstr", idField: "jstr_id", nameField: "nama_jstr",
    tarifField: "tunj_str", label: "Jabatan Struktural",
    tarifLabel: "Tunjangan Struktural" },
  { field: "jab_khs", table: "jkhs", idField: "jkhs_id", nameField: "nama_jkhs",
    tarifField: "tunj_khs", label: "Jabatan Khusus", tarifLabel: "Tunjangan Khusus" },
  { field: "pendidikan", table: "pendidikan", idField: "pend_id",
    nameField: "nama_pend", tarifField: "tarif_mgjr", label: "Pendidikan",
    tarifLabel: "Tarif Mengajar" },
];

type RefField = (typeof LOOKUPS)[number]["field"];

export class DosenForm {
  rows: DosenRow[] = [];
  options: Partial<Record<MasterTable, MasterRow[]>> = {};
  selectedNii: string | null = null;
  mode: "view" | "insert" | "edit" = "view";
  nii = "";
  nama = "";
  refs: Partial<Record<RefField, number>> = {};
  fieldErrors: { nii: string | null; nama: string | null } = { nii: null, nama: null };
  banner: Banner | null = null;
  private listeners: Array<() => void> = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  async refresh(): Promise<void> {
    try {
      this.rows = await this.api.listDosen();
      for (const lookup of LOOKUPS) {
        this.options[lookup.table] = await this.api.listMaster(lookup.table);
      }
      this.banner = null;
      if (this.selectedNii === null && this.rows.length > 0) {
        this.selectedNii = this.rows[0].nii;
      }
    } catch (error) {
      this.fail(error);
    }
    this.notify();
  }

  select(nii: string): void {
    this.selectedNii = nii;
    this.notify();
  }

  selectedRow(): DosenRow | null {
    return this.rows.find((row) => row.nii === this.selectedNii) ?? null;
  }

  beginInsert(): void {
    this.mode = "insert";
    this.nii = "";
    this.nama = "";
    this.refs = {};
    this.fieldErrors = { nii: null, nama: null };
    this.banner = null;
    this.notify();
  }

  beginEdit(): void {
    const row = this.selectedRow();
    if (!row) return;
    this.mode = "edit";
    this.nii = row.nii;
    this.nama = row.nama_dosen;
    this.refs = {
      golongan: row.golongan,
      jab_fa: row.jab_fa,
      jab_str: row.jab_str,
      jab_khs: row.jab_khs,
      pendidikan: row.pendidikan,
    };
    this.fieldErrors = { nii: null, nama: null };
    this.banner = null;
    this.notify();
  }

  cancel(): void {
    this.mode = "view";
    this.banner = null;
    this.notify();
  }

  setNii(value: string): void {
    this.nii = value;
    this.fieldErrors.nii = widthError("nii", value);
    this.notify();
  }

  setNama(value: string): void {
    this.nama = value;
    this.fieldErrors.nama = widthError("nama_dosen", value);
    this.notify();
  }

  choose(field: RefField, id: number): void {
    this.refs[field] = id;
    this.notify();
  }

  optionRow(field: RefField): MasterRow | null {
    const lookup = LOOKUPS.find((entry) => entry.field === field)!;
    const chosen = this.refs[field];
    if (chosen === undefined) return null;
    const rows = this.options[lookup.table] ?? [];
    return (
      rows.find(
        (row) => (row as unknown as Record<string, number>)[lookup.idField] === chosen,
      ) ?? null
    );
  }

  /** "Rp..." for the amount on the chosen master row, or "-" before a choice. */
  resolvedAmount(field: RefField): string {
    const lookup = LOOKUPS.find((entry) => entry.field === field)!;
    const row = this.optionRow(field);
    if (!row) return "-";
    return formatMoney((row as unknown as Record<string, number>)[lookup.tarifField]);
  }

  /** Required fields: both texts valid and all five combos chosen. */
  canPost(): boolean {
    return (
      this.mode !== "view" &&
      widthError("nii", this.nii) === null &&
      widthError("nama_dosen", this.nama) === null &&
      LOOKUPS.every((lookup) => this.refs[lookup.field] !== undefined)
    );
  }

  async post(): Promise<void> {
    this.fieldErrors.nii = widthError("nii", this.nii);
    this.fieldErrors.nama = widthError("nama_dosen", this.nama);
    if (!this.canPost()) {
      this.notify();
      return;
    }
    const row: DosenRow = {
      nii: this.nii,
      nama_dosen: this.nama,
      golongan: this.refs.golongan!,
      jab_fa: this.refs.jab_fa!,
      jab_str: this.refs.jab_str!,
      jab_khs: this.refs.jab_khs!,
      pendidikan: this.refs.pendidikan!,
    };
    try {
      if (this.mode === "insert") {
        await this.api.insertDosen(row);
      } else {
        await this.api.upsertDosen(row);
      }
      this.mode = "view";
      this.selectedNii = row.nii;
      await this.refresh();
    } catch (error) {
      this.fail(error);
      this.notify();
    }
  }

  async remove(): Promise<void> {
    if (this.selectedNii === null) return;
    try {
      await this.api.deleteDosen(this.selectedNii);
      this.selectedNii = null;
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
