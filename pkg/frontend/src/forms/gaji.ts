/**
 * Payroll slip form. Selecting a lecturer fills the tariff fields from
 * the profil endpoint; every input edit calls the preview endpoint and
 * the derived fields (honor kotor, honor mengajar, gaji bersih) render
 * exactly what the service returned. This form never does payroll
 * arithmetic of its own: without a preview response the derived fields
 * stay blank.
 */

import { ApiClient, ApiError, NetworkError } from "../api.js";
import { amountError } from "../format.js";
import type { Banner } from "./master.js";
import type { DosenRow, ProfilTarif, SlipInput, SlipPreview, SlipRow } from "../types.js";

export type GajiField = "periode" | "sks" | "pajak" | "pot_kop" | "arisan" | "pot_lain";

export class GajiForm {
  dosenOptions: DosenRow[] = [];
  slips: SlipRow[] = [];
  nii: string | null = null;
  profil: ProfilTarif | null = null;
  periode = "";
  inputs: Record<Exclude<GajiField, "periode">, string> = {
    sks: "0", pajak: "0", pot_kop: "0", arisan: "0", pot_lain: "0",
  };
  preview: SlipPreview | null = null;
  fieldErrors: Partial<Record<GajiField | "nii", string>> = {};
  banner: Banner | null = null;
  lastSaved: SlipRow | null = null;
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
      this.dosenOptions = await this.api.listDosen();
      this.slips = await this.api.listSlips();
      this.banner = null;
    } catch (error) {
      this.fail(error);
    }
    this.notify();
  }

  async chooseNii(nii: string): Promise<void> {
    this.nii = nii;
    this.preview = null;
    delete this.fieldErrors.nii;
    try {
      this.profil = await this.api.profil(nii);
      this.banner = null;
    } catch (error) {
      this.profil = null;
      this.fail(error);
      this.notify();
      return;
    }
    await this.updatePreview();
  }

  async setPeriode(value: string): Promise<void> {
    this.periode = value;
    delete this.fieldErrors.periode;
    await this.updatePreview();
  }

  async setInput(field: Exclude<GajiField, "periode">, value: string): Promise<void> {
    this.inputs[field] = value;
    const error = amountError(value);
    if (error) {
      this.fieldErrors[field] = error;
      this.preview = null;
      this.notify();
      return;
    }
    delete this.fieldErrors[field];
    await this.updatePreview();
  }

  private currentInput(): SlipInput | null {
    if (this.nii === null || this.periode.length === 0) return null;
    for (const field of ["sks", "pajak", "pot_kop", "arisan", "pot_lain"] as const) {
      if (amountError(this.inputs[field]) !== null) return null;
    }
    return {
      periode: this.periode,
      nii: this.nii,
      sks_mgjr: Number(this.inputs.sks),
      pajak: Number(this.inputs.pajak),
      pot_kop: Number(this.inputs.pot_kop),
      arisan: Number(this.inputs.arisan),
      pot_lain: Number(this.inputs.pot_lain),
    };
  }

  /** Re-derive the read-only fields from the service after any edit. */
  async updatePreview(): Promise<void> {
    const input = this.currentInput();
    if (input === null) {
      this.preview = null;
      this.notify();
      return;
    }
    try {
      this.preview = await this.api.previewSlip(input);
      this.banner = null;
    } catch (error) {
      this.preview = null;
      this.fail(error, { mapToFields: true });
    }
    this.notify();
  }

  canPost(): boolean {
    return this.currentInput() !== null && this.preview !== null;
  }

  async post(): Promise<void> {
    const input = this.currentInput();
    if (input === null) {
      this.notify();
      return;
    }
    try {
      this.lastSaved = await this.api.createSlip(input);
      await this.refresh();
    } catch (error) {
      if (error instanceof ApiError && error.code === "conflict") {
        // one slip per lecturer per period: surface on the periode field
        this.fieldErrors.periode = error.message;
        this.notify();
        return;
      }
      this.fail(error, { mapToFields: true });
      this.notify();
    }
  }

  private fail(error: unknown, opts: { mapToFields?: boolean } = {}): void {
    if (error instanceof ApiError) {
      if (opts.mapToFields && error.code === "validation") {
        const fields: Array<GajiField | "nii"> = [
          "pajak", "periode", "pot_kop", "arisan", "pot_lain", "nii",
        ];
        const hit = fields.find((name) => error.message.includes(name)) ??
          (error.message.includes("sks") ? "sks" : undefined);
        if (hit) {
          this.fieldErrors[hit as GajiField] = error.message;
          return;
        }
      }
      this.banner = { text: error.message, retriable: false };
    } else if (error instanceof NetworkError) {
      this.banner = { text: error.message, retriable: true };
    } else {
      throw error;
    }
  }
}
