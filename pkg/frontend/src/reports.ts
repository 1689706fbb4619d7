/**
 * Reports page: the five reports, each fetched as rendered text from the
 * service, with a CSV download link built from the same parameters.
 * Network failures surface as a retriable banner.
 */

import { ApiClient, ApiError, NetworkError } from "./api.js";
import type { Banner } from "./forms/master.js";

export interface ReportDescriptor {
  name: string;
  label: string;
  needsPeriode: boolean;
  needsNoSlip: boolean;
}

export const REPORTS: ReportDescriptor[] = [
  { name: "slip_gaji", label: "Slip Gaji", needsPeriode: false, needsNoSlip: true },
  { name: "rekap_periode", label: "Rekap Gaji per Periode", needsPeriode: true, needsNoSlip: false },
  { name: "rekap_honor", label: "Rekap Honor Mengajar", needsPeriode: true, needsNoSlip: false },
  { name: "daftar_dosen", label: "Daftar Dosen", needsPeriode: false, needsNoSlip: false },
  { name: "daftar_master", label: "Daftar Tabel Master", needsPeriode: false, needsNoSlip: false },
];

export class ReportsPage {
  selected: ReportDescriptor = REPORTS[3];
  periode = "";
  noSlip = "";
  text: string | null = null;
  banner: Banner | null = null;
  private listeners: Array<() => void> = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  choose(name: string): void {
    const found = REPORTS.find((report) => report.name === name);
    if (found) {
      this.selected = found;
      this.text = null;
      this.banner = null;
    }
    this.notify();
  }

  setPeriode(value: string): void {
    this.periode = value;
    this.notify();
  }

  setNoSlip(value: string): void {
    this.noSlip = value;
    this.notify();
  }

  private params(): Record<string, string> {
    const params: Record<string, string> = {};
    if (this.selected.needsPeriode) params.periode = this.periode;
    if (this.selected.needsNoSlip) params.no_slip = this.noSlip;
    return params;
  }

  async load(): Promise<void> {
    try {
      this.text = await this.api.reportText(this.selected.name, this.params());
      this.banner = null;
    } catch (error) {
      this.text = null;
      if (error instanceof NetworkError) {
        this.banner = { text: error.message, retriable: true };
      } else if (error instanceof ApiError) {
        this.banner = { text: error.message, retriable: false };
      } else {
        throw error;
      }
    }
    this.notify();
  }

  /** Same parameters, CSV format: used as the download link target. */
  csvUrl(): string {
    return this.api.reportCsvUrl(this.selected.name, this.params());
  }

  retry(): Promise<void> {
    return this.load();
  }
}
