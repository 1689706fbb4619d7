/**
 * Typed client for the payroll REST service.
 *
 * The fetch implementation is injectable so tests can intercept every
 * request; the UI renders only numbers that arrived through this client,
 * never locally computed ones.
 */

import type {
  ApiErrorBody,
  DosenRow,
  MasterRow,
  MasterTable,
  ProfilTarif,
  SlipInput,
  SlipPreview,
  SlipRow,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Service-reported failure (HTTP status + structured body). */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: ApiErrorBody["code"],
    message: string,
    readonly details: string[] = [],
  ) {
    super(message);
  }
}

/** Transport failure (server unreachable); the UI offers a retry. */
export class NetworkError extends Error {}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (cause) {
      throw new NetworkError(`cannot reach the service: ${String(cause)}`);
    }
    if (!response.ok) {
      let body: Partial<ApiErrorBody> = {};
      try {
        body = await response.json();
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(
        response.status,
        body.code ?? "internal",
        body.message ?? `request failed with status ${response.status}`,
        body.details ?? [],
      );
    }
    return response.json() as Promise<T>;
  }

  private post<T>(path: string, payload: unknown, method = "POST"): Promise<T> {
    return this.request<T>(path, {
      method,
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<{ status: string }> {
    return this.request("/api/health");
  }

  listMaster(table: MasterTable): Promise<MasterRow[]> {
    return this.request(`/api/${table}`);
  }

  insertMaster(table: MasterTable, body: Record<string, unknown>): Promise<MasterRow> {
    return this.post(`/api/${table}`, body);
  }

  updateMaster(
    table: MasterTable,
    id: number,
    body: Record<string, unknown>,
  ): Promise<MasterRow> {
    return this.post(`/api/${table}/${id}`, body, "PUT");
  }

  deleteMaster(table: MasterTable, id: number): Promise<{ deleted: number }> {
    return this.request(`/api/${table}/${id}`, { method: "DELETE" });
  }

  listDosen(): Promise<DosenRow[]> {
    return this.request("/api/dosen");
  }

  insertDosen(row: DosenRow): Promise<DosenRow> {
    return this.post("/api/dosen", row);
  }

  upsertDosen(row: DosenRow): Promise<DosenRow> {
    return this.post(`/api/dosen/${encodeURIComponent(row.nii)}`, row, "PUT");
  }

  deleteDosen(nii: string): Promise<{ deleted: string }> {
    return this.request(`/api/dosen/${encodeURIComponent(nii)}`, { method: "DELETE" });
  }

  profil(nii: string): Promise<ProfilTarif> {
    return this.request(`/api/dosen/${encodeURIComponent(nii)}/profil`);
  }

  listSlips(periode?: string): Promise<SlipRow[]> {
    const query = periode ? `?periode=${encodeURIComponent(periode)}` : "";
    return this.request(`/api/slips${query}`);
  }

  previewSlip(input: SlipInput): Promise<SlipPreview> {
    return this.post("/api/slips/preview", input);
  }

  createSlip(input: SlipInput): Promise<SlipRow> {
    return this.post("/api/slips", input);
  }

  reportText(name: string, params: Record<string, string>): Promise<string> {
    const query = new URLSearchParams({ ...params, format: "text" });
    return this.requestText(`/api/reports/${name}?${query}`);
  }

  reportCsvUrl(name: string, params: Record<string, string>): string {
    const query = new URLSearchParams({ ...params, format: "csv" });
    return `${this.baseUrl}/api/reports/${name}?${query}`;
  }

  private async requestText(path: string): Promise<string> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path);
    } catch (cause) {
      throw new NetworkError(`cannot reach the service: ${String(cause)}`);
    }
    if (!response.ok) {
      let body: Partial<ApiErrorBody> = {};
      try {
        body = await response.json();
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(
        response.status,
        body.code ?? "internal",
        body.message ?? `request failed with status ${response.status}`,
        body.details ?? [],
      );
    }
    return response.text();
  }
}
