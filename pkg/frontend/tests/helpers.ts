/** A scriptable fetch double that records every request the UI makes. */

import type { FetchLike } from "../src/api.js";

export interface RecordedRequest {
  method: string;
  path: string;
  body: unknown;
}

export interface Route {
  method: string;
  path: RegExp;
  handle: (body: unknown, match: RegExpMatchArray) => { status?: number; json?: unknown; text?: string };
}

export class FakeService {
  requests: RecordedRequest[] = [];

  constructor(private readonly routes: Route[]) {}

  fetch: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    this.requests.push({ method, path: url, body });
    for (const route of this.routes) {
      const match = url.match(route.path);
      if (match && route.method === method) {
        const result = route.handle(body, match);
        const status = result.status ?? 200;
        if (result.text !== undefined) {
          return new Response(result.text, {
            status,
            headers: { "content-type": "text/plain" },
          });
        }
        return new Response(JSON.stringify(result.json ?? {}), {
          status,
          headers: { "content-type": "application/json" },
        });
      }
    }
    throw new Error(`no route for ${method} ${url}`);
  };

  sent(method: string, pattern: RegExp): RecordedRequest[] {
    return this.requests.filter(
      (request) => request.method === method && pattern.test(request.path),
    );
  }
}

/** The reference dataset as the service would list it. */
export const SEED = {
  golongan: [
    { gol_id: 1, nama_gol: "(unnamed-golongan-1)", gapok: 0 },
    { gol_id: 2, nama_gol: "III B", gapok: 1100000 },
  ],
  jfa: [
    { jfa_id: 1, nama_jfa: "Asisten Ahli", tunj_fa: 480000 },
    { jfa_id: 2, nama_jfa: "(unnamed-jfa-2)", tunj_fa: 0 },
    { jfa_id: 3, nama_jfa: "(unnamed-jfa-3)", tunj_fa: 0 },
    { jfa_id: 4, nama_jfa: "(unnamed-jfa-4)", tunj_fa: 0 },
    { jfa_id: 5, nama_jfa: "(unnamed-jfa-5)", tunj_fa: 0 },
  ],
  jstr: [{ jstr_id: 1, nama_jstr: "Dosen", tunj_str: 0 }],
  jkhs: [{ jkhs_id: 1, nama_jkhs: "Level 0", tunj_khs: 0 }],
  pendidikan: [
    { pend_id: 1, nama_pend: "(unnamed-pendidikan-1)", tarif_mgjr: 0 },
    { pend_id: 2, nama_pend: "(unnamed-pendidikan-2)", tarif_mgjr: 0 },
    { pend_id: 3, nama_pend: "S2 - Magister", tarif_mgjr: 17500 },
  ],
  dosen: [
    { nii: "020209151", nama_dosen: "Liliya Dewi Susanawati",
      golongan: 2, jab_fa: 1, jab_str: 1, jab_khs: 1, pendidikan: 3 },
    { nii: "020209152", nama_dosen: "Leon Andretti Abdillah",
      golongan: 2, jab_fa: 1, jab_str: 1, jab_khs: 1, pendidikan: 3 },
    { nii: "020209153", nama_dosen: "Endang Lestari",
      golongan: 2, jab_fa: 5, jab_str: 1, jab_khs: 1, pendidikan: 3 },
  ],
  profil152: {
    nii: "020209152", nama_dosen: "Leon Andretti Abdillah",
    gapok: 1100000, tunj_fa: 480000, tunj_str: 0, tunj_khs: 0, tarif_mgjr: 17500,
  },
};

/** Routes for listing the seeded masters and lecturers. */
export function seedListRoutes(): Route[] {
  return [
    { method: "GET", path: /\/api\/golongan$/, handle: () => ({ json: SEED.golongan }) },
    { method: "GET", path: /\/api\/jfa$/, handle: () => ({ json: SEED.jfa }) },
    { method: "GET", path: /\/api\/jstr$/, handle: () => ({ json: SEED.jstr }) },
    { method: "GET", path: /\/api\/jkhs$/, handle: () => ({ json: SEED.jkhs }) },
    { method: "GET", path: /\/api\/pendidikan$/, handle: () => ({ json: SEED.pendidikan }) },
    { method: "GET", path: /\/api\/dosen$/, handle: () => ({ json: SEED.dosen }) },
    { method: "GET", path: /\/api\/slips$/, handle: () => ({ json: [] }) },
  ];
}
