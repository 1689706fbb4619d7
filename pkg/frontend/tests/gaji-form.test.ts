import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { GajiForm } from "../src/forms/gaji.js";
import { FakeService, SEED, seedListRoutes, type Route } from "./helpers.js";

const PAPER_PREVIEW = {
  ...SEED.profil152,
  periode: "2006-06",
  sks_mgjr: 100,
  honor_kotor: 1750000,
  pajak: 37500,
  hon_mgjr: 1712500,
  gaji_kotor: 3292500,
  pot_kop: 5000,
  arisan: 255000,
  pot_lain: 0,
  gaji_bersih: 3032500,
};

function makeForm(extraRoutes: Route[] = []) {
  // extras first: dynamic routes must shadow the static seed listings
  const service = new FakeService([
    ...extraRoutes,
    {
      method: "GET", path: /\/api\/dosen\/020209152\/profil$/,
      handle: () => ({ json: SEED.profil152 }),
    },
    ...seedListRoutes(),
  ]);
  const form = new GajiForm(new ApiClient("", service.fetch));
  return { service, form };
}

async function enterPaperInputs(form: GajiForm): Promise<void> {
  await form.chooseNii("020209152");
  await form.setPeriode("2006-06");
  await form.setInput("sks", "100");
  await form.setInput("pajak", "37500");
  await form.setInput("pot_kop", "5000");
  await form.setInput("arisan", "255000");
  await form.setInput("pot_lain", "0");
}

describe("gaji form", () => {
  it("selecting a lecturer fills the tariff fields from /profil", async () => {
    const { service, form } = makeForm();
    await form.refresh();
    await form.chooseNii("020209152");
    expect(service.sent("GET", /profil$/)).toHaveLength(1);
    expect(form.profil?.gapok).toBe(1100000);
    expect(form.profil?.tarif_mgjr).toBe(17500);
  });

  it("shows the service's derived values for the reference inputs", async () => {
    const { form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({ json: PAPER_PREVIEW }),
      },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    expect(form.preview?.honor_kotor).toBe(1750000);
    expect(form.preview?.hon_mgjr).toBe(1712500);
    expect(form.preview?.gaji_bersih).toBe(3032500);
  });

  it("renders exactly what the service returns, never local arithmetic", async () => {
    // the served values are deliberately inconsistent with the inputs:
    // any locally computed figure would differ from all three
    const { service, form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({
          json: { ...PAPER_PREVIEW, honor_kotor: 111, hon_mgjr: 222, gaji_bersih: 333 },
        }),
      },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    expect(form.preview?.honor_kotor).toBe(111);
    expect(form.preview?.hon_mgjr).toBe(222);
    expect(form.preview?.gaji_bersih).toBe(333);
    const previews = service.sent("POST", /slips\/preview$/);
    expect(previews.length).toBeGreaterThan(0);
    expect(previews.at(-1)!.body).toEqual({
      periode: "2006-06", nii: "020209152", sks_mgjr: 100,
      pajak: 37500, pot_kop: 5000, arisan: 255000, pot_lain: 0,
    });
  });

  it("re-previews on every input edit", async () => {
    const { service, form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({ json: PAPER_PREVIEW }),
      },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    const count = service.sent("POST", /preview$/).length;
    await form.setInput("sks", "101");
    expect(service.sent("POST", /preview$/).length).toBe(count + 1);
  });

  it("without a preview response the derived fields stay empty", async () => {
    const { form } = makeForm();
    await form.refresh();
    await form.chooseNii("020209152");
    // no periode yet: nothing to preview, nothing displayed
    expect(form.preview).toBeNull();
    expect(form.canPost()).toBe(false);
  });

  it("maps a tax-exceeds-honorarium rejection onto the pajak field", async () => {
    const { form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: (body) => {
          const input = body as { pajak: number };
          if (input.pajak > 1750000) {
            return {
              status: 400,
              json: { code: "validation", message: "pajak 2000000 exceeds honor_kotor 1750000" },
            };
          }
          return { json: PAPER_PREVIEW };
        },
      },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    await form.setInput("pajak", "2000000");
    expect(form.preview).toBeNull();
    expect(form.fieldErrors.pajak).toContain("pajak");
  });

  it("shows a duplicate-period conflict on the periode field", async () => {
    const { form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({ json: PAPER_PREVIEW }),
      },
      {
        method: "POST", path: /\/api\/slips$/,
        handle: () => ({
          status: 409,
          json: { code: "conflict", message: "slip for nii 020209152 periode 2006-06 already exists" },
        }),
      },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    await form.post();
    expect(form.fieldErrors.periode).toContain("already exists");
  });

  it("posting stores the slip and re-reads the grid", async () => {
    let slips: unknown[] = [];
    const { service, form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({ json: PAPER_PREVIEW }),
      },
      {
        method: "POST", path: /\/api\/slips$/,
        handle: (body) => {
          const stored = { no_slip: 1, nama_dosen: "Leon Andretti Abdillah",
                           gapok: 1100000, tunj_fa: 480000, tunj_str: 0, tunj_khs: 0,
                           hon_mgjr: 1712500, gaji_bersih: 3032500,
                           ...(body as object) };
          slips = [stored];
          return { status: 201, json: stored };
        },
      },
      { method: "GET", path: /\/api\/slips$/, handle: () => ({ json: slips }) },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    expect(form.canPost()).toBe(true);
    await form.post();
    expect(service.sent("POST", /\/api\/slips$/)).toHaveLength(1);
    expect(form.lastSaved?.no_slip).toBe(1);
    expect(form.slips).toHaveLength(1);
  });

  it("malformed numeric entry is caught client-side", async () => {
    const { service, form } = makeForm([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({ json: PAPER_PREVIEW }),
      },
    ]);
    await form.refresh();
    await enterPaperInputs(form);
    const before = service.sent("POST", /preview$/).length;
    await form.setInput("sks", "-3");
    expect(form.fieldErrors.sks).not.toBeUndefined();
    expect(form.preview).toBeNull();
    // the bad edit never reached the service
    expect(service.sent("POST", /preview$/)).toHaveLength(before);
  });
});
