// @vitest-environment jsdom
/** Mounted-view smoke tests: the DOM layer renders controller state and
 *  the numbers on screen are the ones the (fake) service returned. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { DosenForm } from "../src/forms/dosen.js";
import { GajiForm } from "../src/forms/gaji.js";
import { MASTER_FORMS, MasterForm } from "../src/forms/master.js";
import { ReportsPage } from "../src/reports.js";
import { mountDosenForm } from "../src/views/dosen-view.js";
import { mountGajiForm } from "../src/views/gaji-view.js";
import { mountMasterForm } from "../src/views/master-view.js";
import { mountReportsPage } from "../src/views/reports-view.js";
import { FakeService, SEED, seedListRoutes } from "./helpers.js";

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = "<div id='root'></div>";
  root = document.getElementById("root")!;
});

describe("mounted views", () => {
  it("master form shows the grid with Rp amounts", async () => {
    const service = new FakeService(seedListRoutes());
    mountMasterForm(root, new MasterForm(new ApiClient("", service.fetch),
                                         MASTER_FORMS.golongan));
    await flush();
    expect(root.textContent).toContain("Master Data Golongan");
    expect(root.textContent).toContain("III B");
    expect(root.textContent).toContain("Rp1.100.000");
  });

  it("dosen form shows resolved amounts for the selected row", async () => {
    const service = new FakeService(seedListRoutes());
    const form = new DosenForm(new ApiClient("", service.fetch));
    mountDosenForm(root, form);
    await flush();
    form.select("020209152");
    expect(root.textContent).toContain("Gaji Pokok: Rp1.100.000");
    expect(root.textContent).toContain("Tunjangan Fung. Akademik: Rp480.000");
    expect(root.textContent).toContain("Tarif Mengajar: Rp17.500");
  });

  it("gaji form renders served derived values read-only", async () => {
    const service = new FakeService([
      {
        method: "POST", path: /\/api\/slips\/preview$/,
        handle: () => ({
          json: {
            ...SEED.profil152, periode: "2006-06", sks_mgjr: 100,
            honor_kotor: 1750000, pajak: 37500, hon_mgjr: 1712500,
            gaji_kotor: 3292500, pot_kop: 5000, arisan: 255000, pot_lain: 0,
            gaji_bersih: 3032500,
          },
        }),
      },
      {
        method: "GET", path: /\/api\/dosen\/020209152\/profil$/,
        handle: () => ({ json: SEED.profil152 }),
      },
      ...seedListRoutes(),
    ]);
    const form = new GajiForm(new ApiClient("", service.fetch));
    mountGajiForm(root, form);
    await flush();
    await form.chooseNii("020209152");
    await form.setPeriode("2006-06");
    await form.setInput("sks", "100");
    await form.setInput("pajak", "37500");
    await form.setInput("pot_kop", "5000");
    await form.setInput("arisan", "255000");
    const derived = root.querySelectorAll("output.derived");
    expect([...derived].map((node) => node.textContent)).toEqual([
      "Rp1.750.000", "Rp1.712.500", "Rp3.032.500",
    ]);
  });

  it("reports page lists five reports and renders fetched text", async () => {
    const service = new FakeService([
      {
        method: "GET", path: /\/api\/reports\/daftar_dosen\?format=text$/,
        handle: () => ({ text: "Daftar Dosen\n(3 baris)\n" }),
      },
    ]);
    const page = new ReportsPage(new ApiClient("", service.fetch));
    mountReportsPage(root, page);
    page.choose("daftar_dosen");
    await page.load();
    expect(root.querySelectorAll(".report-list li")).toHaveLength(5);
    expect(root.querySelector("pre.report-text")!.textContent).toContain("(3 baris)");
  });
});
