import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { DosenForm } from "../src/forms/dosen.js";
import { FakeService, seedListRoutes } from "./helpers.js";

function makeForm() {
  const service = new FakeService(seedListRoutes());
  const form = new DosenForm(new ApiClient("", service.fetch));
  return { service, form };
}

describe("dosen form", () => {
  it("loads combo options from live list calls", async () => {
    const { service, form } = makeForm();
    await form.refresh();
    for (const table of ["golongan", "jfa", "jstr", "jkhs", "pendidikan"]) {
      expect(service.sent("GET", new RegExp(`/api/${table}$`))).toHaveLength(1);
      expect(form.options[table as keyof typeof form.options]).not.toHaveLength(0);
    }
  });

  it("shows the reference amounts when the reference rows are chosen", async () => {
    const { form } = makeForm();
    await form.refresh();
    form.beginInsert();
    form.choose("golongan", 2);
    form.choose("jab_fa", 1);
    form.choose("jab_str", 1);
    form.choose("jab_khs", 1);
    form.choose("pendidikan", 3);
    expect(form.resolvedAmount("golongan")).toBe("Rp1.100.000");
    expect(form.resolvedAmount("jab_fa")).toBe("Rp480.000");
    expect(form.resolvedAmount("jab_str")).toBe("Rp0");
    expect(form.resolvedAmount("jab_khs")).toBe("Rp0");
    expect(form.resolvedAmount("pendidikan")).toBe("Rp17.500");
  });

  it("blocks posting until every combo has a selection", async () => {
    const { service, form } = makeForm();
    await form.refresh();
    form.beginInsert();
    form.setNii("020209154");
    form.setNama("Dosen Baru");
    form.choose("golongan", 2);
    expect(form.canPost()).toBe(false);
    await form.post();
    expect(service.sent("POST", /dosen$/)).toHaveLength(0);
  });

  it("posts the exact wire row once everything is chosen", async () => {
    const posting = new FakeService([
      ...seedListRoutes(),
      {
        method: "POST", path: /\/api\/dosen$/,
        handle: (body) => ({ status: 201, json: body }),
      },
    ]);
    const form = new DosenForm(new ApiClient("", posting.fetch));
    await form.refresh();
    form.beginInsert();
    form.setNii("020209154");
    form.setNama("Dosen Baru");
    form.choose("golongan", 2);
    form.choose("jab_fa", 1);
    form.choose("jab_str", 1);
    form.choose("jab_khs", 1);
    form.choose("pendidikan", 3);
    expect(form.canPost()).toBe(true);
    await form.post();
    expect(posting.sent("POST", /dosen$/)[0].body).toEqual({
      nii: "020209154", nama_dosen: "Dosen Baru",
      golongan: 2, jab_fa: 1, jab_str: 1, jab_khs: 1, pendidikan: 3,
    });
  });

  it("enforces the NII and name widths client-side", async () => {
    const { form } = makeForm();
    await form.refresh();
    form.beginInsert();
    form.setNii("0".repeat(11));
    expect(form.fieldErrors.nii).toMatch(/10/);
    form.setNama("n".repeat(26));
    expect(form.fieldErrors.nama).toMatch(/25/);
    expect(form.canPost()).toBe(false);
  });

  it("grid order comes straight from the service", async () => {
    const { form } = makeForm();
    await form.refresh();
    expect(form.rows.map((row) => row.nii)).toEqual([
      "020209151", "020209152", "020209153",
    ]);
  });
});
