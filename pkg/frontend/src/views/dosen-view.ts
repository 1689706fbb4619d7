/** DOM rendering for the lecturer form with its five lookup combos. */

import { bannerBox, clear, el, fieldError } from "../dom.js";
import { formatMoney } from "../format.js";
import { DosenForm, LOOKUPS } from "../forms/dosen.js";

export function mountDosenForm(root: HTMLElement, form: DosenForm): void {
  form.onChange(() => render(root, form));
  render(root, form);
  void form.refresh();
}

function render(root: HTMLElement, form: DosenForm): void {
  clear(root);
  root.append(el("h2", {}, ["Master Data Dosen"]));
  root.append(bannerBox(form.banner, () => void form.refresh()));

  const editing = form.mode !== "view";
  const selected = form.selectedRow();

  const niiInput = el("input", {
    value: editing ? form.nii : selected?.nii ?? "",
    maxlength: "10",
    "data-field": "nii",
  });
  niiInput.disabled = !editing || form.mode === "edit";
  niiInput.addEventListener("input", () => form.setNii(niiInput.value));

  const namaInput = el("input", {
    value: editing ? form.nama : selected?.nama_dosen ?? "",
    maxlength: "25",
    "data-field": "nama_dosen",
  });
  namaInput.disabled = !editing;
  namaInput.addEventListener("input", () => form.setNama(namaInput.value));

  const fields = el("div", { class: "fields" }, [
    el("label", {}, ["NII / NIPNS"]),
    niiInput,
    fieldError(form.fieldErrors.nii),
    el("label", {}, ["Nama Dosen"]),
    namaInput,
    fieldError(form.fieldErrors.nama),
  ]);

  for (const lookup of LOOKUPS) {
    const select = el("select", { "data-field": lookup.field });
    select.append(el("option", { value: "" }, ["-- pilih --"]));
    const current = editing ? form.refs[lookup.field]
      : selected?.[lookup.field];
    for (const row of form.options[lookup.table] ?? []) {
      const record = row as unknown as Record<string, string | number>;
      const option = el("option", { value: String(record[lookup.idField]) }, [
        String(record[lookup.nameField]),
      ]);
      if (record[lookup.idField] === current) option.selected = true;
      select.append(option);
    }
    select.disabled = !editing;
    select.addEventListener("change", () => {
      if (select.value) form.choose(lookup.field, Number(select.value));
    });
    const shown = editing
      ? form.resolvedAmount(lookup.field)
      : resolvedForRow(form, lookup, selected?.[lookup.field]);
    fields.append(
      el("label", {}, [lookup.label]),
      select,
      el("span", { class: "resolved", "data-resolved": lookup.field }, [
        `${lookup.tarifLabel}: ${shown}`,
      ]),
    );
  }
  root.append(fields);

  const nav = el("div", { class: "navigator" });
  const buttons: Array<[string, () => void, boolean]> = [
    ["Insert", () => form.beginInsert(), editing],
    ["Edit", () => form.beginEdit(), editing || !selected],
    ["Delete", () => void form.remove(), editing || !selected],
    ["Post", () => void form.post(), !editing || !form.canPost()],
    ["Cancel", () => form.cancel(), !editing],
    ["Refresh", () => void form.refresh(), editing],
  ];
  for (const [label, handler, disabled] of buttons) {
    const button = el("button", { type: "button" }, [label]);
    button.disabled = disabled;
    button.addEventListener("click", handler);
    nav.append(button);
  }
  root.append(nav);

  const table = el("table", { class: "grid" });
  table.append(el("tr", {}, [
    el("th", {}, ["NII"]), el("th", {}, ["NamaDosen"]), el("th", {}, ["Golongan"]),
    el("th", {}, ["JabFA"]), el("th", {}, ["JabStr"]), el("th", {}, ["JabKhs"]),
    el("th", {}, ["Pend"]),
  ]));
  for (const row of form.rows) {
    const tr = el("tr", { class: row.nii === form.selectedNii ? "selected" : "" }, [
      el("td", {}, [row.nii]),
      el("td", {}, [row.nama_dosen]),
      el("td", {}, [String(row.golongan)]),
      el("td", {}, [String(row.jab_fa)]),
      el("td", {}, [String(row.jab_str)]),
      el("td", {}, [String(row.jab_khs)]),
      el("td", {}, [String(row.pendidikan)]),
    ]);
    tr.addEventListener("click", () => form.select(row.nii));
    table.append(tr);
  }
  root.append(table);
}

function resolvedForRow(
  form: DosenForm,
  lookup: (typeof LOOKUPS)[number],
  id: number | undefined,
): string {
  if (id === undefined) return "-";
  const rows = form.options[lookup.table] ?? [];
  const row = rows.find(
    (candidate) =>
      (candidate as unknown as Record<string, number>)[lookup.idField] === id,
  );
  if (!row) return "-";
  return formatMoney((row as unknown as Record<string, number>)[lookup.tarifField]);
}
