/** DOM rendering for one master form (shared by all five tables). */

import { bannerBox, clear, el, fieldError } from "../dom.js";
import { formatMoney } from "../format.js";
import { MasterForm } from "../forms/master.js";

export function mountMasterForm(root: HTMLElement, form: MasterForm): void {
  form.onChange(() => render(root, form));
  render(root, form);
  void form.refresh();
}

function render(root: HTMLElement, form: MasterForm): void {
  clear(root);
  const cfg = form.config;
  root.append(el("h2", {}, [`Master Data ${cfg.title}`]));
  root.append(bannerBox(form.banner, () => void form.refresh()));

  const editing = form.mode !== "view";
  const selected = form.selectedRow();

  const namaInput = el("input", {
    value: editing ? form.nama : selected ? form.rowNama(selected) : "",
    maxlength: String(cfg.nameField === "nama_gol" ? 25 : 30),
    "data-field": "nama",
  });
  namaInput.disabled = !editing;
  namaInput.addEventListener("input", () => form.setNama(namaInput.value));

  const tarifInput = el("input", {
    value: editing ? form.tarif : selected ? String(form.rowTarif(selected)) : "",
    inputmode: "numeric",
    "data-field": "tarif",
  });
  tarifInput.disabled = !editing;
  tarifInput.addEventListener("input", () => form.setTarif(tarifInput.value));

  root.append(
    el("div", { class: "fields" }, [
      el("label", {}, [`No ${cfg.title}`]),
      el("input", {
        value: selected ? String(form.rowId(selected)) : "",
        disabled: "disabled",
      }),
      el("span", {}, []),
      el("label", {}, [cfg.nameLabel]),
      namaInput,
      fieldError(form.fieldErrors.nama),
      el("label", {}, [cfg.tarifLabel]),
      tarifInput,
      fieldError(form.fieldErrors.tarif),
    ]),
  );

  const nav = el("div", { class: "navigator" });
  const buttons: Array<[string, () => void, boolean]> = [
    ["|<", () => form.navigate("first"), editing],
    ["<", () => form.navigate("prev"), editing],
    [">", () => form.navigate("next"), editing],
    [">|", () => form.navigate("last"), editing],
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
  table.append(
    el("tr", {}, [
      el("th", {}, ["No"]),
      el("th", {}, [cfg.nameLabel]),
      el("th", {}, [cfg.tarifLabel]),
    ]),
  );
  for (const row of form.rows) {
    const id = form.rowId(row);
    const tr = el("tr", { class: id === form.selectedId ? "selected" : "" }, [
      el("td", {}, [String(id)]),
      el("td", {}, [form.rowNama(row)]),
      el("td", { class: "money" }, [formatMoney(form.rowTarif(row))]),
    ]);
    tr.addEventListener("click", () => form.select(id));
    table.append(tr);
  }
  root.append(table);
}
