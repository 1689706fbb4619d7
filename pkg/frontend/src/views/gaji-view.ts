/** DOM rendering for the payroll slip form with live-derived fields. */

import { bannerBox, clear, el, fieldError } from "../dom.js";
import { formatMoney } from "../format.js";
import { GajiForm } from "../forms/gaji.js";

export function mountGajiForm(root: HTMLElement, form: GajiForm): void {
  form.onChange(() => render(root, form));
  render(root, form);
  void form.refresh();
}

const INPUT_ROWS: Array<{ field: "sks" | "pajak" | "pot_kop" | "arisan" | "pot_lain"; label: string }> = [
  { field: "sks", label: "Sks Mengajar" },
  { field: "pajak", label: "Pajak" },
  { field: "pot_kop", label: "Potongan Koperasi" },
  { field: "arisan", label: "Arisan" },
  { field: "pot_lain", label: "Lainnya" },
];

function money(amount: number | undefined | null): string {
  return amount === undefined || amount === null ? "-" : formatMoney(amount);
}

function render(root: HTMLElement, form: GajiForm): void {
  clear(root);
  root.append(el("h2", {}, ["Gaji Dosen"]));
  root.append(bannerBox(form.banner, () => void form.refresh()));

  const niiSelect = el("select", { "data-field": "nii" });
  niiSelect.append(el("option", { value: "" }, ["-- pilih dosen --"]));
  for (const dosen of form.dosenOptions) {
    const option = el("option", { value: dosen.nii }, [
      `${dosen.nii} / ${dosen.nama_dosen}`,
    ]);
    if (dosen.nii === form.nii) option.selected = true;
    niiSelect.append(option);
  }
  niiSelect.addEventListener("change", () => {
    if (niiSelect.value) void form.chooseNii(niiSelect.value);
  });

  const periodeInput = el("input", {
    value: form.periode,
    placeholder: "YYYY-MM atau DD/MM/YYYY",
    maxlength: "15",
    "data-field": "periode",
  });
  periodeInput.addEventListener("change", () => void form.setPeriode(periodeInput.value));

  const left = el("div", { class: "fields" }, [
    el("label", {}, ["Periode"]),
    periodeInput,
    fieldError(form.fieldErrors.periode),
  ]);
  for (const { field, label } of INPUT_ROWS) {
    const input = el("input", {
      value: form.inputs[field],
      inputmode: "numeric",
      "data-field": field,
    });
    input.addEventListener("change", () => void form.setInput(field, input.value));
    left.append(el("label", {}, [label]), input, fieldError(form.fieldErrors[field]));
  }

  const right = el("div", { class: "fields" }, [
    el("label", {}, ["NII / NIPNS"]),
    niiSelect,
    fieldError(form.fieldErrors.nii),
  ]);
  const tariff: Array<[string, number | undefined]> = [
    ["Gapok", form.profil?.gapok],
    ["Tunjangan F. Akademik", form.profil?.tunj_fa],
    ["Tunjangan Struktural", form.profil?.tunj_str],
    ["Tunjangan Khusus", form.profil?.tunj_khs],
    ["Tarif Mengajar", form.profil?.tarif_mgjr],
  ];
  for (const [label, amount] of tariff) {
    right.append(
      el("label", {}, [label]),
      el("output", { class: "readonly" }, [money(amount)]),
      el("span", {}, []),
    );
  }
  // derived fields: rendered only from the service's preview response
  const derived: Array<[string, string, number | undefined]> = [
    ["Honor Kotor", "honor_kotor", form.preview?.honor_kotor],
    ["Honor Mengajar", "hon_mgjr", form.preview?.hon_mgjr],
    ["Gaji Bersih", "gaji_bersih", form.preview?.gaji_bersih],
  ];
  for (const [label, key, amount] of derived) {
    right.append(
      el("label", {}, [label]),
      el("output", { class: "readonly derived", "data-derived": key }, [money(amount)]),
      el("span", {}, []),
    );
  }

  root.append(el("div", { class: "columns" }, [left, right]));

  const post = el("button", { type: "button" }, ["Post"]);
  post.disabled = !form.canPost();
  post.addEventListener("click", () => void form.post());
  root.append(el("div", { class: "navigator" }, [post]));

  if (form.lastSaved) {
    root.append(
      el("p", { class: "saved" }, [
        `Tersimpan: slip no ${form.lastSaved.no_slip}, gaji bersih ` +
          `${formatMoney(form.lastSaved.gaji_bersih)}`,
      ]),
    );
  }

  const table = el("table", { class: "grid" });
  table.append(el("tr", {}, [
    el("th", {}, ["No Slip Gaji"]), el("th", {}, ["Periode"]), el("th", {}, ["NII"]),
    el("th", {}, ["Gapok"]), el("th", {}, ["TunjFA"]), el("th", {}, ["TunjStr"]),
    el("th", {}, ["TunjKhs"]), el("th", {}, ["SksMgjr"]), el("th", {}, ["Gaji Bersih"]),
  ]));
  for (const slip of form.slips) {
    table.append(el("tr", {}, [
      el("td", {}, [String(slip.no_slip)]),
      el("td", {}, [slip.periode]),
      el("td", {}, [slip.nii]),
      el("td", { class: "money" }, [formatMoney(slip.gapok)]),
      el("td", { class: "money" }, [formatMoney(slip.tunj_fa)]),
      el("td", { class: "money" }, [formatMoney(slip.tunj_str)]),
      el("td", { class: "money" }, [formatMoney(slip.tunj_khs)]),
      el("td", {}, [String(slip.sks_mgjr)]),
      el("td", { class: "money" }, [formatMoney(slip.gaji_bersih)]),
    ]));
  }
  root.append(table);
}
