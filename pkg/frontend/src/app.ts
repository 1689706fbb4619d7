/** Entry point: menu bar and hash routing to the seven forms + reports. */

import { ApiClient } from "./api.js";
import { clear, el } from "./dom.js";
import { DosenForm } from "./forms/dosen.js";
import { GajiForm } from "./forms/gaji.js";
import { MASTER_FORMS, MasterForm } from "./forms/master.js";
import { ReportsPage } from "./reports.js";
import { mountDosenForm } from "./views/dosen-view.js";
import { mountGajiForm } from "./views/gaji-view.js";
import { mountMasterForm } from "./views/master-view.js";
import { mountReportsPage } from "./views/reports-view.js";
import type { MasterTable } from "./types.js";

const MENU: Array<{ hash: string; label: string }> = [
  { hash: "#/golongan", label: "Golongan" },
  { hash: "#/jfa", label: "Jab. Fungsional" },
  { hash: "#/jstr", label: "Jab. Struktural" },
  { hash: "#/jkhs", label: "Jab. Khusus" },
  { hash: "#/pendidikan", label: "Pendidikan" },
  { hash: "#/dosen", label: "Dosen" },
  { hash: "#/gaji", label: "Gaji" },
  { hash: "#/laporan", label: "Laporan" },
];

function renderMenu(nav: HTMLElement, current: string): void {
  clear(nav);
  const clock = el("span", { class: "clock" }, [new Date().toLocaleString()]);
  const items = MENU.map(({ hash, label }) =>
    el("a", { href: hash, class: hash === current ? "active" : "" }, [label]),
  );
  nav.append(el("strong", {}, ["Menu Utama"]), ...items, clock);
}

function route(api: ApiClient, main: HTMLElement, nav: HTMLElement): void {
  const hash = window.location.hash || "#/dosen";
  renderMenu(nav, hash.split("/").slice(0, 2).join("/"));
  clear(main);
  const root = el("section", { class: "form" });
  main.append(root);

  const table = hash.replace("#/", "").split("/")[0];
  if (table in MASTER_FORMS) {
    mountMasterForm(root, new MasterForm(api, MASTER_FORMS[table as MasterTable]));
  } else if (table === "dosen") {
    mountDosenForm(root, new DosenForm(api));
  } else if (table === "gaji") {
    mountGajiForm(root, new GajiForm(api));
  } else {
    const page = new ReportsPage(api);
    const parts = hash.split("/");
    if (parts.length > 2) page.choose(parts[2]);
    mountReportsPage(root, page);
  }
}

export function start(): void {
  const api = new ApiClient("");
  const nav = document.getElementById("menu")!;
  const main = document.getElementById("main")!;
  window.addEventListener("hashchange", () => route(api, main, nav));
  route(api, main, nav);
}

start();
