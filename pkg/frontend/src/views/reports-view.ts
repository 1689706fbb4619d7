/** DOM rendering for the reports page. */

import { bannerBox, clear, el } from "../dom.js";
import { REPORTS, ReportsPage } from "../reports.js";

export function mountReportsPage(root: HTMLElement, page: ReportsPage): void {
  page.onChange(() => render(root, page));
  render(root, page);
}

function render(root: HTMLElement, page: ReportsPage): void {
  clear(root);
  root.append(el("h2", {}, ["Laporan"]));
  root.append(bannerBox(page.banner, () => void page.retry()));

  const list = el("ul", { class: "report-list" });
  for (const report of REPORTS) {
    const link = el("a", {
      href: `#/laporan/${report.name}`,
      class: report.name === page.selected.name ? "active" : "",
    }, [report.label]);
    link.addEventListener("click", (event) => {
      event.preventDefault();
      page.choose(report.name);
    });
    list.append(el("li", {}, [link]));
  }
  root.append(list);

  const controls = el("div", { class: "fields" });
  if (page.selected.needsPeriode) {
    const periode = el("input", {
      value: page.periode, placeholder: "YYYY-MM", "data-field": "periode",
    });
    periode.addEventListener("change", () => page.setPeriode(periode.value));
    controls.append(el("label", {}, ["Periode"]), periode, el("span", {}, []));
  }
  if (page.selected.needsNoSlip) {
    const noSlip = el("input", {
      value: page.noSlip, inputmode: "numeric", "data-field": "no_slip",
    });
    noSlip.addEventListener("change", () => page.setNoSlip(noSlip.value));
    controls.append(el("label", {}, ["No Slip"]), noSlip, el("span", {}, []));
  }
  root.append(controls);

  const show = el("button", { type: "button" }, ["Tampilkan"]);
  show.addEventListener("click", () => void page.load());
  const download = el("a", { href: page.csvUrl(), download: "" }, ["Unduh CSV"]);
  root.append(el("div", { class: "navigator" }, [show, download]));

  if (page.text !== null) {
    root.append(el("pre", { class: "report-text" }, [page.text]));
  }
}
