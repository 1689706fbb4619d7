/** Tiny DOM-building helpers; the controllers stay DOM-free. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: Array<Node | string> = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  node.append(...children);
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function bannerBox(
  banner: { text: string; retriable: boolean } | null,
  onRetry: () => void,
): HTMLElement {
  if (!banner) return el("div");
  const box = el("div", { class: "banner" }, [banner.text]);
  if (banner.retriable) {
    const retry = el("button", { type: "button" }, ["Coba lagi"]);
    retry.addEventListener("click", onRetry);
    box.append(" ", retry);
  }
  return box;
}

export function fieldError(message: string | null | undefined): HTMLElement {
  return message
    ? el("span", { class: "field-error" }, [message])
    : el("span", { class: "field-error" });
}
