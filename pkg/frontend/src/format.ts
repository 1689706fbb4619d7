/** Display formatting and the client-side field rules mirroring the server. */

/** Render an integer rupiah amount as "Rp1.234.567". Presentation only:
 *  every amount shown this way arrived from the API as an integer. */
export function formatMoney(amount: number): string {
  if (!Number.isInteger(amount) || amount < 0) {
    throw new Error(`not a rupiah amount: ${amount}`);
  }
  const digits = String(amount);
  let grouped = "";
  for (let i = 0; i < digits.length; i++) {
    const fromEnd = digits.length - i;
    grouped += digits[i];
    if (fromEnd > 1 && (fromEnd - 1) % 3 === 0) grouped += ".";
  }
  return "Rp" + grouped;
}

/** Width limits (characters), identical to the server's schema. */
export const WIDTHS = {
  nama_gol: 25,
  nama_jfa: 30,
  nama_jstr: 30,
  nama_jkhs: 30,
  nama_pend: 30,
  nii: 10,
  nama_dosen: 25,
  periode: 15,
} as const;

export type WidthField = keyof typeof WIDTHS;

/** Non-empty and within the field's width limit; returns an error text
 *  for inline display, or null when the value is acceptable. */
export function widthError(field: WidthField, value: string): string | null {
  if (value.length === 0) return "wajib diisi";
  const limit = WIDTHS[field];
  if (value.length > limit) return `maksimal ${limit} karakter (${value.length} diketik)`;
  return null;
}

/** Bare non-negative integer entry (amounts, SKS). */
export function amountError(value: string): string | null {
  if (value.length === 0) return "wajib diisi";
  if (!/^\d+$/.test(value)) return "harus bilangan bulat tidak negatif";
  return null;
}
