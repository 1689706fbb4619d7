import { describe, expect, it } from "vitest";

import { amountError, formatMoney, WIDTHS, widthError } from "../src/format.js";

describe("formatMoney", () => {
  it("groups digits by threes with dots", () => {
    expect(formatMoney(0)).toBe("Rp0");
    expect(formatMoney(480000)).toBe("Rp480.000");
    expect(formatMoney(1100000)).toBe("Rp1.100.000");
    expect(formatMoney(17500)).toBe("Rp17.500");
    expect(formatMoney(3292500)).toBe("Rp3.292.500");
    expect(formatMoney(12)).toBe("Rp12");
  });

  it("rejects what is not an integer amount", () => {
    expect(() => formatMoney(-1)).toThrow();
    expect(() => formatMoney(1.5)).toThrow();
  });
});

describe("field rules mirror the service schema", () => {
  it("width limits match", () => {
    expect(WIDTHS.nama_gol).toBe(25);
    expect(WIDTHS.nama_jfa).toBe(30);
    expect(WIDTHS.nii).toBe(10);
    expect(WIDTHS.nama_dosen).toBe(25);
    expect(WIDTHS.periode).toBe(15);
  });

  it("boundary behavior at the limit", () => {
    expect(widthError("nama_gol", "x".repeat(25))).toBeNull();
    expect(widthError("nama_gol", "x".repeat(26))).toMatch(/25/);
    expect(widthError("nama_gol", "")).not.toBeNull();
  });

  it("amounts must be bare non-negative integers", () => {
    expect(amountError("0")).toBeNull();
    expect(amountError("1750000")).toBeNull();
    expect(amountError("-1")).not.toBeNull();
    expect(amountError("1.5")).not.toBeNull();
    expect(amountError("")).not.toBeNull();
  });
});
