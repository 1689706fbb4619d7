/** Wire types; field names mirror the service's persistence names exactly. */

export interface GolonganRow {
  gol_id: number;
  nama_gol: string;
  gapok: number;
}

export interface JfaRow {
  jfa_id: number;
  nama_jfa: string;
  tunj_fa: number;
}

export interface JstrRow {
  jstr_id: number;
  nama_jstr: string;
  tunj_str: number;
}

export interface JkhsRow {
  jkhs_id: number;
  nama_jkhs: string;
  tunj_khs: number;
}

export interface PendidikanRow {
  pend_id: number;
  nama_pend: string;
  tarif_mgjr: number;
}

export type MasterRow = GolonganRow | JfaRow | JstrRow | JkhsRow | PendidikanRow;

export type MasterTable = "golongan" | "jfa" | "jstr" | "jkhs" | "pendidikan";

export interface DosenRow {
  nii: string;
  nama_dosen: string;
  golongan: number;
  jab_fa: number;
  jab_str: number;
  jab_khs: number;
  pendidikan: number;
}

export interface ProfilTarif {
  nii: string;
  nama_dosen: string;
  gapok: number;
  tunj_fa: number;
  tunj_str: number;
  tunj_khs: number;
  tarif_mgjr: number;
}

export interface SlipInput {
  periode: string;
  nii: string;
  sks_mgjr: number;
  pajak: number;
  pot_kop: number;
  arisan: number;
  pot_lain: number;
}

export interface SlipPreview extends ProfilTarif {
  periode: string;
  sks_mgjr: number;
  honor_kotor: number;
  pajak: number;
  hon_mgjr: number;
  gaji_kotor: number;
  pot_kop: number;
  arisan: number;
  pot_lain: number;
  gaji_bersih: number;
}

export interface SlipRow {
  no_slip: number;
  periode: string;
  nii: string;
  nama_dosen: string;
  gapok: number;
  tunj_fa: number;
  tunj_str: number;
  tunj_khs: number;
  sks_mgjr: number;
  hon_mgjr: number;
  pajak: number;
  pot_kop: number;
  arisan: number;
  pot_lain: number;
  gaji_bersih: number;
}

export interface ApiErrorBody {
  code: "validation" | "not_found" | "conflict" | "referential_conflict" | "internal";
  message: string;
  details?: string[];
}
