import type { BandValue } from "./api.js";

export interface BadgeSpec {
  label: string;
  cssClass: string;
}

// one badge color per similarity band, styled in styles.css
export const BAND_BADGES: Record<BandValue, BadgeSpec> = {
  zero: { label: "0%", cssClass: "badge-zero" },
  under_fifteen: { label: "under 15%", cssClass: "badge-under-fifteen" },
  fifteen_to_fifty: { label: "15-50%", cssClass: "badge-fifteen-to-fifty" },
  over_fifty: { label: "over 50%", cssClass: "badge-over-fifty" },
  identical: { label: "100%", cssClass: "badge-identical" },
};

export function badgeFor(band: BandValue): BadgeSpec {
  return BAND_BADGES[band];
}
