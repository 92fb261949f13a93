// Display formatting only; values arrive fully computed from the
// service and are rounded here for presentation.

export function formatPercent(probability: number): string {
  return `${(probability * 100).toFixed(2)}%`;
}

export function formatIndex(value: number): string {
  return value.toFixed(4);
}

export function formatRisk(value: number): string {
  return value.toFixed(4);
}
