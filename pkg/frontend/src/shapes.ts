// Inline SVG glyphs for the palette. Unknown shape names fall back to a
// labeled circle so custom packs still render.

const CSS_COLORS: Record<string, string> = {
  crimson: "#d7263d",
  azure: "#1f7ae0",
  emerald: "#2ea44f",
  amber: "#e8a013",
  violet: "#7c3aed",
  coral: "#f2705e",
  teal: "#0d9488",
  magenta: "#c026d3",
  tan: "#b08968",
  slate: "#64748b",
  onyx: "#2f2f35",
  ivory: "#d9d2b6",
};

function polygon(points: [number, number][]): string {
  const attr = points.map(([x, y]) => `${x},${y}`).join(" ");
  return `<polygon points="${attr}"/>`;
}

const GLYPHS: Record<string, string> = {
  circle: '<circle cx="20" cy="20" r="15"/>',
  square: '<rect x="6" y="6" width="28" height="28" rx="3"/>',
  triangle: polygon([[20, 5], [36, 34], [4, 34]]),
  star: polygon([[20, 3], [24.7, 14.3], [37, 15.2], [27.6, 23.2],
                 [30.5, 35.2], [20, 28.7], [9.5, 35.2], [12.4, 23.2],
                 [3, 15.2], [15.3, 14.3]]),
  diamond: polygon([[20, 3], [35, 20], [20, 37], [5, 20]]),
  heart: '<path d="M20 35 C6 24 3 15 9 9.5 C14 5 19 8.5 20 12 ' +
    'C21 8.5 26 5 31 9.5 C37 15 34 24 20 35 Z"/>',
  hexagon: polygon([[12, 6], [28, 6], [36, 20], [28, 34], [12, 34], [4, 20]]),
  pentagon: polygon([[20, 4], [36, 16], [30, 35], [10, 35], [4, 16]]),
  cross: polygon([[14, 4], [26, 4], [26, 14], [36, 14], [36, 26], [26, 26],
                  [26, 36], [14, 36], [14, 26], [4, 26], [4, 14], [14, 14]]),
  moon: '<path d="M27 4 A16 16 0 1 0 36 25 A12.5 12.5 0 1 1 27 4 Z"/>',
  arrow: polygon([[4, 15], [24, 15], [24, 7], [37, 20], [24, 33], [24, 25], [4, 25]]),
  cloud: '<path d="M11 31 a7 7 0 0 1 -1.5 -13.8 a9 9 0 0 1 17.4 -2.4 ' +
    'a7.5 7.5 0 0 1 3.6 14.4 Z"/>',
};

export function shapeSvg(shape: string, color: string): string {
  const fill = CSS_COLORS[color] ?? color;
  const glyph = GLYPHS[shape] ??
    `<circle cx="20" cy="20" r="15"/><text x="20" y="25" text-anchor="middle" ` +
    `font-size="10" fill="#fff">${shape.slice(0, 3)}</text>`;
  return `<svg viewBox="0 0 40 40" width="40" height="40" fill="${fill}" ` +
    `aria-label="${color} ${shape}">${glyph}</svg>`;
}
