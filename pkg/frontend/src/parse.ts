// Client-side parsing and validation of the S-box text format.
//
// Mirrors the server's payload invariants so bad files fail fast with an
// inline message and never reach the network; the server stays
// authoritative.

import type { UiSBox } from './types.js';

export class ParseError extends Error {}

function parseToken(token: string, position: number): number {
  const value = token.toLowerCase().startsWith('0x')
    ? Number.parseInt(token.slice(2), 16)
    : /^[0-9]+$/.test(token)
      ? Number.parseInt(token, 10)
      : Number.NaN;
  if (!Number.isInteger(value) || Number.isNaN(value) || value < 0) {
    throw new ParseError(
      `token '${token}' at position ${position} is not a decimal or 0x-hex integer`,
    );
  }
  return value;
}

export function parseSBoxText(text: string): UiSBox {
  const tokens = text.replace(/,/g, ' ').split(/\s+/).filter((t) => t.length > 0);
  if (tokens.length === 0) {
    throw new ParseError('no entries found');
  }
  const entries = tokens.map((token, index) => parseToken(token, index));
  const count = entries.length;
  if ((count & (count - 1)) !== 0) {
    throw new ParseError(`length must be a power of two (got ${count} entries)`);
  }
  const n = Math.round(Math.log2(count));
  let m = n;
  const maxEntry = Math.max(...entries);
  while (maxEntry >= 2 ** m) {
    m += 1;
  }
  return { n, m, entries, source: 'file-upload' };
}

export function validateSBox(box: UiSBox): void {
  if (box.entries.length !== 2 ** box.n) {
    throw new ParseError(`table must have 2^${box.n} entries`);
  }
  const limit = 2 ** box.m;
  for (const [index, value] of box.entries.entries()) {
    if (!Number.isInteger(value) || value < 0 || value >= limit) {
      throw new ParseError(`entry ${value} at position ${index} outside [0, ${limit - 1}]`);
    }
  }
}
