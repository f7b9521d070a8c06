import { readFileSync } from 'node:fs';
import { join } from 'node:path';
import { describe, expect, it } from 'vitest';

import { ParseError, parseSBoxText, validateSBox } from '../src/parse.js';

describe('parseSBoxText', () => {
  it('parses whitespace-separated decimal entries', () => {
    const box = parseSBoxText('3 2 1 0');
    expect(box.n).toBe(2);
    expect(box.m).toBe(2);
    expect(box.entries).toEqual([3, 2, 1, 0]);
    expect(box.source).toBe('file-upload');
  });

  it('parses commas and 0x-hex entries', () => {
    const box = parseSBoxText('0xc, 0x5, 0x6, 0xb, 9, 0, 10, 13, 3, 14, 15, 8, 4, 7, 1, 2');
    expect(box.n).toBe(4);
    expect(box.entries[0]).toBe(12);
  });

  it('rejects a 255-entry file with a power-of-two message', () => {
    const text = Array.from({ length: 255 }, () => '0').join(' ');
    expect(() => parseSBoxText(text)).toThrowError(/power of two/);
  });

  it('rejects non-numeric tokens', () => {
    expect(() => parseSBoxText('0 1 two 3')).toThrowError(ParseError);
  });

  it('rejects empty input', () => {
    expect(() => parseSBoxText('  \n ')).toThrowError(/no entries/);
  });

  it('widens m when entries exceed 2^n - 1', () => {
    const box = parseSBoxText('0 1 2 9');
    expect(box.n).toBe(2);
    expect(box.m).toBe(4);
  });

  it('parses the bundled AES table to a 256-entry 8x8 box', () => {
    const aesPath = join(__dirname, '..', '..', 'src', 'sboxkit', 'data', 'aes.txt');
    const box = parseSBoxText(readFileSync(aesPath, 'utf8'));
    expect(box.n).toBe(8);
    expect(box.m).toBe(8);
    expect(box.entries).toHaveLength(256);
    expect(box.entries[0]).toBe(0x63);
    expect(() => validateSBox(box)).not.toThrow();
  });
});

describe('validateSBox', () => {
  it('rejects entries outside [0, 2^m - 1]', () => {
    expect(() =>
      validateSBox({ n: 2, m: 2, entries: [0, 1, 2, 4], source: 'file-upload' }),
    ).toThrowError(/outside/);
  });

  it('rejects wrong entry counts', () => {
    expect(() =>
      validateSBox({ n: 3, m: 3, entries: [0, 1, 2], source: 'file-upload' }),
    ).toThrowError(ParseError);
  });
});
