#!/usr/bin/env python3
# Copyright 2026 The entlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the golden PRG/PRP/commitment fixtures with hashlib only.

Usage: generate_golden.py OUTDIR
"""

import hashlib
import os
import sys


def bits_from_uint(v, width):
    return [(v >> (width - 1 - i)) & 1 for i in range(width)]


def bits_to_uint(bits):
    v = 0
    for b in bits:
        v = (v << 1) | b
    return v


def encode_for_hash(bits):
    out = bytearray(len(bits).to_bytes(8, "big"))
    for i in range(0, len(bits), 8):
        chunk = bits[i:i + 8]
        out.append(bits_to_uint(chunk) << (8 - len(chunk)))
    return bytes(out)


class PrgStream:
    def __init__(self, seed):
        self.prefix = encode_for_hash(seed)
        self.counter = 0
        self.buf = []

    def take(self, count):
        while len(self.buf) < count:
            digest = hashlib.sha256(self.prefix + self.counter.to_bytes(8, "big")).digest()
            self.counter += 1
            for byte in digest:
                self.buf.extend(bits_from_uint(byte, 8))
        out, self.buf = self.buf[:count], self.buf[count:]
        return out


def prg_bits(seed, count):
    return PrgStream(seed).take(count)


def table_prp(m, key):
    size = 1 << m
    table = list(range(size))
    stream = PrgStream(bits_from_uint(m, 8) + key)
    for i in range(size - 1, 0, -1):
        w = i.bit_length()
        while True:
            j = bits_to_uint(stream.take(w))
            if j <= i:
                break
        table[i], table[j] = table[j], table[i]
    return table


def feistel_forward(m, key, x, rounds=4):
    h = (m + 1) // 2
    mask = (1 << h) - 1

    def rf(r, half):
        return bits_to_uint(prg_bits(key + bits_from_uint(r, 8) + bits_from_uint(half, h), h))

    def once(v):
        l, r = v >> h, v & mask
        for i in range(rounds):
            l, r = r, l ^ rf(i, r)
        return (l << h) | r

    v = once(x)
    while v >> m:
        v = once(v)
    return v


PRG_SEED = bits_from_uint(0xC0FFEE, 24)
PRP4_KEY = bits_from_uint(0xA5, 8)
FEISTEL_KEY = bits_from_uint(0x1234, 16)
FEISTEL_M = 24
COMMIT_KEY = bits_from_uint(0xB17C, 16)


def write(path, lines):
    with open(path, "w") as f:
        for line in lines:
            f.write(line + "\n")


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "golden")
    os.makedirs(outdir, exist_ok=True)
    write(os.path.join(outdir, "prg_c0ffee_256.txt"), ["".join(map(str, prg_bits(PRG_SEED, 256)))])
    write(os.path.join(outdir, "prp_table_m4_a5.txt"), ["%x" % v for v in table_prp(4, PRP4_KEY)])
    write(os.path.join(outdir, "prp_feistel_m24_1234.txt"),
          ["%06x" % feistel_forward(FEISTEL_M, FEISTEL_KEY, x) for x in range(64)])
    table = table_prp(16, COMMIT_KEY)
    write(os.path.join(outdir, "commit_b17c.txt"), ["%04x" % v for v in table])


if __name__ == "__main__":
    main()
