#!/usr/bin/env python3
# Copyright 2026 The CTI-MHE Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the golden wire-format files used by the serialization tests.

Independent of the C++ code: primes are searched here from scratch.
"""

import pathlib
import struct

from sympy import isprime

HERE = pathlib.Path(__file__).resolve().parent


def ntt_primes(bits, step, count):
    out = []
    c = ((1 << bits) - 1) // step * step + 1
    if c >= 1 << bits:
        c -= step
    while len(out) < count:
        if isprime(c):
            out.append(c)
        c -= step
    return out


def golden_poly():
    n, limbs, parts, log_scale = 8, 3, 2, 30
    primes = ntt_primes(54, 1 << 17, limbs)
    body = b"MHE1" + struct.pack("<HIBBh", 1, n, limbs, parts - 1, log_scale)
    for p in range(parts):
        for j, q in enumerate(primes):
            for i in range(n):
                body += struct.pack("<Q", (1000 * p + 100 * j + i) % q)
    (HERE / "golden_poly_n8.bin").write_bytes(body)


def golden_frame():
    session = bytes(range(16))
    label = b"ref/1"
    payload = b"\x01\x02\x03"
    body = b"CTI1" + struct.pack("<HH", 1, 2) + session + struct.pack("<I", 7)
    body += struct.pack("<B", len(label)) + label
    body += struct.pack("<Q", len(payload)) + payload
    (HERE / "golden_frame.bin").write_bytes(body)


if __name__ == "__main__":
    golden_poly()
    golden_frame()
