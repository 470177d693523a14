# Copyright 2026 The mhgr Authors
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

"""Writes multiplication tables for every group of order <= 12.

Each group is built from its own formula (independent of the C++ library)
and its non-identity elements are shuffled with a fixed seed, so the C++
side has to recognize the groups from the tables alone.
"""

import itertools
import json
import os
import random


def cyclic(n):
    return list(range(n)), lambda a, b: (a + b) % n


def product(*factors):
    elems = list(itertools.product(*[f[0] for f in factors]))
    ops = [f[1] for f in factors]
    return elems, lambda a, b: tuple(op(x, y) for op, x, y in zip(ops, a, b))


def dihedral(order):
    n = order // 2
    elems = [(i, j) for j in range(2) for i in range(n)]
    # r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j + l)
    return elems, lambda a, b: ((a[0] + (b[0] if a[1] == 0 else -b[0])) % n, (a[1] + b[1]) % 2)


def dicyclic(order):
    n = order // 4
    elems = [(i, j) for j in range(2) for i in range(2 * n)]

    def mul(a, b):
        i = (a[0] + (b[0] if a[1] == 0 else -b[0])) % (2 * n)
        if a[1] == 1 and b[1] == 1:
            return ((i + n) % (2 * n), 0)  # b^2 = a^n
        return (i, (a[1] + b[1]) % 2)

    return elems, mul


def alternating4():
    elems = []
    for p in itertools.permutations(range(4)):
        inv = sum(1 for x in range(4) for y in range(x + 1, 4) if p[x] > p[y])
        if inv % 2 == 0:
            elems.append(p)
    return elems, lambda a, b: tuple(b[a[x]] for x in range(4))


GROUPS = {
    "C1": cyclic(1), "C2": cyclic(2), "C3": cyclic(3), "C4": cyclic(4),
    "C5": cyclic(5), "C6": cyclic(6), "C7": cyclic(7), "C8": cyclic(8),
    "C9": cyclic(9), "C10": cyclic(10), "C11": cyclic(11), "C12": cyclic(12),
    "C2^2": product(cyclic(2), cyclic(2)),
    "C2xC4": product(cyclic(2), cyclic(4)),
    "C2^3": product(cyclic(2), cyclic(2), cyclic(2)),
    "D8": dihedral(8),
    "Q8": dicyclic(8),
    "C3^2": product(cyclic(3), cyclic(3)),
    "D6": dihedral(6),
    "D10": dihedral(10),
    "C2xC6": product(cyclic(2), cyclic(6)),
    "D12": dihedral(12),
    "A4": alternating4(),
    "Dic12": dicyclic(12),
}


def table_for(elems, mul, rng):
    ident = next(e for e in elems if all(mul(e, x) == x for x in elems))
    rest = [e for e in elems if e != ident]
    rng.shuffle(rest)
    order = [ident] + rest
    index = {e: k for k, e in enumerate(order)}
    return [[index[mul(a, b)] for b in order] for a in order]


def main():
    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "groups")
    os.makedirs(out, exist_ok=True)
    rng = random.Random(1729)
    for label, (elems, mul) in GROUPS.items():
        doc = {"label": label, "order": len(elems), "table": table_for(elems, mul, rng)}
        name = label.replace("^", "_") + ".json"
        with open(os.path.join(out, name), "w") as f:
            json.dump(doc, f)
            f.write("\n")


if __name__ == "__main__":
    main()
