#!/usr/bin/env python3
"""Brute-force classification for D4 (Spin(8)) with its full center at level 2.

Works directly in epsilon coordinates with exact fractions and shares no code
with the Rust crate. Writes the fixture consumed by the acceptance test.
"""
import itertools
import json
import sys
from fractions import Fraction as F

LEVEL = 2
N = 4
SIMPLE = [(1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1)]
MARKS = [1, 2, 1, 1]
HALF = F(1, 2)
# Special nodes 1, 3, 4 and their minimal dominant coweights.
CENTER = {
    0: (F(0),) * 4,
    1: (F(1), F(0), F(0), F(0)),
    3: (HALF, HALF, HALF, -HALF),
    4: (HALF, HALF, HALF, HALF),
}
ELEMENTS = [0, 1, 3, 4]


def dot(a, b):
    return sum(F(x) * F(y) for x, y in zip(a, b))


def add(a, b):
    return tuple(F(x) + F(y) for x, y in zip(a, b))


def sub(a, b):
    return tuple(F(x) - F(y) for x, y in zip(a, b))


def scale(c, a):
    return tuple(F(c) * F(x) for x in a)


def in_coroot_lattice(v):
    return all(x.denominator == 1 for x in v) and sum(v) % 2 == 0


def labels_of(v):
    return tuple(int(dot(v, a)) for a in SIMPLE)


def fundamental_weights():
    return [
        (1, 0, 0, 0),
        (1, 1, 0, 0),
        (HALF, HALF, HALF, -HALF),
        (HALF, HALF, HALF, HALF),
    ]


def vector_of(labels):
    v = (F(0),) * 4
    for n, w in zip(labels, fundamental_weights()):
        v = add(v, scale(n, w))
    return v


def alcove(level):
    out = []
    for labels in itertools.product(range(level + 1), repeat=N):
        if sum(m * n for m, n in zip(MARKS, labels)) <= level:
            out.append(labels)
    return sorted(out)


def weyl_group():
    for perm in itertools.permutations(range(N)):
        for signs in itertools.product((1, -1), repeat=N):
            if signs.count(-1) % 2 == 0:
                yield perm, signs


def apply(w, v):
    perm, signs = w
    out = [F(0)] * N
    for i, j in enumerate(perm):
        out[j] = signs[j] * v[i]
    return tuple(out)


def alcove_vertices(level):
    verts = {(F(0),) * 4}
    for m, w in zip(MARKS, fundamental_weights()):
        verts.add(scale(F(level, m), w))
    return verts


def action(z, level):
    """The unique w with w(A) + level*s(z) = A on the alcove's vertices."""
    verts = alcove_vertices(level)
    shift = scale(level, CENTER[z])
    hits = [w for w in weyl_group() if {add(apply(w, v), shift) for v in verts} == verts]
    assert len(hits) == 1, (z, len(hits))
    w = hits[0]
    return lambda lab: labels_of(add(apply(w, vector_of(lab)), shift))


def multiply(a, b):
    s = add(CENTER[a], CENTER[b])
    hits = [c for c in ELEMENTS if in_coroot_lattice(sub(s, CENTER[c]))]
    assert len(hits) == 1
    return hits[0]


def admissible_tables(level):
    den = 2 * len(ELEMENTS) ** 2
    grid = [F(k, den) for k in range(den)]
    idx = {e: i for i, e in enumerate(ELEMENTS)}
    free = [(i, j) for i in range(1, 4) for j in range(i + 1, 4)]
    triples = []
    for a, b, k in itertools.product(ELEMENTS, repeat=3):
        ab = multiply(a, b)
        defect = sub(add(CENTER[a], CENTER[b]), CENTER[ab])
        triples.append((idx[a], idx[b], idx[ab], idx[k], F(level, 2) * dot(defect, CENTER[k])))
    out = []
    for values in itertools.product(grid, repeat=len(free)):
        t = [[F(0)] * 4 for _ in range(4)]
        for (i, j), x in zip(free, values):
            t[i][j] = x
            t[j][i] = (-x) % 1
        ok = True
        for a, b, ab, k, shift in triples:
            left = t[ab][k] + shift - t[a][k] - t[b][k]
            right = t[k][ab] + shift - t[k][a] - t[k][b]
            if left.denominator != 1 or right.denominator != 1:
                ok = False
                break
        if ok:
            out.append(t)
    return sorted(out)


def main(path):
    weights = alcove(LEVEL)
    acts = {z: action(z, LEVEL) for z in ELEMENTS}
    seen = set()
    orbits = []
    for lam in weights:
        if lam in seen:
            continue
        members = sorted({acts[z](lam) for z in ELEMENTS})
        assert all(m in weights for m in members)
        seen.update(members)
        stab = sum(1 for z in ELEMENTS if acts[z](lam) == lam)
        assert stab * len(members) == len(ELEMENTS)
        orbits.append({"members": [list(m) for m in members], "stabilizer_order": stab})
    tables = admissible_tables(LEVEL)
    classes = []
    for i, t in enumerate(tables):
        nontrivial = any(x != 0 for row in t for x in row)
        for o in orbits:
            single = len(o["members"]) == 1
            mult = 2 if single and LEVEL % 2 == 0 and nontrivial else 1
            classes.append(
                {
                    "omega": i,
                    "orbit": o["members"][0],
                    "center_form": "nontrivial" if nontrivial else "trivial",
                    "multiplicity": mult,
                }
            )
    doc = {
        "group": "D4",
        "subgroup": "full",
        "level": LEVEL,
        "alcove": [",".join(map(str, w)) for w in weights],
        "orbits": orbits,
        "forms": [[[str(x) for x in row] for row in t] for t in tables],
        "classes": classes,
    }
    with open(path, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/fixtures/spin8_full_l2.json")
