#!/usr/bin/env python3
"""Regenerates fixtures/*.json. Run from the repository root."""

import itertools
import json
import os
from fractions import Fraction

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def z(re, im=0):
    re, im = Fraction(re), Fraction(im)
    if im == 0:
        return int(re) if re.denominator == 1 else q(re)
    if re == 0:
        return {1: "i", -1: "-i"}.get(im, q(im) + "i")
    sign = "+" if im > 0 else "-"
    mag = "" if abs(im) == 1 else q(abs(im))
    return f"{q(re)}{sign}{mag}i"


def cmat(rows):
    return [[z(c.real, c.imag) if isinstance(c, complex) else z(c) for c in row] for row in rows]


def dump(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(f'{pad}  {json.dumps(k)}: {dump(v, indent + 1)}' for k, v in value.items())
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(value, list):
        if all(not isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(json.dumps(v) for v in value) + "]"
        if all(isinstance(v, list) and all(not isinstance(w, (list, dict)) for w in v) for v in value):
            return "[" + ", ".join(dump(v) for v in value) + "]"
        inner = ",\n".join(pad + "  " + dump(v, indent + 1) for v in value)
        return "[\n" + inner + "\n" + pad + "]"
    return json.dumps(value)


def write(name, doc):
    with open(os.path.join(OUT, name + ".json"), "w") as f:
        f.write(dump(doc) + "\n")


def polytopes():
    write("p11226", {"kind": "polytope", "dim": 4, "vertices": [
        [11, -1, -1, -1], [-1, -1, 5, -1], [-1, 5, -1, -1], [-1, -1, -1, -1], [-1, -1, -1, 1]]})
    # The polar of conv(w_0..w_4) has (-1,8,-1,-1) where the printed list has
    # (-1,2,-1,-1); with the printed point the origin is not interior.
    write("p11133", {"kind": "polytope", "dim": 4, "vertices": [
        [8, -1, -1, -1], [-1, -1, 2, -1], [-1, 8, -1, -1], [-1, -1, -1, -1], [-1, -1, -1, 2]]})
    write("p11133_printed", {"kind": "polytope", "dim": 4, "vertices": [
        [8, -1, -1, -1], [-1, -1, 2, -1], [-1, 2, -1, -1], [-1, -1, -1, -1], [-1, -1, -1, 2]]})
    write("square", {"kind": "polytope", "dim": 2, "vertices": [[-1, -1], [-1, 1], [1, -1], [1, 1]]})


def torus_h1():
    write("torus_h1", {
        "kind": "hodge_structure", "ambient_dim": 2, "weight": 1,
        "pieces": [{"p": 1, "q": 0, "basis": [[1], ["i"]]}, {"p": 0, "q": 1, "basis": [[1], ["-i"]]}],
        "form": {"gram": [[0, 1], [-1, 0]], "symmetry_sign": -1}})


def p1(sign, name):
    write(name, {
        "kind": "pmhs", "ambient_dim": 2, "weight": 1,
        "bigrading": [{"p": 1, "q": 1, "basis": [[1], [0]]}, {"p": 0, "q": 0, "basis": [[0], [1]]}],
        "form": {"gram": [[0, sign], [-sign, 0]], "symmetry_sign": -1},
        "nilpotents": [[[0, 0], [1, 0]]]})


def untwisted(dim, hodge_numbers, pairing, actions):
    s = {"id": "untwisted", "untwisted": True, "age": 0, "partner": "untwisted", "dim": dim,
         "hodge_numbers": hodge_numbers, "pairing": pairing}
    if actions is not None:
        s["kaehler_actions"] = actions
    return s


def p2():
    write("p2", {"kind": "orbifold", "n": 2, "kaehler_basis_size": 1, "sectors": [
        untwisted(2, [[1], [0, 0], [0, 1, 0], [0, 0, 0, 0], [0, 0, 1, 0, 0]],
                  [[[1]], [], [[1]], [], [[1]]],
                  [[[[1]], [], [[1]]]])]})


def p1xp1():
    # H^2 basis H1, H2; Kaehler basis 2H1 + H2 and H1 + 2H2.
    write("p1xp1", {"kind": "orbifold", "n": 2, "kaehler_basis_size": 2, "sectors": [
        untwisted(2, [[1], [0, 0], [0, 2, 0], [0, 0, 0, 0], [0, 0, 1, 0, 0]],
                  [[[1]], [], [[0, 1], [1, 0]], [], [[1]]],
                  [[[[2], [1]], [], [[1, 2]]],
                   [[[1], [2]], [], [[2, 1]]]])]})


def kummer():
    pairs = list(itertools.combinations(range(4), 2))

    def wedge(a, b):
        return [a[j] * b[k] - a[k] * b[j] for j, k in pairs]

    def perm_sign(seq):
        s = 1
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if seq[i] > seq[j]:
                    s = -s
        return s

    def integral(ab, cd):
        idx = ab + cd
        return 0 if len(set(idx)) < 4 else perm_sign(idx)

    dz = [[1, 1j, 0, 0], [0, 0, 1, 1j]]
    dzb = [[1, -1j, 0, 0], [0, 0, 1, -1j]]
    h20 = [wedge(dz[0], dz[1])]
    h02 = [wedge(dzb[0], dzb[1])]
    h11 = [wedge(dz[a], dzb[b]) for a in range(2) for b in range(2)]

    def basis(vectors):
        return cmat([[complex(v[r]) for v in vectors] for r in range(6)])

    pairing2 = [[integral(ab, cd) for cd in pairs] for ab in pairs]
    omega = [1 if p in ((0, 1), (2, 3)) else 0 for p in pairs]
    to_h4 = [[sum(omega[i] * pairing2[i][c] for i in range(6)) for c in range(6)]]
    torus = {
        "id": "untwisted", "untwisted": True, "age": 0, "partner": "untwisted", "dim": 2,
        "cohomology": [
            {"ambient_dim": 1, "pieces": [{"p": 0, "q": 0, "basis": [[1]]}]},
            {"ambient_dim": 0, "pieces": []},
            {"ambient_dim": 6, "pieces": [
                {"p": 2, "q": 0, "basis": basis(h20)},
                {"p": 1, "q": 1, "basis": basis(h11)},
                {"p": 0, "q": 2, "basis": basis(h02)}]},
            {"ambient_dim": 0, "pieces": []},
            {"ambient_dim": 1, "pieces": [{"p": 2, "q": 2, "basis": [[1]]}]}],
        "pairing": [[[1]], [], pairing2, [], [[1]]],
        "kaehler_actions": [[[[w] for w in omega], [], to_h4]]}
    points = [{"id": f"fixed{k:02d}", "age": 1, "partner": f"fixed{k:02d}", "dim": 0,
               "hodge_numbers": [[1]], "pairing": [[[1]]]} for k in range(1, 17)]
    write("kummer", {"kind": "orbifold", "n": 2, "kaehler_basis_size": 1, "sectors": [torus] + points})


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    polytopes()
    torus_h1()
    p1(1, "p1")
    p1(-1, "p1_negQ")
    p2()
    p1xp1()
    kummer()
