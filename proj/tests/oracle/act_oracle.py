#!/usr/bin/env python3
"""Independent check of the act golden file for the CASE 1 representation.

Rebuilds the Dirac gammas, the 16-element antisymmetrized basis and the inner
action c_ij . v = sum_k m_ik v m*_kj with sympy, then compares every
coordinate in the golden file.
"""

import itertools
import json
import sys

import sympy as sp

q = sp.symbols("q")


def e(i, j):
    m = sp.zeros(4, 4)
    m[i - 1, j - 1] = 1
    return m


def gammas():
    s1 = sp.Matrix([[0, 1], [1, 0]])
    s2 = sp.Matrix([[0, -sp.I], [sp.I, 0]])
    s3 = sp.Matrix([[1, 0], [0, -1]])
    g0 = sp.diag(1, 1, -1, -1)
    out = [g0]
    for s in (s1, s2, s3):
        g = sp.zeros(4, 4)
        g[0:2, 2:4] = s
        g[2:4, 0:2] = -s
        out.append(g)
    return out


def sign(p):
    s = 1
    for a, b in itertools.combinations(range(len(p)), 2):
        if p[a] > p[b]:
            s = -s
    return s


def basis16(g):
    labels, mats = [], []
    for k in range(5):
        for idx in itertools.combinations(range(4), k):
            total = sp.zeros(4, 4)
            perms = list(itertools.permutations(range(k)))
            for p in perms:
                prod = sp.eye(4)
                for t in p:
                    prod = prod * g[idx[t]]
                total += sign(p) * prod
            mats.append(total / len(perms))
            labels.append("1" if k == 0 else "g" + "".join(map(str, idx)))
    return labels, mats


def case1(mu=1):
    c11 = sp.diag(1, 1 / q, 1, 1 / q)
    c12 = q * e(1, 3) - mu * e(2, 4)
    c21 = -mu * e(2, 1) + e(4, 3)
    c22 = sp.diag(q**2, q**2, q, q) - q * mu * e(2, 3)
    return [[c11, c12], [c21, c22]]


def parse(text):
    return sp.sympify(text.replace("^", "**"), locals={"i": sp.I, "q": q})


def main(path):
    g = gammas()
    labels, basis = basis16(g)
    cols = sp.Matrix.hstack(*[b.reshape(16, 1) for b in basis])
    cinv = cols.inv()

    m = case1()
    big = sp.zeros(8, 8)
    for a in range(2):
        for b in range(2):
            big[4 * a:4 * a + 4, 4 * b:4 * b + 4] = m[a][b]
    inv = big.inv()
    mstar = [[inv[4 * a:4 * a + 4, 4 * b:4 * b + 4] for b in range(2)] for a in range(2)]

    with open(path) as fh:
        rows = json.load(fh)
    expected_keys = [(i, j, f"g{mu}") for i in (1, 2) for j in (1, 2) for mu in range(4)]
    got_keys = [(r["i"], r["j"], r["generator"]) for r in rows]
    if got_keys != expected_keys:
        print("unexpected row layout:", got_keys)
        return 1

    bad = 0
    for r in rows:
        i, j = r["i"] - 1, r["j"] - 1
        v = basis[labels.index(r["generator"])]
        w = sum((m[i][k] * v * mstar[k][j] for k in range(2)), sp.zeros(4, 4))
        coords = cinv * w.reshape(16, 1)
        for s in range(16):
            if sp.simplify(coords[s] - parse(r["coords"][s])) != 0:
                print(f"mismatch at c{i + 1}{j + 1}.{r['generator']} slot {labels[s]}: "
                      f"oracle {sp.simplify(coords[s])}, golden {r['coords'][s]}")
                bad += 1
    print(f"{len(rows)} rows, {bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
