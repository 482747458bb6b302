#!/usr/bin/env python3
"""Regenerate data/corpus.jsonl, the bundled catalogue of positive links.

Expected values are derived independently of knotsig from the Seifert matrix
M that spherogram builds: sigma is the signature of M + M^T (floating-point
eigenvalues via numpy) and b1 the span of det(tM - M^T) (exact rational
interpolation). Needs `pip install spherogram numpy`.
"""

import json
from fractions import Fraction
import re
import sys

import numpy as np
import spherogram

# The clasp diagram: T(2,4) with an extra clasp between two arcs of its outer
# Seifert circle. Its bigon is a Seifert circle meeting two other circles.
CLASP = "X[1,5,2,8] X[3,7,4,6] X[5,3,6,9] X[7,1,8,10] X[12,11,10,2] X[11,12,9,4]"


def braid(strands, letters):
    return f"{strands}: " + " ".join(map(str, letters))


def twist(letters, pos, n):
    return letters[:pos] + [letters[pos]] * (2 * n) + letters[pos:]


def entries():
    yield "unknot", {"braid": "1:"}, "trivial"
    for n in range(2, 22):
        kind = "knot" if n % 2 else "link"
        yield f"T(2,{n})", {"braid": braid(2, [1] * n)}, f"torus {kind}"
    for p, q in [(3, 3), (3, 4), (3, 5), (3, 7), (4, 5), (3, 8)]:
        yield f"T({p},{q})", {"braid": braid(p, list(range(1, p)) * q)}, "torus link"
    for base, strands in [([1, 2, 1, 2], 3), ([1, 1, 1, 2, 2, 2], 3), ([1, 2, 3, 1, 2, 3, 2], 4)]:
        for n in range(0, 4):
            yield (f"twist {braid(strands, base)} pos 0 N={n}", {"braid": braid(strands, twist(base, 0, n))},
                   "twist family")
    yield "clasp chain", {"pd": CLASP}, "reduce example: clasp on T(2,4)"
    for letters, strands in [([1, 2, 2, 1, 2, 2], 3), ([1, 3, 2, 1, 3, 2, 2], 4), ([1, 2, 3, 3, 2, 1, 1, 2, 3], 4)]:
        yield f"positive braid {braid(strands, letters)}", {"braid": braid(strands, letters)}, "positive braid"


def oracle(record):
    if "braid" in record:
        word = [int(x) for x in record["braid"].split(":")[1].split()]
        if not word:
            return 0, 0
        link = spherogram.ClosedBraid(word)
    else:
        link = spherogram.Link([[int(a) for a in t] for t in re.findall(r"X\[(\d+),(\d+),(\d+),(\d+)\]", record["pd"])])
    m = np.array(link.seifert_matrix(), dtype=float)
    if m.size == 0:
        return 0, 0
    eig = np.linalg.eigvalsh(m + m.T)
    sigma = int(np.sum(eig > 1e-9) - np.sum(eig < -1e-9))
    # Positive diagrams are homogeneous, so the Seifert algorithm surface has
    # minimal genus and b1 is the span of the Alexander polynomial.
    a = m.astype(int).tolist()
    n = len(a)
    xs = list(range(n + 1))
    ys = [det([[k * a[i][j] - a[j][i] for j in range(n)] for i in range(n)]) for k in xs]
    nonzero = [k for k, c in enumerate(interpolate(xs, ys)) if c != 0]
    return sigma, nonzero[-1] - nonzero[0]


def det(rows):
    """Exact determinant by Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    n, d = len(m), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def interpolate(xs, ys):
    """Ascending coefficients of the polynomial through the points (Newton form)."""
    table = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [u - xs[i] * c for u, c in zip(shifted, coeffs)]
        coeffs[0] += table[i]
    return coeffs


def main():
    out = open(sys.argv[1], "w") if len(sys.argv) > 1 else sys.stdout
    for name, payload, family in entries():
        record = {"name": name, **payload, "positive": True}
        sigma, b1 = oracle(record)
        record["expected"] = {"sigma": sigma, "b1": b1}
        record["provenance"] = (f"{family}; expected values derived with spherogram {spherogram.__version__} "
                                "Seifert matrix M: sigma = sign(M + M^T), b1 = span det(tM - M^T)")
        out.write(json.dumps(record, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
