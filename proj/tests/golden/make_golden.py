"""Regenerates the golden matrices from hand-typed copies of the printed displays.

Letters in the weighted displays are instantiated as a=2, b=3, c=5, d=7.
Run from this directory: python3 make_golden.py
"""
import cmath
import json
from fractions import Fraction

LETTERS = {"a": 2, "b": 3, "c": 5, "d": 7}


def write(name, rows, scale=Fraction(1)):
    entries, rational = [], []
    for row in rows:
        for v in row:
            q = Fraction(v) * scale
            entries.append([float(q), 0.0])
            rational.append(str(q))
    obj = {"kind": "matrix", "rows": len(rows), "cols": len(rows[0]),
           "entries": entries, "rational": rational}
    with open(name, "w") as f:
        f.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def write_complex(name, rows, labels):
    entries = [[v.real, v.imag] for row in rows for v in row]
    obj = {"kind": "matrix", "rows": len(rows), "cols": len(rows[0]),
           "entries": entries, "rational": [l for row in labels for l in row]}
    with open(name, "w") as f:
        f.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def blocks(n, spec):
    """spec[R][C] = (letter, i, j): block (R, C) is letter * E_{i,j} (1-based)."""
    m = [[0] * (n * n) for _ in range(n * n)]
    for R, brow in enumerate(spec):
        for C, (letter, i, j) in enumerate(brow):
            m[R * n + i - 1][C * n + j - 1] = LETTERS[letter]
    return m


def grid(text):
    return [[LETTERS.get(t, 0) if not t.lstrip("-").isdigit() else int(t) for t in line.split()]
            for line in text.strip().splitlines()]


A1 = grid("""
 7 -2 -2 -2 -2 -2 -2 -2 -2
-2 -2 -2  7 -2 -2 -2 -2 -2
-2 -2 -2 -2 -2 -2  7 -2 -2
-2  7 -2 -2 -2 -2 -2 -2 -2
-2 -2 -2 -2  7 -2 -2 -2 -2
-2 -2 -2 -2 -2 -2 -2  7 -2
-2 -2  7 -2 -2 -2 -2 -2 -2
-2 -2 -2 -2 -2  7 -2 -2 -2
-2 -2 -2 -2 -2 -2 -2 -2  7
""")

A2 = grid("""
-2 -2 -2 -2 -2  7 -2 -2 -2
-2 -2 -2 -2 -2 -2 -2 -2  7
-2 -2  7 -2 -2 -2 -2 -2 -2
-2 -2 -2  7 -2 -2 -2 -2 -2
-2 -2 -2 -2 -2 -2  7 -2 -2
 7 -2 -2 -2 -2 -2 -2 -2 -2
-2 -2 -2 -2  7 -2 -2 -2 -2
-2 -2 -2 -2 -2 -2 -2  7 -2
-2  7 -2 -2 -2 -2 -2 -2 -2
""")

# A(d) display with d_k = 10 - k (descending, so the singular values are 9..1).
AD_POS = grid("""
1 0 0 0 0 0 0 0 0
0 0 0 2 0 0 0 0 0
0 0 0 0 0 0 3 0 0
0 4 0 0 0 0 0 0 0
0 0 0 0 5 0 0 0 0
0 0 0 0 0 0 0 6 0
0 0 7 0 0 0 0 0 0
0 0 0 0 0 8 0 0 0
0 0 0 0 0 0 0 0 9
""")
AD = [[0 if v == 0 else 10 - v for v in row] for row in AD_POS]

CYCLIC3 = grid("""
0 0 0 0 0 a 0 0 0
0 0 0 0 0 0 0 0 c
0 0 b 0 0 0 0 0 0
0 0 0 b 0 0 0 0 0
0 0 0 0 0 0 a 0 0
c 0 0 0 0 0 0 0 0
0 0 0 0 c 0 0 0 0
0 0 0 0 0 0 0 b 0
0 a 0 0 0 0 0 0 0
""")

CYCLIC3_BLOCKS = blocks(3, [
    [("b", 3, 3), ("a", 1, 3), ("c", 2, 3)],
    [("c", 3, 1), ("b", 1, 1), ("a", 2, 1)],
    [("a", 3, 2), ("c", 1, 2), ("b", 2, 2)],
])
assert CYCLIC3 == CYCLIC3_BLOCKS, "block and entry displays of the 3x3 example disagree"

CYCLIC4 = blocks(4, [
    [("d", 4, 4), ("a", 1, 4), ("b", 2, 4), ("c", 3, 4)],
    [("c", 4, 1), ("d", 1, 1), ("a", 2, 1), ("b", 3, 1)],
    [("b", 4, 2), ("c", 1, 2), ("d", 2, 2), ("a", 3, 2)],
    [("a", 4, 3), ("b", 1, 3), ("c", 2, 3), ("d", 3, 3)],
])

HURA5 = blocks(4, [
    [("c", 4, 4), ("c", 3, 4), ("a", 1, 3), ("b", 2, 3)],
    [("c", 4, 3), ("c", 3, 3), ("b", 1, 4), ("a", 2, 4)],
    [("b", 3, 1), ("a", 4, 1), ("c", 2, 2), ("c", 1, 2)],
    [("a", 3, 2), ("b", 4, 2), ("c", 2, 1), ("c", 1, 1)],
])

TWO_ORBITS = grid("""
0 0 0 0 a 0 0 0 0
0 a 0 0 0 0 0 0 0
0 0 0 0 0 0 b 0 0
0 0 0 a 0 0 0 0 0
a 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 b 0
0 0 c 0 0 0 0 0 0
0 0 0 0 0 c 0 0 0
0 0 0 0 0 0 0 0 d
""")

C = [[1, 0, 1, 1], [0, 1, 1, 2], [0, 0, 0, 0], [0, 0, 0, 0]]
C_PINV = [[2, -1, 0, 0], [-1, 1, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]]
X = [[1, 0, 0, 0], [0, -3, 2, 0], [0, 2, 0, 0], [0, 0, 0, 1]]

write("A1.json", A1, Fraction(1, 9))
write("A2.json", A2, Fraction(1, 9))
write("Ad.json", AD)
write("cyclic3.json", CYCLIC3)
write("cyclic4.json", CYCLIC4)
write("hura5.json", HURA5)
write("two_orbits.json", TWO_ORBITS)
write("C.json", C)
write("C_pinv.json", C_PINV, Fraction(1, 3))
write("X.json", X)

# Vandermonde of cube roots of unity: columns w3, w2, w1 with w_j = omega^j.
w = [cmath.exp(2j * cmath.pi * k / 3) for k in range(3)]
P = [[1, 1, 1], [w[0], w[2], w[1]], [w[0], w[4 % 3], w[2 % 3]]]
P_LABELS = [["1", "1", "1"], ["1", "1@2/3", "1@1/3"], ["1", "1@1/3", "1@2/3"]]
write_complex("P.json", P, P_LABELS)


def a_of_d(d, labels):
    m = [[0j] * 9 for _ in range(9)]
    lab = [["0"] * 9 for _ in range(9)]
    for r, row in enumerate(AD_POS):
        for c, v in enumerate(row):
            if v:
                m[r][c] = d[v - 1]
                lab[r][c] = labels[v - 1]
    return m, lab


# Targets of the two similarity identities.
d1 = [-1] + [1] * 8
m, lab = a_of_d([complex(v) for v in d1], [str(v) for v in d1])
write_complex("Ad_from_A1.json", m, lab)

# d = (-w3, w2, w1, w1, w3, w2, w2, w1, w3)
exps = [3, 2, 1, 1, 3, 2, 2, 1, 3]
d2 = [cmath.exp(2j * cmath.pi * e / 3) for e in exps]
d2[0] = -d2[0]
labels = ["1@%d/3" % (e % 3) if e % 3 else "1" for e in exps]
labels[0] = "-1"
m, lab = a_of_d(d2, labels)
write_complex("Ad_from_A2.json", m, lab)
