"""Independent model of the five-dimensional algebra as pairs of 2x2 matrices."""
import itertools

import numpy as np

H = np.array([[1, 0], [0, -1]])
F = np.array([[0, 0], [1, 0]])
E = np.array([[0, 1], [0, 0]])
Z = np.zeros((2, 2), dtype=int)

NAMED = {"u0": (H, Z), "uu": (H, H), "v0": (F, Z), "vv": (F, F), "t0": (E, Z)}


def br(x, y):
    return (x[0] @ y[0] - y[0] @ x[0], x[1] @ y[1] - y[1] @ x[1])


def proj(x, label):
    # second coordinate lies in span(H, F); degree-1 part is (B, B)
    if label == 1:
        return (x[1].copy(), x[1].copy())
    return (x[0] - x[1], Z.copy())


def left_normed(values):
    cur = values[0]
    for v in values[1:]:
        cur = br(cur, v)
    return cur


def perm_sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def alternating(slots, values):
    """sum sgn(s) [x_{s(i_a)}^{h_a}, ...] at x_i = values[i-1]."""
    m = len(slots)
    acc = (Z.copy(), Z.copy())
    for p in itertools.permutations(range(m)):
        v = left_normed([proj(values[p[pos - 1]], lab) for pos, lab in slots])
        s = perm_sign(p)
        acc = (acc[0] + s * v[0], acc[1] + s * v[1])
    return acc


def to_coords(x):
    """Coordinates in (u0, uu, v0, vv, t0)."""
    A, B = x
    b_h, b_f = B[0, 0], B[1, 0]
    assert B[0, 1] == 0 and B[0, 0] == -B[1, 1]
    r = A - B
    return (int(r[0, 0]), int(b_h), int(r[1, 0]), int(b_f), int(r[0, 1]))
