#!/usr/bin/env python3
"""Generate the interpolation node tables in src/node_tables.cpp.

Nodes on the simplex {u >= 0, v >= 0, u + v <= 1} are seeded with the
eigenvalues of the multiplication-by-z operator compressed to polynomials of
degree <= p (z is the complex coordinate of the equilateral image of the
triangle), then moved by damped Gauss-Newton so that the n_pol-point rule
integrates all polynomials of the highest reachable degree exactly while
every node stays interior and every weight stays positive.

Usage: tools/gen_node_tables.py > src/node_tables.cpp
"""
import sys

import numpy as np
from scipy.special import eval_jacobi, eval_legendre

MAX_ORDER = 12


def koornwinder(p, u, v):
    out = []
    for d in range(p + 1):
        for m in range(d, -1, -1):
            n = d - m
            with np.errstate(all="ignore"):
                a = np.where(1 - v > 1e-300, 2 * u / np.maximum(1 - v, 1e-300) - 1, -1.0)
            c = np.sqrt((2 * m + 1) * (2 * m + 2 * n + 2))
            out.append(c * eval_legendre(m, a) * (1 - v) ** m * eval_jacobi(n, 2 * m + 1, 0, 2 * v - 1))
    return np.array(out)


def koornwinder_grad(p, u, v, h=1e-7):
    du = (koornwinder(p, u + h, v) - koornwinder(p, u - h, v)) / (2 * h)
    dv = (koornwinder(p, u, v + h) - koornwinder(p, u, v - h)) / (2 * h)
    return du, dv


def collapsed_rule(n):
    x, w = np.polynomial.legendre.leggauss(n)
    x, w = (x + 1) / 2, w / 2
    s, t = np.meshgrid(x, x, indexing="ij")
    ws, wt = np.meshgrid(w, w, indexing="ij")
    v = t.ravel()
    return (1 - v) * s.ravel(), v, (ws * wt).ravel() * (1 - v)


def interior(u, v):
    return u.min() > 0 and v.min() > 0 and (1 - u - v).min() > 0


def seed(p):
    U, V, W = collapsed_rule(3 * p + 6)
    K = koornwinder(p, U, V)
    x = U + 0.5 * V - 0.5
    y = np.sqrt(3) / 2 * V - np.sqrt(3) / 6
    M = (K * W * (x + 1j * y)) @ K.T
    ev = np.linalg.eigvals(M)
    v = (ev.imag + np.sqrt(3) / 6) / (np.sqrt(3) / 2)
    u = ev.real + 0.5 - 0.5 * v
    order = np.lexsort((u, v))
    return u[order], v[order]


def interp_weights(p, u, v):
    V = koornwinder(p, u, v)
    rhs = np.zeros(V.shape[0])
    rhs[0] = 1 / np.sqrt(2)
    return np.linalg.solve(V, rhs)


def gauss_newton(D, u, v, w, iters=200):
    target = np.zeros((D + 1) * (D + 2) // 2)
    target[0] = 1 / np.sqrt(2)
    n = len(u)
    for _ in range(iters):
        K = koornwinder(D, u, v)
        r = K @ w - target
        if np.linalg.norm(r) < 1e-15:
            break
        Ku, Kv = koornwinder_grad(D, u, v)
        J = np.hstack([K, Ku * w, Kv * w])
        dx = np.linalg.lstsq(J, -r, rcond=None)[0]
        step = 1.0
        while step > 1e-4:
            w2, u2, v2 = w + step * dx[:n], u + step * dx[n:2 * n], v + step * dx[2 * n:]
            if interior(u2, v2) and w2.min() > 0:
                r2 = koornwinder(D, u2, v2) @ w2 - target
                if np.linalg.norm(r2) < np.linalg.norm(r):
                    break
            step /= 2
        else:
            return None
        u, v, w = u2, v2, w2
    res = np.linalg.norm(koornwinder(D, u, v) @ w - target)
    return (u, v, w) if res < 1e-13 else None


def build(p):
    u, v = seed(p)
    w = interp_weights(p, u, v)
    if w.min() <= 0:
        w = np.full(len(u), 0.5 / len(u))
    degree = p
    for D in range(p, 2 * p + 2):
        r = gauss_newton(D, u.copy(), v.copy(), w.copy())
        if r is None:
            break
        u, v, w = r
        degree = D
    assert interp_weights(p, u, v).min() > 0
    return u, v, degree


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_node_tables.py. Do not edit.\n\n")
    out.write('#include "node_tables.hpp"\n\nnamespace lbie::detail {\n\nnamespace {\n\n')
    degrees = []
    for p in range(1, MAX_ORDER + 1):
        u, v, degree = build(p)
        degrees.append(degree)
        out.write(f"// order {p}: {len(u)} nodes, quadrature degree {degree}\n")
        out.write(f"constexpr double kNodes{p}[] = {{\n")
        for a, b in zip(u, v):
            out.write(f"    {float(a)!r}, {float(b)!r},\n")
        out.write("};\n\n")
    out.write("}  // namespace\n\n")
    out.write("NodeTable node_table(int order)\n{\n    switch (order) {\n")
    for p in range(1, MAX_ORDER + 1):
        out.write(f"    case {p}: return {{kNodes{p}, {degrees[p - 1]}}};\n")
    out.write("    default: return {nullptr, 0};\n    }\n}\n\n}  // namespace lbie::detail\n")


if __name__ == "__main__":
    main()
