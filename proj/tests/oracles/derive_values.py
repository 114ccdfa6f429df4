#!/usr/bin/env python3
"""Brute-force reference values frozen into the C++ tests.

Deliberately independent of the library: plain numpy, grid search only.
Run it and paste the printed numbers if an expected value ever needs to move.
"""

import itertools
import math

import numpy as np

G1 = np.array([
    [0.4310, 0.0002, 0.2605, 0.0039],
    [0.0002, 0.3018, 0.0008, 0.0054],
    [0.0129, 0.0005, 0.4266, 0.1007],
    [0.0011, 0.0031, 0.0099, 0.0634],
])
PMAX = np.array([0.7, 0.8, 0.9, 1.0]) * 1e-3
NOISE = np.full(4, 1e-7)
W = np.array([1 / 6, 1 / 6, 1 / 3, 1 / 3])


def sinr(g, n, p):
    # g[i, j]: transmitter i to receiver j.
    signal = np.diag(g) * p
    interference = g.T @ p - signal + n
    return signal / interference


def sinr_grid(g, n, p_grid):
    """SINR for a batch of power vectors, one per row of p_grid."""
    total = p_grid @ g + n
    signal = p_grid * np.diag(g)
    return signal / (total - signal)


def main():
    print("G1 sinr at p_max:", repr(list(sinr(G1, NOISE, PMAX))))
    print("G1 1+sinr at p_max:", repr(list(1 + sinr(G1, NOISE, PMAX))))
    print("G1 initial vertex:", repr(list(1 + np.diag(G1) * PMAX / NOISE)))

    # Symmetric pair: projection of z=[50,50] and the max-min SINR, 400x400 grid.
    g = np.array([[1.0, 0.1], [0.1, 1.0]])
    n = np.array([0.01, 0.01])
    axis = np.linspace(0.0, 1.0, 400)
    grid = np.array(list(itertools.product(axis, axis)))
    ratios = 1 + sinr_grid(g, n, grid)
    lam = (ratios / 50.0).min(axis=1).max()
    print("symmetric projection lambda z=[50,50]:", repr(lam))
    print("symmetric max-min sinr:", repr(sinr_grid(g, n, grid).min(axis=1).max()))

    # Dominance pair, 500x500 grid.
    g = np.array([[1.0, 1.0], [1.0, 1.0]])
    axis = np.linspace(0.0, 1.0, 500)
    grid = np.array(list(itertools.product(axis, axis)))
    rates = np.log2(1 + sinr_grid(g, n, grid)) @ np.array([0.5, 0.5])
    k = rates.argmax()
    print("dominance optimum:", repr(rates[k]), "at", grid[k], "closed form", math.log2(101) / 2)

    # G1 max-min SINR on a 30-per-axis grid.
    axes = [np.linspace(0.0, c, 30) for c in PMAX]
    best = 0.0
    for head in itertools.product(*axes[:2]):
        tail = np.array(list(itertools.product(*axes[2:])))
        batch = np.hstack([np.tile(head, (len(tail), 1)), tail])
        best = max(best, sinr_grid(G1, NOISE, batch).min(axis=1).max())
    print("G1 max-min sinr (30^4 grid):", repr(best))

    # Same quantity by bisection on the common SINR target: gamma is reachable
    # iff the minimal power (I - gamma F)^-1 gamma u exists and fits the caps.
    f = (G1.T / np.diag(G1)[:, None]) * (1 - np.eye(4))
    u = NOISE / np.diag(G1)

    def reachable(gamma):
        if max(abs(np.linalg.eigvals(gamma * f))) >= 1:
            return False
        p = np.linalg.solve(np.eye(4) - gamma * f, gamma * u)
        return bool(np.all(p >= 0) and np.all(p <= PMAX))

    lo, hi = 0.0, 100.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if reachable(mid) else (lo, mid)
    print("G1 max-min sinr (bisection):", repr(lo))


if __name__ == "__main__":
    main()
