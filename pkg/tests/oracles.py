"""
Reference implementations used only by the tests.

Each one follows the operator definitions literally and shares no code with
the package: dictionaries keyed by basis labels instead of arrays, explicit
loops instead of slicing, and a hand-written Jacobi eigensolver instead of
LAPACK.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict

import numpy as np

SQ = 1 / math.sqrt(2)


def naive_walk_2d(T, phi_x, phi_y, coin, base=1):
    """Map (x, y, c) -> amplitude after T steps of the alternate walk."""
    psi = {(0, 0, 0): complex(coin[0]), (0, 0, 1): complex(coin[1])}

    def hadamard(p):
        out = defaultdict(complex)
        for (x, y, c), a in p.items():
            out[(x, y, 0)] += SQ * a
            out[(x, y, 1)] += SQ * a if c == 0 else -SQ * a
        return dict(out)

    def phase(p, phi, t):
        return {
            (x, y, c): a * cmath.exp((-1j if c == 0 else 1j) * phi * t / 2)
            for (x, y, c), a in p.items()
        }

    def move_x(p):
        return {(x - 1 if c == 0 else x + 1, y, c): a for (x, y, c), a in p.items()}

    def move_y(p):
        return {(x, y - 1 if c == 0 else y + 1, c): a for (x, y, c), a in p.items()}

    for k in range(T):
        t = k + base
        psi = move_x(phase(hadamard(psi), phi_x, t))
        psi = move_y(phase(hadamard(psi), phi_y, t))
    return psi


def naive_hadamard_walk_1d(T, coin):
    """Textbook 1D Hadamard walk, map (x, c) -> amplitude."""
    psi = {(0, 0): complex(coin[0]), (0, 1): complex(coin[1])}
    for _ in range(T):
        nxt = defaultdict(complex)
        for (x, c), a in psi.items():
            # H|0> = (|0> + |1>)/sqrt2, H|1> = (|0> - |1>)/sqrt2, then |x,0> -> |x-1,0>, |x,1> -> |x+1,1>
            nxt[(x - 1, 0)] += SQ * a
            nxt[(x + 1, 1)] += SQ * a * (1 if c == 0 else -1)
        psi = dict(nxt)
    return psi


def jacobi_eigenvalues(h, tol=1e-14, max_sweeps=100):
    """
    Cyclic Jacobi for a complex Hermitian matrix.

    Each rotation zeroes one off-diagonal pair (p, q): the phase of h[p, q] is
    removed first, then a real Givens rotation finishes the job.
    """
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = math.sqrt(sum(abs(a[i, j]) ** 2 for i in range(n) for j in range(n) if i != j))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                g = abs(apq)
                ph = apq / g
                theta = (a[q, q].real - a[p, p].real) / (2 * g)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                # rotation J: columns p, q mix as  p' = c p - s conj(ph) q,  q' = s ph p + c q
                jp = a[:, p].copy()
                jq = a[:, q].copy()
                a[:, p] = c * jp - s * np.conj(ph) * jq
                a[:, q] = s * ph * jp + c * jq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * ph * rq
                a[q, :] = s * np.conj(ph) * rp + c * rq
    return np.sort(np.real(np.diag(a)))
