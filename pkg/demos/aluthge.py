"""Generalized Aluthge transforms, directly and blockwise.

Shows the fixed points (positive operators), the collapse of a Jordan
cell, preservation of the nonzero spectrum, and the closed-form transform
of an off-diagonal 2x2 block against the direct computation.

Run:  python demos/aluthge.py
"""

import numpy as np

from berlab import (
    aluthge_general,
    aluthge_offdiag,
    assemble,
    offdiag_block,
    operator_norm,
)


def cgauss(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def main():
    rng = np.random.default_rng(1)

    print("== positive operators are fixed points ==")
    g = cgauss(rng, (3, 3))
    a = g.conj().T @ g
    for t in (0.0, 0.3, 0.5, 1.0):
        print(f"  t={t:3.1f}: ||aluthge(A,t) - A|| = "
              f"{operator_norm(aluthge_general(a, t) - a):.2e}")

    print("\n== a Jordan cell collapses for t in (0,1) ==")
    cell = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    for t in (0.25, 0.5, 0.75):
        print(f"  t={t}: ||aluthge(J,t)|| = {operator_norm(aluthge_general(cell, t)):.2e}")

    print("\n== nonzero spectrum is preserved ==")
    t_mat = cgauss(rng, (4, 4))
    eigs = np.sort_complex(np.linalg.eigvals(t_mat))
    til = aluthge_general(t_mat, 0.5)
    til_eigs = np.sort_complex(np.linalg.eigvals(til))
    print(f"  max eigenvalue drift: {np.max(np.abs(eigs - til_eigs)):.2e}")
    print(f"  but the norm contracts: ||T|| = {operator_norm(t_mat):.4f}, "
          f"||T~|| = {operator_norm(til):.4f}")

    print("\n== closed-form transform of [[0,X],[Y,0]] ==")
    x, y = cgauss(rng, (3, 3)), cgauss(rng, (3, 3))
    block = offdiag_block(x, y)
    for t in (0.25, 0.5, 0.75):
        closed = assemble(aluthge_offdiag(x, y, t))
        direct = aluthge_general(assemble(block), t)
        print(f"  t={t}: ||closed-form - direct|| = "
              f"{operator_norm(closed - direct):.2e}")


if __name__ == "__main__":
    main()
