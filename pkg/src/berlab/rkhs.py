"""Finite-dimensional kernel-space models and Berezin functionals.

A space is built from a finite point set and a positive-definite Gram
matrix. Operators act in an orthonormal coordinate chart, so all inner
products are the ordinary complex dot product. The Berezin supremum is the
exact maximum over the finite point set, which is the whole index set of
the model by construction.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import numlin
from .errors import (
    BadParams,
    DimensionMismatch,
    DuplicatePoints,
    IllConditioned,
    IndexOutOfRange,
)

COND_FLOOR = 1e-10

FAMILY_TAGS = ("identity", "szego", "bergman", "gaussian")


@dataclass(frozen=True)
class KernelFamily:
    """A named reproducing kernel with family-specific parameters."""

    tag: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise BadParams(f"unknown kernel family {self.tag!r}")
        if self.tag == "gaussian":
            sigma = self.params.get("sigma", 1.0)
            if not sigma > 0:
                raise BadParams("gaussian kernel needs sigma > 0")

    def evaluate(self, z, w):
        """k(z, w) for a pair of sample points."""
        if self.tag == "identity":
            return 1.0 if z == w else 0.0
        if self.tag == "szego":
            return 1.0 / (1.0 - z * np.conj(w))
        if self.tag == "bergman":
            return 1.0 / (1.0 - z * np.conj(w)) ** 2
        sigma = self.params.get("sigma", 1.0)
        return math.exp(-((z - w) ** 2) / (2.0 * sigma**2))


@dataclass(frozen=True)
class KernelSpace:
    """Finite model of a functional Hilbert space.

    ``gram[i, j] = k(p_i, p_j)`` and column j of ``chart`` holds the
    coordinates of the kernel at point j in an orthonormal basis, so
    ``chart* chart == gram``.
    """

    points: tuple
    gram: np.ndarray
    chart: np.ndarray

    @property
    def dim(self):
        return len(self.points)

    def kernel_column(self, j):
        """Unnormalized kernel coordinates at point j."""
        if not 0 <= j < self.dim:
            raise IndexOutOfRange(f"point index {j} outside 0..{self.dim - 1}")
        return self.chart[:, j].copy()

    def normalized_chart(self):
        """Matrix whose column j is the normalized kernel at point j."""
        norms = np.sqrt(np.einsum("ij,ij->j", self.chart.conj(), self.chart).real)
        return self.chart / norms[None, :]

    def check_operator(self, a):
        a = numlin.as_matrix(a)
        if a.shape != (self.dim, self.dim):
            raise DimensionMismatch(
                f"operator is {a.shape}, space has dim {self.dim}"
            )
        return a


def build_space(family, points, cond_floor=COND_FLOOR):
    """Construct a KernelSpace for a family over distinct sample points."""
    points = tuple(points)
    if len(points) == 0:
        raise BadParams("need at least one sample point")
    if len(set(points)) != len(points):
        raise DuplicatePoints("sample points must be pairwise distinct")
    if family.tag in ("szego", "bergman"):
        if any(abs(p) >= 1.0 for p in points):
            raise BadParams(f"{family.tag} points must satisfy |p| < 1")
    n = len(points)
    gram = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            gram[i, j] = family.evaluate(points[i], points[j])
    gram = (gram + gram.conj().T) / 2.0
    w, q = np.linalg.eigh(gram)
    if w[-1] <= 0 or w[0] < cond_floor * w[-1]:
        raise IllConditioned(
            f"gram spectrum [{w[0]:.3e}, {w[-1]:.3e}] below cond floor"
        )
    chart = (np.sqrt(w)[:, None]) * q.conj().T
    return KernelSpace(points=points, gram=gram, chart=chart)


def identity_space(n):
    """Orthonormal-kernel space on n abstract indices."""
    return build_space(KernelFamily("identity"), range(n))


def normalized_kernel(space, j):
    """Unit vector proportional to the kernel at point j."""
    col = space.kernel_column(j)
    return col / np.linalg.norm(col)


def berezin_symbol(space, a, j):
    """<A k_j, k_j> for the normalized kernel at point j."""
    a = space.check_operator(a)
    k = normalized_kernel(space, j)
    return complex(k.conj() @ (a @ k))


def berezin_symbols(space, a):
    """All Berezin symbols of A at once, as a length-dim complex array."""
    a = space.check_operator(a)
    khat = space.normalized_chart()
    return np.einsum("ji,jk,ki->i", khat.conj(), a, khat)


def berezin_peak(space, a):
    """(ber(A), argmax point index)."""
    vals = np.abs(berezin_symbols(space, a))
    j = int(np.argmax(vals))
    return float(vals[j]), j


def berezin_number(space, a):
    """Maximum modulus of the Berezin symbol over the point set."""
    return berezin_peak(space, a)[0]


def ber_via_rotations(space, a, grid):
    """max over a uniform theta grid of ber(Re(e^{i theta} A))."""
    if grid < 4:
        raise BadParams("rotation grid must have at least 4 points")
    a = space.check_operator(a)
    best = 0.0
    for theta in np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False):
        best = max(best, berezin_number(space, numlin.re_rotation(a, theta)))
    return best
