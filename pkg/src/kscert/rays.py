"""Complex ray and projector arithmetic.

A ray is a unit vector in C^D considered up to global phase.  This module
provides the inner product, the conjugate cross product used to complete
orthonormal triples in C^3, Gram matrices of moduli, and eigenvalues of
Hermitian projector sums via a cyclic Jacobi sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import (
    HERMITIAN_DEFECT,
    JACOBI_OFFDIAG,
    NORM_EPS,
    RAY_EQ_EPS,
    TRACE_EPS,
)
from .errors import DegenerateError, DimensionError, RangeError


def _as_complex_vector(components) -> np.ndarray:
    vec = np.asarray(components, dtype=np.complex128)
    if vec.ndim != 1:
        raise DimensionError(f"expected a 1-d vector, got shape {vec.shape}")
    if vec.shape[0] < 2:
        raise DimensionError("rays need dimension >= 2")
    if not np.all(np.isfinite(vec.view(np.float64))):
        raise RangeError("ray components must be finite")
    return vec


@dataclass(frozen=True)
class Ray:
    """A unit vector in C^D with an opaque label.

    Two rays are considered equal when the modulus of their inner product
    is within RAY_EQ_EPS of one; componentwise comparison is never used.
    """

    vector: np.ndarray
    label: str = ""

    def __post_init__(self):
        vec = _as_complex_vector(self.vector)
        norm_sq = _norm_squared(vec)
        if abs(norm_sq - 1.0) > NORM_EPS:
            raise RangeError(
                f"ray {self.label!r} is not unit norm (|r|^2 = {norm_sq!r}); "
                "use Ray.from_components to normalize on ingestion"
            )
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)

    @classmethod
    def from_components(cls, components, label: str = "", normalize: bool = True) -> "Ray":
        """Build a ray, normalizing if needed and recording the original norm.

        Args:
            components: sequence of D complex numbers (or (re, im) pairs).
            label: identifier carried through all constructions.
            normalize: when True, non-unit input is scaled to unit norm and
                the original norm is appended to the label.

        Raises:
            DimensionError: fewer than two components.
            RangeError: non-finite components, zero vector, or non-unit
                input with normalize=False.
        """
        vec = _as_complex_vector(components)
        norm = math.sqrt(_norm_squared(vec))
        if norm == 0.0:
            raise RangeError("cannot normalize the zero vector")
        if abs(norm * norm - 1.0) <= NORM_EPS:
            return cls(vec, label)
        if not normalize:
            raise RangeError(f"ray {label!r} is not unit norm (|r| = {norm!r})")
        annotated = f"{label} [normalized /{norm:.12g}]" if label else f"[normalized /{norm:.12g}]"
        return cls(vec / norm, annotated)

    @property
    def dimension(self) -> int:
        return self.vector.shape[0]

    def phase_multiplied(self, phase: complex) -> "Ray":
        """Same ray with a global phase applied (|phase| must be 1)."""
        if abs(abs(phase) - 1.0) > NORM_EPS:
            raise RangeError("global phase must have modulus 1")
        return Ray(self.vector * phase, self.label)


def _norm_squared(vec: np.ndarray) -> float:
    # Left-associated loop: appending exact zeros (zero-padded lifts) can
    # never change the rounding of the partial sums.
    total = 0.0
    for component in vec:
        z = complex(component)
        total += z.real * z.real + z.imag * z.imag
    return total


def inner(a: Ray, b: Ray) -> complex:
    """Inner product <a|b> = sum_i conj(a_i) b_i.

    Conjugate-symmetric: inner(a, b) == conj(inner(b, a)).

    Raises:
        DimensionError: the rays live in different dimensions.
    """
    if a.dimension != b.dimension:
        raise DimensionError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    total = 0j
    av, bv = a.vector, b.vector
    for i in range(a.dimension):
        total += complex(av[i]).conjugate() * complex(bv[i])
    return total


def rays_equal(a: Ray, b: Ray) -> bool:
    """Projective equality: |<a|b>| within RAY_EQ_EPS of one."""
    if a.dimension != b.dimension:
        return False
    return abs(inner(a, b)) >= 1.0 - RAY_EQ_EPS


def conj_cross(a: Ray, b: Ray) -> np.ndarray:
    """Conjugate cross product g = conj(a) x conj(b) in C^3.

    The result satisfies <g|a> = <g|b> = 0 and |g|^2 = 1 - |<a|b>|^2 for
    unit inputs; it is returned unnormalized.

    Raises:
        DimensionError: either ray is not 3-dimensional.
        DegenerateError: the inputs are projectively parallel (|g| < 1e-9).
    """
    if a.dimension != 3 or b.dimension != 3:
        raise DimensionError("conjugate cross product is defined in C^3 only")
    g = np.cross(np.conj(a.vector), np.conj(b.vector))
    if math.sqrt(_norm_squared(g)) < 1e-9:
        raise DegenerateError("parallel rays admit no cross direction")
    return g


def normalized(vec: np.ndarray, label: str = "") -> Ray:
    """Ray along vec (raises DegenerateError for a near-zero vector)."""
    norm = math.sqrt(_norm_squared(np.asarray(vec, dtype=np.complex128)))
    if norm < 1e-12:
        raise DegenerateError("cannot orient a near-zero vector")
    return Ray(np.asarray(vec, dtype=np.complex128) / norm, label)


def projector(ray: Ray) -> np.ndarray:
    """Rank-1 projector |r><r| as a dense complex matrix."""
    return np.outer(ray.vector, np.conj(ray.vector))


def _common_dimension(rays) -> int:
    if not rays:
        raise DimensionError("empty ray list")
    dims = {r.dimension for r in rays}
    if len(dims) != 1:
        raise DimensionError(f"mixed dimensions in ray list: {sorted(dims)}")
    return dims.pop()


def gram(rays) -> np.ndarray:
    """Real symmetric matrix of inner-product moduli |<r_i|r_j>|.

    The diagonal is exactly 1.

    Raises:
        DimensionError: empty input or mixed dimensions.
    """
    _common_dimension(rays)
    n = len(rays)
    g = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            g[i, j] = g[j, i] = abs(inner(rays[i], rays[j]))
    return g


@dataclass(frozen=True)
class HermitianMatrix:
    """Dense Hermitian matrix with a bounded symmetry defect.

    Construction symmetrizes nothing: callers are expected to pass data
    whose anti-Hermitian part is below HERMITIAN_DEFECT already.
    """

    entries: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.entries, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {mat.shape}")
        defect = np.max(np.abs(mat - mat.conj().T)) if mat.size else 0.0
        if defect > HERMITIAN_DEFECT:
            raise RangeError(f"symmetry defect {defect!r} exceeds {HERMITIAN_DEFECT}")
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return hermitian_eigenvalues(self.entries)


def hermitize(mat: np.ndarray) -> np.ndarray:
    """(A + A^dagger)/2, discarding anti-Hermitian numerical noise."""
    return (mat + mat.conj().T) / 2.0


def hermitian_eigenvalues(matrix: np.ndarray, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi.

    Each sweep annihilates every off-diagonal entry with a complex Givens
    rotation; iteration stops when the off-diagonal Frobenius norm drops
    below JACOBI_OFFDIAG.  Adequate and deterministic for the small dense
    matrices (D <~ 100) this package produces.
    """
    a = np.array(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    scale = max(1.0, float(np.max(np.abs(a))))
    for _ in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += abs(a[p, q]) ** 2
        if math.sqrt(2.0 * off) <= JACOBI_OFFDIAG * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, p, q)
    eigenvalues = np.sort(np.real(np.diag(a)))
    return eigenvalues


def _jacobi_rotate(a: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    mag = abs(apq)
    if mag == 0.0:
        return
    phase = apq / mag
    alpha = a[p, p].real
    beta = a[q, q].real
    tau = (alpha - beta) / (2.0 * mag)
    if tau == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    # A <- J^dagger A J with J[p,p]=c, J[p,q]=-s*phase, J[q,p]=s*conj(phase), J[q,q]=c.
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p + s * np.conj(phase) * col_q
    a[:, q] = -s * phase * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p + s * phase * row_q
    a[q, :] = -s * np.conj(phase) * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


@dataclass(frozen=True)
class ProjectorSpectrum:
    """Eigenvalues of a sum of rank-1 projectors, ascending."""

    lambda_min: float
    lambda_max: float
    eigenvalues: tuple = field(default_factory=tuple)


def projector_sum(rays) -> np.ndarray:
    """The Hermitian matrix sum_j |r_j><r_j|."""
    dim = _common_dimension(rays)
    total = np.zeros((dim, dim), dtype=np.complex128)
    for ray in rays:
        total += projector(ray)
    return hermitize(total)


def projector_sum_spectrum(rays) -> ProjectorSpectrum:
    """Spectrum of sum_j |r_j><r_j| over a nonempty ray list.

    The eigenvalue sum is checked against the ray count (trace identity)
    to TRACE_EPS as an internal consistency guard.

    Raises:
        DimensionError: empty list or mixed dimensions.
    """
    eigenvalues = hermitian_eigenvalues(projector_sum(rays))
    total = float(np.sum(eigenvalues))
    if abs(total - len(rays)) > TRACE_EPS:
        raise FloatingPointError(
            f"eigenvalue sum {total!r} deviates from ray count {len(rays)}"
        )
    return ProjectorSpectrum(
        lambda_min=float(eigenvalues[0]),
        lambda_max=float(eigenvalues[-1]),
        eigenvalues=tuple(float(x) for x in eigenvalues),
    )
