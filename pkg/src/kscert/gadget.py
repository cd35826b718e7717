"""Geometric construction of the (2+6n)-ray gadget for one ray pair.

Given rays psi, phi in C^3 with overlap c = |<psi|phi>| <= delta(n), the
builder produces n nested chain pairs e_{k,+/-} whose overlaps step down
the threshold sequence (|<e_k+|e_k->| = delta(k-1), so the innermost pair
is orthogonal), plus 2n complete orthonormal bases tying the chain to the
outer pair.  Any KS value assignment that sets both outer rays to 1 is
then forced into assigning 1 to two orthogonal rays, which rule I forbids.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import (
    CHAIN_EPS,
    OPERATOR_EPS,
    ORTH_EPS,
    RAY_EQ_EPS,
    TIE_EPS,
)
from .errors import (
    DegenerateError,
    DimensionError,
    InvalidModelError,
    OrderTooLowError,
    RangeError,
)
from .rays import (
    HermitianMatrix,
    Ray,
    conj_cross,
    hermitian_eigenvalues,
    hermitize,
    inner,
    normalized,
    projector,
    rays_equal,
)
from .thresholds import delta, order_of
from .wiring import GadgetWiring, chain_slot, gadget_wiring


class EconomyWarning(UserWarning):
    """A lower order (fewer bases) would already cover this overlap."""


@dataclass(frozen=True)
class OrthoBasis:
    """Complete orthonormal triple with its position in the gadget."""

    rays: tuple[Ray, Ray, Ray]
    level: int
    branch: str


@dataclass(frozen=True)
class PairModel:
    """The (2+6n)-ray gadget linking one ray pair.

    rays holds every gadget ray in wiring order (0 = psi, 1 = phi); edges
    are local index pairs that the geometry realizes as orthogonalities.
    Projectively coincident rays are recorded in `coincidences`, never
    merged here.
    """

    order: int
    psi: Ray
    phi: Ray
    chain: tuple[tuple[Ray, Ray], ...]
    bases: tuple[OrthoBasis, ...]
    rays: tuple[Ray, ...]
    edges: tuple[tuple[int, int], ...]
    coincidences: tuple[tuple[int, int], ...]
    theta: float
    phase_v: float

    @property
    def wiring(self) -> GadgetWiring:
        return gadget_wiring(self.order)


def build_pair_model(psi: Ray, phi: Ray, n: int, theta: float = 0.0) -> PairModel:
    """Construct the order-n gadget for the pair (psi, phi).

    Args:
        psi, phi: projectively distinct rays in C^3 with overlap at most
            delta(n) (up to TIE_EPS).
        n: number of nested levels (positive).
        theta: free phase of the cross-direction component; the default 0
            fixes a deterministic representative of the gadget family.

    Raises:
        DimensionError: rays not 3-dimensional.
        RangeError: n < 1.
        OrderTooLowError: overlap exceeds delta(n); carries the smallest
            sufficient order.
        DegenerateError: psi and phi projectively equal.
    """
    if psi.dimension != 3 or phi.dimension != 3:
        raise DimensionError("pair gadgets are defined in C^3 only")
    if n < 1:
        raise RangeError(f"gadget order must be positive, got {n}")
    if rays_equal(psi, phi):
        raise DegenerateError("cannot build a gadget for projectively equal rays")
    overlap = inner(psi, phi)
    c = abs(overlap)
    if c > float(delta(n)) + TIE_EPS:
        needed = order_of(min(c, 1.0 - 1e-15))
        raise OrderTooLowError(
            f"overlap {c!r} exceeds delta({n}) = {float(delta(n))!r}; "
            f"order {needed} suffices",
            suggested_order=needed,
        )
    needed = order_of(c)
    if needed < n:
        warnings.warn(
            f"overlap {c:.6g} already satisfies order {needed}; "
            f"order {n} spends {2 * (n - needed)} extra bases",
            EconomyWarning,
            stacklevel=2,
        )

    # Chain recursion, top level first: each step takes the current outer
    # pair down to an inner pair whose overlap is the next threshold.
    chain: dict[int, tuple[Ray, Ray]] = {}
    outer_plus, outer_minus = psi, phi
    for k in range(n, 0, -1):
        inner_plus, inner_minus = _descend(outer_plus, outer_minus, k, theta)
        chain[k] = (inner_plus, inner_minus)
        outer_plus, outer_minus = inner_plus, inner_minus

    wiring = gadget_wiring(n)
    slots: list[Ray | None] = [None] * wiring.vertex_count
    slots[0], slots[1] = psi, phi
    for k in range(1, n + 1):
        plus, minus = chain[k]
        slots[chain_slot(k, "+")] = Ray(plus.vector, f"e{k}+")
        slots[chain_slot(k, "-")] = Ray(minus.vector, f"e{k}-")

    bases: list[OrthoBasis] = []
    for (head, comp_plus, comp_minus), (k, branch) in zip(wiring.bases, wiring.basis_tags):
        head_ray = slots[head]
        for sigma, slot in (("+", comp_plus), ("-", comp_minus)):
            if k == n:
                outer_ray = psi if sigma == "+" else phi
            else:
                outer_ray = slots[chain_slot(k + 1, sigma)]
            completion = normalized(
                conj_cross(head_ray, outer_ray), f"x{k}{branch}{sigma}"
            )
            slots[slot] = completion
        bases.append(
            OrthoBasis(
                rays=(slots[head], slots[comp_plus], slots[comp_minus]),
                level=k,
                branch=branch,
            )
        )

    rays = tuple(slots)
    coincidences = tuple(
        (i, j)
        for i in range(len(rays))
        for j in range(i + 1, len(rays))
        if rays_equal(rays[i], rays[j])
    )
    model = PairModel(
        order=n,
        psi=psi,
        phi=phi,
        chain=tuple(chain[k] for k in range(1, n + 1)),
        bases=tuple(bases),
        rays=rays,
        edges=wiring.edges,
        coincidences=coincidences,
        theta=theta,
        phase_v=-cmath.phase(overlap) if c > 0.0 else 0.0,
    )
    validate_pair_model(model)
    return model


def _descend(a: Ray, b: Ray, level: int, theta: float) -> tuple[Ray, Ray]:
    """One chain step: inner pair with overlap delta(level - 1)."""
    overlap = inner(a, b)
    c = abs(overlap)
    v = -cmath.phase(overlap) if c > 0.0 else 0.0
    target = float(delta(level - 1))
    # cos^2 u solving  1 - 2(1-c)cos^2(u)/(1+c) = target;  c == delta(level)
    # gives exactly u = 0, and the tie slack can push the ratio past 1.
    cos_sq = (1.0 - target) * (1.0 + c) / (2.0 * (1.0 - c))
    cos_sq = min(max(cos_sq, 0.0), 1.0)
    cos_u = math.sqrt(cos_sq)
    sin_u = math.sqrt(max(0.0, 1.0 - cos_sq))
    phase_v = cmath.exp(1j * v)
    cross = conj_cross(a, b)
    diff = a.vector - b.vector * phase_v
    summ = a.vector + b.vector * phase_v
    coeff_cross = cmath.exp(1j * theta) * cos_u / (1.0 + c)
    coeff_sum = math.sqrt(4.0 * c + (1.0 - c) ** 2 * sin_u**2) / (2.0 * (1.0 + c))
    base = (sin_u / 2.0) * diff + coeff_sum * summ
    plus = normalized(base + coeff_cross * cross)
    minus = normalized(base - coeff_cross * cross)
    return plus, minus


def validate_pair_model(model: PairModel) -> None:
    """Check every structural invariant; raises InvalidModelError."""
    wiring = model.wiring
    if len(model.rays) != wiring.vertex_count:
        raise InvalidModelError(
            f"expected {wiring.vertex_count} rays, found {len(model.rays)}"
        )
    for basis in model.bases:
        for i in range(3):
            for j in range(i + 1, 3):
                value = abs(inner(basis.rays[i], basis.rays[j]))
                if value >= ORTH_EPS:
                    raise InvalidModelError(
                        f"basis (level {basis.level}, branch {basis.branch}) "
                        f"is not orthonormal: |<.|.>| = {value!r}"
                    )
    for u, v in model.edges:
        value = abs(inner(model.rays[u], model.rays[v]))
        if value >= ORTH_EPS:
            raise InvalidModelError(
                f"declared edge ({u}, {v}) not orthogonal: |<.|.>| = {value!r}"
            )
    for k, (plus, minus) in enumerate(model.chain, start=1):
        target = float(delta(k - 1))
        value = abs(inner(plus, minus))
        if abs(value - target) > CHAIN_EPS:
            raise InvalidModelError(
                f"chain overlap at level {k} is {value!r}, expected {target!r}"
            )
    c = abs(inner(model.psi, model.phi))
    if c > float(delta(model.order)) + TIE_EPS:
        raise InvalidModelError(
            f"outer overlap {c!r} exceeds delta({model.order})"
        )


def pair_operator_C(model: PairModel) -> HermitianMatrix:
    """The gadget observable C(psi, phi) as a 3x3 Hermitian matrix.

    C sums the projectors of every gadget ray except the outer pair and
    subtracts the projector products along all declared edges.  For a
    valid model every basis resolves the identity and every edge product
    vanishes, so C equals 2n times the identity to OPERATOR_EPS; a larger
    deviation raises InvalidModelError.
    """
    validate_pair_model(model)
    dim = model.psi.dimension
    total = np.zeros((dim, dim), dtype=np.complex128)
    projectors = [projector(ray) for ray in model.rays]
    for p in projectors:
        total += p
    for u, v in model.edges:
        total -= projectors[u] @ projectors[v]
    total -= projectors[0]
    total -= projectors[1]
    expected = 2.0 * model.order * np.eye(dim)
    if np.max(np.abs(total - expected)) > OPERATOR_EPS:
        raise InvalidModelError("gadget observable does not resolve 2n * identity")
    return HermitianMatrix(hermitize(total))


@dataclass(frozen=True)
class PairBounds:
    """Classical bound and largest quantum value of P_psi + P_phi + C."""

    classical: int
    quantum_max: float


def pair_inequality_bounds(model: PairModel) -> PairBounds:
    """Bounds of the pairwise inequality for a valid gadget.

    The classical side is 2n+1; the quantum side is the top eigenvalue of
    P_psi + P_phi + C, which equals 2n + 1 + |<psi|phi>|.
    """
    operator = pair_operator_C(model).entries.copy()
    operator += projector(model.psi)
    operator += projector(model.phi)
    eigenvalues = hermitian_eigenvalues(hermitize(operator))
    return PairBounds(
        classical=2 * model.order + 1,
        quantum_max=float(eigenvalues[-1]),
    )


def max_overlap_bound(delta_value: float) -> float:
    """Largest outer overlap realizable over an inner pair of overlap delta.

    Returns (1 + delta) / (3 - delta); the bound is tight, approached when
    the cross-direction amplitude of the outer ray has squared modulus
    (1 - delta) / (3 - delta).

    Raises:
        RangeError: delta outside [0, 1).
    """
    d = float(delta_value)
    if not math.isfinite(d) or d < 0.0 or d >= 1.0:
        raise RangeError(f"inner overlap must lie in [0, 1), got {delta_value!r}")
    return (1.0 + d) / (3.0 - d)


def overlap_witness_amplitude(delta_value: float) -> float:
    """|z| at which max_overlap_bound is attained."""
    d = float(delta_value)
    if not math.isfinite(d) or d < 0.0 or d >= 1.0:
        raise RangeError(f"inner overlap must lie in [0, 1), got {delta_value!r}")
    return math.sqrt((1.0 - d) / (3.0 - d))
