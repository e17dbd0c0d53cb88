"""Structured vectors over vertex pairs and their hyperspherical geometry.

A graph or clustering on ``n`` vertices induces a vector in ``R^N`` with
``N = n*(n-1)/2`` coordinates, one per unordered vertex pair.  Vectors of
interest (clustering vectors, edge vectors, null-model expectations, their
linear combinations) are never dense-materialized here; they are stored as a
sparse pair map plus a short list of rank-1 *product kernels*, where a kernel
``(kappa, a)`` contributes ``kappa * a[i] * a[j]`` to every pair ``ij``.

All inner products, norms, distances, latitudes and projections are computed
in closed form from this structure, in ``O(n*K^2 + |sparse|*K)`` for ``K``
kernels.  Every binary (+/-1) vector has Euclidean length ``sqrt(N)``, so all
clustering vectors live on the radius-``sqrt(N)`` hypersphere; the geometry
below (latitude, meridian angle, parallel projection) is the spherical
geometry of that hypersphere with the all-minus-one vector as the fine pole.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

# A vector counts as sitting on a pole when its component orthogonal to the
# all-ones direction is below this relative tolerance.
POLE_RTOL = 1e-12


class ZeroVectorError(ValueError):
    """Raised when an operation needs a direction but got the zero vector."""


class PoleError(ValueError):
    """Raised when a quantity is undefined on the poles (multiples of 1)."""


def num_pairs(n: int) -> int:
    """Number of unordered vertex pairs ``N = n*(n-1)/2``."""
    return n * (n - 1) // 2


def pair_rank(n: int, i: int, j: int) -> int:
    """Position of pair ``(i, j)``, ``i < j``, in row-major upper-triangle order."""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Yield all unordered pairs ``(i, j)`` with ``i < j`` in rank order."""
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


@dataclass(frozen=True, eq=False)
class ProductKernel:
    """Rank-1 contribution ``coefficient * attribute[i] * attribute[j]`` per pair.

    A kernel with the all-ones attribute and coefficient ``c`` represents the
    uniform vector ``c * 1``.
    """

    coefficient: float
    attribute: np.ndarray

    def __post_init__(self):
        attr = np.asarray(self.attribute, dtype=float)
        attr.setflags(write=False)
        object.__setattr__(self, "attribute", attr)
        object.__setattr__(self, "coefficient", float(self.coefficient))

    @property
    def is_constant(self) -> bool:
        return bool(np.all(self.attribute == 1.0))

    def scaled(self, factor: float) -> "ProductKernel":
        return ProductKernel(self.coefficient * factor, self.attribute)


@dataclass(frozen=True, eq=False)
class PairVector:
    """A point of ``R^N`` stored as sparse pair entries plus product kernels.

    The dense coordinate of pair ``ij`` is
    ``sparse.get((i, j), 0) + sum_k kappa_k * a_k[i] * a_k[j]``.
    Instances are immutable; addition and scalar multiplication return new
    vectors in the same structured form.
    """

    n: int
    sparse: dict
    kernels: tuple

    @classmethod
    def build(cls, n: int, sparse: dict | None = None,
              kernels: tuple | list = ()) -> "PairVector":
        """Validate and normalize parts: merge constant kernels, drop zeros."""
        sp = {}
        if sparse:
            for (i, j), v in sparse.items():
                if not (0 <= i < j < n):
                    raise ValueError(f"invalid pair key ({i}, {j}) for n={n}")
                if v != 0.0:
                    sp[(i, j)] = float(v)
        const = 0.0
        kept = []
        for k in kernels:
            if len(k.attribute) != n:
                raise ValueError(
                    f"kernel attribute length {len(k.attribute)} != n={n}")
            if k.coefficient == 0.0:
                continue
            if k.is_constant:
                const += k.coefficient
            else:
                kept.append(k)
        if const != 0.0:
            kept.append(ProductKernel(const, np.ones(n)))
        return cls(n, sp, tuple(kept))

    @classmethod
    def constant(cls, n: int, value: float) -> "PairVector":
        """The uniform vector ``value * 1``."""
        return cls.build(n, kernels=(ProductKernel(value, np.ones(n)),))

    @classmethod
    def zero(cls, n: int) -> "PairVector":
        return cls.build(n)

    @cached_property
    def _sparse_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.sparse:
            empty = np.empty(0, dtype=np.intp)
            return empty, empty, np.empty(0)
        keys = np.array(list(self.sparse.keys()), dtype=np.intp)
        vals = np.array(list(self.sparse.values()), dtype=float)
        return keys[:, 0], keys[:, 1], vals

    @property
    def num_pairs(self) -> int:
        return num_pairs(self.n)

    def plus_constant(self, value: float) -> "PairVector":
        return PairVector.build(
            self.n, self.sparse,
            self.kernels + (ProductKernel(value, np.ones(self.n)),))

    def __add__(self, other: "PairVector") -> "PairVector":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")
        sp = dict(self.sparse)
        for key, v in other.sparse.items():
            sp[key] = sp.get(key, 0.0) + v
        return PairVector.build(self.n, sp, self.kernels + other.kernels)

    def __mul__(self, factor: float) -> "PairVector":
        factor = float(factor)
        sp = {k: v * factor for k, v in self.sparse.items()}
        return PairVector.build(self.n, sp,
                                tuple(k.scaled(factor) for k in self.kernels))

    __rmul__ = __mul__

    def __neg__(self) -> "PairVector":
        return self * -1.0

    def __sub__(self, other: "PairVector") -> "PairVector":
        return self + (other * -1.0)

    def dense(self) -> np.ndarray:
        """Dense length-``N`` expansion, for diagnostics and small-n checks."""
        out = np.zeros(self.num_pairs)
        iu, ju = np.triu_indices(self.n, 1)
        for k in self.kernels:
            out += k.coefficient * k.attribute[iu] * k.attribute[ju]
        for (i, j), v in self.sparse.items():
            out[pair_rank(self.n, i, j)] += v
        return out


def inner(x: PairVector, y: PairVector) -> float:
    """Standard inner product ``sum_{i<j} x_ij * y_ij`` in structured form."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: n={x.n} vs n={y.n}")
    total = 0.0
    # kernel x kernel: sum_{i<j} a_i a_j b_i b_j = ((sum u)^2 - sum u^2)/2
    # with u = a*b elementwise.
    for kx in x.kernels:
        for ky in y.kernels:
            u = kx.attribute * ky.attribute
            s = u.sum()
            total += kx.coefficient * ky.coefficient * (s * s - (u * u).sum()) / 2.0
    # kernel x sparse, both directions
    for vec, other in ((x, y), (y, x)):
        if not vec.kernels or not other.sparse:
            continue
        si, sj, sv = other._sparse_arrays
        for k in vec.kernels:
            total += k.coefficient * float(sv @ (k.attribute[si] * k.attribute[sj]))
    # sparse x sparse over the smaller map
    small, large = (x.sparse, y.sparse) if len(x.sparse) <= len(y.sparse) \
        else (y.sparse, x.sparse)
    if small:
        get = large.get
        total += sum(v * get(key, 0.0) for key, v in small.items())
    return total


def inner_with_ones(x: PairVector) -> float:
    """``<x, 1>``: total mass of the vector over all pairs."""
    total = sum(x.sparse.values())
    for k in x.kernels:
        s = k.attribute.sum()
        total += k.coefficient * (s * s - (k.attribute ** 2).sum()) / 2.0
    return float(total)


def norm(x: PairVector) -> float:
    """Euclidean norm ``sqrt(<x, x>)``."""
    return math.sqrt(max(inner(x, x), 0.0))


def centered(x: PairVector) -> PairVector:
    """``x`` minus its mean coordinate: the component orthogonal to 1."""
    return x.plus_constant(-inner_with_ones(x) / x.num_pairs)


def centered_norm(x: PairVector) -> float:
    """Norm of the component of ``x`` orthogonal to the all-ones direction.

    Computed on the explicitly centered vector: subtracting the mean at the
    kernel-coefficient level avoids the catastrophic cancellation that
    ``|x|^2 - <x,1>^2/N`` suffers for vectors sitting (almost) on a pole, and
    keeps the pole test sharp at ``POLE_RTOL``.
    """
    return norm(centered(x))


def is_pole(x: PairVector) -> bool:
    """True when ``x`` is (numerically) a multiple of the all-ones vector.

    Uses a relative tolerance: on-pole iff the centered norm is at most
    ``POLE_RTOL`` times the norm.  The zero vector raises, since it has no
    direction at all.
    """
    nrm = norm(x)
    if nrm == 0.0:
        raise ZeroVectorError("zero vector has no direction")
    return centered_norm(x) <= POLE_RTOL * nrm


class GeometrySummary(NamedTuple):
    """Mass, length and latitude of a vector (latitude in radians)."""

    inner_with_ones: float
    norm: float
    latitude: float


def summarize(x: PairVector) -> GeometrySummary:
    nrm = norm(x)
    if nrm == 0.0:
        raise ZeroVectorError("zero vector has no latitude")
    s = inner_with_ones(x)
    lat = math.acos(_clamp(-s / (math.sqrt(x.num_pairs) * nrm)))
    return GeometrySummary(s, nrm, lat)


def _clamp(c: float) -> float:
    # absorb floating-point drift before acos
    return min(1.0, max(-1.0, c))


def angular_distance(x: PairVector, y: PairVector) -> float:
    """Angle in ``[0, pi]`` between two nonzero vectors."""
    nx, ny = norm(x), norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ZeroVectorError("angular distance undefined for the zero vector")
    return math.acos(_clamp(inner(x, y) / (nx * ny)))


def latitude(x: PairVector) -> float:
    """Angular distance from ``x`` to the fine pole ``-1``, in ``[0, pi]``."""
    return summarize(x).latitude


def correlation_distance(x: PairVector, y: PairVector) -> float:
    """Angle between the centered vectors, with pole conventions.

    Off the poles this is ``acos`` of the centered cosine.  When both vectors
    sit on the same pole the angle is 0, on opposite poles ``pi``, and when
    exactly one is on a pole it is ``pi/2``.
    """
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: n={x.n} vs n={y.n}")
    px, py = is_pole(x), is_pole(y)
    if px and py:
        same = inner_with_ones(x) * inner_with_ones(y) > 0
        return 0.0 if same else math.pi
    if px or py:
        return math.pi / 2.0
    xc, yc = centered(x), centered(y)
    return math.acos(_clamp(inner(xc, yc) / (norm(xc) * norm(yc))))


def meridian_angle(x: PairVector, y: PairVector) -> float:
    """Angle at the fine pole between the meridians through ``x`` and ``y``.

    Computed through the hyperspherical cosine rule from the mutual angular
    distance and the two latitudes.  Pole conventions match
    :func:`correlation_distance`, with which this coincides identically; the
    two code paths are kept independent so the identity stays testable.
    """
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: n={x.n} vs n={y.n}")
    px, py = is_pole(x), is_pole(y)
    if px and py:
        same = inner_with_ones(x) * inner_with_ones(y) > 0
        return 0.0 if same else math.pi
    if px or py:
        return math.pi / 2.0
    d = angular_distance(x, y)
    lx, ly = latitude(x), latitude(y)
    num = math.cos(d) - math.cos(lx) * math.cos(ly)
    return math.acos(_clamp(num / (math.sin(lx) * math.sin(ly))))


def hypersphere_project(x: PairVector) -> PairVector:
    """Rescale ``x`` onto the radius-``sqrt(N)`` hypersphere."""
    nrm = norm(x)
    if nrm == 0.0:
        raise ZeroVectorError("cannot project the zero vector")
    return x * (math.sqrt(x.num_pairs) / nrm)


def parallel_project(x: PairVector, lam: float) -> PairVector:
    """Move ``x`` along its meridian to the parallel with latitude ``lam``.

    ``P_lam(x) = sin(lam) * H(x - (<x,1>/N) 1) - cos(lam) * 1``.  The result
    keeps the structured form: the sparse part and kernels of ``x`` are scaled
    and a single constant kernel is adjusted.  At ``lam`` exactly 0 or ``pi``
    the result is the corresponding pole.
    """
    if not 0.0 <= lam <= math.pi:
        raise ValueError(f"latitude {lam} outside [0, pi]")
    nrm = norm(x)
    if nrm == 0.0:
        raise ZeroVectorError("cannot project the zero vector")
    cn = centered_norm(x)
    if cn <= POLE_RTOL * nrm:
        raise PoleError("vector is a multiple of 1: no unique meridian")
    if lam == 0.0:
        return PairVector.constant(x.n, -1.0)
    if lam == math.pi:
        return PairVector.constant(x.n, 1.0)
    npairs = x.num_pairs
    alpha = math.sin(lam) * math.sqrt(npairs) / cn
    shift = -alpha * inner_with_ones(x) / npairs - math.cos(lam)
    return (x * alpha).plus_constant(shift)


class ConcentrationApprox(NamedTuple):
    """Exact truth latitude for mean community size ``s`` and its small-angle form."""

    exact: float
    approximation: float


def concentration_approx(s: float, n: int) -> ConcentrationApprox:
    """Latitude of a clustering whose typical community size is ``s``.

    Returns both ``acos(1 - 2(s-1)/(n-1))`` and the shrinking approximation
    ``2*sqrt((s-1)/(n-1))``, which agree as ``n`` grows at fixed ``s``.
    """
    if not 1 <= s <= n:
        raise ValueError(f"community size {s} outside [1, {n}]")
    if n == 1:
        return ConcentrationApprox(0.0, 0.0)
    ratio = (s - 1) / (n - 1)
    return ConcentrationApprox(math.acos(_clamp(1.0 - 2.0 * ratio)),
                               2.0 * math.sqrt(ratio))
