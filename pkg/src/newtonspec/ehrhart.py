"""Ehrhart delta-vectors, Ehrhart polynomials, Hodge-Deligne polynomials
and orbifold cohomology dimensions.

The delta-vector comes out of the toric Newton spectrum by bucketing the
exponents into the half-open intervals (k-1, k], and independently out
of the lattice-point counts L(0..n) by the standard inversion of the
Ehrhart generating identity; the two must agree.  On a simplicial fan,
the spectrum is also recovered point by point: every lattice point of
the union of the half-open boxes contributes its relative Hodge-Deligne
polynomial shifted by its Newton value, and the coefficient at alpha is
the dimension of the degree-2*alpha orbifold cohomology of the stack of
the fan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import ExponentRangeError, NegativeDeltaError, NotSimplicialError
from .polytope import Face, PolytopeModel
from .series import SpectrumSeries, z_minus_one_pow

Vec = Tuple[int, ...]


@dataclass(frozen=True)
class DeltaVector:
    """Numerator coefficients of the Ehrhart generating series."""

    entries: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def total(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return str(SpectrumSeries({Fraction(k): c for k, c in enumerate(self.entries)}))

    def to_json(self) -> list:
        return list(self.entries)


def delta_from_spectrum(s: SpectrumSeries, n: int) -> DeltaVector:
    """delta_k = number of spectrum exponents in the interval (k-1, k]."""
    entries = [0] * (n + 1)
    for e, c in s.items():
        if e < 0:
            raise ExponentRangeError(f"negative spectrum exponent {e}")
        k = -((-e.numerator) // e.denominator)  # ceil(e)
        if k > n:
            raise ExponentRangeError(f"spectrum exponent {e} exceeds the dimension {n}")
        entries[k] += c
    return DeltaVector(tuple(entries))


def delta_from_counts(model: PolytopeModel) -> DeltaVector:
    """delta-vector by inverting the generating identity on L(0), ..., L(n)."""
    n = model.n
    counts = [model.lattice_count(ell) for ell in range(n + 1)]
    entries = []
    for k in range(n + 1):
        val = sum((-1) ** j * comb(n + 1, j) * counts[k - j] for j in range(k + 1))
        if val < 0:
            raise NegativeDeltaError(f"delta_{k} = {val} < 0; lattice counts are wrong")
        entries.append(val)
    return DeltaVector(tuple(entries))


@dataclass(frozen=True)
class EhrhartPolynomial:
    """L(z) = sum_k delta_k * C(z + n - k, n), kept in the binomial basis."""

    delta: DeltaVector

    @property
    def n(self) -> int:
        return self.delta.n

    def evaluate(self, ell: int) -> int:
        n = self.n
        return sum(
            d * comb(ell + n - k, n)
            for k, d in enumerate(self.delta.entries)
            if ell + n - k >= 0
        )

    def __call__(self, ell: int) -> int:
        return self.evaluate(ell)

    def __str__(self) -> str:
        n = self.n
        parts = []
        for k, d in enumerate(self.delta.entries):
            if d == 0:
                continue
            shift = n - k
            arg = "z" if shift == 0 else f"z+{shift}"
            term = f"C({arg},{n})"
            parts.append(term if d == 1 else f"{d} {term}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list:
        n = self.n
        return [
            {"coefficient": d, "shift": n - k, "order": n}
            for k, d in enumerate(self.delta.entries)
            if d != 0
        ]


def ehrhart_polynomial(delta: DeltaVector) -> EhrhartPolynomial:
    return EhrhartPolynomial(delta)


# ---------------------------------------------------------------------------
# Hodge-Deligne polynomials and orbifold dimensions
# ---------------------------------------------------------------------------


def _hodge_deligne_of_cone(model: PolytopeModel, sigma: Face, relative: bool) -> SpectrumSeries:
    n = model.n
    sset = frozenset(sigma.vertex_indices)
    total = SpectrumSeries()
    if not relative and sigma.dim == -1:
        # the zero cone belongs to the full fan only
        total = total + z_minus_one_pow(n)
    for f in model.faces:
        if relative and f.in_coordinate_hyperplane:
            continue
        if sset <= frozenset(f.vertex_indices):
            total = total + z_minus_one_pow(n - 1 - f.dim)
    return total


def hodge_deligne(model: PolytopeModel, v: Sequence[int], relative: bool = False) -> SpectrumSeries:
    """Alternating cone count over the fan cones containing sigma(v).

    ``relative`` restricts the sum to the cones not contained in the
    coordinate hyperplanes; the zero cone is a member of the full fan
    only.  For v = 0 this is the (relative) Hodge-Deligne polynomial of
    the toric variety of the fan itself.
    """
    sigma = model.smallest_cone(tuple(v))
    return _hodge_deligne_of_cone(model, sigma, relative)


def box_point_union(model: PolytopeModel) -> List[Tuple[Vec, Fraction]]:
    """The deduplicated union of the half-open boxes of all faces outside
    the coordinate hyperplanes, as (point, newton value) pairs."""
    seen: Dict[Vec, Fraction] = {}
    for i in model.f_of_p:
        for bp in model.box_points(model.faces[i]):
            seen.setdefault(bp.point, bp.nu)
    return sorted(seen.items(), key=lambda kv: (kv[1], kv[0]))


def orbifold_contributions(model: PolytopeModel) -> List[Tuple[Vec, SpectrumSeries]]:
    """Per-box-point terms E*_v(z) * z^{nu(v)}, sorted by (value, point)."""
    if not model.simplicial_fan:
        raise NotSimplicialError("orbifold dimensions need a simplicial fan")
    out = []
    for point, nu in box_point_union(model):
        sigma = model.smallest_cone(point)
        contrib = _hodge_deligne_of_cone(model, sigma, relative=True).shift(nu)
        out.append((point, contrib))
    return out


def orbifold_dimensions(model: PolytopeModel) -> SpectrumSeries:
    """Graded dimensions of the orbifold cohomology of the stacky fan.

    The sum of the per-box-point contributions; coefficient-for-
    coefficient equal to the toric Newton spectrum on simplicial fans.
    """
    total = SpectrumSeries()
    for _, contrib in orbifold_contributions(model):
        total = total + contrib
    return total
