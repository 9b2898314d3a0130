"""The graded ring of the Newton filtration and its quotient by the
logarithmic-derivative relations.

Monomial classes multiply by the cone rule: the product of two classes
is the class of the product monomial when the exponents lie in a common
fan cone (the Newton value is additive there) and zero otherwise.  The
relation classes are the leading parts of u_i * df/du_i; per degree, the
quotient by the subspace they generate is computed with exact rational
row reduction.  The per-degree dimensions give a third, linear-algebra
route to the toric Newton spectrum, and reducing products against the
chosen basis yields structure-constant tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    HintError,
    InputError,
    ReductionError,
    TruncationError,
)
from .poly import Poly, monomial_text
from .polytope import PolytopeModel
from .series import SpectrumSeries

Vec = Tuple[int, ...]


@dataclass(frozen=True)
class GradedClass:
    """A homogeneous element: rational combination of monomial classes.

    ``degree`` is the common Newton value of all monomials present, or
    None for the zero class.
    """

    terms: Tuple[Tuple[Vec, Fraction], ...]
    degree: Optional[Fraction]

    @classmethod
    def zero(cls) -> "GradedClass":
        return cls(terms=(), degree=None)

    @classmethod
    def of_monomial(cls, vec: Vec, degree: Fraction, coeff: Fraction = Fraction(1)) -> "GradedClass":
        if coeff == 0:
            return cls.zero()
        return cls(terms=((tuple(vec), Fraction(coeff)),), degree=degree)

    @classmethod
    def from_dict(cls, data: Dict[Vec, Fraction], degree) -> "GradedClass":
        items = tuple(sorted((v, c) for v, c in data.items() if c != 0))
        if not items:
            return cls.zero()
        return cls(terms=items, degree=degree)

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> Dict[Vec, Fraction]:
        return dict(self.terms)

    def render(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for vec, coeff in self.terms:
            mono = monomial_text(vec, names)
            mag = abs(coeff)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)


def b_product(model: PolytopeModel, m1: Sequence[int], m2: Sequence[int]) -> GradedClass:
    """Product of two monomial classes in the graded ring.

    The class of the sum exponent when m1 and m2 share a cone, else zero.
    """
    m1, m2 = tuple(m1), tuple(m2)
    if not model.same_cone(m1, m2):
        return GradedClass.zero()
    total = tuple(a + b for a, b in zip(m1, m2))
    return GradedClass.of_monomial(total, model.newton_value(total))


def leading_classes(p: Poly, model: PolytopeModel) -> List[GradedClass]:
    """Degree-one classes of the logarithmic derivatives u_i * df/du_i.

    Only the terms sitting on the Newton boundary (value exactly one)
    survive in the graded piece of degree one.
    """
    out = []
    for i in range(p.nvars):
        data: Dict[Vec, Fraction] = {}
        for vec, coeff in p.terms.items():
            if vec[i] == 0:
                continue
            if model.newton_value(vec) == 1:
                data[vec] = data.get(vec, Fraction(0)) + coeff * vec[i]
        out.append(GradedClass.from_dict(data, Fraction(1)))
    return out


# ---------------------------------------------------------------------------
# per-degree reduction blocks
# ---------------------------------------------------------------------------


@dataclass
class DegreeBlock:
    """Row-reduced relation data for a single degree of the quotient."""

    degree: Fraction
    monomials: List[Vec]                 # column order used by the reduction
    index: Dict[Vec, int]
    rows: List[List[Fraction]]           # reduced row echelon relation rows
    pivots: List[int]
    basis: List[Vec]                     # non-pivot columns, in column order

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Vec, coeff: Fraction) -> Dict[Vec, Fraction]:
        """Express coeff * [vec] in the basis modulo the relation rows."""
        dense = [Fraction(0)] * len(self.monomials)
        dense[self.index[vec]] = Fraction(coeff)
        for row, p in zip(self.rows, self.pivots):
            f = dense[p]
            if f:
                dense = [a - f * b for a, b in zip(dense, row)]
        out: Dict[Vec, Fraction] = {}
        basis_cols = set(self.index[m] for m in self.basis)
        for col, val in enumerate(dense):
            if val == 0:
                continue
            if col not in basis_cols:
                raise ReductionError(
                    f"residual outside the basis at degree {self.degree}"
                )
            out[self.monomials[col]] = val
        return out


def _relation_rows(model, leading, prev_monomials, index, width):
    rows = []
    for cls in leading:
        for m_prev in prev_monomials:
            row = [Fraction(0)] * width
            nonzero = False
            for vec, coeff in cls.terms:
                if model.same_cone(vec, m_prev):
                    col = index[tuple(a + b for a, b in zip(vec, m_prev))]
                    row[col] += coeff
                    nonzero = True
            if nonzero:
                rows.append(row)
    return rows


def _rref(rows, ncols):
    # local elimination keeping full rows; mirrors linalg.rref but avoids
    # re-wrapping entries that are already Fractions
    work = [list(r) for r in rows]
    pivots: List[int] = []
    row_at = 0
    for col in range(ncols):
        pr = None
        for i in range(row_at, len(work)):
            if work[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        work[row_at], work[pr] = work[pr], work[row_at]
        inv = 1 / work[row_at][col]
        work[row_at] = [x * inv for x in work[row_at]]
        for i in range(len(work)):
            if i != row_at and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[row_at])]
        pivots.append(col)
        row_at += 1
        if row_at == len(work):
            break
    return work[:row_at], pivots


def _build_block(model, leading, degree, monomials_here, monomials_prev, hint=None):
    if hint is None:
        ordered = sorted(monomials_here, key=lambda m: (sum(m), m))
    else:
        hint_set = set(hint)
        ordered = sorted(
            (m for m in monomials_here if m not in hint_set), key=lambda m: (sum(m), m)
        ) + list(hint)
    index = {m: i for i, m in enumerate(ordered)}
    raw = _relation_rows(model, leading, monomials_prev, index, len(ordered))
    rows, pivots = _rref(raw, len(ordered))
    pivot_set = set(pivots)
    basis = [m for i, m in enumerate(ordered) if i not in pivot_set]
    return DegreeBlock(
        degree=degree,
        monomials=ordered,
        index=index,
        rows=rows,
        pivots=pivots,
        basis=basis,
    )


# ---------------------------------------------------------------------------
# quotient basis and product table
# ---------------------------------------------------------------------------


@dataclass
class GradedBasis:
    """Per-degree bases of the graded quotient with reduction data."""

    poly: Poly
    model: PolytopeModel
    spectrum: SpectrumSeries
    blocks: Dict[Fraction, DegreeBlock]
    elements: List[Vec]                  # basis monomials in table order

    def degree_of(self, vec: Vec) -> Fraction:
        return self.model.newton_value(vec)

    def total_dimension(self) -> int:
        return sum(b.dim for b in self.blocks.values())


def quotient_basis(
    p: Poly,
    model: PolytopeModel,
    basis_hint: Optional[Sequence[Vec]] = None,
    spectrum: Optional[SpectrumSeries] = None,
) -> GradedBasis:
    """Monomial bases of the graded quotient, degree by degree.

    For every degree in the spectrum's support, the relation subspace
    generated in that degree is row reduced and the non-pivot monomials
    are taken as the basis; the dimension must match the spectrum
    coefficient.  A hint fixes the basis instead: the hint monomials are
    placed last in the column order, so the reduction must find all its
    pivots among the other monomials, and the surviving columns are
    exactly the hint.
    """
    if spectrum is None:
        from .spectrum import toric_spectrum

        spectrum = toric_spectrum(model)[0]
    leading = leading_classes(p, model)
    max_degree = spectrum.max_exponent()
    buckets = model.points_by_value(int(ceil(max_degree)))
    monomials = {deg: [tuple(v) for v in pts] for deg, pts in buckets.items()}

    hint_by_degree: Dict[Fraction, List[Vec]] = {}
    if basis_hint is not None:
        total_expected = spectrum.eval_at_one()
        if len(basis_hint) != total_expected:
            raise HintError(
                f"basis hint lists {len(basis_hint)} monomials, expected {total_expected}"
            )
        for vec in basis_hint:
            vec = tuple(vec)
            deg = model.newton_value(vec)
            if spectrum.coefficient(deg) == 0:
                raise HintError(
                    f"hint monomial {vec} has degree {deg} outside the spectrum"
                )
            hint_by_degree.setdefault(deg, []).append(vec)

    blocks: Dict[Fraction, DegreeBlock] = {}
    for degree, expected in spectrum.items():
        here = monomials.get(degree, [])
        prev = monomials.get(degree - 1, [])
        hint = hint_by_degree.get(degree)
        if hint is not None:
            missing = [m for m in hint if m not in set(here)]
            if missing:
                raise HintError(f"hint monomial {missing[0]} has no class of degree {degree}")
            if len(hint) != expected:
                raise HintError(
                    f"hint gives {len(hint)} monomials at degree {degree}, expected {expected}"
                )
        block = _build_block(model, leading, degree, here, prev, hint)
        if block.dim != expected:
            raise DimensionMismatchError(
                f"quotient dimension {block.dim} at degree {degree} does not match "
                f"spectrum coefficient {expected}"
            )
        if hint is not None and set(block.basis) != set(hint):
            raise HintError(
                f"hint monomials at degree {degree} do not span the quotient"
            )
        blocks[degree] = block

    if basis_hint is not None:
        elements = [tuple(v) for v in basis_hint]
    else:
        elements = []
        for degree in sorted(blocks):
            elements.extend(blocks[degree].basis)
    return GradedBasis(poly=p, model=model, spectrum=spectrum, blocks=blocks, elements=elements)


def reduce_product(basis: GradedBasis, m1: Vec, m2: Vec) -> GradedClass:
    """The product of two basis classes, expressed in the basis."""
    raw = b_product(basis.model, m1, m2)
    if raw.is_zero():
        return raw
    degree = raw.degree
    block = basis.blocks.get(degree)
    if block is None or block.dim == 0:
        return GradedClass.zero()
    (vec, coeff), = raw.terms
    return GradedClass.from_dict(block.reduce(vec, coeff), degree)


def product_table(basis: GradedBasis) -> List[List[GradedClass]]:
    """Structure-constant table over the basis monomials.

    Symmetric, with the degree of every nonzero entry equal to the sum of
    the operand degrees; entries whose degree falls outside the spectrum
    support are zero.
    """
    return [
        [reduce_product(basis, x, y) for y in basis.elements] for x in basis.elements
    ]


def multiply_in_basis(basis: GradedBasis, cls: GradedClass, vec: Vec) -> GradedClass:
    """Multiply a basis combination by one basis monomial, reduced."""
    acc: Dict[Vec, Fraction] = {}
    degree = None
    for m, c in cls.terms:
        part = reduce_product(basis, m, vec)
        if part.is_zero():
            continue
        degree = part.degree
        for v2, c2 in part.terms:
            acc[v2] = acc.get(v2, Fraction(0)) + c * c2
    return GradedClass.from_dict(acc, degree)


# ---------------------------------------------------------------------------
# independent Hilbert-series route
# ---------------------------------------------------------------------------


def koszul_hilbert_series(
    p: Poly, model: PolytopeModel, max_degree: Optional[int] = None
) -> SpectrumSeries:
    """Hilbert series of the graded quotient by pure linear algebra.

    Walks the Newton values upward, computing each degree's quotient
    dimension by row reduction, until the dimensions sum to the
    normalized volume.  Makes no use of the box formula or the
    generating-series oracle, so it serves as an independent check.
    """
    mu = model.normalized_volume()
    n = model.n
    cap = 8 * n if max_degree is None else max_degree
    leading = leading_classes(p, model)
    bound = n
    while bound <= cap:
        buckets = model.points_by_value(bound)
        monomials = {deg: [tuple(v) for v in pts] for deg, pts in buckets.items()}
        dims: Dict[Fraction, int] = {}
        for degree in sorted(monomials):
            here = monomials[degree]
            prev = monomials.get(degree - 1, [])
            index = {m: i for i, m in enumerate(here)}
            raw = _relation_rows(model, leading, prev, index, len(here))
            _, pivots = _rref(raw, len(here))
            dim = len(here) - len(pivots)
            if dim:
                dims[degree] = dim
        total = sum(dims.values())
        if total == mu:
            return SpectrumSeries(dims)
        if total > mu:
            # the relations left too much behind; no larger bound can shrink
            # the low degrees again, so the nondegeneracy assumption failed
            raise TruncationError(
                f"quotient dimensions sum to {total} > volume {mu}; "
                "the input looks Newton degenerate"
            )
        bound += 1
    raise TruncationError(
        f"Hilbert series did not reach mass {mu} below degree {cap}; "
        "the input may be degenerate"
    )
