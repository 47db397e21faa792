"""The coend H, the central hull A(X), and their structure maps.

H is the direct sum over pairs of simples (s,t) of S^dual (x) T^dual (x) S
(x) T; every summand has total grade zero, so maps out of the unit see all
r^2 of them.  A(X) is the direct sum over simples U of U^dual (x) X (x) U,
which for graded X is just r shifted-and-unshifted copies of X stacked in
order u = 0..r-1.

The structure maps iota and jmath are assembled from explicit dual-basis
pairs (alpha, alpha-bar) with alpha o beta-bar = delta id on the simple
target; the public functions use the canonical pairs, and the tests recompute
with rescaled pairs to confirm the result does not depend on the choice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .category import (
    CategoryParams,
    GradedMorphism,
    GradedObject,
    compose,
    dual_morphism,
    dual_object,
    simple_object,
    tensor_morphisms,
    tensor_objects,
)
from .cyclotomic import CycNum, from_json, to_json


@dataclass(frozen=True)
class CoendH:
    """The coend object with its ordered summand labels."""

    r: int
    summands: tuple[tuple[int, int], ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        labels = tuple(itertools.product(range(self.r), repeat=2))
        object.__setattr__(self, "summands", labels)

    def as_object(self) -> GradedObject:
        return GradedObject(self.r, (0,) * (self.r * self.r))

    def index(self, s: int, t: int) -> int:
        return (s % self.r) * self.r + (t % self.r)


@dataclass(frozen=True)
class CentralHull:
    """A(X) together with where each summand u sits inside it."""

    base: GradedObject
    object: GradedObject
    offsets: tuple[int, ...]

    @property
    def r(self) -> int:
        return self.base.r

    @property
    def block_dim(self) -> int:
        return self.base.dim


def central_hull(x: GradedObject) -> CentralHull:
    """A(X) as the ordered concatenation of U^dual (x) X (x) U, u = 0..r-1."""
    r = x.r
    grades: list[int] = []
    offsets = []
    for u in range(r):
        offsets.append(len(grades))
        block = tensor_objects(
            dual_object(simple_object(r, u)), x, simple_object(r, u)
        )
        grades.extend(block.grades)
    return CentralHull(x, GradedObject(r, grades), tuple(offsets))


def _simple_basis(x: GradedObject, s: int, scales: Sequence[Fraction] | None = None):
    """Dual-basis pairs for C(X, C_s): (alpha: X -> C_s, abar: C_s -> X).

    One pair per position of X carrying grade s.  Optional nonzero scales
    multiply alpha and divide abar, preserving alpha o abar = id.
    """
    r = x.r
    cs = simple_object(r, s)
    out = []
    positions = [i for i, g in enumerate(x.grades) if g == s % r]
    for k, i in enumerate(positions):
        c = Fraction(1) if scales is None else Fraction(scales[k])
        if c == 0:
            raise ValueError("basis scale must be nonzero")
        alpha = GradedMorphism.from_entries(
            x, cs, {(0, i): CycNum.from_rational(r, c)}
        )
        abar = GradedMorphism.from_entries(
            cs, x, {(i, 0): CycNum.from_rational(r, 1 / c)}
        )
        out.append((alpha, abar))
    return out


def iota(x: GradedObject, v: int) -> GradedMorphism:
    """The structure map C_v^dual (x) X (x) C_v -> A(X)."""
    return _iota_with_scales(x, v, None)


def _iota_with_scales(x: GradedObject, v: int, scales) -> GradedMorphism:
    r = x.r
    hull = central_hull(x)
    cv = simple_object(r, v)
    source = tensor_objects(dual_object(cv), x, cv)
    total = GradedMorphism.zero_map(source, hull.object)
    for u in range(r):
        # C(C_v, C_u) vanishes unless u = v, where it is spanned by id
        for alpha, abar in _simple_basis(cv, u, scales):
            block = tensor_morphisms(
                tensor_morphisms(dual_morphism(abar), GradedMorphism.identity(x)),
                alpha,
            )
            incl = _block_inclusion(hull, u)
            total = total + compose(incl, block)
    return total


def _block_inclusion(hull: CentralHull, u: int) -> GradedMorphism:
    """Column inclusion of summand u into A(X)."""
    off = hull.offsets[u]
    one = CycNum.one(hull.r)
    entries = {(off + i, i): one for i in range(hull.block_dim)}
    block = GradedObject(
        hull.r, hull.object.grades[off : off + hull.block_dim]
    )
    return GradedMorphism.from_entries(block, hull.object, entries)


def _block_projection(hull: CentralHull, u: int) -> GradedMorphism:
    off = hull.offsets[u]
    one = CycNum.one(hull.r)
    entries = {(i, off + i): one for i in range(hull.block_dim)}
    block = GradedObject(
        hull.r, hull.object.grades[off : off + hull.block_dim]
    )
    return GradedMorphism.from_entries(hull.object, block, entries)


def jmath(x: GradedObject, y: GradedObject) -> GradedMorphism:
    """The coend map X^dual (x) Y^dual (x) X (x) Y -> H."""
    return _jmath_with_scales(x, y, None, None)


def _jmath_with_scales(x, y, x_scales, y_scales) -> GradedMorphism:
    r = x.r
    h = CoendH(r)
    h_obj = h.as_object()
    source = tensor_objects(dual_object(x), dual_object(y), x, y)
    total = GradedMorphism.zero_map(source, h_obj)
    for s, t in h.summands:
        row = GradedMorphism.from_entries(
            simple_object(r, 0), h_obj, {(h.index(s, t), 0): CycNum.one(r)}
        )
        for alpha, abar in _simple_basis(x, s, x_scales):
            for beta, bbar in _simple_basis(y, t, y_scales):
                leg = tensor_morphisms(
                    tensor_morphisms(dual_morphism(abar), dual_morphism(bbar)),
                    tensor_morphisms(alpha, beta),
                )
                # leg lands in S^dual T^dual S T, a single grade-0 summand
                total = total + compose(row, leg)
    return total


class BasisDescription(NamedTuple):
    labels: list[tuple[int, ...]]
    dimension: int


def hom_space_basis(genus: int, params: CategoryParams) -> BasisDescription:
    """Basis of C(1, H^{(x)g}): tuples (s_1,t_1,...,s_g,t_g), lex order."""
    if genus < 0:
        raise ValueError(f"genus must be nonnegative, got {genus}")
    labels = [
        tuple(lab) for lab in itertools.product(range(params.r), repeat=2 * genus)
    ]
    return BasisDescription(labels, len(labels))


def unit_hom_dimension(factors: Sequence[GradedObject], r: int) -> int:
    """dim C(1, tensor of the factors), counted without materializing it."""
    hist = [0] * r
    hist[0] = 1
    for x in factors:
        new = [0] * r
        for tot, cnt in enumerate(hist):
            if cnt:
                for g in x.grades:
                    new[(tot + g) % r] += cnt
        hist = new
    return hist[0]


@dataclass(frozen=True)
class HomSpaceVector:
    """Coordinates in C(1, A(V_1) (x) ... (x) A(V_b) (x) H^{(x)g})."""

    r: int
    genus: int
    boundary_data: tuple[GradedObject, ...]
    coords: tuple[CycNum, ...]

    def __post_init__(self) -> None:
        factors = [central_hull(v).object for v in self.boundary_data]
        factors.extend(CoendH(self.r).as_object() for _ in range(self.genus))
        want = unit_hom_dimension(factors, self.r)
        if len(self.coords) != want:
            raise ValueError(
                f"expected {want} coordinates, got {len(self.coords)}"
            )
        for a in self.coords:
            if not isinstance(a, CycNum) or a.order != self.r:
                raise ValueError("coords must be CycNum of conductor r")

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "genus": self.genus,
            "coords": [to_json(a) for a in self.coords],
        }


def hom_space_vector_from_json(obj: dict) -> HomSpaceVector:
    return HomSpaceVector(
        obj["r"],
        obj["genus"],
        (),
        tuple(from_json(a) for a in obj["coords"]),
    )
