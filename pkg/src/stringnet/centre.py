"""The Drinfeld centre of the graded category: simples, braidings, projectors.

A centre simple is a pair (a, k): the underlying object is the grade-a
simple, and the half-braiding with a grade-b strand is zeta^{kb} times the
swap.  The construction is validated by its testable consequences: there are
r^2 simples, matching the torus string-net dimension, and the torus vectors
h_Z they produce are linearly independent.

The half-braiding on the lifted hull Ahat(M) is assembled from dual-basis
pairs in C(i (x) W, j) by diagram evaluation, block by block; the closed
form (blocks shift by the grade of W with coefficient 1) is what the tests
check it against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .category import (
    CategoryParams,
    GradedMorphism,
    GradedObject,
    compose,
    dual_object,
    duality_maps,
    simple_object,
    tensor_morphisms,
    tensor_objects,
    unit_object,
)
from .coends import CentralHull, HomSpaceVector, central_hull, jmath
from .cyclotomic import CycNum
from .diagrams import SliceDiagram, box, cap_left, cup_left, cup_right, evaluate, identity


@dataclass(frozen=True)
class CentreSimple:
    """Underlying grade a with half-braiding character k."""

    r: int
    a: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        object.__setattr__(self, "a", self.a % self.r)
        object.__setattr__(self, "k", self.k % self.r)

    def underlying(self) -> GradedObject:
        return simple_object(self.r, self.a)

    def to_json(self) -> dict:
        return {"a": self.a, "k": self.k}


def list_centre_simples(params: CategoryParams) -> list[CentreSimple]:
    r = params.r
    return [CentreSimple(r, a, k) for a in range(r) for k in range(r)]


def half_braiding_box(
    z: CentreSimple, w: GradedObject, params: CategoryParams
) -> GradedMorphism:
    """c_{Z,W}: C_a (x) W -> W (x) C_a, zeta^{k b} on the grade-b part of W."""
    if z.r != params.r or w.r != params.r:
        raise ValueError("mismatched r")
    src = tensor_objects(z.underlying(), w)
    tgt = tensor_objects(w, z.underlying())
    entries = {
        (j, j): params.zeta(z.k * g) for j, g in enumerate(w.grades)
    }
    return GradedMorphism.from_entries(src, tgt, entries)


def _h_summand_diagram(z: CentreSimple, u: int, params: CategoryParams) -> SliceDiagram:
    """One term of the torus vector: X-turn, U-cup, half-braiding, coend box.

    Bottom to top: the X strand turns around (its two ends feed the box's
    X-dual and X slots), the U strand is created to the right and its dual
    half crosses the X strand through the half-braiding before everything
    enters the coend box for the pair (X, U).
    """
    r = params.r
    a_obj = z.underlying()
    u_obj = simple_object(r, u)
    braid = half_braiding_box(z, dual_object(u_obj), params)
    h_obj = GradedObject(r, (0,) * (r * r))
    layers = [
        [cup_right(a_obj)],
        [identity(dual_object(a_obj)), identity(a_obj), cup_right(u_obj)],
        [identity(dual_object(a_obj)), box(braid), identity(u_obj)],
        [box(jmath(a_obj, u_obj))],
    ]
    return SliceDiagram(h_obj, layers)


def h_vector(z: CentreSimple, params: CategoryParams) -> HomSpaceVector:
    """The genus-1 vector attached to a centre simple, in H coordinates."""
    r = params.r
    inv_dim = Fraction(1, r)
    coords = [CycNum.zero(r)] * (r * r)
    for u in range(r):
        val = evaluate(_h_summand_diagram(z, u, params), params)
        weight = params.zeta(u) * inv_dim  # dim_r(U) / Dim
        for i in range(r * r):
            e = val.matrix[i][0]
            if e:
                coords[i] = coords[i] + e * weight
    return HomSpaceVector(r, 1, (), tuple(coords))


def _p_block_diagram(
    y: CentreSimple, u: int, v: int, params: CategoryParams
) -> SliceDiagram:
    """The (u,v) block of the hull projector: braid, cap, cup, braid."""
    r = params.r
    a_obj = y.underlying()
    v_obj = simple_object(r, v)
    u_obj = simple_object(r, u)
    top = tensor_objects(dual_object(u_obj), a_obj, u_obj)
    layers = [
        [identity(dual_object(v_obj)), box(half_braiding_box(y, v_obj, params))],
        [cap_left(v_obj), identity(a_obj)],
        [identity(a_obj), cup_right(u_obj)],
        [box(half_braiding_box(y, dual_object(u_obj), params)), identity(u_obj)],
    ]
    return SliceDiagram(top, layers)


def p_Y_projector(y: CentreSimple, params: CategoryParams) -> GradedMorphism:
    """The idempotent on A(C_a) with one-dimensional image labelled by Y."""
    r = params.r
    hull = central_hull(y.underlying())
    inv_dim = Fraction(1, r)
    zero = CycNum.zero(r)
    mat = [[zero] * r for _ in range(r)]
    for u in range(r):
        weight = params.zeta(u) * inv_dim
        for v in range(r):
            val = evaluate(_p_block_diagram(y, u, v, params), params)
            mat[u][v] = val.matrix[0][0] * weight
    proj = GradedMorphism(hull.object, hull.object, mat)
    assert compose(proj, proj) == proj
    return proj


class AhatStructure(NamedTuple):
    hull: CentralHull
    half_braiding: Callable[[GradedObject], GradedMorphism]
    unitlike: GradedMorphism | None
    counitlike: GradedMorphism | None


def _ahat_braiding_block(
    m: GradedObject, i: int, p: int, w: GradedObject, params: CategoryParams
) -> GradedMorphism:
    """A.1 wiring for hull block i and the grade position p of W.

    alpha : C_i (x) W -> C_j picks position p (so j = i + w_p); its dual
    abar comes back through a cup on C_j and a cap against the incoming
    C_i-dual strand.
    """
    r = params.r
    w_p = w.grades[p]
    i_obj = simple_object(r, i)
    j_obj = simple_object(r, i + w_p)
    alpha = GradedMorphism.from_entries(
        tensor_objects(i_obj, w), j_obj, {(0, p): CycNum.one(r)}
    )
    abar = GradedMorphism.from_entries(
        j_obj, tensor_objects(i_obj, w), {(p, 0): CycNum.one(r)}
    )
    cap = tensor_morphisms(
        duality_maps(i_obj, params).ev_left, GradedMorphism.identity(w)
    )
    layers = [
        [identity(dual_object(i_obj)), identity(m), box(alpha)],
        [
            identity(dual_object(i_obj)),
            cup_left(j_obj),
            identity(m),
            identity(j_obj),
        ],
        [
            identity(dual_object(i_obj)),
            box(abar),
            identity(dual_object(j_obj)),
            identity(m),
            identity(j_obj),
        ],
        [box(cap), identity(dual_object(j_obj)), identity(m), identity(j_obj)],
    ]
    top = tensor_objects(w, dual_object(j_obj), m, j_obj)
    return evaluate(SliceDiagram(top, layers), params)


def ahat_structure(m_or_z, params: CategoryParams) -> AhatStructure:
    """Half-braiding on Ahat(M); for a centre simple also the two maps
    relating Z and Ahat(Z), the second carrying the dim_r(U)/Dim prefactor.
    """
    if isinstance(m_or_z, CentreSimple):
        z = m_or_z
        m = z.underlying()
    else:
        z = None
        m = m_or_z
    r = params.r
    hull = central_hull(m)
    dm = m.dim

    def braiding(w: GradedObject) -> GradedMorphism:
        src = tensor_objects(hull.object, w)
        tgt = tensor_objects(w, hull.object)
        zero = CycNum.zero(r)
        rows = [[zero] * src.dim for _ in range(tgt.dim)]
        dw = w.dim
        for i in range(r):
            for p in range(dw):
                # block source [i-dual] M [i] W, target W [j-dual] M [j];
                # alpha pins the W position to p on both sides
                block = _ahat_braiding_block(m, i, p, w, params)
                j = (i + w.grades[p]) % r
                for m_out in range(dm):
                    for m_in in range(dm):
                        e = block.matrix[p * dm + m_out][m_in * dw + p]
                        if e:
                            src_flat = (hull.offsets[i] + m_in) * dw + p
                            tgt_flat = p * (r * dm) + hull.offsets[j] + m_out
                            rows[tgt_flat][src_flat] = rows[tgt_flat][src_flat] + e
        return GradedMorphism(src, tgt, rows)

    unitlike = None
    counitlike = None
    if z is not None:
        unitlike = _unitlike_map(z, hull, params)
        counitlike = _counitlike_map(z, hull, params)
    return AhatStructure(hull, braiding, unitlike, counitlike)


def _unitlike_map(
    z: CentreSimple, hull: CentralHull, params: CategoryParams
) -> GradedMorphism:
    """Ahat(Z) -> Z: per block a braiding with the U strand, then a cap."""
    r = params.r
    a_obj = z.underlying()
    zero = CycNum.zero(r)
    row = [zero] * hull.object.dim
    for u in range(r):
        u_obj = simple_object(r, u)
        layers = [
            [identity(dual_object(u_obj)), box(half_braiding_box(z, u_obj, params))],
            [cap_left(u_obj), identity(a_obj)],
        ]
        val = evaluate(SliceDiagram(a_obj, layers), params)
        row[hull.offsets[u]] = val.matrix[0][0]
    return GradedMorphism(hull.object, a_obj, [row])


def _counitlike_map(
    z: CentreSimple, hull: CentralHull, params: CategoryParams
) -> GradedMorphism:
    """Z -> Ahat(Z): U-cup then braiding, weighted by dim_r(U)/Dim."""
    r = params.r
    a_obj = z.underlying()
    inv_dim = Fraction(1, r)
    zero = CycNum.zero(r)
    col = [[zero] for _ in range(hull.object.dim)]
    for u in range(r):
        u_obj = simple_object(r, u)
        braid = half_braiding_box(z, dual_object(u_obj), params)
        top = tensor_objects(dual_object(u_obj), a_obj, u_obj)
        layers = [
            [identity(a_obj), cup_right(u_obj)],
            [box(braid), identity(u_obj)],
        ]
        val = evaluate(SliceDiagram(top, layers), params)
        col[hull.offsets[u]][0] = val.matrix[0][0] * (params.zeta(u) * inv_dim)
    return GradedMorphism(a_obj, hull.object, col)
