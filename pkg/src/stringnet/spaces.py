"""String-net space dimensions for closed surfaces, via the plaquette projector.

The space for a closed genus-g surface is the image of an idempotent on
C(1, H^{(x)g}) obtained by summing a loop diagram over the simple objects,
weighted by dim_r(U)/Dim.  For the pointed category the operator is a
scalar times the identity; the scalar is 1 when r divides 2-2g and 0
otherwise, so the dimension is r^{2g} or 0.

`tilde_bp_operator` assembles the operator column by column from genuine
slice diagrams (loop around all 2g handle legs, with pivotal corrections
where an upward strand fills a double-dual slot) and checks idempotency;
`bp_scalar` is the analytic value it must equal, computed separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .caps import check_cap
from .category import (
    CategoryParams,
    GradedMorphism,
    GradedObject,
    compose,
    delta_pivot,
    dual_object,
    simple_object,
    tensor_objects,
    unit_object,
)
from .coends import CoendH, central_hull, hom_space_basis, jmath
from .cyclotomic import CycNum
from .diagrams import (
    SliceDiagram,
    box,
    cap_left,
    cap_right,
    cup_left,
    cup_right,
    evaluate,
    identity,
)
from .linalg import rank_cyc

_ORIENTATIONS = ("anticlockwise", "clockwise")


@dataclass(frozen=True)
class ProjectorReport:
    """Outcome of building the plaquette projector on C(1, H^{(x)g})."""

    r: int
    genus: int
    analytic_scalar: CycNum
    operator_matrix: tuple[tuple[CycNum, ...], ...]
    image_rank: int


def sn_closed_dim(params: CategoryParams, genus: int) -> int:
    """Dimension of the closed genus-g string-net space: r^{2g} [r | 2-2g]."""
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    r = params.r
    if (2 - 2 * genus) % r != 0:
        return 0
    return r ** (2 * genus)


def bp_scalar(params: CategoryParams, genus: int) -> CycNum:
    """Analytic value of the projector: (1/r) sum_u zeta^{(2-2g)u}."""
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    r = params.r
    acc = CycNum.zero(r)
    for u in range(r):
        acc = acc + params.zeta((2 - 2 * genus) * u)
    return acc * Fraction(1, r)


def _loop_diagram(u: int, orientation: str, params: CategoryParams) -> SliceDiagram:
    u_obj = simple_object(params.r, u)
    if orientation == "anticlockwise":
        # the surface loop flattens to a clockwise planar circle
        layers = [[cup_left(u_obj)], [cap_right(u_obj)]]
    else:
        layers = [[cup_right(u_obj)], [cap_left(u_obj)]]
    return SliceDiagram(unit_object(params.r), layers)


def sphere_sn_dim(params: CategoryParams) -> int:
    """Sphere space dimension, summing the projector loop diagrammatically."""
    r = params.r
    acc = CycNum.zero(r)
    for u in range(r):
        val = evaluate(_loop_diagram(u, "anticlockwise", params), params)
        acc = acc + val.matrix[0][0] * (params.zeta(u) * Fraction(1, r))
    assert acc == acc * acc, "projector scalar must be idempotent"
    return 1 if acc == 1 else 0


def _bp_column_diagram(
    params: CategoryParams,
    genus: int,
    labels: tuple[int, ...],
    u: int,
    orientation: str,
) -> SliceDiagram:
    """Slice form of the projector loop applied to one basis element.

    Reading bottom to top: the outer cup opens the loop, the basis box
    emits the 2g pairs of handle legs, an inner cup separates consecutive
    legs, pivotal boxes fix the two upward strands per handle that occupy
    double-dual slots, and one coend box per handle closes everything into
    H^{(x)g}.
    """
    r = params.r
    u_obj = simple_object(r, u)
    u_dual = dual_object(u_obj)
    acw = orientation == "anticlockwise"
    if genus == 0:
        return _loop_diagram(u, orientation, params)

    legs: list[GradedObject] = []
    for i in range(genus):
        s, t = labels[2 * i], labels[2 * i + 1]
        legs.extend(
            [
                simple_object(r, -s),
                simple_object(r, -t),
                simple_object(r, s),
                simple_object(r, t),
            ]
        )
    phi = GradedMorphism.from_entries(
        unit_object(r), tensor_objects(*legs), {(0, 0): CycNum.one(r)}
    )

    outer = cup_left(u_obj) if acw else cup_right(u_obj)
    inner = cup_right(u_obj) if acw else cup_left(u_obj)
    left_end, right_end = (u_obj, u_dual) if acw else (u_dual, u_obj)

    layer_legs = [identity(left_end)]
    for idx, leg in enumerate(legs):
        layer_legs.append(identity(leg))
        if idx < len(legs) - 1:
            layer_legs.append(inner)
    layer_legs.append(identity(right_end))

    # slot word after the cups, twelve strands per handle
    if acw:
        handle_pattern = [u_obj, None, u_dual] * 4
        delta_slots = {0, 3}
    else:
        handle_pattern = [u_dual, None, u_obj] * 4
        delta_slots = {2, 5}
    delta = delta_pivot(u_obj, params)
    layer_delta = []
    for i in range(genus):
        for j, slot in enumerate(handle_pattern):
            obj = legs[4 * i + j // 3] if slot is None else slot
            if j in delta_slots:
                layer_delta.append(box(delta))
            else:
                layer_delta.append(identity(obj))

    layer_close = []
    for i in range(genus):
        s, t = labels[2 * i], labels[2 * i + 1]
        x = tensor_objects(left_end, simple_object(r, s), right_end)
        y = tensor_objects(left_end, simple_object(r, t), right_end)
        layer_close.append(box(jmath(x, y)))

    top = tensor_objects(*([CoendH(r).as_object()] * genus))
    layers = [
        [outer],
        [identity(left_end), box(phi), identity(right_end)],
        layer_legs,
        layer_delta,
        layer_close,
    ]
    return SliceDiagram(top, layers)


def tilde_bp_operator(
    params: CategoryParams,
    genus: int,
    *,
    cap: int | None = None,
    orientation: str = "anticlockwise",
) -> ProjectorReport:
    """Build the projector on C(1, H^{(x)g}) and report its image rank.

    Asserts idempotency and agreement with the analytic scalar times the
    identity; both are theorems, not conventions, so a failure means the
    diagram calculus is broken.
    """
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if orientation not in _ORIENTATIONS:
        raise ValueError(f"unknown orientation {orientation!r}")
    r = params.r
    n = r ** (2 * genus)
    check_cap("string-net basis", n, cap)
    basis = hom_space_basis(genus, params)
    inv_dim = Fraction(1, r)
    zero = CycNum.zero(r)
    columns: list[list[CycNum]] = []
    for chi in basis.labels:
        acc = [zero] * n
        for u in range(r):
            diag = _bp_column_diagram(params, genus, chi, u, orientation)
            val = evaluate(diag, params)
            if orientation == "anticlockwise":
                weight = params.zeta(u) * inv_dim  # dim_r(U) / Dim
            else:
                weight = params.zeta(-u) * inv_dim  # dim_l(U) / Dim
            for i in range(n):
                e = val.matrix[i][0]
                if e:
                    acc[i] = acc[i] + e * weight
        columns.append(acc)

    top = (
        tensor_objects(*([CoendH(r).as_object()] * genus))
        if genus
        else unit_object(r)
    )
    mat = [[columns[j][i] for j in range(n)] for i in range(n)]
    op = GradedMorphism(top, top, mat)
    scalar = bp_scalar(params, genus)
    assert compose(op, op) == op, "plaquette operator is not idempotent"
    assert op == GradedMorphism.identity(top).scale(scalar)
    return ProjectorReport(
        r=r,
        genus=genus,
        analytic_scalar=scalar,
        operator_matrix=tuple(tuple(row) for row in mat),
        image_rank=rank_cyc(mat),
    )


def annulus_hom_dim(a: int, b: int, params: CategoryParams) -> int:
    """dim C(C_a, A(C_b)): count hull summands of grade a."""
    r = params.r
    hull = central_hull(simple_object(r, b))
    return sum(1 for g in hull.object.grades if g == a % r)
