"""The group Frobenius algebra of Z_r inside the graded category.

F is the sum of all simples with multiplication delta_{c,a+b}.  The
comultiplication carries a 1/r and the counit an r so that mu o Delta = id
(Delta-separability); the price is that F is symmetric only up to the
Nakayama automorphism N(1_a) = zeta^{-a} 1_a, which the pivotal structure
produces when F is rotated through a cup and a cap.

`chi` and `sigma_F` evaluate the face morphism of the standard one-face
surface decomposition: one chi per handle threads the face strand through
a coend box, and the resulting vectors, one per admissible r-spin marking,
give a basis of the string-net space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .category import (
    CategoryParams,
    GradedMorphism,
    GradedObject,
    compose,
    dual_morphism,
    dual_object,
    tensor_morphisms,
    tensor_objects,
    unit_object,
)
from .coends import CoendH, HomSpaceVector, jmath
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
from .rspin import AdmissibilityReport, MarkedPLCW, is_admissible, standard_decomposition


class UnsupportedComplexError(ValueError):
    """sigma_F only evaluates the standard one-face decomposition."""


class InadmissibleMarkingError(ValueError):
    def __init__(self, message: str, report: AdmissibilityReport):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class FrobeniusAlgebraData:
    """Algebra and coalgebra structure on F; axioms assert on construction."""

    params: CategoryParams
    object: GradedObject
    mu: GradedMorphism
    eta: GradedMorphism
    delta: GradedMorphism
    eps: GradedMorphism

    def __post_init__(self):
        f = self.object
        idf = GradedMorphism.identity(f)
        mu, eta, delta, eps = self.mu, self.eta, self.delta, self.eps
        assert compose(mu, tensor_morphisms(mu, idf)) == compose(
            mu, tensor_morphisms(idf, mu)
        ), "multiplication is not associative"
        assert compose(mu, tensor_morphisms(eta, idf)) == idf
        assert compose(mu, tensor_morphisms(idf, eta)) == idf
        assert compose(tensor_morphisms(delta, idf), delta) == compose(
            tensor_morphisms(idf, delta), delta
        ), "comultiplication is not coassociative"
        assert compose(tensor_morphisms(eps, idf), delta) == idf
        assert compose(tensor_morphisms(idf, eps), delta) == idf
        frob = compose(delta, mu)
        assert compose(tensor_morphisms(idf, mu), tensor_morphisms(delta, idf)) == frob
        assert compose(tensor_morphisms(mu, idf), tensor_morphisms(idf, delta)) == frob
        assert compose(mu, delta) == idf, "Delta-separability fails"


def frobenius_zr(params: CategoryParams) -> FrobeniusAlgebraData:
    """Group algebra of Z_r: mu(1_a,1_b) = 1_{a+b}, eps(1_a) = r delta_{a,0}."""
    r = params.r
    f = GradedObject(r, tuple(range(r)))
    one = CycNum.one(r)
    mu = GradedMorphism.from_entries(
        tensor_objects(f, f),
        f,
        {((a + b) % r, a * r + b): one for a in range(r) for b in range(r)},
    )
    eta = GradedMorphism.from_entries(unit_object(r), f, {(0, 0): one})
    inv_r = one * Fraction(1, r)
    delta = GradedMorphism.from_entries(
        f,
        tensor_objects(f, f),
        {
            (a * r + b, (a + b) % r): inv_r
            for a in range(r)
            for b in range(r)
        },
    )
    eps = GradedMorphism.from_entries(f, unit_object(r), {(0, 0): one * r})
    return FrobeniusAlgebraData(params, f, mu, eta, delta, eps)


class NakayamaPair(NamedTuple):
    forward: GradedMorphism
    inverse: GradedMorphism


def _nakayama_diagram(f_data: FrobeniusAlgebraData, direction: int) -> GradedMorphism:
    """Rotate F through a cup and cap: ((eps mu)(x) id) then (id (x) (delta eta)).

    direction > 0 turns rightward (spectator dual strand on the right,
    weighted cap); the mirror image turns leftward and gives the inverse.
    """
    f = f_data.object
    side = dual_object(f)
    if direction > 0:
        layers = [
            [identity(f), cup_left(f)],
            [box(f_data.mu), identity(side)],
            [box(f_data.eps), identity(side)],
            [box(f_data.eta), identity(side)],
            [box(f_data.delta), identity(side)],
            [identity(f), cap_right(f)],
        ]
    else:
        layers = [
            [cup_right(f), identity(f)],
            [identity(side), box(f_data.mu)],
            [identity(side), box(f_data.eps)],
            [identity(side), box(f_data.eta)],
            [identity(side), box(f_data.delta)],
            [cap_left(f), identity(f)],
        ]
    return evaluate(SliceDiagram(f, layers), f_data.params)


def nakayama(f_data: FrobeniusAlgebraData) -> NakayamaPair:
    """Nakayama automorphism, from the rotation diagram and the closed form.

    The two computations must agree: N(1_a) = zeta^{-a} 1_a, and the
    mirrored diagram gives the inverse.
    """
    params = f_data.params
    r = params.r
    forward = _nakayama_diagram(f_data, +1)
    inverse = _nakayama_diagram(f_data, -1)
    f = f_data.object
    closed = GradedMorphism.from_entries(
        f, f, {(a, a): params.zeta(-a) for a in range(r)}
    )
    assert forward == closed, "Nakayama diagram disagrees with the closed form"
    assert compose(forward, inverse) == GradedMorphism.identity(f)
    return NakayamaPair(forward, inverse)


def _mu_power(f_data: FrobeniusAlgebraData, n: int) -> GradedMorphism:
    """n-fold multiplication F^{(x)n} -> F, left-nested."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    acc = GradedMorphism.identity(f_data.object)
    for _ in range(n - 1):
        acc = compose(
            f_data.mu,
            tensor_morphisms(acc, GradedMorphism.identity(f_data.object)),
        )
    return acc


def face_and_edge_labels(
    n: int, u: int, f_data: FrobeniusAlgebraData
) -> tuple[GradedMorphism, GradedMorphism]:
    """The face label M^(n) = (eps o mu^(n))-dual and edge label E_u.

    E_u = (N^u (x) id) o Delta o eta = (1/r) sum_b zeta^{-ub} 1_b (x) 1_{-b}.
    """
    m_n = dual_morphism(compose(f_data.eps, _mu_power(f_data, n)))
    nak = nakayama(f_data).forward
    twist = GradedMorphism.identity(f_data.object)
    for _ in range(u % f_data.params.r):
        twist = compose(nak, twist)
    e_u = compose(
        tensor_morphisms(twist, GradedMorphism.identity(f_data.object)),
        compose(f_data.delta, f_data.eta),
    )
    return m_n, e_u


def rotate_pair(phi: GradedMorphism, f_data: FrobeniusAlgebraData) -> GradedMorphism:
    """Pull the first output of phi: 1 -> F(x)F around to the back."""
    f = f_data.object
    layers = [
        [cup_right(f)],
        [identity(dual_object(f)), box(phi), identity(f)],
        [cap_left(f), identity(f), identity(f)],
    ]
    return evaluate(SliceDiagram(tensor_objects(f, f), layers), f_data.params)


def chi(a: int, b: int, f_data: FrobeniusAlgebraData) -> GradedMorphism:
    """Handle morphism F -> H (x) F: on every x the value is v_{a,b} (x) x
    with v_{a,b} = (1/r^2) sum_{s,t} zeta^{sa+tb} e_{(s,t)}."""
    params = f_data.params
    f = f_data.object
    fd = dual_object(f)
    nak_inv = nakayama(f_data).inverse
    r = params.r
    # N^{-a-1}: compose the inverse a+1 times (exponent taken mod r)
    def inv_power(k: int) -> GradedMorphism:
        acc = GradedMorphism.identity(f)
        for _ in range(k % r):
            acc = compose(nak_inv, acc)
        return acc

    layers = [
        [cup_right(f), identity(f)],
        [identity(fd), box(f_data.mu)],
        [identity(fd), cup_right(f), identity(f)],
        [identity(fd), identity(fd), box(f_data.mu)],
        [identity(fd), identity(fd), box(f_data.delta)],
        [identity(fd), identity(fd), identity(f), box(f_data.delta)],
        [
            identity(fd),
            identity(fd),
            box(inv_power(a + 1)),
            box(inv_power(b + 1)),
            identity(f),
        ],
        [box(jmath(f, f)), identity(f)],
    ]
    top = tensor_objects(CoendH(r).as_object(), f)
    return evaluate(SliceDiagram(top, layers), params)


def sigma_F(m: MarkedPLCW, f_data: FrobeniusAlgebraData) -> HomSpaceVector:
    """State-sum vector of an admissible marking on the standard decomposition.

    Composes eta, one chi per handle with that handle's two edge indices,
    and eps on the leftover face strand.
    """
    params = f_data.params
    r = params.r
    if m.r != r:
        raise ValueError(f"marking has r={m.r}, algebra has r={r}")
    genus = m.complex.genus
    if genus < 1 or m.complex != standard_decomposition(genus):
        raise UnsupportedComplexError(
            "sigma_F needs the standard one-face decomposition"
        )
    report = is_admissible(m)
    if not report:
        raise InadmissibleMarkingError(
            f"marking is not admissible; residues {report.residues}", report
        )
    h_obj = CoendH(r).as_object()
    state = f_data.eta
    for i in range(genus):
        step = chi(m.edge_index[2 * i], m.edge_index[2 * i + 1], f_data)
        prefix = GradedMorphism.identity(tensor_objects(*([h_obj] * i))) if i else None
        state = compose(
            tensor_morphisms(prefix, step) if prefix is not None else step,
            state,
        )
    closer = tensor_morphisms(
        GradedMorphism.identity(tensor_objects(*([h_obj] * genus))), f_data.eps
    )
    state = compose(closer, state)
    coords = tuple(state.matrix[i][0] for i in range(r ** (2 * genus)))
    return HomSpaceVector(r, genus, (), coords)
