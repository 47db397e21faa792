"""The pivotal category of Z_r-graded vector spaces with a chosen root of unity.

Objects are ordered direct sums of the invertible simples C_u, recorded as
grade lists; morphisms are matrices with support only where the target and
source grades agree.  The pivotal data assigns the simple C_u right dimension
zeta^u and left dimension zeta^{-u}, where zeta is the chosen primitive r-th
root of unity.  For r >= 3 the two traces differ: that failure of
sphericality is the whole point of the constructions downstream.

Conventions fixed here and relied on everywhere else:

- tensor product distributes over the sum in row-major order, so the basis
  of X (x) Y at flat index i*dim(Y)+j is (x_i, y_j), and the tensor of
  matrices is the Kronecker product in the same order;
- dual of a grade list reverses it and negates the grades (which keeps the
  duality caps and cups planar: matched pairs sit at mirrored positions);
- dual of a morphism is the anti-transpose; with row-major flattening the
  strict identities are dual(x (x) y) = dual(x) (x) dual(y) and likewise for
  morphisms -- the reversed-order form dual(y) (x) dual(x) agrees only up to
  the evident permutation of summands, which never matters here because
  tensor words of invertible simples have a single summand;
- the unit object is [0]; the empty list is the zero object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple

from .cyclotomic import CycNum, from_json, rational_scale, to_json, zeta_power


@dataclass(frozen=True)
class CategoryParams:
    """r and the exponent selecting zeta = zeta_r^zeta_exponent (primitive)."""

    r: int
    zeta_exponent: int = 1

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if gcd(self.zeta_exponent, self.r) != 1:
            raise ValueError(
                f"zeta_exponent {self.zeta_exponent} must be coprime to r={self.r}"
            )

    def zeta(self, k: int = 1) -> CycNum:
        """zeta^k as an element of Q(zeta_r)."""
        return zeta_power(self.r, k * self.zeta_exponent)

    def one(self) -> CycNum:
        return CycNum.one(self.r)

    def zero(self) -> CycNum:
        return CycNum.zero(self.r)


@dataclass(frozen=True)
class GradedObject:
    """An ordered direct sum of invertible simples, one grade per summand."""

    r: int
    grades: tuple[int, ...]

    def __init__(self, r: int, grades: Iterable[int]) -> None:
        if r < 1:
            raise ValueError(f"r must be positive, got {r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "grades", tuple(g % r for g in grades))

    @property
    def dim(self) -> int:
        return len(self.grades)

    def __matmul__(self, other: "GradedObject") -> "GradedObject":
        return tensor_objects(self, other)

    def to_json(self) -> dict:
        return {"r": self.r, "grades": list(self.grades)}


def unit_object(r: int) -> GradedObject:
    return GradedObject(r, (0,))


def simple_object(r: int, u: int) -> GradedObject:
    return GradedObject(r, (u,))


def zero_object(r: int) -> GradedObject:
    return GradedObject(r, ())


def tensor_objects(*objs: GradedObject) -> GradedObject:
    if not objs:
        raise ValueError("need at least one object")
    r = objs[0].r
    grades = [0]
    for x in objs:
        if x.r != r:
            raise ValueError(f"mixed r: {r} vs {x.r}")
        grades = [g + h for g in grades for h in x.grades]
    return GradedObject(r, grades)


def dual_object(x: GradedObject) -> GradedObject:
    """Reverse the summand order and negate each grade."""
    return GradedObject(x.r, tuple(-g for g in reversed(x.grades)))


class GradeSupportError(ValueError):
    """A matrix entry sits where target and source grades disagree."""


class GradedMorphism:
    """A matrix of CycNum supported on matching target/source grades."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: GradedObject, target: GradedObject, matrix) -> None:
        if source.r != target.r:
            raise ValueError("source and target have different r")
        rows = tuple(tuple(row) for row in matrix)
        if len(rows) != target.dim or any(len(row) != source.dim for row in rows):
            raise ValueError(
                f"matrix shape {len(rows)}x{len(rows[0]) if rows else 0} does not "
                f"match {target.dim}x{source.dim}"
            )
        for i, row in enumerate(rows):
            for j, a in enumerate(row):
                if not isinstance(a, CycNum) or a.order != source.r:
                    raise ValueError("entries must be CycNum of conductor r")
                if a and target.grades[i] != source.grades[j]:
                    raise GradeSupportError(
                        f"entry ({i},{j}) nonzero but grades differ: "
                        f"{target.grades[i]} vs {source.grades[j]}"
                    )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", rows)

    def __setattr__(self, name, value):
        raise AttributeError("GradedMorphism is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_entries(
        cls, source: GradedObject, target: GradedObject, entries: dict
    ) -> "GradedMorphism":
        zero = CycNum.zero(source.r)
        rows = [[zero] * source.dim for _ in range(target.dim)]
        for (i, j), a in entries.items():
            rows[i][j] = rows[i][j] + a
        return cls(source, target, rows)

    @classmethod
    def identity(cls, x: GradedObject) -> "GradedMorphism":
        one = CycNum.one(x.r)
        zero = CycNum.zero(x.r)
        rows = [[one if i == j else zero for j in range(x.dim)] for i in range(x.dim)]
        return cls(x, x, rows)

    @classmethod
    def zero_map(cls, source: GradedObject, target: GradedObject) -> "GradedMorphism":
        zero = CycNum.zero(source.r)
        return cls(source, target, [[zero] * source.dim for _ in range(target.dim)])

    # -- structure ---------------------------------------------------------

    @property
    def r(self) -> int:
        return self.source.r

    def is_endo(self) -> bool:
        return self.source == self.target

    def __eq__(self, other):
        if not isinstance(other, GradedMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __add__(self, other: "GradedMorphism") -> "GradedMorphism":
        if self.source != other.source or self.target != other.target:
            raise ValueError("mismatched shapes in morphism sum")
        return GradedMorphism(
            self.source,
            self.target,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.matrix, other.matrix)
            ],
        )

    def scale(self, c) -> "GradedMorphism":
        if isinstance(c, (int, Fraction)):
            return GradedMorphism(
                self.source,
                self.target,
                [[rational_scale(a, c) for a in row] for row in self.matrix],
            )
        return GradedMorphism(
            self.source, self.target, [[a * c for a in row] for row in self.matrix]
        )

    def __matmul__(self, other: "GradedMorphism") -> "GradedMorphism":
        return tensor_morphisms(self, other)

    def __rshift__(self, other: "GradedMorphism") -> "GradedMorphism":
        """Diagrammatic order: (f >> g) applies f first."""
        return compose(other, self)

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "matrix": [[to_json(a) for a in row] for row in self.matrix],
        }

    def __repr__(self):
        return (
            f"GradedMorphism({list(self.source.grades)} -> "
            f"{list(self.target.grades)}, {self.target.dim}x{self.source.dim})"
        )


def compose(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """f after g (matrix product f.matrix @ g.matrix)."""
    if g.target != f.source:
        raise ValueError(
            f"cannot compose: inner objects differ "
            f"({list(g.target.grades)} vs {list(f.source.grades)})"
        )
    zero = CycNum.zero(f.r)
    out = [[zero] * g.source.dim for _ in range(f.target.dim)]
    for i, frow in enumerate(f.matrix):
        for j, a in enumerate(frow):
            if a:
                grow = g.matrix[j]
                orow = out[i]
                for k, b in enumerate(grow):
                    if b:
                        orow[k] = orow[k] + a * b
    return GradedMorphism(g.source, f.target, out)


def tensor_morphisms(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """Kronecker product, row-major, matching tensor_objects."""
    src = tensor_objects(f.source, g.source)
    tgt = tensor_objects(f.target, g.target)
    zero = CycNum.zero(f.r)
    gm, gn = g.target.dim, g.source.dim
    out = [[zero] * src.dim for _ in range(tgt.dim)]
    for i1, frow in enumerate(f.matrix):
        for j1, a in enumerate(frow):
            if a:
                for i2, grow in enumerate(g.matrix):
                    for j2, b in enumerate(grow):
                        if b:
                            out[i1 * gm + i2][j1 * gn + j2] = a * b
    return GradedMorphism(src, tgt, out)


def dual_morphism(f: GradedMorphism) -> GradedMorphism:
    """Anti-transpose: f^dual[i][j] = f[m-1-j][n-1-i] on the reversed lists."""
    src = dual_object(f.target)
    tgt = dual_object(f.source)
    m = f.target.dim
    n = f.source.dim
    rows = [[f.matrix[m - 1 - j][n - 1 - i] for j in range(m)] for i in range(n)]
    return GradedMorphism(src, tgt, rows)


def swap_morphism(x: GradedObject, y: GradedObject) -> GradedMorphism:
    """The symmetric coefficient-1 permutation X (x) Y -> Y (x) X.

    Internal plumbing: the category's braiding is not public API, but the
    half-braidings of the centre and several tests are built on this map.
    """
    one = CycNum.one(x.r)
    entries = {}
    for i in range(x.dim):
        for j in range(y.dim):
            entries[(j * x.dim + i, i * y.dim + j)] = one
    return GradedMorphism.from_entries(
        tensor_objects(x, y), tensor_objects(y, x), entries
    )


def delta_pivot(x: GradedObject, params: CategoryParams) -> GradedMorphism:
    """The pivotal automorphism: zeta^g on the grade-g summand."""
    entries = {(i, i): params.zeta(g) for i, g in enumerate(x.grades)}
    return GradedMorphism.from_entries(x, x, entries)


class DualityMaps(NamedTuple):
    ev_left: GradedMorphism
    coev_left: GradedMorphism
    ev_right: GradedMorphism
    coev_right: GradedMorphism


def duality_maps(x: GradedObject, params: CategoryParams) -> DualityMaps:
    """The four (co)evaluations for X with the pivotal weights.

    Left maps pair mirrored positions with coefficient 1; right maps carry
    zeta^{g} (ev) and zeta^{-g} (coev) per simple summand.
    """
    n = x.dim
    unit = unit_object(x.r)
    xd = dual_object(x)
    ev_l = {}
    coev_l = {}
    ev_r = {}
    coev_r = {}
    one = params.one()
    for i, g in enumerate(x.grades):
        p = n - 1 - i
        # X^dual (x) X, flat index p*n + i ; X (x) X^dual, flat index i*n + p
        ev_l[(0, p * n + i)] = one
        coev_l[(i * n + p, 0)] = one
        ev_r[(0, i * n + p)] = params.zeta(g)
        coev_r[(p * n + i, 0)] = params.zeta(-g)
    return DualityMaps(
        ev_left=GradedMorphism.from_entries(tensor_objects(xd, x), unit, ev_l),
        coev_left=GradedMorphism.from_entries(unit, tensor_objects(x, xd), coev_l),
        ev_right=GradedMorphism.from_entries(tensor_objects(x, xd), unit, ev_r),
        coev_right=GradedMorphism.from_entries(unit, tensor_objects(xd, x), coev_r),
    )


def dimension(x: GradedObject, side: str, params: CategoryParams) -> CycNum:
    """Left or right quantum dimension: the sum of zeta^{-g} (left) or zeta^{g}."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    sign = -1 if side == "left" else 1
    total = params.zero()
    for g in x.grades:
        total = total + params.zeta(sign * g)
    return total


def trace(f: GradedMorphism, side: str, params: CategoryParams) -> CycNum:
    """Close an endomorphism to a scalar with the pivotal duality maps.

    tr_left threads through coev_right then ev_left; tr_right through
    coev_left then ev_right.  tr(id_X) recovers dimension(X, side).
    """
    if not f.is_endo():
        raise ValueError("trace needs an endomorphism")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    x = f.source
    d = duality_maps(x, params)
    if side == "left":
        middle = tensor_morphisms(GradedMorphism.identity(dual_object(x)), f)
        closed = compose(d.ev_left, compose(middle, d.coev_right))
    else:
        middle = tensor_morphisms(f, GradedMorphism.identity(dual_object(x)))
        closed = compose(d.ev_right, compose(middle, d.coev_left))
    return closed.matrix[0][0]


def object_from_json(obj: dict) -> GradedObject:
    return GradedObject(obj["r"], obj["grades"])


def morphism_from_json(obj: dict) -> GradedMorphism:
    return GradedMorphism(
        object_from_json(obj["source"]),
        object_from_json(obj["target"]),
        [[from_json(a) for a in row] for row in obj["matrix"]],
    )


def global_dimension(params: CategoryParams) -> CycNum:
    """Sum over simples of dim_left * dim_right; equals r exactly."""
    total = params.zero()
    for u in range(params.r):
        total = total + params.zeta(-u) * params.zeta(u)
    return total
