"""r-spin structures on closed surfaces as marked PLCW decompositions.

A PLCW decomposition is a combinatorial closed surface: vertices, oriented
edges, and faces with a cyclic boundary word in which every edge appears
exactly twice.  A marking assigns an index s_e in Z_r to each edge; the
marking is admissible when a per-vertex congruence holds, and admissible
markings on a fixed decomposition count r-spin structures.

Conventions pinned here (the source material leaves them to a drawing):
the face orientation is the cyclic order of its boundary list, and the
"clockwise" boundary vertex of the preferred edge is the vertex where its
traversal starts (src for a +1 entry, dst for a -1 entry).  Pass
d_convention="end" to flip.  The shipped decompositions reproduce the
standard census either way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .caps import check_cap

_D_CONVENTIONS = ("start", "end")


class Edge(NamedTuple):
    id: int
    src: int
    dst: int

    def is_loop(self) -> bool:
        return self.src == self.dst


class Face(NamedTuple):
    boundary: tuple[tuple[int, int], ...]
    preferred: int


@dataclass(frozen=True)
class PLCW:
    """Combinatorial closed surface; validates on construction."""

    num_vertices: int
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]

    def __init__(self, num_vertices, edges, faces):
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(
            self, "edges", tuple(Edge(int(e[0]), int(e[1]), int(e[2])) for e in edges)
        )
        norm_faces = []
        for f in faces:
            boundary = tuple((int(e), int(s)) for e, s in f[0])
            norm_faces.append(Face(boundary, int(f[1])))
        object.__setattr__(self, "faces", tuple(norm_faces))
        self._validate()

    def _validate(self) -> None:
        if self.num_vertices < 0:
            raise ValueError("negative vertex count")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate edge ids")
        for e in self.edges:
            if not (0 <= e.src < self.num_vertices and 0 <= e.dst < self.num_vertices):
                raise ValueError(f"edge {e.id} references a missing vertex")
        id_set = set(ids)
        uses: dict[int, int] = {i: 0 for i in ids}
        for fi, f in enumerate(self.faces):
            if not f.boundary:
                raise ValueError(f"face {fi} has empty boundary")
            if not (0 <= f.preferred < len(f.boundary)):
                raise ValueError(f"face {fi} preferred index out of range")
            for eid, sign in f.boundary:
                if eid not in id_set:
                    raise ValueError(f"face {fi} references unknown edge {eid}")
                if sign not in (1, -1):
                    raise ValueError(f"face {fi} has boundary sign {sign}, want +-1")
                uses[eid] += 1
        bad = [eid for eid, n in uses.items() if n != 2]
        if bad:
            raise ValueError(
                f"edges {bad} do not appear exactly twice in face boundaries"
            )
        chi = self.euler_characteristic
        if chi % 2 != 0 or chi > 2:
            raise ValueError(f"Euler characteristic {chi} is not 2-2g")

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - len(self.edges) + len(self.faces)

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def edge(self, edge_id: int) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def to_json(self) -> dict:
        return {
            "vertices": self.num_vertices,
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges],
            "faces": [
                {"boundary": [[eid, s] for eid, s in f.boundary], "preferred": f.preferred}
                for f in self.faces
            ],
        }


def plcw_from_json(obj: dict) -> PLCW:
    return PLCW(
        obj["vertices"],
        [(e["id"], e["src"], e["dst"]) for e in obj["edges"]],
        [(f["boundary"], f["preferred"]) for f in obj["faces"]],
    )


@dataclass(frozen=True)
class MarkedPLCW:
    """An edge-index assignment in Z_r on a fixed decomposition."""

    complex: PLCW
    r: int
    edge_index: dict[int, int]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        missing = [e.id for e in self.complex.edges if e.id not in self.edge_index]
        if missing:
            raise ValueError(f"edges {missing} have no index")
        object.__setattr__(
            self,
            "edge_index",
            {e.id: self.edge_index[e.id] % self.r for e in self.complex.edges},
        )

    def to_json(self) -> dict:
        return {"r": self.r, "indices": {str(k): v for k, v in self.edge_index.items()}}


def marking_from_json(obj: dict, complex: PLCW) -> MarkedPLCW:
    return MarkedPLCW(
        complex, obj["r"], {int(k): v for k, v in obj["indices"].items()}
    )


def hat_edge_index(e: Edge, v: int, s_e: int, r: int) -> int:
    """Vertex-adjusted edge index: -1 on a loop, s_e outgoing, -1-s_e incoming."""
    if v not in (e.src, e.dst):
        raise ValueError(f"vertex {v} is not on edge {e.id}")
    if e.is_loop():
        return -1 % r
    if v == e.src:
        return s_e % r
    return (-1 - s_e) % r


def _clockwise_vertex(e: Edge, sign: int, d_convention: str) -> int:
    start = e.src if sign == 1 else e.dst
    end = e.dst if sign == 1 else e.src
    return start if d_convention == "start" else end


def _vertex_profiles(
    complex: PLCW, d_convention: str
) -> list[tuple[list[int], list[int], int]]:
    """Per vertex: outgoing non-loop ids, incoming non-loop ids, and the
    index-independent part of the residue."""
    if d_convention not in _D_CONVENTIONS:
        raise ValueError(f"unknown d_convention {d_convention!r}")
    loops = [0] * complex.num_vertices
    ends = [0] * complex.num_vertices
    outs: list[list[int]] = [[] for _ in range(complex.num_vertices)]
    ins: list[list[int]] = [[] for _ in range(complex.num_vertices)]
    for e in complex.edges:
        if e.is_loop():
            loops[e.src] += 1
            ends[e.src] += 2
        else:
            outs[e.src].append(e.id)
            ins[e.dst].append(e.id)
            ends[e.src] += 1
            ends[e.dst] += 1
    d = [0] * complex.num_vertices
    for f in complex.faces:
        eid, sign = f.boundary[f.preferred]
        d[_clockwise_vertex(complex.edge(eid), sign, d_convention)] += 1
    profiles = []
    for v in range(complex.num_vertices):
        const = -loops[v] - len(ins[v]) - d[v] + ends[v] - 1
        profiles.append((outs[v], ins[v], const))
    return profiles


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    residues: dict[int, int] = field(compare=False)

    def __bool__(self) -> bool:
        return self.ok


def is_admissible(m: MarkedPLCW, *, d_convention: str = "start") -> AdmissibilityReport:
    """Check the per-vertex congruence sum(hat s_e) = D_v - N_v + 1 mod r.

    Loops contribute once to the sum (with hat index -1) and twice to N_v.
    Returns the report with one residue per vertex; admissible iff all
    residues vanish.
    """
    r = m.r
    residues = {}
    for v, (outs, ins, const) in enumerate(_vertex_profiles(m.complex, d_convention)):
        acc = const
        for eid in outs:
            acc += m.edge_index[eid]
        for eid in ins:
            acc -= m.edge_index[eid]
        residues[v] = acc % r
    return AdmissibilityReport(all(x == 0 for x in residues.values()), residues)


def enumerate_admissible(
    complex: PLCW, r: int, *, cap: int | None = None, d_convention: str = "start"
) -> list[MarkedPLCW]:
    """All admissible markings, orientations and preferred edges held fixed."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    n_edges = len(complex.edges)
    check_cap("edge-index assignments", r**n_edges, cap)
    profiles = _vertex_profiles(complex, d_convention)
    order = [e.id for e in complex.edges]
    position = {eid: i for i, eid in enumerate(order)}
    compiled = [
        ([position[eid] for eid in outs], [position[eid] for eid in ins], const)
        for outs, ins, const in profiles
    ]
    found = []
    for assignment in itertools.product(range(r), repeat=n_edges):
        for outs, ins, const in compiled:
            acc = const
            for i in outs:
                acc += assignment[i]
            for i in ins:
                acc -= assignment[i]
            if acc % r != 0:
                break
        else:
            found.append(
                MarkedPLCW(complex, r, dict(zip(order, assignment)))
            )
    return found


def count_rspin(genus: int, r: int) -> int:
    """Closed-form count of r-spin structures: r^{2g} when r | 2-2g, else 0."""
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if (2 - 2 * genus) % r != 0:
        return 0
    return r ** (2 * genus)


def standard_decomposition(genus: int) -> PLCW:
    """One vertex, 2g loops, a single 4g-gon with word f1 f2 f1^- f2^- ...

    The preferred edge is position 0.  At the unique vertex the congruence
    reads -2g = 1 - 4g + 1 mod r, independent of all indices, so every
    assignment is admissible exactly when r divides 2-2g.
    """
    if genus < 1:
        raise ValueError("standard decomposition needs genus >= 1; "
                         "use sphere_decomposition() for genus 0")
    edges = [(i, 0, 0) for i in range(2 * genus)]
    word: list[tuple[int, int]] = []
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        word.extend([(a, 1), (b, 1), (a, -1), (b, -1)])
    return PLCW(1, edges, [(word, 0)])


def sphere_decomposition() -> PLCW:
    """Two vertices joined by one edge; one bigon traversing it both ways."""
    return PLCW(2, [(0, 0, 1)], [([(0, 1), (0, -1)], 0)])
