"""Builders for the separation complexes, their antipodal subcomplex, the
vertexwise retraction data, and the deletion covering.

The separation complex for a relation is the clique complex of the separation
graph on non-frozen subsets of [n]. Vertices are labelled by subset strings
and ordered canonically by mask value.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

from . import subsets
from .complexes import Complex, Covering, clique_complex
from .subsets import GROUP, GroupElement, act, separation_graph, subset_str

DEFAULT_ENUMERATION_CAP = 7
CAP_ENV_VAR = "SEPCX_CAP"


class CapExceeded(ValueError):
    """Requested ground size is above the configured enumeration cap."""


def enumeration_cap(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_ENUMERATION_CAP


@dataclass(frozen=True)
class SeparationComplex:
    """A separation complex together with its ground-set bookkeeping."""

    n: int
    relation: str
    complex: Complex
    masks: tuple[int, ...]  # subset mask per vertex, canonical order
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._index.update({m: i for i, m in enumerate(self.masks)})

    def vertex_index(self, subset: int | str) -> int:
        mask = subsets.parse_subset(subset, self.n) if isinstance(subset, str) else subset
        try:
            return self._index[mask]
        except KeyError:
            raise ValueError(
                f"{subset_str(mask, self.n)} is not a vertex of the {self.relation}({self.n}) complex"
            ) from None

    def face_indices(self, face: Iterable[int | str]) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_index(s) for s in face))

    def label(self, index: int) -> str:
        return self.complex.labels[index]

    def vertex_permutation(self, g: GroupElement) -> tuple[int, ...]:
        """Index permutation induced by a symmetry of the ground set."""
        return tuple(self._index[act(g, m, self.n)] for m in self.masks)

    def singleton_pair_indices(self) -> tuple[tuple[int, int], ...]:
        """Vertex index pairs (k, complement of k) for k = 2..n-1."""
        full = subsets.ground_mask(self.n)
        out = []
        for k in range(2, self.n):
            m = 1 << (k - 1)
            out.append((self._index[m], self._index[full ^ m]))
        return tuple(out)

    def antipodal_vertex_indices(self) -> tuple[int, ...]:
        return tuple(sorted(i for pair in self.singleton_pair_indices() for i in pair))

    def extends_to_face(self, face_mask: int, vertex: int) -> bool:
        """True iff face | {vertex} is still a face (adjacency test)."""
        bit = 1 << vertex
        if face_mask & bit:
            return True
        graph = self.complex.graph
        return face_mask & ~graph[vertex] == 0


def build(n: int, relation: str, cap: int | None = None) -> SeparationComplex:
    """Clique complex of the separation graph on non-frozen subsets of [n].

    Empty for n <= 2 (every subset is frozen there). Ground sizes above the
    enumeration cap (default 7, SEPCX_CAP overrides) are rejected.
    """
    subsets.check_ground_size(n)
    subsets.check_relation(relation)
    limit = enumeration_cap(cap)
    if n > limit:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {limit}")
    if n <= 2:
        return SeparationComplex(n, relation, Complex.empty(), ())
    graph = separation_graph(n, relation)
    labels = [subset_str(v, n) for v in graph.vertices]
    cx = clique_complex(labels, graph.adjacency)
    return SeparationComplex(n, relation, cx, graph.vertices)


# ---------------------------------------------------------------------------
# the antipodal subcomplex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AntipodalSubcomplex:
    """Induced subcomplex on the singletons 2..n-1 and their complements.

    Its n-2 complementary vertex pairs are mutually non-adjacent within a
    pair and adjacent across pairs, which makes it a cross-polytope boundary.
    """

    n: int
    complex: Complex
    masks: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]  # index pairs into the local table


def antipodal_subcomplex(n: int) -> AntipodalSubcomplex:
    """Build the antipodal subcomplex directly from the strong relation."""
    subsets.check_ground_size(n)
    if n < 4:
        raise ValueError("the antipodal subcomplex needs n >= 4")
    full = subsets.ground_mask(n)
    masks = sorted(
        m for k in range(2, n) for m in (1 << (k - 1), full ^ (1 << (k - 1)))
    )
    index = {m: i for i, m in enumerate(masks)}
    labels = [subset_str(m, n) for m in masks]
    adjacency = [0] * len(masks)
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if subsets.strongly_separated(a, masks[j]):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    pairs = []
    for k in range(2, n):
        i, j = index[1 << (k - 1)], index[full ^ (1 << (k - 1))]
        if adjacency[i] >> j & 1:
            raise RuntimeError("complementary vertices must not be adjacent")
        pairs.append((min(i, j), max(i, j)))
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (i, j) not in pairs and not adjacency[i] >> j & 1:
                raise RuntimeError("non-complementary vertices must be adjacent")
    cx = clique_complex(labels, adjacency)
    return AntipodalSubcomplex(n, cx, tuple(masks), tuple(pairs))


# ---------------------------------------------------------------------------
# the vertexwise retraction data
# ---------------------------------------------------------------------------

def retraction_image_mask(sc: SeparationComplex, face_mask: int) -> int:
    """Vertex-index mask of the retraction image; may be empty (callers decide)."""
    out = 0
    for i, j in sc.singleton_pair_indices():
        if sc.extends_to_face(face_mask, i) and not sc.extends_to_face(face_mask, j):
            out |= 1 << i
        elif sc.extends_to_face(face_mask, j) and not sc.extends_to_face(face_mask, i):
            out |= 1 << j
    return out


def retraction_image(sc: SeparationComplex, face: Iterable[int | str]) -> tuple[int, ...]:
    """Antipodal vertices v such that face + v is a face but face + partner(v) is not.

    Defined on nonempty faces of the strong-separation complex; the result is
    a nonempty face of the antipodal subcomplex containing no complementary
    pair.
    """
    if sc.relation != "ss":
        raise ValueError("the retraction is defined on the strong-separation complex")
    if sc.n < 4:
        raise ValueError("the retraction is defined for n >= 4")
    idx = sc.face_indices(face)
    if not idx:
        raise ValueError("the retraction is defined on nonempty faces")
    m = 0
    for v in idx:
        m |= 1 << v
    if not sc.complex.has_face_mask(m):
        raise ValueError("not a face of the complex")
    img = retraction_image_mask(sc, m)
    if img == 0:
        raise RuntimeError("retraction image unexpectedly empty")
    out = []
    rest = img
    while rest:
        low = rest & -rest
        out.append(low.bit_length() - 1)
        rest ^= low
    return tuple(out)


# ---------------------------------------------------------------------------
# the deletion covering
# ---------------------------------------------------------------------------

def deletion_covering(sc: SeparationComplex) -> Covering:
    """Covering of the weak-separation complex by deletions of the singletons
    2..n-1 and their complements, with the induced symmetry action on indices."""
    if sc.relation != "ws":
        raise ValueError("the deletion covering is defined on the weak-separation complex")
    if sc.n < 4:
        raise ValueError("the deletion covering needs n >= 4")
    full = subsets.ground_mask(sc.n)
    deleted_masks = []
    for k in range(2, sc.n):
        deleted_masks.append(1 << (k - 1))
        deleted_masks.append(full ^ (1 << (k - 1)))
    members = []
    labels = []
    for m in deleted_masks:
        v = sc.vertex_index(m)
        members.append(sc.complex.deletion_mask(1 << v))
        labels.append(f"dl({subset_str(m, sc.n)})")
    action = {}
    for g in GROUP:
        action[g] = tuple(deleted_masks.index(act(g, m, sc.n)) for m in deleted_masks)
    return Covering(sc.complex, tuple(members), tuple(labels), action)


def covering_pair_count(n: int) -> int:
    return n - 2


def free_complementary_pairs(index_subset: Iterable[int], n: int) -> int:
    """Number of pairs (k, complement) with neither deletion indexed by the subset.

    Indices follow the deletion_covering order: positions 2m and 2m+1 hold the
    singleton k = m+2 and its complement.
    """
    chosen = set(index_subset)
    size = 2 * (n - 2)
    for i in chosen:
        if not 0 <= i < size:
            raise ValueError(f"index {i} outside the covering index set of size {size}")
    free = 0
    for pair in range(n - 2):
        if 2 * pair not in chosen and 2 * pair + 1 not in chosen:
            free += 1
    return free


def central_edge_star(sc: SeparationComplex) -> Complex:
    """Star of the edge {the pair {1, n}, its complement} in the weak complex."""
    if sc.relation != "ws":
        raise ValueError("the central edge lives in the weak-separation complex")
    full = subsets.ground_mask(sc.n)
    ends = (1 << 0) | (1 << (sc.n - 1))
    i = sc.vertex_index(ends)
    j = sc.vertex_index(full ^ ends)
    return sc.complex.star_mask((1 << i) | (1 << j))
