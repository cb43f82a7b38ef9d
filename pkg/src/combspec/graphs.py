"""Finite simple graphs: paths, comb products, bridge couplings and tail truncations.

Vertices are labelled 1..order.  Comb products use the level labelling:
backbone vertices first, then the n copies of every finger vertex at
distance 1 from the contact, then distance 2, and so on.  With this
labelling the adjacency matrix of P_n > P_k is

    kron(E_11, J_n) + kron(J_k, I_n)

i.e. the k x k path matrix "inflated" by n x n identity blocks, with the
top-left block replaced by the backbone path J_n.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InvalidArgument(f"graph order must be positive, got {self.order}")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise InvalidArgument(f"self-loop at vertex {i}")
            if not (1 <= i <= self.order and 1 <= j <= self.order):
                raise InvalidArgument(f"edge {{{i}, {j}}} outside 1..{self.order}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        pairs = [(int(i), int(j)) for i, j in edges]
        normalized = [(min(i, j), max(i, j)) for i, j in pairs]
        if len(set(normalized)) != len(normalized):
            raise InvalidArgument("duplicate edge")
        return cls(order, frozenset(normalized))

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self) -> dict[int, list[int]]:
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, self.order + 1)}
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        for v in nbrs:
            nbrs[v].sort()
        return nbrs

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for i, j in self.edges:
            deg[i - 1] += 1
            deg[j - 1] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees())

    def distances_from(self, source: int) -> dict[int, int]:
        self._check_vertex(source)
        nbrs = self.neighbors()
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        return len(self.distances_from(1)) == self.order

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        return {"order": self.order, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls.from_edges(int(data["order"]), data["edges"])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v - 1]``."""
        if sorted(perm) != list(range(1, self.order + 1)):
            raise InvalidArgument("perm must be a permutation of 1..order")
        return Graph(self.order, frozenset((perm[i - 1], perm[j - 1]) for i, j in self.edges))

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.order:
            raise InvalidArgument(f"vertex {v} outside 1..{self.order}")


@dataclass(frozen=True)
class CombSpec:
    """Parameters of the comb graph P_n > P_k grafted at an endpoint of P_k."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise InvalidArgument(f"comb orders must be >= 1, got n={self.n}, k={self.k}")

    @property
    def order(self) -> int:
        return self.n * self.k

    def graph(self) -> Graph:
        return comb(self.n, self.k)


def path(m: int) -> Graph:
    if m < 1:
        raise InvalidArgument(f"path order must be >= 1, got {m}")
    return Graph(m, frozenset((i, i + 1) for i in range(1, m)))


def comb_product(backbone: Graph, finger: Graph, contact: int = 1) -> Graph:
    """Graft a copy of ``finger`` at ``contact`` onto every backbone vertex.

    The contact must be an endpoint (a vertex of degree <= 1) of the finger.
    Copies are labelled by level, so backbone vertex ``x`` keeps label ``x``
    and its copy of the finger vertex at level ``l`` gets ``l * n + x``.
    """
    finger._check_vertex(contact)
    if finger.degree(contact) > 1:
        raise InvalidArgument(f"contact vertex {contact} is not an endpoint of the finger")
    dist = finger.distances_from(contact)
    if len(dist) != finger.order:
        raise InvalidArgument("finger graph must be connected")
    # contact first, then by distance from contact, ties by label
    levels = sorted(range(1, finger.order + 1), key=lambda v: (dist[v], v))
    level_of = {v: i for i, v in enumerate(levels)}
    n = backbone.order

    def label(x: int, y: int) -> int:
        return level_of[y] * n + x

    edges = set()
    for x1, x2 in backbone.edges:
        edges.add((label(x1, contact), label(x2, contact)))
    for y1, y2 in finger.edges:
        for x in range(1, n + 1):
            a, b = label(x, y1), label(x, y2)
            edges.add((min(a, b), max(a, b)))
    return Graph(n * finger.order, frozenset(edges))


def comb(n: int, k: int) -> Graph:
    return comb_product(path(n), path(k), 1)


def couple_with_bridge(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    shift = g1.order
    edges = set(g1.edges)
    edges.update((i + shift, j + shift) for i, j in g2.edges)
    edges.add((v1, v2 + shift))
    return Graph(g1.order + g2.order, frozenset(edges))


def truncated_tail(spec: CombSpec | tuple[int, int], L: int) -> Graph:
    """Comb P_n > P_k with a path of ``L`` vertices bridged to backbone vertex n."""
    if not isinstance(spec, CombSpec):
        spec = CombSpec(*spec)
    if L < 1:
        raise InvalidArgument(f"tail length must be >= 1, got {L}")
    return couple_with_bridge(spec.graph(), spec.n, path(L), 1)


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order))
    if g.edges:
        idx = np.array(sorted(g.edges)) - 1
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


def copy_by_copy_permutation(n: int, k: int) -> list[int]:
    """Map level labels of P_n > P_k to the copy-by-copy labelling.

    In the copy-by-copy scheme the i-th finger (attached to backbone vertex i)
    occupies labels (i-1)k+1 .. ik, contact first.
    """
    perm = []
    for level in range(k):
        for x in range(1, n + 1):
            perm.append((x - 1) * k + level + 1)
    return perm
