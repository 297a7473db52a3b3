"""Dynkin graphs A(n), D(n), E6, E7, E8: templates and recognition."""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .bigraph import GramBigraph


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    n: int

    def __post_init__(self):
        f, n = self.family, self.n
        ok = (f == "A" and n >= 1) or (f == "D" and n >= 4) or (f == "E" and n in (6, 7, 8))
        if not ok:
            raise ValueError(f"no Dynkin graph {f}{n}")

    def __str__(self):
        return f"{self.family}{self.n}"

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ADE])\s*\(?\s*(\d+)\s*\)?\s*", text)
        if not m:
            raise ValueError(f"not a Dynkin type: {text!r}")
        return cls(m.group(1), int(m.group(2)))


def A(n):
    return DynkinType("A", n)


def D(n):
    return DynkinType("D", n)


E6 = DynkinType("E", 6)
E7 = DynkinType("E", 7)
E8 = DynkinType("E", 8)


def dynkin_edges(t: DynkinType) -> list[tuple[int, int]]:
    """Edges (1-based) of the standard labelling of ``t``.

    A: the path 1-2-...-n. D: the path 1..n-1 with n attached to n-2.
    E: the path 1..n-1 with n attached to 3.
    """
    n = t.n
    if t.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]


def dynkin_bigraph(t: DynkinType) -> GramBigraph:
    return GramBigraph.from_edges(t.n, {e: -1 for e in dynkin_edges(t)})


def _recognize(m: np.ndarray) -> DynkinType | None:
    n = m.shape[0]
    # 1. simple solid graph
    if np.any((m != 0) & (m != -1)):
        return None
    # 2. exactly n - 1 edges
    if int(np.count_nonzero(m)) != 2 * (n - 1):
        return None
    adj = [np.flatnonzero(m[i]).tolist() for i in range(n)]
    # 3. connected
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    if not all(seen):
        return None
    # 4. ramification vertices
    ram = [v for v in range(n) if len(adj[v]) >= 3]
    # 5.
    if not ram:
        return DynkinType("A", n)
    if len(ram) > 1 or len(adj[ram[0]]) > 3:
        return None
    # 6. a tree with one degree-3 vertex: three paths leave it
    s = ram[0]
    arms = []
    for w in adj[s]:
        length, prev, cur = 1, s, w
        while len(adj[cur]) == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms == (1, 1, n - 3):
        return DynkinType("D", n)
    return {(1, 2, 2): E6, (1, 2, 3): E7, (1, 2, 4): E8}.get(arms)


def recognize_dynkin(G: GramBigraph) -> DynkinType | None:
    """Dynkin type of ``G`` if ``G`` is (isomorphic to) a Dynkin graph, else None."""
    return _recognize(G.array)
