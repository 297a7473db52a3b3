"""Template-isomorphism Dynkin checker, independent of the six-step recognizer."""
import networkx as nx

from pdtest.bigraph import GramBigraph
from pdtest.dynkin import DynkinType


def template(t: DynkinType) -> nx.Graph:
    n = t.n
    if t.family == "A":
        return nx.path_graph(n)
    g = nx.path_graph(n - 1)
    # D: extra leaf on the second-to-last path vertex; E: extra leaf on the third vertex
    g.add_edge(n - 3 if t.family == "D" else 2, n - 1)
    return g


def candidates(n):
    out = [DynkinType("A", n)]
    if n >= 4:
        out.append(DynkinType("D", n))
    if n in (6, 7, 8):
        out.append(DynkinType("E", n))
    return out


def to_bigraph(g: nx.Graph) -> GramBigraph:
    nodes = sorted(g.nodes)
    index = {v: i + 1 for i, v in enumerate(nodes)}
    return GramBigraph.from_edges(len(nodes), {(index[u], index[v]): -1 for u, v in g.edges})


def brute_dynkin(G: GramBigraph):
    """Match the underlying solid simple graph against every template of its size."""
    m = G.array
    if ((m != 0) & (m != -1)).any():
        return None
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from((i, j) for i in range(G.n) for j in range(i + 1, G.n) if m[i, j] == -1)
    hits = [t for t in candidates(G.n) if nx.is_isomorphic(g, template(t))]
    assert len(hits) <= 1
    return hits[0] if hits else None
