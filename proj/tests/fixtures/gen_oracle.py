"""Regenerates oracle_groups.txt with networkx + sympy, independently of the C++ code.

Each line: descriptor | K(G) | K(L G) | K(sd G) | spanning trees of G
Groups are invariant factors (>= 2) separated by commas; "-" is the trivial group.
"""
import random
import sys

import networkx as nx
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form


def critical_group(g):
    nodes = list(g.nodes())
    if len(nodes) <= 1:
        return [], 1
    lap = nx.laplacian_matrix(g, nodelist=nodes).toarray().tolist()
    reduced = Matrix([row[1:] for row in lap[1:]])
    snf = smith_normal_form(reduced, domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(snf.rows)]
    return sorted(d for d in diag if d != 1), abs(int(reduced.det()))


def fmt(factors):
    return ",".join(map(str, factors)) if factors else "-"


NAMED = {
    "complete:4": nx.complete_graph(4),
    "complete:5": nx.complete_graph(5),
    "complete:6": nx.complete_graph(6),
    "cycle:5": nx.cycle_graph(5),
    "cycle:6": nx.cycle_graph(6),
    "path:4": nx.path_graph(4),
    "star:4": nx.star_graph(4),
    "complete-bipartite:2,3": nx.complete_bipartite_graph(2, 3),
    "complete-bipartite:3,3": nx.complete_bipartite_graph(3, 3),
    "complete-bipartite:2,4": nx.complete_bipartite_graph(2, 4),
    "cube:3": nx.hypercube_graph(3),
    "cube:4": nx.hypercube_graph(4),
    "petersen": nx.petersen_graph(),
    "octahedron": nx.octahedral_graph(),
    "dodecahedron": nx.dodecahedral_graph(),
    "icosahedron": nx.icosahedral_graph(),
}


def main(out):
    rows = []
    for name, g in NAMED.items():
        rows.append((name, g))
    rng = random.Random(20240601)
    seen = 0
    while seen < 40:
        n = rng.randint(4, 8)
        g = nx.gnp_random_graph(n, rng.uniform(0.3, 0.8), seed=rng.randint(0, 10**9))
        if not nx.is_connected(g):
            continue
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
        rows.append((f"{n}:" + ",".join(f"{u}-{v}" for u, v in edges), g))
        seen += 1
    with open(out, "w") as f:
        for name, g in rows:
            k, kappa = critical_group(g)
            kl, _ = critical_group(nx.line_graph(g))
            ks, _ = critical_group(nx.subdivide(g) if hasattr(nx, "subdivide") else subdivide(g))
            f.write(f"{name} | {fmt(k)} | {fmt(kl)} | {fmt(ks)} | {kappa}\n")


def subdivide(g):
    h = nx.Graph()
    h.add_nodes_from(g.nodes())
    for u, v in g.edges():
        m = ("mid", u, v)
        h.add_edge(u, m)
        h.add_edge(m, v)
    return h


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "oracle_groups.txt")
