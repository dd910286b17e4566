"""Shared test utilities: independent recomputations and graph corpora."""

from __future__ import annotations

import random
from collections import deque

from avdcolor import Graph, SubgraphSelection, gnp, is_normal


def girth(g: Graph):
    """Shortest cycle length via BFS from every vertex; None if acyclic."""
    best = None
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    cyc = dist[v] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def recompute_selection_state(sel: SubgraphSelection):
    """From-scratch recomputation of the incremental bookkeeping."""
    host = sel.host
    deg = {v: 0 for v in host.vertices}
    for u, v in sel.selected:
        deg[u] += 1
        deg[v] += 1
    iso_sel = {e for e in sel.selected if deg[e[0]] == 1 and deg[e[1]] == 1}
    codeg = {v: host.degree(v) - deg[v] for v in host.vertices}
    iso_unsel = {e for e in host.edges - sel.selected
                 if codeg[e[0]] == 1 and codeg[e[1]] == 1}
    return deg, iso_sel, iso_unsel


def normal_gnp_corpus(count: int, seed0: int, n_lo: int, n_hi: int,
                      d_lo: int, d_hi: int, p_lo=0.06, p_hi=0.55):
    """Deterministic stream of normal random graphs with bounded max degree."""
    out = []
    seed = seed0
    while len(out) < count:
        rng = random.Random(seed)
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(p_lo, p_hi)
        g = gnp(n, p, seed)
        seed += 1
        if is_normal(g) and d_lo <= g.max_degree <= d_hi and g.edge_count:
            out.append(g)
    return out


def scramble_selection(g: Graph, sel: SubgraphSelection, rng: random.Random,
                       steps: int) -> None:
    """Random membership-preserving walk; tends to manufacture isolated edges."""
    edges = sorted(g.edges)
    delta = g.max_degree
    for _ in range(steps):
        e = rng.choice(edges)
        u, v = e
        if sel.is_selected(e) and rng.random() < 0.7:
            ok = True
            for w in (u, v):
                d_after = sel.deg(w) - 1
                if g.degree(w) == delta and d_after < 2:
                    ok = False
                if g.degree(w) == delta - 1 and d_after < 1:
                    ok = False
            if ok:
                sel.remove(e)
        elif not sel.is_selected(e):
            if sel.deg(u) <= 2 and sel.deg(v) <= 2:
                sel.add(e)
