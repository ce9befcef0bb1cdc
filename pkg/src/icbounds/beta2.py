"""Polynomial-time decision of "broadcast rate exactly 2".

Vertices v, w are related (v # w) when some receiver is blind on both, i.e.
{v, w} <= T(j) = V \\ (N(j) | {f(j)}).  Classes of the transitive closure
give a candidate labeling; the instance admits a rate-2 scheme iff for every
receiver the class of its blind set differs from the class of its wanted
message.  On success the labeling yields the two-symbol sum / weighted-sum
code; on failure a shortest path in the #-graph from f(j) into T(j) unrolls
into an almost-alternating-cycle witness certifying a bound of 2 + 1/n.

Receivers that are blind on nothing impose no relation and are always
servable; instances whose receivers form one weak hyperclique are fenced off
(rate 1 territory) with reason "beta_below_2".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .codes import CodeScheme, two_symbol_code
from .combinatorial import is_weak_hyperclique
from .instance import Instance


def blind_set(inst: Instance, j: int) -> frozenset[int]:
    r = inst.receivers[j]
    return frozenset(range(inst.n)) - r.knows - {r.wants}


def sharp_relation(inst: Instance) -> dict[frozenset[int], int]:
    """Unordered related pairs, each with one witnessing receiver index."""
    pairs: dict[frozenset[int], int] = {}
    for j in range(inst.m):
        t = sorted(blind_set(inst, j))
        for a in range(len(t)):
            for b in range(a + 1, len(t)):
                pairs.setdefault(frozenset((t[a], t[b])), j)
    return pairs


@dataclass
class AacWitness:
    """Vertices v_{-n}..v_n and receivers j_0..j_n of an almost alternating
    (2n+1)-cycle: f(j_i) = v_{i-n}, T(j_i) contains v_i (and v_{i+1} for
    i < n)."""

    n: int
    vertices: list[int]  # length 2n+1, index i holds v_{i-n}
    edges: list[int]  # length n+1

    @property
    def bound(self) -> Fraction:
        return 2 + Fraction(1, self.n)


def validate_aac(inst: Instance, w: AacWitness) -> list[str]:
    bad = []
    n = w.n
    if len(w.vertices) != 2 * n + 1 or len(w.edges) != n + 1:
        return ["wrong sequence lengths"]

    def v(i: int) -> int:
        return w.vertices[i + n]

    for i, j in enumerate(w.edges):
        t = blind_set(inst, j)
        if inst.receivers[j].wants != v(i - n):
            bad.append(f"edge {i}: wanted message is not v_{i - n}")
        if v(i) not in t:
            bad.append(f"edge {i}: v_{i} not in the blind set")
        if i < n and v(i + 1) not in t:
            bad.append(f"edge {i}: v_{i + 1} not in the blind set")
    return bad


@dataclass
class Beta2Certificate:
    is_two: bool
    reason: str = ""
    labeling: list[int] | None = None  # vertex -> class id
    num_classes: int = 0
    scheme: CodeScheme | None = None
    aac: AacWitness | None = None
    bound: Fraction | None = None  # lower bound on beta when is_two is False


def _classes(inst: Instance) -> tuple[list[int], int, dict[frozenset[int], int]]:
    pairs = sharp_relation(inst)
    parent = list(range(inst.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pr in pairs:
        a, b = sorted(pr)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    ids: dict[int, int] = {}
    lab = []
    for vtx in range(inst.n):
        r = find(vtx)
        ids.setdefault(r, len(ids))
        lab.append(ids[r])
    return lab, len(ids), pairs


def _extract_aac(inst: Instance, j_star: int, pairs: dict[frozenset[int], int]) -> AacWitness:
    """BFS in the #-graph from f(j*) to the blind set of j*; unroll the
    shortest path into an almost-alternating-cycle witness."""
    src = inst.receivers[j_star].wants
    goal = blind_set(inst, j_star)
    adj: dict[int, list[tuple[int, int]]] = {}
    for pr, j in pairs.items():
        a, b = sorted(pr)
        adj.setdefault(a, []).append((b, j))
        adj.setdefault(b, []).append((a, j))
    prev: dict[int, tuple[int, int]] = {}
    seen = {src}
    q = deque([src])
    end = None
    while q:
        cur = q.popleft()
        if cur in goal and cur != src:
            end = cur
            break
        for nxt, j in adj.get(cur, []):
            if nxt not in seen:
                seen.add(nxt)
                prev[nxt] = (cur, j)
                q.append(nxt)
    if end is None:
        raise AssertionError("no #-path despite a shared class")
    path_v = [end]
    path_e = []
    while path_v[-1] != src:
        p, j = prev[path_v[-1]]
        path_e.append(j)
        path_v.append(p)
    path_v.reverse()  # v_0 = f(j*), ..., v_n in T(j*)
    path_e.reverse()  # witnesses for (v_i, v_{i+1})
    n = len(path_e)
    edges = path_e + [j_star]
    vertices = [inst.receivers[j].wants for j in edges[:n]] + path_v
    # vertices holds v_{-n}..v_{-1} (wants of j_0..j_{n-1}) then v_0..v_n;
    # f(j_n) = f(j*) = v_0 by construction.
    return AacWitness(n, vertices, edges)


def decide_beta_eq_2(inst: Instance) -> Beta2Certificate:
    reps = inst.distinct_receivers()
    if is_weak_hyperclique(inst, reps):
        return Beta2Certificate(False, reason="beta_below_2")
    lab, num, pairs = _classes(inst)
    for j in range(inst.m):
        t = blind_set(inst, j)
        if not t:
            continue
        c = lab[next(iter(t))]
        if lab[inst.receivers[j].wants] == c:
            w = _extract_aac(inst, j, pairs)
            bad = validate_aac(inst, w)
            if bad:
                raise AssertionError(f"extracted witness failed validation: {bad}")
            return Beta2Certificate(False, reason="aac", aac=w, bound=w.bound)
    scheme = two_symbol_code(inst, lab, num)
    return Beta2Certificate(True, labeling=lab, num_classes=num, scheme=scheme)


def undirected_beta2(g) -> bool:
    """A graph has rate exactly 2 iff its complement is bipartite (and has
    at least one edge)."""
    import networkx as nx

    from .families import complement

    cg = complement(g)
    if not cg.edges:
        raise ValueError("complete graph: complement has no edges (rate <= 1)")
    h = nx.Graph()
    h.add_nodes_from(range(cg.n))
    h.add_edges_from(cg.edge_list())
    return nx.is_bipartite(h)
