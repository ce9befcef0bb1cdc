"""Data model for broadcasting-with-side-information instances.

An instance has n messages (0..n-1) and a list of receivers; receiver j
wants message f(j) and knows the side-information set N(j).  Undirected
graphs are the special case with one receiver per vertex knowing its
neighbors.  Message rates are exact rationals in (0, 1] (all 1 unless
the instance is weighted).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .numeric import format_rational, parse_rational


@dataclass(frozen=True)
class Receiver:
    wants: int
    knows: frozenset[int]

    def side_set(self, n: int) -> frozenset[int]:
        """S(j) = N(j) | {f(j)}."""
        return self.knows | {self.wants}

    def blind_set(self, n: int) -> frozenset[int]:
        """T(j) = V \\ S(j)."""
        return frozenset(range(n)) - self.side_set(n)


@dataclass(frozen=True)
class Instance:
    n: int
    receivers: tuple[Receiver, ...]
    rates: tuple[Fraction, ...] | None = None
    # Factor the on-file rates were divided by so that max(rate) == 1.
    rate_scale: Fraction = Fraction(1)

    @property
    def m(self) -> int:
        return len(self.receivers)

    def rate(self, v: int) -> Fraction:
        return Fraction(1) if self.rates is None else self.rates[v]

    def total_rate(self) -> Fraction:
        return sum((self.rate(v) for v in range(self.n)), Fraction(0))

    def is_weighted(self) -> bool:
        return self.rates is not None and any(r != 1 for r in self.rates)

    def distinct_receivers(self) -> tuple[int, ...]:
        """Indices of one representative per distinct (wants, knows) pair."""
        seen: dict[tuple, int] = {}
        for j, r in enumerate(self.receivers):
            key = (r.wants, r.knows)
            if key not in seen:
                seen[key] = j
        return tuple(seen.values())


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[frozenset[int]]

    @staticmethod
    def from_edge_list(n: int, edges) -> "Graph":
        es = frozenset(frozenset((u, v)) for u, v in edges)
        return Graph(n, es)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(inst: Instance) -> ValidationReport:
    rep = ValidationReport()
    if inst.n < 1:
        rep.violations.append("instance has no messages")
    for j, r in enumerate(inst.receivers):
        if not 0 <= r.wants < inst.n:
            rep.violations.append(f"receiver {j}: wanted message {r.wants} out of range")
        if any(not 0 <= v < inst.n for v in r.knows):
            rep.violations.append(f"receiver {j}: side information out of range")
        if r.wants in r.knows:
            rep.violations.append(f"receiver {j}: receiver knows own message")
    if inst.rates is not None:
        if len(inst.rates) != inst.n:
            rep.violations.append("rate vector length differs from message count")
        for v, rv in enumerate(inst.rates):
            if rv <= 0:
                rep.violations.append(f"message {v}: nonpositive rate")
            elif rv > 1:
                rep.violations.append(f"message {v}: rate above 1 after normalization")
    return rep


def validate_graph(g: Graph) -> ValidationReport:
    rep = ValidationReport()
    for e in g.edges:
        if len(e) != 2:
            rep.violations.append(f"self-loop or malformed edge {sorted(e)}")
        elif any(not 0 <= v < g.n for v in e):
            rep.violations.append(f"edge {sorted(e)} out of range")
    return rep


def from_graph(g: Graph) -> Instance:
    """One receiver per vertex, knowing exactly its neighbors."""
    recs = tuple(Receiver(v, g.neighbors(v)) for v in range(g.n))
    return Instance(g.n, recs)


def closure_step(inst: Instance, a: frozenset[int]) -> frozenset[int]:
    """a plus every message wanted by a receiver whose side information lies in a."""
    extra = {r.wants for r in inst.receivers if r.wants not in a and r.knows <= a}
    return frozenset(a) | extra


def closure_fixpoint(inst: Instance, a: frozenset[int]) -> frozenset[int]:
    cur = frozenset(a)
    while True:
        nxt = closure_step(inst, cur)
        if nxt == cur:
            return cur
        cur = nxt


def decodes(inst: Instance, a: frozenset[int], b: frozenset[int]) -> bool:
    """The one-step decode relation: a subset of b, and every message of
    b - a is wanted by a receiver knowing only messages of a."""
    a, b = frozenset(a), frozenset(b)
    if not a <= b:
        return False
    return b <= closure_step(inst, a)


def disjoint_union(a: Instance, b: Instance) -> Instance:
    recs = list(a.receivers)
    recs += [Receiver(r.wants + a.n, frozenset(v + a.n for v in r.knows)) for r in b.receivers]
    rates = None
    if a.rates is not None or b.rates is not None:
        rates = tuple(a.rate(v) for v in range(a.n)) + tuple(b.rate(v) for v in range(b.n))
    return Instance(a.n + b.n, tuple(recs), rates)


def graph_disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edge_list()) + [(u + a.n, v + a.n) for u, v in b.edge_list()]
    return Graph.from_edge_list(a.n + b.n, edges)


def blow_up(g: Graph, t: int) -> Graph:
    """t-blow-up with independent sets: vertex (u,i) -> u*t+i, edges between
    copies of adjacent vertices only."""
    if t < 1:
        raise ValueError("blow-up factor must be >= 1")
    edges = []
    for u, v in g.edge_list():
        for i in range(t):
            for j in range(t):
                edges.append((u * t + i, v * t + j))
    return Graph.from_edge_list(g.n * t, edges)


class ParseError(ValueError):
    pass


def _instance_from_dict(data: dict) -> Instance:
    try:
        n = int(data["n"])
        recs = tuple(
            Receiver(int(r["wants"]), frozenset(int(v) for v in r["knows"]))
            for r in data["receivers"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed instance file: {exc}") from exc
    rates = None
    scale = Fraction(1)
    if data.get("rates") is not None:
        try:
            raw = [parse_rational(s) for s in data["rates"]]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed rate entry: {exc}") from exc
        if any(r <= 0 for r in raw):
            raise ParseError("rates must be positive")
        scale = max(raw)
        rates = tuple(r / scale for r in raw)
    return Instance(n, recs, rates, scale)


def read_instance(path) -> Instance:
    with open(path) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return _instance_from_dict(data)


def write_instance(inst: Instance, path) -> None:
    data: dict = {
        "n": inst.n,
        "receivers": [
            {"wants": r.wants, "knows": sorted(r.knows)} for r in inst.receivers
        ],
    }
    if inst.rates is not None:
        data["rates"] = [format_rational(r) for r in inst.rates]
    with open(path, "w") as f:
        json.dump(data, f, indent=1)
        f.write("\n")


def read_graph(path) -> Graph:
    with open(path) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    try:
        return Graph.from_edge_list(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph file: {exc}") from exc


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as f:
        json.dump({"n": g.n, "edges": [list(e) for e in g.edge_list()]}, f, indent=1)
        f.write("\n")


def read_problem(path):
    """Read a JSON file holding either an instance or a graph; graphs are
    converted via from_graph.  Returns (instance, data_dict)."""
    with open(path) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    if "receivers" in data:
        return _instance_from_dict(data), data
    if "edges" in data:
        g = Graph.from_edge_list(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])
        return from_graph(g), data
    raise ParseError(f"{path}: neither an instance nor a graph file")


# -- bitmask helpers shared by the LP modules -------------------------------

def to_mask(s) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def receiver_masks(inst: Instance) -> list[tuple[int, int, int]]:
    """(wants, knows_mask, side_mask) per receiver."""
    return [(r.wants, to_mask(r.knows), to_mask(r.knows) | (1 << r.wants)) for r in inst.receivers]
