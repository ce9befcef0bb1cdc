import json
import random
from fractions import Fraction

import pytest

from icbounds.instance import (
    Graph,
    Instance,
    ParseError,
    Receiver,
    closure_fixpoint,
    closure_step,
    decodes,
    disjoint_union,
    from_graph,
    from_mask,
    read_graph,
    read_instance,
    read_problem,
    to_mask,
    validate,
    validate_graph,
    write_graph,
    write_instance,
)


def c5():
    return Graph.from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def test_from_graph_receivers():
    inst = from_graph(c5())
    assert inst.n == 5 and inst.m == 5
    r = inst.receivers[0]
    assert r.wants == 0 and r.knows == frozenset({1, 4})
    assert r.side_set(5) == frozenset({0, 1, 4})
    assert r.blind_set(5) == frozenset({2, 3})


def test_validate_catches_bad_receivers():
    bad = Instance(3, (Receiver(3, frozenset()),))
    assert not validate(bad).ok
    bad = Instance(3, (Receiver(1, frozenset({1})),))  # knows its own want
    assert not validate(bad).ok
    ok = Instance(3, (Receiver(1, frozenset({0})),))
    assert validate(ok).ok


def test_graph_roundtrip(tmp_path):
    g = c5()
    p = tmp_path / "g.json"
    write_graph(g, p)
    assert read_graph(p).edge_list() == g.edge_list()
    inst2, data = read_problem(p)
    assert "edges" in data
    assert inst2.receivers == from_graph(g).receivers


def test_instance_roundtrip(tmp_path):
    inst = Instance(
        4,
        (Receiver(0, frozenset({1, 2})), Receiver(3, frozenset({0}))),
        rates=(Fraction(1), Fraction(1, 2), Fraction(1), Fraction(1, 3)),
    )
    p = tmp_path / "i.json"
    write_instance(inst, p)
    back = read_instance(p)
    assert back == inst


def test_rate_normalization(tmp_path):
    # on-file rates get scaled so the max is 1; the scale is kept
    p = tmp_path / "w.json"
    p.write_text(json.dumps({
        "type": "instance", "n": 2,
        "receivers": [{"wants": 0, "knows": [1]}, {"wants": 1, "knows": [0]}],
        "rates": ["3", "3/2"],
    }))
    inst = read_instance(p)
    assert inst.rate(0) == 1 and inst.rate(1) == Fraction(1, 2)
    assert inst.rate_scale == 3


def test_parse_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        read_instance(p)
    p.write_text(json.dumps({"n": 3, "edges": [[0, 7]]}))
    # out-of-range endpoints are a validation failure, not a parse failure
    assert not validate_graph(read_graph(p)).ok
    p.write_text(json.dumps({"n": 3}))
    with pytest.raises(ParseError):
        read_problem(p)


def test_closure_and_decodes():
    inst = from_graph(c5())
    # knowing everything but vertex 0 lets receiver 0's neighbours feed it
    a = frozenset({1, 2, 3, 4})
    assert closure_step(inst, a) == frozenset(range(5))
    assert decodes(inst, a, frozenset(range(5)))
    # an isolated pair can't be completed
    assert closure_fixpoint(inst, frozenset({2})) == frozenset({2})
    assert not decodes(inst, frozenset({2}), frozenset({2, 0}))


def test_decodes_needs_subset():
    inst = from_graph(c5())
    assert not decodes(inst, frozenset({0, 1}), frozenset({1}))


def test_disjoint_union():
    a = from_graph(c5())
    u = disjoint_union(a, a)
    assert u.n == 10 and u.m == 10
    assert u.receivers[5].wants == 5
    assert u.receivers[5].knows == frozenset({6, 9})


def test_masks():
    s = frozenset({0, 2, 5})
    assert to_mask(s) == 0b100101
    assert from_mask(to_mask(s)) == s


def test_validate_graph():
    assert validate_graph(c5()).ok
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randrange(2, 8)
        edges = [(u, v) for u, v in [(rng.randrange(n), rng.randrange(n)) for _ in range(n)] if u != v]
        g = Graph.from_edge_list(n, edges)
        assert validate_graph(g).ok


def test_distinct_receivers_dedup():
    inst = Instance(3, (
        Receiver(0, frozenset({1})),
        Receiver(0, frozenset({1})),
        Receiver(1, frozenset({2})),
    ))
    assert inst.distinct_receivers() == (0, 2)
