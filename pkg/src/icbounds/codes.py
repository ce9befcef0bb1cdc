"""Executable linear index codes and a decodability simulator.

A CodeScheme is uniform: every message is d symbols over a prime field, the
broadcast is the encoder matrix applied to the concatenated message symbols,
and each receiver has a linear decoder (a combination of broadcast symbols
and its own side-information symbols).  verify_code simulates decoding over
all message vectors (exhaustively up to a cap, else with seeded random
trials) and reports counterexamples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from .combinatorial import FractionalCover, MinrkResult, rank_mod_p
from .instance import Graph, Instance
from .numeric import inv_mod, next_prime

EXHAUSTIVE_CAP = 1 << 24
RANDOM_TRIALS = 100_000


@dataclass
class DecoderSpec:
    """x_f(j) = bcast_coef @ broadcast + side_coef @ message_symbols, mod p.
    side_coef may only touch columns of messages in N(j)."""

    receiver: int
    bcast_coef: list[list[int]]  # d x (#broadcast rows)
    side_coef: list[list[int]]  # d x (n*d)


@dataclass
class CodeScheme:
    field: int
    msg_symbols: int  # d: symbols per message
    encoder: list[list[int]]  # (#broadcast rows) x (n*d)
    decoders: list[DecoderSpec]
    rate: Fraction
    kind: str = ""

    @property
    def broadcast_symbols(self) -> int:
        return len(self.encoder)


@dataclass
class VerificationReport:
    mode: str  # "exhaustive" | "random"
    trials: int
    seed: int | None
    failures: list[tuple[tuple[int, ...], int]]

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_decoder_locality(inst: Instance, scheme: CodeScheme) -> None:
    d = scheme.msg_symbols
    for dec in scheme.decoders:
        r = inst.receivers[dec.receiver]
        for row in dec.side_coef:
            for col, c in enumerate(row):
                if c % scheme.field and col // d not in r.knows:
                    raise ValueError(
                        f"decoder {dec.receiver} reads message {col // d} outside N(j)"
                    )


def verify_code(
    inst: Instance,
    scheme: CodeScheme,
    mode: str = "auto",
    trials: int = RANDOM_TRIALS,
    seed: int = 0,
    max_failures: int = 5,
) -> VerificationReport:
    _check_decoder_locality(inst, scheme)
    if {d.receiver for d in scheme.decoders} != set(range(inst.m)):
        raise ValueError("scheme lacks a decoder for some receiver")
    p = scheme.field
    d = scheme.msg_symbols
    cols = inst.n * d
    total = p**cols
    if mode == "auto":
        mode = "exhaustive" if total <= EXHAUSTIVE_CAP else "random"
    enc = np.array(scheme.encoder, dtype=np.int64) % p
    decs = [
        (
            dec.receiver,
            np.array(dec.bcast_coef, dtype=np.int64) % p,
            np.array(dec.side_coef, dtype=np.int64) % p,
        )
        for dec in scheme.decoders
    ]
    failures: list[tuple[tuple[int, ...], int]] = []

    def run_batch(xs: np.ndarray) -> None:
        bcast = xs @ enc.T % p
        for j, bc, sc in decs:
            want = inst.receivers[j].wants
            got = (bcast @ bc.T + xs @ sc.T) % p
            target = xs[:, want * d : (want + 1) * d]
            bad = np.nonzero((got != target).any(axis=1))[0]
            for i in bad[: max_failures - len(failures)]:
                failures.append((tuple(int(v) for v in xs[i]), j))

    if mode == "exhaustive":
        if total > EXHAUSTIVE_CAP:
            raise ValueError(f"exhaustive verification above cap ({total} vectors)")
        chunk = 1 << 14
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            xs = np.empty((len(idx), cols), dtype=np.int64)
            rem = idx.copy()
            for c in range(cols - 1, -1, -1):
                xs[:, c] = rem % p
                rem //= p
            run_batch(xs)
            if len(failures) >= max_failures:
                break
        return VerificationReport("exhaustive", total, None, failures)
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, p, size=(trials, cols), dtype=np.int64)
    run_batch(xs)
    return VerificationReport("random", trials, seed, failures)


# -- constructions ----------------------------------------------------------


def clique_cover_code(g: Graph, cover: list[frozenset[int]]) -> CodeScheme:
    """One XOR symbol per clique of a vertex-disjoint-or-not clique cover."""
    n = g.n
    for s in cover:
        for u in s:
            for v in s:
                if u < v and not g.has_edge(u, v):
                    raise ValueError(f"{sorted(s)} is not a clique")
    if set().union(*cover) != set(range(n)):
        raise ValueError("cover does not cover every vertex")
    encoder = [[1 if v in s else 0 for v in range(n)] for s in cover]
    decoders = []
    for v in range(n):
        i = next(i for i, s in enumerate(cover) if v in s)
        bc = [[1 if k == i else 0 for k in range(len(cover))]]
        sc = [[1 if (u in cover[i] and u != v) else 0 for u in range(n)]]
        decoders.append(DecoderSpec(v, bc, sc))
    return CodeScheme(2, 1, encoder, decoders, Fraction(len(cover)), "clique-cover")


def _equalized_cover_sets(inst: Instance, cover: FractionalCover) -> tuple[list[frozenset[int]], int]:
    """Clear denominators to unit-weight copies and shrink sets until every
    message is covered exactly q times (highest-index copies lose first)."""
    q = lcm(*[w.denominator for _, w in cover.items])
    sets: list[set[int]] = []
    for s, w in cover.items:
        sets += [set(s)] * int(w * q)
    count = [sum(1 for s in sets if v in s) for v in range(inst.n)]
    for v in range(inst.n):
        for i in range(len(sets) - 1, -1, -1):
            if count[v] == q:
                break
            if v in sets[i]:
                sets[i].discard(v)
                count[v] -= 1
        if count[v] != q:
            raise ValueError(f"message {v} covered {count[v]} < {q} times")
    return [frozenset(s) for s in sets], q


def strong_cover_code(inst: Instance, cover: FractionalCover) -> CodeScheme:
    """q bits per message, one broadcast bit per unit-weight set copy: bit k
    of message x rides in the k-th set containing x."""
    if cover.kind != "strong":
        raise ValueError("needs a strong cover")
    if inst.is_weighted():
        raise ValueError("unit rates only")
    sets, q = _equalized_cover_sets(inst, cover)
    p_rows = len(sets)
    n = inst.n
    owner: dict[tuple[int, int], int] = {}  # (message, bit k) -> broadcast row
    for v in range(n):
        for k, i in enumerate(i for i, s in enumerate(sets) if v in s):
            owner[(v, k)] = i
    encoder = [[0] * (n * q) for _ in range(p_rows)]
    for (v, k), i in owner.items():
        encoder[i][v * q + k] = 1
    decoders = []
    for j, r in enumerate(inst.receivers):
        x = r.wants
        bc = [[0] * p_rows for _ in range(q)]
        sc = [[0] * (n * q) for _ in range(q)]
        for k in range(q):
            i = owner[(x, k)]
            bc[k][i] = 1
            for z in sets[i]:
                if z == x:
                    continue
                if z not in r.knows:
                    raise ValueError(f"set {sorted(sets[i])} not inside S({j})")
                kz = next(kk for kk in range(q) if owner[(z, kk)] == i)
                sc[k][z * q + kz] = 1
        decoders.append(DecoderSpec(j, bc, sc))
    return CodeScheme(2, q, encoder, decoders, Fraction(p_rows, q), "strong-cover")


def mds_weak_cover_code(inst: Instance, cover: FractionalCover) -> CodeScheme:
    """Vandermonde combination per unit-weight weak-hyperclique copy; any d
    of the evaluation vectors form a basis, so d coordinates recover the d
    symbols of the wanted message."""
    if cover.kind != "weak":
        raise ValueError("needs a weak cover")
    if inst.is_weighted():
        raise ValueError("unit rates only")
    d = lcm(*[w.denominator for _, w in cover.items])
    copies: list[frozenset[int]] = []
    for s, w in cover.items:
        copies += [s] * int(w * d)
    dw = len(copies)
    p = next_prime(dw)
    n = inst.n
    reps = inst.distinct_receivers()
    rep_of = {}
    key = {(inst.receivers[j].wants, inst.receivers[j].knows): j for j in reps}
    for j, r in enumerate(inst.receivers):
        rep_of[j] = key[(r.wants, r.knows)]
    # Broadcast row per copy i with evaluation point a_i = i+1: the wanted
    # messages of the member receivers, each hit with (1, a, ..., a^{d-1}).
    encoder = [[0] * (n * d) for _ in range(dw)]
    for i, s in enumerate(copies):
        a = i + 1
        msgs = {inst.receivers[j].wants for j in s}
        for x in msgs:
            for t in range(d):
                encoder[i][x * d + t] = (encoder[i][x * d + t] + pow(a, t, p)) % p
    decoders = []
    for j, r in enumerate(inst.receivers):
        mine = [i for i, s in enumerate(copies) if rep_of[j] in s][:d]
        if len(mine) < d:
            raise ValueError(f"receiver {j} covered fewer than {d} times")
        # Vandermonde system V y = b where b_i = broadcast_i minus known terms.
        vm = [[pow(i + 1, t, p) for t in range(d)] for i in mine]
        vinv = _invert_mod(vm, p)
        bc = [[0] * dw for _ in range(d)]
        sc = [[0] * (n * d) for _ in range(d)]
        for t in range(d):
            for c, i in enumerate(mine):
                bc[t][i] = vinv[t][c]
                msgs = {inst.receivers[jj].wants for jj in copies[i]}
                for x in msgs:
                    if x == r.wants:
                        continue
                    if x not in r.knows:
                        raise ValueError(f"copy {i}: message {x} outside S({j})")
                    for u in range(d):
                        sc[t][x * d + u] = (
                            sc[t][x * d + u] - vinv[t][c] * pow(i + 1, u, p)
                        ) % p
        decoders.append(DecoderSpec(j, bc, sc))
    return CodeScheme(p, d, encoder, decoders, Fraction(dw, d), "mds-weak-cover")


def _invert_mod(mat: list[list[int]], p: int) -> list[list[int]]:
    k = len(mat)
    aug = [[v % p for v in row] + [1 if i == c else 0 for c in range(k)] for i, row in enumerate(mat)]
    for c in range(k):
        piv = next(i for i in range(c, k) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = inv_mod(aug[c][c], p)
        aug[c] = [v * inv % p for v in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[c])]
    return [row[k:] for row in aug]


def minrk_code(g: Graph, rep: MinrkResult) -> CodeScheme:
    """Broadcast a row basis of B x; receiver u rebuilds row u, strips its
    neighbors' terms, and divides by the diagonal entry."""
    p = rep.field
    n = g.n
    mat = [[v % p for v in row] for row in rep.matrix]
    # Greedy row basis: keep rows that raise the rank.
    basis_rows: list[int] = []
    for u in range(n):
        if rank_mod_p([mat[v] for v in basis_rows] + [mat[u]], p) > len(basis_rows):
            basis_rows.append(u)
    encoder = [mat[u] for u in basis_rows]
    decoders = []
    for u in range(n):
        e = _solve_combo(encoder, mat[u], p)
        duu = inv_mod(mat[u][u], p)
        bc = [[c * duu % p for c in e]]
        sc = [[(-mat[u][v] * duu) % p if v != u else 0 for v in range(n)]]
        decoders.append(DecoderSpec(u, bc, sc))
    return CodeScheme(p, 1, encoder, decoders, Fraction(len(basis_rows)), "minrank")


def _solve_combo(rows: list[list[int]], target: list[int], p: int) -> list[int]:
    """Coefficients expressing target as a combination of the given rows."""
    k = len(rows)
    n = len(target)
    aug = [list(r) + [1 if i == c else 0 for c in range(k)] for i, r in enumerate(rows)]
    vec = list(target) + [0] * k
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, k) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = inv_mod(aug[r][c], p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(k):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        if vec[c]:
            f = vec[c]
            vec = [(a - f * b) % p for a, b in zip(vec, aug[r])]
        r += 1
    if any(vec[:n]):
        raise ValueError("target row is not in the span of the basis rows")
    return [(-v) % p for v in vec[n:]]


def two_symbol_code(inst: Instance, phi: list[int], num_classes: int) -> CodeScheme:
    """Broadcast the plain sum and the phi-weighted sum of all messages over
    F_p, p the smallest prime above the class count."""
    p = next_prime(num_classes)
    n = inst.n
    encoder = [[1] * n, [phi[v] % p for v in range(n)]]
    decoders = []
    for j, r in enumerate(inst.receivers):
        blind = [v for v in range(n) if v != r.wants and v not in r.knows]
        if blind:
            c = phi[blind[0]] % p
            if any(phi[v] % p != c for v in blind):
                raise ValueError(f"labeling not constant on T({j})")
        else:
            c = (phi[r.wants] + 1) % p
        coef = (c - phi[r.wants]) % p
        if coef == 0:
            raise ValueError(f"labeling not separating on edge {j}")
        inv = inv_mod(coef, p)
        bc = [[c * inv % p, (-inv) % p]]
        sc = [[(-(c - phi[v]) * inv) % p if v in r.knows else 0 for v in range(n)]]
        decoders.append(DecoderSpec(j, bc, sc))
    return CodeScheme(p, 1, encoder, decoders, Fraction(2), "two-symbol")
