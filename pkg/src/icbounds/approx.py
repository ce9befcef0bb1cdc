"""Polynomial-time sandwich bounds on the broadcast rate.

Lower bound: greedy expanding sequence (a sequence of receivers, each wanting
a message unknown to all earlier ones).  Upper bound: the certified quantity
tau built from weak fractional hyperclique covers -- a dyadic partition by
message rate, and per class either a cover from the expanding-or-cover
recursion (weight at most 12 k n^{1-1/k}) or the trivial one-clique-per-vertex
cover of weight 2|V_s|.  All arithmetic is rational; irrational thresholds
n^{1-1/k} enter only through certified rational enclosures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .combinatorial import (
    ExpandingSequence,
    FractionalCover,
    fractional_cover,
    is_expanding_sequence,
    is_weak_hyperclique,
    sequence_weight,
    verify_cover,
)
from .instance import Instance, Receiver
from .numeric import log2_enclosure, pow_frac_ceil, pow_frac_enclosure

F0 = Fraction(0)
F1 = Fraction(1)

EXACT_COVER_CAP = 20  # exact prefix-set enumeration up to this many messages
MC_BASE_SAMPLES = 50_000
MC_INFLATION = Fraction(11, 10)


def induced_subhypergraph(inst: Instance, verts) -> tuple[Instance, list[int], list[int]]:
    """Restriction to a vertex set: keeps receivers wanting into it, with side
    information intersected.  Returns (sub, vertex map, edge map) where maps
    send sub indices back to the parent's."""
    vmap = sorted(verts)
    local = {v: i for i, v in enumerate(vmap)}
    recs = []
    emap = []
    for j, r in enumerate(inst.receivers):
        if r.wants not in local:
            continue
        recs.append(
            Receiver(local[r.wants], frozenset(local[v] for v in r.knows if v in local))
        )
        emap.append(j)
    rates = tuple(inst.rate(v) for v in vmap) if inst.is_weighted() else None
    return Instance(len(vmap), tuple(recs), rates), vmap, emap


def alpha_greedy(inst: Instance) -> ExpandingSequence:
    """Greedy expanding sequence: scan receivers by wanted rate (desc, then
    index), adding any whose wanted message avoids every earlier S(j)."""
    order = sorted(range(inst.m), key=lambda j: (-inst.rate(inst.receivers[j].wants), j))
    used: set[int] = set()
    seq = []
    for j in order:
        r = inst.receivers[j]
        if r.wants not in used:
            seq.append(j)
            used |= r.knows | {r.wants}
    out = ExpandingSequence(tuple(seq), sequence_weight(inst, seq))
    assert is_expanding_sequence(inst, out.receivers)
    return out


# -- low-degree cover -------------------------------------------------------


def _prefix_sets(n: int, d: int):
    """Exact distribution of the random prefix set T: a uniformly random
    permutation of [n+d] is cut just before its first element >= n.  Yields
    (mask, probability); any T of size t has probability
    t! * d * (n+d-t-1)! / (n+d)!."""
    if d == 0:
        yield (1 << n) - 1, F1
        return
    denom = factorial(n + d)
    for mask in range(1 << n):
        t = mask.bit_count()
        yield mask, Fraction(factorial(t) * d * factorial(n + d - t - 1), denom)


def low_degree_cover(
    inst: Instance, d: int, mc: bool = False, seed: int = 0
) -> FractionalCover:
    """Weak fractional cover of total weight <= 4d+2 for dense side
    information (every receiver with |S(j)| + d >= n).  Hypercliques are
    sampled as {j : f(j) in T <= S(j)} for a random prefix set T and weighted
    by (4d+2) times their sampling probability; the coverage of every
    receiver is verified exactly before returning."""
    n = inst.n
    for j, r in enumerate(inst.receivers):
        if len(r.knows) + 1 + d < n:
            raise ValueError(f"receiver {j} has |S| + d = {len(r.knows) + 1 + d} < n")
    reps = inst.distinct_receivers()
    info = [
        (j, 1 << inst.receivers[j].wants,
         sum(1 << v for v in inst.receivers[j].knows) | 1 << inst.receivers[j].wants)
        for j in reps
    ]

    def clique_of(tmask: int) -> frozenset[int]:
        return frozenset(j for j, fb, sm in info if fb & tmask and not tmask & ~sm)

    weights: dict[frozenset[int], Fraction] = {}
    if not mc and n <= EXACT_COVER_CAP:
        mode = "exact"
        scale = Fraction(4 * d + 2)
        for tmask, p in _prefix_sets(n, d):
            if p == 0:
                continue
            cl = clique_of(tmask)
            if cl:
                weights[cl] = weights.get(cl, F0) + scale * p
    else:
        mode = "monte-carlo"
        rng = random.Random(seed)
        samples = MC_BASE_SAMPLES
        while True:
            counts: dict[frozenset[int], int] = {}
            for _ in range(samples):
                perm = rng.sample(range(n + d), n + d)
                tmask = 0
                for x in perm:
                    if x >= n:
                        break
                    tmask |= 1 << x
                cl = clique_of(tmask)
                if cl:
                    counts[cl] = counts.get(cl, 0) + 1
            weights = {
                cl: Fraction(4 * d + 2) * MC_INFLATION * Fraction(c, samples)
                for cl, c in counts.items()
            }
            cover = FractionalCover(
                "weak", sorted(weights.items(), key=lambda kv: sorted(kv[0])),
                sum(weights.values(), F0),
            )
            if not verify_cover(inst, cover):
                return cover
            samples *= 2  # under-covered: resample at higher resolution

    cover = FractionalCover(
        "weak", sorted(weights.items(), key=lambda kv: sorted(kv[0])),
        sum(weights.values(), F0),
    )
    bad = verify_cover(inst, cover)
    if bad:
        raise AssertionError(f"low-degree cover failed verification: {bad}")
    if mode == "exact" and cover.total > 4 * d + 2:
        raise AssertionError("cover weight exceeds 4d+2")
    return cover


# -- expanding sequence or cover --------------------------------------------


@dataclass
class ApproxOutcome:
    kind: str  # "sequence" | "cover"
    sequence: ExpandingSequence | None = None
    cover: FractionalCover | None = None
    bound: Fraction | None = None  # certified weight bound 6k * ub(n^{1-1/k})


def _rep_key(inst: Instance, j: int):
    r = inst.receivers[j]
    return (r.wants, r.knows)


def find_expanding_or_cover(
    inst: Instance, k: int, mc: bool = False, seed: int = 0
) -> ApproxOutcome:
    """Either an expanding sequence of size k+1 or a weak fractional cover of
    weight at most 6k * n^{1-1/k} (against the certified upper enclosure of
    the irrational threshold).  Rates are ignored; coverage is per receiver
    at weight 1."""
    if k < 1:
        raise ValueError("need k >= 1")
    n0 = inst.n
    hi = pow_frac_enclosure(n0, k)[1] if n0 else F0
    bound = 6 * k * max(hi, F1)  # n^{1-1/k} >= 1 guard for n = 1

    def go(sub: Instance, emap: list[int], kk: int, nn: int):
        # Returns ("seq", original edge ids) or ("cover", items in original ids).
        if sub.m == 0 or sub.n == 0:
            return "cover", []
        reps = sub.distinct_receivers()
        if kk == 1:
            if is_weak_hyperclique(sub, reps):
                keys = {_rep_key(sub, j) for j in reps}
                item = frozenset(emap[e] for e in range(sub.m) if _rep_key(sub, e) in keys)
                return "cover", [(item, F1)]
            for jp in reps:
                sp = sub.receivers[jp].knows | {sub.receivers[jp].wants}
                for j in reps:
                    if j != jp and sub.receivers[j].wants not in sp:
                        return "seq", [emap[jp], emap[j]]
            raise AssertionError("neither hyperclique nor expanding pair")
        items: list[tuple[frozenset[int], Fraction]] = []
        cur, cur_emap = sub, emap
        while True:
            if cur.m == 0 or cur.n == 0:
                return "cover", items
            dsz = []
            for j in range(cur.m):
                r = cur.receivers[j]
                dsz.append(cur.n - len(r.knows))  # |{f} | (V \ S)| = n - |N|
            j1 = max(range(cur.m), key=lambda j: (dsz[j], -j))
            # dense enough: (|D(j1)| - 1)^k <= n^{k-1}, exactly
            if (dsz[j1] - 1) ** kk <= nn ** (kk - 1):
                d = pow_frac_ceil(nn, kk)
                ld = low_degree_cover(cur, d, mc=mc, seed=seed)
                for cl, w in ld.items:
                    keys = {_rep_key(cur, j) for j in cl}
                    item = frozenset(
                        cur_emap[e] for e in range(cur.m) if _rep_key(cur, e) in keys
                    )
                    items.append((item, w))
                return "cover", items
            r1 = cur.receivers[j1]
            v1 = set(range(cur.n)) - r1.knows - {r1.wants}
            v2 = r1.knows | {r1.wants}
            sub1, _, em1 = induced_subhypergraph(cur, v1)
            res, payload = go(sub1, [cur_emap[e] for e in em1], kk - 1, nn)
            if res == "seq":
                return "seq", [cur_emap[j1]] + payload
            items.extend(payload)
            cur, _, em2 = induced_subhypergraph(cur, v2)
            cur_emap = [cur_emap[e] for e in em2]

    res, payload = go(inst, list(range(inst.m)), k, n0)
    if res == "seq":
        if len(payload) != k + 1 or not is_expanding_sequence(inst, payload):
            raise AssertionError("recursion produced a bad sequence")
        seq = ExpandingSequence(tuple(payload), sequence_weight(inst, payload))
        return ApproxOutcome("sequence", sequence=seq)
    # merge duplicate cliques, drop rate weighting for verification
    merged: dict[frozenset[int], Fraction] = {}
    for item, w in payload:
        merged[item] = merged.get(item, F0) + w
    cover = FractionalCover(
        "weak", sorted(merged.items(), key=lambda kv: sorted(kv[0])),
        sum(merged.values(), F0),
    )
    flat = Instance(inst.n, inst.receivers)  # unweighted view for coverage
    bad = verify_cover(flat, cover)
    if bad:
        raise AssertionError(f"recursion cover failed verification: {bad}")
    if not mc and cover.total > bound:
        raise AssertionError(f"cover weight {cover.total} exceeds bound {bound}")
    return ApproxOutcome("cover", cover=cover, bound=bound)


# -- weighted tau pipeline --------------------------------------------------


@dataclass
class TauClass:
    s: int
    vertices: list[int]
    k: int
    cover_term: Fraction | None  # certified 12 k n^{1-1/k}, None past the cap
    trivial_term: Fraction  # 2 |V_s|
    choice: str  # "cover" | "trivial"
    term: Fraction  # 2^{-s} * min(...)


@dataclass
class TauCertificate:
    value: Fraction
    classes: list[TauClass] = field(default_factory=list)
    k_cap: int = 0
    mode: str = "exact"
    seed: int = 0
    fallback: str | None = None  # set when n < 4 shortcuts the pipeline


def tau(inst: Instance, mc: bool = False, seed: int = 0) -> TauCertificate:
    """Certified upper bound on the minimum weak-cover weight (hence on the
    broadcast rate): dyadic rate classes 2^{-s} < r <= 2^{1-s}, per class the
    cheaper of the recursion cover bound 12 k(s) n^{1-1/k(s)} and the trivial
    2|V_s|, scaled by 2^{-s}."""
    n = inst.n
    mode = "monte-carlo" if (mc or n > EXACT_COVER_CAP) else "exact"
    if n < 4:
        # log log n is degenerate; take the cheaper of "send everything" and
        # the exact cover LP.
        total = sum((inst.rate(v) for v in range(n)), F0)
        psi = fractional_cover(inst, "weak").total if inst.m else F0
        return TauCertificate(min(total, psi), [], 0, mode, seed, "small-n exact value")
    classes: dict[int, list[int]] = {}
    for v in range(n):
        r = inst.rate(v)
        if not 0 < r <= 1:
            raise ValueError(f"rate of message {v} must lie in (0, 1]")
        s = 1
        while r <= Fraction(1, 2**s):
            s += 1
        classes.setdefault(s, []).append(v)
    k_cap = (n - 1).bit_length() + 2  # ceil(log2 n) + 2
    out: list[TauClass] = []
    value = F0
    for s in sorted(classes):
        vs = classes[s]
        sub, _, _ = induced_subhypergraph(Instance(inst.n, inst.receivers), vs)
        kk = None
        for k in range(1, k_cap + 1):
            if find_expanding_or_cover(sub, k, mc=mc, seed=seed).kind == "cover":
                kk = k
                break
        trivial = Fraction(2 * len(vs))
        if kk is None:
            kk, cover_term, choice = k_cap, None, "trivial"
            best = trivial
        else:
            cover_term = 12 * kk * pow_frac_enclosure(n, kk)[1]
            choice = "cover" if cover_term <= trivial else "trivial"
            best = min(cover_term, trivial)
        term = Fraction(1, 2**s) * best
        out.append(TauClass(s, vs, kk, cover_term, trivial, choice, term))
        value += term
    return TauCertificate(value, out, k_cap, mode, seed)


@dataclass
class ApproxReport:
    lower: Fraction
    sequence: ExpandingSequence
    upper: Fraction
    certificate: TauCertificate
    ratio_bound: Fraction | None  # n(2 loglog n + 24)/log n, base-2 logs


def ratio_bound(n: int) -> Fraction:
    """Certified rational upper bound on n(2 loglog n + 24)/log n for n >= 4,
    rounding the log enclosures adversarially (numerator up, denominator
    down)."""
    if n < 4:
        raise ValueError("ratio bound needs n >= 4")
    log_lo, log_hi = log2_enclosure(Fraction(n))
    ll_hi = log2_enclosure(log_hi)[1]
    return n * (2 * ll_hi + 24) / log_lo


def approximate_beta(inst: Instance, mc: bool = False, seed: int = 0) -> ApproxReport:
    seq = alpha_greedy(inst)
    cert = tau(inst, mc=mc, seed=seed)
    rb = ratio_bound(inst.n) if inst.n >= 4 else None
    return ApproxReport(seq.weight, seq, cert.value, cert, rb)
