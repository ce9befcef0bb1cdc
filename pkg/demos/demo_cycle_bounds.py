"""Walk through the bound machinery on odd cycles and their complements.

For the 5-cycle the level-2 LP lower bound, the fractional strong-cover upper
bound, and a machine-verified linear code all land on 5/2, pinning the
broadcast rate exactly.  The same happens for C7, C9 and the complements.
"""

from fractions import Fraction

from icbounds import (
    fractional_cover,
    from_graph,
    solve_bk,
    strong_cover_code,
    verify_code,
)
from icbounds.families import complement, cycle, shift_perm


def pin_rate(g, sym, label):
    inst = from_graph(g)
    b2 = solve_bk(inst, 2, sym=sym).value
    cover = fractional_cover(inst, "strong")
    scheme = strong_cover_code(inst, cover)
    ver = verify_code(inst, scheme, mode="exhaustive")
    status = "verified" if ver.passed else "FAILED"
    print(f"{label:14s} b2 = {b2}   chibar_f = {cover.total}   "
          f"code rate {scheme.rate} ({ver.mode} {status})")
    if b2 == cover.total:
        print(f"{'':14s} => beta = {b2} exactly")


if __name__ == "__main__":
    for n in (5, 7, 9):
        pin_rate(cycle(n), [shift_perm(n)], f"C{n}")
    for n in (5, 7):
        pin_rate(complement(cycle(n)), [shift_perm(n)], f"complement C{n}")

    # a quick look at how far the plain independence bound is from the truth
    from icbounds import alpha_exact

    for n in (5, 7, 9):
        inst = from_graph(cycle(n))
        a, seq = alpha_exact(inst)
        print(f"C{n}: alpha = {a} via expanding sequence {list(seq.receivers)} "
              f"(vs rate {Fraction(n, 2)})")
