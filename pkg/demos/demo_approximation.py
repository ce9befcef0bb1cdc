"""The polynomial-time approximation pipeline on random instances.

A greedy expanding sequence gives the lower bound; the dyadic-rate-class
certificate tau gives the upper bound.  The printed ratio guarantee
n(2 loglog n + 24)/log n is a certified rational, rounded adversarially.
"""

import random

from icbounds import approximate_beta
from icbounds.families import random_instance

if __name__ == "__main__":
    rng = random.Random(2024)
    print(f"{'n':>4} {'m':>4} {'lower':>8} {'upper':>10} {'ratio cap':>12}")
    for n in (6, 10, 14, 18):
        inst = random_instance(n, 2 * n, rng)
        rep = approximate_beta(inst)
        print(f"{n:>4} {inst.m:>4} {str(rep.lower):>8} {str(rep.upper):>10} "
              f"{float(rep.ratio_bound):>12.2f}")

    # the certificate is more than a number: each dyadic rate class records
    # which of the two bounds (recursive cover vs send-everything) it used
    inst = random_instance(16, 30, rng)
    rep = approximate_beta(inst)
    print(f"\nn=16 certificate (tau = {rep.upper}):")
    for cls in rep.certificate.classes:
        print(f"  class s={cls.s}: {len(cls.vertices)} messages, k={cls.k}, "
              f"choice={cls.choice}, term={cls.term}")
