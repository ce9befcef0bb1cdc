import random
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from icbounds import lp as lpmod
from icbounds.lp import LpProblem, check_feasible, objective_value, solve_min

F = Fraction


def small_lp():
    # min x0 + x1  s.t. x0 + 2 x1 >= 4, 3 x0 + x1 >= 6
    p = LpProblem(2, {0: F(1), 1: F(1)})
    p.add({0: F(1), 1: F(2)}, ">=", 4)
    p.add({0: F(3), 1: F(1)}, ">=", 6)
    return p


def test_small_optimum():
    opt = solve_min(small_lp())
    assert opt.status == "optimal"
    assert opt.value == F(14, 5)
    assert opt.x == [F(8, 5), F(6, 5)]


def test_dual_certificate():
    p = small_lp()
    opt = solve_min(p)
    assert opt.dual is not None
    # weak duality at equality: y'b == c'x with valid signs
    assert sum(y * rhs for y, (_, _, rhs) in zip(opt.dual, p.constraints)) == opt.value
    assert all(y >= 0 for y in opt.dual)


def test_infeasible_and_unbounded():
    p = LpProblem(1, {0: F(1)})
    p.add({0: F(1)}, "<=", -1)
    assert solve_min(p).status == "infeasible"
    p = LpProblem(1, {0: F(-1)})
    p.add({0: F(1)}, ">=", 0)
    assert solve_min(p).status == "unbounded"


def test_equality_rows():
    p = LpProblem(2, {0: F(1), 1: F(3)})
    p.add({0: F(1), 1: F(1)}, "==", 5)
    p.add({0: F(1)}, "<=", 2)
    opt = solve_min(p)
    assert opt.value == F(2 + 3 * 3)


def test_degenerate_cycling_guard():
    # classic Beale-style degenerate LP; must terminate via the Bland switch
    p = LpProblem(4, {0: F(-3, 4), 1: F(150), 2: F(-1, 50), 3: F(6)})
    p.add({0: F(1, 4), 1: F(-60), 2: F(-1, 25), 3: F(9)}, "<=", 0)
    p.add({0: F(1, 2), 1: F(-90), 2: F(-1, 50), 3: F(3)}, "<=", 0)
    p.add({2: F(1)}, "<=", 1)
    opt = solve_min(p)
    assert opt.status == "optimal"
    assert opt.value == F(-1, 20)
    opt_b = solve_min(p, bland=True)
    assert opt_b.value == opt.value


def test_check_feasible_reports_rows():
    p = small_lp()
    assert check_feasible(p, [F(0), F(0)]) == [0, 1]
    assert check_feasible(p, [F(8, 5), F(6, 5)]) == []
    assert objective_value(p, [F(2), F(1)]) == 3


def _random_lp(rng, n, m):
    p = LpProblem(n, {j: F(rng.randint(-1, 5)) for j in range(n)})
    for _ in range(m):
        row = {j: F(rng.randint(-4, 4)) for j in rng.sample(range(n), rng.randint(1, n))}
        row = {j: c for j, c in row.items() if c}
        if not row:
            continue
        p.add(row, rng.choice([">=", "<=", "=="]), rng.randint(-5, 8))
    return p


def _scipy_status(p):
    c = np.zeros(p.num_vars)
    for j, v in p.objective.items():
        c[j] = float(v)
    aub, bub, aeq, beq = [], [], [], []
    for crow, rel, rhs in p.constraints:
        row = [0.0] * p.num_vars
        for j, v in crow.items():
            row[j] = float(v)
        if rel == "==":
            aeq.append(row), beq.append(float(rhs))
        elif rel == "<=":
            aub.append(row), bub.append(float(rhs))
        else:
            aub.append([-x for x in row]), bub.append(-float(rhs))
    res = linprog(
        c, A_ub=aub or None, b_ub=bub or None, A_eq=aeq or None, b_eq=beq or None,
        bounds=(0, None), method="highs",
    )
    return res


def test_random_lps_match_scipy():
    rng = random.Random(7)
    agree = 0
    for _ in range(120):
        p = _random_lp(rng, rng.randint(2, 6), rng.randint(1, 8))
        opt = solve_min(p)
        res = _scipy_status(p)
        if opt.status == "optimal":
            assert res.status == 0
            assert abs(float(opt.value) - res.fun) < 1e-6
            assert check_feasible(p, opt.x) == []
            agree += 1
        elif opt.status == "infeasible":
            assert res.status == 2
        else:
            assert res.status == 3
    assert agree > 30  # the sampler should hit plenty of bounded problems


def test_float_guided_path_agrees_with_exact():
    # force the accelerated path on problems below its usual size gate
    rng = random.Random(21)
    old = lpmod.FLOAT_GUIDE_SIZE
    lpmod.FLOAT_GUIDE_SIZE = 1
    try:
        for _ in range(60):
            p = _random_lp(rng, rng.randint(2, 6), rng.randint(2, 9))
            fast = solve_min(p)
            lpmod.FLOAT_GUIDE_SIZE = 10**9
            slow = solve_min(p)
            lpmod.FLOAT_GUIDE_SIZE = 1
            assert fast.status == slow.status
            if fast.status == "optimal":
                assert fast.value == slow.value
    finally:
        lpmod.FLOAT_GUIDE_SIZE = old


def test_dump_roundtrips_visually():
    text = small_lp().dump()
    assert ">=" in text and "4" in text
