"""Exact rational LP solver (minimization).

Revised simplex over Fraction arithmetic: no floating point anywhere, every
reported optimum is re-verified by substitution before it is returned.  All
variables are implicitly >= 0; constraints are (sparse row, relation, rhs)
with relation one of ">=", "<=", "==".

Two solve paths share one simplex core:
  * primal two-phase -- the default; basis size = number of rows.
  * dual path -- for problems with c >= 0, all rows ">=", and far fewer
    variables than rows (the entropy LPs): solve max b'y s.t. A'y <= c,
    y >= 0, whose standard form starts from the all-slack basis and whose
    simplex multipliers recover the primal optimum.  Basis size drops to
    the number of primal variables.

Pivot rule: Dantzig with lowest-index tie-breaks, switching permanently to
Bland's rule after a run of degenerate pivots, so termination is guaranteed;
`bland=True` forces Bland's rule throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)

STALL_LIMIT = 50  # degenerate pivots before switching to Bland's rule


@dataclass
class LpProblem:
    num_vars: int
    objective: dict[int, Fraction]
    # (sparse row {var: coeff}, relation, rhs)
    constraints: list[tuple[dict[int, Fraction], str, Fraction]] = field(default_factory=list)

    def add(self, row: dict[int, Fraction], rel: str, rhs) -> None:
        if rel not in (">=", "<=", "=="):
            raise ValueError(f"bad relation {rel!r}")
        self.constraints.append(({k: Fraction(v) for k, v in row.items() if v}, rel, Fraction(rhs)))

    def dump(self) -> str:
        """Plain-text "min / st" rendering for debugging."""

        def term(c, j):
            return f"{c}*x{j}"

        lines = ["min " + " + ".join(term(c, j) for j, c in sorted(self.objective.items()))]
        lines.append("st")
        for row, rel, rhs in self.constraints:
            lines.append("  " + " + ".join(term(c, j) for j, c in sorted(row.items())) + f" {rel} {rhs}")
        lines.append("  x >= 0")
        return "\n".join(lines)


@dataclass
class LpOptimum:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: list[Fraction] | None = None
    dual: list[Fraction] | None = None


def check_feasible(p: LpProblem, x) -> list[int]:
    """Indices of violated constraints; index -1 flags a negative variable."""
    bad = []
    if any(v < 0 for v in x):
        bad.append(-1)
    for i, (row, rel, rhs) in enumerate(p.constraints):
        lhs = sum((c * x[j] for j, c in row.items()), F0)
        ok = lhs >= rhs if rel == ">=" else lhs <= rhs if rel == "<=" else lhs == rhs
        if not ok:
            bad.append(i)
    return bad


def objective_value(p: LpProblem, x) -> Fraction:
    return sum((c * x[j] for j, c in p.objective.items()), F0)


# -- simplex core -----------------------------------------------------------


class _Unbounded(Exception):
    pass


class _Core:
    """min cost'x  s.t.  A x = b, x >= 0, given a starting feasible basis.

    Columns are sparse [(row, coeff), ...]; the basis inverse is dense.
    """

    def __init__(self, cols, b, basis):
        self.cols = cols
        self.m = len(b)
        self.basis = list(basis)
        self.in_basis = [False] * len(cols)
        for j in self.basis:
            self.in_basis[j] = True
        self.binv = [[F1 if i == k else F0 for k in range(self.m)] for i in range(self.m)]
        self.xb = list(b)
        self._factor_start(b)

    def _factor_start(self, b):
        # The starting basis need not be the identity: eliminate to B^-1.
        mat = [[F0] * self.m for _ in range(self.m)]
        for k, j in enumerate(self.basis):
            for i, v in self.cols[j]:
                mat[i][k] = v
        ident = all(mat[i][k] == (F1 if i == k else F0) for k in range(self.m) for i in range(self.m))
        if ident:
            return
        # Gauss-Jordan on [mat | I]; basis columns are guaranteed independent
        # by the callers (slack/artificial identity blocks).
        binv = self.binv
        for k in range(self.m):
            piv = next(i for i in range(k, self.m) if mat[i][k] != 0)
            mat[k], mat[piv] = mat[piv], mat[k]
            binv[k], binv[piv] = binv[piv], binv[k]
            d = mat[k][k]
            if d != 1:
                mat[k] = [v / d for v in mat[k]]
                binv[k] = [v / d for v in binv[k]]
            for i in range(self.m):
                if i != k and mat[i][k] != 0:
                    f = mat[i][k]
                    mat[i] = [a - f * c for a, c in zip(mat[i], mat[k])]
                    binv[i] = [a - f * c for a, c in zip(binv[i], binv[k])]
        self.xb = [sum((binv[i][r] * b[r] for r in range(self.m)), F0) for i in range(self.m)]

    def multipliers(self, cost):
        m = self.m
        binv = self.binv
        cb = [cost[j] for j in self.basis]
        return [sum((cb[i] * binv[i][k] for i in range(m) if cb[i]), F0) for k in range(m)]

    def _col_times(self, vec, j):
        return sum((vec[i] * v for i, v in self.cols[j]), F0)

    def solve(self, cost, banned=frozenset(), bland=False):
        """Run to optimality.  Raises _Unbounded.  Returns objective value."""
        stall = 0
        last_z = None
        while True:
            pi = self.multipliers(cost)
            enter = -1
            best = F0
            for j in range(len(self.cols)):
                if self.in_basis[j] or j in banned:
                    continue
                d = cost[j] - self._col_times(pi, j)
                if d < 0:
                    if bland:
                        enter = j
                        break
                    if d < best or (d == best and enter == -1):
                        best = d
                        enter = j
            if enter == -1:
                return sum((cost[self.basis[i]] * self.xb[i] for i in range(self.m)), F0)
            u = [self._col_times(self.binv[i], enter) for i in range(self.m)]
            leave = -1
            theta = None
            for i in range(self.m):
                if u[i] > 0:
                    r = self.xb[i] / u[i]
                    if theta is None or r < theta or (r == theta and self.basis[i] < self.basis[leave]):
                        theta = r
                        leave = i
            if leave == -1:
                raise _Unbounded
            self._pivot(enter, leave, u, theta)
            z = sum((cost[self.basis[i]] * self.xb[i] for i in range(self.m)), F0)
            if not bland:
                stall = stall + 1 if z == last_z else 0
                if stall >= STALL_LIMIT:
                    bland = True  # permanent: guarantees termination
            last_z = z

    def _pivot(self, enter, leave, u, theta):
        binv = self.binv
        d = u[leave]
        if d != 1:
            binv[leave] = [v / d for v in binv[leave]]
        self.xb[leave] = theta
        prow = binv[leave]
        for i in range(self.m):
            if i != leave and u[i] != 0:
                f = u[i]
                binv[i] = [a - f * c for a, c in zip(binv[i], prow)]
                self.xb[i] -= f * theta
        self.in_basis[self.basis[leave]] = False
        self.in_basis[enter] = True
        self.basis[leave] = enter

    def primal_values(self, nvars):
        x = [F0] * nvars
        for i, j in enumerate(self.basis):
            if j < nvars:
                x[j] = self.xb[i]
        return x


# -- the two solve paths ----------------------------------------------------


def _primal_two_phase(p: LpProblem, bland: bool) -> LpOptimum:
    n = p.num_vars
    m = len(p.constraints)
    rows = []  # (sparse dict, rhs) in equality form with rhs >= 0, before slacks
    kinds = []
    for row, rel, rhs in p.constraints:
        if rhs < 0:
            row = {j: -c for j, c in row.items()}
            rhs = -rhs
            rel = {">=": "<=", "<=": ">=", "==": "=="}[rel]
        rows.append((row, rhs))
        kinds.append(rel)

    cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for i, (row, _) in enumerate(rows):
        for j, c in row.items():
            cols[j].append((i, c))
    slack_of_row = {}
    for i, rel in enumerate(kinds):
        if rel == "<=":
            slack_of_row[i] = len(cols)
            cols.append([(i, F1)])
        elif rel == ">=":
            cols.append([(i, -F1)])  # surplus
    nslacked = len(cols)
    # Artificials for rows lacking a +1 slack.
    art_of_row = {}
    for i, rel in enumerate(kinds):
        if rel != "<=":
            art_of_row[i] = len(cols)
            cols.append([(i, F1)])
    arts = set(art_of_row.values())
    b = [rhs for _, rhs in rows]
    basis = [slack_of_row[i] if i in slack_of_row else art_of_row[i] for i in range(m)]

    core = _Core(cols, b, basis)
    if arts:
        cost1 = [F0] * len(cols)
        for j in arts:
            cost1[j] = F1
        z1 = core.solve(cost1, bland=bland)
        if z1 != 0:
            return LpOptimum("infeasible")
        _drive_out_artificials(core, arts, nslacked)
    cost2 = [F0] * len(cols)
    for j, c in p.objective.items():
        cost2[j] = Fraction(c)
    try:
        z = core.solve(cost2, banned=frozenset(arts), bland=bland)
    except _Unbounded:
        return LpOptimum("unbounded")
    x = core.primal_values(n)
    return LpOptimum("optimal", z, x, core.multipliers(cost2))


def _drive_out_artificials(core: _Core, arts, nslacked) -> None:
    # A basic artificial sits at value 0; swap it for any original column with
    # a nonzero pivot entry.  If none exists the row is redundant and the
    # artificial can stay: no original column ever moves that row again.
    for r in range(core.m):
        if core.basis[r] not in arts:
            continue
        for j in range(nslacked):
            if core.in_basis[j]:
                continue
            urj = core._col_times(core.binv[r], j)
            if urj != 0:
                u = [core._col_times(core.binv[i], j) for i in range(core.m)]
                core._pivot(j, r, u, core.xb[r] / urj)
                break


def _dual_path(p: LpProblem, bland: bool) -> LpOptimum | None:
    """Solve via the dual when c >= 0 and every row is ">=".  Returns None if
    the shape does not fit (caller falls back to the primal path)."""
    n = p.num_vars
    if any(c < 0 for c in p.objective.values()):
        return None
    if any(rel != ">=" for _, rel, _ in p.constraints):
        return None
    m = len(p.constraints)
    # Dual in standard form: min -b'y  s.t.  A'y + s = c,  y, s >= 0.
    cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(m)]
    for i, (row, _, _) in enumerate(p.constraints):
        cols[i] = [(j, c) for j, c in row.items()]
    for j in range(n):
        cols.append([(j, F1)])  # slack for dual row j
    rhs = [Fraction(p.objective.get(j, 0)) for j in range(n)]
    cost = [-r for _, _, r in p.constraints] + [F0] * n
    basis = list(range(m, m + n))  # all-slack start, feasible since c >= 0
    core = _Core(cols, rhs, basis)
    try:
        zd = core.solve(cost, bland=bland)
    except _Unbounded:
        return LpOptimum("infeasible")  # dual unbounded => primal infeasible
    # Simplex multipliers of the dual solve carry the primal optimum: the
    # slack column j prices to -pi_j >= 0, so x_j = -pi_j.
    pi = core.multipliers(cost)
    x = [-v for v in pi]
    if check_feasible(p, x):
        return None  # paranoia: fall back to the primal path
    z = objective_value(p, x)
    if z != -zd:
        return None
    y = core.primal_values(m)
    return LpOptimum("optimal", z, x, y)


def _solve_square(rows: list[dict[int, Fraction]], rhs: list[Fraction], cols: list[int]):
    """Exact solution of the square system rows x = rhs over the given column
    set, or None when singular."""
    k = len(cols)
    if len(rows) != k:
        return None
    pos = {c: i for i, c in enumerate(cols)}
    a = [[row.get(c, F0) for c in cols] + [r] for row, r in zip(rows, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = F1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return {c: a[pos[c]][k] for c in cols}


def _float_guided(p: LpProblem) -> LpOptimum | None:
    """Reconstruct an exact optimum from a floating-point solve: HiGHS
    proposes the active set, the basic solution and its dual are re-derived
    by rational linear solves, and feasibility / dual feasibility / equal
    objectives are all checked exactly.  Any failure returns None and the
    exact simplex runs instead, so this is purely an accelerator."""
    try:
        import numpy as np
        from scipy.optimize import linprog
    except ImportError:
        return None

    n, m = p.num_vars, len(p.constraints)
    c = np.zeros(n)
    for j, v in p.objective.items():
        c[j] = float(v)
    a_ub, b_ub, ub_idx, a_eq, b_eq, eq_idx = [], [], [], [], [], []
    for i, (row, rel, rhs) in enumerate(p.constraints):
        dense = np.zeros(n)
        for j, v in row.items():
            dense[j] = float(v)
        if rel == "==":
            a_eq.append(dense), b_eq.append(float(rhs)), eq_idx.append(i)
        elif rel == ">=":
            a_ub.append(-dense), b_ub.append(-float(rhs)), ub_idx.append(i)
        else:
            a_ub.append(dense), b_ub.append(float(rhs)), ub_idx.append(i)
    res = linprog(
        c, a_ub or None, b_ub or None, a_eq or None, b_eq or None,
        bounds=(0, None), method="highs",
    )
    if res.status != 0:
        return None
    tol = 1e-7
    # duals back in original row numbering and >=-convention sign
    dual = {i: 0.0 for i in range(m)}
    if ub_idx:
        for i, mg in zip(ub_idx, res.ineqlin.marginals):
            dual[i] = -mg if p.constraints[i][1] == ">=" else mg
    if eq_idx:
        for i, mg in zip(eq_idx, res.eqlin.marginals):
            dual[i] = mg
    dual_support = sorted(set(eq_idx) | {i for i in range(m) if abs(dual[i]) > tol})

    def dense_row(i):
        out = np.zeros(n)
        for j, v in p.constraints[i][0].items():
            out[j] = float(v)
        return out

    def greedy_independent(vecs, need):
        # rank-greedy selection by Gram-Schmidt; float only, soundness rests
        # on the exact checks afterwards
        basis: list[np.ndarray] = []
        chosen = []
        for idx, v in vecs:
            if len(chosen) == need:
                break
            w = v.astype(float)
            for b in basis:
                w = w - np.dot(w, b) * b
            nrm = np.linalg.norm(w)
            if nrm > 1e-6:
                basis.append(w / nrm)
                chosen.append(idx)
        return chosen if len(chosen) == need else None

    # primal vertex: n independent tight conditions (dual-support rows first,
    # then x_j = 0 bounds, then the remaining tight rows)
    slack = {
        i: abs(sum(float(v) * res.x[j] for j, v in p.constraints[i][0].items())
               - float(p.constraints[i][2]))
        for i in range(m)
    }
    cand: list[tuple[tuple[str, int], np.ndarray]] = []
    for i in dual_support:
        cand.append((("row", i), dense_row(i)))
    for j in range(n):
        if res.x[j] < tol:
            e = np.zeros(n)
            e[j] = 1.0
            cand.append((("bound", j), e))
    for i in range(m):
        if i not in dual_support and slack[i] < 1e-6:
            cand.append((("row", i), dense_row(i)))
    chosen = greedy_independent(cand, n)
    if chosen is None:
        return None
    sys_rows, sys_rhs = [], []
    for kind, i in chosen:
        if kind == "row":
            sys_rows.append(p.constraints[i][0])
            sys_rhs.append(p.constraints[i][2])
        else:
            sys_rows.append({i: F1})
            sys_rhs.append(F0)
    sol = _solve_square(sys_rows, sys_rhs, list(range(n)))
    if sol is None:
        return None
    x = [sol[j] for j in range(n)]
    if any(v < 0 for v in x) or check_feasible(p, x):
        return None

    # dual: y supported on dual_support, determined by zero reduced cost on
    # |support| independent columns among the positive variables
    k = len(dual_support)
    col_cand = []
    for j in range(n):
        if res.x[j] > tol:
            v = np.array([float(p.constraints[i][0].get(j, 0)) for i in dual_support])
            col_cand.append((j, v))
    cols = greedy_independent(col_cand, k)
    if cols is None:
        return None
    rows_t = [
        {t: p.constraints[i][0].get(j, F0) for t, i in enumerate(dual_support)}
        for j in cols
    ]
    y_act = _solve_square(rows_t, [Fraction(p.objective.get(j, 0)) for j in cols],
                          list(range(k)))
    if y_act is None:
        return None
    y = [F0] * m
    for t, i in enumerate(dual_support):
        y[i] = y_act[t]
        if p.constraints[i][1] == ">=" and y[i] < 0:
            return None
        if p.constraints[i][1] == "<=" and y[i] > 0:
            return None
    reduced = {j: Fraction(v) for j, v in p.objective.items()}
    for i in dual_support:
        yi = y[i]
        if yi:
            for j, v in p.constraints[i][0].items():
                reduced[j] = reduced.get(j, F0) - yi * v
    if any(v < 0 for v in reduced.values()):
        return None
    z = objective_value(p, x)
    if z != sum((y[i] * p.constraints[i][2] for i in dual_support), F0):
        return None
    return LpOptimum("optimal", z, x, y)


DUAL_PATH_RATIO = 2  # use the dual path when rows >= 2x variables
FLOAT_GUIDE_SIZE = 10_000  # vars * rows above which the float guess is tried


def solve_min(p: LpProblem, bland: bool = False) -> LpOptimum:
    """Exact optimum of the minimization problem; assignment re-verified by
    substitution before return."""
    for row, _, _ in p.constraints:
        if any(not 0 <= j < p.num_vars for j in row):
            raise ValueError("constraint references an unknown variable")
    opt = None
    if p.num_vars * len(p.constraints) >= FLOAT_GUIDE_SIZE:
        opt = _float_guided(p)
    if opt is None and len(p.constraints) >= DUAL_PATH_RATIO * p.num_vars:
        opt = _dual_path(p, bland)
    if opt is None:
        opt = _primal_two_phase(p, bland)
    if opt.status == "optimal":
        bad = check_feasible(p, opt.x)
        if bad:
            raise AssertionError(f"solver returned an infeasible optimum (rows {bad})")
        if objective_value(p, opt.x) != opt.value:
            raise AssertionError("solver value does not match its assignment")
    return opt
