"""Independent oracles and sweeps for the algebra core.

The oracles here deliberately avoid the closed-form gcd formulas used in
``fgab``: the tensor product is computed from an explicit presentation and
Tor from torsion subgroups, both via Smith normal form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .fgab import FgAbGroup, canonicalize, is_isomorphic, tensor, tor
from .flipcalc import (Block, assemble, cuntz_closed_form, decompose, diag_flip,
                       drop_action_matrix, drop_relations, flip_crossed)
from .intlin import IntMatrix, det, elementary_divisors, flip_matrix, kernel_basis, snf, solve
from .kdata import KData


@dataclass
class CheckReport:
    name: str
    cases_run: int = 0
    failures: list = field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self):
        return not self.failures

    def record(self, case, expected, actual):
        self.cases_run += 1
        if expected != actual:
            self.failures.append((case, expected, actual))

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        seed = "" if self.seed is None else f" (seed {self.seed})"
        return f"{status} {self.name}: {self.cases_run} cases, {len(self.failures)} failures{seed}"


def lemma_ed_closed_form(n):
    return (n, n) if n % 2 else (n // 2, 2 * n)


def check_lemma_ed(max_n):
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    report = CheckReport("elementary divisors of flip_matrix(n)")
    for n in range(1, max_n + 1):
        report.record(f"n={n}", lemma_ed_closed_form(n),
                      elementary_divisors(flip_matrix(n)))
    return report


# -- presentation oracles ---------------------------------------------------

def _group_from_divisors(rows, divisors):
    """Cokernel group read off a Smith diagonal for a map into Z^rows."""
    divisors = list(divisors) + [0] * (rows - len(divisors))
    return canonicalize(0, divisors)


def _present(g):
    """(generator count, relation columns) for the canonical presentation of g."""
    n = g.ngens
    rels = [[t if i == j else 0 for i in range(n)] for j, t in enumerate(g.orders) if t]
    return n, rels


def _coker(rows, columns):
    if not columns or rows == 0:
        return _group_from_divisors(rows, [])
    m = IntMatrix.from_columns(columns, rows)
    return _group_from_divisors(rows, elementary_divisors(m))


def oracle_tensor(g, h):
    """g (x) h from the presentation on pairs of generators.

    Relations are r (x) y_j for each relation r of g and generator y_j of h,
    and x_i (x) s for each relation s of h.
    """
    a, rg = _present(g)
    b, rh = _present(h)
    cols = []
    for r in rg:
        for j in range(b):
            cols.append([r[i] * int(jj == j) for i in range(a) for jj in range(b)])
    for s in rh:
        for i in range(a):
            cols.append([int(ii == i) * s[j] for ii in range(a) for j in range(b)])
    return _coker(a * b, cols)


def torsion_subgroup(h, m):
    """The subgroup {x : m x = 0} of h, computed from a presentation.

    With h = Z^b / R, the preimage lattice L = {x : m x in R} is the kernel
    of [m I | -R] projected to x; then h[m] = L / R.  R has independent
    columns, so the projection is injective and the projected kernel basis
    is a basis of L.
    """
    b, rh = _present(h)
    if b == 0:
        return FgAbGroup()
    big = [[m * int(i == j) for i in range(b)] for j in range(b)]
    big += [[-x for x in r] for r in rh]
    ker = kernel_basis(IntMatrix.from_columns(big, b))
    lbasis = IntMatrix.from_columns([ker.column(j)[:b] for j in range(ker.cols)], b)
    cols = []
    for r in rh:
        y = solve(lbasis, r)
        if y is None:
            raise AssertionError("relation outside the preimage lattice")
        cols.append(y)
    return _coker(lbasis.cols, cols)


def oracle_tor(g, h):
    """Tor(g, h) as the sum of h[t] over the cyclic factors Z/t of g."""
    parts = [torsion_subgroup(h, t) for t in g.torsion]
    return canonicalize(sum(p.rank for p in parts),
                        [t for p in parts for t in p.torsion])


def random_group(rng, max_rank=2, max_parts=3, max_coeff=30):
    return canonicalize(rng.randint(0, max_rank),
                        [rng.randint(2, max_coeff) for _ in range(rng.randint(0, max_parts))])


def check_oracles(max_mn=30, n_random=200, seed=0):
    report = CheckReport("tensor/tor against presentation oracles", seed=seed)
    cyc = [canonicalize(0, [m]) for m in range(max_mn + 1)]  # Z/0 = Z, Z/1 = 0
    for m in range(max_mn + 1):
        for n in range(max_mn + 1):
            g, h = cyc[m], cyc[n]
            report.record(f"Z/{m} (x) Z/{n}", oracle_tensor(g, h), tensor(g, h))
            report.record(f"Tor(Z/{m}, Z/{n})", oracle_tor(g, h), tor(g, h))
    rng = random.Random(seed)
    for _ in range(n_random):
        g, h = random_group(rng), random_group(rng)
        report.record(f"{g} (x) {h}", oracle_tensor(g, h), tensor(g, h))
        report.record(f"Tor({g}, {h})", oracle_tor(g, h), tor(g, h))
    return report


# -- snf contracts ----------------------------------------------------------

def snf_violations(m):
    """List of broken Smith-form contracts for m (empty when all hold)."""
    res = snf(m)
    bad = []
    if res.u @ m @ res.v != res.s:
        bad.append("u*m*v != s")
    if abs(det(res.u)) != 1:
        bad.append("det u is not a unit")
    if abs(det(res.v)) != 1:
        bad.append("det v is not a unit")
    if not res.s.is_diagonal():
        bad.append("s not diagonal")
    d = res.divisors
    if any(x < 0 for x in d):
        bad.append("negative divisor")
    for x, y in zip(d, d[1:]):
        if (x == 0 and y != 0) or (x != 0 and y % x):
            bad.append(f"chain broken at {x}, {y}")
    if m.rows == m.cols:
        dm = det(m)
        if dm:
            prod = 1
            for x in d:
                prod *= x
            if prod != abs(dm):
                bad.append("product of divisors != |det m|")
    return bad


def random_matrix(rng, max_dim=6, bound=50):
    r, c = rng.randint(0, max_dim), rng.randint(0, max_dim)
    return IntMatrix(r, c, tuple(rng.randint(-bound, bound) for _ in range(r * c)))


def check_snf_random(count=1000, seed=0):
    report = CheckReport("Smith form contracts on random matrices", seed=seed)
    rng = random.Random(seed)
    for _ in range(count):
        m = random_matrix(rng)
        report.record(str(m), [], snf_violations(m))
    return report


# -- flip crossed product ---------------------------------------------------

def check_decomposition_invariance(k):
    report = CheckReport(f"decomposition invariance for {k}")
    a = flip_crossed(k).total
    b = assemble(decompose(k, primary=True), k).total
    report.record(f"{k} K0", True, is_isomorphic(a.k0, b.k0))
    report.record(f"{k} K1", True, is_isomorphic(a.k1, b.k1))
    return report


def random_kdata(rng, max_rank=2, max_parts=2, max_coeff=1000):
    return KData(random_group(rng, max_rank, max_parts, max_coeff),
                 random_group(rng, max_rank, max_parts, max_coeff))


def sweep_decomposition_invariance(count=200, seed=0, max_coeff=1000):
    report = CheckReport("decomposition invariance sweep", seed=seed)
    rng = random.Random(seed)
    fixed = [KData(canonicalize(0, [6])), KData(k1=canonicalize(0, [6]))]
    for k in fixed + [random_kdata(rng, max_coeff=max_coeff) for _ in range(count)]:
        sub = check_decomposition_invariance(k)
        report.cases_run += sub.cases_run
        report.failures += sub.failures
    return report


def check_block_families(max_n=50):
    """Diagonal blocks against the closed forms, and order-two dual actions."""
    report = CheckReport(f"Cuntz/drop blocks n=2..{max_n}")
    for n in range(2, max_n + 1):
        closed = cuntz_closed_form(n)
        c = diag_flip(Block.cuntz(n))
        report.record(f"Cuntz({n}) K", KData(closed), c.kdata)
        report.record(f"Cuntz({n}) action^2", True, c.dual_action[0].is_involution())
        d = diag_flip(Block.drop(n))
        report.record(f"Drop({n}) K", KData(k1=closed), d.kdata)
        report.record(f"Drop({n}) action^2", True, d.dual_action[1].is_involution())
        report.record(f"Drop({n}) lattice", [], drop_lattice_violations(n))
    return report


def drop_lattice_violations(n):
    """Check that the (g, w) action preserves the relation lattice of D_n."""
    rel = drop_relations(n)
    act = drop_action_matrix()
    bad = []
    if act @ act != IntMatrix.identity(2):
        bad.append("action does not square to the identity on (g, w)")
    for j in range(rel.cols):
        if solve(rel, act.apply(rel.column(j))) is None:
            bad.append(f"image of relation {j} leaves the lattice")
    dp, dm = rel.column(0), rel.column(1)
    want = [(n + 1) * x - n * y for x, y in zip(dp, dm)]
    if act.apply(dp) != want:
        bad.append("image of delta([e+]) != (n+1) delta([e+]) - n delta([e-])")
    return bad


def check_report_actions(k):
    """Every dual action in a report, summands and total, has order two."""
    report = CheckReport(f"dual actions for {k}")
    r = flip_crossed(k)
    for c in r.contributions:
        for d in (0, 1):
            report.record(f"{c.label} K{d}", True, c.dual_action[d].is_involution())
    for d in (0, 1):
        report.record(f"total K{d}", True, r.total_dual_action[d].is_involution())
    return report


def selfcheck(max_n=1000, seed=0):
    """All sweeps in a fixed order."""
    rng = random.Random(seed)
    samples = [KData(), KData(canonicalize(1)), KData(k1=canonicalize(1)),
               KData(canonicalize(1), canonicalize(1))]
    samples += [random_kdata(rng, max_parts=2, max_coeff=60) for _ in range(20)]
    reports = [
        check_lemma_ed(max_n),
        check_block_families(50),
        check_snf_random(1000, seed),
        check_oracles(30, 200, seed),
        sweep_decomposition_invariance(200, seed),
    ]
    actions = CheckReport("dual actions have order two", seed=seed)
    for k in samples:
        sub = check_report_actions(k)
        actions.cases_run += sub.cases_run
        actions.failures += sub.failures
    reports.append(actions)
    return reports
