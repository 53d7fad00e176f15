"""Exit criteria.  Every check is exact; there are no numerical tolerances."""

import random
import time

from flipk.fgab import Z, FgAbGroup, canonicalize, cyclic, direct_sum
from flipk.flipcalc import Block, assemble, decompose, diag_flip, flip_crossed
from flipk.intlin import cokernel, elementary_divisors, flip_matrix
from flipk.kdata import KData
from flipk.verify import (check_lemma_ed, check_oracles, check_report_actions,
                          check_snf_random, drop_lattice_violations, random_kdata,
                          sweep_decomposition_invariance)

SEED = 0


def closed_form(n):
    return canonicalize(0, [n, n]) if n % 2 else canonicalize(0, [2 * n, n // 2])


def test_ac1_lemma_ed_sweep(criterion):
    start = time.perf_counter()
    report = check_lemma_ed(1000)
    elapsed = time.perf_counter() - start
    criterion("AC1 elementary divisors, n = 1..1000", f"{report.cases_run} cases, {elapsed:.3f} s")
    assert report.passed, report.failures[:5]
    assert report.cases_run == 1000
    for n in (1, 2, 3, 4, 999, 1000):
        assert elementary_divisors(flip_matrix(n)) == ((n, n) if n % 2 else (n // 2, 2 * n))
    assert elapsed < 1.0


def test_ac2_cuntz_family(criterion):
    criterion("AC2 O_{n+1} crossed product, n = 2..50")
    for n in range(2, 51):
        total = flip_crossed(KData(cyclic(n))).total
        assert total == KData(closed_form(n), FgAbGroup()), n


def test_ac3_drop_family(criterion):
    criterion("AC3 D_n crossed product, n = 2..50")
    for n in range(2, 51):
        total = flip_crossed(KData(k1=cyclic(n))).total
        assert total == KData(FgAbGroup(), closed_form(n)), n


def test_ac4_point_and_suspension(criterion):
    criterion("AC4 C and SC fixtures with dual actions")
    r = flip_crossed(KData(Z))
    assert r.total == KData(FgAbGroup(2))
    assert r.total_dual_action[0].matrix.tolist() == [[0, 1], [1, 0]]
    assert r.contributions[0].generators[0] == ("[e+]", "[e-]")
    r = flip_crossed(KData(k1=Z))
    assert r.total == KData(k1=Z)
    assert r.total_dual_action[1].matrix.tolist() == [[-1]]


def test_ac5_dual_action_contracts(criterion):
    criterion("AC5 dual actions square to the identity", f"seed {SEED}")
    rng = random.Random(SEED)
    inputs = [KData(cyclic(n)) for n in range(2, 51)] + [KData(k1=cyclic(n)) for n in range(2, 51)]
    inputs += [KData(Z), KData(k1=Z), KData(Z, Z), KData(FgAbGroup(2))]
    inputs += [random_kdata(rng, max_parts=2, max_coeff=60) for _ in range(30)]
    cases = 0
    for k in inputs:
        rep = check_report_actions(k)
        cases += rep.cases_run
        assert rep.passed, rep.failures[:5]
    for n in range(2, 51):
        assert drop_lattice_violations(n) == [], n
        assert diag_flip(Block.drop(n)).dual_action[1].is_involution()
    criterion("AC5 dual actions square to the identity", f"{cases} maps, seed {SEED}")


def test_ac6_decomposition_invariance(criterion):
    report = sweep_decomposition_invariance(200, seed=SEED, max_coeff=1000)
    criterion("AC6 decomposition invariance", f"{report.cases_run // 2} inputs, seed {SEED}")
    assert report.passed, report.failures[:5]
    assert report.cases_run >= 2 * 200
    worked = KData(cyclic(6))
    assert flip_crossed(worked).total == KData(canonicalize(0, [12, 3]))
    assert assemble(decompose(worked, primary=True)).total == KData(canonicalize(0, [12, 3]))
    assert assemble([Block.cuntz(2), Block.cuntz(3)]).total == KData(
        direct_sum(cyclic(4), canonicalize(0, [3, 3])))


def test_ac7_oracle_equivalence(criterion):
    report = check_oracles(max_mn=30, n_random=200, seed=SEED)
    criterion("AC7 tensor/Tor vs presentation oracles", f"{report.cases_run} cases, seed {SEED}")
    assert report.passed, report.failures[:5]
    assert report.cases_run == 2 * (31 * 31 + 200)


def test_ac8_snf_contracts(criterion):
    report = check_snf_random(1000, seed=SEED)
    criterion("AC8 Smith form contracts", f"{report.cases_run} matrices, seed {SEED}")
    assert report.passed, report.failures[:5]
    assert report.cases_run >= 1000


def test_ac9_o2_consistency(criterion):
    criterion("AC9 O_2 consistency")
    assert flip_crossed(KData()).total == KData()
    assert cokernel(flip_matrix(1)).group.is_trivial
