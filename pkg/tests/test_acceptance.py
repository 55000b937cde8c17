"""One test per acceptance criterion, each printing a single PASS/FAIL line."""

import time

from conftest import ACCEPTANCE_LINES
from posdet import harness
from posdet.harness import check_suite, paper_examples, random_instance, InstanceSpec
from posdet.ideals import MonomialIdeal
from posdet.lattice import indicator, one, zero
from posdet.linalg import kernel_basis
from posdet.boxmod import (
    from_ideal_pair, direct_sum, pullback_functor, annihilator_and_dim, ass_primes,
)
from posdet.homological import classify, minimal_resolution, radicalize_resolution


def verdict(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def run_suite(name, count):
    r = check_suite(name, count=count)
    return r, f"{name}: {r.applicable} applicable / {r.instances}, {len(r.failures)} failures, {r.elapsed:.1f}s"


def test_criterion_01_first_example():
    start = time.perf_counter()
    I = MonomialIdeal(4, [(4, 0, 0, 4), (2, 3, 0, 0), (0, 3, 2, 0), (0, 3, 0, 1)])
    J = MonomialIdeal(4, [(3, 0, 0, 3), (3, 1, 0, 0), (0, 2, 0, 0)])
    d = annihilator_and_dim(from_ideal_pair(I, J, (4, 3, 2, 4)))[1]
    dr = annihilator_and_dim(from_ideal_pair(I.radical(), J.radical(), (1, 1, 1, 1)))[1]
    elapsed = time.perf_counter() - start
    ok = d == 2 and dr == 1 and elapsed < 5
    assert verdict(1, ok, f"dim J/I = {d}, dim sqrt(J)/sqrt(I) = {dr}, {elapsed:.2f}s")


def test_criterion_02_second_example():
    start = time.perf_counter()
    n, t = 4, (2, 1, 1, 1)
    e = lambda i: indicator(n, [i])
    S = MonomialIdeal.unit(n)
    M = direct_sum(direct_sum(
        from_ideal_pair(MonomialIdeal(n, [(2, 0, 0, 0)]), MonomialIdeal(n, [e(0)]), t),
        from_ideal_pair(MonomialIdeal(n, [e(0), e(1)]), S, t)),
        from_ideal_pair(MonomialIdeal(n, [e(0), e(2), e(3)]), S, t))
    R = pullback_functor(M, "r")
    assR = ass_primes(R)
    heights = sorted(n - len(F) for F in assR)
    annM, dM = annihilator_and_dim(M)
    annR, dR = annihilator_and_dim(R)
    minM = annM.dim_and_minimal_primes()[1]
    minR = annR.dim_and_minimal_primes()[1]
    report = paper_examples()
    elapsed = time.perf_counter() - start
    ok = (assR == [frozenset({2, 3}), frozenset({1})] and heights == [2, 3]
          and len({len(F) for F in minR}) > 1
          and all(len(F) == n - 1 for F in minM)
          and dM > dR and report.ok and elapsed < 5)
    assert verdict(2, ok, f"Ass(r*M) heights {heights}, dim M = {dM} > dim r*M = {dR}, "
                          f"{elapsed:.2f}s")


def test_criterion_03_betti_per_degree_as_stated():
    # the inequality read literally: beta_{i,a}(M) >= beta_{i,sqrt a}(r*M) for every i and a
    r = check_suite("bettiradical", count=230)
    ok = r.applicable >= 200 and not r.findings and r.elapsed < 300
    first = f"; first counterexample seed {r.findings[0][0]}: {r.findings[0][1]}" if r.findings else ""
    verdict(3, ok, f"per-degree reading: {len(r.findings)} counterexamples in "
                   f"{r.applicable} instances{first}")
    assert ok, ("the per-degree inequality is false as stated; the aggregated form and the "
                "depth inequality are checked in the next test")


def test_criterion_03_betti_aggregated_and_depth():
    r = check_suite("bettiradical", count=230)
    ok = r.applicable >= 200 and r.ok and r.elapsed < 300
    assert verdict(3, ok, f"aggregated inequality and depth M <= depth r*M: "
                          f"{len(r.failures)} failures in {r.applicable} instances, {r.elapsed:.1f}s")


def test_criterion_04_classic_radical():
    r, msg = run_suite("classicradical", 500)
    assert verdict(4, r.ok and r.applicable >= 500 and r.elapsed < 60, msg)


def test_criterion_05_taylor_oracle():
    r, msg = run_suite("oracle", 120)
    gens = max(len(random_instance(harness._spec_for(harness.CHECKS["oracle"], s)).I.gens)
               for s in range(120))
    ok = r.ok and r.applicable >= 100 and r.elapsed < 300 and gens <= 8
    assert verdict(5, ok, f"{msg}, at most {gens} generators")


def test_criterion_06_radicalized_resolutions():
    r, msg = run_suite("resol", 110)
    assert verdict(6, r.ok and r.applicable >= 100 and r.elapsed < 300, msg)


def test_criterion_07_cm_transfer():
    parts = [run_suite("cm", 150), run_suite("cmextend", 100), run_suite("seqcm", 60)]
    fixtures = harness.seqcm_fixtures()
    bad = []
    for name, M in fixtures:
        R = pullback_functor(M, "r")
        if not classify(M).is_seq_CM or (not R.is_zero() and not classify(R).is_seq_CM):
            bad.append(name)
    cm_hits = sum(1 for rec in parts[0][0].records if rec["verdict"] != "skip")
    ok = all(r.ok for r, _ in parts) and not bad and cm_hits > 0
    assert verdict(7, ok, "; ".join(m for _, m in parts) +
                   f"; {len(fixtures)} sequentially CM fixtures, {len(bad)} failures")


def test_criterion_08_ext():
    parts = [run_suite("ext_a", 60), run_suite("ext_b", 60)]
    ok = all(r.ok and r.applicable >= 50 for r, _ in parts) and \
        sum(r.elapsed for r, _ in parts) < 600
    assert verdict(8, ok, "; ".join(m for _, m in parts))


def test_criterion_09_dualities():
    parts = [run_suite(name, 100) for name in ("r_and_a", "r_and_d", "art1", "art2")]
    ok = all(r.ok and r.applicable >= 100 for r, _ in parts) and \
        sum(r.elapsed for r, _ in parts) < 300
    assert verdict(9, ok, "; ".join(m for _, m in parts))


def test_criterion_10_property_floor():
    count = 0
    for kind in harness.KINDS:
        for seed in range(60):
            spec = InstanceSpec(3, (2, 3, 2), (1, 5), seed, kind)
            inst = random_instance(spec)
            assert random_instance(spec).text() == inst.text()
            M = inst.module()
            assert M.verify_commutativity()
            for e in M.edges.values():
                assert kernel_basis(e).dim + e.rank() == e.ncols
            F = minimal_resolution(M)
            assert F.check_complex()
            assert radicalize_resolution(F).check_complex()
            count += 1
    assert verdict(10, True, f"commutativity, d*d = 0, rank-nullity and determinism on "
                             f"{count} instances")
