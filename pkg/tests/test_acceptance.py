"""Acceptance suite.

Each criterion records one PASS/FAIL line; the lines are printed in the
pytest terminal summary and when this file is run as a script.
"""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time
from functools import lru_cache

import pytest

from sgchain.chains import (
    INFINITE,
    Basis,
    Certificate,
    NotFoundUpTo,
    SymbolicReesZ,
    antichain_certificate,
    fp_backend,
    rees_z_backend,
    validate_certificate,
    zero_min_right_ideal_report,
)
from sgchain.cli.checks import (
    FAIL,
    FINITE_CHECKS,
    PASS,
    infinite_checks,
    random_transformation_semigroup,
    run_finite_checks,
    run_suite,
    small_tables,
    u_poset_pairs,
    zoo_expectations,
)
from sgchain.cli.zoo import finite_zoo_names, zoo_instance
from sgchain.core import adjoin_zero, from_table
from sgchain.green import green_of
from sgchain.rewrite import free_fp

SEED = 42
RESULTS: dict[int, str] = {}


def report(n: int, ok: bool, detail: str, elapsed: float, limit: float | None) -> None:
    timing = f"{elapsed:.2f}s" + (f" (limit {limit:g}s)" if limit else "")
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {timing}  {detail}"


@lru_cache(maxsize=None)
def population() -> tuple:
    out = [(f"zoo:{n}", zoo_instance(n)) for n in finite_zoo_names()]
    out += [(f"order3:{i}", from_table(["a", "b", "c"], t)) for i, t in small_tables(3)]
    rng = random.Random(SEED)
    for i in range(500):
        out.append((f"random:{i}", random_transformation_semigroup(rng)[2]))
    return tuple(out)


def with_zero() -> list:
    """Random instances with a zero adjoined, so 0-minimal right ideals exist."""
    rng = random.Random(f"zero:{SEED}")
    return [(f"random0:{i}", adjoin_zero(random_transformation_semigroup(rng, 120)[2]))
            for i in range(100)]


def run_checks(instances, prefixes) -> list:
    checks = tuple(c for c in FINITE_CHECKS if c.id.startswith(prefixes))
    recs = []
    for name, S in instances:
        recs += [r for r in run_finite_checks(name, S, checks) if r.check != "core.associative"]
    return recs


def summarise(recs) -> tuple[bool, str]:
    fails = [r for r in recs if r.verdict == FAIL]
    passed = sum(r.verdict == PASS for r in recs)
    ids = len({r.check for r in recs})
    detail = f"{passed} checks passed across {ids} law{'s' * (ids != 1)}"
    if fails:
        detail += f"; {len(fails)} failed, first {fails[0].check} on {fails[0].instance}"
    return not fails, detail


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


# -- 1 -------------------------------------------------------------------------------------------

GREEN_LAWS = ("green.H_is_R_meet_L", "green.D_is_R_compose_L", "green.RL_equals_LR",
              "green.H_in_R", "green.H_in_L", "green.R_in_D", "green.L_in_D", "green.D_in_J",
              "green.R_left_congruence", "green.L_right_congruence",
              "green.right_ideals_are_R_unions", "green.R_definition", "green.L_definition")


def right_compatibility_witness(S):
    """(a, b, c) with a R b but ac not R bc, if any."""
    g = green_of(S)
    cls = {a: k for k, R in enumerate(g.R) for a in R}
    for R in g.R:
        for a in R:
            for b in R:
                for c in range(S.size):
                    if cls[S.table[a][c]] != cls[S.table[b][c]]:
                        return a, b, c
    return None


def literal_right_congruence():
    bad = [(name, S, w) for name, S in population()
           if (w := right_compatibility_witness(S)) is not None]
    return bad


def test_criterion_1_green_laws():
    def body():
        corrected = summarise(run_checks(population(), GREEN_LAWS))
        return corrected, literal_right_congruence()

    ((ok, detail), bad), elapsed = timed(body)
    assert ok, detail
    name, S, (a, b, c) = bad[0] if bad else (None, None, (0, 0, 0))
    literal = (f"as written, 'R is a right congruence' fails on {len(bad)} of "
               f"{len(population())} instances (first {name}: a={S.labels[a]}, b={S.labels[b]}, "
               f"c={S.labels[c]}); the corrected laws (R left congruence, L right congruence) "
               f"and all others hold: {detail}") if bad else detail
    report(1, not bad and elapsed < 30, literal, elapsed, 30)
    assert elapsed < 30


@pytest.mark.xfail(strict=True, reason="R is a left congruence, not a right one")
def test_criterion_1_literal_right_congruence_law():
    assert not literal_right_congruence()


# -- 2 -------------------------------------------------------------------------------------------

def test_criterion_2_minimal_ideal_structure():
    (ok, detail), elapsed = timed(lambda: summarise(run_checks(population(), ("ideals.minimal",
                                                                                "ideals.kernel",
                                                                                "ideals.completely"))))
    report(2, ok and elapsed < 10, detail, elapsed, 10)
    assert ok, detail
    assert elapsed < 10


# -- 3 -------------------------------------------------------------------------------------------

def test_criterion_3_socle_decompositions():
    def body():
        recs = run_checks(list(population()) + with_zero(), ("socle.",))
        covered = {r.instance for r in recs if r.verdict == PASS}
        must = {"zoo:rees_full", "zoo:rees_diag", "zoo:final"}
        ok, detail = summarise(recs)
        return ok and must <= covered, f"{detail}; {len(covered)} instances with a zero covered"

    (ok, detail), elapsed = timed(body)
    report(3, ok and elapsed < 10, detail, elapsed, 10)
    assert ok, detail
    assert elapsed < 10


# -- 4 -------------------------------------------------------------------------------------------

def test_criterion_4_final_example():
    recs, elapsed = timed(lambda: [r for r in zoo_expectations() if r.check.startswith("final.")])
    ok, detail = summarise(recs)
    names = ", ".join(r.check.split(".", 1)[1] for r in recs)
    report(4, ok and elapsed < 1 and len(recs) >= 8, f"{detail} ({names})", elapsed, 1)
    assert ok and len(recs) >= 8, detail
    assert elapsed < 1


# -- 5 -------------------------------------------------------------------------------------------

def test_criterion_5_u_construction_poset():
    recs, elapsed = timed(lambda: u_poset_pairs(SEED, 100))
    ok, detail = summarise(recs)
    report(5, ok and len(recs) == 100 and elapsed < 10, f"{len(recs)} pairs; {detail}", elapsed, 10)
    assert ok and len(recs) == 100, detail
    assert elapsed < 10


# -- 6 -------------------------------------------------------------------------------------------

def test_criterion_6_two_relation_presentation():
    recs, elapsed = timed(lambda: [r for r in infinite_checks(SEED) if r.check.startswith("ex41.")])
    ok, detail = summarise(recs)
    wanted = {"ex41.locally_confluent", "ex41.normal_form_counts", "ex41.kernel_is_ideal",
              "ex41.quotient_chain_depth_10", "ex41.kernel_antichain_50",
              "ex41.fg_subact_random_100"}
    ok = ok and wanted <= {r.check for r in recs}
    report(6, ok and elapsed < 60, detail, elapsed, 60)
    assert ok, detail
    assert elapsed < 60


# -- 7 -------------------------------------------------------------------------------------------

def test_criterion_7_annihilator_sets():
    (ok_f, detail_f), el_f = timed(lambda: summarise(
        run_checks(list(population()) + with_zero(), ("ideals.annihilators",))))
    diag = SymbolicReesZ(2, 2, ((0, None), (None, 0)))
    full = SymbolicReesZ(2, 2, ((0, 0), (0, 0)))
    rep, el_s = timed(lambda: zero_min_right_ideal_report(diag, 1, 100))
    cert = rep.certificate
    E = rees_z_backend(diag, row=1)
    ok_s = (rep.size == INFINITE and isinstance(cert, Certificate) and len(cert) == 100
            and cert.verdict_basis is Basis.EXACT
            and bool(validate_certificate(E, cert, E.multipliers(100))) and el_s < 1)
    rep_full = zero_min_right_ideal_report(full, 1, 100)
    ok_z = rep_full.size == 0 and isinstance(rep_full.certificate, NotFoundUpTo)
    ok = ok_f and ok_s and ok_z
    detail = (f"finite: {detail_f}; symbolic sandwich-zero column: exact antichain of 100 in "
              f"{el_s:.3f}s; all-integer matrix: annihilator set empty, no antichain of 2")
    report(7, ok, detail, el_f + el_s, None)
    assert ok, detail


# -- 8 -------------------------------------------------------------------------------------------

def test_criterion_8_free_semigroups():
    def body():
        one = antichain_certificate(fp_backend(free_fp(1), 15), 2, 15)
        E2 = fp_backend(free_fp(2), 20)
        two = antichain_certificate(E2, 20, 20)
        valid = isinstance(two, Certificate) and validate_certificate(E2, two, E2.multipliers(6))
        return one, two, bool(valid)

    (one, two, valid), elapsed = timed(body)
    ok = (isinstance(one, NotFoundUpTo) and isinstance(two, Certificate) and len(two) == 20
          and two.verdict_basis is Basis.EXACT and valid)
    detail = ("one generator: no antichain of 2 up to radius 15; "
              f"two generators: exact antichain of {len(two)} ({two.elements[0]} ... {two.elements[-1]})")
    report(8, ok and elapsed < 5, detail, elapsed, 5)
    assert ok, detail
    assert elapsed < 5


# -- 9 -------------------------------------------------------------------------------------------

def _cli(*argv, hashseed: str):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    return subprocess.run([sys.executable, "-m", "sgchain.cli.main", *argv], env=env,
                          capture_output=True, timeout=600)


def test_criterion_9_harness_integrity():
    def body():
        mutated = run_suite("paper-finite", SEED, 0, mutate_instance="LZ2")
        fails = [r for r in mutated["records"] if r["verdict"] == FAIL and r["witness"] is not None]
        outs = {}
        for suite in ("paper-finite", "paper-infinite"):
            runs = [_cli("verify", "--suite", suite, "--seed", str(SEED), "--count", "100",
                         "--compact", hashseed=h) for h in ("1", "2")]
            outs[suite] = (runs[0].stdout == runs[1].stdout,
                           runs[0].returncode, json.loads(runs[0].stdout)["summary"])
        return fails, outs

    (fails, outs), elapsed = timed(body)
    same = all(v[0] for v in outs.values())
    clean = all(v[1] == 0 for v in outs.values())
    ok = bool(fails) and same and clean
    first = fails[0] if fails else {}
    detail = (f"mutated LZ2: {len(fails)} failing check(s), first {first.get('check')} "
              f"witness {first.get('witness')}; both suites byte-identical across two processes: "
              f"{same}")
    report(9, ok, detail, elapsed, None)
    assert ok, detail


def print_results(write=print) -> None:
    write("")
    write("acceptance criteria")
    for n in sorted(RESULTS):
        write(RESULTS[n])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
