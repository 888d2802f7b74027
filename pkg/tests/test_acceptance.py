"""End-to-end acceptance checks.

Each test starts from empty caches, times itself, prints one PASS/FAIL line
and asserts both correctness and the runtime limit.  The collected lines are
repeated in the terminal summary.
"""
import time

import pytest

from canonical_cones.cartan import cartan, reduced_words, weyl_dim
from canonical_cones.reference import example_pack_checks
from canonical_cones.verify import (cmm_checks, cone_equalities, crystal_checks, cycle_checks, default_weights,
                                    optimized_seeds, phi_checks, polytope_counts, potential_identities, unimodularity,
                                    _words)

pytestmark = pytest.mark.usefixtures("cold")


def _run(fn):
    start = time.perf_counter()
    checks = fn()
    return checks, time.perf_counter() - start


def _failures(checks):
    return [(ch.name, ch.detail) for ch in checks if not ch.passed]


def test_01_sl3_example_pack(report):
    checks, dt = _run(example_pack_checks)
    assert len(checks) == 13  # quiver, 4 W, 4 f^B, 4 chart maps
    ok = report(1, "A2 (1,2,1): quiver, W, f^B and chart maps match the reference", not _failures(checks), dt, 1)
    assert not _failures(checks)
    assert ok


def test_02_potential_identities(report):
    def body():
        out = []
        for label in ("A2", "A3"):
            c = cartan(label)
            out += potential_identities(c, reduced_words(c))
        d4 = cartan("D4")
        out += potential_identities(d4, _words(d4, 3))
        return out
    checks, dt = _run(body)
    # 4 identities per signed divisor: A2 2 words x 4, A3 16 x 6, D4 3 x 8
    assert len(checks) == 4 * (2 * 4 + 16 * 6 + 3 * 8)
    ok = report(2, "W and f^B against the four cone-function families (A2, A3, D4 x3)", not _failures(checks), dt, 120)
    assert not _failures(checks)
    assert ok


def test_03_unimodular_charts(report):
    c = cartan("A3")
    checks, dt = _run(lambda: unimodularity(c, reduced_words(c)))
    assert len(checks) == 64
    ok = report(3, "tropical chart matrices have det +-1 on all A3 words", not _failures(checks), dt, 1)
    assert not _failures(checks)
    assert ok


def test_04_string_to_lusztig_map(report):
    c = cartan("A3")
    checks, dt = _run(lambda: cmm_checks(c, reduced_words(c), rays=True))
    assert len(checks) == 16 * 5
    assert sum("rays" in ch.name for ch in checks) == 16
    ok = report(4, "closed unimodular map = composed charts; rays go to rays (A3)", not _failures(checks), dt, 60)
    assert not _failures(checks)
    assert ok


def test_05_cone_equalities(report):
    def body():
        out = []
        for label in ("A2", "A3"):
            c = cartan(label)
            out += cone_equalities(c, reduced_words(c))
        return out
    checks, dt = _run(body)
    assert len(checks) == 5 * (2 + 16)
    ok = report(5, "chart images of the graded cones equal the GHKK and BK cones (A2, A3)", not _failures(checks), dt, 120)
    assert not _failures(checks)
    assert ok


def test_06_optimized_seed_algorithm(report):
    def body():
        out = []
        for label in ("A2", "A3"):
            c = cartan(label)
            out += optimized_seeds(c, reduced_words(c))
        return out
    checks, dt = _run(body)
    assert len(checks) == 2 * 2 + 16 * 3
    ok = report(6, "W_{-a} by mutation to an optimized seed = closed form", not _failures(checks), dt, 30)
    assert not _failures(checks)
    assert ok


def test_07_polytope_counts(report):
    a2, a3 = cartan("A2"), cartan("A3")
    assert [weyl_dim(a3, w) for w in default_weights(a3)] == [1, 4, 6, 4, 64]
    assert len(default_weights(a2)) == 9

    def body():
        return (polytope_counts(a2, _words(a2, 2), default_weights(a2))
                + polytope_counts(a3, _words(a3, 2), default_weights(a3)))
    checks, dt = _run(body)
    assert len(checks) == 2 * 2 * 9 + 2 * 2 * 5
    ok = report(7, "string and Lusztig polytope point counts = Weyl dimension", not _failures(checks), dt, 60)
    assert not _failures(checks)
    assert ok


def test_08_crystal_consequences(report):
    a2, a3 = cartan("A2"), cartan("A3")

    def body():
        return crystal_checks(a2, reduced_words(a2), None, 3), crystal_checks(a3, reduced_words(a3), 500, 3)
    (small, sampled), dt = _run(body)
    checks = small + sampled
    assert all(ch.detail.startswith("64 points") for ch in small if "eps*" in ch.name)  # all of [0,3]^3
    # the sampled checks must really see 500 cone points per word
    assert all(ch.detail.startswith("500 cone points") for ch in sampled if "f*" in ch.name)
    ok = report(8, "eps* identity and f*-stability (A2 box [0,3]^N, A3 500 samples)", not _failures(checks), dt, 30)
    assert not _failures(checks)
    assert ok


def test_09_phi_coherence(report):
    c = cartan("A3")
    checks, dt = _run(lambda: phi_checks(c, reduced_words(c), covariance=True))
    assert len(checks) == 2 * 16 + 1
    ok = report(9, "phi = phi', f^B = W o phi on all A3 words; covariance under a 3-move", not _failures(checks), dt, 60)
    assert not _failures(checks)
    assert ok


def test_10_transition_cycles(report):
    c = cartan("A3")
    checks, dt = _run(lambda: cycle_checks(c, max_len=6))
    assert len(checks) == 2
    assert all(ch.detail.startswith("20 cycles") for ch in checks), [ch.detail for ch in checks]
    ok = report(10, "A3 move-graph cycles of length <= 6 compose to the identity", not _failures(checks), dt, 120)
    assert not _failures(checks)
    assert ok
