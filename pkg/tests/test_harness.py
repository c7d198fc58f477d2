"""Harness-level behaviour: registry plumbing, verifier hypothesis gates,
corpus determinism."""

import pytest


from matroidkit.builders import (fano, twisted_cube_matroid, uniform,
                                 wheel, whirl)
from matroidkit.corpus import elongated_quad_glued, generate_corpus
from matroidkit.harness import (MATROID_CHECKS, PAIR_CHECKS, Verdict,
                                is_wheel_or_whirl, run_lemma_registry,
                                sweep_theorem_triangles,
                                verify_flan_corollary, verify_theorem_main,
                                verify_theorem_triangles)
from matroidkit.minors import HypothesisUnmet
from matroidkit.cli import serialize


class TestCorpus:
    def test_deterministic(self):
        a = generate_corpus(7, max_n=12)
        b = generate_corpus(7, max_n=12)
        assert [e.name for e in a] == [e.name for e in b]
        assert all(x.matroid == y.matroid for x, y in zip(a, b))
        texts_a = [serialize(e.matroid, e.name) for e in a]
        texts_b = [serialize(e.matroid, e.name) for e in b]
        assert texts_a == texts_b

    def test_different_seed_changes_random_tail(self):
        a = generate_corpus(0, max_n=12)
        b = generate_corpus(1, max_n=12)
        sparse_a = [e.matroid for e in a if e.name.startswith("sparse")]
        sparse_b = [e.matroid for e in b if e.name.startswith("sparse")]
        assert sparse_a and sparse_b and sparse_a != sparse_b

    def test_size_cap_respected(self):
        for e in generate_corpus(0, max_n=10):
            assert e.matroid.n <= 10

    def test_wheel_whirl_recognition(self):
        assert is_wheel_or_whirl(wheel(4))
        assert is_wheel_or_whirl(whirl(3))
        assert is_wheel_or_whirl(uniform(2, 4))   # the rank-2 whirl
        assert not is_wheel_or_whirl(fano())
        assert not is_wheel_or_whirl(twisted_cube_matroid())


class TestRegistryPlumbing:
    def test_every_check_has_unique_name(self):
        names = [c[0] for c in MATROID_CHECKS] + [c[0] for c in PAIR_CHECKS]
        assert len(names) == len(set(names)) == 26

    def test_vacuous_reported_distinctly(self):
        small = generate_corpus(0, max_n=6)
        verdicts = run_lemma_registry(small)
        outcomes = {v.outcome for v in verdicts}
        assert "vacuous" in outcomes and "fail" not in outcomes

    def test_fail_carries_witness(self):
        # a deliberately broken "check" distinguishes outcome wiring
        v = Verdict("x", "y", "fail", 1, ("w",), 0)
        assert "witness" in v.line()

    def test_witness_shrinker(self):
        from matroidkit.harness import shrink_mask
        # violation: mask still covers bits {1, 3}; minimal witness is both
        got = shrink_mask(lambda x: (x & 0b01010) == 0b01010, 0b11111)
        assert got == 0b01010


class TestVerifierGates:
    def test_triangles_gap_gate(self):
        with pytest.raises(HypothesisUnmet):
            verify_theorem_triangles(uniform(3, 7), uniform(3, 5))

    def test_triangles_minor_gate(self):
        with pytest.raises(HypothesisUnmet):
            verify_theorem_triangles(fano().dual(), uniform(2, 4).dual())

    def test_main_gap_gate(self):
        with pytest.raises(HypothesisUnmet):
            verify_theorem_main(uniform(4, 12), uniform(4, 8))

    def test_main_fast_path(self):
        v = verify_theorem_main(uniform(4, 18), uniform(4, 8))
        assert v.outcome == "pass"

    def test_triangles_branches(self):
        v = verify_theorem_triangles(uniform(2, 9), uniform(2, 4))
        assert v.outcome == "pass" and v.witness == "detachable-pair"
        v = verify_theorem_triangles(whirl(5), uniform(2, 4))
        assert v.outcome == "pass" and v.witness == "detachable-after-exchange"

    def test_flan_corollary_detector_branch(self):
        m = elongated_quad_glued()
        d = m.id_of("q1")
        order = [m.id_of(x) for x in ("p1", "p2", "q3", "q4", "q2")]
        v = verify_flan_corollary(m, fano(), d, order)
        assert v.outcome == "pass" and v.witness == "elongated-quad"

    def test_flan_corollary_gate(self):
        m = elongated_quad_glued()
        with pytest.raises(HypothesisUnmet):
            verify_flan_corollary(m, fano(), m.id_of("w1"),
                                  [m.id_of(x) for x in
                                   ("p1", "p2", "q3", "q4", "q2")])

    def test_foundation_rejects_instances_with_pairs(self):
        from matroidkit.harness import verify_foundation
        m = uniform(2, 9)
        with pytest.raises(HypothesisUnmet):
            verify_foundation(m, uniform(2, 4), 0, 1,
                              m.set_of("cdef"), m.set_of("ghi"))


class TestSweeps:
    def test_triangles_sweep_small(self):
        corpus = generate_corpus(0, max_n=9)
        verdicts = sweep_theorem_triangles(corpus, max_m=9)
        assert verdicts
        assert all(v.outcome == "pass" for v in verdicts)
