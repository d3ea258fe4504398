import json

import pytest

from stargen import (
    CATALOG,
    InputError,
    figure_digraphs,
    replay_counterexample,
    valid_m_values,
    verify_claim,
    verify_claims,
)
from stargen.verify import Claim, Direction

ALL_IDS = sorted(CATALOG)


class TestCatalog:
    def test_expected_ids(self):
        assert ALL_IDS == sorted(
            [
                "prop_2_1",
                "lemma_2_2",
                "prop_2_3",
                "lemma_2_4",
                "prop_2_5",
                "lemma_2_6",
                "thm_2_7",
                "lemma_3_1",
                "thm_3_2",
                "prop_3_3",
                "lemma_3_4",
                "lemma_3_5",
                "lemma_3_6",
                "prop_3_7",
                "cor_3_8",
                "thm_1_2",
                "thm_1_3",
            ]
        )

    def test_valid_m_values(self):
        assert valid_m_values("prop_2_5", range(1, 7)) == {2, 3, 4, 5, 6}
        assert valid_m_values("thm_1_2", range(1, 7)) == {1, 2, 3, 4, 5, 6}
        assert valid_m_values("lemma_2_6", range(1, 7)) == frozenset()


class TestVerifyClaims:
    def test_thm_1_2_small_exhaustive(self):
        report = verify_claim("thm_1_2", 3, range(1, 7))
        assert report.verified
        assert report.digraphs_examined == 1 + 9 + 343
        assert report.hypothesis_hits > 0

    def test_biconditionals_have_two_directions(self):
        for cid in ("lemma_3_6", "prop_3_7", "thm_1_2", "thm_1_3"):
            assert len(CATALOG[cid].directions) == 2

    def test_lemma_2_2_default_grid(self):
        report = verify_claim("lemma_2_2", 0, range(1, 11))
        assert report.verified
        assert report.digraphs_examined == 25
        assert report.hypothesis_hits == 250

    def test_thm_3_2_census(self):
        report = verify_claim("thm_3_2", 4, [])
        assert report.verified
        assert report.hypothesis_hits == 3  # orders 2, 3, 4

    def test_m_independent_claims_ignore_m(self):
        for cid in ("lemma_2_6", "lemma_3_1"):
            report = verify_claim(cid, 3, [])
            assert report.verified
            assert report.hypothesis_hits > 0

    def test_batch_matches_individual(self):
        batch = verify_claims(["prop_2_1", "thm_1_3"], 3, [1, 2])
        solo = [verify_claim("prop_2_1", 3, [1, 2]), verify_claim("thm_1_3", 3, [1, 2])]
        for b, s in zip(batch, solo):
            assert b.claim_id == s.claim_id
            assert b.hypothesis_hits == s.hypothesis_hits
            assert b.counterexamples == s.counterexamples
            assert b.boundary_instances == s.boundary_instances

    def test_worker_count_does_not_change_results(self):
        one = verify_claim("thm_1_3", 3, [1, 2, 3], workers=1)
        many = verify_claim("thm_1_3", 3, [1, 2, 3], workers=3)
        assert one.to_dict()["counterexamples"] == many.to_dict()["counterexamples"]
        assert one.hypothesis_hits == many.hypothesis_hits
        assert one.digraphs_examined == many.digraphs_examined
        assert one.boundary_instances == many.boundary_instances


class TestErrors:
    def test_unknown_claim(self):
        with pytest.raises(InputError, match="unknown claim"):
            verify_claim("lemma_9_9", 3, [2])

    def test_m_below_range_is_named(self):
        with pytest.raises(InputError, match="prop_2_5 requires m >= 2"):
            verify_claim("prop_2_5", 3, [1, 2])

    def test_sampled_needs_count(self):
        with pytest.raises(InputError, match="sample count"):
            verify_claim("prop_2_1", 3, [2], mode="sampled", seed=1)

    def test_nonpositive_m_rejected(self):
        with pytest.raises(InputError):
            verify_claim("prop_2_1", 3, [0, 1])


class TestSampledMode:
    def test_seed_reproducible(self):
        kwargs = dict(mode="sampled", seed=99, sample_count=300)
        a = verify_claim("prop_2_3", 4, [2, 3], **kwargs)
        b = verify_claim("prop_2_3", 4, [2, 3], **kwargs)
        assert a.verified and b.verified
        assert a.hypothesis_hits == b.hypothesis_hits
        assert a.digraphs_examined == b.digraphs_examined == 300

    def test_independent_of_workers(self):
        kwargs = dict(mode="sampled", seed=7, sample_count=120_000)
        a = verify_claim("prop_2_1", 3, [1], workers=1, **kwargs)
        b = verify_claim("prop_2_1", 3, [1], workers=4, **kwargs)
        assert a.hypothesis_hits == b.hypothesis_hits
        assert a.counterexamples == b.counterexamples


class TestBoundaryInstances:
    def test_fig4_found_below_the_m_range(self):
        # the path-producing digraph has a connected triangle-free 1-step
        # competition graph without being star-generating
        report = verify_claim("thm_1_3", 3, [1, 2])
        assert report.verified
        fig4_arcs = sorted(figure_digraphs()["fig4_D"].arcs())
        matching = [
            e
            for e in report.boundary_instances
            if e["arcs"] == fig4_arcs and e["m"] == 1 and e["direction"] == "only_if"
        ]
        assert matching

    def test_boundary_instances_replay_as_violations(self):
        report = verify_claim("thm_1_3", 3, [1, 2])
        for entry in report.boundary_instances[:20]:
            assert replay_counterexample(entry)


class TestReplay:
    def test_forged_entry_with_false_hypothesis(self):
        entry = {
            "claim": "prop_2_3",
            "direction": "forward",
            "n": 3,
            # C^2 of the 2-cycle-with-chord digraph contains a triangle
            "arcs": [[0, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1]],
            "m": 2,
            "detail": None,
        }
        assert replay_counterexample(entry) is False

    def test_forged_entry_with_true_conclusion(self):
        entry = {
            "claim": "thm_1_3",
            "direction": "if",
            "n": 3,
            "arcs": sorted(figure_digraphs()["fig1_D1"].arcs()),
            "m": 4,
            "detail": None,
        }
        # hypothesis holds but so does the conclusion: not a counterexample
        assert replay_counterexample(entry) is False

    def test_malformed_entry(self):
        with pytest.raises(InputError):
            replay_counterexample({"claim": "thm_1_3"})
        with pytest.raises(InputError):
            replay_counterexample({"claim": "nope", "direction": "if", "m": 2})

    def test_grid_entry(self):
        entry = {
            "claim": "lemma_2_2",
            "direction": "construction",
            "n": 6,
            "arcs": [],
            "m": 3,
            "k": 2,
            "l": 3,
            "detail": None,
        }
        assert replay_counterexample(entry) is False  # the construction is sound


def _always(ctx, m):
    return True


def _never_connected(ctx, m):
    ok = ctx.n_components(m) == 1
    return ok, None if ok else "not connected"


class TestCounterexampleMachinery:
    def test_false_claim_produces_replayable_counterexamples(self, monkeypatch):
        bogus = Claim(
            "bogus_connected",
            "digraph",
            (Direction("forward", 1, _always, _never_connected),),
        )
        monkeypatch.setitem(CATALOG, "bogus_connected", bogus)
        report = verify_claim("bogus_connected", 2, [1])
        assert not report.verified
        assert report.counterexamples
        for entry in report.counterexamples:
            assert replay_counterexample(entry)
            json.dumps(entry)

    def test_report_json_round_trip(self):
        report = verify_claim("prop_2_1", 3, [1, 2])
        line = report.to_json_line()
        data = json.loads(line)
        assert data["claim"] == "prop_2_1"
        assert data["verified"] is True
        assert data["digraphs_examined"] == report.digraphs_examined

    def test_write_report_lines(self, tmp_path):
        from stargen.verify import write_report_lines

        path = tmp_path / "reports.jsonl"
        reports = verify_claims(["prop_2_1", "lemma_2_6"], 3, [1])
        write_report_lines(reports, str(path))
        write_report_lines(reports, str(path))  # append-only
        lines = path.read_text().splitlines()
        assert len(lines) == 4
        assert all(json.loads(line)["verified"] for line in lines)
