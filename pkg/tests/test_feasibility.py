from __future__ import annotations

import random

import pytest

from conftest import random_assessments, synth_catalog
from crf.catalog import Category
from crf.feasibility import find_blockers
from crf.scoring import (
    CostLevel,
    EnablerAssessment,
    EnablerScores,
    Importance,
    LikertLevel,
    score_assessments,
)

SYNTH = synth_catalog(20)


def _scores(enabler_id, readiness, threshold, importance=Importance.HIGH, category=Category.PHYSICAL):
    return EnablerScores(
        enabler_id=enabler_id,
        category=category,
        importance=importance,
        readiness_score=readiness,
        aspiration_score=9,
        threshold_score=threshold,
        cost_points=0,
    )


class TestDemoVerdict:
    def test_demo_is_feasible_with_zero_blockers(self, dcat, dassess):
        scores = score_assessments(dassess, dcat)
        # independent row-by-row scan of the published columns
        assert all(s.readiness_score >= s.threshold_score for s in scores)
        verdict = find_blockers(scores, use_case_id="RWW-demo")
        assert verdict.feasible
        assert verdict.blockers == ()
        assert verdict.margin == min(s.readiness_score - s.threshold_score for s in scores)
        assert verdict.margin == 0  # several rows sit exactly at their threshold

    def test_equality_is_feasible(self):
        verdict = find_blockers([_scores("e", 3, 3)])
        assert verdict.feasible
        assert verdict.margin == 0


class TestBlockers:
    def test_low_readiness_vs_medium_threshold(self, dcat):
        a = EnablerAssessment(
            enabler_id="stationary-rsu",
            importance=Importance.HIGH,
            readiness=LikertLevel.LOW,       # 3
            aspiration=LikertLevel.HIGH,
            threshold=LikertLevel.MEDIUM,    # 6
            cost=CostLevel.MEDIUM,
        )
        verdict = find_blockers(score_assessments([a], dcat), use_case_id="x")
        assert not verdict.feasible
        assert len(verdict.blockers) == 1
        b = verdict.blockers[0]
        assert (b.readiness_score, b.threshold_score, b.gap) == (3, 6, 3)
        assert verdict.margin == -3

    def test_sorted_by_gap_descending(self):
        verdict = find_blockers([_scores("a", 3, 6), _scores("b", 3, 9)])
        assert [b.enabler_id for b in verdict.blockers] == ["b", "a"]
        assert [b.gap for b in verdict.blockers] == [6, 3]

    def test_gap_tie_broken_by_importance_then_id(self):
        scores = [
            _scores("zeta", 0, 3, importance=Importance.HIGH),
            _scores("alpha", 3, 6, importance=Importance.LOW),
            _scores("beta", 3, 6, importance=Importance.LOW),
        ]
        verdict = find_blockers(scores)
        assert [b.enabler_id for b in verdict.blockers] == ["zeta", "alpha", "beta"]

    def test_empty_errors(self):
        with pytest.raises(ValueError):
            find_blockers([])

    def test_deterministic(self):
        scores = [_scores("a", 0, 9), _scores("b", 3, 6), _scores("c", 1, 4)]
        first = find_blockers(scores)
        second = find_blockers(scores)
        assert first == second


class TestProperties:
    def test_margin_matches_brute_scan(self):
        rng = random.Random(99)
        for _ in range(200):
            assessments = random_assessments(rng, SYNTH)
            scores = score_assessments(assessments, SYNTH)
            verdict = find_blockers(scores)
            worst = None
            for s in scores:
                diff = s.readiness_score - s.threshold_score
                if worst is None or diff < worst:
                    worst = diff
            assert verdict.margin == worst
            blocked = {s.enabler_id for s in scores if s.readiness_score < s.threshold_score}
            assert {b.enabler_id for b in verdict.blockers} == blocked
            assert verdict.feasible == (len(blocked) == 0)
            assert verdict.feasible == (verdict.margin >= 0)
            assert all(b.gap > 0 for b in verdict.blockers)

    def test_raising_readiness_never_grows_blocker_list(self):
        rng = random.Random(7)
        levels = list(LikertLevel)
        for _ in range(200):
            assessments = random_assessments(rng, SYNTH)
            before = find_blockers(score_assessments(assessments, SYNTH))
            idx = rng.randrange(len(assessments))
            a = assessments[idx]
            pos = levels.index(a.readiness)
            if pos == len(levels) - 1:
                continue
            raised = EnablerAssessment(
                enabler_id=a.enabler_id,
                importance=a.importance,
                readiness=levels[pos + 1],
                aspiration=a.aspiration,
                threshold=a.threshold,
                cost=a.cost,
            )
            after = find_blockers(
                score_assessments(assessments[:idx] + [raised] + assessments[idx + 1:], SYNTH)
            )
            assert len(after.blockers) <= len(before.blockers)
            before_ids = {b.enabler_id for b in before.blockers}
            after_ids = {b.enabler_id for b in after.blockers}
            assert after_ids <= before_ids
