import numpy as np
import pytest

from targeting import DomainError, ModelParams, Politician, VoteChoice, partisan_cutoffs, vote, voter_payoff
from targeting.voters import _cutoffs_for

from conftest import ALPHAS


def test_cutoffs_alpha_09():
    cut = partisan_cutoffs(ModelParams(0.9, 0.1))
    assert cut.left_cutoff == pytest.approx(1 / 11, abs=1e-12)
    assert cut.right_cutoff == pytest.approx(19 / 29, abs=1e-12)
    assert round(cut.right_cutoff - 0.5, 2) == 0.16


def test_cutoffs_symmetric_limit():
    cut = _cutoffs_for(0.0)
    assert cut.left_cutoff == cut.right_cutoff == 0.5


@pytest.mark.parametrize("alpha", ALPHAS)
def test_cutoff_ordering(alpha):
    cut = partisan_cutoffs(ModelParams(alpha, 0.5))
    assert 0 < cut.left_cutoff < 0.5 < cut.right_cutoff < 1
    # The Incumbent has more partisans than the Challenger.
    assert cut.right_cutoff - 0.5 < 0.5 - cut.left_cutoff


@pytest.mark.parametrize("alpha,v", [(0.0, 0.5), (1.0, 0.5), (1.2, 0.5), (0.5, 0.0), (0.5, 1.01)])
def test_params_validation(alpha, v):
    with pytest.raises(DomainError):
        ModelParams(alpha, v)


def test_voter_payoff_examples(p09):
    assert voter_payoff(0.3, Politician.CHALLENGER, True, p09) == pytest.approx(0.33, abs=1e-12)
    assert voter_payoff(1.0, Politician.INCUMBENT, False, p09) == 0
    for w in Politician:
        assert voter_payoff(1.0, w, True, p09) == voter_payoff(1.0, w, False, p09)
    with pytest.raises(DomainError):
        voter_payoff(1.5, Politician.INCUMBENT, False, p09)


def test_vote_examples(p09):
    assert vote(0.7, False, True, p09) is VoteChoice.INCUMBENT
    assert vote(0.3, True, True, p09) is VoteChoice.CHALLENGER
    assert vote(0.5, False, False, p09) is VoteChoice.SPLIT


@pytest.mark.parametrize("alpha", ALPHAS)
def test_partisan_and_swing_characterisation(alpha):
    p = ModelParams(alpha, 0.5)
    cut = partisan_cutoffs(p)
    L, R = cut.left_cutoff, cut.right_cutoff
    for t in np.linspace(0, 1, 2001)[1:-1]:
        if abs(t - L) < 1e-9 or abs(t - R) < 1e-9 or abs(t - 0.5) < 1e-9:
            continue
        if t > R:
            assert vote(t, False, True, p) is VoteChoice.INCUMBENT
        if t < L:
            assert vote(t, True, False, p) is VoteChoice.CHALLENGER
        for by_i in (False, True):
            for by_c in (False, True):
                choice = vote(t, by_i, by_c, p)
                if L < t < 0.5:
                    assert (choice is VoteChoice.INCUMBENT) == (by_i and not by_c)
                elif 0.5 < t < R:
                    assert (choice is VoteChoice.CHALLENGER) == (by_c and not by_i)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
@pytest.mark.parametrize("offers", [(False, False), (True, False), (False, True), (True, True)])
def test_incumbent_voters_form_up_set(alpha, offers):
    p = ModelParams(alpha, 0.5)
    ts = np.linspace(0, 1, 10_001)
    inc = [vote(t, *offers, p) is VoteChoice.INCUMBENT for t in ts]
    first = inc.index(True)
    assert all(inc[first:])
