import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from gce.errors import CrossSnapshotIds
from gce.metrics import (
    block_match_scores,
    failed_scores,
    fscores,
    lcs_length,
    lcs_scores,
    mean_report,
)
from gce.snapshot import parse_snapshot
from gce.synth import SnapshotBuilder

from util import oracle_lcs

MIXED_ALPHABET = "abcdef 中日韓한글النصرусский"


def test_lcs_basic_example():
    rep = lcs_scores("abcde", "ace")
    assert lcs_length("abcde", "ace") == 3
    assert rep.precision == pytest.approx(3 / 5)
    assert rep.recall == 1.0
    assert rep.f1 == pytest.approx(0.75)


def test_identical_strings_score_one():
    rep = lcs_scores("экстракт 本文", "экстракт 本文")
    assert (rep.precision, rep.recall, rep.f1, rep.f05) == (1.0, 1.0, 1.0, 1.0)


def test_f05_hand_value():
    f1, f05 = fscores(0.6, 1.0)
    assert f1 == pytest.approx(0.75)
    assert f05 == pytest.approx(0.75 / 1.15)
    assert round(f05, 4) == 0.6522


def test_empty_operands_score_zero():
    assert lcs_scores("", "truth").precision == 0.0
    assert lcs_scores("", "truth").recall == 0.0
    assert lcs_scores("text", "").recall == 0.0
    assert failed_scores("lcs").f1 == 0.0


def test_lcs_matches_dp_oracle_quick():
    rng = random.Random(99)
    for _ in range(300):
        a = "".join(rng.choice(MIXED_ALPHABET) for _ in range(rng.randint(0, 30)))
        b = "".join(rng.choice(MIXED_ALPHABET) for _ in range(rng.randint(0, 30)))
        assert lcs_length(a, b) == oracle_lcs(a, b)


@settings(max_examples=150, deadline=None)
@given(st.text(MIXED_ALPHABET, max_size=30), st.text(MIXED_ALPHABET, max_size=30))
def test_lcs_bounds_and_symmetry(a, b):
    n = lcs_length(a, b)
    assert 0 <= n <= min(len(a), len(b))
    assert n == lcs_length(b, a)


def test_lcs_long_inputs_truncated_and_flagged():
    a = "x" * 250_000
    b = "x" * 250_000
    rep = lcs_scores(a, b)
    assert rep.truncated
    assert rep.precision == 1.0 and rep.recall == 1.0
    assert not lcs_scores("abc", "abc").truncated


@settings(max_examples=120, deadline=None)
@given(st.floats(1e-6, 1.0), st.floats(1e-6, 1.0))
def test_f05_rewards_precision(p, r):
    f1, f05 = fscores(p, r)
    if p == r:
        assert f05 == pytest.approx(f1)
    elif p > r:
        assert f05 > f1 - 1e-12
    else:
        assert f05 < f1 + 1e-12


# --- block matching ----------------------------------------------------------

def test_block_overlap_example():
    rep = block_match_scores({1, 2, 3}, {2, 3, 4})
    assert rep.precision == pytest.approx(2 / 3)
    assert rep.recall == pytest.approx(2 / 3)
    assert rep.f1 == pytest.approx(2 / 3)


def test_block_identity_and_disjoint():
    full = block_match_scores({5, 6}, {5, 6})
    assert (full.precision, full.recall, full.f1, full.f05) == (1.0, 1.0, 1.0, 1.0)
    none = block_match_scores({1}, {2})
    assert (none.precision, none.recall, none.f1, none.f05) == (0.0, 0.0, 0.0, 0.0)


def test_block_empty_extracted_scores_zero():
    rep = block_match_scores(set(), {1, 2})
    assert rep.precision == 0.0 and rep.recall == 0.0 and rep.f1 == 0.0


def test_block_cross_snapshot_ids_rejected():
    b = SnapshotBuilder()
    div = b.element(b.body_id, "div", 0, 0, 100, 100)
    t = b.text(div, 0, 0, 50, 50, "x")
    s = parse_snapshot(json.dumps(b.snapshot_dict()))
    block_match_scores({t}, {t}, snapshot=s)  # fine
    with pytest.raises(CrossSnapshotIds):
        block_match_scores({t, 999}, {t}, snapshot=s)


@settings(max_examples=100, deadline=None)
@given(
    st.sets(st.integers(0, 40), max_size=15),
    st.sets(st.integers(0, 40), max_size=15),
    st.integers(41, 60),
)
def test_adding_shared_leaf_never_hurts_f1(ex, tr, new):
    before = block_match_scores(ex, tr).f1
    after = block_match_scores(ex | {new}, tr | {new}).f1
    assert after >= before - 1e-12


def test_mean_report_is_columnwise():
    a = block_match_scores({1, 2}, {1, 2})
    z = block_match_scores({1}, {2})
    m = mean_report("block", [a, z])
    assert m.precision == pytest.approx(0.5)
    assert m.f1 == pytest.approx(0.5)
