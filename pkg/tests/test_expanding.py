import json
import random
from dataclasses import replace

import pytest

from gce.errors import ZeroArea
from gce.expanding import (
    BEST,
    NOBEST,
    CandidateSet,
    collect_candidates,
    run_gce,
    select_main_content,
    text_area_density,
)
from gce.grid import GridConfig
from gce.links import compute_density_map, label_text_leaves, mark_link_containers
from gce.snapshot import parse_snapshot, preprocess, scale_snapshot
from gce.synth import (
    PageSpec,
    SnapshotBuilder,
    build_boilerplate_only_page,
    build_page,
)

from util import oracle_text_density, random_snapshot


def snap(builder):
    return parse_snapshot(json.dumps(builder.snapshot_dict()))


def labels_for(s):
    containers = mark_link_containers(s)
    densities = compute_density_map(s, containers)
    return label_text_leaves(s, containers, densities, 0.5)


# --- collect_candidates ------------------------------------------------------

def test_article_tag_detected():
    b = SnapshotBuilder()
    art = b.element(b.body_id, "article", 100, 100, 1200, 1500)
    p = b.element(art, "p", 110, 110, 1100, 200)
    leaf = b.text(p, 115, 115, 1090, 180, "prose")
    s = snap(b)
    cand = collect_candidates(s, leaf, 1.7)
    assert cand.m_tag == art
    assert cand.m_diff is None


def test_positive_attr_detected():
    b = SnapshotBuilder()
    wrap = b.element(b.body_id, "div", 100, 100, 1200, 1500,
                     attr_class="content-wrapper")
    leaf = b.text(wrap, 110, 110, 1100, 200, "prose")
    s = snap(b)
    cand = collect_candidates(s, leaf, 1.7)
    assert cand.m_attr == wrap
    assert cand.m_tag is None


def test_attr_match_is_case_insensitive_substring():
    b = SnapshotBuilder()
    wrap = b.element(b.body_id, "div", 100, 100, 1200, 1500, attr_id="MainARTICLEBox")
    leaf = b.text(wrap, 110, 110, 1100, 200, "prose")
    s = snap(b)
    assert collect_candidates(s, leaf, 1.7).m_attr == wrap


def test_width_jump_detected():
    b = SnapshotBuilder()
    wide = b.element(b.body_id, "div", 0, 100, 700, 1500)
    leaf = b.text(wide, 10, 110, 400, 200, "prose")
    s = snap(b)
    cand = collect_candidates(s, leaf, 1.7)
    assert cand.m_diff == wide  # 700 > 400 * 1.7 = 680


def test_width_jump_not_detected_below_ratio():
    b = SnapshotBuilder()
    wide = b.element(b.body_id, "div", 0, 100, 670, 1500)
    leaf = b.text(wide, 10, 110, 400, 200, "prose")
    s = snap(b)
    # 670 < 400 * 1.7: the div does not fire; body (1920 > 670 * 1.7) does
    assert collect_candidates(s, leaf, 1.7).m_diff == s.root.id


def test_slots_set_once_on_longer_chain():
    b = SnapshotBuilder()
    outer = b.element(b.body_id, "article", 0, 0, 1900, 2500, attr_class="content-out")
    inner = b.element(outer, "article", 100, 100, 1200, 1500, attr_class="content-in")
    p = b.element(inner, "p", 110, 110, 1100, 200)
    leaf = b.text(p, 115, 115, 1090, 180, "prose")
    s = snap(b)
    cand = collect_candidates(s, leaf, 1.7)
    assert cand.m_tag == inner  # first article wins and is never overwritten
    assert cand.m_attr == inner


def test_body_can_fill_attr_slot():
    b = SnapshotBuilder()
    # builder's body has no attrs; craft one manually
    raw = {
        "version": "1",
        "window": {"w": 1920, "h": 1080},
        "document": {"w": 1920, "h": 3000},
        "nodes": [
            {"id": 0, "kind": "element", "tag": "body", "attrClass": "site-content",
             "rect": {"x": 0, "y": 0, "w": 1920, "h": 3000}},
            {"id": 1, "kind": "element", "tag": "div", "parent": 0,
             "rect": {"x": 0, "y": 0, "w": 1000, "h": 900}},
            {"id": 2, "kind": "text", "parent": 1, "text": "x",
             "rect": {"x": 5, "y": 5, "w": 900, "h": 800}},
        ],
    }
    s = parse_snapshot(json.dumps(raw))
    cand = collect_candidates(s, 2, 1.7)
    assert cand.m_attr == 0


# --- text_area_density -------------------------------------------------------

def test_density_hand_arithmetic():
    b = SnapshotBuilder()
    wrap = b.element(b.body_id, "div", 0, 0, 1000, 2000)
    for i in range(3):
        p = b.element(wrap, "p", 0, i * 600, 900, 550)
        b.text(p, 0, i * 600, 600, 500, f"t{i}")  # 300000 each
    s = snap(b)
    assert text_area_density(s, labels_for(s), wrap) == pytest.approx(0.45)


def test_density_zero_without_low_leaves():
    b = SnapshotBuilder()
    wrap = b.element(b.body_id, "div", 0, 0, 1000, 2000)
    a = b.element(wrap, "a", 0, 0, 400, 300, is_link=True)
    b.text(a, 0, 0, 400, 300, "menu")
    s = snap(b)
    assert text_area_density(s, labels_for(s), wrap) == 0.0


def test_density_undefined_for_body_and_short_nodes():
    b = SnapshotBuilder()
    short = b.element(b.body_id, "div", 0, 0, 1000, 500)  # < 1080/2
    b.text(short, 0, 0, 600, 400, "x")
    s = snap(b)
    labels = labels_for(s)
    assert text_area_density(s, labels, s.root.id) is None
    assert text_area_density(s, labels, short) is None


def test_density_zero_area_raises():
    b = SnapshotBuilder()
    weird = b.element(b.body_id, "div", 0, 0, 0, 900)
    s = snap(b)
    with pytest.raises(ZeroArea):
        text_area_density(s, labels_for(s), weird)


def test_density_matches_oracle_random():
    rng = random.Random(2024)
    for _ in range(30):
        s = random_snapshot(rng)
        labels = labels_for(s)
        for n in s.nodes:
            if not n.is_element or n.rect.area == 0:
                continue
            assert text_area_density(s, labels, n.id) == oracle_text_density(
                s, labels, n.id
            )


# --- select_main_content -----------------------------------------------------

def _selection_page():
    """Six tall scoreable wrappers, one short div, plus body."""
    b = SnapshotBuilder(window=(1920, 1080), document=(1920, 6000))
    tall = {}
    for i in range(6):
        w = b.element(b.body_id, "div", 100, 100 + i * 900, 1200, 800)
        b.text(w, 110, 110 + i * 900, 1000, 600, f"content {i}")
        tall[i] = w
    short = b.element(b.body_id, "div", 100, 5600, 1200, 300)
    b.text(short, 110, 5610, 1000, 200, "short")
    return snap(b), tall, short


def _sets(s, **by_center):
    out = []
    for center in (1, 2, 3):
        kwargs = by_center.get(f"c{center}", {})
        out.append(CandidateSet(center_index=center, **kwargs))
    return out


@pytest.mark.parametrize("winner_center,winner_cls", [(3, BEST), (2, BEST), (1, BEST),
                                                      (3, NOBEST), (2, NOBEST), (1, NOBEST)])
def test_each_ordering_slot_can_win(winner_center, winner_cls):
    s, tall, short = _selection_page()
    body = s.root.id
    by_center = {}
    for center in (1, 2, 3):
        if winner_cls == BEST:
            if center > winner_center:
                by_center[f"c{center}"] = {}  # higher-priority centers empty
            elif center == winner_center:
                by_center[f"c{center}"] = {"m_tag": tall[center]}
            else:
                by_center[f"c{center}"] = {"m_tag": tall[center]}
        else:
            if center > winner_center:
                by_center[f"c{center}"] = {}
            elif center == winner_center:
                by_center[f"c{center}"] = {"m_diff": short}
            else:
                by_center[f"c{center}"] = {"m_diff": body}
    sets = _sets(s, **by_center)
    result = select_main_content(sets, s, labels_for(s))
    expected = tall[winner_center] if winner_cls == BEST else short
    assert not result.failed
    assert result.main_node_id == expected
    assert result.provenance.center == winner_center
    assert result.provenance.cls == winner_cls


def test_best_outranks_all_nobest():
    s, tall, short = _selection_page()
    sets = _sets(
        s,
        c1={"m_tag": tall[1]},   # best-eligible
        c2={"m_diff": short},    # nobest
        c3={"m_diff": short},    # nobest
    )
    result = select_main_content(sets, s, labels_for(s))
    assert result.main_node_id == tall[1]
    assert result.provenance == result.provenance.__class__(1, "tag", BEST)


def test_max_density_slot_wins_within_center():
    b = SnapshotBuilder(window=(1920, 1080), document=(1920, 6000))
    lo = b.element(b.body_id, "div", 100, 100, 1200, 800)
    b.text(lo, 110, 110, 600, 400, "sparse")      # d_t = 0.25
    hi = b.element(b.body_id, "div", 100, 1000, 1200, 800)
    b.text(hi, 110, 1010, 1000, 576, "dense")     # d_t = 0.6
    short = b.element(b.body_id, "div", 100, 2000, 1200, 300)
    b.text(short, 110, 2010, 600, 200, "short")
    s = snap(b)
    sets = _sets(s, c1={"m_tag": lo, "m_attr": hi, "m_diff": short})
    result = select_main_content(sets, s, labels_for(s))
    assert result.main_node_id == hi
    assert result.provenance.rule == "attr"


def test_all_empty_sets_fail():
    s, _, _ = _selection_page()
    result = select_main_content(_sets(s), s, labels_for(s))
    assert result.failed
    assert result.main_node_id is None
    assert result.text == ""
    assert result.text_leaf_ids == frozenset()


def test_all_body_candidates_fail():
    s, _, _ = _selection_page()
    body = s.root.id
    sets = _sets(s, c1={"m_attr": body}, c2={"m_diff": body}, c3={"m_attr": body})
    result = select_main_content(sets, s, labels_for(s))
    assert result.failed
    assert result.reason == "all-candidates-body"


def test_adding_best_to_center3_takes_over():
    s, tall, short = _selection_page()
    base = _sets(s, c1={"m_tag": tall[1]}, c2={"m_attr": tall[2]})
    before = select_main_content(base, s, labels_for(s))
    assert before.main_node_id == tall[2]
    upgraded = _sets(
        s, c1={"m_tag": tall[1]}, c2={"m_attr": tall[2]}, c3={"m_diff": tall[3]}
    )
    after = select_main_content(upgraded, s, labels_for(s))
    assert after.main_node_id == tall[3]


def test_custom_selection_order_respected():
    s, tall, _ = _selection_page()
    sets = _sets(s, c1={"m_tag": tall[1]}, c3={"m_tag": tall[3]})
    order = ((1, BEST), (2, BEST), (3, BEST), (1, NOBEST), (2, NOBEST), (3, NOBEST))
    result = select_main_content(sets, s, labels_for(s), order=order)
    assert result.main_node_id == tall[1]


# --- run_gce end to end -------------------------------------------------------

def test_single_article_page_extracts_wrapper():
    page = build_page(PageSpec("unit_e2e", lang="en", doc_h=3000, seed=11))
    s = parse_snapshot(json.dumps(page.snapshot))
    result = run_gce(s, GridConfig())
    assert not result.failed
    assert result.main_node_id == page.truth_node_id
    assert result.provenance.rule == "tag"
    pre = preprocess(s)
    assert result.text
    assert result.text_leaf_ids


def test_window_sized_single_leaf_page():
    b = SnapshotBuilder(window=(1920, 1080), document=(1920, 1080))
    wrap = b.element(b.body_id, "div", 300, 100, 1200, 900, attr_class="content")
    b.text(wrap, 310, 120, 1100, 800, "the only paragraph on this page")
    s = snap(b)
    result = run_gce(s, GridConfig())
    assert result.main_node_id == wrap
    assert result.provenance.cls == BEST


def test_boilerplate_only_page_fails():
    s = parse_snapshot(json.dumps(build_boilerplate_only_page()))
    result = run_gce(s, GridConfig())
    assert result.failed
    assert result.reason == "no-text-leaves"


def test_ascent_width_rule_replay(corpus_pages):
    # replay every returned m_diff: the jump must hold at its detection step
    for page in corpus_pages[:6]:
        s = preprocess(parse_snapshot(json.dumps(page.snapshot)))
        labels = labels_for(s)
        leaves = [n.id for n in s.nodes if n.is_text and labels.get(n.id) == "low"]
        for leaf in leaves[:8]:
            cand = collect_candidates(s, leaf, 1.7)
            if cand.m_diff is None:
                continue
            n = s.node(leaf)
            fired = False
            while n.tag != "body":
                p = s.node(n.parent_id)
                if p.id == cand.m_diff and p.rect.w > n.rect.w * 1.7:
                    fired = True
                    break
                n = p
            assert fired


def test_result_contains_low_density_leaf(corpus_pages):
    for page in corpus_pages:
        s = parse_snapshot(json.dumps(page.snapshot))
        result = run_gce(s, GridConfig())
        assert not result.failed
        pre = preprocess(s)
        labels = labels_for(pre)
        assert any(labels.get(nid) == "low" for nid in result.text_leaf_ids)


def test_scale_invariance_sample(corpus_pages):
    cfg = GridConfig()
    for page in corpus_pages[:4]:
        s = parse_snapshot(json.dumps(page.snapshot))
        base = run_gce(s, cfg).main_node_id
        for k in (0.5, 2.0):
            ck = replace(cfg, window=(cfg.window[0] * k, cfg.window[1] * k))
            assert run_gce(scale_snapshot(s, k), ck).main_node_id == base
