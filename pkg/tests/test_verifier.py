import json

import pytest

import irgraphs as ig


@pytest.fixture(scope="module")
def gprime():
    return ig.build_gprime()[0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_gn_passes(n):
    report = ig.verify_gn(n)
    assert report.verdict == "pass"
    assert report.findings == []
    assert report.scanned == 1


def test_verify_gn_deterministic_payload():
    a = ig.verify_gn(2).to_json_dict(include_timing=False)
    b = ig.verify_gn(2).to_json_dict(include_timing=False)
    assert json.dumps(a, sort_keys=False) == json.dumps(b, sort_keys=False)
    assert list(a) == ["check", "verdict", "findings", "scanned"]


def test_report_schema_with_timing(gprime):
    payload = ig.check_flip_theorem(gprime).to_json_dict()
    assert list(payload) == ["check", "verdict", "findings", "scanned", "elapsed_ms"]
    assert payload["verdict"] == "pass"


def test_flip_theorem_gprime_and_k5(gprime):
    assert ig.check_flip_theorem(gprime).verdict == "pass"
    assert ig.check_flip_theorem(ig.complete_graph(5)).verdict == "pass"


def test_flip_theorem_respects_cap(gprime):
    report = ig.check_flip_theorem(gprime, flip_cap=1)
    assert report.verdict == "pass"


def test_c4_lemma_verdicts(gprime):
    # the 4-cycle has an IR-set inducing exactly one edge and a connected
    # reconfiguration graph, so the check must find an induced 4-cycle
    assert ig.check_c4_lemma(ig.cycle_graph(4)).verdict == "pass"
    # hypotheses fail here: double-star reconfiguration graphs have no C4
    assert ig.check_c4_lemma(gprime).verdict == "skipped"
    assert ig.check_c4_lemma(ig.complete_graph(4)).verdict == "skipped"


def test_c4_lemma_disconnected_ir_graph_skips():
    # the 6-cycle has exactly two IR-sets, the alternating triples, which
    # differ in three elements: its IR-graph is two isolated nodes
    g = ig.cycle_graph(6)
    irg = ig.build_ir_graph(g)
    assert not ig.is_connected(irg.as_graph())
    assert ig.check_c4_lemma(g).verdict == "skipped"


def test_diameter_lemma_verdicts(gprime):
    assert ig.check_diameter_lemma(gprime).verdict == "pass"
    assert ig.check_diameter_lemma(ig.build_gn(2)[0]).verdict == "pass"
    for n in (2, 3, 5):
        assert ig.check_diameter_lemma(ig.complete_graph(n)).verdict == "skipped"


def test_diameter_lemma_bound_is_tight(gprime):
    # busiest IR-set of the template graph has exactly three busy members
    # and its reconfiguration graph has diameter exactly 3
    irg = ig.build_ir_graph(gprime)
    assert ig.diameter(irg.as_graph()) == 3


def test_audit_leaf_clusters_gprime(gprime):
    irg = ig.build_ir_graph(gprime)
    report = ig.audit_leaf_clusters(irg)
    assert report.verdict == "pass"


def test_audit_leaf_clusters_gn3():
    g, _ = ig.build_gn(3)
    report = ig.audit_leaf_clusters(ig.build_ir_graph(g))
    assert report.verdict == "pass"


def test_audit_skips_non_double_star():
    report = ig.audit_leaf_clusters(ig.build_ir_graph(ig.complete_graph(3)))
    assert report.verdict == "skipped"


def test_combine_verdicts():
    assert ig.combine_verdicts([]) == "skipped"
    assert ig.combine_verdicts(["skipped", "pass"]) == "pass"
    assert ig.combine_verdicts(["pass", "fail", "skipped"]) == "fail"


def test_scan_finds_double_star(gprime):
    line = ig.to_graph6(gprime)
    report = ig.conjecture_scan([line], [ig.target_double_star(2, 2)])
    assert report.scanned == 1
    assert len(report.matches) == 1
    assert report.matches[0].graph == line
    assert report.matches[0].shape == "DoubleStar(2,2)"
    assert report.shape_tally == {"DoubleStar(2,2)": 1}


def test_scan_counts_malformed_lines(gprime):
    lines = ["not graph6 at all!", ig.to_graph6(gprime), ""]
    report = ig.conjecture_scan(lines, [ig.target_path(3)])
    assert report.errors == 1
    assert report.scanned == 1


def test_scan_connected_only_filter():
    disconnected = ig.to_graph6(ig.graph_from_edges(3, [(0, 1)]))
    report = ig.conjecture_scan([disconnected], [ig.target_path(3)], connected_only=True)
    assert report.scanned == 0 and report.errors == 0
    report = ig.conjecture_scan([disconnected], [ig.target_path(3)])
    assert report.scanned == 1


def test_scan_tally_sums_to_scanned(connected_g6_upto6):
    sample = connected_g6_upto6[::5]
    report = ig.conjecture_scan(sample, [ig.target_cycle(5)])
    assert sum(report.shape_tally.values()) == report.scanned == len(sample)
    assert len({m.graph for m in report.matches}) <= report.scanned


def test_scan_workers_agree(connected_g6_upto6):
    sample = connected_g6_upto6[:40]
    targets = [ig.target_path(3), ig.target_cycle(5), ig.target_tree_diam(3)]
    serial = ig.conjecture_scan(sample, targets, workers=1)
    parallel = ig.conjecture_scan(sample, targets, workers=2)
    assert serial.to_json_dict(include_timing=False) == parallel.to_json_dict(
        include_timing=False
    )


def test_scan_node_cap_counts_as_error(gprime):
    report = ig.conjecture_scan([ig.to_graph6(gprime)], [ig.target_path(3)], node_cap=2)
    assert report.errors == 1 and report.scanned == 0


def test_scan_report_json_schema(gprime):
    payload = ig.conjecture_scan(
        [ig.to_graph6(gprime)], [ig.target_double_star(2, 2)]
    ).to_json_dict(include_timing=False)
    assert list(payload) == ["check", "scanned", "matches", "errors", "shape_tally"]
    assert payload["matches"][0] == {
        "graph": ig.to_graph6(gprime),
        "shape": "DoubleStar(2,2)",
        "target": "DoubleStar(2,2)",
    }


def test_targets_match_semantically_not_by_tag():
    # tiny paths classify as stars or double stars, yet the targets must
    # still recognize them, and must reject non-isomorphic same-order trees
    p3 = ig.path_graph(3)
    assert ig.target_path(3).matches(p3)
    assert ig.classify_shape(p3) == ig.Shape.star(2)
    p4 = ig.path_graph(4)
    assert ig.target_path(4).matches(p4)
    assert not ig.target_path(4).matches(ig.graph_from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert ig.target_tree_diam(3).matches(ig.build_double_star(2, 2))
    assert not ig.target_tree_diam(3).matches(ig.cycle_graph(4))
    assert ig.target_cycle(5).matches(ig.cycle_graph(5))
    assert not ig.target_cycle(5).matches(ig.path_graph(5))


def test_target_parameter_validation():
    with pytest.raises(ig.InvalidParameter):
        ig.target_path(0)
    with pytest.raises(ig.InvalidParameter):
        ig.target_cycle(2)
    with pytest.raises(ig.InvalidParameter):
        ig.target_double_star(0, 1)
    with pytest.raises(ig.InvalidParameter):
        ig.target_tree_diam(-1)


def test_finding_payload_roundtrips_json():
    finding = ig.Finding("gn-1", {"expected": 3, "got": 2}, "wrong IR number")
    assert json.loads(json.dumps(finding.to_json_dict())) == {
        "graph": "gn-1",
        "witness": {"expected": 3, "got": 2},
        "message": "wrong IR number",
    }
