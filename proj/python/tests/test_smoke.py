import json

import pytest

import f1cones


def test_fixture_round_trip_is_byte_identical():
    for name in f1cones.fixture_names():
        text = json.dumps(f1cones.fixture(name))
        once = f1cones.canonicalize(text)
        assert f1cones.canonicalize(once) == once


def test_checks_on_p1_and_a1():
    p1 = f1cones.fixture("p1")
    assert f1cones.check("proper", p1)["holds"]
    assert f1cones.check("separated", p1)["holds"]
    verdict = f1cones.check("proper", f1cones.fixture("a1"))
    assert not verdict["holds"]
    assert verdict["witness"]["kind"] == "uncovered_direction"
    assert verdict["witness"]["vectors"] == [[1]]


def test_doubled_line_witness():
    verdict = f1cones.check("separated", f1cones.fixture("doubled_line"))
    assert not verdict["holds"]
    assert verdict["witness"]["cones"] == [0, 1]


def test_describe_counts_points():
    assert len(f1cones.describe(f1cones.fixture("a1"))["complex"]["points"]) == 2
    assert len(f1cones.describe(f1cones.fixture("p1"))["complex"]["points"]) == 3


def test_normalize_cusp():
    cusp = {"format_version": 1, "kind": "algebra",
            "payload": {"mode": "embedded", "group": {"rank": 1}, "generators": [[2], [3]]}}
    algebra, was_normal = f1cones.normalize(cusp)
    assert not was_normal
    assert algebra["payload"]["generators"] == [[1]]


def test_blow_up_plane():
    out = f1cones.blow_up(f1cones.fixture("a2"), [[[1, 0], [0, 1]]])
    assert len(out["complex"]["payload"]["cones"]) == 2
    assert f1cones.check("overconvergent", out["morphism"])["holds"]
    assert out["chart_was_normal"] == [True, True]


def test_completion_and_krull_warning():
    formal, warnings = f1cones.complete(f1cones.fixture("a2"), [[[1, 0]]])
    assert warnings == []
    assert formal["payload"]["ideals"][0] is not None
    nonreduced = {"format_version": 1, "kind": "algebra",
                  "payload": {"mode": "presented", "generator_count": 2, "relations": [[[1, 1], [0, 1]]]}}
    _, warnings = f1cones.complete(nonreduced, [{"exponents": [[1, 0]]}])
    assert warnings == [0]


def test_algebraise_tate_loop_reports_monodromy():
    with pytest.raises(f1cones.F1ConesError) as info:
        f1cones.algebraise(f1cones.fixture("tate_loop"))
    assert info.value.kind == "NonConstantCharacters"
    assert f1cones.monodromy(f1cones.fixture("tate_loop"))[0]["matrix"] == [[1, 1], [0, 1]]
    chain = f1cones.fixture("tate_chain_3")
    atlas = f1cones.algebraise(chain)
    assert atlas["kind"] == "formal_scheme_atlas"
    assert f1cones.sigma(atlas) == chain


def test_expansion_stages():
    cone = {"format_version": 1, "kind": "cone",
            "payload": {"cone": {"group": {"rank": 2}, "inequalities": [[-1, 0], [1, 1]]}, "punctures": []}}
    stages = f1cones.expansion_stages(cone, "Sur", [-2, 0], [[0, 1]], 2)
    assert [len(s["payload"]["cones"]) for s in stages] == [2, 3]


def test_jet_oracle_agrees_with_criteria():
    for name in ("p1", "a1", "doubled_line", "tate_loop"):
        doc = f1cones.fixture(name)
        report = f1cones.jet_oracle(doc, "Z", 4)
        assert report["separated"]["holds"] == f1cones.check("separated", doc)["holds"]
        assert report["overconvergent"]["holds"] == f1cones.check("overconvergent", doc)["holds"]


def test_errors_carry_their_kind():
    with pytest.raises(f1cones.F1ConesError) as info:
        f1cones.canonicalize('{"format_version": 1, "kind": "complex"')
    assert info.value.kind == "SchemaError"
    with pytest.raises(f1cones.F1ConesError) as info:
        f1cones.check("flat", f1cones.fixture("p1"))
    assert info.value.kind == "UnknownCommand"
