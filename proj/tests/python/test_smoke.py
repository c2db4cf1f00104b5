import os

import pytest

import lognet as ln

DATA = os.environ.get(
    "LOGNET_DATA",
    os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data"),
)


def test_build_and_readout_round_trip():
    rules = ln.RuleBase.parse("if a, not b then c\nif b then d\n")
    net = ln.build(rules)
    assert str(ln.readout(net)) == str(ln.canonicalize(rules))


def test_infer_reports_states_and_blocks():
    net = ln.build(ln.RuleBase.parse("if a, not b then c\n"))
    r = ln.infer(net, {"a": True})
    assert r.states["c"].value == ln.Truth.TRUE
    assert r.rounds == 1

    held = ln.infer(net, {"a": True, "b": True})
    assert held.states["c"].value == ln.Truth.UNKNOWN
    assert held.blocked


def test_contradiction_is_flagged():
    net = ln.build(ln.RuleBase.parse("if a then c\nif b then not c\n"))
    r = ln.infer(net, {"a": True, "b": True})
    assert r.states["c"].contradictory
    assert r.contradictions == {"c"}


def test_explain_names_the_deriving_link():
    net = ln.build(ln.RuleBase.load(os.path.join(DATA, "animal.rules")))
    r = ln.infer(net, {"hair": True, "predator": True})
    assert "by e" in ln.explain(net, r, "beast")


def test_serialize_cycle_is_stable():
    net = ln.build(ln.RuleBase.parse("if a, not b unless (d and e) then c\n"))
    text = ln.serialize(net)
    assert ln.serialize(ln.deserialize(text)) == text
    assert "digraph network" in ln.to_dot(net)


def test_remove_rule_reflects_in_readout():
    rules = ln.RuleBase.parse("if a then c\nif b then c\n")
    net = ln.build(rules)
    ln.remove_rule(net, ln.Rule.parse("if a then c"))
    assert str(ln.readout(net)) == "if b then c\n"


def test_gates_all_verify():
    names = ln.gate_names()
    assert len(names) == 6
    assert all(ln.gate_check(name) for name in names)
    assert "PASS" in ln.gate_table("xor")
    assert ln.gate_network("xor").neuron_count() == 3


def test_neurule_sums():
    sum_, out = ln.evaluate(ln.bone_neurule(), [1, -1, 1, 1, -1, 1])
    assert abs(sum_ - 7.2) < 1e-9
    assert out
    assert "night-pain-19.6" in ln.neurule_demo()


def test_memorization_full_recall():
    records = ln.select_slice(
        ln.load_mushroom(os.path.join(DATA, "mushroom.csv"), 10), 25, 1
    )
    report = ln.memorize(records)
    assert report.final_recall == 1.0
    assert report.steps[-1].recalled == 25


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ln.LognetError):
        ln.RuleBase.parse("if then c")
    with pytest.raises(ln.LognetError):
        ln.deserialize("{}")
