import pytest

import _fldt


AB_STAR = """\
alphabet: a b
states: q0 q1
initial: q0
final: q0
trans: q0 a q1
trans: q1 b q0
"""

SOLVABLE = "domain: 1\n1: ab | ab\n"
UNSOLVABLE = "domain: 1\n1: a | aa\n"


def test_nfa_roundtrip_and_queries():
    a = _fldt.Nfa.parse(AB_STAR)
    assert a.accepts("abab")
    assert not a.accepts("aba")
    assert a.shortest_member() == "_"
    assert a.enumerate(4) == ["_", "ab", "abab"]
    b = _fldt.Nfa.parse(str(a))
    assert b.accepts("ab")


def test_nfa_parse_error():
    with pytest.raises(_fldt.ParseError):
        _fldt.Nfa.parse("states: q0\n")


def test_square_decision():
    a = _fldt.Nfa.parse(AB_STAR)
    rep = _fldt.has_square(a)
    assert rep["answer"] is True
    assert rep["witness"] == "ab"
    assert rep["member"] == "abab"
    assert rep["method"]


def test_roots_return_automata():
    a = _fldt.Nfa.parse(AB_STAR)
    root = _fldt.nth_root(a, 2)
    assert root.accepts("ab")
    assert not root.accepts("a")
    star = _fldt.star_root(a)
    assert star.accepts("abab")


def test_pcp_solver():
    solv = _fldt.PcpInstance.parse(SOLVABLE)
    assert solv.solve_bounded(4) == "1"
    unsolv = _fldt.PcpInstance.parse(UNSOLVABLE)
    assert unsolv.solve_bounded(6) is None


def test_build_and_scan_pipeline():
    solv = _fldt.PcpInstance.parse(SOLVABLE)
    l2 = _fldt.build_L2(solv)
    assert l2.linear
    assert l2.membership("ab1ab1")
    scan = _fldt.scan_for_form_cfg(l2, "square", max_len=10)
    assert scan["verdict"] == "yes"
    assert scan["member"] == "ab1ab1"

    unsolv = _fldt.PcpInstance.parse(UNSOLVABLE)
    scan2 = _fldt.scan_for_form_cfg(_fldt.build_L2(unsolv), "square", max_len=10)
    assert scan2["verdict"] == "no_up_to_bound"


def test_overflow_automaton_scan():
    solv = _fldt.PcpInstance.parse(SOLVABLE)
    auto = _fldt.marked_shuffle_automaton(solv)
    scan = _fldt.scan_for_form(auto, "marked_shuffle", max_len=8)
    assert scan["verdict"] == "yes"


def test_precondition_error_maps_to_python():
    plain = _fldt.Nfa.parse(AB_STAR)
    with pytest.raises(_fldt.PreconditionError):
        _fldt.has_marked_copy(plain)
