import random

import pytest

from conftest import load
from kmc.diagram import Diagram, mirror, parse_gauss, r1_add, r2_add, virtualize
from kmc.generate import random_virtual_diagram
from kmc.laurent import Laurent
from kmc.statesum import (
    all_a_b_circles,
    circles_of_state,
    is_1_complete,
    kauffman_bracket,
    span_bound,
    state_circles,
)

UNKNOT = Diagram(0, (), 1)

# hand-traced oracle values, computed by following the smoothing
# pairings port by port over all states
TREFOIL_BRACKET = Laurent({7: 1, 3: -1, -5: -1})
VIRTUAL_TREFOIL_BRACKET = Laurent({2: 1, 0: 1, -4: -1})
HOPF_BRACKET = Laurent({4: -1, -4: -1})


def test_circles_unknot():
    assert circles_of_state(UNKNOT, 0) == 1


def test_circles_trefoil_states():
    d = load("trefoil.pd")
    a = circles_of_state(d, 0)
    b = circles_of_state(d, 0b111)
    assert (a, b) == (3, 2)  # hand-traced all-A and all-B states
    assert a + b - d.n == 2  # sphere atom for this alternating diagram


def test_circles_virtual_trefoil():
    d = parse_gauss("O1+ O2+ U1+ U2+")
    a, b = all_a_b_circles(d)
    assert a + b - d.n == 1  # the atom is a projective plane
    assert (a, b) == (1, 2)
    # middle states have one circle each (hand-traced)
    assert circles_of_state(d, 0b01) == 1
    assert circles_of_state(d, 0b10) == 1


def test_state_circles_partition():
    d = load("trefoil.pd")
    parts = state_circles(d, 0)
    assert sorted(p for circ in parts for p in circ) == list(range(12))
    assert [c[0] for c in parts] == sorted(c[0] for c in parts)


def test_circles_state_validation():
    with pytest.raises(ValueError):
        circles_of_state(UNKNOT, 1)


def test_bracket_unknot():
    assert kauffman_bracket(UNKNOT) == Laurent.one()


def test_bracket_kinks():
    plus = kauffman_bracket(r1_add(UNKNOT, 0, 1))
    minus = kauffman_bracket(r1_add(UNKNOT, 0, -1))
    assert plus == Laurent({3: -1})
    assert minus == Laurent({-3: -1})


def test_bracket_trefoil():
    d = load("trefoil.pd")
    got = kauffman_bracket(d)
    assert got == TREFOIL_BRACKET
    assert got.span() == 12
    assert got.span() == span_bound(d, 2)


def test_bracket_virtual_trefoil():
    d = parse_gauss("O1+ O2+ U1+ U2+")
    assert kauffman_bracket(d) == VIRTUAL_TREFOIL_BRACKET


def test_bracket_hopf():
    assert kauffman_bracket(load("hopf.pd")) == HOPF_BRACKET


def test_span_bound_values():
    thirteen = Diagram(13, tuple((i, i + 1) for i in range(0, 52, 2)), 0)
    assert span_bound(thirteen, -2) == 44  # 52 - 8
    assert span_bound(UNKNOT, 2) == 0
    assert span_bound(load("trefoil.pd"), 2) == 12


def test_is_1_complete():
    strict, details = is_1_complete(load("trefoil.pd"))
    assert strict and details["span"] == details["bound"] == 12
    kinked = r1_add(load("trefoil.pd"), 0, 1)
    strict_k, det_k = is_1_complete(kinked)
    assert not strict_k
    assert det_k["span"] == 12 and det_k["bound"] == 16
    assert is_1_complete(UNKNOT)[0]


def test_bracket_move_invariance():
    rng = random.Random(21)
    for _ in range(40):
        d = random_virtual_diagram(6, rng)
        br = kauffman_bracket(d)
        s = rng.randrange(d.strand_count())
        t = rng.randrange(d.strand_count())
        assert kauffman_bracket(r2_add(d, s, t)) == br
        assert kauffman_bracket(r1_add(d, s, 1)) == br * Laurent({3: -1})
        assert kauffman_bracket(r1_add(d, s, -1)) == br * Laurent({-3: -1})
        assert kauffman_bracket(mirror(d)) == br.substitute_inverse()
        if d.n:
            assert kauffman_bracket(virtualize(d, rng.randrange(d.n))) == br


def test_span_bound_random():
    rng = random.Random(22)
    for _ in range(80):
        d = random_virtual_diagram(8, rng)
        a, b = all_a_b_circles(d)
        chi = a + b - d.n
        poly = kauffman_bracket(d)
        if poly:
            assert poly.span() <= span_bound(d, chi)


def test_fold_clasp_unknot_bracket():
    # folding the unknot over itself leaves the bracket at 1 (hand-traced:
    # states contribute A^2 d + A^-2 d + d^2 + 1 with d = -A^2 - A^-2)
    clasp = r2_add(UNKNOT, 0, 0)
    assert clasp.n == 2
    assert kauffman_bracket(clasp) == Laurent.one()


def test_two_loop_clasp_bracket_is_loop_value():
    from kmc.laurent import LOOP

    unlink = Diagram(0, (), 2)
    clasped = r2_add(unlink, 0, 1)
    assert kauffman_bracket(clasped) == LOOP
