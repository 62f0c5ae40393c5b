import pytest

import aoposet
from aoposet import constructions, enumeration, extremal


def test_boolean_lattice():
    b3 = constructions.boolean_lattice(3)
    assert len(b3) == 8
    assert aoposet.height(b3) == 4
    assert aoposet.width(b3) == 3
    value, chains = aoposet.ao(b3)
    assert value == 4
    assert sum(len(c) for c in chains) == 4
    assert not aoposet.is_acyclic(b3)


def test_parse_and_shapes():
    v = aoposet.Poset.parse("poset 3\n1 > 0\n2 > 0\n")
    assert aoposet.find_v_shape(v) == [0, 1, 2]
    assert aoposet.is_n_free(v)
    assert aoposet.Poset.parse(v.to_text()) == v
    assert "0 -> 1;" in v.to_dot()
    with pytest.raises(aoposet.CycleError):
        aoposet.Poset(2, [(1, 0), (0, 1)])
    with pytest.raises(aoposet.ParseError):
        aoposet.Poset.parse("poset 2\n1 >> 0\n")


def test_graph_solver():
    value, kept = aoposet.ao_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert value == 3
    assert len(kept) == 3
    assert aoposet.ao_graph(5, [(i, (i + 1) % 5) for i in range(5)], brute=True)[0] == 3


def test_extremal():
    assert [extremal.lambda_closed(a) for a in range(1, 9)] == [1, 3, 5, 8, 10, 13, 16, 20]
    assert [extremal.x_closed(a) for a in range(1, 9)] == [1, 3, 7, 11, 15, 20, 25, 31]
    assert extremal.lambda_h(5, 2) is None
    b = extremal.ao_Tn_bounds(31)
    assert (b["k"], b["lo"], b["hi"], b["predicted"]) == (3, 5, 8, 8)
    with pytest.raises(aoposet.Unspecified):
        extremal.x_via_max(5)
    assert extremal.x_via_max(5, [(5, 2, 7)]) == 15


def test_constructions():
    r = constructions.x_extremal(4)
    assert r["claimed_size"] == 11
    assert len(r["poset"]) == 11
    assert r["failures"] == []
    n, edges = constructions.planar_c5_join(1)
    assert aoposet.ao_graph(n, edges)[0] == 3


def test_enumeration():
    assert [len(enumeration.enumerate_posets(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]
    assert enumeration.min_ao(enumeration.enumerate_posets(5)) == 3
    assert enumeration.oracle_lambda_h(3, 1, 7) == 3
    assert enumeration.canonical_key(aoposet.Poset.antichain(3)) == "0300"


def test_criterion():
    r = aoposet.run_criterion(10)
    assert r["passed"], r["failures"]
