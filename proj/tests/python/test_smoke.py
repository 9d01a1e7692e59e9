import os

import pytest

import netop

DATA = os.environ.get("NETOP_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_block_swap():
    assert netop.block_swap(4, 3) == [4, 5, 6, 7, 1, 2, 3]
    assert netop.compose_permutations([2, 3, 1], [3, 1, 2]) == [1, 2, 3]


def test_normalize():
    assert netop.normalize("e34 e12", 4) == "e12 e34"
    assert netop.normalize("e12 e13 e12", 4, variety="gmon") == "e12 e13"
    assert netop.words_equal("e12 e34", "e34 e12", 4)
    assert not netop.words_equal("e12 e13", "e13 e12", 4)
    with pytest.raises(netop.NetopError):
        netop.normalize("e19", 4)


def test_nine_node_action():
    op = {"profile": [3, 4, 2], "g": [[1, 2], [3, 6]]}
    args = [
        {"model": "sg", "n": 3, "payload": [[2, 3]]},
        {"model": "sg", "n": 4, "payload": [[1, 2], [2, 3], [3, 4]]},
        {"model": "sg", "n": 2, "payload": [[1, 2]]},
    ]
    out = netop.act(op, args)
    assert out["n"] == 9
    assert out["payload"] == [[1, 2], [2, 3], [3, 6], [4, 5], [5, 6], [6, 7], [8, 9]]


def test_petri():
    with open(os.path.join(DATA, "catalyst_transport.petri")) as f:
        assert netop.PetriNet(f.read()).catalysts() == ["a", "b"]
    net = netop.PetriNet("tau1: a + b -> c\ntau2: c -> 2b\n")
    assert net.fire("2a+b", "tau1") == "a+c"
    assert net.fire("a+c", "tau2") == "a+2b"
    assert sorted(net.reachable("2a+b", 2)) == ["2a+b", "a+2b", "a+c"]
    with pytest.raises(netop.NetopError):
        net.fire("b", "tau1")


def test_suites_and_cli():
    reports = netop.run_suite("petri", 20, 1)
    assert reports and all(not failures for _, _, failures in reports)
    code, out, _ = netop.cli(["petri", os.path.join(DATA, "token_game.petri"), "reach",
                              "--marking", "0", "--depth", "3"])
    assert code == 0 and out == "0\n"
