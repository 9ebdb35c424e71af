import json
import os
from pathlib import Path

import pytest

import oriftl

CONFIG_DIR = Path(os.environ.get("ORIFTL_CONFIG_DIR", Path(__file__).resolve().parents[2] / "configs"))


@pytest.fixture(scope="module")
def ex65():
    return oriftl.Config.from_file(str(CONFIG_DIR / "ex65.json"))


@pytest.fixture(scope="module")
def generic():
    return oriftl.Config.from_file(str(CONFIG_DIR / "generic.json"))


def test_validate(ex65):
    assert ex65.validate() == []
    assert ex65.e == 5


def test_config_round_trip(ex65):
    again = oriftl.Config.from_dict(ex65.to_dict())
    assert again.to_dict() == ex65.to_dict()


def test_bad_config():
    with pytest.raises(ValueError):
        oriftl.Config.from_dict({"e": 7})


def test_shapes_and_counts():
    assert len(oriftl.shapes(4)) == 8
    assert [sum(oriftl.count_std(n, s) for s in oriftl.shapes(n)) for n in (1, 2, 3)] == [3, 7, 16]
    for s in oriftl.shapes(4):
        assert len(oriftl.tableaux(4, s)) == oriftl.count_std(4, s)


def test_degree_agrees(ex65):
    for s in oriftl.shapes(5):
        for t in oriftl.tableaux(5, s):
            tiles, klr = oriftl.degree(t, ex65)
            assert tiles == klr
            assert len(oriftl.residues(t, ex65)) == 5
            assert all(0 <= g <= 5 for g in oriftl.reduced_word(t, ex65))


def test_delta_and_factorize(ex65):
    d = oriftl.delta_matrix(8, ex65)
    n_mat, a_mat = oriftl.factorize(d)
    dec = oriftl.decomposition_matrix(8, ex65)
    assert dec["conjectural"] is True
    assert dec["shapes"] == n_mat["shapes"]
    assert dec["entries"] == n_mat["entries"]
    json.dumps(a_mat)


def test_generic_blocks_are_singletons(generic):
    assert all(len(b) == 1 for b in oriftl.blocks(5, generic))


def test_calibrated(ex65):
    rep = oriftl.calibrated_check(4, "(2,alpha1)", ex65, seed=3)
    assert rep["pass"] is True
    assert rep["dim"] == oriftl.count_std(4, "(2,alpha1)")


def test_cli_in_process():
    code, out, _ = oriftl.run_cli(["shapes", "--n", "2"])
    assert code == 0
    assert out.splitlines()[0] == "shape\tcount"
    assert len(out.strip().splitlines()) == 1 + len(oriftl.shapes(2))
    code, _, _ = oriftl.run_cli(["delta", "--n", "3"])
    assert code == 2
