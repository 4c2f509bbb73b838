import json

import pytest

from quasicat.cli import main
from quasicat.jsonio import dumps, functor_to_json, sset_to_json
from quasicat.cat import cyclic_group_category, identity_functor, nerve, poset_category
from quasicat.simplicial import build_standard, standard_simplex


@pytest.fixture
def delta2(tmp_path):
    p = tmp_path / "delta2.sset.json"
    p.write_text(dumps(sset_to_json(standard_simplex(2))))
    return str(p)


@pytest.fixture
def horn21(tmp_path):
    p = tmp_path / "horn21.sset.json"
    p.write_text(dumps(sset_to_json(build_standard("horn", 2, 1)[0])))
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_pathcat_homsets(capsys, delta2):
    code, rep = run(capsys, ["pathcat", delta2, "--homsets"])
    assert code == 0
    entry = [e for e in rep["presentation"]["homsets"] if e["src"] == "0" and e["tgt"] == "2"]
    assert len(entry) == 1 and len(entry[0]["classes"]) == 1


def test_homset_bounded(capsys, tmp_path):
    N = nerve(cyclic_group_category(2), 2)
    p = tmp_path / "bz2.sset.json"
    p.write_text(dumps(sset_to_json(N)))
    code, rep = run(capsys, ["homset", str(p), "0", "0", "--max-len", "3"])
    assert code == 0
    assert rep["homset"]["partial"] is True
    assert len(rep["homset"]["classes"]) == 2


def test_certify_exit_codes(capsys, delta2, horn21):
    code, rep = run(capsys, ["certify", delta2])
    assert code == 0 and rep["certification"]["verdict"] == "quasi-category"
    code, rep = run(capsys, ["certify", horn21])
    assert code == 1 and rep["certification"]["verdict"] == "counterexample"
    assert rep["certification"]["counterexample"]["k"] == 1


def test_core_and_ho(capsys, tmp_path):
    N = nerve(poset_category(1), 3)
    p = tmp_path / "bchain1.sset.json"
    p.write_text(dumps(sset_to_json(N)))
    code, rep = run(capsys, ["core", str(p)])
    assert code == 0
    assert sum(len(level) for level in rep["core"]["simplices"]) == 2
    code, rep = run(capsys, ["ho", str(p)])
    assert code == 0
    assert len(rep["ho"]["objects"]) == 2 and len(rep["ho"]["arrows"]) == 3


def test_tau0_cli(capsys, tmp_path, delta2):
    pt = tmp_path / "pt.sset.json"
    pt.write_text(dumps(sset_to_json(standard_simplex(0))))
    N = nerve(poset_category(2), 3)
    x = tmp_path / "bchain2.sset.json"
    x.write_text(dumps(sset_to_json(N)))
    code, rep = run(capsys, ["tau0", str(pt), str(x)])
    assert code == 0 and rep["counts"]["classes"] == 3


def test_shuffles_cli(capsys):
    code, rep = run(capsys, ["shuffles", "2", "2"])
    assert code == 0 and rep["counts"]["count"] == 6


def test_cert_build_verify_roundtrip(capsys, tmp_path):
    out = tmp_path / "cert.cert.json"
    code, _ = run(capsys, ["cert-build", "--prism", "2", "1", "1", "--verify", "--out", str(out)])
    assert code == 0
    code, rep = run(capsys, ["cert-verify", str(out)])
    assert code == 0 and rep["verification"]["ok"] is True


def test_cert_build_facets(capsys):
    code, rep = run(capsys, ["cert-build", "--facets", "3", "0", "3", "--verify"])
    assert code == 0
    assert rep["counts"]["steps"] == 2


def test_equiv40_cli(capsys, tmp_path):
    F = identity_functor(cyclic_group_category(2))
    p = tmp_path / "f.fun.json"
    p.write_text(dumps(functor_to_json(F)))
    code, rep = run(capsys, ["equiv40", str(p)])
    assert code == 0 and rep["equivalence"]["verdict"] is True


def test_usage_errors(capsys):
    assert main(["no-such-command"]) == 2
    assert main(["certify", "/nonexistent/file.json"]) == 2


def test_saturate_cli(capsys, horn21):
    code, rep = run(capsys, ["saturate", horn21, "--dim-bound", "2"])
    assert code == 0
    assert rep["saturation"]["horns_attached"] == 8


def test_report_determinism(capsys, delta2, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["certify", delta2, "--out", str(out1)]) == 0
    assert main(["certify", delta2, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    capsys.readouterr()
