import os
from pathlib import Path

import pytest

import pydox

FIXTURES = Path(os.environ.get("DOX_FIXTURE_DIR", Path(__file__).resolve().parents[1] / "fixtures"))


def load(name):
    return pydox.load(str(FIXTURES / name))


def test_parse_and_emit_round_trip():
    p = load("quantum_plane.dox")
    assert p.generators == ["x1", "x2"]
    assert p.field == "Q(i)"
    assert pydox.parse(p.emit()).emit() == p.emit()


def test_nakayama_quantum_plane_is_calabi_yau():
    s = pydox.Session(load("quantum_plane.dox"))
    rep = s.nakayama()
    assert rep["calabi_yau"]
    assert rep["ok"]
    assert rep["L"] == [[{"re": "0", "im": "-1"}, {"re": "0", "im": "0"}],
                        [{"re": "0", "im": "0"}, {"re": "0", "im": "1"}]]


def test_jordan_muB():
    s = pydox.Session(load("jordan_kx.dox"))
    mu = s.nakayama()["muB"]
    assert mu[1][0] == {"re": "2", "im": "0"}
    assert mu[1][1] == {"re": "1", "im": "0"}


def test_superpotential_checks():
    rep = pydox.Session(load("quantum_plane.dox")).superpotential()
    assert rep["ok"]
    assert rep["derivation_span_dim"] == rep["R_hat_dim"] == 6


def test_run_exit_codes():
    doc, code = pydox.run("verify", load("trimmed_kx.dox"))
    assert code == 0 and doc["ok"]
    text = (FIXTURES / "quantum_plane.dox").read_text().replace("p11 0", "p11 1")
    doc, code = pydox.run("validate", pydox.parse(text))
    assert code == 1
    assert not doc["ok"]


def test_parse_error_raises():
    with pytest.raises(pydox.Error, match="FieldMismatch"):
        pydox.parse("field Q\ngens x\np12 i\np11 0\nsigma x = [[x, 0], [0, x]]\n")


def test_renderers():
    doc = pydox.Session(load("trimmed_kx.dox")).nakayama()
    assert "[ok]" in pydox.render_text(doc)
    assert "pmatrix" in pydox.render_latex(doc)
