import json

from planesat import harness
from planesat.drawing import decode_drawing
from planesat.graph import double_wheel
from planesat.saturation import is_unlabeled_saturated


def test_infrastructure_errors_are_distinguished(monkeypatch, tmp_path):
    def boom(case, ev):
        raise RuntimeError("disk on fire")

    monkeypatch.setitem(harness.CASES, "broken", boom)
    case = harness.run_case("broken", outdir=tmp_path)
    assert case.verdict == "error" and "disk on fire" in case.error
    assert json.loads((tmp_path / "broken" / "case.json").read_text())["verdict"] == "error"


def test_failed_check_gives_fail(monkeypatch):
    monkeypatch.setitem(harness.CASES, "false", lambda case, ev: case.check("always false", False))
    assert harness.run_case("false").verdict == "fail"


def test_evidence_is_recheckable(tmp_path):
    case = harness.run_case("prop-fig7", outdir=tmp_path)
    assert case.verdict == "pass" and len(case.evidence) == 3
    for path in case.evidence:
        h = decode_drawing(open(path, "rb").read())
        assert is_unlabeled_saturated(h, double_wheel(h.n)[0]).saturated


def test_upper_instances_fixed():
    sizes = [g.n for g, _ in harness.upper_instances()]
    assert len(sizes) == 20 and min(sizes) >= 47 and max(sizes) <= 60
