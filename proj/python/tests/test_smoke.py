import pathlib

import pytest

import multlab

RINGS = pathlib.Path(__file__).resolve().parents[2] / "rings"


def test_corpus_is_bundled():
    names = multlab.corpus_names()
    assert "gor5" in names and "fiber" in names
    assert multlab.corpus_text("gor5") == (RINGS / "gor5.ring").read_text()


def test_hilbert_and_betti():
    ring = "vars x y\nrel x^2\nrel y^2\n"
    assert multlab.hilbert_function(ring) == [1, 2, 1]
    assert multlab.betti_numbers(ring, 4) == [1, 2, 3, 4, 5]


def test_classify_gorenstein_minimal_multiplicity():
    c = multlab.classify(multlab.corpus_text("gor5"))
    assert c["multiplicity"] == 5
    assert c["min_mult_g"] and not c["is_ci"]


def test_linearity_defect_of_cubic():
    assert multlab.linearity_defect("vars x\nrel x^3\n", 6) == ("lower_bound", 5)
    assert multlab.linearity_defect("vars x y\nrel x^2\nrel y^2\n")[0] == "zero"


def test_theorems_consistent_on_fiber_product():
    ring = multlab.corpus_text("fiber")
    assert multlab.theorem_consistent(ring, 1)
    assert multlab.theorem_consistent(ring, 2)


def test_errors_raise():
    with pytest.raises(multlab.MultlabError):
        multlab.hilbert_function("vars x y\nrel x + y^2\n")
    with pytest.raises(multlab.MultlabError):
        multlab.theorem_consistent(multlab.corpus_text("gor5"), 3)


def test_cli_round_trip():
    code, report = multlab.run_json("theorem1", str(RINGS / "fiber.ring"))
    assert code == 0
    assert report["theorem1"]["consistent"] is True
    code, _, err = multlab.run_cli(["hilbert", "missing.ring"])
    assert code == 2 and "cannot open" in err
