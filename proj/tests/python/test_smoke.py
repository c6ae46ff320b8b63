import os
import pathlib

import pytest

import transknot

FIXTURES = pathlib.Path(os.environ.get("TRANSKNOT_FIXTURES", pathlib.Path(__file__).parents[2] / "fixtures"))


def test_braid_basics():
    b = transknot.Braid.parse("B2: 1 1 1")
    assert b.strands == 2
    assert b.letters == [1, 1, 1]
    assert str(b) == "B2: 1 1 1"
    assert b.self_linking() == 1
    assert b.components() == 1
    assert b.negative_stabilize().self_linking() == -1
    assert (b * b.inverse()).free_reduce() == transknot.Braid(2)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        transknot.Braid.parse("B3: 1 -2 q")


def test_alexander_and_covers():
    trefoil = transknot.Braid(2, [1, 1, 1])
    assert trefoil.alexander() == "t - 1 + t^-1"
    assert trefoil.cover_order(2) == 3
    assert trefoil.cover_order(3) == 4
    assert transknot.Braid.parse("B3: 1 -2 1 -2").cover_order(2) == 5
    with pytest.raises(ValueError):
        transknot.Braid(2, [1, 1]).alexander()


def test_certificates():
    text = transknot.certify(transknot.Braid.parse("B3: 1 1 1 -2"), label="smoke")
    assert text.startswith("otw-cert v1\n")
    ok, _ = transknot.verify_certificate(text)
    assert ok
    assert transknot.certify(transknot.Braid(2, [1, 1, 1])) is None


def test_equivalence():
    r = transknot.equivalent(transknot.Braid(2, [1, 1, 1]), transknot.Braid(3, [2, 1, 1, 1]))
    assert r["result"] == "equivalent"
    r = transknot.equivalent(transknot.Braid(1), transknot.Braid(2, [-1]))
    assert r["result"] == "distinct-self-linking"


def test_fronts():
    gamma = transknot.front_invariants((FIXTURES / "gamma.front").read_text())
    assert gamma["tb"] == -2
    unknot = "b 1; d 1"
    assert transknot.front_invariants(unknot) == {
        "components": 1, "cusps": 2, "crossings": 0, "writhe": 0, "tb": -1, "r": 0, "sl": -1,
    }
    plus = transknot.front_invariants(transknot.stabilize_front(unknot, "+", 0, 1))
    assert (plus["tb"], plus["r"], plus["sl"]) == (-2, 1, -3)
    with pytest.raises(ValueError):
        transknot.front_invariants("d 1")


def test_contact():
    assert transknot.contact_density("std", 0.3, -1.0, 2.0) == pytest.approx(1.0, abs=1e-6)
    assert transknot.contact_density("ot", 0.0, 0.0, 0.0, euclidean=True) == pytest.approx(2.0, abs=1e-6)
    report = transknot.contact_check("sym")
    assert report["passed"] and report["samples"] == 25000
