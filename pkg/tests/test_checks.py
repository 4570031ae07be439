import json

import pytest

from matroidkit import constructions, core
from matroidkit.harness import catalog, checks
from matroidkit.harness.catalog import CatalogEntry
from matroidkit.harness.checks import REGISTRY, Options
from matroidkit.harness.profile import Profile
from matroidkit.harness.report import UnknownCheck, verify

SPEC_IDS = """THM-ELASTIC4 THM-MAIN THM-MAXIMAL THM-FANS THM-PW3 THM-MINELTS2 PROP-SMALLN
WW-LB4 WW-PW3 WW-EXISTS5 THM-ROBUST-I THM-ROBUST-II LEM-BIXBY LEM-UNCROSS LEM-ORTH
LEM-3SEP1 LEM-3SEP2 LEM-VERT1 LEM-VERT2 LEM-SEGDEL LEM-TRIANGLE LEM-2SEP LEM-BS45
LEM-SMALLN1 LEM-NELASTIC LEM-CORANK3 LEM-FAN-ELASTIC LEM-EXCEPTION LEM-THETA-ELASTIC
LEM-THETAMAX LEM-THETA-REVEAL LEM-THETA-A LEM-THETA-B LEM-BS61""".split()


def entry(spec):
    M = constructions.named(spec)
    return CatalogEntry(M, "test", spec)


def test_registry_covers_statements():
    assert set(SPEC_IDS) <= set(REGISTRY)
    for cid, chk in REGISTRY.items():
        assert chk.id == cid and chk.scope


def test_theta4_is_filtered():
    (rep,) = verify("THM-ELASTIC4", [entry("THETA(4)")])
    assert (rep.examined, rep.filtered, rep.violations) == (0, 1, [])


def test_elastic4_examines_qualifying_hosts():
    (rep,) = verify("THM-ELASTIC4", [entry("L8"), entry("U(3,7)")])
    assert rep.examined == 2 and rep.passed


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        verify("NOPE", [entry("U(2,4)")])
    with pytest.raises(UnknownCheck):
        verify("LEM-BIXBY,NOPE", [entry("U(2,4)")])


def test_bixby_on_catalog(small_catalog):
    (rep,) = verify("LEM-BIXBY", small_catalog)
    assert rep.passed and rep.examined > 0


def test_violation_payload_is_replayable():
    (rep,) = verify("THM-MAXIMAL", [entry("THETA-(4)")])
    assert rep.violations
    v = rep.violations[0]
    assert set(v) == {"matroid_id", "matroid_lex01", "detail"}
    M = catalog.parse_line(v["matroid_lex01"], "lex01")
    assert M == constructions.named("THETA-(4)")
    json.dumps(rep.as_dict())
    assert list(rep.as_dict()) == ["check_id", "scope", "examined", "filtered", "violations", "elapsed_ms"]


def test_minor_restriction():
    u24 = core.canonical_key(constructions.uniform(2, 4))
    full = verify("THM-MAIN", [entry("L8")])[0]
    only = verify("THM-MAIN", [entry("L8")], Options(minors=(u24,)))[0]
    assert only.examined + only.filtered < full.examined + full.filtered


def test_fail_fast_stops_at_first_violating_entry():
    ents = [entry("THETA-(4)"), entry("THETA(4)*"), entry("THETA-(4)*")]
    reps = verify("THM-MAXIMAL,LEM-CORANK3", ents, fail_fast=True)
    ids = {v["matroid_id"] for r in reps for v in r.violations}
    assert ids == {"THETA-(4)"}


def test_negative_control(monkeypatch):
    """A profile that hides elastic elements must be reported."""
    monkeypatch.setattr(Profile, "elastic", property(lambda self: 0))
    (rep,) = verify("THM-ELASTIC4", [entry("L8")])
    assert not rep.passed


def test_every_check_runs_on_small_inputs():
    ents = [entry(s) for s in ("U(2,4)", "MK4", "THETA(4)", "L8", "W(4)", "U(0,0)", "U(1,3)")]
    for cid in REGISTRY:
        (rep,) = verify(cid, ents)
        assert rep.examined + rep.filtered > 0, cid


def test_timing_flag():
    (rep,) = verify("LEM-BIXBY", [entry("F7")])
    assert rep.elapsed_ms is None
    (rep,) = verify("LEM-BIXBY", [entry("F7")], timing=True)
    assert rep.elapsed_ms >= 0


def test_check_ids_order():
    assert checks.check_ids() == list(REGISTRY)
