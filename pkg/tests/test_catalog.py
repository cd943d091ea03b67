import json
from fractions import Fraction

import pytest

from homtrias import algebra, catalog
from homtrias.algebra import Op


def test_counts():
    assert len(catalog.list_entries()) == 34
    assert len(catalog.list_entries(2)) == 13
    assert len(catalog.list_entries(3)) == 21


def test_id_normalisation():
    assert catalog.get("th_2^4").id == "TH2.4"
    with pytest.raises(KeyError):
        catalog.get("TH4.1")


def test_th2_9_lines():
    A = catalog.instantiate("TH2.9")
    assert algebra.multiply(A, Op.MIDDLE, (1, 0), (0, 1)) == (1, 0)
    assert A.alpha.image(1) == (0, -1)


def test_th3_9_substitution():
    A = catalog.instantiate("TH3.9", {"a": 1, "b": 0, "d": 0})
    e2 = (0, 1, 0)
    assert algebra.multiply(A, Op.LEFT, e2, e2) == (0, 1, 0)
    assert algebra.multiply(A, Op.MIDDLE, e2, e2) == (0, 0, 1)


def test_th3_20_twist_is_nilpotent():
    A = catalog.instantiate("TH3.20")
    assert A.alpha.image(0) == (0, 0, 0)
    assert A.alpha.image(1) == (1, 0, 0) and A.alpha.image(2) == (0, 1, 0)


def test_parameters():
    assert catalog.get("TH3.9").params == ("a", "b", "d")
    assert len(catalog.sample_assignments("TH3.9")) == 3
    assert catalog.sample_assignments("TH2.1") == [{}]
    with pytest.raises(KeyError):
        catalog.instantiate("TH3.3", {"z": 1})
    A = catalog.instantiate("TH3.3", {"a": Fraction(1, 2)})
    assert algebra.multiply(A, Op.LEFT, (1, 0, 0), (1, 0, 0)) == (0, Fraction(1, 2), 0)


def test_every_line_used_once():
    for entry in catalog.ENTRIES.values():
        m = entry.manifest()
        assert sum(m["products"].values()) + m["alpha_lines"] == m["printed_lines"]


def test_resolutions_are_explicit():
    # without the resolution the duplicate line is rejected by the table constructor
    for eid, line in (("TH2.13", 3), ("TH3.5", 8)):
        entry = catalog.get(eid)
        (idx, printed, used, note), = entry.resolutions
        assert idx == line and printed == entry.lines[idx] and used != printed and note
        raw = catalog.CatalogEntry(entry.id, entry.dim, entry.lines, entry.params, entry.samples)
        if eid == "TH2.13":
            with pytest.raises(ValueError, match="duplicate"):
                raw.instantiate()


@pytest.mark.parametrize("eid", catalog.list_entries())
def test_round_trip(eid):
    A = catalog.instantiate(eid)
    assert algebra.loads(algebra.dumps(A)) == A


def test_export_matches_shipped_data(tmp_path):
    catalog.export(tmp_path)
    for eid in catalog.list_entries():
        shipped = (catalog.data_dir() / f"{eid}.json").read_bytes()
        assert (tmp_path / f"{eid}.json").read_bytes() == shipped


def test_pattern_layout_is_transposed():
    # printed row 1 of TH2.1's centroid is "0 0", row 2 is "c21 0": the map sends e2 to c·e1
    pattern = catalog.CENTROID_PATTERNS["TH2.1"]
    (v,) = pattern.basis()
    assert v == (0, 1, 0, 0)


def test_verify_collects_instead_of_raising():
    report = catalog.verify_catalog()
    assert len({c.entry for c in report.checks}) == 34
    for c in report.checks:
        failed = [r.identity for r in c.axioms if not r.passed]
        listed = {d.detail["identity"] for d in report.discrepancies
                  if d.label == c.label and d.kind == "axiom-failure"}
        assert set(failed) == listed
    json.dumps(report.to_json())


def test_committed_report_is_current():
    path = catalog.data_dir().parents[2] / "reports" / "discrepancy-report.json"
    if not path.exists():
        pytest.skip("report not generated")
    assert json.loads(path.read_text()) == json.loads(json.dumps(catalog.verify_catalog().to_json()))
