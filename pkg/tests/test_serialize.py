"""JSON schema round trips and diagnostics."""

from __future__ import annotations

import pytest

import groupcodes as gc
from groupcodes import serialize as ser
from groupcodes.errors import SchemaError


def test_alphabet_round_trip_table(z4):
    doc = ser.alphabet_to_json(z4)
    assert doc["kind"] == "table" and doc["order"] == 4
    again = ser.alphabet_from_json(doc)
    assert again == z4


def test_alphabet_cyclic_and_product_shorthands():
    g = ser.alphabet_from_json({"kind": "cyclic", "modulus": 5})
    assert g.order == 5 and g.table[2][4] == 1
    prod = ser.alphabet_from_json(
        {"kind": "product", "factors": [{"kind": "cyclic", "modulus": 2},
                                        {"kind": "cyclic", "modulus": 3}]})
    assert prod.order == 6


@pytest.mark.parametrize("doc,field", [
    ({"kind": "cyclic", "modulus": 0}, "modulus"),
    ({"kind": "product", "factors": []}, "factors"),
    ({"kind": "table"}, "table"),
    ({"kind": "table", "table": [[0, 1], [1, 1]]}, "table"),
    ({"kind": "nope"}, "kind"),
    ("not-an-object", "alphabet"),
])
def test_alphabet_schema_errors(doc, field):
    with pytest.raises(SchemaError):
        ser.alphabet_from_json(doc)


def test_code_round_trip_plain(z4):
    C = gc.Code.from_words(z4, 2, [(0, 0), (1, 2)])
    doc = ser.code_to_json(C)
    assert "group" not in doc
    assert ser.code_from_json(doc) == C


def test_code_round_trip_group(code_d):
    doc = ser.code_to_json(code_d)
    assert doc["group"] is True
    again = ser.code_from_json(doc)
    assert isinstance(again, gc.GroupCode)
    assert again == code_d


def test_code_from_generators(z4_code):
    doc = {"alphabet": {"kind": "cyclic", "modulus": 4}, "length": 3,
           "generators": [[2, 0, 0], [1, 2, 1]], "group": True}
    assert ser.code_from_json(doc).words == z4_code.words


def test_code_schema_errors():
    base = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 2}
    with pytest.raises(SchemaError):
        ser.code_from_json({**base, "codewords": []})
    with pytest.raises(SchemaError):
        ser.code_from_json({**base, "generators": [[1, 1]]})  # no group flag
    with pytest.raises(SchemaError):
        ser.code_from_json({**base, "codewords": [[0, 5]]})
    with pytest.raises(SchemaError) as err:
        ser.code_from_json({**base, "codewords": [[0, 0], [0, 1], [1, 0]], "group": True})
    assert "escapes" in str(err.value) or "closed" in str(err.value)


def test_isometry_round_trip():
    iso = gc.Isometry(gc.Configuration(((1, 0), (0, 1), (1, 0))),
                      gc.Equivalence((2, 0, 1)))
    doc = ser.isometry_to_json(iso)
    assert doc["sigma"] == [3, 1, 2] and doc["convention"] == "pull"
    assert ser.isometry_from_json(doc) == iso


def test_isometry_push_normalization():
    push_doc = {"sigma": [1, 3, 5, 2, 4, 6],
                "config": [[0, 1]] * 6, "convention": "push"}
    iso = ser.isometry_from_json(push_doc)
    # acts like the push table: second symbol lands in position three
    assert iso.apply((0, 0, 0, 1, 1, 0)) == (0, 1, 0, 1, 0, 0)
    # emitted canonical form re-parses to the same map
    again = ser.isometry_from_json(ser.isometry_to_json(iso))
    assert again == iso


def test_decomposition_round_trip_fields(code_d):
    dec = gc.decompose(gc.direct_sum(code_d, code_d))
    doc = ser.decomposition_to_json(dec)
    assert doc["blocks"] == [[1, 2, 3], [4, 5, 6]]
    assert doc["isotypes"] == [{"rep": 0, "alpha": 2}]
    assert doc["witness"]["sigma"] == [1, 2, 3, 4, 5, 6]
    assert len(doc["certificates"]) == 2
    for comp_doc, comp in zip(doc["components"], dec.components):
        assert ser.code_from_json(comp_doc) == comp


def test_gc_witness_has_hom_flag(code_d):
    w = gc.gc_isomorphic(code_d, code_d)
    doc = ser.gc_witness_to_json(w)
    assert doc["verified_hom"] is True
    assert ser.isometry_from_json(doc) == w.iso


def test_dumps_deterministic(code_d):
    dec = gc.decompose(code_d)
    a = ser.dumps(ser.decomposition_to_json(dec))
    b = ser.dumps(ser.decomposition_to_json(gc.decompose(code_d)))
    assert a == b
    assert a.endswith("\n")


def test_parameters_and_classification_json(z4_code):
    p = ser.parameters_to_json(gc.parameters(z4_code))
    assert p["dimension"] == pytest.approx(1.5) and p["dimension_is_exact"] is False
    c = ser.classification_to_json(gc.classify(z4_code))
    assert c["is_mds"] is False and c["degenerate_coordinates"] == []


def test_cyclic_report_json(code_d):
    doc = ser.cyclic_report_to_json(gc.cyclic_report(code_d))
    assert doc["is_cyclic"] is True
    assert doc["gcd_certificate"] == {"xi": 2, "verdict": "indecomposable"}
    assert doc["component_structure"]["multiplicity"] == 1
