"""CLI behavior: schemas in, deterministic JSON out, exit codes."""

from __future__ import annotations

import json

import pytest

from groupcodes.cli import main

Z4_DOC = {"alphabet": {"kind": "cyclic", "modulus": 4}, "length": 3,
          "generators": [[2, 0, 0], [1, 2, 1]], "group": True}
D_DOC = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 3,
         "codewords": [[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1]], "group": True}
REP_DOC = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 3,
           "codewords": [[0, 0, 0], [1, 1, 1]], "group": True}
D2_DOC = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 6,
          "generators": [[1, 1, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0],
                         [0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 1, 1]], "group": True}


@pytest.fixture()
def files(tmp_path):
    paths = {}
    for name, doc in [("z4", Z4_DOC), ("d", D_DOC), ("rep", REP_DOC), ("d2", D2_DOC)]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc), encoding="utf-8")
        paths[name] = str(p)
    return paths


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_analyze_z4(files, capsys):
    code, doc = run_json(capsys, ["analyze", files["z4"]])
    assert code == 0
    assert doc["parameters"]["size"] == 8
    assert doc["parameters"]["dimension"] == pytest.approx(1.5)
    assert doc["parameters"]["min_distance"] == 1
    assert len(doc["decomposition"]["blocks"]) == 1  # indecomposable
    assert doc["certificates"] == []
    assert doc["cyclic"]["is_cyclic"] is False


def test_analyze_repetition_lists_both_certificates(files, capsys):
    code, doc = run_json(capsys, ["analyze", files["rep"]])
    assert code == 0
    assert doc["certificates"][:2] == ["mds-nontrivial", "perfect-nontrivial"]
    assert doc["classification"]["is_mds"] and doc["classification"]["is_perfect"]


def test_analyze_rejects_empty_codeword_list(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"alphabet": {"kind": "cyclic", "modulus": 2},
                             "length": 2, "codewords": []}))
    assert main(["analyze", str(p)]) == 2
    assert "codewords" in capsys.readouterr().err


def test_analyze_rejects_broken_closure(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"alphabet": {"kind": "cyclic", "modulus": 2},
                             "length": 2, "group": True,
                             "codewords": [[0, 0], [0, 1], [1, 0]]}))
    assert main(["analyze", str(p)]) == 2
    err = capsys.readouterr().err
    assert "(0, 1)" in err and "(1, 0)" in err  # witness pair named


def test_analyze_invalid_json_diagnostic(tmp_path, capsys):
    p = tmp_path / "mangled.json"
    p.write_text("{not json", encoding="utf-8")
    assert main(["analyze", str(p)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_analyze_resource_limit_partial_report(files, capsys):
    code, doc = run_json(capsys, ["analyze", files["d"], "--max-partition-bits", "2"])
    assert code == 3
    assert doc["decomposition"] is None
    assert doc["parameters"]["size"] == 4  # partial report still complete elsewhere
    assert "decomposition" in doc["resource_limits"]


def test_analyze_byte_identical_output(files, capsys):
    main(["analyze", files["z4"]])
    first = capsys.readouterr().out
    main(["analyze", files["z4"]])
    second = capsys.readouterr().out
    assert first == second


def test_analyze_text_format(files, capsys):
    assert main(["analyze", files["z4"], "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "dimension 1.5" in out


def test_analyze_oracle_flag(files, capsys):
    code, doc = run_json(capsys, ["analyze", files["rep"], "--oracle"])
    assert code == 0
    assert doc["oracle"]["perfect_covering_agrees"] is True
    assert doc["oracle"]["weight_scan_agrees"] is True


def test_decompose_square(files, capsys):
    code, doc = run_json(capsys, ["decompose", files["d2"]])
    assert code == 0
    assert doc["blocks"] == [[1, 2, 3], [4, 5, 6]]
    assert doc["isotypes"] == [{"rep": 0, "alpha": 2}]


def test_iso_exit_codes(files, capsys):
    code, doc = run_json(capsys, ["iso", files["d"], files["d"]])
    assert code == 0 and doc["isomorphic"] is True
    assert doc["witness"]["verified_hom"] is True
    code, doc = run_json(capsys, ["iso", files["d"], files["rep"]])
    assert code == 1 and doc["isomorphic"] is False


def test_iso_swapped_sum_presentations(tmp_path, capsys):
    d_words = [[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1]]
    rep_words = [[0, 0, 0], [1, 1, 1]]
    left = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 6, "group": True,
            "codewords": [d + r for d in d_words for r in rep_words]}
    right = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 6, "group": True,
             "codewords": [r + d for d in d_words for r in rep_words]}
    pa, pb = tmp_path / "left.json", tmp_path / "right.json"
    pa.write_text(json.dumps(left))
    pb.write_text(json.dumps(right))
    code, doc = run_json(capsys, ["iso", str(pa), str(pb)])
    assert code == 0 and doc["isomorphic"] is True
    assert doc["witness"]["verified_hom"] is True


def test_iso_plain_codes_use_equivalence(tmp_path, capsys):
    a = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 2,
         "codewords": [[0, 1], [1, 0]]}
    b = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 2,
         "codewords": [[0, 0], [1, 1]]}
    c = {"alphabet": {"kind": "cyclic", "modulus": 2}, "length": 2,
         "codewords": [[0, 0], [0, 1], [1, 0]]}
    paths = {}
    for name, doc in [("a", a), ("b", b), ("c", c)]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        paths[name] = str(p)
    code, doc = run_json(capsys, ["iso", paths["a"], paths["b"]])
    assert code == 0 and doc["isomorphic"] is True
    assert "verified_hom" not in doc["witness"]  # plain equivalence witness
    code, doc = run_json(capsys, ["iso", paths["a"], paths["c"]])
    assert code == 1


def test_iso_alphabet_mismatch_is_input_error(files, tmp_path, capsys):
    p = tmp_path / "z3rep.json"
    p.write_text(json.dumps({"alphabet": {"kind": "cyclic", "modulus": 3},
                             "length": 3,
                             "codewords": [[0, 0, 0], [1, 1, 1], [2, 2, 2]],
                             "group": True}))
    assert main(["iso", files["d"], str(p)]) == 2


def test_aut_command(files, capsys):
    code, doc = run_json(capsys, ["aut", files["d"], "--with-structure"])
    assert code == 0
    assert doc["order"] == 6
    assert doc["structure"] == [{"isotype": 0, "component_aut_order": 6, "alpha": 1}]
    assert doc["elements"] is not None and len(doc["elements"]) == 6


def test_aut_requires_group_code(tmp_path, capsys):
    p = tmp_path / "plain.json"
    p.write_text(json.dumps({"alphabet": {"kind": "cyclic", "modulus": 2},
                             "length": 2, "codewords": [[0, 1], [1, 0]]}))
    assert main(["aut", str(p)]) == 2


def test_interleave_rows_match_reference(files, capsys):
    code, doc = run_json(capsys, ["interleave", files["d"], "--copies", "2"])
    assert code == 0
    assert doc["sigma"] == [1, 3, 5, 2, 4, 6]
    assert doc["convention"] == "push"
    assert doc["is_cyclic"] is True
    rows = {tuple(r["from"]): tuple(r["to"]) for r in doc["rows"]}
    assert rows[(1, 0, 1, 0, 1, 1)] == (1, 0, 0, 1, 1, 1)
    assert len(rows) == 16


def test_join_command(files, tmp_path, capsys):
    p = tmp_path / "z3rep2.json"
    p.write_text(json.dumps({"alphabet": {"kind": "cyclic", "modulus": 3},
                             "length": 3,
                             "codewords": [[0, 0, 0], [1, 1, 1], [2, 2, 2]],
                             "group": True}))
    code, doc = run_json(capsys, ["join", files["rep"], str(p)])
    assert code == 0
    result = doc["result"]
    assert result["alphabet"]["order"] == 6
    assert len(result["codewords"]) == 6


def test_selftest_quick(capsys):
    assert main(["selftest", "--trials", "2", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") >= 9 and "FAIL" not in out


def test_threads_flag_validation(files, capsys):
    assert main(["analyze", files["d"], "--threads", "0"]) == 2
    assert main(["analyze", files["d"], "--threads", "4"]) == 0


def test_emitted_code_json_reparses(files, capsys):
    from groupcodes import serialize as ser
    code, doc = run_json(capsys, ["interleave", files["d"], "--copies", "2"])
    assert code == 0
    again = ser.code_from_json(doc["result"])
    assert again.size == 16
    assert ser.code_to_json(again) == doc["result"]
