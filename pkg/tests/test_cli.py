"""Command-line surface: subcommands, exit codes, deterministic reports."""

import json

import pytest

from homalg.cli import main
from homalg.fileio import emit, parse
from homalg.campaign import leib2_algebra, nil2_algebra, projection_algebra


@pytest.fixture()
def quat_file(tmp_path):
    path = tmp_path / "quat.json"
    assert main(["cayley-dickson", "--levels", "2", "-o", str(path)]) == 0
    return path


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_cayley_dickson_and_ac(quat_file, capsys):
    code, doc = run_json(capsys, ["ac", str(quat_file), "--side", "two"])
    assert code == 0
    assert doc["ac"]["dim"] == 1
    assert doc["idempotents"] == [["0", "0", "0", "0"], ["1", "0", "0", "0"]]


def test_ac_one_sided_cli(tmp_path, capsys):
    path = tmp_path / "p2.json"
    emit(projection_algebra(), path)
    code, doc = run_json(capsys, ["ac", str(path), "--side", "left"])
    assert code == 0
    assert doc["ac"]["dim"] == 2
    assert doc["ac_unit"]["dim"] == 1
    assert doc["split_ok"] is True


def test_twist_space_nil2(tmp_path, capsys):
    path = tmp_path / "nil2.json"
    emit(nil2_algebra(), path)
    code, doc = run_json(capsys, ["twist-space", str(path)])
    assert code == 0
    assert doc["dim"] == 4


def test_analyze_exit_zero_and_deterministic(quat_file, capsys):
    code1 = main(["analyze", str(quat_file)])
    out1 = capsys.readouterr().out
    code2 = main(["analyze", str(quat_file)])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["ok"] is True
    assert doc["twist_space"]["dim"] == 1


def test_analyze_opposite_swaps_sides(tmp_path, capsys):
    path = tmp_path / "p2.json"
    emit(projection_algebra(), path)
    opp_path = tmp_path / "p2op.json"
    assert main(["opposite", str(path), "-o", str(opp_path)]) == 0
    capsys.readouterr()
    _, doc = run_json(capsys, ["analyze", str(path)])
    _, doc_op = run_json(capsys, ["analyze", str(opp_path)])
    swap = {
        "ann_left": "ann_right",
        "ann_right": "ann_left",
        "nucleus_left": "nucleus_right",
        "nucleus_right": "nucleus_left",
        "hu_t_left": "hu_t_right",
        "hu_t_right": "hu_t_left",
        "hu_n_left": "hu_n_right",
        "hu_n_right": "hu_n_left",
        "ac_l_space": "ac_r_space",
        "ac_r_space": "ac_l_space",
    }
    for key, opp_key in swap.items():
        assert doc["subspaces"][key] == doc_op["subspaces"][opp_key], key
    assert doc["unities"]["left"] == doc_op["unities"]["right"]
    assert doc["ac_left"]["ac"] == doc_op["ac_right"]["ac"]
    assert doc["ac_left"]["ac_unit"] == doc_op["ac_right"]["ac_unit"]


def test_yau_left_mult(tmp_path, capsys):
    path = tmp_path / "poly.json"
    assert main(["poly", "--degree", "4", "-o", str(path)]) == 0
    out_path = tmp_path / "twisted.json"
    assert main(["yau", str(path), "--left-mult", "0", "-o", str(out_path)]) == 0
    twisted = parse(out_path)
    assert twisted.is_hom_associative()


def test_yau_twist_from_file(tmp_path, capsys):
    path = tmp_path / "poly.json"
    assert main(["poly", "--degree", "4", "-o", str(path)]) == 0
    first = tmp_path / "first.json"
    assert main(["yau", str(path), "--left-mult", "0", "-o", str(first)]) == 0
    # reuse the emitted twist grid to twist the twisted product once more
    second = tmp_path / "second.json"
    assert main(["yau", str(first), "--twist-from-file", "-o", str(second)]) == 0
    assert parse(second).is_hom_associative()
    # a plain file has no twist grid to reuse
    assert main(["yau", str(path), "--twist-from-file", "-o", str(second)]) == 2


def test_poly_with_constants_unital(tmp_path, capsys):
    path = tmp_path / "poly1.json"
    assert main(["poly", "--degree", "3", "--with-constants", "-o", str(path)]) == 0
    code, doc = run_json(capsys, ["ac", str(path), "--side", "two"])
    assert code == 0
    assert doc["ac"]["dim"] == 4


def test_unitalize_cli(tmp_path, capsys):
    path = tmp_path / "nil2.json"
    emit(nil2_algebra(), path)
    out_path = tmp_path / "unital.json"
    assert main(["unitalize", str(path), "-o", str(out_path)]) == 0
    code, doc = run_json(capsys, ["ac", str(out_path), "--side", "two"])
    assert code == 0
    assert doc["ac"]["dim"] == 3


def test_random_roundtrip_and_determinism(tmp_path):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    argv = ["random", "--dim", "3", "--field", "Fp:5", "--seed", "9", "--left-unital"]
    assert main(argv + ["-o", str(p1)]) == 0
    assert main(argv + ["-o", str(p2)]) == 0
    assert p1.read_text() == p2.read_text()


def test_leibniz_cli(tmp_path, capsys):
    path = tmp_path / "leib2.json"
    emit(leib2_algebra(), path)
    code, doc = run_json(capsys, ["leibniz", str(path)])
    assert code == 0
    assert doc["right_leibniz"]["holds"] is True
    assert doc["hu_n"]["dim"] == 2


def test_leibniz_cli_with_twist(tmp_path, capsys):
    path = tmp_path / "leib2.json"
    emit(leib2_algebra(), path)
    code, doc = run_json(capsys, ["leibniz", str(path), "--left-mult", "1"])
    assert code == 0
    assert "hom_lie" in doc
    assert doc["hom_lie"]["jacobi_form"].startswith("[t(x)")


def test_campaign_empty_corpus_exit_zero(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    report = tmp_path / "report.json"
    code = main(
        [
            "campaign",
            "--dir",
            str(corpus),
            "--seeds",
            "0",
            "--no-builtin",
            "--report",
            str(report),
        ]
    )
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["ok"] is True
    assert doc["total_checks"] == 0


def test_campaign_200_seeds_empty_corpus(tmp_path, capsys):
    # the full seeded invariant suite is self-consistent
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    report = tmp_path / "report.json"
    code = main(
        [
            "campaign",
            "--dir",
            str(corpus),
            "--seeds",
            "200",
            "--no-builtin",
            "--report",
            str(report),
        ]
    )
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["failures"] == 0
    assert doc["algebras"] == 200


def test_campaign_with_corpus_and_seeds(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    emit(projection_algebra(), corpus / "p2.json")
    emit(nil2_algebra(), corpus / "nil2.json")
    report = tmp_path / "report.json"
    code = main(
        [
            "campaign",
            "--dir",
            str(corpus),
            "--seeds",
            "4",
            "--no-builtin",
            "--report",
            str(report),
        ]
    )
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["failures"] == 0
    assert doc["algebras"] == 6
    # deterministic: a second run gives the identical report
    report2 = tmp_path / "report2.json"
    main(
        [
            "campaign",
            "--dir",
            str(corpus),
            "--seeds",
            "4",
            "--no-builtin",
            "--report",
            str(report2),
        ]
    )
    assert report.read_text() == report2.read_text()


def test_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["analyze", str(bad)]) == 2


def test_missing_unity_exit_one(tmp_path, capsys):
    path = tmp_path / "nil2.json"
    emit(nil2_algebra(), path)
    assert main(["ac", str(path), "--side", "left"]) == 1
    assert main(["ac", str(path), "--side", "two"]) == 1


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["ac", "missing.json"])  # --side required
    assert err.value.code == 2
