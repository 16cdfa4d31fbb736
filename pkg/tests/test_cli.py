"""End-to-end CLI behaviour via in-process main() calls."""

import hashlib
import json

import pytest

from lcpq.cli import main
from lcpq.errors import DegreeSamplingError
from lcpq.jordan.checks import IDENTITY_NAMES


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture
def type3_file(tmp_path):
    return _write(tmp_path, "type3.txt", "-1 2\n1 -1\n")


def test_classify_table_line(type3_file, capsys):
    assert main(["classify", type3_file]) == 0
    out = capsys.readouterr().out
    assert out == (
        "%s: Q: yes (T9.1: pattern (iii): [- +; + -] needs det < 0; det=-1)\n"
        % type3_file
    )


def test_classify_jsonl_record(type3_file, capsys):
    assert main(["classify", "--json", type3_file]) == 0
    record = json.loads(capsys.readouterr().out)
    assert set(record) == {
        "input",
        "sha256",
        "n",
        "structure",
        "k",
        "notes",
        "verdict",
    }
    with open(type3_file, "rb") as fh:
        assert record["sha256"] == hashlib.sha256(fh.read()).hexdigest()
    assert record["n"] == 2
    assert record["structure"] == "bdsw-type-3"
    assert record["verdict"]["answer"] == "yes"
    assert record["verdict"]["theorem"] == "T9.1"


def test_classify_worst_exit_across_files(tmp_path, capsys):
    yes = _write(tmp_path, "yes.txt", "1 0\n0 1\n")
    no = _write(tmp_path, "no.txt", "1 -1\n-1 1\n")
    assert main(["classify", yes]) == 0
    assert main(["classify", yes, no]) == 1
    capsys.readouterr()


def test_classify_undecided_exit(tmp_path, capsys):
    path = _write(tmp_path, "hard.txt", "1 1 -1\n1 1 1\n-1 1 1\n")
    assert main(["classify", "--budget", "0", path]) == 2
    out = capsys.readouterr().out
    assert "undecided" in out


def test_classify_malformed_file(tmp_path, capsys):
    path = _write(tmp_path, "bad.txt", "1 2\n3\n")
    assert main(["classify", path]) == 64
    assert path in capsys.readouterr().err


def test_classify_missing_file(tmp_path, capsys):
    assert main(["classify", str(tmp_path / "nope.txt")]) == 64
    capsys.readouterr()


def test_classify_default_output_stable(type3_file, capsys):
    main(["classify", type3_file])
    first = capsys.readouterr().out
    main(["classify", type3_file])
    assert capsys.readouterr().out == first

    main(["classify", "--timings", type3_file])
    timed = capsys.readouterr().out
    assert "elapsed:" in timed


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 64


def test_verify_agreement(tmp_path, capsys):
    path = _write(tmp_path, "t4.txt", "-1 1 0\n0 -1 1\n-2 0 1\n")
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert "OK" in out and "T8.1" in out

    assert main(["verify", "--json", path]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["agreement"] is True
    assert record["classifier"]["theorem"] == "T8.1"
    assert record["oracle"]["answer"] == "yes"


def test_generate_is_reproducible(tmp_path, capsys):
    args = ["generate", "--type", "bdsw-2", "--n", "3", "--count", "2", "--seed", "5"]
    out_a = tmp_path / "a"
    out_b = tmp_path / "b"
    assert main(args + ["--out", str(out_a)]) == 0
    assert main(args + ["--out", str(out_b)]) == 0
    capsys.readouterr()

    names = sorted(p.name for p in out_a.iterdir())
    assert names == ["bdsw-2-n3-seed5-0000.json", "bdsw-2-n3-seed5-0001.json"]
    for name in names:
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()
    first = json.loads((out_a / names[0]).read_text())
    assert first["n"] == 3 and len(first["rows"]) == 3


def test_generate_rejects_unknown_type(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--type", "dense", "--out", str(tmp_path)])
    assert exc.value.code == 64


def test_degree_values(tmp_path, capsys):
    eye = _write(tmp_path, "eye.txt", "1 0\n0 1\n")
    assert main(["degree", eye]) == 0
    assert capsys.readouterr().out == "1\n"

    t3 = _write(tmp_path, "t3.txt", "-1 2\n1 -1\n")
    assert main(["degree", t3]) == 0
    assert capsys.readouterr().out == "-1\n"

    not_r0 = _write(tmp_path, "p0.txt", "0 1\n0 1\n")
    assert main(["degree", not_r0]) == 1
    assert capsys.readouterr().out == "NotR0\n"


def test_degree_sampling_failure_exit(tmp_path, capsys, monkeypatch):
    path = _write(tmp_path, "eye.txt", "1 0\n0 1\n")

    def explode(matrix, rng_seed=0):
        raise DegreeSamplingError("no generic q found")

    monkeypatch.setattr("lcpq.cli.degree", explode)
    assert main(["degree", path]) == 70
    assert "no generic q" in capsys.readouterr().err


def test_enumeration_cap_exit(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LCP_ENUM_CAP", "2")
    path = _write(tmp_path, "dense.txt", "1 -1 1\n0 1 -1\n1 0 0\n")
    assert main(["classify", path]) == 65
    assert "cap" in capsys.readouterr().err


def test_jordan_identities_table(capsys):
    assert main(["jordan", "identities", "--algebra", "rn:3", "--samples", "50"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == len(IDENTITY_NAMES) + 1
    assert all("max residual" in line for line in lines)
    assert lines[-1].endswith("pass")


def test_jordan_identities_json(capsys):
    assert (
        main(
            [
                "jordan",
                "identities",
                "--algebra",
                "sym:2",
                "--samples",
                "40",
                "--json",
            ]
        )
        == 0
    )
    record = json.loads(capsys.readouterr().out)
    assert record["pass"] is True
    assert set(record["residuals"]) == set(IDENTITY_NAMES)


def test_jordan_rank_one_answers(capsys):
    assert main(["jordan", "rank-one", "--a", "eigs:1,2", "--b", "eigs:3,1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Q: yes (rank-one-eigensign:")

    assert main(["jordan", "rank-one", "--a", "-1,-2", "--b", "-1,-3"]) == 0
    capsys.readouterr()

    assert main(["jordan", "rank-one", "--a", "eigs:1,-1", "--b", "eigs:1,1"]) == 1
    out = capsys.readouterr().out
    assert "Q: no" in out and "violation" in out

    assert main(["jordan", "rank-one", "--a", "eigs:0,1", "--b", "eigs:1,1"]) == 2
    capsys.readouterr()


def test_jordan_rank_one_json_includes_sampler(capsys):
    code = main(
        ["jordan", "rank-one", "--a", "eigs:1,-1", "--b", "eigs:1,1", "--json"]
    )
    assert code == 1
    record = json.loads(capsys.readouterr().out)
    assert record["verdict"]["answer"] == "no"
    assert record["violation_sampler"]["violation"] is True


def test_jordan_embed_check(tmp_path, capsys):
    path = _write(tmp_path, "t3.txt", "-1 2\n1 -1\n")
    assert main(["jordan", "embed-check", "--matrix", path, "--q", "-1,-1"]) == 0
    out = capsys.readouterr().out
    assert "status: embedded, r = (3, 2)" in out
    assert out.strip().endswith("pass")


def test_jordan_embed_check_json(tmp_path, capsys):
    path = _write(tmp_path, "t3.txt", "-1 2\n1 -1\n")
    code = main(
        ["jordan", "embed-check", "--matrix", path, "--q", "-1,-1", "--json"]
    )
    assert code == 0
    record = json.loads(capsys.readouterr().out)
    assert record["status"] == "embedded"
    assert record["r"] == ["3", "2"]
    assert record["algebra"] == "sym:2"


def test_jordan_embed_check_unsolvable(tmp_path, capsys):
    path = _write(
        tmp_path, "big.txt", "1 1 0 0\n0 1 1 0\n0 0 1 -1\n1 0 0 0\n"
    )
    assert (
        main(["jordan", "embed-check", "--matrix", path, "--q", "0,0,0,-1"]) == 0
    )
    assert "status: unsolvable" in capsys.readouterr().out


def test_jordan_embed_check_dimension_errors(tmp_path, capsys):
    path = _write(tmp_path, "t3.txt", "-1 2\n1 -1\n")
    assert (
        main(["jordan", "embed-check", "--matrix", path, "--q", "-1,-1,-1"]) == 64
    )
    assert (
        main(
            [
                "jordan",
                "embed-check",
                "--matrix",
                path,
                "--q",
                "-1,-1",
                "--algebra",
                "sym:3",
            ]
        )
        == 64
    )
    capsys.readouterr()
