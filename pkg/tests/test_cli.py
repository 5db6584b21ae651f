import json
import subprocess
import sys

from fcword import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf_exact_record(capsys):
    code, out, err = run(capsys, "nf", "--type", "affine-a:3", "1 3 a")
    assert code == 0
    assert out.strip() == (
        '{"type": "affine_nf", "n": 3, "short": [[1, 3]], "j": 2, "k": 0, '
        '"residue": {"kind": "finite", "runs": []}, "word": "1 3 a"}'
    )


def test_nf_affine_word_without_cycle_letter(capsys):
    code, out, _ = run(capsys, "nf", "--type", "affine-a:3", "3 1")
    assert code == 0
    rec = json.loads(out)
    assert rec["type"] == "finite_nf"
    assert rec["word"] == "1 3"


def test_nf_non_fc_is_a_domain_error(capsys):
    code, _, err = run(capsys, "nf", "--type", "finite-a:3", "1 2 1")
    assert code == 3
    assert "not fully commutative" in err


def test_check_answers_even_when_false(capsys):
    code, out, _ = run(capsys, "check", "--type", "finite-a:3", "1 2 1", "1 3")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["fc"] for r in recs] == [False, True]
    assert recs[0]["reduced"] is True


def test_check_modes_agree(capsys):
    for mode in ("fast", "class"):
        code, out, _ = run(capsys, "check", "--type", "affine-a:2", "--mode", mode,
                           "1 2 a 1 2 a")
        assert code == 0
        assert json.loads(out)["fc"] is True


def test_bad_letter_is_invalid_input(capsys):
    code, _, err = run(capsys, "nf", "--type", "finite-a:3", "9")
    assert code == 2
    assert "error" in err


def test_cap_truncation_surfaces_as_domain_error(capsys):
    code, _, err = run(capsys, "check", "--type", "finite-a:7", "--mode", "class",
                       "--cap", "2", "1 3 5 7")
    assert code == 3
    assert "cap" in err


def test_count(capsys):
    assert run(capsys, "count", "--type", "finite-a:4")[1].strip() == "42"
    code, out, _ = run(capsys, "count", "--type", "affine-a:2", "--max-len", "6")
    assert code == 0 and out.strip() == "34"
    code, _, err = run(capsys, "count", "--type", "affine-a:2")
    assert code == 2 and "--max-len" in err


def test_enum_deterministic(capsys):
    a = run(capsys, "enum", "--type", "finite-a:3")
    b = run(capsys, "enum", "--type", "finite-a:3")
    assert a == b
    lines = a[1].splitlines()
    assert len(lines) == 14
    assert json.loads(lines[0])["word"] == ""


def test_enum_resume(tmp_path, capsys):
    out = tmp_path / "a2.jsonl"
    run(capsys, "enum", "--type", "affine-a:2", "--max-len", "5", "--out", str(out))
    full = out.read_text().splitlines()
    assert len(full) == 28
    # drop a suffix, rerun, expect only the gap to be appended
    out.write_text("\n".join(full[:20]) + "\n")
    code, _, err = run(capsys, "enum", "--type", "affine-a:2", "--max-len", "5",
                       "--out", str(out))
    assert code == 0
    assert "8 records written, 20 already present" in err
    assert sorted(out.read_text().splitlines()) == sorted(full)
    # a second rerun adds nothing
    code, _, err = run(capsys, "enum", "--type", "affine-a:2", "--max-len", "5",
                       "--out", str(out))
    assert "0 records written, 28 already present" in err


def test_verify_subset_and_checkpoint(tmp_path, capsys):
    ckpt = tmp_path / "v.jsonl"
    code, out, _ = run(capsys, "verify", "--only", "catalan-counts,rank2-trees",
                       "--out", str(ckpt))
    assert code == 0
    assert out.count("PASS") == 2 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--only", "catalan-counts,rank2-trees",
                       "--out", str(ckpt))
    assert code == 0
    assert out.count("(cached)") == 2


def test_verify_unknown_criterion(capsys):
    code, _, err = run(capsys, "verify", "--only", "nope")
    assert code == 2 and "unknown criteria" in err


def test_module_entry_point():
    # the installed script and python -m both route through main()
    proc = subprocess.run(
        [sys.executable, "-m", "fcword.cli", "nf", "--type", "affine-a:2", "a"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hasResidueA"] is True
