from __future__ import annotations

import json
import subprocess
import sys

import pytest

from sunsys.cli import canonical_block, load_certificate, main, table_rows
from sunsys.verify import verify_partition


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_row_for_9(capsys):
    code, out, _ = run(["table", "25"], capsys)
    assert code == 0
    assert "9  14  {0,3,4,7}" in out.splitlines()
    assert table_rows(25)[0] == "9  14  {0,3,4,7}"


def test_generate_16(capsys, tmp_path):
    path = tmp_path / "g16.json"
    code, _, _ = run(["generate", "16", "-o", str(path)], capsys)
    assert code == 0
    data = json.loads(path.read_text())
    assert list(data) == ["format_version", "kind", "m", "hole_size", "blocks"]
    assert data["m"] == 16 and data["hole_size"] == 0 and len(data["blocks"]) == 20
    assert data["blocks"] == sorted(data["blocks"])
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0 and out.startswith("OK")


def test_generate_inadmissible(capsys):
    assert run(["generate", "10"], capsys)[0] == 2
    assert run(["generate", "4"], capsys)[0] == 2


def test_embed_bound_violation(capsys):
    code, _, err = run(["embed", "9", "12"], capsys)
    assert code == 3
    assert "14" in err


def test_embed_with_base_file(capsys, tmp_path):
    base = tmp_path / "b9.json"
    assert run(["generate", "9", "-o", str(base)], capsys)[0] == 0
    out = tmp_path / "e21.json"
    assert run(["embed", "9", "21", "--base", str(base), "-o", str(out)], capsys)[0] == 0
    d, target = load_certificate(out.read_text())
    assert d.m == 21 and len(d.blocks) == 35
    assert verify_partition(d, target).ok
    base_blocks = {canonical_block(tuple(x + 12 for x in b)) for b in json.loads(base.read_text())["blocks"]}
    assert base_blocks <= {tuple(b) for b in d.blocks}


def test_verify_reports_defects(capsys, tmp_path):
    path = tmp_path / "g9.json"
    run(["generate", "9", "-o", str(path)], capsys)
    data = json.loads(path.read_text())
    data["blocks"] = data["blocks"][1:]
    path.write_text(json.dumps(data))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1
    assert "missing:" in out


def test_lemma_certificate_verifies(capsys, tmp_path):
    path = tmp_path / "l.json"
    assert run(["lemma", "four_inf_diff24", "7", "-o", str(path)], capsys)[0] == 0
    data = json.loads(path.read_text())
    assert data["kind"] == "lemma" and data["u"] == 7 and data["D"] == [2, 3]
    assert run(["verify", str(path)], capsys)[0] == 0
    assert run(["lemma", "leave_decomposition", "25", "2", "0", "1"], capsys)[0] == 0
    assert run(["lemma", "four_inf_diff24", "8"], capsys)[0] == 2
    assert run(["lemma", "no_such_lemma", "8"], capsys)[0] == 2


def test_canonical_block():
    assert canonical_block((5, 1, 3, 9, 7, 8)) == (1, 3, 5, 7, 8, 9)


@pytest.mark.parametrize("argv", [["generate", "25"], ["embed", "12", "21"], ["lemma", "eight_inf_diff_1_u3", "15"]])
def test_output_is_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "sunsys"] + argv
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
