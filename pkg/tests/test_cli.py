import json
import subprocess
import sys

import pytest

from indramsey.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_arrows(capsys, tmp_path):
    code, out, _ = run(capsys, "arrows", "--host", "C7", "--red", "P4", "--blue", "2K2")
    assert code == 0 and out.startswith("Arrows")
    w = tmp_path / "w.col"
    code, out, _ = run(capsys, "arrows", "--host", "P6", "--red", "P5", "--blue", "2K2", "--witness", str(w))
    assert code == 0 and out.startswith("NotArrows") and w.read_text().startswith("c ")
    code, out, _ = run(capsys, "arrows", "--host", "K6", "--red", "K3", "--blue", "K3", "--weak")
    assert out.startswith("Arrows")
    code, _, _ = run(capsys, "arrows", "--host", "K5", "--red", "K3", "--blue", "K3", "--expect", "arrows")
    assert code == 2
    code, _, _ = run(capsys, "arrows", "--host", "2K6", "--red", "K3", "--blue", "2K3", "--budget", "3")
    assert code == 3


@pytest.mark.parametrize("red,blue,value", [("P3", "P3", 4), ("K2", "2K2", 4), ("P3", "K3", 6)])
def test_ir(capsys, red, blue, value):
    code, out, _ = run(capsys, "ir", "--red", red, "--blue", blue, "--jobs", "1")
    assert code == 0 and out.startswith(f"IR = {value}")


def test_ir_interval_exit_code(capsys):
    code, out, _ = run(capsys, "ir", "--red", "P3", "--blue", "2K3", "--cap", "6", "--jobs", "1")
    assert code == 3 and out.startswith("Bounds")


def test_ir_bundle_and_certify(capsys, tmp_path):
    b = tmp_path / "bundle"
    code, _, _ = run(capsys, "ir", "--red", "P4", "--blue", "2K2", "--out", str(b), "--jobs", "1")
    assert code == 0
    code, out, _ = run(capsys, "certify", str(b))
    assert code == 0 and out.startswith("OK, 190 witnesses")
    (b / "result.json").write_text(json.dumps({"red": "Cr", "blue": "C`", "status": "Exact", "value": 7,
                                                "manifest": []}))
    code, out, _ = run(capsys, "certify", str(b))
    assert code == 2


def test_gen_and_embed(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "5")
    assert code == 0 and len(out.split()) == 34
    code, out, _ = run(capsys, "gen", "6", "--connected", "--count")
    assert out.strip() == "112"
    code, out, _ = run(capsys, "embed", "--host", "K8", "--pattern", "2K3")
    assert out.strip() == "not found"
    code, out, _ = run(capsys, "embed", "--host", "C6", "--pattern", "2K2", "--all")
    assert out.strip().endswith("3 induced copies")


def test_embed_filters_stdin():
    gen = subprocess.run([sys.executable, "-m", "indramsey", "gen", "5"], capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "indramsey", "embed", "--pattern", "K3"], input=gen.stdout,
                         capture_output=True, text=True)
    assert res.returncode == 0
    # graphs on five vertices containing a triangle: 34 minus the 14 triangle-free ones
    assert len(res.stdout.split()) == 20


def test_strategy(capsys, tmp_path):
    out_file = tmp_path / "c.col"
    code, _, _ = run(capsys, "strategy", "avoid-2k2", "--host", "C5", "--red", "P4", "--out", str(out_file))
    assert code == 0 and out_file.read_text().startswith("c ")
    code, out, _ = run(capsys, "strategy", "triangle", "--host", "2K3+P3", "--t", "2")
    assert code == 0 and out.startswith("c ")
    code, _, _ = run(capsys, "strategy", "avoid-2k2", "--host", "C6", "--red", "P4")
    assert code == 4


@pytest.mark.parametrize("argv", [
    ["arrows", "--host", "Q", "--red", "K2", "--blue", "K2"],
    ["arrows", "--host", "K3"],
    ["gen", "12"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 4


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "indramsey", "gen", "4", "--count"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "11"
