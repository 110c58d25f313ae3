import json
import subprocess
import sys

import pytest

from stanley.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_csv(capsys):
    code, out, _ = run(capsys, "generate", "--seed", "0", "--count", "9", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,value"
    assert lines[1] == "0,0" and lines[-1] == "8,27"
    assert all(line == line.rstrip() for line in lines)


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--seed", "0,1,7", "--horizon", "4096", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["certificate"]["alpha"] == {"num": 10, "den_pow3": 2}
    assert set(data["certificate"]) == {"seed", "horizon", "kappa", "lambda", "rho", "alpha", "proven"}
    assert data["repeat_structure"] is True


def test_omega(capsys):
    code, out, _ = run(capsys, "omega", "--seed", "0,4")
    assert code == 0 and json.loads(out) == {"members": [1, 2, 3], "omega": 3}


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "adk", "--seed", "0", "--k", "2", "--d", "2")
    data = json.loads(out)
    assert data["predicted_rho"] == 88
    code, out, _ = run(capsys, "construct", "product", "--seed-a", "0", "--k", "2", "--seed-b", "0,1")
    assert json.loads(out)["seed"] == [0, 1, 3, 4, 9, 10, 12, 13]


def test_search_scaling(capsys):
    code, out, _ = run(capsys, "search", "scaling", "--alpha", "28/27")
    data = json.loads(out)
    assert code == 0
    assert data["final_certificate"]["alpha"] == {"num": 28, "den_pow3": 3}
    assert data["final_seed"]


def test_search_scaling_exponent_syntax(capsys):
    code, out, _ = run(capsys, "search", "scaling", "--alpha", "10/3^2")
    assert code == 0 and json.loads(out)["final_certificate"]["alpha"] == {"num": 10, "den_pow3": 2}


def test_search_repeat(capsys):
    code, out, _ = run(capsys, "search", "repeat", "--rho", "85")
    assert code == 0 and json.loads(out)["steps"][0]["d"] == 5


def test_verify(capsys):
    assert run(capsys, "verify", "cover", "--seed", "0", "--k", "2", "--part", "b", "--y", "9")[0] == 0
    assert run(capsys, "verify", "main-prefix", "--seed", "0", "--k", "2", "--d", "2")[0] == 0
    code, out, _ = run(capsys, "verify", "oracle", "--trials", "3", "--max-seed-value", "50", "--terms", "100")
    assert code == 0 and json.loads(out)["agree"] == 3


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--seed", "0", "--count", "1024")
    assert code == 0 and json.loads(out)["classification"] == "type1"


@pytest.mark.parametrize(
    "argv,code",
    [
        (["search", "scaling", "--alpha", "28/10"], 1),
        (["generate", "--seed", "0,1,2", "--count", "5"], 1),
        (["generate", "--seed", "0", "--count", "5", "--bogus"], 1),
        (["analyze", "--seed", "0", "--horizon", "3", "--format", "csv"], 1),
        (["search", "scaling", "--alpha", "26/27"], 2),
        (["verify", "cover", "--seed", "0", "--k", "0", "--part", "a", "--x", "0"], 0),
        (["construct", "adk", "--seed", "0", "--k", "2", "--d", "11"], 2),
        (["classify", "--seed", "0", "--count", "10"], 2),
        (["search", "repeat", "--rho", "50", "--max-depth", "1"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    with_exit = None
    try:
        with_exit = main(argv)
    except SystemExit as exc:
        with_exit = exc.code
    capsys.readouterr()
    assert with_exit == code


def test_memory_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("STANLEY_MEM_CAP_MB", "0.05")
    assert run(capsys, "generate", "--seed", "0", "--count", "5000")[0] == 3


def test_out_file_and_manifest(tmp_path, capsys):
    out = tmp_path / "terms.csv"
    assert main(["generate", "--seed", "0,1,7", "--count", "50", "--format", "csv", "--out", str(out)]) == 0
    manifest = json.loads((tmp_path / "terms.csv.manifest.json").read_text())
    assert manifest["command"] == "generate"
    assert manifest["outputs"] == [str(out)]
    assert set(manifest) >= {"command", "parameters", "versions", "outputs", "timing"}
    first = out.read_bytes()
    main(["generate", "--seed", "0,1,7", "--count", "50", "--format", "csv", "--out", str(out)])
    assert out.read_bytes() == first


def test_oracle_output_is_byte_identical(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        main(["verify", "oracle", "--trials", "5", "--max-seed-value", "40", "--terms", "80", "--rng-seed", "9", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert json.loads((tmp_path / "a.json.manifest.json").read_text())["parameters"]["rng_seed"] == 9


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "stanley", "generate", "--seed", "0", "--count", "3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout == "index,value\n0,0\n1,1\n2,3\n"
