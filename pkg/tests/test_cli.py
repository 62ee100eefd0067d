import json
from importlib.resources import files

import jsonschema
import pytest

from qjacobi.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def schema(name):
    return json.loads(files("qjacobi").joinpath("schemas", f"{name}.schema.json").read_text())


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "gegenbauer", "--param", "1", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["power,coeff", "0,0", "1,-4", "2,0", "3,8"]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--family", "rhp", "--param", "3", "--n", "2", "--format", "json")
    assert json.loads(out)["coeffs"] == ["-2", "0", "14/3"]


def test_verify_nagel(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "nagel", "--n-max", "6", "--param", "7/2")
    docs = json.loads(out)
    jsonschema.validate(docs, schema("identity_reports"))
    assert code == 0 and len(docs) == 7 and all(d["exact_equal"] for d in docs)


def test_verify_with_skips_and_workers(capsys, monkeypatch):
    monkeypatch.setenv("QJACOBI_WORKERS", "2")
    code, out, _ = run(capsys, "verify", "--identity", "thm1", "--n-max", "4",
                       "--param", "3/2", "--param", "2")
    docs = json.loads(out)
    assert code == 0 and sum("skip_reason" in d for d in docs) == 1


def test_qmap(capsys):
    code, out, _ = run(capsys, "qmap", "--family", "carinena", "--param", "2")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("qmap"))
    assert code == 0 and doc["q"] == "7/5" and doc["branch"] == "q>1"
    code, out, _ = run(capsys, "qmap", "--geometry", "hyperbolic", "--param", "3", "--m", "1")
    assert json.loads(out)["q"] == ["9/7", "3/2"]


def test_ortho_exit_codes(capsys):
    code, out, _ = run(capsys, "ortho", "--family", "gegenbauer", "--param", "2", "--n-max", "5")
    jsonschema.validate(json.loads(out), schema("ortho_report"))
    assert code == 0
    code, _, _ = run(capsys, "ortho", "--family", "carinena-pos", "--param", "3", "--n-max", "6")
    assert code == 2


def test_pushforward_and_thm5(capsys):
    code, out, _ = run(capsys, "pushforward", "--n", "2", "--param", "7/2")
    jsonschema.validate(json.loads(out), schema("pushforward"))
    assert code == 0
    code, out, _ = run(capsys, "thm5", "--m", "0", "--n", "0", "--param", "3")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("thm5"))
    assert code == (0 if doc["pass"] else 2)


def test_sample(capsys, tmp_path):
    path = tmp_path / "s.csv"
    args = ("sample", "--n", "0", "--param", "3", "--count", "5000", "--seed", "7",
            "--samples", str(path))
    code, out, _ = run(capsys, *args)
    doc = json.loads(out)
    jsonschema.validate(doc, schema("sample_summary"))
    assert code == 0 and doc["seed"] == 7 and doc["count"] == 5000
    lines = path.read_text().splitlines()
    assert lines[0] == "value" and len(lines) == 5001
    _, again, _ = run(capsys, *args)
    assert again == out


@pytest.mark.parametrize("argv", [
    ["table", "--family", "gegenbauer", "--param", "3.5", "--n", "2"],
    ["table", "--family", "nope", "--n", "2"],
    ["verify", "--identity", "thm1", "--n-max", "3"],
    ["table", "--family", "rhp", "--param", "0", "--n", "2"],
    ["qmap", "--param", "2"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 1


def test_bad_worker_env(capsys, monkeypatch):
    monkeypatch.setenv("QJACOBI_WORKERS", "many")
    code, _, err = run(capsys, "verify", "--identity", "nagel", "--n-max", "1", "--param", "1")
    assert code == 1 and "QJACOBI_WORKERS" in err


def test_report_quick(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "report", "--profile", "quick", "--out", str(out))
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, schema("report"))
    assert code == (0 if doc["all_pass"] else 2)
    assert len(doc["criteria"]) == 11


def test_float_format_is_fixed():
    assert dumps({"x": 0.1, "q": [1, None, True]}) == \
        '{\n  "x": 0.10000000000000001,\n  "q": [\n    1,\n    null,\n    true\n  ]\n}\n'
