"""CLI behavior: subcommands, exit codes, report stability, serialization."""

import csv
import json
import math

import numpy as np
import pytest

import quasimix.harmonic
from quasimix.cli import main, resolve_group
from quasimix.groups import build_symmetric
from quasimix.harmonic import BoundCheck, Harmonic
from quasimix.report import (
    CHECK_ORDER,
    canonical_json,
    reproducer_payload,
    run_verification,
)
from quasimix.spectra import spectral_data


def test_groups_list(capsys):
    assert main(["groups", "list"]) == 0
    out = capsys.readouterr().out
    for token in ("z:<n>", "sl2:<p>", "file:<path>", "a:5", "sl2:11"):
        assert token in out


def test_resolve_group_tokens():
    assert resolve_group("z:8").order == 8
    assert resolve_group("s:4").order == 24
    assert resolve_group("a:4").order == 12
    assert resolve_group("sl2:3").order == 24
    assert resolve_group("psl2:7").order == 168
    with pytest.raises(ValueError, match="unknown group family"):
        resolve_group("q:5")
    with pytest.raises(ValueError, match="not an integer"):
        resolve_group("z:six")
    with pytest.raises(ValueError, match="family:argument"):
        resolve_group("z6")


def test_analyze_example(tmp_path):
    out = tmp_path / "a5.json"
    assert main(["analyze", "--group", "a:5", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["format"] == 1
    assert data["group"]["degrees"] == [1, 3, 3, 4, 5]
    assert data["group"]["quasirandomness_degree"] == 3
    assert data["group"]["is_perfect"] is True
    assert data["group"]["order"] == 60


def test_analyze_to_stdout(capsys):
    assert main(["analyze", "--group", "z:4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["group"]["quasirandomness_degree"] == 1


def test_verify_theorem_example(tmp_path):
    out = tmp_path / "z6.json"
    rc = main(
        ["verify", "--group", "z:6", "--check", "theorem", "--trials", "10",
         "--seed", "1", "--out", str(out)]
    )
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["group"]["quasirandomness_degree"] == 1
    (record,) = data["checks"]
    assert record["check"] == "theorem"
    assert record["bound"] == 4.0
    assert record["status"] == "pass"
    assert record["runtime_s"] is None
    # the headline bound never beats the trivial ceiling at small D
    assert len(data["notes"]) == 1
    assert "vacuous" in data["notes"][0]


def test_verify_reports_are_byte_identical(tmp_path):
    args = ["verify", "--group", "s:3", "--trials", "6", "--seed", "3"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    ca, cb = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a), "--csv", str(ca)]) == 0
    assert main(args + ["--out", str(b), "--csv", str(cb)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert ca.read_bytes() == cb.read_bytes()


def test_threaded_verify_matches_serial(tmp_path):
    base = ["verify", "--group", "s:3", "--trials", "8", "--seed", "5"]
    serial, threaded = tmp_path / "s.json", tmp_path / "t.json"
    assert main(base + ["--out", str(serial)]) == 0
    assert main(base + ["--threads", "4", "--out", str(threaded)]) == 0
    rs = json.loads(serial.read_text())
    rt = json.loads(threaded.read_text())
    assert rs["settings"]["threads"] == 1 and rt["settings"]["threads"] == 4
    for a, b in zip(rs["checks"], rt["checks"]):
        assert a["check"] == b["check"]
        for key in ("bound", "max_observed", "min_margin"):
            assert abs(a[key] - b[key]) <= 1e-12


def test_csv_layout(tmp_path):
    out, csv_path = tmp_path / "r.json", tmp_path / "r.csv"
    rc = main(
        ["verify", "--group", "z:4", "--check", "lemma,corollary", "--trials", "5",
         "--out", str(out), "--csv", str(csv_path)]
    )
    assert rc == 0
    with open(csv_path, newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["check", "trial", "observed", "bound", "margin"]
    body = rows[1:]
    # 5 lemma rows + 5 corollary + 5 corollary_sharp
    assert len(body) == 15
    for check, trial, observed, bound, margin in body:
        assert check in ("lemma", "corollary", "corollary_sharp")
        assert math.isclose(float(bound) - float(observed), float(margin), abs_tol=1e-15)


def test_timings_flag_records_runtimes(tmp_path):
    out = tmp_path / "t.json"
    rc = main(
        ["verify", "--group", "z:4", "--check", "lemma", "--trials", "3",
         "--timings", "--out", str(out)]
    )
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["settings"]["timings"] is True
    assert data["checks"][0]["runtime_s"] >= 0.0


def test_bound_failure_exits_two_and_dumps_reproducer(tmp_path, monkeypatch):
    def failing_lemma(self, u, v, seed=None):
        return BoundCheck(
            quantity_name="lemma", observed=1.0, bound=0.25, margin=-0.75,
            inputs_digest="0" * 16, seed=seed,
        )

    monkeypatch.setattr(quasimix.harmonic.Harmonic, "lemma_gap", failing_lemma)
    out = tmp_path / "fail.json"
    rc = main(
        ["verify", "--group", "z:4", "--check", "lemma", "--trials", "2",
         "--seed", "9", "--out", str(out)]
    )
    assert rc == 2
    data = json.loads(out.read_text())
    assert data["checks"][0]["status"] == "fail"
    assert data["checks"][0]["min_margin"] == -0.75
    dumps = list(tmp_path.glob("quasimix-reproducer-lemma-trial*.json"))
    assert len(dumps) == 1
    repro = json.loads(dumps[0].read_text())
    assert repro["kind"] == "reproducer"
    assert repro["group"] == "z:4"
    assert repro["check"] == "lemma"
    assert repro["seed"] == 9
    assert len(repro["inputs"]) == 2
    assert len(repro["inputs"][0]["real"]) == 4


def test_export_round_trips_identical_tables(tmp_path):
    path = tmp_path / "s4.txt"
    assert main(["export-cayley", "--group", "s:4", "--out", str(path)]) == 0
    loaded = resolve_group(f"file:{path}")
    assert np.array_equal(loaded.mul, build_symmetric(4).mul)


def test_search_cli_is_deterministic(tmp_path):
    base = ["search", "--group", "z:3", "--objective", "theorem",
            "--budget", "200", "--seed", "4"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(base + ["--out", str(a)]) == 0
    assert main(base + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    search = data["search"]
    assert search["evaluations_used"] == 200
    assert len(search["trace"]) == 200
    assert search["trace"] == sorted(search["trace"])
    assert search["best_value"] >= 0.5  # D = 1 control climbs fast


def test_usage_errors_exit_one(tmp_path, capsys):
    assert main(["analyze", "--group", "q:5"]) == 1
    assert main(["verify", "--group", "z:6", "--check", "step9"]) == 1
    assert main(["verify"]) == 1
    assert main(["analyze", "--group", "file:/does/not/exist.txt"]) == 1
    assert main(["verify", "--group", "z:6", "--trials", "0"]) == 1
    assert main(["search", "--group", "z:6", "--objective", "bogus"]) == 1
    assert main(["nonsense"]) == 1
    capsys.readouterr()  # swallow the usage noise


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "verify" in capsys.readouterr().out


# -- report internals ---------------------------------------------------------


def test_run_verification_rejects_bad_plan(s3_spectral):
    h = Harmonic(s3_spectral)
    with pytest.raises(ValueError, match="unknown check"):
        run_verification(h, ["lemma", "stepX"], trials=1)
    with pytest.raises(ValueError, match="trials"):
        run_verification(h, ["lemma"], trials=0)


def test_run_verification_plan_order(s3_spectral):
    h = Harmonic(s3_spectral)
    outcome = run_verification(h, ["step4", "lemma", "corollary"], trials=2, seed=0)
    names = [r["check"] for r in outcome.report["checks"]]
    assert names == ["lemma", "corollary", "corollary_sharp", "step4"]
    tokens = [r["token"] for r in outcome.report["checks"]]
    assert tokens == ["lemma", "corollary", "corollary", "step4"]
    assert all(r["status"] == "pass" for r in outcome.report["checks"])
    assert outcome.failures == []


def test_canonical_json_shape():
    text = canonical_json(
        {"b": [1, 2.5, None, True], "a": {"x": "hi\n", "empty": [], "n": 0.1}}
    )
    assert text == (
        '{\n'
        '  "a": {\n'
        '    "empty": [],\n'
        '    "n": 0.10000000000000001,\n'
        '    "x": "hi\\n"\n'
        '  },\n'
        '  "b": [1, 2.5, null, true]\n'
        '}\n'
    )
    # floats round-trip through the 17-digit rendering
    assert json.loads(canonical_json({"v": 1 / 3}))["v"] == 1 / 3


def test_canonical_json_rejects_bad_values():
    with pytest.raises(ValueError, match="non-finite"):
        canonical_json({"x": float("nan")})
    with pytest.raises(TypeError, match="cannot serialize"):
        canonical_json({"x": object()})


def test_reproducer_payload_shape():
    arr = np.array([1.0 + 2.0j, -0.5 + 0.0j])
    payload = reproducer_payload("z:2", "lemma", 3, 7, (arr,))
    assert payload["inputs"] == [{"real": [1.0, -0.5], "imag": [2.0, 0.0]}]
    assert payload["trial"] == 3 and payload["seed"] == 7
