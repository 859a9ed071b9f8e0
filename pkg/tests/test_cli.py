"""CLI: argument handling, outputs, determinism, schema validation."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from cubicsums.cli import SCHEMA_PATH, main

SCHEMA = json.loads(SCHEMA_PATH.read_text())


def run_cli(args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "cubicsums.cli", *args],
        capture_output=True,
        text=True,
        **kw,
    )


class TestValueCommands:
    def test_symbol_example(self, capsys):
        assert main(["symbol", "--a", "0+1*w", "--b", "-2+0*w"]) == 0
        assert capsys.readouterr().out.strip() == "omega"

    def test_symbol_json_validates(self, capsys):
        assert main(["symbol", "--a", "0+1*w", "--b", "-2+0*w", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SCHEMA)
        assert payload["value"]["tag"] == "omega"

    def test_gauss_trivial_modulus(self, capsys):
        assert main(["gauss", "--mu", "1+0*w", "--c", "1+0*w"]) == 0
        assert capsys.readouterr().out.startswith("1+0i")

    def test_gauss_json_validates(self, capsys):
        assert main(["gauss", "--mu", "2+1*w", "--c", "4+3*w", "--method", "direct", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SCHEMA)
        assert payload["terms"] == 13

    def test_kloosterman_reports_weil_margin(self, capsys):
        assert main(["kloosterman", "--variant", "ss", "--m", "1+0*w", "--n", "2+1*w", "--c", "3+0*w", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SCHEMA)
        assert payload["weil_covered"] >= abs(complex(payload["value"]["re"], payload["value"]["im"]))

    def test_ramanujan_exact(self, capsys):
        assert main(["ramanujan", "--r", "4+3*w", "--k", "0+0*w"]) == 0
        assert capsys.readouterr().out.startswith("12/13")

    def test_parse_error_is_usage_error(self):
        with pytest.raises(SystemExit):
            main(["symbol", "--a", "junk", "--b", "1+0*w"])

    def test_precondition_error(self):
        with pytest.raises(SystemExit):
            main(["ramanujan", "--r", "2+0*w", "--k", "0+0*w"])


class TestVaughanAndTypeSums:
    def test_vaughan_check_full_match(self, capsys):
        assert main(["vaughan-check", "--max-norm", "300"]) == 0
        out = capsys.readouterr().out
        assert "exact matches: 100.0%" in out

    def test_decomposition_usage_error_cites_condition(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["vaughan-check", "--decomposition", "--x", "200", "--R", "55", "--S", "1"])
        assert "10000X < RS" in str(exc.value)

    def test_decomposition_admissible(self, capsys):
        assert main(["vaughan-check", "--decomposition", "--x", "60", "--R", "1e9", "--S", "0.001"]) == 0
        assert "decomposition residual" in capsys.readouterr().out

    def test_type_sums_runs(self, capsys):
        assert main(["type-sums", "--x", "40", "--a", "1+0*w", "--src", "synthetic", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SCHEMA)


class TestCsvCommands:
    def test_large_sieve_csv(self, tmp_path):
        out = tmp_path / "grid.csv"
        assert main(["large-sieve", "--m-grid", "8", "--n-grid", "8", "--seeds", "2", "--with-omega", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "M,N,seed,lhs,ratio,dual_sq,cs_bound"
        assert len(lines) == 3

    def test_bias_csv_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["bias", "--schedule", "200,500", "--out", str(a)]) == 0
        assert main(["bias", "--schedule", "200,500", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        head, row1, row2 = a.read_text().splitlines()
        assert head == "X,count,sumRe,sumIm,ratio"
        assert float(row1.split(",")[4]) < 1.0  # triangle inequality on g̃

    def test_bias_empty_schedule(self, capsys):
        assert main(["bias", "--schedule", ""]) == 0
        assert capsys.readouterr().out == "X,count,sumRe,sumIm,ratio\n"

    def test_bias_cap(self):
        with pytest.raises(SystemExit):
            main(["bias", "--schedule", "2000000"])

    def test_prime_cache_env(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("CUBICSUMS_CACHE", str(tmp_path))
        assert main(["bias", "--schedule", "200"]) == 0
        capsys.readouterr()
        assert (tmp_path / "primes_le_200.bin").exists()
        # second run reads the cache and produces identical output
        assert main(["bias", "--schedule", "200"]) == 0
        assert "ratio" in capsys.readouterr().out


class TestVerifyAll:
    def test_small_run_passes_and_validates(self, capsys):
        rc = main(["verify-all", "--cap-norm", "60", "--json"])
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SCHEMA)
        assert rc == 0 and payload["all_passed"]
        assert len(payload["suites"]) >= 12

    def test_fault_injection_names_cuberel(self, capsys):
        rc = main(["verify-all", "--cap-norm", "60", "--inject-fault", "cuberel", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert rc == 1
        assert "cuberel" in payload["failed"]

    def test_byte_identical_reports(self, tmp_path):
        r1 = run_cli(["verify-all", "--cap-norm", "60", "--json"])
        r2 = run_cli(["verify-all", "--cap-norm", "60", "--json"])
        assert r1.returncode == 0 and r2.returncode == 0
        assert r1.stdout == r2.stdout

    def test_config_file_presets_with_flag_override(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("cap_norm=60\nseed=7\n")
        rc = main(["--config", str(cfg), "verify-all", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert payload["config"]["cap_norm"] == 60 and payload["config"]["seed"] == 7
        rc = main(["--config", str(cfg), "verify-all", "--json", "--seed", "9"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["config"]["seed"] == 9  # flag wins over config
