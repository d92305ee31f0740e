import json
import subprocess
import sys

import pytest

from fiberising import cli

from test_config import MINIMAL

PHYS = """\
mode: physical
physical: {gamma0: 2.0, chi: 0.5, delta: 0.0, lambda_drive: 1.0, gamma_laser: 0.1}
time: {t_max: 5, steps: 20}
"""


@pytest.fixture
def write(tmp_path):
    def _write(text, name="cfg.yaml"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_simulate_scenario(tmp_path):
    out = tmp_path / "s.csv"
    assert cli.main(["simulate", "--scenario", "fig2a", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,C12,C23,C13" and len(lines) == 601


def test_simulate_config_json(tmp_path, write):
    out = tmp_path / "s.json"
    assert cli.main(["simulate", "--config", write(MINIMAL), "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["times"]) == 600 and doc["meta"]["mode"] == "direct"


def test_sweep(tmp_path, write):
    out = tmp_path / "sw.csv"
    rc = cli.main(["sweep", "--config", write(MINIMAL), "--param", "gamma_laser",
                   "--from", "0.1", "--to", "0.3", "--points", "3", "--out", str(out), "--workers", "2"])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "param,maxC12,maxC23,maxC13,tpeak12,tpeak23,tpeak13" and len(lines) == 4


def test_couplings(capsys, write):
    assert cli.main(["couplings", "--config", write(PHYS)]) == 0
    d = json.loads(capsys.readouterr().out)
    assert abs(d["J12"]) < 1e-12 and d["M"] == [2.0, 0.0]


def test_couplings_requires_physical(write):
    assert cli.main(["couplings", "--config", write(MINIMAL)]) == cli.EXIT_VALIDATION


def test_exit_codes(write, tmp_path):
    assert cli.main(["simulate", "--config", write("mode: [\n")]) == cli.EXIT_PARSE
    assert cli.main(["simulate", "--config", str(tmp_path / "nope.yaml")]) == cli.EXIT_PARSE
    bad = MINIMAL.replace("steps: 600", "steps: 1")
    assert cli.main(["simulate", "--config", write(bad)]) == cli.EXIT_VALIDATION
    degenerate = PHYS.replace("gamma0: 2.0", "gamma0: 1.0")  # printed denominator vanishes
    assert cli.main(["couplings", "--config", write(degenerate)]) == cli.EXIT_NUMERIC
    assert cli.main(["simulate", "--scenario", "fig2a", "--out", str(tmp_path / "x" / "y.csv")]) == cli.EXIT_SINK
    codes = {cli.EXIT_OK, cli.EXIT_PARSE, cli.EXIT_VALIDATION, cli.EXIT_NUMERIC, cli.EXIT_SINK, 2}
    assert len(codes) == 6


def test_module_entry_point_stdout():
    r = subprocess.run([sys.executable, "-m", "fiberising", "simulate", "--scenario", "fig4"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.startswith("t,C12,C23,C13\n")
