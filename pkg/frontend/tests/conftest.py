"""Fixtures generating real input CSVs through the pulsedecay CLI.

The plots package consumes the simulator only through its command-line and
file interfaces, so the test inputs are produced the same way.
"""
import shutil
import subprocess
import sys

import pytest


def run_pulsedecay(*args: str) -> subprocess.CompletedProcess:
    exe = shutil.which("pulsedecay")
    cmd = [exe] if exe else [sys.executable, "-m", "pulsedecay.cli"]
    return subprocess.run([*cmd, *args], capture_output=True, text=True)


@pytest.fixture(scope="session")
def artifacts(tmp_path_factory):
    root = tmp_path_factory.mktemp("csv")
    paths = {
        "single": root / "single.csv",
        "bath": root / "bath.csv",
        "freespace": root / "freespace.csv",
        "oracle": root / "oracle_check.csv",
    }
    jobs = [
        ("single", ["single", "--out", str(paths["single"]), "--dtau-steps", "40"]),
        ("bath", ["bath", "--out", str(paths["bath"])]),
        ("freespace", ["freespace", "--out", str(paths["freespace"])]),
        ("oracle", ["oracle-check", "--out", str(paths["oracle"]),
                    "--n-modes", "400", "--n-cycles", "3"]),
    ]
    for name, args in jobs:
        proc = run_pulsedecay(*args)
        if proc.returncode != 0:
            pytest.fail(f"pulsedecay {name} run failed: {proc.stderr}")
    paths["freespace_1"] = root / "freespace_tau_1.csv"
    paths["freespace_pi"] = root / "freespace_tau_pi.csv"
    assert paths["freespace_1"].exists() and paths["freespace_pi"].exists()
    return paths


def data_section(path) -> bytes:
    """Header row plus data rows of a CSV, without the metadata comments."""
    lines = [l for l in path.read_text().splitlines()
             if l.strip() and not l.startswith("#")]
    return ("\n".join(lines) + "\n").encode()
