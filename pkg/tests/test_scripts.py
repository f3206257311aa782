import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("argv", [
    ["master_sweep.py", "--max-n", "4", "--order-per-n", "3"],
    ["print_identities.py", "--order", "5", "--max-n", "3"],
    ["crystal_walk.py", "--n", "3", "--i", "2", "--depth", "6"],
])
def test_script_runs_clean(argv):
    res = subprocess.run([sys.executable, str(SCRIPTS / argv[0]), *argv[1:]],
                         capture_output=True, text=True, timeout=60)
    assert res.returncode == 0, res.stderr
    assert "FAIL" not in res.stdout and "mismatch" not in res.stdout
