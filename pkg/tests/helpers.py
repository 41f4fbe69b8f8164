import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"

# job file stem -> expected exit code
GOLDEN_CASES = {
    "resolve_orthant": 0,
    "resolve_chamber": 0,
    "validate_line": 2,
}


def run_cli(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "gembed", *args], input=stdin,
                          capture_output=True, text=True, encoding="utf-8")


def golden_result(stem):
    """Run one golden job; returns (exit code matches, stdout matches)."""
    proc = run_cli(str(GOLDEN / f"{stem}.json"))
    expected = (GOLDEN / f"{stem}.out.json").read_text(encoding="utf-8")
    return proc.returncode == GOLDEN_CASES[stem], proc.stdout == expected
