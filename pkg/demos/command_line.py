"""
The egcert command
==================

The same operations from the shell.  Exit codes: 0 ok, 2 bad input,
3 minimum degree below 3, 4 internal invariant violation, 5 sweep failures.
"""

import subprocess
import sys
import tempfile
from pathlib import Path


def egcert(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "egcert", *args], input=stdin,
                          capture_output=True, text=True, check=False)
    print(f"$ egcert {' '.join(args)}   -> exit {proc.returncode}")
    print(proc.stdout.rstrip())
    if proc.stderr:
        print(proc.stderr.rstrip())
    print()


with tempfile.TemporaryDirectory() as tmp:
    k4 = Path(tmp, "k4.txt")
    k4.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    egcert("check", str(k4))

    egcert("extract", "-", "--goal", "p8", "--trace", stdin="IheA@GUAo\n")
    egcert("check", "-", "--json", "--max-cycle", "6", stdin="IheA@GUAo\n")

    # a bad byte: the message names its offset
    egcert("check", "-", stdin="C}\x01\n")

    egcert("verify-theorems", "--n-min", "4", "--n-max", "6")
