"""
Figure data through the command line
====================================

The ``pasts`` command writes CSV that any plotting tool can read. This script
drives it through ``pasts.cli.main`` so it runs without a shell; the
equivalent shell commands are printed alongside.
"""

import csv
import sys
import tempfile
from pathlib import Path

from pasts.cli import main

out = Path(tempfile.mkdtemp(prefix="pasts-demo-"))
jobs = {
    "wigner_m1.csv": ["wigner", "--lambda", "0.3", "--nc", "0.1", "--m", "1", "--grid", "-3:3:61"],
    "wigner_m2.csv": ["wigner", "--lambda", "0.3", "--nc", "0.1", "--m", "2", "--grid", "-3:3:61"],
    "pnd_m1.csv": ["pnd", "--lambda", "0.3", "--nc", "1", "--m", "1"],
    "evolved.csv": ["wigner-evolved", "--lambda", "0.3", "--nc", "0.3", "--m", "1", "--N", "0.2",
                    "--kt", "0.2", "--grid", "-3:3:61"],
}
for name, argv in jobs.items():
    print("$ pasts", " ".join(argv), "--out", name)
    if main(argv + ["--out", str(out / name)]) != 0:
        sys.exit("command failed")

with open(out / "wigner_m1.csv") as fh:
    print(fh.readline().strip()[:100], "...")
    rows = list(csv.DictReader(fh))
lowest = min(rows, key=lambda r: float(r["w"]))
print(f"{len(rows)} grid points, minimum {float(lowest['w']):.5f} at ({lowest['re']}, {lowest['im']})")

print("\n$ pasts threshold --N 0.2")
main(["threshold", "--N", "0.2"])
print("$ pasts q --lambda 0 --nc 0 --m 1")
main(["q", "--lambda", "0", "--nc", "0", "--m", "1"])
print("\nfiles in", out)
