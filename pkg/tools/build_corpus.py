"""Regenerate the bundled regression corpus.

Each case is written as ``<name>.input.json`` plus the JSON response the
current implementation gives as ``<name>.expected.json``. Values in the
expected files are checked against the published examples by the test
suite, so regenerating is only needed after a deliberate output change.
"""
from __future__ import annotations

import json
from pathlib import Path

from cliffordfactor.cli import request_from_case, run

CASES = {
    "h_two_factorizations": {"command": "factor-all", "algebra": "H", "polynomial": "t^2 - (2i+j+2)t + (2i+j+2k+1)"},
    "h_real_cubic_family": {"command": "factor-all", "algebra": "H", "polynomial": "t^3 - t^2 + t - 1"},
    "s_six_factorizations": {"command": "factor-all", "algebra": "S", "polynomial": "t^2 - (2 + 2is + js)t + 2is + js + 2ks + 1"},
    "s_no_factorization": {"command": "factor", "algebra": "S", "polynomial": "t^2 + 2is"},
    "s_two_ks": {"command": "factor-all", "algebra": "S", "polynomial": "t^2 + 2ks"},
    "s_null_line_branch": {"command": "factor", "algebra": "S", "polynomial": "t^2 + (1+is)t + 1 + js - ks"},
    "s_quartic_ordering_ok": {
        "command": "factor", "algebra": "S", "ordering": [0, 1, 2],
        "polynomial": "t^4 - (is - 3js + 2ks + 9)t^3 + (7is - 12js + 33ks + 43)t^2 - (82is - 59js + 146ks + 38)t + 162is - 188js + 213ks - 103",
    },
    "s_quartic_ordering_fails": {
        "command": "factor", "algebra": "S", "ordering": [2, 0, 1],
        "polynomial": "t^4 - (is - 3js + 2ks + 9)t^3 + (7is - 12js + 33ks + 43)t^2 - (82is - 59js + 146ks + 38)t + 162is - 188js + 213ks - 103",
    },
    "dh_no_factorization": {"command": "project", "algebra": "DH", "polynomial": "t^2 + eps"},
    "dh_circular_translation": {"command": "project", "algebra": "DH", "polynomial": "t^2 + 1 - eps*(j t - i)"},
    "dh_two_families": {"command": "project", "algebra": "DH", "polynomial": "t^2 + 1 + eps*i"},
    "dh_classify_unbounded": {"command": "classify", "algebra": "DH", "polynomial": "t^2 + eps*i"},
    "dh_times_real": {
        "command": "verify", "algebra": "DH", "polynomial": "(t^2 + 1 + eps*i)(t^2 + 1)",
        "factorization": "(t + 3/5j - 4/5k)(t - 3/5j + 4/5k + eps*(2/5j + 3/10k))(t - 3/5j + 4/5k - eps*(2/5j + 3/10k))(t + 3/5j - 4/5k)",
    },
    "dh_times_quaternion": {
        "command": "verify", "algebra": "DH", "polynomial": "(t^2 + 1 + eps*i)(t - k)",
        "factorization": "(t + k)(t - k - 1/2eps*j)(t - k + 1/2eps*j)",
    },
    "h_four_bar": {"command": "linkage", "algebra": "H", "polynomial": "t^2 - (2i+j+2)t + (2i+j+2k+1)"},
    "s_norm": {"command": "norm", "algebra": "S", "polynomial": "t^2 - (2 + 2is + js)t + 2is + js + 2ks + 1"},
}


def main(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name, case in CASES.items():
        (directory / f"{name}.input.json").write_text(json.dumps(case, indent=2) + "\n")
        resp = run(request_from_case(case))
        (directory / f"{name}.expected.json").write_text(resp.to_json() + "\n")
        print(f"{name}: {resp.status}")


if __name__ == "__main__":
    main(Path(__file__).resolve().parent.parent / "src" / "cliffordfactor" / "corpus")
