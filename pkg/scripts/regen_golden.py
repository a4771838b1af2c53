"""Regenerate the CLI golden files under tests/golden.

Each file stores the argv, the exit code and the exact stdout.  Run after
an intentional output change and review the diff before committing.
"""

import io
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from cyclopoint.cli import run  # noqa: E402

CASES = {
    "cyclo_part_x2m1": ["cyclo-part", "x^2-1"],
    "cyclo_part_golden_phi5": ["cyclo-part", "(x^2-x-1)*(x^4+x^3+x^2+x+1)"],
    "cyclo_part_pretty": ["--pretty", "cyclo-part", "x^6-1"],
    "solve_family_nx1": ["solve-family", "n*x-1"],
    "solve_family_split": ["solve-family", "(n-3)*(x^2+x+1)"],
    "solve_curve_xy": ["solve-curve", "x*y-1"],
    "solve_curve_sum2": ["solve-curve", "x+y-2"],
    "metallic_test_golden": ["metallic", "test", "5", "2", "1"],
    "metallic_test_fast": ["metallic", "test", "8", "3", "1", "--method", "fast"],
    "metallic_test_absent": ["metallic", "test", "7", "2", "1"],
    "metallic_table": ["metallic", "table"],
    "metallic_table_pretty": ["metallic", "table", "--pretty"],
    "ratio_degree": ["ratio", "degree", "5", "2", "1"],
    "ratio_degree_even": ["ratio", "degree", "10", "1", "3"],
    "ratio_defective": ["ratio", "defective", "5", "2", "1"],
    "ratio_not_defective": ["ratio", "defective", "10", "1", "2"],
    "ratio_minpoly": ["ratio", "minpoly", "5", "2", "1"],
    "cj_list_3": ["cj", "list", "--bound", "3"],
    "cj_lemma42": ["cj", "lemma42"],
    "scan_12": ["scan", "--nmax", "12"],
}


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return {"argv": argv, "exit": code, "stdout": out.getvalue()}


def main():
    dest = ROOT / "tests" / "golden"
    dest.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        doc = capture(argv)
        (dest / f"{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(f"{name}: exit {doc['exit']}")


if __name__ == "__main__":
    main()
