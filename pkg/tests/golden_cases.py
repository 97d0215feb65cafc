"""CLI invocations pinned by golden files, and a runner that captures their output."""

import contextlib
import io
import os
from pathlib import Path

from lensobstruct.cli import run

GOLDEN_DIR = Path(__file__).parent / "golden"
REGEN_ENV = "LENSOBSTRUCT_REGEN_GOLDEN"

CASES = {
    "cf_expand_55_21": ["cf", "expand", "-p", "55", "-q", "21"],
    "cf_eval": ["cf", "eval", "-4", "-2", "--json"],
    "cf_reverse_11_3": ["cf", "reverse", "-p", "11", "-q", "3"],
    "cf_det": ["cf", "det", "-3", "-3", "-3", "-3"],
    "matrix_link": ["matrix", "link", "-p", "7", "-q", "2"],
    "matrix_apq": ["matrix", "apq", "-p", "7", "-q", "3", "--csv"],
    "matrix_oracle": ["matrix", "oracle", "-p", "55", "-q", "21", "--json"],
    "tight_list_55_21": ["tight", "list", "-p", "55", "-q", "21"],
    "tight_list_folded": ["tight", "list", "-p", "55", "-q", "21", "--fold-conjugates", "--csv"],
    "tight_count": ["tight", "count", "-p", "31", "-q", "7"],
    "tight_d3": ["tight", "d3", "-p", "7", "-q", "3", "1", "0", "0"],
    "tight_d3can": ["tight", "d3can", "-p", "7", "-q", "3", "--json"],
    "tight_d3can_envelope": ["tight", "d3can", "-p", "9", "-q", "4", "--envelope"],
    "tight_xican": ["tight", "xican", "-p", "13", "-q", "5"],
    "tight_conjugate": ["tight", "conjugate", "-p", "7", "-q", "2", "2", "0"],
    "tight_bounds": ["tight", "bounds", "-p", "55", "-q", "21", "--json"],
    "tight_fcheck": ["tight", "fcheck", "-p", "55", "-q", "21"],
    "rot_7_2": ["rot", "-p", "7", "-q", "2"],
    "rot_9_2_json": ["rot", "-p", "9", "-q", "2", "--json"],
    "feasible_7_2_m5": ["feasible", "-p", "7", "-q", "2", "--tb-bar", "-5", "--json"],
    "feasible_7_2_m4": ["feasible", "-p", "7", "-q", "2", "--tb-bar", "-4"],
    "feasible_9_2_lit": ["feasible", "-p", "9", "-q", "2", "--tb-bar", "-8", "--literature", "--json"],
    "classify_tb": ["classify-tb", "--tb-bar", "-6", "-n", "-7"],
    "surgery_d3": ["surgery-d3", "-p", "7", "-r", "1"],
    "d3_sum": ["d3-sum", "--d1=-2/7", "--d2=-1/2", "--json"],
    "stab": ["stab", "--tb", "0", "-r", "1", "--target", "-6"],
    "cable_tb": ["cable", "tb", "-p", "2", "-q", "7", "--tb-bar", "1"],
    "cable_genus": ["cable", "genus", "-p", "3", "-q", "2", "-g", "1", "--json"],
    "cable_pcopy": ["cable", "pcopy", "--writhe", "3", "--cusps", "4", "-p", "3", "--csv"],
    "cable_twist": ["cable", "twist", "--writhe", "-2", "--cusps", "4", "-p", "2", "--twists", "-1"],
    "cable_identity": ["cable", "identity", "-p", "3", "-q", "5", "-g", "1"],
    "casson_a2": ["casson", "a2", "--poly", "t^3 - 1 + t^-3", "--json"],
    "casson_delta": ["casson", "delta", "--a2", "1", "-n", "-7"],
    "casson_parity": ["casson", "parity", "--a2", "9", "-n", "-3"],
    "sweep_apq_oracle": ["sweep", "--check", "apq-oracle", "--pmax", "30"],
    "sweep_f_recurrence": ["sweep", "--check", "f-recurrence", "--pmax", "40"],
    "sweep_d3_bound": ["sweep", "--check", "d3-bound", "--pmax", "30"],
    "sweep_xican_min": ["sweep", "--check", "xican-min", "--pmax", "30"],
    "sweep_count_bound": ["sweep", "--check", "count-bound", "--pmax", "30"],
    "sweep_lp2_diophantine": ["sweep", "--check", "lp2-diophantine", "--pmax", "71"],
    "sweep_35_triples": ["sweep", "--check", "35-triples"],
    "sweep_p_bound_ai_2": ["sweep", "--check", "p-bound-ai-2", "--pmax", "40"],
    "sweep_p_bound_ai_large": ["sweep", "--check", "p-bound-ai-large", "--pmax", "80"],
}


def capture(argv):
    """(exit code, stdout bytes) of one in-process CLI run."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(list(argv))
    return code, buf.getvalue().encode("utf-8")


def with_workers(argv, workers):
    return list(argv) + ["--workers", str(workers)] if argv[0] == "sweep" else list(argv)


def golden_path(name):
    return GOLDEN_DIR / f"{name}.txt"


def regenerate():
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        code, out = capture(argv)
        assert code == 0, (name, code)
        golden_path(name).write_bytes(out)


if os.environ.get(REGEN_ENV) == "1" and __name__ == "__main__":
    regenerate()
