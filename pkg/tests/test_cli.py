"""CLI subcommands, exit codes, file formats, and corpus golden outputs."""

import io
import json
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from koszulkit.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_gb_command():
    code, out = run_cli("gb", str(DATA / "h_lex.txt"))
    assert code == 0
    assert "elements = 6" in out
    assert "reduced, quadratic, binomial, disjoint-support" in out


def test_nf_command():
    code, out = run_cli("nf", str(DATA / "h_lex.txt"), "x1*x4")
    assert code == 0
    assert out.strip() == "x2*x3"


def test_colon_command():
    code, out = run_cli("colon", str(DATA / "monomial_ideal.txt"), "y")
    assert code == 0
    assert sorted(out.split()) == ["x", "z"]


def test_ann_command():
    # in GF(3)[x,y]/(x^2, x*y) the whole maximal ideal kills x
    code, out = run_cli("ann", str(DATA / "xsq_quotient.txt"), "x")
    assert code == 0
    assert sorted(out.split()) == ["x", "y"]


def test_gset_and_gseq_exit_codes():
    code, out = run_cli("gset", str(DATA / "h_lex.txt"), "--vars", "x1")
    assert code == 1 and "false" in out
    code, out = run_cli("gset", str(DATA / "h_degrevlex.txt"), "--vars", "x4", "x5", "x6")
    assert code == 0 and "true" in out
    code, out = run_cli("gseq", str(DATA / "h_lex.txt"))
    assert code == 1 and "none" in out
    code, out = run_cli("gseq", str(DATA / "h_degrevlex.txt"))
    assert code == 0
    assert out.splitlines()[0] == "{x1, x2, x3, x4, x5, x6}"


def test_gseq_filtration_and_check_roundtrip(tmp_path):
    cert_path = tmp_path / "cert.json"
    code, out = run_cli("gseq-filtration", str(DATA / "h_degrevlex.txt"),
                        "--out", str(cert_path))
    assert code == 0 and "verified = true" in out
    code, out = run_cli("filtration", "check", str(cert_path))
    assert code == 0 and "valid = true" in out
    # break the certificate: drop the top level
    data = json.loads(cert_path.read_text())
    data["levels"] = data["levels"][:-1]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(data))
    code, out = run_cli("filtration", "check", str(broken))
    assert code == 1 and "valid = false" in out and "KF2" in out


def test_bei_command():
    code, out = run_cli("bei", str(DATA / "path4.txt"), "--filtration")
    assert code == 0
    assert "edge binomials form a Groebner basis = true" in out
    assert "filtration verified = true" in out


def test_toric_command():
    code, out = run_cli("toric", str(DATA / "twisted_cubic.txt"))
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_filtration_build():
    code, out = run_cli("filtration", "build", str(DATA / "xsq_quotient.txt"),
                        "--forms", str(DATA / "forms_xy.txt"))
    assert code == 0
    assert "contains maximal ideal = true" in out
    assert '"kind": "partial-koszul"' in out


def test_flags_command():
    code, out = run_cli("flags", str(DATA / "xsq_quotient.txt"),
                        "--forms", str(DATA / "forms_xy.txt"))
    assert code == 0
    assert out.splitlines()[0].startswith("flags = ")


def test_colonsets_command():
    code, out = run_cli("colonsets", str(DATA / "xsq_quotient.txt"),
                        "--gens", "x", "y", "--seeds", "y")
    assert code == 0
    assert out.splitlines()[0].startswith("lists = ")


def test_betti_command():
    code, out = run_cli("betti", str(DATA / "xsq_quotient.txt"),
                        "--ideal", "x", "--steps", "3")
    assert code == 0
    assert "total" in out


def test_hilbert_command():
    code, out = run_cli("hilbert", str(DATA / "monomial_ideal.txt"))
    assert code == 0
    assert "(1 - T)^3" in out


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("field QQ\nvars x\nideal:\nx + unknown\n")
    code, _ = run_cli("gb", str(bad))
    assert code == 2
    code, _ = run_cli("gb", str(tmp_path / "missing.txt"))
    assert code == 2


def test_unknown_corpus_case():
    assert main(["corpus", "definitely-not-a-case"]) == 2


def _golden_lines(name):
    text = (GOLDEN / f"{name}.txt").read_text()
    return [ln for ln in text.splitlines() if ln and not ln.startswith("#")]


FAST_GOLDEN_CASES = [
    "sec3-gsequences",
    "h-gseq-filtration",
    "h-explicit-filtration",
    "g-explicit-filtration",
    "roos45",
    "b4t-gquadratic",
]


@pytest.mark.parametrize("name", FAST_GOLDEN_CASES)
def test_corpus_cases_match_golden(name):
    code, out = run_cli("corpus", name)
    assert code == 0
    got = [ln for ln in out.splitlines() if ln]
    assert got == _golden_lines(name)


def test_corpus_outputs_are_deterministic():
    _, first = run_cli("corpus", "roos45")
    _, second = run_cli("corpus", "roos45")
    assert first == second
