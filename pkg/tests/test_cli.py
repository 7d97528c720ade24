from __future__ import annotations

import io
import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffordfactor.algebra import DH, H, S, clifford
from cliffordfactor.cli import EXIT, Request, bundled_corpus, main, response_schema, run, run_corpus
from cliffordfactor.errors import ParseError, UnknownSymbol
from cliffordfactor.polynomial import AlgebraPolynomial
from cliffordfactor.rational import rat
from cliffordfactor.textio import format_polynomial, parse_polynomial

S_SIX = "t^2 - (2 + 2is + js)t + 2is + js + 2ks + 1"
H_QUADRATIC = "t^2 - (2i+j+2)t + (2i+j+2k+1)"

SCHEMA = response_schema()


def run_json(command: str, algebra: str, source: str, **kw) -> dict:
    resp = run(Request(command, algebra, source, json=True, **kw))
    data = json.loads(resp.to_json())
    jsonschema.validate(data, SCHEMA)
    return data


# --------------------------------------------------------------------------
# parser / printer


def test_parse_examples():
    C = parse_polynomial(H_QUADRATIC, "H")
    assert C.degree == 2 and C.coefficient(0) == H.element([1, 2, 1, 2])
    C = parse_polynomial("t^2 + 2is", "S")
    assert C.coefficient(0) == S.element([0, 2, 0, 0])
    assert parse_polynomial("0", "H").is_zero()


def test_parse_errors():
    with pytest.raises(UnknownSymbol):
        parse_polynomial("t + is", "H")
    with pytest.raises(ParseError) as info:
        parse_polynomial("t^2 + (1 + i", "H")
    assert info.value.position == 12


rationals = st.builds(lambda n, d: rat(n) / d, st.integers(-50, 50), st.integers(1, 12))


@pytest.mark.parametrize("alg", [H, S, DH, clifford(1, 1, 1)])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_printer_round_trip(alg, data):
    deg = data.draw(st.integers(0, 3))
    coeffs = [alg.element(data.draw(st.lists(rationals, min_size=alg.dim, max_size=alg.dim))) for _ in range(deg + 1)]
    C = AlgebraPolynomial(coeffs, alg)
    assert parse_polynomial(format_polynomial(C), alg) == C


# --------------------------------------------------------------------------
# run


def test_factor_all_six_factorizations():
    data = run_json("factor-all", "S", S_SIX)
    assert data["status"] == "ok" and len(data["factorizations"]) == 6
    ok = [d for d in data["diagnostics"] if d["status"] == "ok"]
    assert len(ok) == 6
    # canonical order is stable
    assert data == run_json("factor-all", "S", S_SIX)


def test_no_factorization_exit_code():
    resp = run(Request("factor", "S", "t^2 + 2is"))
    assert resp.status == "no-factorization" and resp.exit_code == EXIT["no-factorization"] == 2
    data = json.loads(resp.to_json())
    assert data["certificate"]["complete"] is True


def test_verify_own_factorization():
    resp = run(Request("verify", "H", H_QUADRATIC, factorization="(t - 2i - 1)(t - j - 1)"))
    assert resp.status == "ok" and resp.exit_code == 0
    resp = run(Request("verify", "H", H_QUADRATIC, factorization="(t - j - 1)(t - 2i - 1)"))
    assert resp.status == "no-factorization"


def test_errors_map_to_exit_one():
    resp = run(Request("factor", "H", "t^2 + (1"))
    assert resp.status == "error" and resp.exit_code == 1
    data = json.loads(resp.to_json())
    jsonschema.validate(data, SCHEMA)
    assert data["error"]["code"]


def test_ordering_override():
    src = (
        "t^4 - (is - 3js + 2ks + 9)t^3 + (7is - 12js + 33ks + 43)t^2"
        " - (82is - 59js + 146ks + 38)t + 162is - 188js + 213ks - 103"
    )
    good = run(Request("factor", "S", src, ordering=(0, 1, 2)))
    assert good.status == "ok"
    bad = run_json("factor", "S", src, ordering=(2, 0, 1))
    assert bad["status"] == "no-factorization"
    assert bad["diagnostics"][0]["step"] == 2


def test_project_and_classify():
    data = run_json("project", "DH", "t^2 + 1 + eps*i")
    assert data["status"] == "ok" and len(data["families"]) == 2
    data = run_json("project", "DH", "t^2 + eps", primal="(t)(t)")
    assert data["status"] == "no-factorization"
    data = run_json("classify", "DH", "t^2 + 1 - eps*(j t - i)")
    assert data["classification"]["is_motion"] and not data["classification"]["is_generic"]


def test_norm_mrpf_and_linkage():
    data = run_json("norm", "S", S_SIX)
    assert [r["root"] for r in data["real_factorization"]["linear"]] == ["-1", "0", "2", "3"]
    data = run_json("mrpf", "H", "t^3 - t^2 + t - 1")
    assert data["mrpf"] == "t^3 - t^2 + t - 1"
    data = run_json("linkage", "H", H_QUADRATIC)
    assert data["linkage"]["topology"] == "four-bar"


def test_numeric_mode():
    data = run_json("norm", "H", "t^3 - 2", mode="numeric")
    assert data["real_factorization"]["mode"] == "numeric"


# --------------------------------------------------------------------------
# main / argparse


def test_main_factor_all(capsys):
    assert main(["factor-all", S_SIX, "--algebra", "S", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["factorizations"]) == 6


def test_main_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("t^2 + 2is\n"))
    assert main(["factor", "-", "--algebra", "S"]) == 2
    assert "no factorization" in capsys.readouterr().out


def test_main_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["factor"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["factor", "t", "--ordering", "x"])
    assert info.value.code == 1


def test_bundled_corpus_passes():
    out = io.StringIO()
    assert run_corpus(bundled_corpus(), out) == 0
    assert "FAIL" not in out.getvalue()


def test_corpus_expected_files_validate():
    for path in bundled_corpus().glob("*.expected.json"):
        jsonschema.validate(json.loads(path.read_text()), SCHEMA)


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "cliffordfactor", "factor", "t^2 + 2is", "--algebra", "S"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2, proc.stderr


def test_norm_text_output():
    text = run(Request("norm", "S", S_SIX)).text
    assert "exact real factorization: (t + 1)(t)(t - 2)(t - 3)" in text
    text = run(Request("norm", "S", "t^2 + 2is")).text
    assert "exact real factorization: (t^2 + 2)(t^2 - 2)" in text
