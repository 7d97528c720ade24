"""Command-line front end.

    cliffordfactor factor-all "t^2 - (2i+j+2)t + (2i+j+2k+1)" --algebra H
    cliffordfactor factor "t^2 + 2is" --algebra S --json
    cliffordfactor project "t^2 + 1 + eps*i" --algebra DH --primal "(t+i)(t-i)"
    echo "t^2 + 2ks" | cliffordfactor factor-all - --algebra S
    cliffordfactor --corpus

Exit codes: 0 ok, 2 no factorization, 1 error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from gmpy2 import is_square

from .algebra import DH, H, S, Algebra, AlgebraElement, Clifford, algebra_from_name
from .errors import CliffordFactorError, NonInvertibleLeading, ParseError, Pseudofactor
from .factor import (
    AffineFamily,
    Diagnostic,
    FamilyFactorization,
    LinearFactorization,
    NoFactorization,
    NoSolution,
    SplitQuadraticResult,
    all_factorizations,
    classify_motion,
    factor_by_projection,
    factor_generic_motion,
    factor_quadratic_split,
    gfactor,
    quaternion_factorizations,
    unbounded_reduce,
    verify,
)
from .kinematics import linkage_csv, linkage_from_factorizations, linkage_to_dict
from .polynomial import AlgebraPolynomial, is_real_norm, mrpf, norm_poly
from .rational import fmt
from .realroots import factor_real, quadratic_choices
from .textio import parse_polynomial

COMMANDS = ("factor", "factor-all", "classify", "verify", "project", "linkage", "norm", "mrpf")
EXIT = {"ok": 0, "no-factorization": 2, "error": 1}


@dataclass(frozen=True)
class Request:
    command: str
    algebra: str
    source: str
    mode: str = "exact"
    ordering: Optional[tuple] = None
    json: bool = False
    factorization: Optional[str] = None
    primal: Optional[str] = None
    output_format: str = "text"


@dataclass
class Response:
    status: str
    payload: dict
    diagnostics: list = field(default_factory=list)
    text: str = ""

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]

    def to_json(self) -> str:
        return json.dumps(self.payload, indent=2, sort_keys=False)


# --------------------------------------------------------------------------
# JSON helpers


def _labels(alg: Algebra) -> list[str]:
    return ["1" if lab == "" else lab for lab in alg.labels]


def element_json(h: AlgebraElement) -> dict:
    return {"value": str(h), "components": dict(zip(_labels(h.algebra), (fmt(x) for x in h.c)))}


def factorization_json(f: LinearFactorization) -> list:
    return [dict(element_json(h), factor=str(p)) for h, p in zip(f.zeros, f.factors)]


def family_json(f) -> dict:
    if isinstance(f, AffineFamily):
        return {
            "kind": "affine",
            "base": factorization_json(f.base),
            "parameters": list(f.parameters),
            "directions": [[element_json(d) for d in ds] for ds in f.directions],
            "display": str(f),
        }
    fams = f.families
    return {
        "kind": "sphere",
        "base": factorization_json(f.sample()),
        "parameters": [f"g{i + 1}" for i in range(len(fams))],
        "directions": [],
        "spheres": [{"slot": s.slot, "x": fmt(s.x), "y_squared": fmt(s.y_squared)} for s in fams],
        "display": str(f),
    }


def diagnostic_json(d) -> dict:
    return {
        "ordering": [str(m) for m in d.ordering],
        "step": d.step,
        "status": d.status,
        "remainder": None if d.remainder is None else str(d.remainder),
    }


def classification_json(c) -> dict:
    return {
        "is_motion": c.is_motion,
        "is_generic": c.is_generic,
        "is_bounded": c.is_bounded,
        "norm": None if c.norm is None else str(c.norm),
        "primal_mrpf": str(c.primal_mrpf),
    }


def _norm_json(C: AlgebraPolynomial) -> str:
    return str(norm_poly(C))


# --------------------------------------------------------------------------
# dispatch


def split_factors(text: str) -> list[str]:
    """Split ``(t-a)(t-b)`` into its top-level parenthesized groups."""
    out, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", i)
            if depth == 0:
                out.append(text[start:i])
        elif depth == 0 and not ch.isspace() and ch != "*":
            raise ParseError(f"expected a product of parenthesized factors, found {ch!r}", i)
    if depth:
        raise ParseError("unbalanced '('", len(text))
    return out


def _parse_factorization(text: str, algebra) -> LinearFactorization:
    polys = [parse_polynomial(p, algebra) for p in split_factors(text)]
    lead = [p for p in polys if p.degree == 0]
    lin = [p for p in polys if p.degree != 0]
    leading = polys[0].algebra.one if polys else algebra_from_name(algebra).one if isinstance(algebra, str) else algebra.one
    for p in lead:
        leading = leading * p.coefficient(0)
    return LinearFactorization(leading, tuple(lin))


def _ordering_from_indices(C: AlgebraPolynomial, indices) -> list:
    N = is_real_norm(C)
    if N is None:
        raise CliffordFactorError(f"nu({C}) is not real; orderings need a real norm polynomial")
    choices = quadratic_choices(factor_real(N))
    try:
        return [choices[i] for i in indices]
    except IndexError:
        raise CliffordFactorError(f"ordering index out of range (there are {len(choices)} quadratic choices)") from None


def _is_square(x) -> bool:
    return is_square(x.numerator) and is_square(x.denominator)


def _primal_candidates(C: AlgebraPolynomial) -> list[LinearFactorization]:
    """Primal factorizations to try for projection.

    Fixed quaternion factorizations are used as they are. Sphere families are
    sampled at ``g = +-y u`` for the coordinate units ``u = i, j, k`` (when
    ``y`` is rational) and at a searched rational point, every family using
    the same choice. Pass an explicit primal to reach any other member.
    """
    out = []
    for ff in quaternion_factorizations(C.primal()):
        if ff.is_fixed:
            out.append(ff.to_linear())
            continue
        fams = ff.families
        choices = []
        if all(_is_square(s.y_squared) for s in fams):
            for u in H.basis()[1:]:
                choices.append([s.y * u for s in fams])
                choices.append([-s.y * u for s in fams])
        gs = [s.default_g() for s in fams]
        choices += [gs, [-g for g in gs]]
        out.extend(ff.sample(c) for c in choices)
    seen, uniq = set(), []
    for f in out:
        if f.sort_key() not in seen:
            seen.add(f.sort_key())
            uniq.append(f)
    return uniq


def _factorizations_for(C: AlgebraPolynomial, req: Request):
    """Return ``(factorizations, families, diagnostics, certificate)`` for factor/factor-all."""
    alg = C.algebra
    facts: list = []
    families: list = []
    diags: list = []
    certificate = None
    single = req.command == "factor"
    if req.ordering is not None:
        ordering = _ordering_from_indices(C, req.ordering)
        try:
            return [gfactor(C, ordering)], [], [], None
        except (Pseudofactor, NonInvertibleLeading) as exc:
            used = tuple(ordering[: exc.step]) if exc.step else tuple(ordering)
            return [], [], [Diagnostic(used, exc.step, exc.code, exc.remainder, str(exc))], None
    if alg is H:
        for ff in quaternion_factorizations(C):
            (facts.append(ff.to_linear()) if ff.is_fixed else families.append(ff))
        if mrpf(C).degree == 0:
            diags = list(all_factorizations(C).diagnostics)
    elif alg is S and C.degree == 2:
        if mrpf(C).degree == 0:
            res = all_factorizations(C)
            facts.extend(res.factorizations)
            diags = list(res.diagnostics)
        split = factor_quadratic_split(C)
        if isinstance(split, NoFactorization):
            certificate = split
        else:
            keys = {f.sort_key() for f in facts}
            facts.extend(f for f in split.factorizations if f.sort_key() not in keys)
            facts.sort(key=LinearFactorization.sort_key)
    elif alg is DH:
        cls = classify_motion(C)
        if cls.is_generic:
            res = all_factorizations(C) if not single else None
            if single:
                facts = [factor_generic_motion(C)]
            else:
                facts = list(res.factorizations)
                diags = list(res.diagnostics)
        else:
            if mrpf(C).degree == 0 and is_real_norm(C) is not None:
                res = all_factorizations(C)
                facts = list(res.factorizations)
                diags = list(res.diagnostics)
            if not facts and C.is_monic():
                for pf in _primal_candidates(C):
                    r = factor_by_projection(C, pf)
                    if isinstance(r, AffineFamily):
                        families.append(r)
                    elif isinstance(r, LinearFactorization):
                        facts.append(r)
    else:
        res = all_factorizations(C)
        facts = list(res.factorizations)
        diags = list(res.diagnostics)
    if single:
        if facts:
            facts = facts[:1]
            families = []
        else:
            families = families[:1]
    return facts, families, diags, certificate


def _base_payload(req: Request, C: Optional[AlgebraPolynomial]) -> dict:
    payload = {
        "command": req.command,
        "input": req.source,
        "algebra": req.algebra,
        "mode": req.mode,
        "status": "ok",
        "norm_polynomial": None,
        "classification": None,
        "factorizations": [],
        "families": [],
        "diagnostics": [],
    }
    if C is not None:
        payload["norm_polynomial"] = _norm_json(C)
        if C.algebra is DH:
            payload["classification"] = classification_json(classify_motion(C))
    return payload


def run(req: Request) -> Response:
    """Execute one request; module errors become ``status = error`` with a stable code."""
    try:
        return _run(req)
    except CliffordFactorError as exc:
        payload = _base_payload(req, None)
        payload["status"] = "error"
        payload["error"] = {"code": exc.code, "message": str(exc)}
        return Response("error", payload, [], f"error [{exc.code}]: {exc}")


def _run(req: Request) -> Response:
    if req.command not in COMMANDS:
        raise CliffordFactorError(f"unknown command {req.command!r}")
    alg = algebra_from_name(req.algebra)
    C = parse_polynomial(req.source, alg)
    payload = _base_payload(req, C)
    lines = [f"C = {C}", f"nu(C) = {payload['norm_polynomial']}"]
    status = "ok"
    cmd = req.command

    if req.mode == "numeric" or cmd == "norm":
        N = is_real_norm(C)
        if N is not None and N.degree > 0:
            try:
                rf = factor_real(N, req.mode)
                payload["real_factorization"] = _real_factorization_json(rf)
            except CliffordFactorError as exc:
                payload["real_factorization"] = {"error": exc.code}

    if cmd in ("factor", "factor-all"):
        facts, families, diags, cert = _factorizations_for(C, req)
        for f in facts:
            if not verify(C, f):
                raise CliffordFactorError(f"internal error: {f} failed verification")
        payload["factorizations"] = [factorization_json(f) for f in facts]
        payload["families"] = [family_json(f) for f in families]
        payload["diagnostics"] = [diagnostic_json(d) for d in diags]
        if cert is not None:
            payload["certificate"] = _certificate_json(cert)
        lines += [f"C = {f}" for f in facts] + [f"C = {f}  (family)" for f in families]
        if not facts and not families:
            status = "no-factorization"
            lines.append("no factorization")
            if cert is not None:
                lines += [f"  {c.M}: {c.reason}" for c in cert.certificate]
        failed = [d for d in diags if not d.ok]
        for d in failed:
            lines.append(
                f"  ordering ({', '.join(map(str, d.ordering))}) fails at step {d.step}: {d.status}, S = {d.remainder}"
            )
    elif cmd == "classify":
        c = classify_motion(C)
        payload["classification"] = classification_json(c)
        lines.append(
            f"motion={c.is_motion} generic={c.is_generic} bounded={c.is_bounded} primal mrpf={c.primal_mrpf}"
        )
    elif cmd == "verify":
        if not req.factorization:
            raise CliffordFactorError("verify needs a factorization (second argument)")
        f = _parse_factorization(req.factorization, alg)
        ok = verify(C, f)
        payload["verified"] = ok
        payload["factorizations"] = [factorization_json(f)] if ok else []
        lines.append("verified" if ok else "NOT a factorization")
        status = "ok" if ok else "no-factorization"
    elif cmd == "project":
        if alg is not DH:
            raise CliffordFactorError("project works on dual quaternion polynomials")
        primals = [_parse_factorization(req.primal, "H")] if req.primal else _primal_candidates(C)
        results = []
        for pf in primals:
            r = factor_by_projection(C, pf)
            entry = {"primal": factorization_json(pf)}
            if isinstance(r, NoSolution):
                entry.update(result="no-solution", rank=r.rank_matrix, rank_augmented=r.rank_augmented)
                lines.append(f"primal {pf}: no solution")
            elif isinstance(r, AffineFamily):
                entry.update(result="family", dimension=r.dimension)
                payload["families"].append(family_json(r))
                lines.append(f"primal {pf}: C = {r}")
            else:
                entry.update(result="unique")
                payload["factorizations"].append(factorization_json(r))
                lines.append(f"primal {pf}: C = {r}")
            results.append(entry)
        payload["projection"] = results
        if not payload["factorizations"] and not payload["families"]:
            status = "no-factorization"
    elif cmd == "linkage":
        facts, families, _, _ = _factorizations_for(C, Request("factor-all", req.algebra, req.source))
        items = list(families) if families and isinstance(families[0], AffineFamily) else list(facts)
        if not items:
            status = "no-factorization"
            lines.append("no factorization, no linkage")
        else:
            link = linkage_from_factorizations(C, items[:2] if not families else items[:1])
            payload["linkage"] = linkage_to_dict(link)
            payload["factorizations"] = [factorization_json(f) for f in facts]
            payload["families"] = [family_json(f) for f in families]
            lines.append(linkage_csv(link) if req.output_format == "csv" else f"{link.topology}: " + ", ".join(str(j) for j in link.joints))
    elif cmd == "norm":
        N = is_real_norm(C)
        lines.append("real" if N is not None else "not real")
        if "real_factorization" in payload:
            lines.append(_real_factorization_text(payload["real_factorization"]))
    elif cmd == "mrpf":
        m = mrpf(C)
        payload["mrpf"] = str(m)
        lines.append(f"mrpf(C) = {m}")

    payload["status"] = status
    diags = payload["diagnostics"]
    return Response(status, payload, diags, "\n".join(lines))


def _real_factorization_json(rf) -> dict:
    num = (lambda x: fmt(x)) if rf.mode == "exact" else float
    return {
        "mode": rf.mode,
        "unit": fmt(rf.unit),
        "linear": [{"root": num(r), "multiplicity": m} for r, m in rf.linear],
        "quadratics": [{"b": num(b), "c": num(c), "multiplicity": m} for b, c, m in rf.quadratics],
        "real_quadratics": [{"b": num(b), "c": num(c), "multiplicity": m} for b, c, m in rf.real_quadratics],
        "max_residual": rf.max_residual,
    }


def _real_factorization_text(rf: dict) -> str:
    if "error" in rf:
        return f"real factorization unavailable ({rf['error']})"

    def term(coef, suffix: str) -> str:
        # coef is a formatted rational (exact mode) or a float (numeric mode)
        text = str(coef)
        if float(coef) == 0:
            return ""
        return (f" - {text[1:]}" if text.startswith("-") else f" + {text}") + suffix

    def power(text: str, m: int) -> str:
        return f"({text})" + (f"^{m}" if m > 1 else "")

    parts = []
    for d in rf["linear"]:
        r = d["root"]
        neg = -r if isinstance(r, float) else (r[1:] if r.startswith("-") else "-" + r)
        parts.append(power("t" + term(neg, ""), d["multiplicity"]))
    for d in rf["quadratics"] + rf["real_quadratics"]:
        parts.append(power("t^2" + term(d["b"], "t") + term(d["c"], ""), d["multiplicity"]))
    unit = "" if rf["unit"] == "1" else f"{rf['unit']} * "
    return f"{rf['mode']} real factorization: {unit}" + ("".join(parts) or "1")


def _certificate_json(cert: NoFactorization) -> dict:
    return {
        "reason": cert.reason,
        "complete": cert.complete,
        "choices": [
            {"M": str(c.M), "reason": c.reason, "remainder": None if c.remainder is None else str(c.remainder)}
            for c in cert.certificate
        ],
    }


# --------------------------------------------------------------------------
# corpus


def response_schema() -> dict:
    """The JSON schema every ``--json`` response validates against."""
    return json.loads((resources.files("cliffordfactor") / "schema.json").read_text())


def bundled_corpus() -> Path:
    return Path(str(resources.files("cliffordfactor") / "corpus"))


def request_from_case(case: dict) -> Request:
    ordering = case.get("ordering")
    return Request(
        command=case["command"],
        algebra=case["algebra"],
        source=case["polynomial"],
        mode=case.get("mode", "exact"),
        ordering=tuple(ordering) if ordering is not None else None,
        json=True,
        factorization=case.get("factorization"),
        primal=case.get("primal"),
    )


def run_corpus(directory: Path, out=sys.stdout) -> int:
    """Run every ``*.input.json`` case and compare with ``*.expected.json``."""
    cases = sorted(directory.glob("*.input.json"))
    failures = 0
    for path in cases:
        name = path.name[: -len(".input.json")]
        case = json.loads(path.read_text())
        expected = json.loads((directory / f"{name}.expected.json").read_text())
        got = json.loads(run(request_from_case(case)).to_json())
        ok = got == expected
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=out)
    print(f"{len(cases) - failures}/{len(cases)} corpus cases pass", file=out)
    return 0 if failures == 0 and cases else 1


# --------------------------------------------------------------------------
# argparse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliffordfactor", description="Factor polynomials over (split/dual) quaternions and Clifford algebras.")
    p.add_argument("command", nargs="?", choices=COMMANDS)
    p.add_argument("polynomial", nargs="?", help="polynomial text, or '-' to read stdin")
    p.add_argument("factorization", nargs="?", help="product of linear factors (verify)")
    p.add_argument("--algebra", default="H", help="H, S, DH or Cl(p,q,r) (default H)")
    p.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    p.add_argument("--ordering", help="comma-separated quadratic-choice indices for Algorithm 2")
    p.add_argument("--primal", help="primal factorization for 'project', e.g. '(t+i)(t-i)'")
    p.add_argument("--format", choices=("text", "csv"), default="text", help="linkage output format")
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    p.add_argument("--corpus", nargs="?", const="", metavar="DIR", help="run a regression corpus (default: bundled)")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    if args.corpus is not None:
        return run_corpus(Path(args.corpus) if args.corpus else bundled_corpus())
    if args.command is None or args.polynomial is None:
        build_parser().error("a command and a polynomial are required")
    source = sys.stdin.read().strip() if args.polynomial == "-" else args.polynomial
    ordering = None
    if args.ordering:
        try:
            ordering = tuple(int(x) for x in args.ordering.split(","))
        except ValueError:
            build_parser().error("--ordering expects comma-separated integers")
    req = Request(
        command=args.command,
        algebra=args.algebra,
        source=source,
        mode=args.mode,
        ordering=ordering,
        json=args.json,
        factorization=args.factorization,
        primal=args.primal,
        output_format=args.format,
    )
    resp = run(req)
    stream = sys.stderr if resp.status == "error" and not req.json else sys.stdout
    print(resp.to_json() if req.json else resp.text, file=stream)
    return resp.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
