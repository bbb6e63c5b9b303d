"""Command-line front end.

Exit codes: 0 pass, 1 mathematical failure, 2 input error.  Wherever an
algebra or operator file is expected, ``builtin:NAME`` selects a catalog
entry instead (``lie2 catalog`` lists them).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .cohomology import BrokenComplexError, CEComplex, DegreeOverflowError
from .deformations import (DeformationDatum, TrivializationCandidate, check_deformation_datum,
                           check_trivializing_morphism, deform)
from .exactlinalg import parse_rational
from .extensions import build_extension, classify
from .graded import Lie2Algebra, check_axioms
from .nijenhuis import NijenhuisOperator, check_nijenhuis, nijenhuis_deformation
from .reports import AxiomReport, StructureError
from .representations import adjoint_representation, check_representation
from .serialization import (SchemaError, algebra_from_json, algebra_to_json, candidate_from_json,
                            cochain_from_json, cochain_to_json, datum_from_json, datum_to_json, dumps, extension_from_json,
                            extension_to_json, load, operator_from_json, operator_to_json,
                            representation_from_json, save, witness_to_json)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
BUILTIN = "builtin:"


class _Job:
    """Collects the human summary and the machine-readable result of one command."""

    def __init__(self, argv: list[str]):
        self.lines: list[str] = []
        self.result: dict = {"command": argv, "verdicts": {}, "dimensions": {}, "witnesses": {}}

    def say(self, line: str) -> None:
        self.lines.append(line)

    def report(self, title: str, report: AxiomReport) -> bool:
        self.say(f"== {title}: {'PASS' if report.passed else 'FAIL'}")
        self.lines.extend("  " + ln for ln in report.lines())
        self.result["verdicts"][title] = report.to_json()
        return report.passed


# -- input resolution -------------------------------------------------------


def _algebra(src: str) -> Lie2Algebra:
    if src.startswith(BUILTIN):
        name = src[len(BUILTIN):]
        if name not in catalog.ALGEBRAS:
            raise SchemaError(f"unknown builtin algebra '{name}' (have {', '.join(catalog.ALGEBRAS)})")
        return catalog.ALGEBRAS[name]()
    return algebra_from_json(load(src))


def _builtin_operator(src: str) -> tuple[Lie2Algebra, NijenhuisOperator]:
    name = src[len(BUILTIN):]
    if name not in catalog.OPERATORS:
        raise SchemaError(f"unknown builtin operator '{name}' (have {', '.join(catalog.OPERATORS)})")
    return catalog.OPERATORS[name]()


def _operator(src: str, L: Lie2Algebra) -> NijenhuisOperator:
    if src.startswith(BUILTIN):
        L2, N = _builtin_operator(src)
        if (L2.dim0, L2.dim1) != (L.dim0, L.dim1):
            raise SchemaError("builtin operator does not match the algebra's dimensions")
        return N
    return operator_from_json(load(src), (L.dim0, L.dim1))


def _datum(src: str, L: Lie2Algebra) -> DeformationDatum:
    """A degree-2 cochain file, or a Nijenhuis operator whose induced datum is used."""
    if src.startswith(BUILTIN):
        return nijenhuis_deformation(L, _operator(src, L))
    data = load(src)
    if data.get("kind") == "nijenhuis":
        return nijenhuis_deformation(L, operator_from_json(data, (L.dim0, L.dim1)))
    return datum_from_json(data, (L.dim0, L.dim1))


def _candidate(src: str, L: Lie2Algebra) -> TrivializationCandidate:
    if src.startswith(BUILTIN):
        N = _operator(src, L)
        return TrivializationCandidate(N.N0, N.N1)
    data = load(src)
    if data.get("kind") == "nijenhuis":
        N = operator_from_json(data, (L.dim0, L.dim1))
        return TrivializationCandidate(N.N0, N.N1)
    return candidate_from_json(data, (L.dim0, L.dim1))


def _write(path: str | None, data: dict, job: _Job, what: str) -> None:
    if path:
        save(data, path)
        job.say(f"wrote {what} to {path}")


# -- commands ------------------------------------------------------------------------


def cmd_verify(args, job: _Job) -> int:
    L = _algebra(args.algebra)
    job.result["dimensions"] = {"g0": L.dim0, "g-1": L.dim1}
    ok = job.report(f"Lie 2-algebra axioms ({L.name or args.algebra})", check_axioms(L))
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_cohomology(args, job: _Job) -> int:
    L = _algebra(args.algebra)
    if args.rep in (None, "adjoint"):
        mu = adjoint_representation(L)
    else:
        mu = representation_from_json(load(args.rep), (L.dim0, L.dim1))
        rep_report = check_representation(mu, L)
        if not job.report("representation", rep_report):
            return EXIT_FAIL
    degrees = [args.degree] if args.degree is not None else list(range(-1, args.max_degree))
    max_degree = max(args.max_degree, max(degrees) + 1)
    if args.degree is not None and args.degree + 1 > args.max_degree:
        raise DegreeOverflowError(f"degree {args.degree} needs D_{args.degree}, beyond --max-degree {args.max_degree}")
    cx = CEComplex(L, mu, max_degree=max_degree)
    dims = {}
    for n in degrees:
        dims[str(n)] = cx.cohomology_dim(n)
    square = all(cx.check_square_zero(n) for n in range(-1, max(degrees)))
    job.result["dimensions"] = {"H": dims, "C": {str(n): cx.dim(n) for n in range(-1, max_degree + 1)}}
    job.result["verdicts"]["D^2=0"] = square
    if args.degree is not None:
        job.say(str(dims[str(args.degree)]))
    else:
        for n, d in dims.items():
            job.say(f"H^{n} = {d}")
    job.say(f"D^2 = 0 verified through degree {max(degrees)}")
    return EXIT_PASS


def cmd_nijenhuis(args, job: _Job) -> int:
    if args.algebra.startswith(BUILTIN) and args.algebra[len(BUILTIN):] in catalog.OPERATORS and args.operator is None:
        L, N = _builtin_operator(args.algebra)
    else:
        L = _algebra(args.algebra)
        if args.operator is None:
            raise SchemaError("an operator file is required unless the algebra is a builtin operator example")
        N = _operator(args.operator, L)
    ok = job.report("Nijenhuis conditions", check_nijenhuis(L, N))
    if ok:
        w = nijenhuis_deformation(L, N)
        job.result["witnesses"]["deformation"] = datum_to_json(w)
        _write(args.output, datum_to_json(w), job, "induced deformation datum")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_deform(args, job: _Job) -> int:
    L = _algebra(args.algebra)
    w = _datum(args.datum, L)
    ok = job.report("deformation datum", check_deformation_datum(L, w))
    lam = parse_rational(args.lam)
    D = deform(L, w, lam)
    job.say(f"deformed at lambda = {args.lam}")
    _write(args.output, algebra_to_json(D), job, "deformed algebra")
    job.result["witnesses"]["algebra"] = algebra_to_json(D)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_trivialize(args, job: _Job) -> int:
    L = _algebra(args.algebra)
    w = _datum(args.datum, L)
    t = _candidate(args.candidate, L)
    ok = job.report("trivializing morphism", check_trivializing_morphism(L, w, t))
    return EXIT_PASS if ok else EXIT_FAIL


def _extension_input(src: str):
    if src == BUILTIN + "extension":
        return catalog.extension_example()[0]
    return extension_from_json(load(src))


def cmd_extend(args, job: _Job) -> int:
    e = _extension_input(args.extension)
    rep = check_representation(e.rep, e.base, e.fiber)
    ok = job.report("representation", rep)
    cocycle = e.complex().is_cocycle(e.cocycle)
    job.say(f"== 2-cocycle: {'PASS' if cocycle else 'FAIL'}")
    job.result["verdicts"]["2-cocycle"] = cocycle
    E = build_extension(e)
    ok = job.report("extension axioms", check_axioms(E)) and ok and cocycle
    _write(args.output, algebra_to_json(E), job, "extension")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_classify(args, job: _Job) -> int:
    e = _extension_input(args.extension)
    g, h = e.base, e.fiber
    if args.cocycle == BUILTIN + "zero":
        c2 = e.complex().zero(2)
    else:
        c2 = cochain_from_json(load(args.cocycle), (g.dim0, g.dim1, h.dimV0, h.dimV1))
    w = classify(g, h, e.rep, e.cocycle, c2)
    if w is None:
        job.say("not equivalent: c1 - c2 is not a coboundary")
        job.result["verdicts"]["equivalent"] = False
        return EXIT_FAIL
    job.say("equivalent: D(b0, b1, b2) = c1 - c2")
    job.result["verdicts"]["equivalent"] = True
    job.result["witnesses"]["equivalence"] = witness_to_json(w)
    _write(args.output, witness_to_json(w), job, "equivalence witness")
    return EXIT_PASS


def cmd_catalog(args, job: _Job) -> int:
    files = {}
    for name, make in catalog.ALGEBRAS.items():
        files[f"{name}.json"] = algebra_to_json(make())
    for name, make in catalog.OPERATORS.items():
        files[f"{name}_operator.json"] = operator_to_json(make()[1])
    ext, zero = catalog.extension_example()
    files["extension.json"] = extension_to_json(ext)
    files["zero_cocycle.json"] = cochain_to_json(
        zero, (ext.base.dim0, ext.base.dim1, ext.fiber.dimV0, ext.fiber.dimV1))
    for name in files:
        job.say(name)
    if args.write:
        out = Path(args.write)
        out.mkdir(parents=True, exist_ok=True)
        for name, data in files.items():
            save(data, out / name)
        job.say(f"wrote {len(files)} files to {out}")
    return EXIT_PASS


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lie2", description="Exact computations with Lie 2-algebras.")
    p.add_argument("--json", action="store_true", help="print the machine-readable result instead of the summary")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check the Lie 2-algebra axioms")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cohomology", help="dimensions of H^n")
    s.add_argument("algebra")
    s.add_argument("--rep", default="adjoint", help="'adjoint' or a representation file")
    s.add_argument("--degree", type=int)
    s.add_argument("--max-degree", type=int, default=3)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("nijenhuis", help="check a Nijenhuis operator")
    s.add_argument("algebra")
    s.add_argument("operator", nargs="?")
    s.add_argument("--output", help="write the induced deformation datum")
    s.set_defaults(func=cmd_nijenhuis)

    s = sub.add_parser("deform", help="check a deformation datum and instantiate it")
    s.add_argument("algebra")
    s.add_argument("datum", help="degree-2 cochain file or Nijenhuis operator file")
    s.add_argument("--lambda", dest="lam", default="1")
    s.add_argument("--output", help="write the deformed algebra")
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("trivialize", help="check (1+λN0, 1+λN1, λN2) against a deformation")
    s.add_argument("algebra")
    s.add_argument("datum")
    s.add_argument("candidate")
    s.set_defaults(func=cmd_trivialize)

    s = sub.add_parser("extend", help="build an abelian extension from (μ, cocycle)")
    s.add_argument("extension")
    s.add_argument("--output", help="write the extension algebra")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("classify", help="decide equivalence of two extensions")
    s.add_argument("extension", help="extension file supplying g, h, μ and c1")
    s.add_argument("cocycle", help="second cocycle c2 ('builtin:zero' for 0)")
    s.add_argument("--output", help="write the equivalence witness")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("catalog", help="list or write the builtin examples")
    s.add_argument("--write", metavar="DIR")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    job = _Job(argv)
    try:
        code = args.func(args, job)
    except StructureError as exc:
        job.say(f"FAIL: {exc}")
        code = EXIT_FAIL
    except BrokenComplexError as exc:
        job.say(f"TOOL BUG (sign transcription in D): {exc}")
        code = EXIT_FAIL
    except (SchemaError, DegreeOverflowError, ValueError) as exc:
        job.say(f"input error: {exc}")
        code = EXIT_INPUT
    job.result["exit_code"] = code
    if args.json:
        sys.stdout.write(dumps(job.result))
    else:
        for line in job.lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
