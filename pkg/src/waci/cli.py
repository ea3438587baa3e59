"""Command-line front end: waci {check,signature,degree,gram,integrality,smoothable,qform,family}.

All results are exact; rationals are printed as "p/q" or integer strings.
Exit codes: 0 success, 1 internal error, 2 invalid input or degenerate algebra.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from . import matrix as mx
from .arith import INF, SquareClass, as_fraction
from .families import family, verify_family
from .poly import PolyError
from .qform import (
    diagonalize,
    in_witt_Z,
    integrality_over_orientations,
    invariants,
    SingularFormError,
    search_height,
    sign_diagonal_witness,
    signature,
)
from .quotient import (
    InvalidAlgebraError,
    Orientation,
    QuotientRing,
    build_waci,
    el_degree,
    el_orientation,
    middle_form,
    pairing_matrix,
    poincare_series_of,
)
from .smooth import Dim4Witness, Dim8Witness, smoothable, smoothable_form

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID = 0, 1, 2


class InputError(ValueError):
    pass


def load_schema(name: str) -> dict:
    text = resources.files("waci").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def _validate(doc, schema_name: str) -> None:
    try:
        jsonschema.validate(doc, load_schema(schema_name))
    except jsonschema.ValidationError as exc:
        raise InputError(f"{schema_name} input: {exc.message}") from exc


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, SquareClass):
        return str(obj)
    if obj is INF:
        return "inf"
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# inputs


def read_algebra(path: str) -> tuple[dict, bytes]:
    raw = Path(path).read_bytes()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    _validate(doc, "algebra")
    return doc, raw


def ring_from_doc(doc: dict) -> QuotientRing:
    return build_waci([(v["name"], v["weight"]) for v in doc["variables"]], doc["relations"])


def orientation_from(q: QuotientRing, text: str | None) -> tuple[Orientation, str]:
    """Parse an orientation: a rational scalar relative to the top standard
    monomial, or a top-degree polynomial expression."""
    if text is None:
        return el_orientation(q), "eisenbud-levine"
    p = q.ring.parse(text)
    if p.is_constant():
        c = p.constant_value()
        if c == 0:
            raise InputError("orientation must be nonzero")
        return Orientation(c), "input"
    return q.orientation_of(p), "input"


def _orientation_json(q: QuotientRing, o: Orientation, source: str) -> dict:
    return {
        "scale": o.scale,
        "top_monomial": q.format_monomial(q.top_monomial),
        "element": f"{o.scale}*{q.format_monomial(q.top_monomial)}",
        "source": source,
    }


def _middle_basis(args, doc) -> list[str] | None:
    if getattr(args, "middle_basis", None):
        return args.middle_basis
    return doc.get("middle_basis")


def _orientation_text(args, doc) -> str | None:
    if getattr(args, "orientation", None) is not None:
        return args.orientation
    return doc.get("orientation")


def _verdict_json(v) -> dict:
    return to_jsonable(v)


def _witness_json(w) -> dict | None:
    if w is None:
        return None
    if isinstance(w, Dim4Witness):
        return {"kind": "dim4", "t": w.t, "s": w.s, "model": w.model}
    if isinstance(w, Dim8Witness):
        return {
            "kind": "dim8",
            "a": w.a,
            "b": w.b,
            "alphas": list(w.alphas),
            "q1_coeffs": list(w.q1_coeffs),
            "q2_coeff": w.q2_coeff,
            "model": f"{w.a}*CP^4 + {w.b}*CP^2xCP^2",
        }
    return {"kind": str(w)}


# commands


def cmd_check(args, diag):
    doc, raw = read_algebra(args.input)
    q = ring_from_doc(doc)
    series = poincare_series_of(q)
    result = {
        "variables": [{"name": v.name, "weight": v.weight} for v in q.ring.variables],
        "relation_degrees": list(q.relation_degrees),
        "formal_dimension": q.m,
        "hilbert_series": q.graded_dimensions,
        "hilbert_series_degrees": list(range(0, q.m + 1, 2)),
        "poincare_polynomial": series,
        "r": q.graded_dimensions[q.m // 4] if q.m % 4 == 0 else None,
        "dimension": q.dimension,
        "groebner_basis": [str(g) for g in q.gb.generators],
        "standard_monomials": {
            str(d): [q.format_monomial(b) for b in q.degree_basis(d)] for d in range(0, q.m + 1, 2)
        },
        "top_monomial": q.format_monomial(q.top_monomial),
        "duality_verified": True,
    }
    return result, raw


def cmd_signature(args, diag):
    doc, raw = read_algebra(args.input)
    q = ring_from_doc(doc)
    o, source = orientation_from(q, _orientation_text(args, doc))
    form = middle_form(q, o, _middle_basis(args, doc))
    result = {
        "formal_dimension": q.m,
        "rank": form.rank,
        "signature": signature(form.gram),
        "orientation": _orientation_json(q, o, source),
    }
    return result, raw


def cmd_degree(args, diag):
    doc, raw = read_algebra(args.input)
    q = ring_from_doc(doc)
    o = el_orientation(q)
    result = {
        "degree": el_degree(q),
        "el_orientation": _orientation_json(q, o, "eisenbud-levine"),
        "jacobian_class": f"{o.scale}*{q.format_monomial(q.top_monomial)}",
    }
    if args.numeric:
        from .numeric import numeric_degree

        try:
            diag["numeric_degree_trials"] = numeric_degree(q.relations, trials=args.trials)
        except NotImplementedError as exc:
            diag["numeric_degree_trials"] = None
            diag["numeric_degree_note"] = str(exc)
    return result, raw


def cmd_gram(args, diag):
    doc, raw = read_algebra(args.input)
    q = ring_from_doc(doc)
    o, source = orientation_from(q, _orientation_text(args, doc))
    if args.degree is not None:
        mat = pairing_matrix(q, args.degree, o)
        result = {
            "degree": args.degree,
            "rows": [q.format_monomial(b) for b in q.degree_basis(args.degree)],
            "columns": [q.format_monomial(b) for b in q.degree_basis(q.m - args.degree)],
            "matrix": mat,
        }
    else:
        form = middle_form(q, o, _middle_basis(args, doc))
        result = {"basis": list(form.basis_labels), "gram": form.matrix()}
    result["orientation"] = _orientation_json(q, o, source)
    return result, raw


def _integrality_payload(gram, diag) -> dict:
    d = diagonalize(gram)
    inv = invariants(d)
    verdict = integrality_over_orientations(gram)
    diag["primes_examined"] = list(verdict.primes_examined)
    return {
        "rank": inv.rank,
        "signature": inv.signature,
        "diagonal": list(d.entries),
        "discriminant": inv.discriminant,
        "local_invariants": inv.local,
        "in_witt_Z": in_witt_Z(d),
        "integrality": _verdict_json(verdict),
    }


def cmd_integrality(args, diag):
    doc, raw = read_algebra(args.input)
    q = ring_from_doc(doc)
    o, source = orientation_from(q, _orientation_text(args, doc))
    form = middle_form(q, o, _middle_basis(args, doc))
    result = _integrality_payload(form.gram, diag)
    result["orientation"] = _orientation_json(q, o, source)
    return result, raw


def _smooth_json(v) -> dict:
    return {
        "decision": v.decision,
        "reason": v.reason,
        "formal_dimension": v.formal_dimension,
        "signature": v.signature,
        "rank": v.rank,
        "orientation_flipped": v.orientation_flipped,
        "witness": _witness_json(v.witness),
        "integrality": _verdict_json(v.integrality) if v.integrality else None,
        "obstruction": _verdict_json(v.obstruction) if v.obstruction else None,
    }


def cmd_smoothable(args, diag):
    doc, raw = read_algebra(args.input)
    q = ring_from_doc(doc)
    v = smoothable(q)
    if v.integrality:
        diag["primes_examined"] = list(v.integrality.primes_examined)
    return _smooth_json(v), raw


def cmd_qform(args, diag):
    raw = Path(args.input).read_bytes()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.input}: invalid JSON ({exc})") from exc
    _validate(doc, "matrix")
    gram = [[as_fraction(x) for x in row] for row in doc["gram"]]
    if any(len(row) != len(gram) for row in gram) or not mx.is_symmetric(gram):
        raise InputError("gram must be a square symmetric matrix")
    if not gram or mx.det(gram) == 0:
        raise InputError("gram must be nonsingular")
    result = _integrality_payload(gram, diag)
    witness = sign_diagonal_witness(gram, args.height) if result["in_witt_Z"] else None
    result["sign_diagonal_witness"] = witness
    if witness is None and result["in_witt_Z"]:
        diag["sign_diagonal_search"] = f"bound exhausted at height {args.height or search_height()}"
    if "formal_dimension" in doc:
        result["smoothable"] = _smooth_json(smoothable_form(gram, doc["formal_dimension"]))
    return result, raw


def cmd_family(args, diag):
    raw = f"{args.family} {args.c}".encode()
    try:
        c = as_fraction(args.c)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid rational {args.c!r}") from exc
    spec = family(args.family, c)
    algebra = spec.to_algebra_json()
    result = {"algebra": algebra, "oracle": spec.oracle_json()}
    if args.out:
        Path(args.out).write_text(json.dumps(algebra, indent=2) + "\n")
        result["fixture"] = str(args.out)
    if args.verify:
        report = verify_family(spec)
        result["verification"] = {
            "ok": report.ok,
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in report.checks],
            "computed": report.computed,
        }
    return result, raw


COMMANDS = {
    "check": cmd_check,
    "signature": cmd_signature,
    "degree": cmd_degree,
    "gram": cmd_gram,
    "integrality": cmd_integrality,
    "smoothable": cmd_smoothable,
    "qform": cmd_qform,
    "family": cmd_family,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waci", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="human-readable output")

    def algebra_cmd(name, help_text, orientation=False):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("input", help="algebra JSON file")
        if orientation:
            p.add_argument("--orientation", help="rational scalar (times the top standard monomial) or a top-degree expression")
            p.add_argument("--middle-basis", nargs="+", metavar="EXPR", help="explicit basis of the middle degree")
        return p

    algebra_cmd("check", "validate the algebra; Hilbert series and formal dimension")
    algebra_cmd("signature", "signature of the middle form", orientation=True)
    p = algebra_cmd("degree", "Eisenbud-Levine degree of the relations map")
    p.add_argument("--numeric", action="store_true", help="add a floating-point preimage-count cross-check")
    p.add_argument("--trials", type=int, default=20)
    p = algebra_cmd("gram", "Gram matrix of the middle form (or of a duality pairing)", orientation=True)
    p.add_argument("--degree", type=int, help="pairing matrix A^j x A^(m-j) instead of the middle form")
    algebra_cmd("integrality", "integrality test over all orientations", orientation=True)
    algebra_cmd("smoothable", "smoothability verdict with witness")
    p = sub.add_parser("qform", parents=[common], help="invariants of a standalone Gram matrix")
    p.add_argument("input", help='matrix JSON file {"gram": [["p/q", ...], ...]}')
    p.add_argument("--height", type=int, default=None, help="sign-diagonal search bound (default $WACI_SEARCH_HEIGHT or 50)")
    p = sub.add_parser("family", parents=[common], help="emit a fixture for family A(c) or B(c)")
    p.add_argument("family", choices=["A", "B", "a", "b"])
    p.add_argument("c", help="rational parameter, e.g. -2/5")
    p.add_argument("--out", help="write the algebra fixture here")
    p.add_argument("--verify", action="store_true", help="rebuild the ring and replay the oracle")
    return parser


def _render(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    return lines


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return False


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    diag: dict = {}
    start = time.perf_counter()
    try:
        result, raw = COMMANDS[args.command](args, diag)
        report = {
            "command": args.command,
            "input_sha256": hashlib.sha256(raw).hexdigest(),
            "result": to_jsonable(result),
            "diagnostics": {"elapsed_seconds": round(time.perf_counter() - start, 6), **to_jsonable(diag)},
        }
    except (InputError, InvalidAlgebraError, PolyError, SingularFormError, OSError) as exc:
        print(json.dumps({"command": args.command, "error": str(exc), "exit_code": EXIT_INVALID}), file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(json.dumps({"command": args.command, "error": str(exc), "exit_code": EXIT_INVALID}), file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(json.dumps({"command": args.command, "error": f"internal error: {exc!r}", "exit_code": EXIT_INTERNAL}), file=sys.stderr)
        return EXIT_INTERNAL
    if args.pretty:
        print("\n".join(_render(report)))
    else:
        print(json.dumps(report))
    if args.command == "family" and "verification" in report["result"] and not report["result"]["verification"]["ok"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
