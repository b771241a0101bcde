"""Command-line front end.

Reads a JSON variety description (per-branch characteristic exponents,
singular-locus faces, optional extra faces, and pairwise contact exponents),
runs the per-branch analysis, and emits a human-readable or machine-readable
report.  The machine format is canonical JSON: stable key order, rationals as
[numerator, denominator] pairs, newline-terminated, so byte-identical reruns
are guaranteed.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import conegeom, oracle, qobranch
from .errors import DomainError, SchemaError
from .intlat import MAX_DIM, Lattice, RatVec
from .nashmap import (
    BranchInput,
    BranchReport,
    Contact,
    VarietyReport,
    analyze_variety,
)
from .qobranch import BranchSpec

SCHEMA_VERSION = 1


# ---------------------------------------------------------------- input file


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(path, message)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_rational(value, path: str) -> Fraction:
    _expect(
        isinstance(value, list) and len(value) == 2, path, "expected a [num, den] pair"
    )
    num, den = value
    _expect(_is_int(num) and _is_int(den), path, "num and den must be integers")
    _expect(den > 0, path, "denominator must be positive")
    return Fraction(num, den)


def _parse_vector(value, dim: int, path: str) -> RatVec:
    _expect(isinstance(value, list), path, "expected a list of [num, den] pairs")
    _expect(len(value) == dim, path, f"expected {dim} coordinates, got {len(value)}")
    return RatVec(_parse_rational(c, f"{path}[{i}]") for i, c in enumerate(value))


def _parse_faces(value, path: str) -> tuple[tuple[int, ...], ...]:
    if value is None:
        return ()
    _expect(isinstance(value, list), path, "expected a list of index lists")
    out = []
    for i, face in enumerate(value):
        _expect(
            isinstance(face, list) and all(_is_int(x) for x in face),
            f"{path}[{i}]",
            "expected a list of integers",
        )
        out.append(tuple(face))
    return tuple(out)


def parse_variety(doc) -> tuple[int, list[BranchInput]]:
    """Validate a parsed JSON document and build the branch inputs."""
    _expect(isinstance(doc, dict), "$", "top level must be an object")
    version = doc.get("schema_version", SCHEMA_VERSION)
    _expect(
        _is_int(version) and version == SCHEMA_VERSION,
        "$.schema_version",
        f"unsupported schema version {version!r}, expected {SCHEMA_VERSION}",
    )
    known = {"schema_version", "dim", "branches", "contacts"}
    for key in doc:
        _expect(key in known, f"$.{key}", "unknown key")
    dim = doc.get("dim")
    _expect(
        _is_int(dim) and 1 <= dim <= MAX_DIM,
        "$.dim",
        f"dim must be an integer in 1..{MAX_DIM}",
    )
    raw_branches = doc.get("branches")
    _expect(isinstance(raw_branches, list), "$.branches", "expected a list")

    labels: list[str] = []
    parsed = []
    for b, raw in enumerate(raw_branches):
        path = f"$.branches[{b}]"
        _expect(isinstance(raw, dict), path, "expected an object")
        for key in raw:
            _expect(
                key in {"label", "char_exponents", "sing_faces", "extra_faces"},
                f"{path}.{key}",
                "unknown key",
            )
        label = raw.get("label")
        _expect(
            isinstance(label, str) and label != "", f"{path}.label", "nonempty string required"
        )
        _expect(label not in labels, f"{path}.label", f"duplicate label {label!r}")
        labels.append(label)
        exps_raw = raw.get("char_exponents", [])
        _expect(isinstance(exps_raw, list), f"{path}.char_exponents", "expected a list")
        exps = tuple(
            _parse_vector(e, dim, f"{path}.char_exponents[{j}]")
            for j, e in enumerate(exps_raw)
        )
        parsed.append(
            {
                "label": label,
                "exps": exps,
                "sing": _parse_faces(raw.get("sing_faces"), f"{path}.sing_faces"),
                "extra": _parse_faces(raw.get("extra_faces"), f"{path}.extra_faces"),
            }
        )

    contacts_raw = doc.get("contacts", [])
    _expect(isinstance(contacts_raw, list), "$.contacts", "expected a list")
    contact_map: dict[str, list[Contact]] = {label: [] for label in labels}
    for c, raw in enumerate(contacts_raw):
        path = f"$.contacts[{c}]"
        _expect(isinstance(raw, dict), path, "expected an object")
        for key in raw:
            _expect(
                key in {"from_label", "to_label", "exponent"},
                f"{path}.{key}",
                "unknown key",
            )
        frm, to = raw.get("from_label"), raw.get("to_label")
        _expect(isinstance(frm, str), f"{path}.from_label", "string required")
        _expect(isinstance(to, str), f"{path}.to_label", "string required")
        _expect(frm in contact_map, f"{path}.from_label", f"unknown branch {frm!r}")
        _expect(to in contact_map, f"{path}.to_label", f"unknown branch {to!r}")
        exponent = _parse_vector(raw.get("exponent"), dim, f"{path}.exponent")
        contact_map[frm].append(Contact(exponent=exponent, partner=to))

    inputs = [
        BranchInput(
            spec=BranchSpec(dim=dim, char_exponents=p["exps"], label=p["label"]),
            sing_faces=p["sing"],
            extra_faces=p["extra"],
            contacts=tuple(contact_map[p["label"]]),
        )
        for p in parsed
    ]
    return dim, inputs


# ------------------------------------------------------------------- output


def _vec_json(v: RatVec) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in v.coords]


def _divisor_json(d: conegeom.Divisor) -> dict:
    return {
        "vector": _vec_json(d.vector),
        "primitive": _vec_json(d.primitive),
        "multiplicity": d.multiplicity,
        "origin": d.origin,
    }


def _lattice_json(l: Lattice) -> dict:
    return {"denom": l.denom, "scaled_basis": [list(row) for row in l.scaled_basis]}


def _branch_json(report: BranchReport, s_min, exps) -> dict:
    n = report.lattices.N
    return {
        "label": report.label,
        "char_exponents": [_vec_json(v) for v in exps],
        "degree": report.lattices.degree_n,
        "tower_step_indices": list(report.lattices.step_indices),
        "lattice_M": _lattice_json(report.lattices.M),
        "lattice_N": _lattice_json(n),
        "relevant_faces": [
            {
                "indices": list(idx),
                "regular": face.regular,
                "primitive_generators": [_vec_json(p) for p in face.primgens],
            }
            for idx, face in (
                (idx, conegeom.face_data(n, idx)) for idx in report.relevant.faces
            )
        ],
        "singular_faces_of_sigma": [list(i) for i in report.singular_faces_of_sigma],
        "s_min": [_divisor_json(d) for d in s_min],
        "E": [_divisor_json(d) for d in report.E],
        "V": [_divisor_json(d) for d in report.V],
        "nash_count": report.nash_count,
        "diagnostics": [
            {"code": d.code, "message": d.message} for d in report.diagnostics
        ],
    }


def report_to_dict(result: VarietyReport, dim: int, s_mins, exps_by_label) -> dict:
    branches = [
        _branch_json(report, s_mins[report.label], exps_by_label[report.label])
        for report in result.branches
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": dim,
        "branches": branches,
        "total_nash": result.total_nash,
        "total_essential": result.total_essential,
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _fmt_face(idx) -> str:
    return "{" + ",".join(str(i) for i in idx) + "}"


def _fmt_divisor(d: conegeom.Divisor) -> str:
    return f"{d.vector} = {d.multiplicity}*{d.primitive}"


def render_text(result: VarietyReport, dim: int, s_mins, exps_by_label) -> str:
    lines = [f"variety: dim {dim}, {len(result.branches)} branch(es)", ""]
    for report in result.branches:
        n = report.lattices.N
        lines.append(f"branch {report.label!r}")
        exps = exps_by_label[report.label]
        lines.append(
            "  characteristic exponents: "
            + (", ".join(str(v) for v in exps) if exps else "(none, smooth)")
        )
        lines.append(
            f"  tower step indices: {list(report.lattices.step_indices)}"
            f"  degree n = {report.lattices.degree_n}"
        )
        lines.append("  N basis: " + ", ".join(str(v) for v in n.basis))
        lines.append(
            "  singular faces of sigma: "
            + (
                ", ".join(_fmt_face(i) for i in report.singular_faces_of_sigma)
                or "(none)"
            )
        )
        if report.relevant.faces:
            lines.append("  relevant faces:")
            for idx in report.relevant.faces:
                face = conegeom.face_data(n, idx)
                tag = "regular" if face.regular else "singular"
                gens = ", ".join(str(p) for p in face.primgens)
                lines.append(f"    {_fmt_face(idx)}: {tag}, edge generators {gens}")
        else:
            lines.append("  relevant faces: (none)")
        lines.append(
            "  S_min: "
            + ("; ".join(_fmt_divisor(d) for d in s_mins[report.label]) or "(empty)")
        )
        lines.append(
            "  E (barycenters): "
            + ("; ".join(_fmt_divisor(d) for d in report.E) or "(empty)")
        )
        lines.append(
            "  V (surviving minimal): "
            + ("; ".join(_fmt_divisor(d) for d in report.V) or "(empty)")
        )
        for diag in report.diagnostics:
            lines.append(f"  note [{diag.code}]: {diag.message}")
        lines.append(
            f"  nash components = essential divisors = {report.nash_count}"
        )
        lines.append("")
    lines.append(
        f"totals: nash components = essential divisors = {result.total_nash}"
    )
    if result.total_nash == 0:
        lines.append(
            "warning: B is empty on every branch; the variety is smooth or the "
            "relative set is empty"
        )
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ command


def _oracle_check(result: VarietyReport, s_mins) -> None:
    for report in result.branches:
        n = report.lattices.N
        bound = max(report.lattices.degree_n, 1)
        brute = oracle.brute_minimal_S(n, bound)
        main = [d.vector for d in s_mins[report.label]]
        if brute != main:
            raise DomainError(
                "ORACLE_MISMATCH",
                f"minimal singular-face points differ: main {main}, brute {brute}",
                branch=report.label,
            )
        for size in range(1, n.dim + 1):
            for idx in itertools.combinations(range(1, n.dim + 1), size):
                fast = conegeom.face_data(n, idx).regular
                slow = oracle.brute_face_index(n, idx) == 1
                if fast != slow:
                    raise DomainError(
                        "ORACLE_MISMATCH",
                        f"regularity of face {idx} differs: main {fast}, brute {slow}",
                        branch=report.label,
                    )


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qonash",
        description=(
            "Essential divisors and Nash components of quasi-ordinary "
            "hypersurface germs, from characteristic exponent data."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    analyze = sub.add_parser("analyze", help="analyze a variety description file")
    analyze.add_argument("file", help="JSON description file, or - for stdin")
    analyze.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt"
    )
    analyze.add_argument(
        "--oracle-check",
        action="store_true",
        help="recompute core results by brute force and fail on mismatch",
    )
    analyze.add_argument(
        "--max-dim", type=int, default=8, help="refuse inputs above this dimension"
    )
    analyze.add_argument(
        "--max-index",
        type=int,
        default=10**6,
        help="cap on lattice indices and enumeration sizes",
    )
    args = parser.parse_args(argv)

    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"qonash: error: cannot read input: {exc}", file=sys.stderr)
        return 2

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"qonash: error: invalid JSON: {exc}", file=sys.stderr)
        return 2

    try:
        dim, inputs = parse_variety(doc)
        if dim > args.max_dim:
            raise DomainError(
                "LIMIT_EXCEEDED", f"dim {dim} above --max-dim {args.max_dim}"
            )
        for branch in inputs:
            lattices = qobranch.build_tower(branch.spec)
            if lattices.degree_n > args.max_index:
                raise DomainError(
                    "LIMIT_EXCEEDED",
                    f"degree {lattices.degree_n} above --max-index {args.max_index}",
                    branch=branch.spec.label,
                )
        result = analyze_variety(inputs, max_points=args.max_index)
        s_mins = {
            r.label: conegeom.minimal_toric_divisors(
                r.lattices.N, max_points=args.max_index
            )
            for r in result.branches
        }
        if args.oracle_check:
            _oracle_check(result, s_mins)
    except SchemaError as exc:
        print(f"qonash: error: schema: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"qonash: error: {exc}", file=sys.stderr)
        return 1

    exps_by_label = {b.spec.label: b.spec.char_exponents for b in inputs}
    for report in result.branches:
        for diag in report.diagnostics:
            print(
                f"qonash: branch {report.label!r}: [{diag.code}] {diag.message}",
                file=sys.stderr,
            )
    if args.fmt == "json":
        payload = report_to_dict(result, dim, s_mins, exps_by_label)
        sys.stdout.write(render_json(payload))
    else:
        sys.stdout.write(render_text(result, dim, s_mins, exps_by_label))
    return 0


def main() -> None:
    sys.exit(run())
