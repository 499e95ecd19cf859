"""Command-line front end.

Exit codes:
    0  success
    1  ``table`` found a row that disagrees with the published values
    2  usage error (unknown command, bad flags)
    3  invalid cone or matrix input
    4  internal invariant violation
    5  ``conjecture`` found ``|A^1| != |delta|`` in dimension 2 or 3
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from . import __version__
from .chow import InvariantViolation, chow_group, chow_groups, class_group
from .cones import ConeError, delta, make_cone, normalize_2d, normalize_3d
from .g0 import UNDETERMINED, conjecture_check, g0_report
from .linalg import AbelianGroup, IntMatrix, smith_normal_form

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INPUT, EXIT_INVARIANT, EXIT_COUNTEREXAMPLE = range(6)

# generators, delta, A^1, A^2 as published
TABLE_ROWS = [
    ([(1, 0, 0), (1, 2, 0), (1, 2, 4)], 8, "C2×C4", "0"),
    ([(1, 0, 0), (1, 3, 0), (1, 3, 9)], 27, "C3×C9", "0"),
    ([(1, 0, 0), (2, 3, 0), (3, 5, 7)], 21, "C21", "C7"),
    ([(1, 0, 0), (2, 5, 0), (3, 7, 9)], 45, "C45", "C9"),
    ([(1, 0, 0), (5, 7, 11), (7, 8, 19)], 45, "C45", "C5"),
    ([(1, 0, 0), (3, 5, 0), (7, 9, 13)], 65, "C65", "C13"),
    ([(1, 0, 0), (3, 7, 0), (5, 8, 11)], 77, "C77", "0"),
    ([(1, 0, 0), (5, 7, 0), (7, 8, 19)], 133, "C133", "C19"),
]


class ConeSpecError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


@dataclass(frozen=True)
class ConeSpec:
    generators: tuple[tuple[int, ...], ...]
    label: str | None = None

    @property
    def dim(self) -> int:
        return len(self.generators[0]) if self.generators else 0


_INT = re.compile(r"\s*([+-]?\d+)\s*$")
_FLOAT_TOKEN = re.compile(r"-?\d+(\.\d*|(?:\.\d*)?[eE][+-]?\d+)")


def _parse_inline_rows(text: str) -> tuple[tuple[int, ...], ...]:
    rows = []
    pos = 0
    for chunk in text.split(";"):
        row = []
        col = pos
        for tok in chunk.split(","):
            m = _INT.match(tok)
            if not m:
                stripped = tok.strip()
                kind = "float not allowed" if _FLOAT_TOKEN.fullmatch(stripped) else "malformed integer"
                offset = col + (len(tok) - len(tok.lstrip()))
                raise ConeSpecError(f"{kind}: {stripped!r}", 1, offset + 1)
            row.append(int(m.group(1)))
            col += len(tok) + 1
        if rows and len(row) != len(rows[0]):
            raise ConeSpecError(
                f"ragged rows: vector {len(rows) + 1} has {len(row)} entries, expected {len(rows[0])}",
                1, pos + 1)
        rows.append(tuple(row))
        pos += len(chunk) + 1
    return tuple(rows)


def _line_col(text: str, index: int) -> tuple[int, int]:
    line = text.count("\n", 0, index) + 1
    return line, index - (text.rfind("\n", 0, index) + 1) + 1


def _parse_document(text: str) -> ConeSpec:
    def reject_float(token):
        i = text.find(token)
        raise ConeSpecError(f"float not allowed: {token}", *_line_col(text, max(i, 0)))

    try:
        doc = json.loads(text, parse_float=reject_float)
    except json.JSONDecodeError as e:
        raise ConeSpecError(e.msg, e.lineno, e.colno) from None
    if isinstance(doc, dict) and "generators" not in doc and isinstance(doc.get("inputs"), dict):
        doc = doc["inputs"]
    if not isinstance(doc, dict) or not isinstance(doc.get("generators"), list):
        raise ConeSpecError('expected an object with a "generators" array')
    rows = []
    for i, g in enumerate(doc["generators"]):
        if not isinstance(g, list):
            raise ConeSpecError(f"generator {i + 1} is not an array")
        row = []
        for j, x in enumerate(g):
            if isinstance(x, str) and _INT.match(x):
                x = int(x)
            if isinstance(x, bool) or not isinstance(x, int):
                raise ConeSpecError(f"generator {i + 1}, entry {j + 1}: not an integer: {x!r}")
            row.append(x)
        if rows and len(row) != len(rows[0]):
            raise ConeSpecError(f"ragged rows: generator {i + 1} has {len(row)} entries")
        rows.append(tuple(row))
    label = doc.get("label")
    return ConeSpec(tuple(rows), label if isinstance(label, str) else None)


def parse_cone(text: str) -> ConeSpec:
    """Parse ``"x1,y1;x2,y2"``, a JSON document, or the path of a JSON file."""
    stripped = text.strip()
    if not stripped.startswith("{") and os.path.isfile(text):
        with open(text) as fh:
            return _parse_document(fh.read())
    if stripped.startswith("{"):
        return _parse_document(text)
    if not stripped:
        raise ConeSpecError("empty cone specification")
    return ConeSpec(_parse_inline_rows(text))


def parse_matrix(text: str) -> IntMatrix:
    return IntMatrix.from_rows(parse_cone(text).generators)


# ------------------------------------------------------------ rendering

def _group_json(g: AbelianGroup | None):
    if g is None:
        return None
    return {"free_rank": str(g.free_rank), "invariant_factors": [str(t) for t in g.torsion]}


def _vec_json(v):
    return [str(x) for x in v]


def _matrix_json(M: IntMatrix):
    return [_vec_json(r) for r in M.tolist()]


def _vec_text(v):
    return "(" + ",".join(map(str, v)) + ")"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _kv(pairs) -> str:
    return _table([[k, v] for k, v in pairs])


# ------------------------------------------------------------- commands

def cmd_analyze(args):
    spec = parse_cone(args.cone)
    cone = make_cone(spec.generators)
    d = delta(cone)
    res = {"dim": str(cone.ambient_dim), "delta": str(d),
           "generators": [_vec_json(g) for g in cone.generators], "valid": True}
    text = _kv([("dim", str(cone.ambient_dim)), ("delta", str(d)),
                ("generators", " ".join(_vec_text(g) for g in cone.generators)),
                ("valid", "yes")])
    return EXIT_OK, {"generators": [_vec_json(g) for g in spec.generators]}, res, text


def cmd_normalize(args):
    spec = parse_cone(args.cone)
    cone = make_cone(spec.generators)
    if cone.ambient_dim == 2:
        T, image = normalize_2d(cone)
    elif cone.ambient_dim == 3:
        T, image = normalize_3d(cone)
    else:
        raise ConeError("normal forms exist for dimensions 2 and 3 only")
    res = {"transform": _matrix_json(T.matrix),
           "normalized_generators": [_vec_json(g) for g in image.generators],
           "delta": str(delta(cone))}
    text = "transform:\n" + str(T.matrix) + "\nnormalized generators: " + \
        " ".join(_vec_text(g) for g in image.generators) + f"\ndelta: {delta(cone)}"
    return EXIT_OK, {"generators": [_vec_json(g) for g in spec.generators]}, res, text


def cmd_chow(args):
    spec = parse_cone(args.cone)
    cone = make_cone(spec.generators)
    reports = chow_groups(cone) if args.codim is None else [chow_group(cone, args.codim)]
    res = {"chow": [{"codim": str(r.codim), "group": _group_json(r.group),
                     "generators_count": str(r.generators_count),
                     "relations_rank": str(r.relations_rank)} for r in reports]}
    rows = [["codim", "group", "generators", "relations rank"]]
    rows += [[str(r.codim), str(r.group), str(r.generators_count), str(r.relations_rank)]
             for r in reports]
    inputs = {"generators": [_vec_json(g) for g in spec.generators],
              "codim": None if args.codim is None else str(args.codim)}
    return EXIT_OK, inputs, res, _table(rows)


def cmd_g0(args):
    spec = parse_cone(args.cone)
    cone = make_cone(spec.generators)
    inputs = {"generators": [_vec_json(g) for g in spec.generators]}
    if cone.ambient_dim not in (2, 3):
        reports = chow_groups(cone)
        res = {"delta": str(delta(cone)),
               "chow": [{"codim": str(r.codim), "group": _group_json(r.group)} for r in reports],
               "note": "G_0 structure is only reported in dimensions 2 and 3"}
        text = _kv([("delta", str(delta(cone)))] +
                   [(f"A^{r.codim}", str(r.group)) for r in reports]) + \
            "\nnote: G_0 structure is only reported in dimensions 2 and 3"
        return EXIT_OK, inputs, res, text
    r = g0_report(cone)
    exact = r.f1_exact if isinstance(r.f1_exact, str) else _group_json(r.f1_exact)
    res = {"dim": str(r.dim), "free_rank": str(r.free_rank), "delta": str(r.delta),
           "a1": _group_json(r.a1), "a2": _group_json(r.a2), "f1_order": str(r.f1_order),
           "f1_exact": exact,
           "extension_candidates": [_group_json(g) for g in r.extension_candidates],
           "source": r.source_theorem}
    pairs = [("dim", str(r.dim)), ("delta", str(r.delta)), ("A^1", str(r.a1))]
    if r.a2 is not None:
        pairs.append(("A^2", str(r.a2)))
    pairs += [("|F^1G_0|", str(r.f1_order)),
              ("F^1G_0", r.f1_exact if isinstance(r.f1_exact, str) else str(r.f1_exact)),
              ("candidates", ", ".join(map(str, r.extension_candidates))),
              ("G_0", "Z" if r.f1_order == 1 else
               ("Z×" + str(r.f1_exact) if r.f1_exact != UNDETERMINED else "Z × F^1G_0")),
              ("source", r.source_theorem)]
    return EXIT_OK, inputs, res, _kv(pairs)


def table_rows():
    """Recompute the published table; one dict per row."""
    out = []
    for gens, d_exp, a1_exp, a2_exp in TABLE_ROWS:
        cone = make_cone(gens)
        d, a1, a2 = delta(cone), class_group(cone), chow_group(cone, 2).group
        ok = d == d_exp and str(a1) == a1_exp and str(a2) == a2_exp
        out.append({"generators": gens, "delta": d, "a1": a1, "a2": a2,
                    "expected": (d_exp, a1_exp, a2_exp), "match": ok})
    return out


def cmd_table(args):
    rows = table_rows()
    res = {"rows": [{"generators": [_vec_json(g) for g in r["generators"]],
                     "delta": str(r["delta"]), "a1": _group_json(r["a1"]),
                     "a2": _group_json(r["a2"]),
                     "expected": {"delta": str(r["expected"][0]), "a1": r["expected"][1],
                                  "a2": r["expected"][2]},
                     "match": r["match"]} for r in rows],
           "matched": str(sum(r["match"] for r in rows)), "total": str(len(rows))}
    lines = [["generators", "delta", "A^1", "A^2", "expected", "match"]]
    for r in rows:
        lines.append([",".join(_vec_text(g) for g in r["generators"]), str(r["delta"]),
                      str(r["a1"]), str(r["a2"]), " / ".join(map(str, r["expected"])),
                      "yes" if r["match"] else "NO"])
    matched = sum(r["match"] for r in rows)
    text = _table(lines) + f"\n{matched}/{len(rows)} rows match"
    return (EXIT_OK if matched == len(rows) else EXIT_MISMATCH), {}, res, text


def cmd_conjecture(args):
    rep = conjecture_check(args.dim, args.trials, args.bound, args.seed, workers=args.workers)
    res = {"dim": str(rep.dim), "trials": str(rep.trials), "seed": str(rep.seed),
           "bound": str(rep.bound), "a1_matches_delta": str(rep.a1_matches_delta),
           "a2_divides_delta": str(rep.a2_divides_delta),
           "counterexamples": [{"generators": [_vec_json(g) for g in c.generators],
                                "delta": str(c.delta), "a1": _group_json(c.a1),
                                "a2": _group_json(c.a2), "kind": c.kind}
                               for c in rep.counterexamples]}
    pairs = [("dim", str(rep.dim)), ("trials", str(rep.trials)), ("bound", str(rep.bound)),
             ("seed", str(rep.seed)),
             ("|A^1| = |delta|", f"{rep.a1_matches_delta}/{rep.trials}"),
             ("|A^2| divides delta", f"{rep.a2_divides_delta}/{rep.trials}"),
             ("counterexamples", str(len(rep.counterexamples)))]
    text = _kv(pairs)
    for c in rep.counterexamples:
        text += (f"\n  {c.kind}: " + ",".join(_vec_text(g) for g in c.generators) +
                 f"  delta={c.delta} A^1={c.a1} A^2={c.a2}")
    inputs = {"dim": str(args.dim), "trials": str(args.trials), "bound": str(args.bound),
              "seed": str(args.seed)}
    return (EXIT_COUNTEREXAMPLE if rep.has_bug else EXIT_OK), inputs, res, text


def cmd_snf(args):
    A = parse_matrix(args.matrix)
    s = smith_normal_form(A)
    res = {"U": _matrix_json(s.U), "D": _matrix_json(s.D), "V": _matrix_json(s.V),
           "invariant_factors": _vec_json(s.invariant_factors)}
    text = "\n".join([f"U:\n{s.U}", f"D:\n{s.D}", f"V:\n{s.V}",
                      "invariant factors: " + " ".join(map(str, s.invariant_factors))])
    return EXIT_OK, {"matrix": _matrix_json(A)}, res, text


COMMANDS = {
    "analyze": cmd_analyze, "normalize": cmd_normalize, "chow": cmd_chow, "g0": cmd_g0,
    "table": cmd_table, "conjecture": cmd_conjecture, "snf": cmd_snf,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON document")
    parser = argparse.ArgumentParser(prog="toricg0", parents=[common],
                                     description="G_0 and Chow groups of affine simplicial toric varieties")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    cone_help = 'inline "x1,y1;x2,y2", a JSON document, or a JSON file path'
    for name, helptext in [("analyze", "delta and primitive generators"),
                           ("normalize", "unimodular normal form (dims 2-3)"),
                           ("g0", "G_0 structure report")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("cone", help=cone_help)
    p = sub.add_parser("chow", parents=[common], help="Chow groups")
    p.add_argument("cone", help=cone_help)
    p.add_argument("--codim", type=int, default=None)
    sub.add_parser("table", parents=[common], help="recompute the published 3-fold table")
    p = sub.add_parser("conjecture", parents=[common], help="randomized conjecture search")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p = sub.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    p.add_argument("matrix", help='rows as "a,b;c,d"')
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        code, inputs, results, text = COMMANDS[args.command](args)
    except (ConeSpecError, ConeError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT
    except (InvariantViolation, AssertionError) as e:
        print(f"internal invariant violation: {e}", file=stderr)
        return EXIT_INVARIANT
    except ValueError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT
    if getattr(args, "json", False):
        doc = {"command": args.command, "inputs": inputs, "results": results,
               "version": __version__}
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main():
    sys.exit(run())
