"""Command line front end.

    flipk compute   --input A.json [--format text|machine]
    flipk decompose --input A.json
    flipk kunneth   --input A.json --b B.json
    flipk selfcheck [--max-n 1000] [--seed 0]

``--batch DIR`` runs compute or decompose on every ``*.json`` file in DIR.
Exit codes: 0 success, 1 internal check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .fgab import FgAbGroup, canonicalize
from .flipcalc import decompose, flip_crossed
from .kdata import KData, kunneth
from . import verify

REPORT_SCHEMA = "flipk.report/1"
TRIVIAL_NOTE = "KK-trivial; crossed product K-theory trivial"


class InputError(Exception):
    """A document that does not match the KData schema."""


# -- documents ---------------------------------------------------------------

def _parse_group(obj, where):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object with 'rank' and 'torsion'")
    extra = set(obj) - {"rank", "torsion"}
    if extra:
        raise InputError(f"{where}: unknown field(s) {', '.join(sorted(extra))}")
    for key in ("rank", "torsion"):
        if key not in obj:
            raise InputError(f"{where}.{key}: missing")
    rank = obj["rank"]
    if not _is_int(rank) or rank < 0:
        raise InputError(f"{where}.rank: must be a nonnegative integer, got {rank!r}")
    torsion = obj["torsion"]
    if not isinstance(torsion, list):
        raise InputError(f"{where}.torsion: must be a list of integers >= 2")
    for i, t in enumerate(torsion):
        if not _is_int(t) or t < 2:
            raise InputError(f"{where}.torsion[{i}]: must be an integer >= 2, got {t!r}")
    return canonicalize(rank, torsion)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def parse_document(obj, where="document"):
    """Validate a KData document and return (KData, name or None)."""
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    extra = set(obj) - {"k0", "k1", "name"}
    if extra:
        raise InputError(f"{where}: unknown field(s) {', '.join(sorted(extra))}")
    for key in ("k0", "k1"):
        if key not in obj:
            raise InputError(f"{where}.{key}: missing")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{where}.name: must be a string")
    return KData(_parse_group(obj["k0"], f"{where}.k0"),
                 _parse_group(obj["k1"], f"{where}.k1")), name


def load_document(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: cannot read: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    return parse_document(obj, str(path))


def group_doc(g):
    return {"rank": g.rank, "torsion": list(g.torsion)}


def kdata_doc(k, name=None):
    doc = {"k0": group_doc(k.k0), "k1": group_doc(k.k1)}
    if name is not None:
        doc["name"] = name
    return doc


def block_doc(b):
    doc = {"kind": b.kind, "algebra": b.algebra}
    if b.n:
        doc["n"] = b.n
    return doc


def report_doc(report, name=None):
    """Machine-readable form of a FlipReport."""
    def per_degree(f):
        return {"k0": f(0), "k1": f(1)}

    contributions = []
    for c in report.contributions:
        contributions.append({
            "label": c.label,
            "source": c.source,
            "note": c.note,
            "kdata": kdata_doc(c.kdata),
            "generators": per_degree(lambda d: list(c.generators[d])),
            "dual_action": per_degree(lambda d: c.dual_action[d].matrix.tolist()),
        })
    return {
        "schema": REPORT_SCHEMA,
        "input": kdata_doc(report.input, name),
        "blocks": [block_doc(b) for b in report.blocks],
        "contributions": contributions,
        "total": kdata_doc(report.total),
        "total_generators": per_degree(lambda d: list(report.total_generators[d])),
        "total_dual_action": per_degree(lambda d: report.total_dual_action[d].matrix.tolist()),
        "disclaimer": report.disclaimer,
    }


def parse_report(obj):
    """Check a machine report against the published layout.

    Returns (input KData, total KData).  The input and total sections are
    themselves KData documents.
    """
    keys = {"schema", "input", "blocks", "contributions", "total",
            "total_generators", "total_dual_action", "disclaimer"}
    if not isinstance(obj, dict) or set(obj) != keys:
        raise InputError("report: wrong set of top-level fields")
    if obj["schema"] != REPORT_SCHEMA:
        raise InputError(f"report.schema: expected {REPORT_SCHEMA}")
    k, _ = parse_document(obj["input"], "report.input")
    total, _ = parse_document(obj["total"], "report.total")
    for i, c in enumerate(obj["contributions"]):
        where = f"report.contributions[{i}]"
        if c.get("source") not in ("paper", "derived"):
            raise InputError(f"{where}.source: must be 'paper' or 'derived'")
        ck, _ = parse_document(c["kdata"], f"{where}.kdata")
        for d, key in enumerate(("k0", "k1")):
            n = ck[d].ngens
            mat = c["dual_action"][key]
            if len(mat) != n or any(len(row) != n for row in mat):
                raise InputError(f"{where}.dual_action.{key}: expected {n}x{n}")
            if len(c["generators"][key]) != n:
                raise InputError(f"{where}.generators.{key}: expected {n} labels")
    return k, total


# -- rendering ---------------------------------------------------------------

def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _matrix_text(m):
    return str(m.tolist()) if m.rows else "(trivial)"


def render_report(report, name=None):
    lines = []
    title = f"{name}: " if name else ""
    lines.append(f"{title}K0(A) = {report.input.k0}, K1(A) = {report.input.k1}")
    blocks = ", ".join(f"{b} [{b.algebra}]" for b in report.blocks) or "(none)"
    lines.append(f"blocks: {blocks}")
    lines.append("K-theory of (A (x) A) x Z/2:")
    for d in (0, 1):
        lines.append(f"  K{d} = {report.total[d]}")
    lines.append("summands:")
    for c in report.contributions:
        lines.append(f"  {c.label}  [{c.source}]")
        for d in (0, 1):
            if c.kdata[d].is_trivial:
                continue
            gens = ", ".join(c.generators[d])
            lines.append(f"    K{d} = {c.kdata[d]}  generators: {gens}")
            lines.append(f"    dual action on K{d}: {_matrix_text(c.dual_action[d].matrix)}")
        if c.note:
            lines.append(f"    note: {c.note}")
    lines.append("dual action on the total (canonical generators):")
    for d in (0, 1):
        lines.append(f"  K{d}: {_matrix_text(report.total_dual_action[d].matrix)}")
    lines.append(report.disclaimer)
    return "\n".join(lines) + "\n"


def render_blocks(blocks, k, name=None):
    title = f"{name}: " if name else ""
    lines = [f"{title}K0(A) = {k.k0}, K1(A) = {k.k1}"]
    if not blocks:
        lines.append(f"(no blocks) {TRIVIAL_NOTE}")
    for b in blocks:
        lines.append(f"  {b} [{b.algebra}]")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def check_report(report):
    """Raise AssertionError if any emitted dual action fails to have order two."""
    for c in report.contributions:
        for d in (0, 1):
            if not c.dual_action[d].is_involution():
                raise AssertionError(f"{c.label}: dual action on K{d} is not an involution")
    for d in (0, 1):
        if not report.total_dual_action[d].is_involution():
            raise AssertionError(f"total dual action on K{d} is not an involution")


def cmd_compute(k, name, fmt):
    report = flip_crossed(k)
    check_report(report)
    if fmt == "machine":
        return report_doc(report, name)
    return render_report(report, name)


def cmd_decompose(k, name, fmt):
    blocks = decompose(k)
    if fmt == "machine":
        doc = {"input": kdata_doc(k, name), "blocks": [block_doc(b) for b in blocks]}
        if not blocks:
            doc["note"] = TRIVIAL_NOTE
        return doc
    return render_blocks(blocks, k, name)


def cmd_kunneth(a, b, fmt):
    k = kunneth(a, b)
    if fmt == "machine":
        return kdata_doc(k)
    return f"{k}\n"


def cmd_selfcheck(max_n, seed, fmt):
    reports = verify.selfcheck(max_n, seed)
    if fmt == "machine":
        return {"seed": seed, "max_n": max_n, "checks": [
            {"name": r.name, "cases_run": r.cases_run, "failures": len(r.failures),
             "failing_cases": [str(f[0]) for f in r.failures[:20]]}
            for r in reports]}, all(r.passed for r in reports)
    lines = [f"selfcheck seed={seed} max_n={max_n}"]
    for r in reports:
        lines.append(r.summary())
        for case, expected, actual in r.failures[:20]:
            lines.append(f"  {case}: expected {expected}, got {actual}")
    return "\n".join(lines) + "\n", all(r.passed for r in reports)


def _emit(out, result, fmt):
    out.write(dumps(result) if fmt == "machine" else result)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flipk",
        description="K-theory of the flip crossed product (A (x) A) x Z/2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, batch=True):
        p.add_argument("--input", metavar="PATH", help="KData document (JSON)")
        if batch:
            p.add_argument("--batch", metavar="PATH", help="directory of documents")
        p.add_argument("--format", choices=("text", "machine"), default="text")

    common(sub.add_parser("compute", help="K-theory of the crossed product"))
    common(sub.add_parser("decompose", help="building blocks for the input"))
    kp = sub.add_parser("kunneth", help="K-theory of a tensor product")
    common(kp, batch=False)
    kp.add_argument("--b", metavar="PATH", required=True, help="second factor")
    sp = sub.add_parser("selfcheck", help="run the verification sweeps")
    sp.add_argument("--max-n", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("text", "machine"), default="text")
    return parser


def _inputs(args):
    if getattr(args, "batch", None):
        if args.input:
            raise InputError("give either --input or --batch, not both")
        d = Path(args.batch)
        if not d.is_dir():
            raise InputError(f"{d}: not a directory")
        return sorted(d.glob("*.json"))
    if not args.input:
        raise InputError("--input is required")
    return [Path(args.input)]


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    try:
        if args.command == "selfcheck":
            if args.max_n < 1:
                raise InputError("--max-n must be >= 1")
            result, ok = cmd_selfcheck(args.max_n, args.seed, args.format)
            _emit(out, result, args.format)
            return 0 if ok else 1

        if args.command == "kunneth":
            a, _ = load_document(_inputs(args)[0])
            b, _ = load_document(args.b)
            _emit(out, cmd_kunneth(a, b, args.format), args.format)
            return 0

        paths = _inputs(args)
        run = cmd_compute if args.command == "compute" else cmd_decompose
        docs = [(p, *load_document(p)) for p in paths]
        results = [(p, run(k, name, args.format)) for p, k, name in docs]
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except AssertionError as exc:
        err.write(f"internal check failed: {exc}\n")
        return 1

    if args.batch:
        if args.format == "machine":
            out.write(dumps({p.name: r for p, r in results}))
        else:
            for p, r in results:
                out.write(f"== {p.name}\n{r}")
    else:
        _emit(out, results[0][1], args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
