"""Command-line front end with deterministic JSON reports.

Exit codes: 0 success (for `iso`: isomorphic), 1 `iso` found no
isomorphism or `selftest` failed, 2 malformed input, 3 a search hit its
resource cap (a partial report is still emitted). Reports go to stdout,
diagnostics and timings to stderr, so stdout is a pure function of the
input file and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from .classify import DEFAULT_CENTER_CAP, classify, perfect_by_enumeration
from .codes import Code, GroupCode, min_distance, min_weight_nonidentity, parameters
from .cyclic import cyclic_report, interleave, interleave_permutation, is_cyclic, join
from .decompose import (DEFAULT_PARTITION_BITS, applicable_certificates, decompose)
from .errors import (GroupCodesError, IncompatibleError, PreconditionError,
                     ResourceLimitError, SchemaError, TheoremViolationError)
from .isomorphy import DEFAULT_MAX_NODES, aut_group, code_equivalent, gc_isomorphic
from . import serialize
from .selftest import run_selftest

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json",
                   help="output format (default json)")
    p.add_argument("--max-partition-bits", type=int, default=DEFAULT_PARTITION_BITS,
                   metavar="N", help="coordinate cap for the subset split search")
    p.add_argument("--max-search", type=int, default=DEFAULT_MAX_NODES,
                   metavar="M", help="node cap for isomorphism searches")
    p.add_argument("--center-cap", type=int, default=DEFAULT_CENTER_CAP,
                   metavar="W", help="word cap for the constant-weight center scan")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized self tests")
    p.add_argument("--oracle", action="store_true",
                   help="enable brute-force cross-checks where gated")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; execution is sequential")
    p.add_argument("--timings", action="store_true",
                   help="print per-phase timings to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="groupcodes",
                                     description="codes over finite alphabets and group codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full parameter/classification/decomposition report")
    p.add_argument("input")
    _common_flags(p)

    p = sub.add_parser("decompose", help="canonical decomposition into indecomposables")
    p.add_argument("input")
    _common_flags(p)

    p = sub.add_parser("aut", help="automorphism group of a group code")
    p.add_argument("input")
    p.add_argument("--with-structure", action="store_true",
                   help="also decompose and assert the product-formula order")
    _common_flags(p)

    p = sub.add_parser("iso", help="isomorphism test between two codes")
    p.add_argument("input_a")
    p.add_argument("input_b")
    _common_flags(p)

    p = sub.add_parser("interleave", help="cyclic rearrangement of copies of a cyclic group code")
    p.add_argument("input")
    p.add_argument("--copies", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("join", help="componentwise bundle of cyclic group codes over the product group")
    p.add_argument("inputs", nargs="+")
    _common_flags(p)

    p = sub.add_parser("selftest", help="run the theorem-by-theorem property corpus")
    p.add_argument("--trials", type=int, default=100,
                   help="randomized reconstruction trials (default 100)")
    _common_flags(p)

    return parser


def _load_code(path: str) -> Code:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as err:
        raise SchemaError(f"cannot read {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise SchemaError(f"{path}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}") from err
    return serialize.code_from_json(doc)


def _emit(doc: Any, fmt: str, text_renderer=None) -> None:
    if fmt == "json" or text_renderer is None:
        sys.stdout.write(serialize.dumps(doc))
    else:
        sys.stdout.write(text_renderer(doc))


class _Phases:
    """Timing collector; reports land on stderr only."""

    def __init__(self, enabled: bool) -> None:
        self.enabled = enabled
        self.rows: list[tuple[str, float]] = []

    def run(self, name: str, fn):
        t0 = time.perf_counter()
        out = fn()
        self.rows.append((name, time.perf_counter() - t0))
        return out

    def report(self) -> None:
        if self.enabled:
            for name, dt in self.rows:
                print(f"timing {name}: {dt:.4f}s", file=sys.stderr)


def _analysis_text(doc: dict) -> str:
    p = doc["parameters"]
    c = doc["classification"]
    lines = [
        f"length {p['length']}, |C| = {p['size']}, q = {p['alphabet_size']}",
        f"dimension {p['dimension']}{'' if p['dimension_is_exact'] else ' (not a power of q)'}",
        f"min distance {p['min_distance']}, corrects {p['correction_capacity']} errors",
        f"trivial: {c['is_trivial']}  degenerate: {c['is_degenerate']}  "
        f"MDS: {c['is_mds']}  perfect: {c['is_perfect']}",
        f"certificates: {', '.join(doc['certificates']) or 'none'}",
    ]
    if doc.get("decomposition"):
        blocks = doc["decomposition"]["blocks"]
        lines.append(f"decomposes into {len(blocks)} block(s): {blocks}")
    if doc.get("cyclic"):
        lines.append(f"cyclic: {doc['cyclic']['is_cyclic']}")
    if doc.get("resource_limits"):
        lines.append(f"skipped by caps: {', '.join(doc['resource_limits'])}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    code = _load_code(args.input)
    phases = _Phases(args.timings)
    limits: list[str] = []

    report: dict[str, Any] = {"code": serialize.code_to_json(code)}
    report["parameters"] = phases.run(
        "parameters", lambda: serialize.parameters_to_json(parameters(code)))
    report["classification"] = phases.run(
        "classification",
        lambda: serialize.classification_to_json(classify(code, center_cap=args.center_cap)))
    report["certificates"] = phases.run(
        "certificates", lambda: list(applicable_certificates(code)))
    try:
        dec = phases.run("decomposition", lambda: decompose(
            code, max_bits=args.max_partition_bits, max_nodes=args.max_search))
        report["decomposition"] = serialize.decomposition_to_json(dec)
    except ResourceLimitError as err:
        print(f"decomposition skipped: {err}", file=sys.stderr)
        report["decomposition"] = None
        limits.append("decomposition")
    try:
        cyc = phases.run("cyclic", lambda: cyclic_report(
            code, max_bits=args.max_partition_bits, max_nodes=args.max_search))
        report["cyclic"] = serialize.cyclic_report_to_json(cyc)
    except ResourceLimitError as err:
        print(f"cyclic analysis skipped: {err}", file=sys.stderr)
        report["cyclic"] = None
        limits.append("cyclic")
    if args.oracle:
        oracle: dict[str, Any] = {}
        if code.alphabet.order ** code.length <= 2**16:
            agree = perfect_by_enumeration(code) == report["classification"]["is_perfect"]
            oracle["perfect_covering_agrees"] = agree
            if not agree:
                raise TheoremViolationError("sphere packing disagrees with covering enumeration")
        if isinstance(code, GroupCode) and code.size >= 2:
            oracle["weight_scan_agrees"] = min_distance(code) == min_weight_nonidentity(code)
        report["oracle"] = oracle
    report["resource_limits"] = limits
    _emit(report, args.format, _analysis_text)
    phases.report()
    return EXIT_RESOURCE if limits else EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    code = _load_code(args.input)
    try:
        dec = decompose(code, max_bits=args.max_partition_bits, max_nodes=args.max_search)
    except ResourceLimitError as err:
        print(f"decomposition aborted: {err}", file=sys.stderr)
        _emit({"decomposition": None, "certificate": err.certificate}, args.format)
        return EXIT_RESOURCE
    _emit(serialize.decomposition_to_json(dec), args.format)
    return EXIT_OK


def cmd_aut(args: argparse.Namespace) -> int:
    code = _load_code(args.input)
    if not isinstance(code, GroupCode):
        raise SchemaError("automorphism groups are computed for group codes; set \"group\": true")
    dec = None
    if args.with_structure:
        dec = decompose(code, max_bits=args.max_partition_bits, max_nodes=args.max_search)
    try:
        report = aut_group(code, dec, max_nodes=args.max_search)
    except ResourceLimitError as err:
        print(f"automorphism search aborted: {err}", file=sys.stderr)
        partial = {"order": None, "complete": False,
                   "generators": [serialize.gc_witness_to_json(g)
                                  for g in err.partial_generators]}
        _emit(partial, args.format)
        return EXIT_RESOURCE
    _emit(serialize.aut_report_to_json(report), args.format)
    return EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    A = _load_code(args.input_a)
    B = _load_code(args.input_b)
    try:
        if isinstance(A, GroupCode) and isinstance(B, GroupCode):
            witness = gc_isomorphic(A, B, max_nodes=args.max_search)
            doc = serialize.gc_witness_to_json(witness) if witness else None
        else:
            iso = code_equivalent(A, B, max_nodes=args.max_search)
            doc = serialize.isometry_to_json(iso) if iso else None
    except IncompatibleError as err:
        raise SchemaError(str(err)) from err
    if doc is None:
        _emit({"isomorphic": False, "witness": None}, args.format)
        return EXIT_NEGATIVE
    _emit({"isomorphic": True, "witness": doc}, args.format)
    return EXIT_OK


def cmd_interleave(args: argparse.Namespace) -> int:
    code = _load_code(args.input)
    if not isinstance(code, GroupCode):
        raise SchemaError("interleave expects a cyclic group code; set \"group\": true")
    out = interleave(code, args.copies)
    sigma = interleave_permutation(code.length, args.copies)
    from .isometry import Equivalence
    equiv = Equivalence(tuple(s - 1 for s in sigma))
    rows = []
    import itertools as _it
    for combo in _it.product(code.words, repeat=args.copies):
        src = sum(combo, ())
        rows.append({"from": list(src), "to": list(equiv.push(src))})
    doc = {"sigma": list(sigma), "convention": "push", "copies": args.copies,
           "source": serialize.code_to_json(code),
           "result": serialize.code_to_json(out),
           "rows": rows,
           "is_cyclic": is_cyclic(out)}
    _emit(doc, args.format)
    return EXIT_OK


def cmd_join(args: argparse.Namespace) -> int:
    codes = []
    for path in args.inputs:
        code = _load_code(path)
        if not isinstance(code, GroupCode):
            raise SchemaError(f"{path}: join expects cyclic group codes")
        codes.append(code)
    out = join(codes)
    _emit({"result": serialize.code_to_json(out)}, args.format)
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    ok = run_selftest(seed=args.seed, trials=args.trials, oracle=args.oracle)
    return EXIT_OK if ok else EXIT_NEGATIVE


_COMMANDS = {
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "aut": cmd_aut,
    "iso": cmd_iso,
    "interleave": cmd_interleave,
    "join": cmd_join,
    "selftest": cmd_selftest,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return _COMMANDS[args.command](args)
    except SchemaError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, IncompatibleError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except GroupCodesError as err:
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
