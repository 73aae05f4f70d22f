"""Command-line front end.

Every command prints machine-readable output (JSON or TSV) on stdout and
diagnostics on stderr.  Exit codes: 0 success, 1 domain error (bad input),
2 verification failure.  Exact rationals travel as strings "p/q".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import shuffle as shuffle_mod
from .index_sets import Truncation, enum_S, enum_T, enum_U, enum_V, window_generators
from .index_sets import compare as compare_partitions
from .pbw import primitive_dims, verify_bijection, window_count_table
from .polytope import WPolytope
from .quiver_weights import Quiver, Weight, builtin_quiver, rho, tau
from .standard_form import decompose, omega_shift, slope_to_tree, tree_of_partition
from .standard_form import DecompositionError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2


class DomainError(ValueError):
    pass


def _frac(x: Fraction) -> str:
    return str(x)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _load_quiver(name: str) -> Quiver:
    try:
        return builtin_quiver(name)
    except (KeyError, ValueError):
        pass
    path = name
    if not os.path.exists(path):
        qdir = os.environ.get("HALLWIN_QUIVER_DIR")
        if qdir and os.path.exists(os.path.join(qdir, name)):
            path = os.path.join(qdir, name)
        else:
            raise DomainError(f"unknown quiver {name!r} (not a builtin or file)")
    with open(path, encoding="utf-8") as fh:
        return Quiver.from_json(fh.read())


def _parse_weight(text: str) -> Weight:
    try:
        blocks = []
        coords = []
        for blk in text.split(";"):
            vals = [Fraction(v.strip()) for v in blk.split(",") if v.strip()]
            if not vals:
                raise ValueError("empty weight block")
            coords.extend(vals)
            blocks.append(len(vals))
        return Weight.make(coords, blocks)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed weight {text!r}: {exc}") from exc


def _parse_partition(text: str) -> tuple[tuple[int, int], ...]:
    try:
        parts = []
        for piece in text.split(";"):
            piece = piece.strip()
            if not piece:
                continue
            d_str, w_str = piece.split(",")
            parts.append((int(d_str), int(w_str)))
        if not parts:
            raise ValueError("empty partition")
        return tuple(parts)
    except ValueError as exc:
        raise DomainError(f"malformed partition {text!r}: {exc}") from exc


def _delta_weight(args, d: int) -> Weight:
    c = Fraction(args.delta) if getattr(args, "delta", None) else Fraction(0)
    return tau((d,)).scale(c)


def _print(line: str) -> None:
    sys.stdout.write(line + "\n")


# -- command handlers ------------------------------------------------------


def _cmd_r_invariant(args) -> int:
    q = _load_quiver(args.quiver)
    chi = _parse_weight(args.weight)
    d = sum(chi.blocks)
    if args.d is not None and args.d != d:
        raise DomainError("--d disagrees with the weight length")
    poly = WPolytope(q, chi.blocks)
    r = poly.r_invariant(chi)
    face = poly.face_cocharacter(chi, r)
    lam = [int(v) for v in face[1].coords] if face is not None else None
    _print(_dump({"r": _frac(r), "lambda": lam}))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    q = _load_quiver(args.quiver)
    chi = _parse_weight(args.weight)
    if not chi.is_integral():
        raise DomainError("decompose expects an integral weight")
    d = sum(chi.blocks)
    form = decompose(q, chi.blocks, chi, _delta_weight(args, d))
    _print(form.to_json())
    return EXIT_OK


def _cmd_windows(args) -> int:
    q = _load_quiver(args.quiver)
    if args.d is None or args.w is None:
        raise DomainError("windows needs --d and --w")
    delta = _delta_weight(args, args.d)
    gens = window_generators(q, (args.d,), args.w, delta)
    if args.format == "tsv":
        for g in gens:
            _print("\t".join(str(int(v)) for v in g.coords))
    else:
        for g in gens:
            _print(_dump({"chi": [int(v) for v in g.coords]}))
    return EXIT_OK


def _cmd_index_sets(args) -> int:
    q = _load_quiver(args.quiver)
    if args.d is None or args.w is None:
        raise DomainError("index-sets needs --d and --w")
    d, w = args.d, args.w
    delta = _delta_weight(args, d)
    trunc = Truncation(
        slope_bound=Fraction(args.slope_bound) if args.slope_bound else None,
        max_parts=args.max_parts)
    name = args.set
    if name == "V":
        res = enum_V(d, w, trunc)
    elif name == "U":
        res = enum_U(d, w)
    elif name == "S":
        res = enum_S(q, d, w, delta, trunc)
    elif name == "T":
        res = enum_T(q, d, w, delta, trunc)
    else:
        raise DomainError(f"unknown index set {name!r}")
    for A in res:
        record = {"parts": [[pd, pw] for pd, pw in A],
                  "complete_within_bounds": not res.truncated}
        try:
            form = tree_of_partition(q, (d,), A, delta)
            record["r_sequence"] = [_frac(r) for r in form.r_sequence()]
        except DecompositionError:
            try:
                tree = slope_to_tree(q, (d,), A)
                record["r_sequence"] = [_frac(r) for r in tree.r_sequence()]
            except DecompositionError:
                record["r_sequence"] = None
        _print(_dump(record))
    return EXIT_OK


def _cmd_compare(args) -> int:
    q = _load_quiver(args.quiver)
    A = _parse_partition(args.a)
    B = _parse_partition(args.b)
    d = sum(p[0] for p in A)
    if sum(p[0] for p in B) != d:
        raise DomainError("partitions have different total dimension")
    delta = _delta_weight(args, d)
    try:
        verdict = compare_partitions(q, d, A, B, delta)
    except DecompositionError as exc:
        raise DomainError(str(exc)) from exc
    _print(_dump({"verdict": verdict}))
    return EXIT_OK


def _cmd_pbw_table(args) -> int:
    from .index_sets import enum_U as _enum_U
    from .pbw import sym_count
    from collections import Counter

    q = _load_quiver(args.quiver)
    m = window_count_table(args.dmax, args.wmax, q)
    p = primitive_dims(args.dmax, args.wmax, q)
    status = "OK"
    for (d, w), pv in p.items():
        if pv < 0:
            status = "NEGATIVE_P"
            break
    if status == "OK":
        for (d, w), mv in m.items():
            total = 0
            for parts in _enum_U(d, w):
                term = 1
                for (pd, pw), mult in Counter(parts).items():
                    term *= sym_count(p[(pd, pw)], mult)
                total += term
            if total != mv:
                status = "RECONSTRUCTION_MISMATCH"
                break
    _print("d\tw\tm\tp")
    for d in range(1, args.dmax + 1):
        for w in range(-args.wmax, args.wmax + 1):
            _print(f"{d}\t{w}\t{m[(d, w)]}\t{p[(d, w)]}")
    _print(status)
    return EXIT_OK if status == "OK" else EXIT_VERIFY


def _cmd_verify_bijection(args) -> int:
    q = _load_quiver(args.quiver)
    if args.d is None or args.w is None:
        raise DomainError("verify-bijection needs --d and --w")
    delta = _delta_weight(args, args.d)
    report = verify_bijection(args.d, args.w, args.bound, q, delta)
    _print(_dump({
        "d": report.d, "w": report.w, "bound": report.bound,
        "domain_size": report.domain_size,
        "image_size": report.image_size,
        "target_size": report.target_size,
        "violations": list(report.violations),
    }))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_shuffle(args) -> int:
    params = shuffle_mod.KernelParams(mode=args.mode)
    if args.action == "mul":
        if len(args.expr) != 2:
            raise DomainError("shuffle mul takes exactly two expressions")
        degs: list[int | None] = [None, None]
        if args.degrees:
            try:
                degs = [int(v) for v in args.degrees.split(",")]
            except ValueError as exc:
                raise DomainError(f"bad --degrees {args.degrees!r}") from exc
            if len(degs) != 2:
                raise DomainError("--degrees takes two comma-separated integers")
        try:
            f = shuffle_mod.parse_element(args.expr[0], degree=degs[0])
            g = shuffle_mod.parse_element(args.expr[1], degree=degs[1])
        except ValueError as exc:
            raise DomainError(str(exc)) from exc
        h = shuffle_mod.mul(f, g, params)
        import sympy
        value = sympy.cancel(sympy.together(h.expr))
        _print(_dump({"degree": h.degree,
                      "value": sympy.sstr(value, order="lex")}))
        return EXIT_OK
    if args.action == "zeta":
        if len(args.expr) != 1:
            raise DomainError("shuffle zeta takes one evaluation point")
        try:
            x = Fraction(args.expr[0])
            qa = Fraction(args.q1)
            qb = Fraction(args.q2)
            val = shuffle_mod.zeta_value(x, qa, qb)
        except (ValueError, ZeroDivisionError, shuffle_mod.PoleError) as exc:
            raise DomainError(str(exc)) from exc
        _print(_dump({"value": _frac(val)}))
        return EXIT_OK
    raise DomainError(f"unknown shuffle action {args.action!r}")


def _cmd_omega_shift(args) -> int:
    q = _load_quiver(args.quiver)
    A = _parse_partition(args.partition)
    d = sum(p[0] for p in A)
    try:
        shifted = omega_shift(q, (d,), A)
    except (DecompositionError, ValueError) as exc:
        raise DomainError(str(exc)) from exc
    _print(_dump({"partition": [[pd, pw] for pd, pw in shifted]}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hallwin",
        description="Exact window/partition/shuffle computations.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, weight=False):
        p.add_argument("--quiver", default="tripled-jordan",
                       help="builtin name or JSON file path")
        p.add_argument("--d", type=int, default=None)
        p.add_argument("--w", type=int, default=None)
        p.add_argument("--delta", default=None,
                       help="rational c: delta = c * tau_d")
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--seed", type=int, default=0)
        if weight:
            p.add_argument("--weight", required=True,
                           help="comma-separated slots; ';' between blocks")

    p = sub.add_parser("r-invariant")
    common(p, weight=True)
    p.set_defaults(func=_cmd_r_invariant)

    p = sub.add_parser("decompose")
    common(p, weight=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("windows")
    common(p)
    p.set_defaults(func=_cmd_windows)

    p = sub.add_parser("index-sets")
    common(p)
    p.add_argument("--set", choices=["V", "U", "S", "T"], required=True)
    p.add_argument("--slope-bound", default=None)
    p.add_argument("--max-parts", type=int, default=None)
    p.set_defaults(func=_cmd_index_sets)

    p = sub.add_parser("compare")
    common(p)
    p.add_argument("--a", required=True, help="partition 'd,w;d,w;...'")
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("pbw-table")
    common(p)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)
    p.set_defaults(func=_cmd_pbw_table)

    p = sub.add_parser("verify-bijection")
    common(p)
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(func=_cmd_verify_bijection)

    p = sub.add_parser("shuffle")
    p.add_argument("action", choices=["mul", "zeta"])
    p.add_argument("expr", nargs="+")
    p.add_argument("--mode", choices=["a2", "formal"], default="a2")
    p.add_argument("--degrees", default=None,
                   help="declared degrees 'n,m' for shuffle mul operands")
    p.add_argument("--q1", default="2")
    p.add_argument("--q2", default="3")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_shuffle)

    p = sub.add_parser("omega-shift")
    common(p)
    p.add_argument("--partition", required=True, help="'d,w;d,w;...'")
    p.set_defaults(func=_cmd_omega_shift)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DOMAIN if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, NotImplementedError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
