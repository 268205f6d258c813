"""Command-line front end: ``phk <subcommand> [flags]``.

Exit status is 0 on success, 1 when a computation fails and 2 on a usage
error (bad flags, malformed values, sizes above the ``PHK_MAX_N`` bound).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, Sequence

from . import __version__
from .exactalg import NotTauExpressible, RatFuncT, tau_express
from .shapes import Partition, ShapeError, parse_word, partition_from_word, staircase
from .symbolic import SymPoly

POLY_LIMIT = 4
COMB_LIMIT = 6


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# value parsers (run inside argparse so failures are usage errors)

def _int_list(text: str) -> tuple[int, ...]:
    body = text.strip().strip("[]()")
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _shape(text: str) -> Partition:
    s = text.strip()
    try:
        if s and set(s) <= {"0", "1"} and len(s) % 2 == 0 and len(s) >= 2 and "," not in s:
            return partition_from_word(parse_word(s))
        return Partition.parse(s)
    except (ShapeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}")


def _sym_list(text: str) -> list[Any]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            p = SymPoly.parse(piece)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad entry {piece!r}: {exc}")
        if not p.variables():
            c = p.coefficient_sum()
            out.append(int(c) if c == int(c) else c)
        else:
            out.append(p)
    return out


def _limit(kind: str) -> int:
    env = os.environ.get("PHK_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"PHK_MAX_N must be an integer, got {env!r}")
    return POLY_LIMIT if kind == "poly" else COMB_LIMIT


def _bound(n: int, kind: str) -> None:
    if n < 1:
        raise UsageError("--n must be positive")
    cap = _limit(kind)
    if n > cap:
        raise UsageError(f"--n {n} exceeds the size bound {cap} (set PHK_MAX_N to raise it)")


# ---------------------------------------------------------------------------
# JSON helpers

def _ratfunc_json(r: RatFuncT) -> dict:
    out: dict = {"text": str(r)}
    try:
        out["tau"] = str(tau_express(r))
    except NotTauExpressible:
        pass
    return out


def _sym_json(p: SymPoly) -> dict:
    return {
        "text": str(p),
        "terms": [{"monomial": dict(k), "coeff": str(c)} for k, c in p.items()],
    }


def _shape_arg(args, n: int) -> Partition:
    lam = args.shape if args.shape is not None else Partition()
    if not staircase(n).contains(lam):
        raise UsageError(f"shape {lam} does not fit in the rank {n} staircase")
    return lam


def _u_arg(args, n: int) -> tuple[int, ...] | None:
    if args.u is None:
        return None
    if len(args.u) != n - 1:
        raise UsageError(f"--u needs {n - 1} entries at rank {n}")
    return args.u


# ---------------------------------------------------------------------------
# subcommands: each returns (text, json-result)

def cmd_kl(args):
    from .bases import kl_element
    _bound(args.n, "poly")
    el = kl_element(_shape_arg(args, args.n), args.n)
    return str(el.poly), el.to_json()


def cmd_macdonald(args):
    from .bases import macdonald_element
    _bound(args.n, "poly")
    el = macdonald_element(_shape_arg(args, args.n), args.n, _u_arg(args, args.n))
    return str(el.poly), el.to_json()


def cmd_expand(args):
    from .transition import expand_maximal
    _bound(args.n, "comb")
    table = expand_maximal(args.n)
    u = _u_arg(args, args.n)
    if u is None:
        return str(table), table.to_json()
    values = table.specialize(u)
    lines = [f"({p}): {values[p]}" for p in sorted(values, key=lambda p: (-p.size, p.parts))]
    return "\n".join(lines), {"u": list(u), "entries": [{"shape": str(p), **_ratfunc_json(values[p])} for p in values]}


def cmd_coeff(args):
    from .exactalg import y_value
    from .transition import coefficient
    if args.n < 1:
        raise UsageError("--n must be positive")
    lam = _shape_arg(args, args.n)
    mono = coefficient(lam, args.n)
    u = _u_arg(args, args.n)
    if u is None:
        return str(mono), {"shape": str(lam), "y_monomial": list(mono.indices), "text": str(mono)}
    value = mono.evaluate({k: y_value(u[k - 1]) for k in range(1, args.n)})
    return str(value), {"shape": str(lam), "y_monomial": list(mono.indices), "value": _ratfunc_json(value)}


def cmd_eval(args):
    from .bases import homogeneous_prefactor, kl_polynomial, macdonald_polynomial, vanishing_point
    from .polyring import EvalPoint, evaluate
    _bound(args.n, "poly")
    lam = _shape_arg(args, args.n)
    if args.basis == "kl":
        poly = kl_polynomial(lam, args.n)
    else:
        poly = macdonald_polynomial(lam, args.n, _u_arg(args, args.n))
    if args.mode == "ones":
        value = evaluate(poly, EvalPoint.ones(2 * args.n))
        if args.normalize:
            value = value / homogeneous_prefactor(args.n)
    else:
        if args.word is None:
            raise UsageError("--mode vanishing needs --word")
        value = evaluate(poly, vanishing_point(args.word))
    return str(tau_express(value)) if args.normalize and args.mode == "ones" else str(value), _ratfunc_json(value)


def cmd_ct_a(args):
    from .ctengine import ct_A
    y = args.y
    if y is not None and len(y) != len(args.a) - 1:
        raise UsageError(f"--y needs {len(args.a) - 1} entries")
    res = ct_A(args.a, y)
    return str(res), _sym_json(res)


def _weights(args, n: int) -> dict | None:
    if args.t is None:
        return None
    if len(args.t) != n:
        raise UsageError(f"--t needs {n} entries t0..t{n - 1}")
    return {f"t{k}": v for k, v in enumerate(args.t)}


def cmd_ct_n(args):
    _bound(args.n, "comb")
    weights = _weights(args, args.n)
    if args.method == "ct":
        from .ctengine import ct_N
        res = ct_N(args.n, weights)
    elif args.method in ("schubert", "det"):
        from .schubert import schubert_sum_N
        res = schubert_sum_N(args.n, method=args.method)
        res = res.subs(weights) if weights else res
    else:
        from .tableaux import nilp_generating_function
        res = nilp_generating_function(args.n, weights)
    return str(res), _sym_json(res)


def cmd_punctured(args):
    from .ctengine import ct_N_punctured
    _bound(args.n, "comb")
    res = ct_N_punctured(args.n, args.r)
    return str(res), _sym_json(res)


def _alphabet(spec: str | None, length: int):
    from .schubert import ybar, ytilde
    if spec is None or spec == "formal":
        return None
    if spec in ("0", "zero"):
        return 0
    if spec == "ybar":
        return ybar(length)
    if spec == "ytilde":
        return ytilde(length)
    return _sym_list(spec)


def cmd_schubert(args):
    from .schubert import format_code, schubert
    length = 2 * len(args.code) + 2
    res = schubert(args.code, _alphabet(args.x, length), _alphabet(args.y, length), strategy=args.strategy)
    return str(res), {"code": format_code(args.code), **_sym_json(res)}


def cmd_flagdet(args):
    from .schubert import flag_schur_det
    _bound(args.n, "comb")
    rho = staircase(args.n)
    lam = _shape_arg(args, args.n)
    flag = args.flag or tuple(range(2, args.n + 1))
    alphabet = _alphabet(args.alphabet or "ytilde", 2 * args.n + 2)
    res = flag_schur_det(rho, lam, alphabet, flag)
    return str(res), {"outer": str(rho), "inner": str(lam), "flag": list(flag), **_sym_json(res)}


def cmd_tableaux(args):
    from .tableaux import even_column_shapes, flagged_gen, flagged_tableaux
    _bound(args.n, "comb")
    rho = staircase(args.n)
    inners = [args.shape] if args.shape is not None else even_column_shapes(args.n)
    lines, records, total = [], [], SymPoly()
    for mu in inners:
        for tab in flagged_tableaux(rho, mu, args.n):
            lines.append(f"{tab}  {tab.weight()}")
            records.append({"tableau": str(tab), "inner": str(mu), "weight": str(tab.weight())})
        total = total + flagged_gen(rho, mu, args.n)
    lines.append(f"total: {total}")
    return "\n".join(lines), {"tableaux": records, "generating_function": _sym_json(total)}


def cmd_nilp(args):
    from .tableaux import augment_filling, enumerate_fillings, filling_to_nilp, nilp_weight
    _bound(args.n, "comb")
    weights = _weights(args, args.n)
    lines, records, total = [], [], SymPoly()
    for f in enumerate_fillings(args.n):
        af = augment_filling(f)
        cfg = filling_to_nilp(af)
        w = nilp_weight(cfg)
        total = total + w
        lines.append(f"{af}  {w}")
        records.append({"filling": str(af), "paths": str(cfg), "weight": str(w)})
    if weights:
        total = total.subs(weights)
    lines.append(f"count: {len(records)}")
    lines.append(f"total: {total}")
    return "\n".join(lines), {"count": len(records), "configurations": records, "generating_function": _sym_json(total)}


def cmd_verify(args):
    from .verify import run_suite
    if args.suite == "all":
        _bound(args.n, "poly")
    results = run_suite(args.suite, args.n, args.only)
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    payload = [{"name": r.name, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results]
    return "\n".join(lines), {"checks": payload, "passed": passed, "total": len(results)}, passed == len(results)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phk", description="Exact Hecke-module polynomial computations.")
    p.add_argument("--version", action="version", version=f"phk {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add(name: str, fn: Callable, help: str, n: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        if n:
            sp.add_argument("--n", type=int, required=True, help="rank (2n variables)")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    sp = add("kl", cmd_kl, "KL basis element")
    sp.add_argument("--shape", type=_shape, help='partition "2,1" or 0/1 word "101010"')

    sp = add("macdonald", cmd_macdonald, "deformed Macdonald basis element")
    sp.add_argument("--shape", type=_shape)
    sp.add_argument("--u", type=_int_list, help="deformation u_1..u_{n-1}")

    sp = add("expand", cmd_expand, "transition coefficients of the maximal M")
    sp.add_argument("--u", type=_int_list)

    sp = add("coeff", cmd_coeff, "a single transition coefficient")
    sp.add_argument("--shape", type=_shape, required=True)
    sp.add_argument("--u", type=_int_list)

    sp = add("eval", cmd_eval, "evaluate a basis element")
    sp.add_argument("--basis", choices=["kl", "macdonald"], default="macdonald")
    sp.add_argument("--shape", type=_shape)
    sp.add_argument("--u", type=_int_list)
    sp.add_argument("--mode", choices=["ones", "vanishing"], default="ones")
    sp.add_argument("--word", type=parse_word, help="0/1 word for the vanishing point")
    sp.add_argument("--normalize", action="store_true", help="divide by the value of the t-Vandermonde product")

    sp = add("ct-a", cmd_ct_a, "constant term A_a(y)", n=False)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--y", type=_sym_list, help="y1,...; default symbolic")

    sp = add("ct-n", cmd_ct_n, "generating function N(t0..t_{n-1})")
    sp.add_argument("--t", type=_sym_list, help="values for t0..t_{n-1}")
    sp.add_argument("--method", choices=["ct", "schubert", "det", "nilp"], default="ct")

    sp = add("punctured", cmd_punctured, "punctured generating function N_{n,r}(T)")
    sp.add_argument("--r", type=int, required=True)

    sp = add("schubert", cmd_schubert, "Schubert polynomial Y_code(x, y)", n=False)
    sp.add_argument("--code", type=_int_list, required=True)
    sp.add_argument("--x", help="formal | zero | ybar | ytilde | comma list")
    sp.add_argument("--y", default="formal", help="formal | zero | ybar | ytilde | comma list")
    sp.add_argument("--strategy", choices=["first", "last"], default="first")

    sp = add("flagdet", cmd_flagdet, "flagged Jacobi-Trudi determinant over the staircase")
    sp.add_argument("--shape", type=_shape, help="removed partition lambda")
    sp.add_argument("--alphabet", help="ytilde (default) | ybar | comma list")
    sp.add_argument("--flag", type=_int_list)

    sp = add("tableaux", cmd_tableaux, "flagged skew tableaux inside the staircase")
    sp.add_argument("--shape", type=_shape, help="inner shape; default all even-column shapes")

    sp = add("nilp", cmd_nilp, "augmented lattice path configurations")
    sp.add_argument("--t", type=_sym_list)

    sp = add("verify", cmd_verify, "run a verification suite", n=False)
    sp.add_argument("--suite", choices=["paper", "all"], default="paper")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--only", type=_int_list, help="subset of the acceptance checks, by number")
    return p


def _params(args) -> dict:
    out = {}
    for k, v in vars(args).items():
        if k in ("func", "json", "subcommand"):
            continue
        if isinstance(v, Partition):
            v = str(v)
        elif isinstance(v, tuple):
            v = list(v)
        elif isinstance(v, list):
            v = [str(x) for x in v]
        out[k] = v
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = args.func(args)
    except UsageError as exc:
        print(f"phk {args.subcommand}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"phk {args.subcommand}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text, result = outcome[0], outcome[1]
    ok = outcome[2] if len(outcome) > 2 else True
    if args.json:
        doc = {"tool_version": __version__, "subcommand": args.subcommand, "params": _params(args), "result": result}
        print(json.dumps(doc, indent=2, sort_keys=True, default=str))
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
