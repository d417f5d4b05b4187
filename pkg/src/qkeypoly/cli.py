"""Command-line front end.

    qkeypoly compute --family U --index 1,0,2
    qkeypoly hl --family P --lambda 2,1 --n 3
    qkeypoly straighten --u -2,3,2
    qkeypoly scalar --left U:2,1,0 --right Uhat:0,1,2
    qkeypoly matrix --from U --to K --n 3 --degree 3
    qkeypoly verify --check duality --lambda 2,0,0 --n 3

Exit codes: 0 success (or all checks passed), 1 a verification failed,
2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ctscalar import scalar_q, verify_adjoint_ops, verify_cauchy, verify_duality, verify_weight_duality
from .demazure import verify_operator_identities
from .hall import as_partition, hl_P, hl_Q, pad, partitions, straighten_Q, top_term, verify_lemma_top_term
from .heckealg import verify_flag_duality
from .multipoly import monomial
from .qkey import FAMILIES, key_poly, transition_matrix, u_poly, uhat_poly

MAX_N = 8
CHECKS = ("duality", "flag", "operators", "adjoint", "cauchy", "lemma-topterm")
# options whose value may start with a minus sign
_VECTOR_OPTS = ("--index", "--lambda", "--u", "--left", "--right")


class UsageError(Exception):
    pass


def parse_vector(text: str, allow_negative: bool = True) -> tuple[int, ...]:
    try:
        v = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"malformed vector {text!r}: expected comma-separated integers") from None
    if not allow_negative and any(a < 0 for a in v):
        raise UsageError(f"negative entries are not allowed here: {text!r}")
    return v


def _check_n(n: int):
    if not 1 <= n <= MAX_N:
        raise UsageError(f"n={n} out of range 1..{MAX_N}")


def _resolve_n(vec, n):
    if n is None:
        n = len(vec)
    _check_n(n)
    if len(vec) > n:
        raise UsageError(f"vector {vec} is longer than n={n}")
    return n


def _family_member(spec: str):
    fam, _, rest = spec.partition(":")
    if not rest:
        raise UsageError(f"expected FAMILY:VECTOR, got {spec!r}")
    if fam == "M":
        return monomial(parse_vector(rest))
    v = parse_vector(rest, allow_negative=False)
    _check_n(len(v))
    builders = {
        "U": u_poly,
        "Uhat": uhat_poly,
        "K": lambda w: key_poly(w, "plain"),
        "Khat": lambda w: key_poly(w, "hat"),
    }
    if fam not in builders:
        raise UsageError(f"unknown family {fam!r}; expected U, Uhat, K, Khat or M")
    return builders[fam](v)


def _emit(args, text: str, data):
    if args.format == "json":
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------


def cmd_compute(args) -> int:
    v = parse_vector(args.index, allow_negative=False)
    _check_n(len(v))
    f = {
        "U": u_poly,
        "Uhat": uhat_poly,
        "K": lambda w: key_poly(w, "plain"),
        "Khat": lambda w: key_poly(w, "hat"),
    }[args.family](v)
    if args.q0:
        f = f.specialize_q(0)
    label = "".join(map(str, v)) if all(a <= 9 for a in v) else ",".join(map(str, v))
    _emit(args, f"{args.family}_{label} = {f}", {"family": args.family, "index": list(v), "poly": f.to_json()})
    return 0


def cmd_hl(args) -> int:
    lam = parse_vector(args.lam, allow_negative=False)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise UsageError(f"{lam} is not a partition")
    n = _resolve_n(as_partition(lam), args.n)
    f = (hl_P if args.family == "P" else hl_Q)(as_partition(lam), n)
    text = f"{args.family}_{{{','.join(map(str, as_partition(lam)))}}} = {f}"
    _emit(args, text, {"family": args.family, "lambda": list(as_partition(lam)), "n": n, "poly": f.to_json()})
    return 0


def cmd_straighten(args) -> int:
    u = parse_vector(args.u)
    e = straighten_Q(u)
    if e:
        lam, c = top_term(e)
        top = {"partition": list(lam), "coeff": c.to_json()}
        text = f"{e}\ntop term: ({c})·Q_{{{','.join(map(str, lam))}}}"
    else:
        top = None
        text = "0"
    _emit(args, text, {"u": list(u), "expansion": e.to_json(), "top_term": top})
    return 0


def cmd_scalar(args) -> int:
    f = _family_member(args.left)
    g = _family_member(args.right)
    if f.n != g.n:
        raise UsageError("left and right live in different numbers of variables")
    val = scalar_q(f, g)
    _emit(args, str(val), {"left": args.left, "right": args.right, "value": val.to_json()})
    return 0


def cmd_matrix(args) -> int:
    _check_n(args.n)
    if args.degree < 0:
        raise UsageError("degree must be >= 0")
    m = transition_matrix(args.source, args.target, args.n, args.degree)
    _emit(args, str(m), m.to_json())
    return 0


def _line(name: str, ok: bool, detail: str) -> str:
    return f"{name}: {'PASS' if ok else 'FAIL'} ({detail})"


def _run_checks(args) -> list[tuple[str, bool, str]]:
    n, check = args.n, args.check
    if check == "duality":
        out = []
        if args.lam is not None:
            lams = [as_partition(parse_vector(args.lam, allow_negative=False))]
            if len(lams[0]) > n:
                raise UsageError(f"lambda has more than n={n} parts")
        else:
            lams = [lam for d in range(args.degree + 1) for lam in partitions(d, n)]
        for lam in lams:
            rep = verify_duality(lam, n)
            out.append((f"duality lambda={pad(lam, n)} n={n}", rep.passed, f"{len(rep.left)}x{len(rep.left)} Gram"))
        if args.lam is None:
            rep = verify_weight_duality(n, args.degree)
            k = len(rep.left)
            out.append((f"weight-duality degree={args.degree} n={n}", rep.passed, f"{k}x{k} Gram"))
        return out
    if check == "flag":
        r = verify_flag_duality(n)
        return [(f"flag n={n}", r["pass"], f"{r['pairs']} pairs, {len(r['failures'])} failures")]
    if check == "operators":
        r = verify_operator_identities(n, args.trials, args.seed)
        return [
            (f"operators:{name} n={n}", not bad, f"{args.trials} trials, {bad} failures")
            for name, bad in r["failures"].items()
        ]
    if check == "adjoint":
        r = verify_adjoint_ops(n, args.trials, seed=args.seed)
        return [(f"adjoint n={n}", r["pass"], f"{args.trials} trials, {len(r['failures'])} failures")]
    if check == "cauchy":
        r = verify_cauchy(n, args.degree)
        return [(f"cauchy n={n} degree<={args.degree}", r["pass"], f"{r['terms']} terms, {len(r['mismatches'])} mismatches")]
    if check == "lemma-topterm":
        r = verify_lemma_top_term(n, trials=args.trials, seed=args.seed)
        return [(f"lemma-topterm n={n}", r["pass"], f"{r['checked']} vectors, {len(r['failures'])} failures")]
    raise UsageError(f"unknown check {check!r}")


def cmd_verify(args) -> int:
    _check_n(args.n)
    if args.n < 2 and args.check in ("operators", "adjoint"):
        raise UsageError(f"--check {args.check} needs n >= 2")
    rows = _run_checks(args)
    ok = all(r[1] for r in rows)
    if args.format == "json":
        data = {
            "check": args.check,
            "n": args.n,
            "seed": args.seed,
            "results": [{"name": a, "pass": b, "detail": c} for a, b, c in rows],
            "pass": ok,
        }
        print(json.dumps(data))
    else:
        for row in rows:
            print(_line(*row))
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qkeypoly", description="q-Key polynomials and Hall-Littlewood straightening")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("compute", help="print U_v, Uhat_v, K_v or Khat_v")
    sp.add_argument("--family", choices=("U", "Uhat", "K", "Khat"), required=True)
    sp.add_argument("--index", required=True, help="comma-separated non-negative integers")
    sp.add_argument("--q0", action="store_true", help="specialize at q = 0")
    common(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("hl", help="print a Hall-Littlewood polynomial")
    sp.add_argument("--family", choices=("P", "Q"), default="P")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--n", type=int)
    common(sp)
    sp.set_defaults(func=cmd_hl)

    sp = sub.add_parser("straighten", help="expand Q_u in the Q_lambda basis")
    sp.add_argument("--u", required=True, help="comma-separated integers")
    common(sp)
    sp.set_defaults(func=cmd_straighten)

    sp = sub.add_parser("scalar", help="constant-term scalar product (f, g)_q")
    sp.add_argument("--left", required=True, help="FAMILY:VECTOR with FAMILY in U, Uhat, K, Khat, M")
    sp.add_argument("--right", required=True)
    common(sp)
    sp.set_defaults(func=cmd_scalar)

    sp = sub.add_parser("matrix", help="transition matrix between two families")
    sp.add_argument("--from", dest="source", choices=FAMILIES, required=True)
    sp.add_argument("--to", dest="target", choices=FAMILIES, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--check", choices=CHECKS, required=True)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=42)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def _glue_vectors(argv: list[str]) -> list[str]:
    """Turn ``--u -2,3`` into ``--u=-2,3`` so argparse does not read it as a flag."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VECTOR_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_vectors(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, IndexError, ArithmeticError) as exc:
        print(f"qkeypoly {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"qkeypoly {args.command}: internal error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
