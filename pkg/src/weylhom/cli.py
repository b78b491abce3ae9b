"""Command-line front end with deterministic text/JSON output."""

import argparse
import json
import os
import sys

from .combinatorics import Partition, Tableau, Weight, enumerate_sst
from .errors import InvalidInputError, ResourceCapError
from .homspace import box_image_formula, build_psi, hom_space, is_hom
from .theorems import (carter_payne_witnesses, check_nonvanishing,
                       check_stability, sweep_dk)
from .weyl import FormalSum, straighten, weight_space


def _build_parser():
    ap = argparse.ArgumentParser(prog="weylhom",
                                 description="Homomorphism spaces between Weyl modules over F_p")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_common(sp, p=True, lam=True, mu=True):
        if p:
            sp.add_argument("--p", type=int, required=True, help="prime characteristic")
        if lam:
            sp.add_argument("--lambda", dest="lam", required=True,
                            help="partition, comma-separated")
        if mu:
            sp.add_argument("--mu", required=True, help="partition, comma-separated")
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.add_argument("--max-dim", type=int, default=None,
                        help="ambient dimension cap (overrides WEYLHOM_MAX_DIM)")

    sp = sub.add_parser("sst", help="enumerate semistandard tableaux")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-dim", type=int, default=None)

    sp = sub.add_parser("straighten", help="straighten one monomial tableau")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--tableau", required=True, help='matrix rows, e.g. "2,0;0,1"')
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-dim", type=int, default=None)

    sp = sub.add_parser("hom", help="dimension (and basis) of the hom space")
    add_common(sp)
    sp.add_argument("--basis", action="store_true", help="print a kernel basis")

    sp = sub.add_parser("psi", help="check the sum-of-tableaux candidate")
    add_common(sp)

    sp = sub.add_parser("check", help="theorem hypothesis checkers")
    chk = sp.add_subparsers(dest="which", required=True)
    c1 = chk.add_parser("stability")
    add_common(c1)
    c1.add_argument("--gamma", required=True)
    c2 = chk.add_parser("nonvanishing")
    add_common(c2)
    c3 = chk.add_parser("carter-payne")
    add_common(c3)

    sp = sub.add_parser("sweep", help="d_k along lambda + k nu, mu + k nu")
    add_common(sp)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--kmax", type=int, required=True)

    return ap


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


def _verdict_json(v):
    return {"applicable": v.applicable, "failed": list(v.failed_conditions)}


def _basis_json(result):
    return [[{"tableau": T.to_string(), "coeff": c} for T, c in vec.support()]
            for vec in result.basis]


def _run(args, out):
    if args.cmd == "sst":
        mu = Partition.parse(args.mu)
        w = Weight.parse(args.weight)
        tabs = enumerate_sst(mu, w)
        if args.json:
            obj = {"mu": str(mu), "weight": str(w), "count": len(tabs)}
            if not args.count:
                obj["tableaux"] = [T.to_string() for T in tabs]
            _emit(obj, out)
        elif args.count:
            out.write("%d\n" % len(tabs))
        else:
            for T in tabs:
                out.write(T.to_string() + "\n")
        return 0

    if args.cmd == "straighten":
        mu = Partition.parse(args.mu)
        T = Tableau.parse(args.tableau, n=max(len(mu.parts), args.tableau.count(";") + 1,
                                              len(args.tableau.split(";")[0].split(","))))
        alpha = Weight(T.col_sums)
        ctx = weight_space(mu, alpha, args.p, max_dim=args.max_dim)
        x = FormalSum(mu, alpha, p=args.p, terms={T: 1})
        v = straighten(ctx, x)
        if args.json:
            obj = {"p": args.p, "mu": str(mu),
                   "terms": [{"tableau": S.to_string(), "coeff": c} for S, c in v]}
            _emit(obj, out)
        else:
            if v.is_zero():
                out.write("0\n")
            for S, c in v:
                out.write("%d*%s\n" % (c, S.to_string()))
        return 0

    lam = Partition.parse(args.lam)
    mu = Partition.parse(args.mu)

    if args.cmd == "hom":
        result = hom_space(lam, mu, args.p, max_dim=args.max_dim)
        if args.json:
            obj = {"p": args.p, "lambda": str(lam), "mu": str(mu), "dim": result.dim}
            if args.basis:
                obj["basis"] = _basis_json(result)
            _emit(obj, out)
        else:
            out.write("dim %d\n" % result.dim)
            if args.basis:
                for vec in result.basis:
                    out.write(" + ".join("%d*%s" % (c, T.to_string())
                                         for T, c in vec.support()) + "\n")
        return 0

    if args.cmd == "psi":
        psi = build_psi(lam, mu, args.p)
        nonzero = not psi.is_zero()
        ok = is_hom(psi, max_dim=args.max_dim) if nonzero else True
        if args.json:
            _emit({"p": args.p, "lambda": str(lam), "mu": str(mu),
                   "nonzero": nonzero, "is_hom": ok}, out)
        else:
            out.write("psi nonzero: %s\n" % str(nonzero).lower())
            out.write("psi is hom: %s\n" % str(ok).lower())
        return 0

    if args.cmd == "check":
        if args.which == "stability":
            gamma = Partition.parse(args.gamma)
            v = check_stability(lam, mu, gamma, args.p)
            extra = {"gamma": str(gamma)}
        elif args.which == "nonvanishing":
            v = check_nonvanishing(lam, mu, args.p)
            extra = {}
        else:
            wits = carter_payne_witnesses(lam, mu, args.p)
            if args.json:
                _emit({"p": args.p, "lambda": str(lam), "mu": str(mu),
                       "witnesses": [list(w) for w in wits],
                       "verdict": {"applicable": bool(wits), "failed": []}}, out)
            else:
                if wits:
                    for i, j, q in wits:
                        out.write("carter-payne witness: i=%d j=%d q=%d\n" % (i, j, q))
                else:
                    out.write("not a carter-payne pair\n")
            return 0
        if args.json:
            obj = {"p": args.p, "lambda": str(lam), "mu": str(mu)}
            obj.update(extra)
            obj["verdict"] = _verdict_json(v)
            _emit(obj, out)
        else:
            out.write("applicable: %s\n" % str(v.applicable).lower())
            for f in v.failed_conditions:
                out.write("failed: %s\n" % f)
            if v.prediction:
                out.write("prediction: %s\n" % v.prediction)
        return 0

    if args.cmd == "sweep":
        nu = Partition.parse(args.nu)
        dims = sweep_dk(lam, mu, nu, args.p, args.kmax, max_dim=args.max_dim)
        if args.json:
            _emit({"p": args.p, "lambda": str(lam), "mu": str(mu), "nu": str(nu),
                   "dims": dims}, out)
        else:
            for k, d in enumerate(dims):
                out.write("%d,%d\n" % (k, d))
        return 0

    raise InvalidInputError("unknown command %r" % args.cmd)


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "max_dim", None) is not None and args.max_dim < 0:
        sys.stderr.write("error: --max-dim must be nonnegative\n")
        return 2
    try:
        return _run(args, sys.stdout)
    except ResourceCapError as exc:
        sys.stderr.write("error: resource-cap: %s\n" % exc)
        return 3
    except InvalidInputError as exc:
        sys.stderr.write("error: invalid-input: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
