"""Command line entry point: ``homrep <command> ...``.

Exit status is 0 exactly when no check failed (flagged checks are not
failures).  Runtimes are left out of the JSON unless ``--timing`` is given,
so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import List, Optional

from .braid_hecke import Partition, braid_relations_check, hecke_relations_check
from .forms import (
    FormVanishesAtSpecialization,
    NotNormalizable,
    SesquiForm,
    Specialization,
    definiteness_probe,
    hermitian_normalize,
    invariant_form_space,
    specialize_gram,
)
from .harness import ConjectureCase, conjecture_check, verify_rep, verify_section5
from .homreps import burau_reduced, burau_unreduced, lk_rep, lk_rep_u_basis, trivial_rep
from .linalg import nullspace
from .report import VerificationReport, emit_report
from .specht import d_lambda, dj_form, hook_dim, specht_rep
from .scalars import GENERIC_Q, cyclotomic

T_ALIASES = {"generic": None, "qinv": "qinv", "minus1": "minus1", "-1": "minus1"}


def parse_q(text: str) -> Optional[int]:
    if text == "generic":
        return None
    if text.startswith("root:"):
        k = int(text[5:])
        if k < 2:
            raise argparse.ArgumentTypeError("root:k needs k >= 2")
        return k
    raise argparse.ArgumentTypeError(f"expected generic or root:k, got {text!r}")


def parse_t(text: str) -> Optional[str]:
    if text not in T_ALIASES:
        raise argparse.ArgumentTypeError(f"expected generic, qinv or minus1, got {text!r}")
    return T_ALIASES[text]


def parse_lambda(text: str) -> Partition:
    try:
        return Partition.parse(text.strip("()"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def thread_cap() -> int:
    """HOMREP_THREADS, validated; the computations themselves run sequentially."""
    raw = os.environ.get("HOMREP_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"HOMREP_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise SystemExit("HOMREP_THREADS must be >= 1")
    return value


def _rep_for(kind: str, n: int, basis: str = "v"):
    if kind == "trivial":
        return trivial_rep(n)
    if kind == "burau":
        return burau_reduced(n)
    if kind == "burau-unreduced":
        return burau_unreduced(n)
    if kind == "lk":
        return lk_rep_u_basis(n) if basis == "u" else lk_rep(n)
    raise SystemExit(f"unknown representation kind {kind!r}")


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> dict:
    if args.target == "section5":
        ns = [args.n] if args.n else [3, 4, 5, 6]
        return {"report": verify_section5(ns)}
    top = args.n or {"trivial": 6, "burau": 6, "lk": 5}[args.target]
    return {"report": verify_rep(args.target, range(2, top + 1))}


def cmd_conjecture(args) -> dict:
    return {"report": conjecture_check(ConjectureCase(args.lam, args.q))}


def cmd_form(args) -> dict:
    rpt = VerificationReport("form", {"rep": args.rep, "n": args.n, "t": args.t or "generic",
                                       "at": Specialization(args.at).label})
    rep = _rep_for(args.rep, args.n)
    spaces = invariant_form_space(rep)
    rpt.add("invariant form space dim", len(spaces) == 1, expected=1, actual=len(spaces),
            anchor="invariant under the action of $B_n$")
    data = {"form_space_dim": len(spaces)}
    if not spaces:
        return {"report": rpt, "data": data}
    try:
        form = hermitian_normalize(spaces[0])
    except NotNormalizable as exc:
        rpt.add("Hermitian normalisation", False, actual=str(exc))
        return {"report": rpt, "data": data}
    rpt.add("Hermitian", form.is_hermitian(), anchor="non-singular Hermitian form")
    rpt.add("invariant", form.is_invariant(rep), anchor="invariant under the action of $B_n$")
    data["gram"] = form.gram.to_text()
    if args.probe:
        pos, neg, zero = definiteness_probe(form, *args.probe)
        data["inertia"] = {"pos": pos, "neg": neg, "zero": zero}
        definite = zero == 0 and (pos == 0 or neg == 0)
        rpt.add("definite at probe angles", definite if definite else None, expected="one sign",
                actual=[pos, neg, zero], anchor="this form is negative definite", flagged=not definite)
    if args.t is not None or args.at is not None:
        try:
            G, v = specialize_gram(form.gram, Specialization(args.at, args.t))
            rad = nullspace(G)
            data.update(specialized_gram=G.to_text(), radical_dim=rad.dim, phi_rescale=v)
            rpt.add("specialised form nonzero", not G.is_zero())
            if v:
                rpt.add(f"form divided by Phi_{args.at}^{v}", None, flagged=True)
        except FormVanishesAtSpecialization as exc:
            rpt.add("specialised form nonzero", False, actual=str(exc))
    else:
        data["radical_dim"] = nullspace(form.gram).dim
    return {"report": rpt, "data": data}


def cmd_specht(args) -> dict:
    lam = args.lam
    dom = GENERIC_Q if args.q is None else cyclotomic(args.q)
    rpt = VerificationReport("specht", {"lambda": str(lam), "q": Specialization(args.q).label, "emit": args.emit})
    S = specht_rep(lam, domain=dom)
    rpt.add("dim = hook formula", S.dim == hook_dim(lam), expected=hook_dim(lam), actual=S.dim)
    rpt.extend(hecke_relations_check(S.rep), "")
    D = d_lambda(lam, args.q)
    data = {"specht_dim": S.dim, "d_lambda_dim": D.dim, "radical_dim": S.dim - D.dim,
            "tableaux": [str(t) for t in S.tableaux]}
    if args.emit == "matrices":
        data["T"] = [g.to_text() for g in S.gens]
        data["d_lambda_T"] = [g.to_text() for g in D.gens]
    elif args.emit == "gram":
        data["gram"] = dj_form(S).to_text()
    return {"report": rpt, "data": data}


def cmd_rep_dump(args) -> dict:
    rep = _rep_for(args.kind, args.n, args.basis)
    if args.t is not None:
        if rep.domain.kind != "qt":
            raise SystemExit("--t applies to the lk family only")
        rep = rep.specialize(t=args.t)
    if args.q is not None:
        if rep.domain.kind == "qt":
            raise SystemExit("specialise t before sending q to a root of unity")
        rep = rep.specialize(q=args.q)
    rpt = VerificationReport("rep dump", {"kind": args.kind, "n": args.n, "basis": args.basis,
                                           "q": Specialization(args.q).label, "t": args.t or "generic"})
    rpt.extend(braid_relations_check(rep), "")
    labels = rep.meta.get("labels") or [f"e_{i + 1}" for i in range(rep.dim)]
    data = {"domain": rep.domain.label, "dim": rep.dim, "labels": labels,
            "generators": {f"s{i}": g.to_text() for i, g in enumerate(rep.gens, 1)}}
    return {"report": rpt, "data": data}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--timing", action="store_true", help="record runtime in the report")

    p = argparse.ArgumentParser(prog="homrep", description="Exact checks for homological braid representations.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="relation suites and the worked-example battery")
    v.add_argument("target", choices=("trivial", "burau", "lk", "section5"))
    v.add_argument("--n", type=int)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("conjecture", parents=[common], help="compare W with D_lambda")
    c.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    c.add_argument("--q", type=parse_q, default=None)
    c.set_defaults(func=cmd_conjecture)

    f = sub.add_parser("form", parents=[common], help="invariant form, radical, inertia")
    f.add_argument("--rep", choices=("trivial", "burau", "burau-unreduced", "lk"), required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--t", type=parse_t, default=None)
    f.add_argument("--at", type=parse_q, default=None)
    f.add_argument("--probe", type=float, nargs=2, metavar=("Q_ANGLE", "T_ANGLE"))
    f.set_defaults(func=cmd_form)

    s = sub.add_parser("specht", parents=[common], help="Specht module S^lambda and D_lambda")
    s.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    s.add_argument("--q", type=parse_q, default=None)
    s.add_argument("--emit", choices=("dims", "matrices", "gram"), default="dims")
    s.set_defaults(func=cmd_specht)

    r = sub.add_parser("rep", help="representation matrices")
    rsub = r.add_subparsers(dest="action", required=True)
    d = rsub.add_parser("dump", parents=[common])
    d.add_argument("--kind", choices=("trivial", "burau", "burau-unreduced", "lk"), required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--basis", choices=("u", "v"), default="v")
    d.add_argument("--q", type=parse_q, default=None)
    d.add_argument("--t", type=parse_t, default=None)
    d.set_defaults(func=cmd_rep_dump)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    thread_cap()
    t0 = time.perf_counter()
    out = args.func(args)
    rpt: VerificationReport = out["report"]
    rpt.timing_ms = round((time.perf_counter() - t0) * 1000, 3) if args.timing else 0.0
    if args.format == "table":
        text = emit_report(rpt, "table")
        if "data" in out:
            text += "\n" + json.dumps(out["data"], sort_keys=True, indent=2)
    elif "data" in out:
        text = json.dumps(dict(rpt.to_dict(), data=out["data"]), sort_keys=True, indent=2)
    else:
        text = emit_report(rpt, "json")
    print(text)
    return 0 if rpt.passed else 1


if __name__ == "__main__":
    sys.exit(main())
