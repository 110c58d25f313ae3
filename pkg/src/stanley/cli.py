"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 precondition or domain error,
3 resource cap, 4 internal inconsistency (including a failed verification).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time
from pathlib import Path

from . import __version__
from .analysis import (
    certify,
    classify_growth,
    moy_violations,
    repeat_structure_check,
    scaling_decomposition,
    triple_growth_check,
)
from .construct import Caps, adk, certify_seed, product, target_repeat, target_scaling
from .errors import InconsistencyError, InputError, StanleyError
from .oracle import CoverClaim, check_cover_claim, check_main_prefix, oracle_equivalence
from .sequence import SeedSet, generate, obstruction_set
from .triadic import Triadic


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _seed(text):
    try:
        return SeedSet.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _triadic(text):
    try:
        return Triadic.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stanley", description="Stanley sequences: generation, certificates, constructions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--manifest", help="where to write the run manifest (default: next to --out, else stderr)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        return p

    p = common(sub.add_parser("generate", help="first terms of S(seed)"))
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--count", type=int, required=True)

    p = common(sub.add_parser("analyze", help="independence certificate and structure checks"))
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--kmax", type=int, default=12)

    p = common(sub.add_parser("omega", help="the obstruction set O(A)"))
    p.add_argument("--seed", type=_seed, required=True)

    construct = sub.add_parser("construct", help="build a new seed")
    csub = construct.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = common(csub.add_parser("product"))
    p.add_argument("--seed-a", type=_seed, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed-b", type=_seed, required=True)
    p = common(csub.add_parser("adk"))
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    search = sub.add_parser("search", help="find a chain hitting a target")
    ssub = search.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = common(ssub.add_parser("scaling"))
    p.add_argument("--alpha", type=_triadic, required=True, help="p/3^e or p/q with q a power of 3")
    p.add_argument("--max-depth", type=int, default=Caps.max_depth)
    p = common(ssub.add_parser("repeat"))
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--max-depth", type=int, default=Caps.max_depth)

    verify = sub.add_parser("verify", help="brute-force checks")
    vsub = verify.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = common(vsub.add_parser("cover"))
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--part", choices=("a", "b", "c", "d", "e"), required=True)
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--y", type=int)
    p = common(vsub.add_parser("main-prefix"))
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = common(vsub.add_parser("oracle"))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max-seed-value", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--rng-seed", type=int, default=0)

    p = common(sub.add_parser("classify", help="heuristic Type 1 / Type 2 growth report"))
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--count", type=int, required=True)
    return parser


# --------------------------------------------------------------------------
# handlers return (payload, ok)


def _certified(seed, horizon=None):
    return certify_seed(seed, horizon or max(64, 4 * len(seed)))


def cmd_generate(args):
    seq = generate(args.seed, args.count)
    return {"seed": list(args.seed.elements), "count": len(seq), "terms": seq.tolist()}, True


def cmd_analyze(args):
    seq = generate(args.seed, args.horizon)
    cert = certify(seq, kmax=args.kmax)
    out = {"certificate": None, "obstruction": obstruction_set(args.seed).to_dict()}
    if cert is not None:
        out["certificate"] = cert.to_dict()
        out["decomposition"] = scaling_decomposition(seq, cert).to_dict()
        out["repeat_structure"] = repeat_structure_check(seq, cert)
        if len(seq) > 1 << (cert.kappa + 1):
            out["triple_growth"] = triple_growth_check(seq, cert)
    return out, True


def cmd_omega(args):
    return obstruction_set(args.seed).to_dict(), True


def cmd_construct(args):
    if args.kind == "product":
        a = _certified(args.seed_a)
        seed = product(a.seq, a.cert, args.k, args.seed_b)
        b = _certified(args.seed_b)
        return {
            "seed": list(seed.elements),
            "predicted_alpha": (a.cert.alpha * b.cert.alpha).to_dict(),
        }, True
    a = _certified(args.seed)
    res = adk(a.seq, a.cert, args.k, args.d)
    return {
        "seed": list(res.seed.elements),
        "predicted_rho": res.rho,
        "predicted_alpha": res.alpha.to_dict(),
    }, True


def cmd_search(args):
    caps = Caps(max_depth=args.max_depth)
    if args.kind == "scaling":
        chain = target_scaling(args.alpha, caps)
    else:
        chain = target_repeat(args.rho, caps)
    return chain.to_dict(), True


def cmd_verify(args):
    if args.kind == "oracle":
        results = oracle_equivalence(args.trials, args.max_seed_value, args.terms, args.rng_seed)
        agree = sum(r.agree for r in results)
        return {
            "trials": args.trials,
            "rng_seed": args.rng_seed,
            "agree": agree,
            "results": [
                {"seed": list(r.seed.elements), "agree": r.agree, "first_mismatch": r.first_mismatch}
                for r in results
            ],
        }, agree == len(results)
    if args.kind == "cover":
        a = _certified(args.seed, 1 << (args.k + 2))
        claim = CoverClaim.build(args.part, a.seq[1 << args.k], args.x, args.y)
        ok = check_cover_claim(a.seq, a.cert, args.k, claim)
        return {"part": args.part, "k": args.k, "x": claim.x, "y": claim.y, "passed": ok}, ok
    a = _certified(args.seed, 1 << (args.k + 1))
    ok = check_main_prefix(a.seq, a.cert, args.k, args.d)
    return {"k": args.k, "d": args.d, "passed": ok}, ok


def cmd_classify(args):
    seq = generate(args.seed, args.count)
    out = classify_growth(seq).to_dict()
    out["moy_violations"] = moy_violations(seq)
    return out, True


HANDLERS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "omega": cmd_omega,
    "construct": cmd_construct,
    "search": cmd_search,
    "verify": cmd_verify,
    "classify": cmd_classify,
}


def _render(payload, fmt) -> str:
    if fmt == "csv":
        if "terms" not in payload:
            raise InputError("csv output is only available for term lists")
        buf = io.StringIO()
        buf.write("index,value\n")
        for i, v in enumerate(payload["terms"]):
            buf.write(f"{i},{v}\n")
        return buf.getvalue()
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _parameters(args) -> dict:
    out = {}
    for key, val in sorted(vars(args).items()):
        if key in ("manifest",):
            continue
        out[key] = str(val) if isinstance(val, (SeedSet, Triadic)) else val
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command + (f" {args.kind}" if getattr(args, "kind", None) else "")
    start = time.perf_counter()
    outputs = []
    try:
        payload, ok = HANDLERS[args.command](args)
        text = _render(payload, args.format)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            outputs.append(args.out)
        else:
            sys.stdout.write(text)
        code = 0 if ok else InconsistencyError.exit_code
    except StanleyError as exc:
        print(f"stanley: {type(exc).__name__}: {exc}", file=sys.stderr)
        code = exc.exit_code

    manifest = {
        "command": command,
        "parameters": _parameters(args),
        "versions": f"stanley {__version__}",
        "outputs": outputs,
        "timing": round(time.perf_counter() - start, 6),
        "exit_code": code,
    }
    target = args.manifest or (f"{args.out}.manifest.json" if args.out else None)
    if target:
        Path(target).write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    else:
        print(json.dumps(manifest), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
