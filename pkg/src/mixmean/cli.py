"""Command-line front end: certificate pipelines over the library modules.

Commands
    construct kedlaya|comb|cyclic|cyclic-profile   build + self-verify
    solve     transition|cyclic-profile            exact LP feasibility
    verify    transition|cyclic-profile            check a stored certificate
    expand    --matrix FILE                        integer repetition grid
    inequality --M --N --families A/B              evaluate or sample

Family descriptors use the closed grammar kind:param,param with kinds
kedlaya:n, comb:n,k and cyclic:n,k; anything else is read as a JSON file
(weight-family or dist-sequence).  Exit codes: 0 success/valid/feasible,
2 malformed parameters or input, 3 infeasible/invalid/violated, 4 failed
self-verification (internal bug).  Data goes to stdout, diagnostics to
stderr; MIXMEAN_THREADS caps worker threads in the sampling suite.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Tuple

from . import constructions, serialize
from .distributions import DistSequence, dist_from_weights, verify_transition
from .errors import MixmeanError, UncertifiedFamilies
from .gridexpand import expand_transition, verify_expansion
from .means import WeightFunction, parse_mean_spec
from .solver import solve_cyclic_profile, solve_transition
from .verify import SamplerConfig, check_mixed_inequality, random_suite

OK = 0
BAD_PARAMS = 2
NEGATIVE = 3
SELF_CHECK_FAILED = 4


class _Family:
    """A resolved family: weight functions when available, else distributions."""

    def __init__(self, descriptor: str, weights=None, dists=None):
        self.descriptor = descriptor
        self.weights = weights
        self.dists = dists if dists is not None else DistSequence(
            dist_from_weights(w) for w in weights
        )


def _parse_family(text: str) -> _Family:
    kind, sep, rest = text.partition(":")
    if sep and kind in ("kedlaya", "comb", "cyclic"):
        params = [int(v) for v in rest.split(",") if v]
        if kind == "kedlaya":
            if len(params) != 1:
                raise MixmeanError(f"kedlaya takes one parameter, got {text!r}")
            return _Family(text, weights=constructions.kedlaya_weights(params[0]))
        if len(params) != 2:
            raise MixmeanError(f"{kind} takes two parameters, got {text!r}")
        n, k = params
        if kind == "comb":
            return _Family(text, weights=constructions.combinations_weights(n, k))
        return _Family(text, weights=constructions.cyclic_weights(n, k))
    # custom families come from JSON files only
    if not os.path.exists(text):
        raise MixmeanError(f"unknown family kind and no such file: {text!r}")
    obj = serialize.loads(_read(text))
    if obj.get("kind") == "weight-family":
        return _Family(text, weights=serialize.weight_family_from_obj(obj))
    if obj.get("kind") == "dist-sequence":
        return _Family(text, dists=serialize.sequence_from_obj(obj))
    raise MixmeanError(f"{text}: expected a weight-family or dist-sequence JSON")


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cyclic_pair_transition(n: int, k: int, l: int):
    """Transition matrix for (O_n^k, O_n^l), k <= l, via profile lift."""
    if l == n - k + 1:
        profile = constructions.cyclic_profile_explicit(n, k)
    else:
        solved = solve_cyclic_profile(n, k, l)
        if not solved.feasible:
            return None
        profile = solved.profile
    return constructions.lift_cyclic_profile(n, k, l, profile)


def _transpose(matrix):
    from .distributions import TransitionMatrix

    return TransitionMatrix(
        [[matrix.entry(i, j) for i in range(matrix.k)] for j in range(matrix.m)]
    )


def _resolve_certificate(left: _Family, right: _Family):
    """Find a transition matrix between two families, trying closed forms first."""
    lk, _, lrest = left.descriptor.partition(":")
    rk, _, rrest = right.descriptor.partition(":")
    if lk == rk == "cyclic":
        n1, k1 = (int(v) for v in lrest.split(","))
        n2, k2 = (int(v) for v in rrest.split(","))
        if n1 == n2:
            lo, hi = min(k1, k2), max(k1, k2)
            if hi <= n1 <= lo + hi - 1:
                matrix = _cyclic_pair_transition(n1, lo, hi)
                if matrix is None:
                    return None
                return matrix if k1 <= k2 else _transpose(matrix)
            return None
    if lk == rk == "kedlaya" and lrest == rrest:
        return constructions.kedlaya_transition(int(lrest))
    if lk == rk == "comb":
        n1, k1 = (int(v) for v in lrest.split(","))
        n2, k2 = (int(v) for v in rrest.split(","))
        if n1 == n2 and max(k1, k2) <= n1 <= k1 + k2 - 1:
            return constructions.combinations_transition(n1, k1, k2)
    solved = solve_transition(left.dists, right.dists)
    return solved.matrix if solved.feasible else None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_construct(args) -> int:
    what = args.what
    fmt = args.format
    if what == "kedlaya":
        matrix = constructions.kedlaya_transition(args.n)
        family = constructions.kedlaya_family(args.n)
        cert = verify_transition(family, family, matrix)
        weights = constructions.kedlaya_weights(args.n)
        obj = serialize.transition_to_obj(matrix, weights, weights)
        body = serialize.transition_to_csv(matrix) if fmt == "csv" else None
    elif what == "comb":
        if args.k is None or args.l is None:
            raise MixmeanError("construct comb needs --k and --l")
        matrix = constructions.combinations_transition(args.n, args.k, args.l)
        cert = verify_transition(
            constructions.combinations_family(args.n, args.k),
            constructions.combinations_family(args.n, args.l),
            matrix,
        )
        obj = serialize.transition_to_obj(
            matrix,
            constructions.combinations_weights(args.n, args.k),
            constructions.combinations_weights(args.n, args.l),
        )
        body = serialize.transition_to_csv(matrix) if fmt == "csv" else None
    elif what in ("cyclic", "cyclic-profile"):
        profile = constructions.cyclic_profile_explicit(args.n, args.k)
        k, l = profile.k, profile.l
        if args.l is not None and args.l != l:
            raise MixmeanError(
                f"the explicit construction pairs k={k} with l={l}; "
                "use `solve cyclic-profile` for other window pairs"
            )
        cert = constructions.verify_cyclic_profile(args.n, k, l, profile)
        if what == "cyclic-profile":
            obj = serialize.profile_to_obj(profile)
            if fmt == "csv":
                body = serialize.profile_to_csv(profile)
            elif fmt == "text":
                body = serialize.profile_to_text(profile)
            else:
                body = None
        else:
            matrix = constructions.lift_cyclic_profile(args.n, k, l, profile)
            cert = verify_transition(
                constructions.cyclic_family(args.n, k),
                constructions.cyclic_family(args.n, l),
                matrix,
            )
            obj = serialize.transition_to_obj(
                matrix,
                constructions.cyclic_weights(args.n, k),
                constructions.cyclic_weights(args.n, l),
            )
            body = serialize.transition_to_csv(matrix) if fmt == "csv" else None
    else:  # pragma: no cover - argparse restricts choices
        raise MixmeanError(f"unknown construction {what!r}")

    if not cert.valid:
        print(f"self-verification failed with {len(cert.failures)} failures", file=sys.stderr)
        return SELF_CHECK_FAILED
    if body is None:
        obj["certificate"] = serialize.certificate_to_obj(cert)
        body = serialize.dumps(obj) + "\n"
    _emit(body, args.out)
    return OK


def _cmd_solve(args) -> int:
    if args.what == "transition":
        left = _parse_family(args.left)
        right = _parse_family(args.right)
        solved = solve_transition(left.dists, right.dists)
        if not solved.feasible:
            obj = {
                "kind": "solve-outcome",
                "feasible": False,
                "witness": serialize.format_rational(solved.witness),
            }
            _emit(serialize.dumps(obj) + "\n", args.out)
            return NEGATIVE
        cert = verify_transition(left.dists, right.dists, solved.matrix)
        obj = serialize.transition_to_obj(solved.matrix, left.weights, right.weights)
        obj["certificate"] = serialize.certificate_to_obj(cert)
        _emit(serialize.dumps(obj) + "\n", args.out)
        return OK if cert.valid else SELF_CHECK_FAILED
    # cyclic-profile
    l = args.l if args.l is not None else args.n - args.k + 1
    solved = solve_cyclic_profile(args.n, args.k, l)
    if not solved.feasible:
        obj = {
            "kind": "solve-outcome",
            "feasible": False,
            "witness": serialize.format_rational(solved.witness),
        }
        _emit(serialize.dumps(obj) + "\n", args.out)
        return NEGATIVE
    obj = serialize.profile_to_obj(solved.profile)
    obj["certificate"] = serialize.certificate_to_obj(
        constructions.verify_cyclic_profile(args.n, args.k, l, solved.profile)
    )
    _emit(serialize.dumps(obj) + "\n", args.out)
    return OK


def _cmd_verify(args) -> int:
    obj = serialize.loads(_read(args.matrix))
    if args.what == "transition":
        matrix = serialize.transition_from_obj(obj)
        left = _parse_family(args.left)
        right = _parse_family(args.right)
        cert = verify_transition(left.dists, right.dists, matrix)
    else:
        profile = serialize.profile_from_obj(obj)
        n = args.n if args.n is not None else profile.n
        k = args.k if args.k is not None else profile.k
        l = args.l if args.l is not None else profile.l
        cert = constructions.verify_cyclic_profile(n, k, l, profile)
    _emit(serialize.dumps(serialize.certificate_to_obj(cert)) + "\n", args.out)
    return OK if cert.valid else NEGATIVE


def _cmd_expand(args) -> int:
    obj = serialize.loads(_read(args.matrix))
    if obj.get("kind") != "transition" or "left_weights" not in obj or "right_weights" not in obj:
        raise MixmeanError(
            f"{args.matrix}: need a transition JSON carrying left_weights and right_weights"
        )
    matrix = serialize.transition_from_obj(obj)
    F = [WeightFunction(w) for w in obj["left_weights"]]
    G = [WeightFunction(w) for w in obj["right_weights"]]
    expansion = expand_transition(F, G, matrix)
    cert = verify_expansion(expansion, F, G)
    if not cert.valid:
        print(f"self-verification failed with {len(cert.failures)} failures", file=sys.stderr)
        return SELF_CHECK_FAILED
    if args.format == "text":
        _emit(serialize.expansion_to_text(expansion), args.out)
    else:
        _emit(serialize.dumps(serialize.expansion_to_obj(expansion)) + "\n", args.out)
    return OK


def _split_families(text: str) -> Tuple[str, str]:
    left, sep, right = text.partition("/")
    if not sep:
        raise MixmeanError(f"--families wants LEFT/RIGHT, got {text!r}")
    return left, right


def _cmd_inequality(args) -> int:
    M = parse_mean_spec(args.M)
    N = parse_mean_spec(args.N)
    left_text, right_text = _split_families(args.families)
    left = _parse_family(left_text)
    right = _parse_family(right_text)
    if left.weights is None or right.weights is None:
        raise MixmeanError("the inequality needs weight-function families")
    names = (left_text, right_text)

    if args.x:
        x = [float(v) for v in args.x.split(",")]
        report = check_mixed_inequality(M, N, left.weights, right.weights, x, names)
        _emit(serialize.dumps(serialize.report_to_obj(report)) + "\n", args.out)
        return OK if report.holds else NEGATIVE

    matrix = _resolve_certificate(left, right)
    if matrix is None:
        raise UncertifiedFamilies(
            f"no transition certificate exists for {left_text} vs {right_text}"
        )
    sampler = SamplerConfig(count=args.count, seed=args.seed)
    suite = random_suite(
        M,
        N,
        left.weights,
        right.weights,
        sampler,
        transition=matrix,
        force=args.force,
        families=names,
    )
    _emit(serialize.dumps(serialize.aggregate_to_obj(suite)) + "\n", args.out)
    return OK if suite.failures == 0 else NEGATIVE


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixmean",
        description="exact conjugacy certificates and mixed-mean inequality checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a family certificate and self-verify")
    construct.add_argument("what", choices=["kedlaya", "comb", "cyclic", "cyclic-profile"])
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--k", type=int)
    construct.add_argument("--l", type=int)
    construct.add_argument("--format", choices=["json", "csv", "text"], default="json")
    construct.add_argument("--out")
    construct.set_defaults(func=_cmd_construct)

    solve = sub.add_parser("solve", help="exact LP feasibility for conjugacy questions")
    solve.add_argument("what", choices=["transition", "cyclic-profile"])
    solve.add_argument("--left", help="family descriptor (kind:params or JSON file)")
    solve.add_argument("--right")
    solve.add_argument("--n", type=int)
    solve.add_argument("--k", type=int)
    solve.add_argument("--l", type=int)
    solve.add_argument("--out")
    solve.set_defaults(func=_cmd_solve)

    verify = sub.add_parser("verify", help="re-check a stored certificate exactly")
    verify.add_argument("what", choices=["transition", "cyclic-profile"])
    verify.add_argument("--matrix", required=True)
    verify.add_argument("--left")
    verify.add_argument("--right")
    verify.add_argument("--n", type=int)
    verify.add_argument("--k", type=int)
    verify.add_argument("--l", type=int)
    verify.add_argument("--out")
    verify.set_defaults(func=_cmd_verify)

    expand = sub.add_parser("expand", help="integer repetition grid from a transition")
    expand.add_argument("--matrix", required=True)
    expand.add_argument("--format", choices=["json", "text"], default="json")
    expand.add_argument("--out")
    expand.set_defaults(func=_cmd_expand)

    inequality = sub.add_parser("inequality", help="evaluate or sample the mixed-mean inequality")
    inequality.add_argument("--M", required=True, help="inner mean, e.g. power:0")
    inequality.add_argument("--N", required=True, help="outer mean, e.g. power:1")
    inequality.add_argument("--families", required=True, help="LEFT/RIGHT descriptors")
    inequality.add_argument("--count", type=int, default=1000)
    inequality.add_argument("--seed", type=int, default=0)
    inequality.add_argument("--x", help="single input vector, comma separated")
    inequality.add_argument("--force", action="store_true", help="run an uncertified pair")
    inequality.add_argument("--out")
    inequality.set_defaults(func=_cmd_inequality)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            if args.what == "transition" and (not args.left or not args.right):
                parser.error("solve transition needs --left and --right")
            if args.what == "cyclic-profile" and (args.n is None or args.k is None):
                parser.error("solve cyclic-profile needs --n and --k")
        if args.command == "verify" and args.what == "transition":
            if not args.left or not args.right:
                parser.error("verify transition needs --left and --right")
        return args.func(args)
    except UncertifiedFamilies as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    except (ValueError, TypeError, OSError, KeyError) as exc:
        # covers MixmeanError (a ValueError), bad literals, bad files, bad JSON
        print(f"error: {exc}", file=sys.stderr)
        return BAD_PARAMS


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
