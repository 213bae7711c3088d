"""Command-line interface: ``cube-profiles <command> ...``.

Exit codes: 0 success/admissible/accept, 1 verification reject,
2 not admissible, 3 unknown or budget exceeded, 64 usage error, 74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import formats
from .constructor import Verdict, decide
from .explorer import (
    PairWeighting,
    face_decomposition_profiles,
    face_weighting_obstructions,
    hamilton_profiles,
    middle_layer_profiles,
    middle_layer_violations,
    perm3_polytope_points,
    perm3_violations,
    permutahedron_profiles,
)
from .hypercube import verify
from .oracle import (
    SearchBudget,
    SearchBudgetExceeded,
    Status,
    bounded_tuples,
    count_with_profile,
    exists_with_profile,
)
from .selftest import run_selftest

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_NOT_ADMISSIBLE = 2
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_IO = 74

log = logging.getLogger("cube_profiles")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _profile(text: str, n: int) -> tuple[int, ...]:
    try:
        x = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--profile must be comma-separated integers, got {text!r}") from None
    if len(x) != n:
        raise UsageError(f"--profile has {len(x)} entries but --n is {n}")
    if any(v < 0 for v in x):
        raise UsageError("--profile entries must be nonnegative")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cube-profiles", description="Hypercube matchings with prescribed direction profiles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_profile_args(p):
        p.add_argument("--n", type=int, required=True, help="dimension of the hypercube")
        p.add_argument("--profile", required=True, help="edge counts per direction, e.g. 2,2,2,2")

    p = sub.add_parser("construct", help="build a witness matching")
    add_profile_args(p)
    p.add_argument("--format", choices=sorted(formats.WRITERS), default="json")
    p.add_argument("--out", help="write the witness here instead of standard output")
    p.add_argument("--oracle-max-dim", type=int, default=None)

    p = sub.add_parser("verify", help="check a matching file against a profile")
    add_profile_args(p)
    p.add_argument("--input", required=True, help="matching file (JSON or edge list), '-' for stdin")
    p.add_argument("--perfect", action="store_true", help="also require a perfect matching")

    p = sub.add_parser("decide", help="admissibility verdict")
    add_profile_args(p)
    p.add_argument("--oracle-max-dim", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="print the witness after the verdict")
    p.add_argument("--format", choices=sorted(formats.WRITERS), default="json")

    p = sub.add_parser("count", help="exact number of matchings with a profile")
    add_profile_args(p)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--max-dim", type=int, default=5)

    p = sub.add_parser("explore", help="exhaustive small-dimension searches")
    p.add_argument("family", choices=["hamilton", "faces", "middle", "perm", "tuples"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="search node limit")
    p.add_argument("--max-dim", type=int, default=None, help="raise the family's dimension cap")
    p.add_argument("--sum-bound", type=int, default=None, help="tuples: largest profile sum (default 2^(n-1))")
    p.add_argument("--jobs", type=int, default=1, help="tuples: worker processes")
    p.add_argument("--format", choices=["json"], default="json")

    sub.add_parser("selftest", help="re-verify base cases and small oracle cross-checks")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_construct(args) -> int:
    x = _profile(args.profile, args.n)
    d = decide(x, args.n, oracle_max_dim=args.oracle_max_dim)
    if d.verdict is Verdict.ADMISSIBLE:
        _emit(formats.WRITERS[args.format](d.witness), args.out)
        return EXIT_OK
    print(str(d))
    return EXIT_NOT_ADMISSIBLE if d.verdict is Verdict.NOT_ADMISSIBLE else EXIT_UNKNOWN


def cmd_decide(args) -> int:
    x = _profile(args.profile, args.n)
    d = decide(x, args.n, oracle_max_dim=args.oracle_max_dim)
    print(str(d))
    if d.verdict is Verdict.ADMISSIBLE:
        if args.witness:
            sys.stdout.write(formats.WRITERS[args.format](d.witness))
        return EXIT_OK
    return EXIT_NOT_ADMISSIBLE if d.verdict is Verdict.NOT_ADMISSIBLE else EXIT_UNKNOWN


def cmd_verify(args) -> int:
    x = _profile(args.profile, args.n)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    try:
        m = formats.load(text, args.n)
    except ValueError as exc:
        print(f"reject: parse: {exc}", file=sys.stderr)
        return EXIT_REJECT
    if m.n != args.n:
        print(f"reject: dimension: file is for Q^{m.n}, expected Q^{args.n}", file=sys.stderr)
        return EXIT_REJECT
    result = verify(m, x, require_perfect=args.perfect)
    if not result:
        print(str(result), file=sys.stderr)
        return EXIT_REJECT
    print("accept")
    return EXIT_OK


def cmd_count(args) -> int:
    x = _profile(args.profile, args.n)
    budget = SearchBudget(max_dimension=args.max_dim, node_limit=args.node_limit)
    if args.n > budget.max_dimension:
        raise UsageError(f"--n {args.n} exceeds --max-dim {args.max_dim}")
    res = count_with_profile(args.n, x, budget)
    if res.status is Status.BUDGET_EXCEEDED:
        print("BudgetExceeded")
        return EXIT_UNKNOWN
    print(res.count)
    return EXIT_OK


def _probe(n: int, key: tuple[int, ...], budget: SearchBudget) -> tuple[tuple[int, ...], str]:
    return key, exists_with_profile(n, key, budget).status.value


def _explore_tuples(args, budget: SearchBudget) -> dict:
    n = args.n
    bound = (1 << (n - 1)) if args.sum_bound is None else args.sum_bound
    tuples = list(bounded_tuples(n, bound))
    keys = sorted({tuple(sorted(x)) for x in tuples})
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = dict(pool.map(_probe, [n] * len(keys), keys, [budget] * len(keys)))
    else:
        results = dict(_probe(n, k, budget) for k in keys)
    if any(v == Status.BUDGET_EXCEEDED.value for v in results.values()):
        raise SearchBudgetExceeded("budget exhausted while enumerating tuples")
    admissible = [x for x in tuples if results[tuple(sorted(x))] == Status.FOUND.value]
    missing = [x for x in tuples if results[tuple(sorted(x))] != Status.FOUND.value]
    return {
        "family": "tuples",
        "n": n,
        "sum_bound": bound,
        "profiles": [list(x) for x in sorted(admissible)],
        "not_admissible": [list(x) for x in sorted(missing)],
    }


def cmd_explore(args) -> int:
    defaults = {"hamilton": 4, "faces": 4, "middle": 2, "perm": 3, "tuples": 5}
    max_dim = args.max_dim if args.max_dim is not None else defaults[args.family]
    budget = SearchBudget(max_dimension=max_dim, node_limit=args.budget)
    if args.n > max_dim:
        raise UsageError(f"explore {args.family} is capped at n={max_dim}; pass --max-dim to override")
    n = args.n
    if args.family == "hamilton":
        r = hamilton_profiles(n, budget)
        out = {
            "family": "hamilton", "n": n, "cycles": r.cycles,
            "profiles": [list(p) for p in r.profiles],
            "predicted": [list(p) for p in r.predicted],
            "missing": [list(p) for p in r.missing],
            "unexpected": [list(p) for p in r.unexpected],
            "agrees": r.agrees,
        }
    elif args.family == "faces":
        r = face_decomposition_profiles(n, budget)
        out = {
            "family": "faces", "n": n, "decompositions": r.decompositions,
            "profiles": [pw.to_json() for pw in r.weightings],
            "violations": [face_weighting_obstructions(pw, n) for pw in r.weightings if face_weighting_obstructions(pw, n)],
        }
        if n == 4:
            candidate = PairWeighting.from_counts(4, {(0, 1): 2, (2, 3): 2})
            out["candidate_12_34"] = {
                "weighting": candidate.to_json(),
                "realized": candidate in r.weightings,
                "obstructions": face_weighting_obstructions(candidate, n),
            }
    elif args.family == "middle":
        r = middle_layer_profiles(n, budget)
        out = {
            "family": "middle", "n": n, "matchings": r.matchings,
            "profiles": [list(p) for p in r.profiles],
            "feasible": [list(p) for p in r.feasible],
            "violations": {",".join(map(str, p)): middle_layer_violations(p, n) for p in r.profiles if middle_layer_violations(p, n)},
        }
    elif args.family == "perm":
        r = permutahedron_profiles(n, budget)
        out = {
            "family": "perm", "n": n, "matchings": r.matchings,
            "profiles": [dict(pw.to_json(), count=c) for pw, c in zip(r.weightings, r.multiplicity)],
        }
        if n == 3:
            found = sorted(pw.vector() for pw in r.weightings)
            out["polytope"] = {
                "violations": [v for pw in r.weightings for v in perm3_violations(pw)],
                "equals_even_points": found == perm3_polytope_points(strict=False),
                "equals_strict_interior_even_points": found == perm3_polytope_points(strict=True),
            }
    else:
        out = _explore_tuples(args, budget)
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_selftest(args) -> int:
    ok = True
    for name, passed, detail in run_selftest():
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}" + (f" ({detail})" if detail and not passed else ""))
    return EXIT_OK if ok else EXIT_REJECT


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "decide": cmd_decide,
    "count": cmd_count,
    "explore": cmd_explore,
    "selftest": cmd_selftest,
}


def _configure_logging() -> None:
    level = os.environ.get("CUBE_PROFILES_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cube-profiles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cube-profiles: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SearchBudgetExceeded as exc:
        print(f"BudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as exc:
        print(f"cube-profiles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
