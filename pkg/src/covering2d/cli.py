"""Command-line entry point: ``covering2d <subcommand> ...``.

Exit status: 0 success, 1 domain error, 2 budget exhausted, 64 usage error.
Results go to stdout (TSV by default, ``--json`` for full certificates);
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .census import (
    DEFAULT_SIEVE_BOUND,
    bounds_explicit,
    bounds_p100,
    bounds_pi,
    bounds_pi100,
    bucket_counts,
    census,
)
from .covering import (
    CoveringSystem,
    is_covering,
    is_covering_restricted,
    is_minimal,
    lcm_modulus,
    uncovered_cells,
)
from .errors import BudgetExceeded, DomainError, InsufficientPrimes, NotCovering
from .heuristic import kappa, predictions, render_decimal
from .lattice import ReducedTriple, Triple, member, reduce
from .numtheory import DEFAULT_SEED
from .obstruction import SearchConfig, classify, find_mixed_obstruction, find_obstruction, verify_obstruction
from .orders import construct_pair, element_of_order, realize_triple, triple_for_prime
from .tables import TABLES

EXIT_DOMAIN = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.replace(";", ",").split(",") if x.strip()]
    except ValueError:
        out = []
    if not out:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    return out


def _literal(parse):
    """argparse type that turns a parse failure into a usage error."""
    def convert(text: str):
        try:
            return parse(text)
        except (DomainError, KeyError, TypeError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    convert.__name__ = parse.__qualname__
    return convert


def _odd_coords(text: str) -> tuple[str, ...]:
    coords = tuple(x.strip() for x in text.split(",") if x.strip())
    if not coords or any(c not in ("a", "b") for c in coords):
        raise argparse.ArgumentTypeError(f"--odd takes 'a', 'b' or 'a,b', got {text!r}")
    return coords


def _emit(args, tsv: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(tsv)


def cmd_reduce(args):
    t = reduce(args.triple)
    _emit(args, str(t), {"input": args.triple.to_json(), "reduced": t.to_json(), "short": t.short})


def cmd_member(args):
    ok = member(args.triple, args.m, args.n)
    _emit(args, str(ok).lower(), {"member": ok})


def cmd_verify_cover(args):
    cs = args.system
    if args.restrict:
        k, l = args.restrict
        ok = is_covering_restricted(cs, k, l)
        _emit(args, str(ok).lower(), {"system": cs.to_json(), "restrict": [k, l], "covering": ok})
        return
    ok = is_covering(cs)
    minimal = is_minimal(cs) if ok else None
    holes = uncovered_cells(cs, args.cap)
    tsv = [str(ok).lower()]
    if ok:
        tsv.append(f"minimal\t{str(minimal).lower()}")
    tsv.extend(f"uncovered\t{m}\t{n}" for m, n in holes)
    _emit(args, "\n".join(tsv), {"system": cs.to_json(), "period": lcm_modulus(cs), "covering": ok,
                                 "minimal": minimal, "uncovered": [list(c) for c in holes]})


def cmd_triple_of_prime(args):
    d = triple_for_prime(args.p, args.a, args.b)
    _emit(args, f"{d.triple}\t{d.ord_a}\t{d.ord_b}", d.to_json())


def cmd_realize(args):
    t = args.triple
    g = args.g if args.g is not None else element_of_order(args.p, t.r)
    rt = realize_triple(t, args.p, g)
    _emit(args, f"{rt.a_res}\t{rt.b_res}\t{rt.g}", rt.to_json())


def cmd_construct_pair(args):
    cs = args.system
    pc = construct_pair(cs, args.primes, args.generators, args.odd)
    _emit(args, f"{pc.a}\t{pc.b}\t{pc.Q}", pc.to_json())


def cmd_classify(args):
    c = classify(args.a, args.b)
    tsv = f"{c.a}\t{c.b}\tN={str(c.in_N).lower()}\tN+={str(c.in_Nplus).lower()}"
    _emit(args, tsv, c.to_json())


def _config(args) -> SearchConfig:
    return SearchConfig(args.prime_bound, args.modulus_bound, args.max_primes, args.period_bound)


def cmd_find_obstruction(args):
    finder = find_mixed_obstruction if args.mixed else find_obstruction
    ob = finder(args.a, args.b, _config(args))
    if ob is None:
        _emit(args, "none", None)
        return
    lines = [f"{ob.kind}\tQ={ob.Q}"]
    lines.extend(f"{op.p}\t{op.triple}" for op in ob.primes)
    _emit(args, "\n".join(lines), ob.to_json())


def cmd_verify_obstruction(args):
    res = verify_obstruction(args.a, args.b, args.primes, tuple(args.restrict) if args.restrict else None)
    lines = [str(res.ok).lower()]
    if res.witness:
        lines.append(f"witness\t{res.witness[0]}\t{res.witness[1]}")
    else:
        lines.extend(f"{m}\t{n}\t{p}" for (m, n), p in sorted(res.certificate.items()))
    _emit(args, "\n".join(lines), res.to_json())


def cmd_kappa(args):
    est = kappa(args.a, args.b, args.k, seed=args.seed)
    payload = est.to_json()
    payload["seed"] = args.seed
    _emit(args, est.decimal, payload)


def cmd_predict(args):
    rep = predictions(args.a, args.b, args.k, seed=args.seed)
    tsv = (f"G1\t{rep.G1:.3f}\t{rep.G1_int}\nG2\t{rep.G2:.3f}\t{rep.G2_int}\n"
           f"c_ab\t{rep.c_ab:.6f}\nkappa\t{rep.kappa_k.decimal}")
    payload = rep.to_json()
    payload["seed"] = args.seed
    _emit(args, tsv, payload)


def cmd_census(args):
    a, b = args.a, args.b
    if args.m_max is not None or args.n_max is not None:
        if args.m_max is None or args.n_max is None:
            raise UsageError("--m-max and --n-max go together")
        bounds = bounds_explicit(args.m_max, args.n_max)
    elif args.mode == "pi":
        if args.buckets:
            report = bucket_counts(a, b, args.buckets, workers=args.workers,
                                              sieve_bound=args.sieve_bound)
            return _print_census(args, report)
        bounds = bounds_pi(a, b, args.y)
    elif args.mode == "pi100":
        bounds = bounds_pi100(a, b)
    else:
        kap = Fraction(args.kappa) if args.kappa else kappa(a, b, args.kappa_k, seed=args.seed).kappa
        bounds = bounds_p100(a, b, kap)
    report = census(a, b, bounds, workers=args.workers, sieve_bound=args.sieve_bound)
    _print_census(args, report)


def _print_census(args, report):
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
        return
    for h in report.hits:
        print(f"{h.m}\t{h.n}\t{'+' if h.sign > 0 else '-'}\t{h.bits}")
    summary = {k: v for k, v in report.to_json().items() if k != "hits"}
    print("# " + json.dumps(summary, sort_keys=True))


def cmd_tables(args):
    fn = TABLES[args.which]
    kwargs = {}
    if args.which in (1, 3, 4, 5, 6):
        kwargs["workers"] = args.workers
    if args.which in (1, 3) and args.kmax:
        kwargs["kmax"] = args.kmax
    sys.stdout.write(fn(**kwargs))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of TSV")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Pollard-rho seed")

    parser = _Parser(prog="covering2d", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", parents=[common])
    p.add_argument("triple", type=_literal(Triple.parse))
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("member", parents=[common])
    p.add_argument("triple", type=_literal(Triple.parse))
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("verify-cover", parents=[common])
    p.add_argument("system", type=_literal(CoveringSystem.parse), help='"1,2,2;2,1,2;1,1,2" or a JSON array of triples')
    p.add_argument("--restrict", type=int, nargs=2, metavar=("K", "L"))
    p.add_argument("--cap", type=int, default=10)
    p.set_defaults(func=cmd_verify_cover)

    p = sub.add_parser("triple-of-prime", parents=[common])
    p.add_argument("p", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_triple_of_prime)

    p = sub.add_parser("realize", parents=[common])
    p.add_argument("triple", type=_literal(ReducedTriple.parse))
    p.add_argument("p", type=int)
    p.add_argument("--g", type=int)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("construct-pair", parents=[common])
    p.add_argument("system", type=_literal(CoveringSystem.parse))
    p.add_argument("primes", type=_int_list)
    p.add_argument("--generators", type=_int_list)
    p.add_argument("--odd", type=_odd_coords, default=(), help="coordinates to make odd, e.g. 'b'")
    p.set_defaults(func=cmd_construct_pair)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_classify)

    defaults = SearchConfig()
    for name, func in (("find-obstruction", cmd_find_obstruction),):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        p.add_argument("--prime-bound", type=int, default=defaults.prime_bound)
        p.add_argument("--modulus-bound", type=int, default=defaults.modulus_bound)
        p.add_argument("--max-primes", type=int, default=defaults.max_primes)
        p.add_argument("--period-bound", type=int, default=defaults.period_bound)
        p.add_argument("--mixed", action="store_true", help="cover only gcd(m,l)=gcd(n,k)=1")
        p.set_defaults(func=func)

    p = sub.add_parser("verify-obstruction", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("primes", type=_int_list)
    p.add_argument("--restrict", type=int, nargs=2, metavar=("K", "L"))
    p.set_defaults(func=cmd_verify_obstruction)

    p = sub.add_parser("kappa", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--k", type=int, default=7)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("predict", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--k", type=int, default=7)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("census", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--mode", choices=["pi", "pi100", "p100"], default="pi")
    p.add_argument("--y", type=int, default=100)
    p.add_argument("--buckets", type=int, help="with --mode pi: report N_1..N_K for width-100 buckets")
    p.add_argument("--kappa-k", type=int, default=7)
    p.add_argument("--kappa", help="kappa as a fraction or decimal, skips computing it")
    p.add_argument("--m-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--sieve-bound", type=int, default=DEFAULT_SIEVE_BOUND)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("tables", parents=[common])
    p.add_argument("--which", type=int, choices=sorted(TABLES), required=True)
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_tables)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, InsufficientPrimes, NotCovering) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def main() -> None:  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
