"""Command line front end.  Plain text by default, ``--json`` for stable
machine-readable output; exit code 0 on pass, 1 on fail, 2 on usage or budget
errors."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .adjacent import adjacent_ideal, multidim_ideal
from .algo import NotInVariety, matrix_to_sequence
from .groebner import BudgetExceeded, Ideal, check_groebner_basis, initial_ideal
from .linalg import NumericMatrix
from .monomial import monomial_codim, monomial_degree
from .multidim import (count_22m, enumerate_22m_primes, multidim_symmetry_orbit,
                       parse_index_set)
from .partitions import (enumerate_prime_partitions, grid_symmetry_classes,
                         partition_degree, partition_generators)
from .poset import GammaPoset, phi_sample
from .sequences import (InvalidSequence, count_prime_sequences, enumerate_prime_sequences,
                        parse_gamma, sequence_to_ideal)
from .verify import (run_verify_decomposition, run_verify_gb, run_verify_incomparable,
                     run_verify_saturation)


class UsageError(Exception):
    pass


def _shape(text):
    return tuple(int(x) for x in text.split(","))


def _emit(args, data, lines):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _plot_dir(args):
    d = Path(args.plot)
    d.mkdir(parents=True, exist_ok=True)
    return d


def _source_ideal(args) -> Ideal:
    """The ideal named by --ideal FILE, --gamma, --shape or -m/-n/-k."""
    if getattr(args, "ideal", None):
        I = Ideal.from_json(json.loads(Path(args.ideal).read_text()))
        return I.with_field(_field(args.char)) if args.char != I.ring.char else I
    if getattr(args, "shape", None):
        return multidim_ideal(_shape(args.shape), args.char)
    if args.m is None or args.n is None:
        raise UsageError("give --ideal FILE, --shape, or -m and -n")
    if getattr(args, "gamma", None):
        return sequence_to_ideal(parse_gamma(args.gamma, args.m, args.n).validate(), args.char)
    return adjacent_ideal(args.m, args.n, args.k or args.m, args.char)


def _field(char):
    from .poly import field_for
    return field_for(char)


# ---------------------------------------------------------------- commands

def cmd_ideal(args):
    if args.family == "adjacent":
        if args.m is None or args.n is None:
            raise UsageError("ideal adjacent needs -m and -n")
        I = adjacent_ideal(args.m, args.n, args.k or args.m, args.char)
    elif args.family == "pgamma":
        if not args.gamma or args.m is None or args.n is None:
            raise UsageError("ideal pgamma needs -m, -n and --gamma")
        I = sequence_to_ideal(parse_gamma(args.gamma, args.m, args.n), args.char)
    else:
        if not args.shape:
            raise UsageError("ideal multidim needs --shape")
        I = multidim_ideal(_shape(args.shape), args.char)
    if args.cas_export:
        sys.stdout.write(I.cas_lines())
        return 0
    _emit(args, I.to_json(), [str(g) for g in I.generators])
    return 0


def cmd_partitions(args):
    m, n = args.rows, args.cols
    parts = enumerate_prime_partitions(m, n)
    index = {p.S: k for k, p in enumerate(parts)}
    entries = []
    for p in parts:
        e = p.to_json()
        e["degree"] = partition_degree(p)
        if args.ideals:
            e["generators"] = [str(g) for g in partition_generators(p)]
        entries.append(e)
    data = {"rows": m, "cols": n, "total": len(parts), "partitions": entries}
    lines = []
    if args.classes:
        orbits = grid_symmetry_classes(parts)
        data["classes"] = [{"size": len(o), "members": [index[p.S] for p in o],
                            "representative": index[o[0].S]} for o in orbits]
        lines.append(f"{'class':>5} {'size':>4} {'degree':>6}  S")
        for k, o in enumerate(orbits):
            rep = o[0]
            lines.append(f"{k + 1:>5} {len(o):>4} {partition_degree(rep):>6}  "
                         + " ".join(f"x{i}{j}" for i, j in rep.sorted_S()))
        lines.append(f"total={len(parts)} classes={len(orbits)}")
    else:
        lines.append(f"{'#':>4} {'degree':>6}  S")
        for k, p in enumerate(parts):
            lines.append(f"{k + 1:>4} {partition_degree(p):>6}  "
                         + " ".join(f"x{i}{j}" for i, j in p.sorted_S()))
        lines.append(f"total={len(parts)}")
    if args.plot:
        from .plots import plot_partition_classes
        orbits = grid_symmetry_classes(parts) if args.classes else [[p] for p in parts]
        path = plot_partition_classes(orbits, _plot_dir(args) / f"partitions_{m}x{n}.png",
                                      [partition_degree(o[0]) for o in orbits])
        data["figure"] = str(path)
        lines.append(f"figure={path}")
    _emit(args, data, lines)
    return 0


def cmd_sequences(args):
    if args.action == "count":
        c = count_prime_sequences(args.m, args.n)
        _emit(args, {"m": args.m, "n": args.n, "count": c}, [str(c)])
        return 0
    seqs = enumerate_prime_sequences(args.m, args.n)
    data = {"m": args.m, "n": args.n, "total": len(seqs),
            "sequences": [g.as_pairs() for g in seqs]}
    lines = [f"G{k + 1} = {g}" for k, g in enumerate(seqs)] + [f"total={len(seqs)}"]
    if args.plot:
        from .plots import plot_sequences
        path = plot_sequences(seqs, _plot_dir(args) / f"sequences_{args.m}x{args.n}.png")
        data["figure"] = str(path)
        lines.append(f"figure={path}")
    _emit(args, data, lines)
    return 0


def cmd_poset(args):
    poset = GammaPoset(parse_gamma(args.gamma, args.m, args.n))
    data = poset.to_json()
    lines = []
    for r, row in enumerate(poset.rows):
        cells = []
        for j in row:
            nd = poset.nodes[j]
            extra = f" l={nd.ell}" if nd.ell is not None else ""
            cells.append(f"{nd.interval}(D={nd.D} k={nd.k}{extra})")
        lines.append(f"row {r + 1}: " + "  ".join(cells))
    lines.append("block sizes: " + ",".join(map(str, poset.block_sizes())))
    lines.append("affine sizes: " + ",".join(map(str, poset.affine_sizes())))
    _emit(args, data, lines)
    return 0


def cmd_phi(args):
    gamma = parse_gamma(args.gamma, args.m, args.n)
    X, pt, poset = phi_sample(gamma, args.seed)
    data = {"gamma": gamma.as_pairs(), "seed": args.seed, "matrix": X.to_json(),
            "point": pt.to_json(poset)}
    lines = [" ".join(f"{x:>6}" for x in row) for row in X.to_json()]
    _emit(args, data, lines)
    return 0


def cmd_algo(args):
    X = NumericMatrix.from_json(json.loads(Path(args.matrix).read_text()))
    try:
        gamma = matrix_to_sequence(X, promote_last_column=not args.literal)
    except NotInVariety as exc:
        _emit(args, {"error": str(exc)}, [f"error: {exc}"])
        return 1
    except InvalidSequence as exc:
        _emit(args, {"error": str(exc)}, [f"error: {exc}"])
        return 1
    _emit(args, {"m": X.m, "n": X.n, "gamma": gamma.as_pairs()}, [str(gamma)])
    return 0


def cmd_gb(args):
    I = _source_ideal(args)
    chk = check_groebner_basis(I.generators)
    data = {"generators": len(I.generators), "is_groebner_basis": chk.ok,
            "pairs_checked": chk.pairs_checked, "char": I.ring.char}
    if not chk:
        i, j = chk.pair
        data["witness"] = {"pair": [str(I.generators[i]), str(I.generators[j])],
                           "remainder": str(chk.remainder)}
    lines = [f"is_groebner_basis={chk.ok} pairs_checked={chk.pairs_checked}"]
    if not chk:
        lines += [f"  pair: {data['witness']['pair']}",
                  f"  remainder: {data['witness']['remainder']}"]
    if args.compute:
        gb = I.groebner()
        data["reduced_basis"] = [str(g) for g in gb]
        lines += [str(g) for g in gb]
    _emit(args, data, lines)
    return 0 if chk.ok else 1


def cmd_verify(args):
    if args.what == "saturation":
        if not args.shape:
            raise UsageError("verify saturation needs --shape")
        rep = run_verify_saturation(_shape(args.shape), args.char, args.expect)
    else:
        if args.m is None or args.n is None:
            raise UsageError(f"verify {args.what} needs -m and -n")
        fn = {"decomposition": run_verify_decomposition, "incomparable": run_verify_incomparable,
              "gb": run_verify_gb}[args.what]
        rep = fn(args.m, args.n, args.char)
    _emit(args, rep.to_json(), rep.lines())
    return rep.exit_code


def cmd_invariants(args):
    I = _source_ideal(args)
    M = initial_ideal(I)
    want_codim = args.codim or not args.degree
    want_degree = args.degree or not args.codim
    data = {"squarefree": M.is_squarefree(), "initial_generators": len(M)}
    if want_codim:
        data["codim"] = monomial_codim(M)
    if want_degree:
        data["degree"] = monomial_degree(M)
    _emit(args, data, [f"{k}={data[k]}" for k in sorted(data)])
    return 0


def cmd_multidim(args):
    if args.action == "count":
        c = count_22m(args.d, args.m)
        _emit(args, {"d": args.d, "m": args.m, "count": c}, [str(c)])
        return 0
    if not args.shape:
        raise UsageError(f"multidim {args.action} needs --shape")
    shape = _shape(args.shape)
    if args.action == "orbits":
        if not args.set and args.set != "":
            raise UsageError("multidim orbits needs --set")
        S = parse_index_set(args.set)
        size = multidim_symmetry_orbit(S, shape)
        _emit(args, {"shape": list(shape), "set": [list(v) for v in S], "orbit_size": size},
              [str(size)])
        return 0
    if any(s != 2 for s in shape[:-1]):
        raise UsageError("multidim primes handles shapes (2,...,2,m)")
    specs = enumerate_22m_primes(len(shape), shape[-1])
    data = {"shape": list(shape), "total": len(specs), "primes": [s.to_json() for s in specs]}
    lines = ["{" + ", ".join("x" + "".join(map(str, v)) for v in sp["S"]) + "}"
             for sp in data["primes"]] + [f"total={len(specs)}"]
    _emit(args, data, lines)
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON (sorted keys)")
    common.add_argument("--char", type=int, default=0, help="0 for QQ or a prime p")

    def mn(p, required=False):
        p.add_argument("-m", type=int, required=required)
        p.add_argument("-n", type=int, required=required)

    parser = argparse.ArgumentParser(prog="minorprime", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common], help="print generators of an ideal")
    p.add_argument("family", choices=["adjacent", "pgamma", "multidim"])
    mn(p)
    p.add_argument("-k", type=int, help="minor size (default m)")
    p.add_argument("--gamma")
    p.add_argument("--shape")
    p.add_argument("--cas-export", action="store_true", help="one polynomial per line")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("partitions", parents=[common], help="prime partitions of a grid")
    p.add_argument("action", choices=["enumerate"])
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--classes", action="store_true")
    p.add_argument("--ideals", action="store_true")
    p.add_argument("--plot", metavar="DIR")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("sequences", parents=[common], help="prime sequences")
    p.add_argument("action", choices=["enumerate", "count"])
    mn(p, True)
    p.add_argument("--plot", metavar="DIR")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("poset", parents=[common], help="interval poset of a sequence")
    mn(p, True)
    p.add_argument("--gamma", required=True)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("phi", parents=[common], help="sample a matrix from the image of phi")
    p.add_argument("action", choices=["sample"])
    mn(p, True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("algo", parents=[common], help="matrix to prime sequence")
    p.add_argument("action", choices=["gamma-from-matrix"])
    p.add_argument("--matrix", required=True, help="JSON array of rational strings")
    p.add_argument("--literal", action="store_true",
                   help="do not promote an interval ending at column n")
    p.set_defaults(func=cmd_algo)

    for name, func, helptext in [("gb", cmd_gb, "Groebner basis check"),
                                 ("invariants", cmd_invariants, "codim and degree")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name == "gb":
            p.add_argument("action", choices=["check"])
            p.add_argument("--compute", action="store_true", help="also print the reduced basis")
        else:
            p.add_argument("--degree", action="store_true")
            p.add_argument("--codim", action="store_true")
        mn(p)
        p.add_argument("-k", type=int, help="minor size (default m)")
        p.add_argument("--gamma")
        p.add_argument("--shape")
        p.add_argument("--ideal", metavar="FILE")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="verification reports")
    p.add_argument("what", choices=["decomposition", "incomparable", "saturation", "gb"])
    mn(p)
    p.add_argument("--shape")
    p.add_argument("--expect", action="append", help="extra generator of the saturation")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("multidim", parents=[common], help="2x...x2xm primes and orbits")
    p.add_argument("action", choices=["primes", "count", "orbits"])
    p.add_argument("-d", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--shape")
    p.add_argument("--set")
    p.set_defaults(func=cmd_multidim)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "multidim" and args.action == "count" and (args.d is None or args.m is None):
        parser.error("multidim count needs -d and -m")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidSequence, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
