"""Command-line interface.

Exit codes: 0 for a definite answer, 2 when a search budget ran out
(undecided), 1 for usage, I/O, or parse errors.  All output is
deterministic given the inputs and flags; ``--machine`` switches to
line-oriented ``key=value`` output with the stable key names documented in
the README.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families, interval_orders, obstructions, posets
from .complexes import (
    CapabilityError,
    SimplicialComplex,
    format_complex,
    parse_complex,
    parse_faces,
)
from .homology import reduced_homology
from .obstructions import EnumerationTask
from .posets import BoundedPoset, parse_poset
from .shelling import (
    CERTIFICATE,
    NONE,
    SearchBudget,
    ShellingCertificate,
    check_shelling,
    find_shelling,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; reserve 2 for "undecided"
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _budget_from(args) -> SearchBudget:
    kwargs = {}
    if getattr(args, "budget_facets", None) is not None:
        kwargs["max_facets_exact"] = args.budget_facets
    if getattr(args, "budget_states", None) is not None:
        kwargs["max_states"] = args.budget_states
    if getattr(args, "budget_time", None) is not None:
        kwargs["time_limit"] = args.budget_time
    return SearchBudget(**kwargs)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-facets", type=int, help="max facet count for exact search")
    p.add_argument("--budget-states", type=int, help="max search states before giving up")
    p.add_argument("--budget-time", type=float, help="search time limit in seconds")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="input file (default: standard input)")
    p.add_argument("--file", dest="file_opt", help="input file (same as the positional)")


def _read_input(args) -> str:
    path = getattr(args, "file_opt", None) or getattr(args, "file", None)
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_complex(args) -> SimplicialComplex:
    return parse_complex(_read_input(args))


def _face_str(face) -> str:
    return " ".join(map(str, face)) if face else "-"


def _print_certificate(cert: ShellingCertificate) -> None:
    for face in cert.order:
        print(_face_str(face))
    for k, step in enumerate(cert.step_intersections, start=2):
        print(f"# step {k} intersection: " + " | ".join(_face_str(f) for f in step))


# -- subcommands -----------------------------------------------------------------


def _cmd_gen(args) -> int:
    name = args.family
    if name == "m-cycle":
        K = families.m_cycle(_one_int(args))
    elif name == "disjoint-edges":
        K = families.disjoint_edges()
    elif name == "bridged-triangles":
        K = families.bridged_triangles()
    elif name == "skeleton-two-cells":
        K = families.skeleton_with_two_cells(_one_int(args))
    elif name == "skeleton-one-cell":
        K = families.skeleton_with_one_cell(_one_int(args))
    elif name == "purity-obstruction":
        K = families.purity_obstruction(_one_int(args))
    elif name == "simplex-boundary":
        K = families.boundary_of_simplex(_one_int(args))
    elif name == "projective-plane":
        K = families.projective_plane()
    elif name == "random":
        if len(args.params) != 3:
            raise _UsageError("random needs: n d density")
        n, d = int(args.params[0]), int(args.params[1])
        K = families.random_complex(n, d, float(args.params[2]), args.seed)
    else:
        raise _UsageError(f"unknown family {name!r}")
    sys.stdout.write(format_complex(K))
    return EXIT_OK


def _one_int(args) -> int:
    if len(args.params) != 1:
        raise _UsageError(f"family {args.family!r} needs exactly one integer parameter")
    return int(args.params[0])


def _cmd_shell_check(args) -> int:
    K = _read_complex(args)
    if args.order == "lex":
        order = K.facets  # facets are stored in lexicographic word order
    else:
        order = parse_faces(Path(args.order_file).read_text(encoding="utf-8"))
    result = check_shelling(K, order)
    if args.machine:
        print(f"is_shelling={'true' if result.ok else 'false'}")
        if not result.ok:
            print(f"failure_step={result.failure_step}")
            print(
                "intersection="
                + ";".join(_face_str(f) for f in result.failure_intersection)
            )
    elif result.ok:
        print(f"valid shelling ({len(order)} facets)")
    else:
        print(f"not a shelling: fails at step {result.failure_step}")
        print(
            "intersection facets: "
            + " | ".join(_face_str(f) for f in result.failure_intersection)
        )
    return EXIT_OK


def _cmd_shell_find(args) -> int:
    K = _read_complex(args)
    result = find_shelling(K, _budget_from(args), decreasing_dim=args.decreasing_dim)
    if args.machine:
        print(f"status={result.status}")
        if result.status == CERTIFICATE:
            print("order=" + ";".join(_face_str(f) for f in result.certificate.order))
    else:
        if result.status == CERTIFICATE:
            print("shelling found:")
            _print_certificate(result.certificate)
        elif result.status == NONE:
            print("not shellable (search exhausted)")
        else:
            print("undecided (budget exhausted)")
    return EXIT_UNDECIDED if result.status == "undecided" else EXIT_OK


def _cmd_homology(args) -> int:
    K = _read_complex(args)
    profile = reduced_homology(K)
    for d in sorted(profile.betti):
        if args.machine:
            print(f"beta[{d}]={profile.betti[d]}")
        else:
            print(f"beta[{d}] = {profile.betti[d]}")
    for d in sorted(profile.torsion):
        factors = profile.torsion[d]
        if args.machine:
            print(f"torsion[{d}]=" + ",".join(map(str, factors)))
        else:
            print(f"torsion[{d}] = (" + ",".join(map(str, factors)) + ")")
    return EXIT_OK


def _verdict_word(verdict: bool | None) -> str:
    if verdict is None:
        return "undecided"
    return "true" if verdict else "false"


def _cmd_obstruction_test(args) -> int:
    K = _read_complex(args)
    report = obstructions.is_obstruction(K, _budget_from(args))
    if args.machine:
        print(f"obstruction={_verdict_word(report.verdict)}")
        if report.witness_subset is not None:
            print("witness=" + " ".join(map(str, report.witness_subset)))
    else:
        print(f"obstruction: {_verdict_word(report.verdict)}")
        if report.certificate is not None:
            print("complex is shellable; certificate:")
            _print_certificate(report.certificate)
        elif report.witness_subset is not None:
            print(
                "nonshellable induced subcomplex on vertices "
                + " ".join(map(str, report.witness_subset))
            )
    return EXIT_UNDECIDED if report.verdict is None else EXIT_OK


def _cmd_purity_test(args) -> int:
    K = _read_complex(args)
    report = obstructions.is_purity_obstruction(K)
    if args.machine:
        print(f"purity_obstruction={_verdict_word(report.verdict)}")
        if report.witness_subset is not None:
            print("witness=" + " ".join(map(str, report.witness_subset)))
    else:
        print(f"purity obstruction: {_verdict_word(report.verdict)}")
        if report.witness_subset is not None:
            print(
                "nonpure induced subcomplex on vertices "
                + " ".join(map(str, report.witness_subset))
            )
    return EXIT_OK


def _cmd_obstruction_witness(args) -> int:
    K = _read_complex(args)
    subset = obstructions.nonshellable_witness(K, _budget_from(args))
    if args.machine:
        print("witness=" + " ".join(map(str, subset)))
    else:
        print("nonshellable induced subcomplex on vertices " + " ".join(map(str, subset)))
    return EXIT_OK


def _run_enumeration(args, purity: bool) -> int:
    task = EnumerationTask(
        dimension=args.dim,
        vertex_count=args.vertices,
        budget=_budget_from(args),
        mode=args.mode,
        seed=args.seed,
        samples=args.samples,
    )
    if purity:
        result = obstructions.enumerate_purity_obstructions(task)
    else:
        result = obstructions.enumerate_obstructions(task)
    provenance = "exhaustive" if result.mode == "exhaustive" else "sampled"
    index_lines = []
    for key, K in result.classes:
        flag = "true" if K.is_flag() else "false"
        index_lines.append(
            f"class={key.digest()} vertices={len(K.vertices)} "
            f"facets={len(K.facets)} flag={flag} provenance={provenance}"
        )
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for key, K in result.classes:
            (out / f"{key.digest()}.cx").write_text(format_complex(K), encoding="utf-8")
        (out / "index.txt").write_text(
            "".join(line + "\n" for line in index_lines)
            + f"scanned={result.scanned}\ncomplete={'true' if result.complete else 'false'}\n",
            encoding="utf-8",
        )
    for line in index_lines:
        print(line)
    print(f"classes={len(result.classes)}")
    print(f"scanned={result.scanned}")
    print(f"complete={'true' if result.complete else 'false'}")
    if result.mode == "exhaustive" and not result.complete:
        return EXIT_UNDECIDED
    return EXIT_OK


def _read_bounded_poset(args) -> BoundedPoset:
    p = parse_poset(_read_input(args))
    if not isinstance(p, BoundedPoset):
        raise _UsageError("poset file must declare bottom: and top: lines")
    return p


def _cmd_poset_check_interval(args) -> int:
    p = parse_poset(_read_input(args))
    poset = p.poset if isinstance(p, BoundedPoset) else p
    witness = poset.contains_two_plus_two()
    if args.machine:
        print(f"interval_order={'false' if witness else 'true'}")
        if witness:
            print("witness=" + ",".join(witness))
    else:
        if witness:
            w, x, y, z = witness
            print(f"not an interval order: induced disjoint chains {w} < {x} and {y} < {z}")
        else:
            print("interval order: yes")
    return EXIT_OK


def _cmd_poset_betti(args) -> int:
    P = _read_bounded_poset(args)
    betti = interval_orders.betti_interval_order(P)
    if not betti:
        if not args.machine:
            print("all reduced Betti numbers vanish")
        return EXIT_OK
    for i in sorted(betti):
        if args.machine:
            print(f"beta[{i}]={betti[i]}")
        else:
            print(f"beta[{i}] = {betti[i]}")
    return EXIT_OK


def _cmd_poset_falling(args) -> int:
    P = _read_bounded_poset(args)
    chains = interval_orders.falling_chains(P)
    for c in chains.chains:
        if args.machine:
            print("chain=" + ",".join(c))
        else:
            print(" < ".join(c))
    for length, count in sorted(chains.count_by_length().items()):
        if args.machine:
            print(f"falling[{length}]={count}")
        else:
            print(f"falling[{length}] = {count}")
    return EXIT_OK


def _cmd_poset_shelling(args) -> int:
    P = _read_bounded_poset(args)
    order = interval_orders.interval_order_shelling(P)
    interior = sorted(P.interior().elements)
    for i, e in enumerate(interior):
        print(f"# vertex {i} = {e}")
    if args.machine:
        print("order=" + ";".join(_face_str(f) for f in order))
        return EXIT_OK
    K = posets.order_complex(P.interior())
    if K.is_irrelevant:
        print("# order complex is the empty-face complex; empty shelling")
        return EXIT_OK
    result = check_shelling(K, order)
    _print_certificate(result.certificate)
    return EXIT_OK


def _cmd_poset_check_rao(args) -> int:
    P = _read_bounded_poset(args)
    ordering = tuple(args.order.split(","))
    ok = interval_orders.verify_recursive_atom_ordering(P, ordering)
    if args.machine:
        print(f"recursive_atom_ordering={'true' if ok else 'false'}")
    else:
        print(f"recursive atom ordering: {'valid' if ok else 'invalid'}")
    return EXIT_OK


# -- parser wiring ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shellob", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[], help="emit a named complex family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    shell = sub.add_parser("shell", help="shelling checks and search")
    shell_sub = shell.add_subparsers(dest="subcommand", required=True)
    p = shell_sub.add_parser("check")
    _add_input(p)
    p.add_argument("--order", default="lex", help="'lex' or use --order-file")
    p.add_argument("--order-file", help="file listing facets in the order to check")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_shell_check)
    p = shell_sub.add_parser("find")
    _add_input(p)
    _add_budget_flags(p)
    p.add_argument("--decreasing-dim", action="store_true")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_shell_find)

    p = sub.add_parser("homology", help="reduced integral homology")
    _add_input(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_homology)

    obst = sub.add_parser("obstruction", help="obstruction-to-shellability tools")
    obst_sub = obst.add_subparsers(dest="subcommand", required=True)
    p = obst_sub.add_parser("test")
    _add_input(p)
    _add_budget_flags(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_obstruction_test)
    p = obst_sub.add_parser("witness")
    _add_input(p)
    _add_budget_flags(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_obstruction_witness)
    p = obst_sub.add_parser("enumerate")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--out-dir")
    _add_budget_flags(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=lambda a: _run_enumeration(a, purity=False))

    pur = sub.add_parser("purity", help="obstruction-to-purity tools")
    pur_sub = pur.add_subparsers(dest="subcommand", required=True)
    p = pur_sub.add_parser("test")
    _add_input(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_purity_test)
    p = pur_sub.add_parser("enumerate")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--out-dir")
    _add_budget_flags(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=lambda a: _run_enumeration(a, purity=True))

    poset = sub.add_parser("poset", help="poset and interval-order tools")
    poset_sub = poset.add_subparsers(dest="subcommand", required=True)
    for name, fn in [
        ("check-interval", _cmd_poset_check_interval),
        ("betti", _cmd_poset_betti),
        ("falling-chains", _cmd_poset_falling),
        ("shelling", _cmd_poset_shelling),
    ]:
        p = poset_sub.add_parser(name)
        _add_input(p)
        p.add_argument("--machine", action="store_true")
        p.set_defaults(func=fn)
    p = poset_sub.add_parser("check-rao")
    _add_input(p)
    p.add_argument("--order", required=True, help="comma-separated atom labels")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_poset_check_rao)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, CapabilityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
