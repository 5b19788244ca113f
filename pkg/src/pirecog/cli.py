"""Command-line front end.

Exit codes: 0 = yes / feasible / valid, 1 = no / infeasible / invalid, 2 = error.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .bigraph import InputError, classify_edges, is_chain_graph
from .chaincover import (
    AlternatingCycle,
    ChainCover,
    CoverProblem,
    abc_free_bipartition,
    ac_free_bipartition,
    chain_completion,
    find_configurations,
    solve_restricted_cover,
    verify_cover,
)
from .genio import (
    certificate_dict,
    dump_certificate,
    format_instance,
    gen_interval_graph,
    gen_permutation_graph,
    gen_random_bipartite,
    gen_random_F,
    gen_triangle_representation,
    intersection_graph,
    load_certificate,
    order_of_representation,
    parse_instance,
    result_certificate,
)
from .oracles import oracle_2sat, oracle_alternating_cycle, oracle_cover_exists
from .orders import (
    PartialOrder,
    SimpleGraph,
    linear_interval_problem,
    recognize_linear_interval_order,
)
from .recognizer import NO_LINEAR_INTERVAL_COVER, check_certificate, recognize_simple_triangle
from .twosat import TwoSatInstance, satisfies, solve

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_recognize(path: str, kind: Optional[str] = None) -> tuple[int, dict]:
    inst = parse_instance(_read(path))
    if kind is None:
        kind = "pst" if isinstance(inst, SimpleGraph) else "lio"
    if kind == "pst":
        if not isinstance(inst, SimpleGraph):
            raise UsageError("--kind=pst needs a 'graph' instance")
        res = recognize_simple_triangle(inst)
        return (EXIT_YES if res.verdict else EXIT_NO), result_certificate(res)
    if not isinstance(inst, PartialOrder):
        raise UsageError("--kind=lio needs an 'order' instance")
    cover = recognize_linear_interval_order(inst)
    if cover is None:
        return EXIT_NO, certificate_dict(False, NO_LINEAR_INTERVAL_COVER)
    return EXIT_YES, certificate_dict(True, cover=cover)


def cmd_cover(path: str) -> tuple[int, dict]:
    inst = parse_instance(_read(path))
    if not isinstance(inst, CoverProblem):
        raise UsageError("cover needs a 'bigraph' instance")
    cover = solve_restricted_cover(inst)
    if cover is None:
        return EXIT_NO, certificate_dict(False, "Unsatisfiable")
    if not verify_cover(inst, cover):
        raise RuntimeError("refusing to emit a cover that does not verify")
    return EXIT_YES, certificate_dict(True, cover=cover)


def cmd_verify(instance_path: str, certificate_path: str) -> tuple[int, str]:
    inst = parse_instance(_read(instance_path))
    cert = load_certificate(_read(certificate_path))
    if not cert["verdict"]:
        return EXIT_NO, "certificate carries a 'no' verdict; nothing to check"
    cover: Optional[ChainCover] = cert.get("cover")
    if cover is None:
        return EXIT_NO, "certificate has no cover"
    try:
        if isinstance(inst, SimpleGraph):
            if "orientation" not in cert:
                return EXIT_NO, "certificate has no orientation"
            check = check_certificate(inst, cert["orientation"], cover)
        elif isinstance(inst, PartialOrder):
            check = verify_cover(linear_interval_problem(inst), cover)
        else:
            check = verify_cover(inst, cover)
    except InputError as exc:
        return EXIT_NO, f"invalid: {exc}"
    if check:
        return EXIT_YES, "valid"
    return EXIT_NO, f"invalid: {check.clause} violated, witness {check.witness}"


FAMILIES = {
    "triangle": ("n",),
    "triangle-order": ("n",),
    "permutation": ("n",),
    "interval": ("n",),
    "bipartite": ("nu", "nv", "density", "f_density"),
}


def cmd_gen(family: str, params: Sequence[str], seed: int) -> str:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    names = FAMILIES[family]
    if family == "bipartite":
        if len(params) not in (3, 4):
            raise UsageError("bipartite takes NU NV DENSITY [F_DENSITY]")
    elif len(params) != 1:
        raise UsageError(f"{family} takes a single size N")
    try:
        vals = [float(p) if "density" in name else int(p) for name, p in zip(names, params)]
    except ValueError:
        raise UsageError(f"bad parameters {' '.join(params)!r}") from None
    if family == "bipartite":
        nu, nv, density = int(vals[0]), int(vals[1]), vals[2]
        if nu < 0 or nv < 0:
            raise UsageError("sizes must be non-negative")
        g = gen_random_bipartite(nu, nv, density, seed)
        f = gen_random_F(g, vals[3] if len(vals) > 3 else 0.0, seed + 1)
        return format_instance(CoverProblem(g, f))
    n = int(vals[0])
    if n < 0:
        raise UsageError("size must be non-negative")
    if family == "triangle":
        return format_instance(intersection_graph(gen_triangle_representation(n, seed)))
    if family == "triangle-order":
        return format_instance(order_of_representation(gen_triangle_representation(n, seed)))
    if family == "permutation":
        return format_instance(gen_permutation_graph(n, seed))
    return format_instance(gen_interval_graph(n, seed))


# -- audit ----------------------------------------------------------------


@dataclass
class AuditReport:
    counts: dict[str, int] = field(default_factory=dict)
    disagreements: list[str] = field(default_factory=list)

    def tick(self, name: str) -> None:
        self.counts[name] = self.counts.get(name, 0) + 1

    @property
    def ok(self) -> bool:
        return not self.disagreements


def run_audit(
    max_size: int = 4,
    trials: int = 200,
    seed: int = 0,
    solver: Callable[[CoverProblem], Optional[ChainCover]] = solve_restricted_cover,
) -> AuditReport:
    """Cross-check the pipeline against the brute-force oracles on random instances."""
    rng = random.Random(seed)
    rep = AuditReport()
    for t in range(trials):
        nu, nv = rng.randint(1, max_size), rng.randint(1, max_size)
        g = gen_random_bipartite(nu, nv, rng.random(), rng.randrange(1 << 30))
        p = CoverProblem(g, gen_random_F(g, rng.random() * 0.6, rng.randrange(1 << 30)))

        cover = solver(p)
        expected = oracle_cover_exists(p, max_edges=nu * nv)
        rep.tick("cover")
        if (cover is not None) != expected:
            rep.disagreements.append(f"trial {t}: cover feasibility {cover is not None}, oracle {expected}")
        elif cover is not None and not verify_cover(p, cover):
            rep.disagreements.append(f"trial {t}: emitted cover does not verify")

        b = ac_free_bipartition(p)
        if b is not None:
            rep.tick("steps")
            if find_configurations(p, b, ("A1", "A2", "C")):
                rep.disagreements.append(f"trial {t}: Step 1 left an A/C configuration")
            b2 = abc_free_bipartition(p, b)
            if find_configurations(p, b2):
                rep.disagreements.append(f"trial {t}: Step 2 left a configuration")
            if not is_chain_graph(g, b2.blue | classify_edges(g).uncommitted)[0]:
                rep.disagreements.append(f"trial {t}: blue + uncommitted is not chain")

        mask = gen_random_F(g, rng.random(), rng.randrange(1 << 30))
        done = chain_completion(g, mask)
        cyc = oracle_alternating_cycle(g, mask, max_side=max(max_size, 1))
        rep.tick("completion")
        if isinstance(done, AlternatingCycle) != (cyc is not None):
            rep.disagreements.append(f"trial {t}: chain completion disagrees with cycle oracle")

        nvars = rng.randint(1, 12)
        inst = TwoSatInstance(nvars)
        for _ in range(rng.randint(0, 3 * nvars)):
            inst.add_clause(
                (rng.randrange(nvars), rng.random() < 0.5), (rng.randrange(nvars), rng.random() < 0.5)
            )
        values = solve(inst)
        rep.tick("2sat")
        if (values is not None) != oracle_2sat(nvars, inst.clauses) or (
            values is not None and not satisfies(inst, values)
        ):
            rep.disagreements.append(f"trial {t}: 2SAT verdict wrong")
    return rep


def cmd_audit(max_size: int, trials: int, seed: int) -> tuple[int, str]:
    if max_size < 1 or trials < 0:
        raise UsageError("--max-size must be >= 1 and --trials >= 0")
    rep = run_audit(max_size, trials, seed)
    lines = [f"{k}: {v} checks" for k, v in sorted(rep.counts.items())]
    lines += rep.disagreements
    lines.append(f"disagreements: {len(rep.disagreements)}")
    return (EXIT_YES if rep.ok else EXIT_NO), "\n".join(lines)


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pirecog", description="Simple-triangle graph and linear-interval order recognition."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide a graph (pst) or an order (lio)")
    p.add_argument("path")
    p.add_argument("--kind", choices=("pst", "lio"))

    p = sub.add_parser("cover", help="solve a restricted 2-chain subgraph cover instance")
    p.add_argument("path")

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("instance")
    p.add_argument("certificate")

    p = sub.add_parser("gen", help="print a generated instance")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("audit", help="cross-check against brute-force oracles")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        if args.command == "recognize":
            code, cert = cmd_recognize(args.path, args.kind)
            sys.stdout.write(dump_certificate(cert))
        elif args.command == "cover":
            code, cert = cmd_cover(args.path)
            sys.stdout.write(dump_certificate(cert))
        elif args.command == "verify":
            code, msg = cmd_verify(args.instance, args.certificate)
            print(msg)
        elif args.command == "gen":
            sys.stdout.write(cmd_gen(args.family, args.params, args.seed))
            code = EXIT_YES
        else:
            code, msg = cmd_audit(args.max_size, args.trials, args.seed)
            print(msg)
    except (InputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
