"""Command-line front end.

Every subcommand prints a line-oriented report whose last line starts with
``verdict:`` or ``result:``.  Exit status is 0 on success, 1 for malformed
input and 2 when a cap or budget ran out.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import distinguish, gl, orbit_equiv, streams
from .errors import DistinguoError
from .perm import DEFAULT_CAP, format_group, parse_group, parse_permutation
from .graphs import automorphism_search, parse_graph


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


class _InputFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _InputFailure(f"cannot read {path}: {exc.strerror}") from None


def _group(path: str):
    return parse_group(_read(path))


def _fmt_set(points, fmt=str) -> str:
    return "{" + ",".join(fmt(p) for p in points) + "}"


def _parse_points(s: streams.GroupStream, text: str) -> list:
    text = text.strip().strip("{}")
    return [s.parse_point(tok) for tok in text.replace(",", " ").split()]


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise _InputFailure(f"expected integers, got {text!r}") from None


# Each handler returns the report lines.

def cmd_motion(args) -> list[str]:
    rep = distinguish.motion(_group(args.group), args.cap)
    return [
        f"order: {rep.group_order}",
        f"witness: {rep.witness.cycle_string()}",
        f"result: m={rep.motion}",
    ]


def cmd_certify(args) -> list[str]:
    rep = distinguish.motion_lemma_certify(_group(args.group), args.cap)
    return [
        f"order: {rep.group_order}",
        f"motion: {rep.motion}",
        f"witness: {rep.witness.cycle_string()}",
        f"bound: 2*log2(order) = {rep.bound_value:.6f}",
        f"verdict: {rep.verdict} m={rep.motion} order={rep.group_order}",
    ]


def cmd_distinguish(args) -> list[str]:
    d, witness = distinguish.distinguishing_number(_group(args.group), args.cap, args.budget)
    return [f"witness: {witness}", f"result: D={d}"]


def cmd_subset2(args) -> list[str]:
    y = distinguish.find_2_distinguishing_subset(_group(args.group), args.cap, args.budget)
    if y is None:
        return ["result: NoneExists"]
    return [f"size: {len(y)}", f"result: {_fmt_set(sorted(y))}"]


def cmd_base(args) -> list[str]:
    base = distinguish.minimal_base(_group(args.group), args.cap)
    return [f"size: {len(base)}", "result: [" + ",".join(map(str, base)) + "]"]


def cmd_autgroup(args) -> list[str]:
    action, order = automorphism_search(parse_graph(_read(args.graph)), args.cap, args.budget)
    return format_group(action).splitlines() + [f"result: order={order}"]


def cmd_count_preserved(args) -> list[str]:
    p = parse_permutation(args.perm, args.degree)
    return [f"cycles: {p.cycle_count()}", f"result: {distinguish.count_preserved_colorings(p)}"]


def cmd_greedy(args) -> list[str]:
    s = streams.make_stream(args.family)
    t = distinguish.greedy_infinite_coloring(s, args.n, args.bound)
    fmt = s.format_point
    lines = [f"{st.k} {fmt(st.point)} {fmt(st.image)}" for st in t.steps]
    return lines + [f"result: {len(t.steps)} steps"]


def cmd_displace(args) -> list[str]:
    s = streams.make_stream(args.family)
    a = streams.find_displacing_element(s, _parse_points(s, args.Y), _parse_points(s, args.Z), args.budget)
    return [f"index: {a.index}", f"result: {a.word_string()}"]


def cmd_closure_probe(args) -> list[str]:
    s = streams.make_stream(args.family)
    target = s.parse_word(args.target)
    rep = streams.closure_membership_probe(s, target, _int_list(args.radii), args.budget)
    lines = []
    for r in rep.results:
        if r.witness is None:
            lines.append(f"radius {r.radius}: NotFoundWithinBudget")
        else:
            lines.append(f"radius {r.radius}: index {r.witness.index} word {r.witness.word_string()}")
    if rep.member_index is not None:
        lines.append(f"member: index {rep.member_index}")
    return lines + [f"verdict: {rep.verdict}"]


def cmd_stab_orbits(args) -> list[str]:
    s = streams.make_stream(args.family)
    point = s.parse_point(args.point)
    classes = streams.window_point_stabilizer_orbits(s, point, args.radius, args.budget)
    lines = [f"orbit: {_fmt_set(c, s.format_point)}" for c in classes]
    return lines + [f"result: {len(classes)} orbits"]


def cmd_orbits(args) -> list[str]:
    action = _group(args.group)
    if args.k is None:
        part = orbit_equiv.powerset_orbits(action)
    else:
        part = orbit_equiv.subset_orbits(action, args.k, args.cap)
    return part.format().splitlines() + [f"result: {len(part.classes)} classes"]


def cmd_strong_oe(args) -> list[str]:
    same = orbit_equiv.strongly_orbit_equivalent(_group(args.group_a), _group(args.group_b))
    return [f"result: {'true' if same else 'false'}"]


def cmd_oe_witness(args) -> list[str]:
    w = orbit_equiv.strong_oe_witness(_group(args.group_a), _group(args.group_b), group_cap=args.cap)
    if w is None:
        return ["result: NoWitness"]
    return [
        f"orbit sizes: {w.orbit_size_a} {w.orbit_size_b}",
        f"result: {_fmt_set(sorted(w.subset))}",
    ]


def cmd_dense_sample(args) -> list[str]:
    s = streams.make_stream(args.family)
    out = orbit_equiv.sample_dense_generators(s, args.radius, args.size, args.budget)
    lines = [f"rep {k}: index {a.index} word {a.word_string()}" for k, a in enumerate(out.representatives)]
    lines.append(f"pairs: {len(out.pairs)}")
    lines.append(f"escaped: {out.escaped}")
    return lines + [f"result: {len(out.representatives)} representatives"]


def cmd_gl_construct(args) -> list[str]:
    ys = gl.construct_distinguishing_set(args.dim, args.scalar)
    return [gl.format_vector(v) for v in ys] + [f"result: {len(ys)} vectors"]


def cmd_gl_verify(args) -> list[str]:
    if args.vectors:
        ys = gl.parse_vectors(_read(args.vectors))
    elif args.dim is not None and args.scalar is not None:
        ys = gl.construct_distinguishing_set(args.dim, args.scalar)
    else:
        raise _InputFailure("give a vector file or both --dim and --scalar")
    v = gl.verify_trivial_setwise_stabilizer(ys, args.budget)
    lines = [f"vectors: {len(ys)}", f"candidates: {v.candidates}"]
    if v.certificate is not None:
        lines += ["certificate: " + gl.format_vector(row) for row in v.certificate]
    return lines + [f"verdict: {v.verdict}"]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="distinguo", description="Distinguishing numbers and motion of permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--quiet", action="store_true", help="print only the final verdict/result line")
        return p

    def with_group(p):
        p.add_argument("group", help="permgroup file")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order to enumerate")
        return p

    def with_family(p, budget=10**4):
        p.add_argument("--family", required=True, help="z-translate, inf-dihedral, ex41-B or ex41-A")
        p.add_argument("--budget", type=int, default=budget, help="number of enumerated elements to scan")
        return p

    with_group(add("motion", cmd_motion, "minimal degree with a witness element"))
    with_group(add("certify", cmd_certify, "Motion Lemma certificate: 2^m >= |A|^2 implies D=2"))
    p = with_group(add("distinguish", cmd_distinguish, "exact distinguishing number with a witness colouring"))
    p.add_argument("--budget", type=int, default=distinguish.DEFAULT_SEARCH_BUDGET)
    p = with_group(add("subset2", cmd_subset2, "least subset with trivial setwise stabilizer"))
    p.add_argument("--budget", type=int, default=distinguish.DEFAULT_SEARCH_BUDGET)
    with_group(add("base", cmd_base, "minimum-size base"))

    p = add("autgroup", cmd_autgroup, "automorphism group of a graph file")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--budget", type=int, default=10**6, help="backtracking node budget")

    p = add("count-preserved", cmd_count_preserved, "number of 2-colourings fixed by a permutation")
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(0 1)(2 3)"')
    p.add_argument("--degree", type=int, required=True)

    p = add("greedy", cmd_greedy, "greedy distinguishing 2-colouring transcript for a stream")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True, help="number of elements to handle")
    p.add_argument("--bound", type=int, default=10**4, help="largest window radius scanned per step")

    p = with_family(add("displace", cmd_displace, "first element a with Y and aZ disjoint"), 10**3)
    p.add_argument("--Y", required=True, help="comma-separated points")
    p.add_argument("--Z", required=True, help="comma-separated points")

    p = with_family(add("closure-probe", cmd_closure_probe, "window witnesses for closure membership"), 10**5)
    p.add_argument("--target", required=True, help='word such as "b^-9 d b^9" or "s0"')
    p.add_argument("--radii", required=True, help="comma-separated radii")

    p = with_family(add("stab-orbits", cmd_stab_orbits, "window orbits of a point stabilizer"), 10**3)
    p.add_argument("--point", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = with_group(add("orbits", cmd_orbits, "orbits on k-subsets (power set when --k is omitted)"))
    p.add_argument("--k", type=int, default=None)

    for name, handler, text in (
        ("strong-oe", cmd_strong_oe, "do two groups have the same orbits on the power set"),
        ("oe-witness", cmd_oe_witness, "subset whose orbits under a group and a subgroup differ"),
    ):
        p = add(name, handler, text)
        p.add_argument("group_a")
        p.add_argument("group_b")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = with_family(add("dense-sample", cmd_dense_sample, "representatives realising subset moves in a window"), 500)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--size", type=int, required=True, help="largest subset size")

    p = add("gl-construct", cmd_gl_construct, "distinguishing set for GL(n,Q)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--scalar", required=True, help="rational such as 2 or 3/2")

    p = add("gl-verify", cmd_gl_verify, "decide whether a vector set has trivial setwise stabilizer in GL(n,Q)")
    p.add_argument("vectors", nargs="?", help="file of p/q rational tuples, one vector per line")
    p.add_argument("--dim", type=int)
    p.add_argument("--scalar")
    p.add_argument("--budget", type=int, default=10**6, help="maximum candidate permutations")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines = args.handler(args)
    except DistinguoError as exc:
        print(f"error: {type(exc).__name__}")
        print(str(exc), file=sys.stderr)
        return exc.exit_code
    except (_InputFailure, ValueError) as exc:
        print("error: MalformedInput")
        print(str(exc), file=sys.stderr)
        return 1
    if args.quiet:
        lines = lines[-1:]
    print("\n".join(lines))
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
