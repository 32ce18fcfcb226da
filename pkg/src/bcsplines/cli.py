"""
Command-line front end.

Subcommands:

    table        one row per t-subset at rank n: left/right characters, dim
    char         characters and symmetric-function expansions for one space
    verify       run the verification suites; failing checks are reported
    dump-spline  print a named family spline in the dump format

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from .group import SignedPerm, group_table
from .hessenberg import (
    HessenbergSpace,
    enumerate_hessenberg,
    from_tset,
    h_descent_formula,
    h_descent_oracle,
    dim_degree_one,
    parse_tset,
    realizable_tsets,
    realize_tset,
    t_set,
    tset_str,
)
from .roots import LieType
from .splines import (
    f_spline,
    g_spline,
    h_spline,
    is_spline,
    r_spline,
    t_spline,
    y_spline,
)


def _lie(s: str) -> LieType:
    try:
        return LieType(s.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown type {s!r}; expected B or C")


def _pmap(fn, items, jobs: int):
    """Map with a bounded worker pool; results keep the input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _all_tsets(n: int) -> list[frozenset[int]]:
    out = [
        frozenset(i + 1 for i in range(n) if mask >> i & 1) for mask in range(2**n)
    ]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _table_row(tset: frozenset, n: int, lie_type: LieType, level: str) -> dict:
    from .characters import computed_char, formula_char

    left = formula_char(tset, n, "left")
    right = formula_char(tset, n, "right")
    row = {
        "tset": tset_str(tset),
        "left_char": left.canonical_str(),
        "right_char": right.canonical_str(),
        "dim": left.dimension(),
        "verified": "",
    }
    if level == "full":
        space = realize_tset(tset, n, lie_type)
        ok = computed_char(space, "left") == left.evaluate() and computed_char(
            space, "right"
        ) == right.evaluate()
        row["verified"] = "yes" if ok else "NO"
    return row


def cmd_table(args) -> int:
    n = args.n
    if args.level == "full" and n > 4:
        print(f"full-oracle table needs n <= 4, got {n}", file=sys.stderr)
        return 1
    if args.by_ideal:
        rows = []
        for space in enumerate_hessenberg(args.type, n):
            row = _table_row(t_set(space), n, args.type, args.level)
            row = {"ideal": space.serialize(), **row}
            rows.append(row)
        cols = ["ideal", "tset", "left_char", "right_char", "dim", "verified"]
    else:
        rows = _pmap(
            lambda ts: _table_row(ts, n, args.type, args.level),
            _all_tsets(n),
            args.jobs,
        )
        cols = ["tset", "left_char", "right_char", "dim", "verified"]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "tsv":
        print("\t".join(cols))
        for r in rows:
            print("\t".join(str(r[c]) for c in cols))
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
        print("  ".join(c.ljust(widths[c]) for c in cols))
        for r in rows:
            print("  ".join(str(r[c]).ljust(widths[c]) for c in cols))
    if args.level == "full" and any(r["verified"] == "NO" for r in rows):
        return 2
    return 0


# ---------------------------------------------------------------------------
# char
# ---------------------------------------------------------------------------


def _parse_space(args) -> tuple[frozenset[int], HessenbergSpace | None]:
    n = args.n
    if args.tset is not None and args.ideal is not None:
        raise ValueError("give either --tset or --ideal, not both")
    if args.tset is not None:
        tset = parse_tset(args.tset)
        if not tset <= set(range(1, n + 1)):
            raise ValueError(f"t-set {args.tset!r} out of range for n={n}")
        space = realize_tset(tset, n, args.type) if n <= 6 else None
        return tset, space
    if args.ideal is not None:
        space = HessenbergSpace.parse(args.ideal, args.type, n)
        return t_set(space), space
    raise ValueError("need --tset or --ideal")


def cmd_char(args) -> int:
    from .characters import computed_char, formula_char
    from .symfunc import h_basis, h_positivity, h_to_s

    try:
        tset, space = _parse_space(args)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    n = args.n
    out: dict = {"n": n, "tset": tset_str(tset)}
    exprs = {side: formula_char(tset, n, side) for side in ("left", "right")}
    for side, expr in exprs.items():
        out[f"{side}_char"] = expr.canonical_str()
        out[f"{side}_dim"] = expr.dimension()
    failures = 0
    if args.level == "full":
        if space is None or n > 4:
            print("full-oracle level needs n <= 4", file=sys.stderr)
            return 1
        for side, expr in exprs.items():
            cc = computed_char(space, side)
            agree = cc == expr.evaluate()
            out[f"{side}_verified"] = agree
            out[f"{side}_computed_dim"] = str(cc.dimension())
            failures += not agree
            out[f"{side}_computed_classes"] = [
                {"type": cl.key_str(), "value": str(v)} for cl, v in cc.items()
            ]
        left_fn = computed_char(space, "left")
    elif n <= 6:
        left_fn = exprs["left"].evaluate()
    else:
        left_fn = None
    if left_fn is not None:
        hh = h_basis(left_fn)
        pos, witness = h_positivity(hh)
        out["left_frobenius_h"] = hh.pretty()
        out["left_frobenius_s"] = h_to_s(hh).pretty()
        out["left_h_positive"] = pos
        if witness:
            out["left_h_negative_terms"] = [
                {"key": "|".join(map(str, k)), "coeff": str(c)} for k, c in witness
            ]
    if args.format == "json":
        print(json.dumps(out, indent=2, default=str))
    else:
        for key, val in out.items():
            if key.endswith("_computed_classes"):
                continue
            print(f"{key}: {val}")
    return 2 if failures else 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _suite_group_laws(n: int, lie_type: LieType, jobs: int):
    import random

    table = group_table(n)
    rng = random.Random(20_000 + n)
    els = table.elements
    triples = (
        [(a, b, c) for a in els for b in els for c in els]
        if n <= 2
        else [(rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(2000)]
    )
    for a, b, c in triples:
        if (a * b) * c != a * (b * c):
            return False, f"associativity fails at {a}, {b}, {c}"
    e = SignedPerm.identity(n)
    for w in els:
        if w * w.inverse() != e or w.inverse() * w != e:
            return False, f"inverse fails at {w}"
    return True, f"{len(triples)} triples, {len(els)} inverses"


def _suite_length_bfs(n: int, lie_type: LieType, jobs: int):
    from collections import deque

    from .group import length

    table = group_table(n)
    gens = [SignedPerm.simple(i, n) for i in range(1, n + 1)]
    dist = {SignedPerm.identity(n).window: 0}
    queue = deque([SignedPerm.identity(n)])
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w * s
            if ws.window not in dist:
                dist[ws.window] = dist[w.window] + 1
                queue.append(ws)
    bad = [w for w in table.elements if dist[w.window] != length(w)]
    if bad:
        return False, f"length mismatch at {bad[0]}"
    return True, f"{len(dist)} elements"


def _suite_root_bijection(n: int, lie_type: LieType, jobs: int):
    from .roots import positive_roots, root_to_reflection

    for lt in (LieType.B, LieType.C):
        roots = positive_roots(lt, n)
        refl = {root_to_reflection(r) for r in roots}
        if len(refl) != len(roots) or len(roots) != n * n:
            return False, f"not a bijection in type {lt}"
    return True, f"{n * n} roots per type"


def _suite_descents(n: int, lie_type: LieType, level: str, jobs: int):
    if level == "full":
        spaces = enumerate_hessenberg(lie_type, n)
    else:
        spaces = [
            from_tset(ts, n, lie_type) for ts in sorted(
                realizable_tsets(lie_type, n), key=lambda s: (len(s), sorted(s))
            )
        ]
    bad = []
    for space in spaces:
        ts = t_set(space)
        for i in range(1, n + 1):
            if h_descent_oracle(space, i) != h_descent_formula(ts, n, i):
                bad.append((tset_str(ts), i))
    bad = sorted(set(bad))
    if bad:
        detail = "; ".join(f"tset {{{t}}} i={i}" for t, i in bad)
        return False, f"closed form disagrees with the scan at: {detail}"
    return True, f"{len(spaces)} spaces checked"


def _suite_families(n: int, lie_type: LieType, jobs: int):
    from .hessenberg import classify
    from .splines import unbalanced_sets

    converse_holds = 0
    converse_fails = 0
    for space in enumerate_hessenberg(lie_type, n):
        cls = classify(t_set(space), n)
        for i in range(1, n + 1):
            hyp = i in cls.uncovered
            ok = all(
                is_spline(f_spline(i, a, n), space) for a in unbalanced_sets(i, n)
            )
            if hyp and not ok:
                return False, f"coset family fails for uncovered i={i}"
            if not hyp:
                converse_holds += ok
                converse_fails += not ok
        ts = t_set(space)
        for i in range(1, n):
            hyp = (i <= n - 2 and i not in ts) or (
                i == n - 1 and not ts & {n - 1, n}
            )
            if hyp and not all(
                is_spline(y_spline(i, k, n), space)
                for k in range(-n, n + 1)
                if k
            ):
                return False, f"interval family fails under its hypothesis, i={i}"
        if n not in ts and not all(
            is_spline(g_spline(i, n), space) for i in range(1, n + 1)
        ):
            return False, "signed family fails under its hypothesis"
        if (n - 1) not in ts and not is_spline(h_spline(n), space):
            return False, "parity family fails under its hypothesis"
    return True, f"converse: {converse_holds} hold / {converse_fails} fail (reported only)"


def _suite_bases(n: int, lie_type: LieType, jobs: int):
    from .splines import bundle_rank, generating_set, left_basis, permutohedral_basis, right_basis

    deficient = []
    for ts in sorted(realizable_tsets(lie_type, n), key=lambda s: (len(s), sorted(s))):
        space = from_tset(ts, n, lie_type)
        dim = dim_degree_one(space)
        if bundle_rank(generating_set(space)) != dim:
            deficient.append(tset_str(ts))
            continue
        if ts:
            left_basis(space)
            right_basis(space)
        else:
            if len(permutohedral_basis(n)) != dim:
                deficient.append(tset_str(ts))
    if deficient:
        return False, "closed-form families do not span at t-sets: " + "; ".join(
            f"{{{t}}}" for t in deficient
        )
    return True, "generating ranks and basis sizes match the scan dimension"


def _suite_characters(n: int, lie_type: LieType, jobs: int):
    from .characters import computed_char, formula_char

    def check(ts):
        space = from_tset(ts, n, lie_type)
        bad = []
        for side in ("left", "right"):
            if computed_char(space, side) != formula_char(ts, n, side).evaluate():
                bad.append((tset_str(ts), side))
        return bad

    tsets = sorted(realizable_tsets(lie_type, n), key=lambda s: (len(s), sorted(s)))
    bad = [b for chunk in _pmap(check, tsets, jobs) for b in chunk]
    if bad:
        detail = "; ".join(f"tset {{{t}}} {side}" for t, side in bad)
        return False, f"trace characters disagree with the closed form at: {detail}"
    return True, f"{len(tsets)} t-sets, both sides"


def _suite_frobenius(n: int, lie_type: LieType, jobs: int):
    from .symfunc import verify_table_rows

    report = verify_table_rows(n)
    bad = [k for k, v in report.items() if not v]
    if bad:
        return False, f"H-basis images off for: {', '.join(bad)}"
    return True, f"{len(report)} named characters"


def _suite_h_positivity(n: int, lie_type: LieType, jobs: int):
    from .characters import computed_char
    from .symfunc import h_basis, h_positivity

    bad = []
    for ts in sorted(realizable_tsets(lie_type, n), key=lambda s: (len(s), sorted(s))):
        space = from_tset(ts, n, lie_type)
        ok, witness = h_positivity(h_basis(computed_char(space, "left")))
        if not ok:
            bad.append((tset_str(ts), witness))
    if bad:
        detail = "; ".join(f"{{{t}}}" for t, _ in bad)
        return False, f"negative H-coefficients at t-sets: {detail}"
    return True, "left characters are H-positive"


def cmd_verify(args) -> int:
    n, lie_type, level, jobs = args.n, args.type, args.level, args.jobs
    if level == "full" and n > 4:
        print("full verification needs n <= 4", file=sys.stderr)
        return 1
    suites = [
        ("group-laws", lambda: _suite_group_laws(n, lie_type, jobs)),
        ("length-bfs", lambda: _suite_length_bfs(n, lie_type, jobs)),
        ("root-bijection", lambda: _suite_root_bijection(n, lie_type, jobs)),
        ("descent-formula", lambda: _suite_descents(n, lie_type, level, jobs)),
    ]
    if level == "full":
        suites += [
            ("spline-families", lambda: _suite_families(n, lie_type, jobs)),
            ("bases", lambda: _suite_bases(n, lie_type, jobs)),
            ("characters", lambda: _suite_characters(n, lie_type, jobs)),
            ("frobenius-rows", lambda: _suite_frobenius(n, lie_type, jobs)),
            ("h-positivity", lambda: _suite_h_positivity(n, lie_type, jobs)),
        ]
    failures = 0
    for name, fn in suites:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure with its message
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        failures += not ok
    return 2 if failures else 0


# ---------------------------------------------------------------------------
# dump-spline
# ---------------------------------------------------------------------------


def cmd_dump_spline(args) -> int:
    from .characters import dot_action

    n = args.n
    try:
        fam = args.family
        if fam == "t":
            rho = t_spline(args.index, n)
        elif fam == "r":
            rho = r_spline(args.index, n)
        elif fam == "f":
            if args.set is None:
                raise ValueError("family f needs --set")
            a = tuple(int(x) for x in args.set.split(","))
            rho = f_spline(args.index, a, n)
        elif fam == "y":
            if args.k is None:
                raise ValueError("family y needs --k")
            rho = y_spline(args.index, args.k, n)
        elif fam == "g":
            rho = g_spline(args.index, n)
        elif fam == "h":
            rho = h_spline(n)
        else:
            raise ValueError(f"unknown family {fam!r}")
        if args.act:
            rho = dot_action(SignedPerm.from_string(args.act), rho)
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 1
    print(rho.dump())
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # invalid command lines are invalid input, not verification failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bcsplines",
        description="degree-one splines and dot-action characters on signed permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True, help="rank")
        p.add_argument("--type", type=_lie, default=LieType.B, help="B or C")
        p.add_argument(
            "--format", choices=("text", "json", "tsv"), default="text"
        )
        p.add_argument(
            "--level", choices=("formula", "full"), default="formula"
        )
        p.add_argument("--jobs", type=int, default=1)

    p_table = sub.add_parser("table", help="characters for every t-subset")
    common(p_table)
    p_table.add_argument(
        "--by-ideal",
        action="store_true",
        help="one row per ideal of the chosen type instead of per t-subset",
    )
    p_table.set_defaults(fn=cmd_table)

    p_char = sub.add_parser("char", help="characters for one Hessenberg space")
    common(p_char)
    p_char.add_argument("--tset", help='e.g. "t1,t4" (empty string for none)')
    p_char.add_argument("--ideal", help='e.g. "[100];[010];[001];[011]"')
    p_char.set_defaults(fn=cmd_char)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_dump = sub.add_parser("dump-spline", help="print a family spline")
    p_dump.add_argument("--n", type=int, required=True)
    p_dump.add_argument(
        "--family", choices=("t", "r", "f", "y", "g", "h"), required=True
    )
    p_dump.add_argument("--index", type=int, default=1, help="family index i")
    p_dump.add_argument("--k", type=int, help="value index for family y")
    p_dump.add_argument("--set", help='unbalanced set for family f, e.g. "2,-1"')
    p_dump.add_argument("--act", help="window of an element to act by first")
    p_dump.set_defaults(fn=cmd_dump_spline)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
