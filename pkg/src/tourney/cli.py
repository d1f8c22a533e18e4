"""Command line front end.

Tournaments travel as single-line records "n HEX": the upper-triangle arc
bits in row-major pair order (0,1), (0,2), ..., (i,j) for i < j, packed
most significant bit first and zero padded on the right to whole hex
digits; bit 1 means the lower-numbered vertex wins.  A single vertex is
just "1".  Lines starting with '#' and blank lines are ignored on input,
so enumerate output pipes straight into analyze.
"""
from __future__ import annotations

import argparse
import json
import sys

from .core import Tournament, canonical_code
from .decomposition import is_indecomposable, nontrivial_intervals, support
from .errors import NoEligibleVertex, TournamentError
from .generators import (
    FAMILIES,
    FamilySpec,
    assemble_family,
    gen_b6,
    gen_critical,
    gen_paley7,
)
from .verification import (
    MAX_CENSUS_N,
    census_records,
    verify_hik,
    verify_latka,
    verify_lemma_suite,
    verify_main,
)
from .w5 import c_invariant, is_family_T_member, w5_vertex_set

_HEX = "0123456789ABCDEF"

_INTERVAL_REPORT_MAX = 20


def format_record(t: Tournament) -> str:
    """One-line record of a tournament; inverse of parse_record."""
    if t.n == 1:
        return "1"
    bits = []
    for i in range(t.n):
        row = t.rows[i]
        for j in range(i + 1, t.n):
            bits.append(row >> j & 1)
    while len(bits) % 4:
        bits.append(0)
    digits = "".join(
        _HEX[bits[k] * 8 + bits[k + 1] * 4 + bits[k + 2] * 2 + bits[k + 3]]
        for k in range(0, len(bits), 4)
    )
    return f"{t.n} {digits}"


def parse_record(line: str) -> Tournament:
    """Parse "n HEX" (or "1").  Raises ValueError on malformed input."""
    parts = line.split()
    if not parts:
        raise ValueError("empty record")
    if not parts[0].isdigit():
        raise ValueError(f"vertex count expected, got {parts[0]!r}")
    n = int(parts[0])
    if not 1 <= n <= 64:
        raise ValueError(f"vertex count must be 1..64, got {n}")
    m = n * (n - 1) // 2
    if n == 1:
        if len(parts) != 1:
            raise ValueError("a single-vertex record carries no arc bits")
        return Tournament([0])
    if len(parts) != 2:
        raise ValueError("expected exactly 'n HEXBITS'")
    hx = parts[1].upper()
    want = (m + 3) // 4
    if len(hx) != want:
        raise ValueError(f"expected {want} hex digits for {n} vertices, got {len(hx)}")
    if any(ch not in _HEX for ch in hx):
        raise ValueError(f"invalid hex digits in {parts[1]!r}")
    val = int(hx, 16)
    width = 4 * want
    if val & ((1 << (width - m)) - 1):
        raise ValueError("padding bits must be zero")
    rows = [0] * n
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            if val >> (width - 1 - pos) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            pos += 1
    return Tournament(rows)


def _gen_named(name: str, size) -> Tournament:
    if name in ("T", "U", "W"):
        if size is None:
            raise TournamentError(f"--named {name} needs --size")
        return gen_critical(name, size)
    if size is not None:
        raise TournamentError(f"--named {name} has a fixed size")
    if name == "C3":
        return Tournament([0b010, 0b100, 0b001])
    if name == "P7":
        return gen_paley7()
    return gen_b6()


def _parse_components(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise TournamentError(f"--components wants comma-separated integers, got {text!r}")


def _parse_chains(text: str) -> tuple:
    # one block per semicolon group, labels comma separated
    try:
        return tuple(tuple(int(v) for v in grp.split(",")) for grp in text.split(";"))
    except ValueError:
        raise TournamentError(f"bad --chains value {text!r}")


def _cmd_gen(args) -> int:
    if (args.named is None) == (args.family is None):
        print("error: gen takes exactly one of --named or --family", file=sys.stderr)
        return 2
    if args.named is not None:
        t = _gen_named(args.named, args.size)
    else:
        if args.components is None:
            print("error: --family needs --components", file=sys.stderr)
            return 2
        chains = _parse_chains(args.chains) if args.chains else None
        t = assemble_family(FamilySpec(args.family, _parse_components(args.components), chains))
    print(format_record(t))
    return 0


def _analysis(t: Tournament) -> dict:
    indec = is_indecomposable(t)
    supp = sorted(support(t)) if indec and t.n >= 3 else None
    rep = w5_vertex_set(t)
    fam = is_family_T_member(t)
    c = None
    if fam:
        try:
            c = c_invariant(t)
        except NoEligibleVertex:
            c = None
    return {
        "n": t.n,
        "indecomposable": indec,
        "support": supp,
        "w5_set": sorted(rep.w5_vertices),
        "w5_size": len(rep.w5_vertices),
        "family_t": fam,
        "c_invariant": c,
        "canonical": canonical_code(t).hex().upper(),
    }


def _print_text(idx: int, t: Tournament) -> None:
    info = _analysis(t)
    print(f"# tournament {idx}")
    print(f"n: {info['n']}")
    print(f"indecomposable: {str(info['indecomposable']).lower()}")
    if t.n <= _INTERVAL_REPORT_MAX:
        print(f"nontrivial_intervals: {len(nontrivial_intervals(t))}")
    supp = info["support"]
    print(f"support: {'-' if supp is None else '{' + ', '.join(map(str, supp)) + '}'}")
    print(f"w5_set: {{{', '.join(map(str, info['w5_set']))}}}")
    print(f"w5_size: {info['w5_size']}")
    print(f"family_t: {str(info['family_t']).lower()}")
    print(f"c_invariant: {'-' if info['c_invariant'] is None else info['c_invariant']}")
    print(f"canonical: {info['canonical']}")


def _print_dot(idx: int, t: Tournament) -> None:
    print(f"digraph tournament_{idx} {{")
    for v in range(t.n):
        print(f"  {v};")
    for i, j in t.arcs():
        print(f"  {i} -> {j};")
    print("}")


def _cmd_analyze(args) -> int:
    if args.json and args.dot:
        print("error: --json and --dot are mutually exclusive", file=sys.stderr)
        return 2
    if args.path is None:
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(args.path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    ts = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            ts.append(parse_record(line))
        except ValueError as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 2
    for idx, t in enumerate(ts, start=1):
        if args.json:
            print(json.dumps(_analysis(t)))
        elif args.dot:
            _print_dot(idx, t)
        else:
            if idx > 1:
                print()
            _print_text(idx, t)
    return 0


def _cmd_enumerate(args) -> int:
    n = args.n
    if n < 1:
        print("error: --n must be positive", file=sys.stderr)
        return 2
    if n > MAX_CENSUS_N and not args.force:
        print(
            f"error: orders past {MAX_CENSUS_N} need --force (hard cap {MAX_CENSUS_N + 1})",
            file=sys.stderr,
        )
        return 2
    shown = 0
    for t, e in census_records(n, force=args.force, jobs=args.jobs):
        if args.filter == "indec" and not e.indecomposable:
            continue
        if args.filter == "family-t" and not e.family_T_member:
            continue
        if args.filter == "omits-w5" and not e.omits_w5:
            continue
        if args.indec and not e.indecomposable:
            continue
        print(format_record(t))
        shown += 1
    print(f"# count={shown}")
    return 0


def _render_verdict(rep, extra_records=()) -> None:
    print(f"theorem: {rep.theorem}")
    print(f"scope: {rep.scope}")
    for key, val in rep.counts.items():
        print(f"count {key}: {val}")
    for rec in extra_records:
        print(f"matched: {rec}")
    print(f"verdict: {'PASS' if rep.ok else 'FAIL'}")
    if not rep.ok:
        from .core import tournament_from_code

        for code in rep.counterexamples:
            print(f"counterexample: {format_record(tournament_from_code(code))}")


def _cmd_verify(args) -> int:
    theorem = args.theorem
    extra = []
    if theorem == "latka":
        if args.n is None:
            print("error: verify --theorem latka needs --n", file=sys.stderr)
            return 2
        rep = verify_latka(args.n, jobs=args.jobs)
        if rep.ok:
            for t, e in census_records(args.n, jobs=args.jobs):
                if e.indecomposable and e.omits_w5:
                    extra.append(format_record(t))
    elif theorem == "hik":
        if args.max_n is None:
            print("error: verify --theorem hik needs --max-n", file=sys.stderr)
            return 2
        rep = verify_hik(args.max_n, jobs=args.jobs)
    elif theorem == "main":
        if args.n is None:
            print("error: verify --theorem main needs --n 7 or 9", file=sys.stderr)
            return 2
        rep = verify_main(args.n, jobs=args.jobs)
    else:
        rep = verify_lemma_suite(args.max_n if args.max_n else MAX_CENSUS_N, jobs=args.jobs)
    _render_verdict(rep, extra)
    return 0 if rep.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourney", description="tournament decomposition toolkit"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="emit one named or assembled tournament")
    g.add_argument("--named", choices=["C3", "P7", "B6", "T", "U", "W"])
    g.add_argument("--size", type=int, default=None, help="order for T/U/W")
    g.add_argument("--family", choices=list(FAMILIES))
    g.add_argument("--components", help="per-component half sizes, e.g. 1,2")
    g.add_argument("--chains", default=None,
                   help="chain orders per block: labels comma separated, blocks by ';'")

    a = sub.add_parser("analyze", help="analyze records from a file or stdin")
    a.add_argument("path", nargs="?", default=None)
    a.add_argument("--json", action="store_true", help="one JSON object per record")
    a.add_argument("--dot", action="store_true", help="graphviz digraph per record")

    e = sub.add_parser("enumerate", help="list canonical representatives")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", choices=["all", "indec", "family-t", "omits-w5"],
                   default="all")
    e.add_argument("--indec", action="store_true",
                   help="keep only indecomposable classes (composes with --filter)")
    e.add_argument("--force", action="store_true",
                   help=f"allow n={MAX_CENSUS_N + 1}")
    e.add_argument("--jobs", type=int, default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--theorem", choices=["latka", "hik", "main", "lemmas"],
                   required=True)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--max-n", dest="max_n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=None)
    return parser


_DISPATCH = {
    "gen": _cmd_gen,
    "analyze": _cmd_analyze,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except TournamentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
