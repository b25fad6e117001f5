"""Command-line front end: ``pathtoggle <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import enumeration as en
from .core import (
    MAX_N,
    CapacityError,
    IndependentSet,
    ToggleWord,
    coxeter_to_orientation,
    enumerate_independent_sets,
    phi,
    random_coxeter,
    same_action,
    toggle,
)
from .coxeter import conjugated, path_to_phi
from .orbits import (
    SCHEMA_VERSION,
    Statistic,
    all_orbits,
    check_homomesy,
    count_symmetrical_in,
    is_reversible,
    orbit_of,
    orbit_to_json,
)
from .snakes import (
    SnakeComposition,
    composition_seed,
    format_sizes_table,
    orbit_from_composition,
    orbit_size,
    sizes_table,
    snake_decompose,
)
from .zigzag import (
    OrderIdeal,
    all_ideal_orbits,
    apply_ideal_word,
    check_ideal_homomesy,
    eta,
    ideal_orbit_of,
    ideal_toggle,
    promotion_word,
    rowmotion_word,
    translated_statistics,
)

COUNTS = {
    "independent": (en.count_independent_sets, en.oracle_independent_sets, 1),
    "symmetrical": (en.count_symmetrical, en.oracle_symmetrical, 1),
    "open": (en.count_strings_no11_open, en.oracle_strings_no11_open, 1),
    "necklaces": (en.count_necklaces_no11, en.oracle_necklaces, 1),
    "bracelets": (en.count_bracelets_no11, en.oracle_bracelets, 1),
    "self-reverse": (en.count_self_reverse_necklaces, en.oracle_self_reverse_necklaces, 1),
    "orbits": (en.count_phi_orbits, en.oracle_phi_orbits, 2),
    "reversible": (en.count_reversible_orbits, en.oracle_reversible_orbits, 2),
}


class UsageError(Exception):
    pass


def parse_word(text: str, n: int) -> ToggleWord:
    token = text.strip().lower()
    if token == "pro":
        return promotion_word(n)
    if token == "row":
        return rowmotion_word(n)
    return ToggleWord.parse(text, n)


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _fraction_json(x: Fraction | None):
    return None if x is None else str(x)


def _emit(payload: dict, fmt: str, text_fn, out) -> None:
    if fmt == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        rows = payload.get("rows", [])
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    else:
        out.write(text_fn(payload))
        if not payload.get("ok", True):
            out.write("FAILED\n")


def _require_n(args) -> int:
    if args.n is None:
        raise UsageError("-n is required for this command")
    if args.n < 2:
        raise UsageError("n must be at least 2")
    return args.n


def _board_text(o, labels: dict | None = None, offset: int = 0) -> str:
    lines = ["     " + " ".join(f"{j % 10}" for j in range(1, o.n + 1))]
    for i in range(len(o)):
        r = (i + offset) % len(o)
        cells = []
        for j in range(1, o.n + 1):
            if o.S(r, j):
                cells.append(labels.get((r, j), "1") if labels else "1")
            else:
                cells.append(".")
        lines.append(f"S{i:<3} " + " ".join(cells))
    lines.append("sum  " + " ".join(str(x) for x in o.column_sums))
    return "\n".join(lines)


def cmd_orbits(args):
    n = _require_n(args)
    w = parse_word(args.word, n)
    orbits = all_orbits(n, w, args.max_n)
    rows = []
    for k, o in enumerate(orbits):
        rows.append({
            "index": k,
            "size": len(o),
            "representative": str(o.states[0]),
            "column_sums": " ".join(map(str, o.column_sums)),
            "reversible": is_reversible(o),
            "symmetrical": count_symmetrical_in(o),
        })
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "orbits",
        "n": n,
        "word": list(w.word),
        "orbit_count": len(orbits),
        "sizes": sorted(len(o) for o in orbits),
        "orbits": [dict(orbit_to_json(o), reversible=r["reversible"], symmetrical=r["symmetrical"])
                   for o, r in zip(orbits, rows)],
        "rows": rows,
    }

    def text(p):
        out = [f"word {w.pretty()} on n={n}: {p['orbit_count']} orbits, sizes {p['sizes']}"]
        for r, o in zip(rows, orbits):
            out.append(f"[{r['index']}] size {r['size']:<4} from {r['representative']}  "
                       f"sums ({r['column_sums']})  reversible={r['reversible']}  "
                       f"symmetrical={r['symmetrical']}")
            if args.boards:
                out.append(_board_text(o))
        return "\n".join(out) + "\n"

    return payload, text


def cmd_homomesy(args):
    n = _require_n(args)
    words = [parse_word(args.word, n)]
    rng = random.Random(args.seed)
    words += [random_coxeter(n, rng) for _ in range(args.random)]
    rows = []
    for w in words:
        for expr in args.statistic:
            f = Statistic.parse(expr, n)
            rep = check_homomesy(n, w, f, args.max_n)
            row = {
                "word": str(w),
                "statistic": str(f),
                "homomesic": rep.homomesic,
                "constant": _fraction_json(rep.constant),
                "orbit_count": rep.orbit_count,
                "witnesses": "",
            }
            if not rep.homomesic:
                row["witnesses"] = "; ".join(f"{o.states[0]}:{len(o)}:{avg}" for o, avg in rep.witnesses)
            rows.append(row)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "homomesy",
        "n": n,
        "rows": rows,
        "ok": all(r["homomesic"] for r in rows),
    }

    def text(p):
        out = []
        for r in rows:
            verdict = (f"{r['constant']}-mesic" if r["homomesic"]
                       else f"not homomesic (orbit:size:average {r['witnesses']})")
            out.append(f"w={r['word']}  f={r['statistic']}: {verdict}")
        return "\n".join(out) + "\n"

    return payload, text


def cmd_snakes(args):
    if args.table is not None:
        table = format_sizes_table(args.table)
        rows = [{"size": r.size, "parts": "+".join(map(str, r.parts23)),
                 "snake_pattern": str(r.snake_pattern), "modulus": r.modulus}
                for m in range(1, args.table + 1) for r in sizes_table(m)]
        return ({"schema_version": SCHEMA_VERSION, "command": "snakes", "rows": rows},
                lambda p: table + "\n")
    if args.composition:
        c = SnakeComposition.parse(args.composition)
        o = orbit_from_composition(c)
        predicted = orbit_size(c)
        first = composition_seed(c)
    elif args.start:
        s = IndependentSet.from_string(args.start)
        if args.n is not None and args.n != s.n:
            raise UsageError(f"--start has length {s.n} but -n is {args.n}")
        o = orbit_of(s, phi(s.n))
        first = s
        c = None
        predicted = None
    else:
        raise UsageError("give --composition, --start or --table")
    offset = o.masks.index(first.mask)
    size = len(o)
    snakes = sorted(snake_decompose(o), key=lambda sn: (sn.start_row - offset) % size)
    if c is None:
        c = snakes[0].composition
        predicted = orbit_size(c)
    labels = {}
    for k, sn in enumerate(snakes):
        for r, j in sn.cells:
            labels[(r % len(o), j)] = chr(ord("A") + k % 26)
    rows = [{"label": chr(ord("A") + k % 26), "start_row": (sn.start_row - offset) % size,
             "composition": str(sn.composition)} for k, sn in enumerate(snakes)]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "snakes",
        "n": o.n,
        "composition": str(c),
        "psi": c.psi,
        "predicted_size": predicted,
        "size": len(o),
        "states": [str(s) for s in o.starting_at(first)],
        "column_sums": list(o.column_sums),
        "rows": rows,
        "ok": predicted == len(o),
    }

    def text(p):
        out = [f"composition {c} (n={o.n}): N1={c.N1} N2={c.N2} psi={c.psi}",
               f"predicted size (3*N1+2*N2)/psi = {predicted}, actual {len(o)}"]
        if c.psi > 1:
            out.append(f"note: composition is periodic, naive size {3 * c.N1 + 2 * c.N2} divided by {c.psi}")
        out.append(_board_text(o, labels, offset))
        for r in rows:
            out.append(f"{r['label']}: row {r['start_row']}, composition {r['composition']}")
        return "\n".join(out) + "\n"

    return payload, text


def _count_row(kind: str, n: int) -> dict:
    formula, oracle, _ = COUNTS[kind]
    f, o = formula(n), oracle(n)
    return {"kind": kind, "n": n, "formula": f, "oracle": o, "match": f == o}


def cmd_count(args):
    jobs = []
    for kind in COUNTS:
        wanted = getattr(args, kind.replace("-", "_"))
        if wanted:
            lo = COUNTS[kind][2]
            for n in parse_range(wanted):
                if n < lo:
                    raise UsageError(f"{kind} needs n >= {lo}")
                jobs.append((kind, n))
    if not jobs:
        raise UsageError("choose at least one of " + ", ".join("--" + k for k in COUNTS))
    if args.threads and args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_count_row, *zip(*jobs)))
    else:
        rows = [_count_row(k, n) for k, n in jobs]
    payload = {"schema_version": SCHEMA_VERSION, "command": "count", "rows": rows,
               "ok": all(r["match"] for r in rows)}

    def text(p):
        out = [f"{'kind':<13}{'n':>4}{'formula':>12}{'oracle':>12}  match"]
        for r in rows:
            out.append(f"{r['kind']:<13}{r['n']:>4}{r['formula']:>12}{r['oracle']:>12}  {r['match']}")
        return "\n".join(out) + "\n"

    return payload, text


def cmd_conjugate(args):
    n = _require_n(args)
    w = parse_word(args.word, n).as_coxeter()
    path = path_to_phi(w)
    verified = same_action(conjugated(w, path.conjugator), phi(n), args.max_n)
    rows = [{"step": k + 1, "toggle": st.k, "kind": st.kind.value,
             "word": str(st.after), "orientation": str(coxeter_to_orientation(st.after))}
            for k, st in enumerate(path.steps)]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "conjugate",
        "n": n,
        "word": list(w.word),
        "conjugator": list(path.conjugator.word),
        "verified": verified,
        "rows": rows,
        "ok": verified,
    }

    def text(p):
        return (path.format_trace() + "\n"
                + f"phi = u^-1 w u on all states: {verified}\n")

    return payload, text


def cmd_zigzag(args):
    n = _require_n(args)
    w = parse_word(args.word, n)
    payload = {"schema_version": SCHEMA_VERSION, "command": "zigzag", "n": n,
               "word": list(w.word), "rows": []}
    lines = [f"fence poset on {n} elements, word {w.pretty()}"]
    ok = True
    if args.check_eta:
        bad = 0
        for s in enumerate_independent_sets(n, args.max_n):
            for i in range(1, n + 1):
                if eta(toggle(s, i)) != ideal_toggle(eta(s), i):
                    bad += 1
            if eta(phi(n)(s)) != apply_ideal_word(eta(s), promotion_word(n)):
                bad += 1
        payload["eta_violations"] = bad
        ok &= bad == 0
        lines.append(f"eta equivariance: {'ok' if bad == 0 else f'{bad} violations'} "
                     f"over {en.count_independent_sets(n)} states")
    if args.orbits:
        orbits = all_ideal_orbits(n, w, args.max_n)
        sizes = sorted(len(o) for o in orbits)
        phi_sizes = sorted(len(o) for o in all_orbits(n, phi(n), args.max_n))
        payload["sizes"] = sizes
        payload["matches_phi"] = sizes == phi_sizes
        ok &= sizes == phi_sizes
        for o in orbits:
            payload["rows"].append({"size": len(o), "representative": str(o.states[0]),
                                    "column_sums": " ".join(map(str, o.column_sums))})
        lines.append(f"{len(orbits)} orbits, sizes {sizes}; same as phi on independent sets: "
                     f"{sizes == phi_sizes}")
    if args.empty_orbit:
        o = ideal_orbit_of(OrderIdeal(n, 0), w)
        payload["empty_orbit"] = [str(I) for I in o.states]
        lines.append(f"orbit of the empty ideal (size {len(o)}):")
        for I in o.states:
            lines.append(str(I))
            lines.append(I.hasse())
    if args.homomesy:
        for name, f, expected in translated_statistics(n):
            rep = check_ideal_homomesy(n, w, f, args.max_n)
            good = rep.homomesic and rep.constant == expected
            ok &= good
            payload["rows"].append({"statistic": name, "homomesic": rep.homomesic,
                                    "constant": _fraction_json(rep.constant),
                                    "expected": str(expected)})
            lines.append(f"{name}: {rep.describe()} (expected {expected})")
    payload["ok"] = bool(ok)
    return payload, lambda p: "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="number of vertices")
    common.add_argument("-w", "--word", default="phi",
                        help='toggle word: "phi", "pro", "row" or indices like 3,4,2 (rightmost acts first)')
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-n", type=int, default=MAX_N, help="enumeration guard")
    common.add_argument("--threads", type=int, default=1, help="worker processes for count")
    common.add_argument("--seed", type=int, default=0, help="seed for random Coxeter words")

    parser = argparse.ArgumentParser(prog="pathtoggle", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", parents=[common], help="list all orbits of a word")
    p.add_argument("--boards", action="store_true", help="print every orbit board")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("homomesy", parents=[common], help="check homomesy of statistics")
    p.add_argument("-f", "--statistic", action="append", required=True,
                   help='linear statistic such as "2x1+x2" or "1/2x3-x4"; repeatable')
    p.add_argument("--random", type=int, default=0, help="also check this many random Coxeter words")
    p.set_defaults(func=cmd_homomesy)

    p = sub.add_parser("snakes", parents=[common], help="snake decomposition and reconstruction")
    p.add_argument("--composition", help="snake composition such as 221121")
    p.add_argument("--start", help="start set such as 1010100 (phi-orbit)")
    p.add_argument("--table", type=int, metavar="M", help="orbit-size classification up to size M")
    p.set_defaults(func=cmd_snakes)

    p = sub.add_parser("count", parents=[common], help="closed formulas against brute force")
    for kind in COUNTS:
        p.add_argument(f"--{kind}", metavar="RANGE", help='n or "lo..hi"')
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("conjugate", parents=[common], help="conjugation path from a Coxeter word to phi")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("zigzag", parents=[common], help="order ideals of the fence poset")
    p.add_argument("--check-eta", action="store_true")
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--empty-orbit", action="store_true")
    p.add_argument("--homomesy", action="store_true")
    p.set_defaults(func=cmd_zigzag)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        payload, text_fn = args.func(args)
    except (UsageError, CapacityError, ValueError) as exc:
        print(f"pathtoggle {args.command}: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.format, text_fn, out)
    return 0 if payload.get("ok", True) else 1


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout; used by tests and demos."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
