"""Command-line entry point.

Subcommands parse the text file formats, run one operation or a named
verification suite, and print text or TSV tables.  Identical inputs and
seed produce identical reports; the exit code is 0 exactly when every
check passes.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import dynprops, files, suites, zline
from .errors import FinshiftError
from .freext import base_extract, tower_context, tower_extend
from .shiftspace import DEFAULT_CANDIDATE_BUDGET, enumerate_sft

BUDGET_ENV_VAR = "FINSHIFT_BUDGET"


def _entropy_line(value: dynprops.EntropyValue) -> str:
    return f"{value} ≈ {float(value):.6f}"


def _emit_table(rows, fmt: str) -> None:
    rows = [tuple(str(c) for c in row) for row in rows]
    if fmt == "tsv":
        for row in rows:
            print("\t".join(row))
        return
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


def _load_space(path, budget):
    spec = files.read_sft(path)
    return spec, enumerate_sft(spec, budget=budget)


def _cmd_group(args) -> int:
    g = files.read_group(args.file)
    print(f"valid group of order {g.order}")
    return 0


def _cmd_sft(args) -> int:
    spec, space = _load_space(args.file, args.budget)
    if args.sft_action == "enum":
        rows = [("index", "configuration")]
        for i, config in enumerate(sorted(space.configs)):
            rows.append((i, " ".join(spec.alphabet.symbols[s] for s in config)))
        _emit_table(rows, args.format)
        print(f"{len(space.configs)} configurations")
        return 0
    print(_entropy_line(dynprops.entropy(space)))
    return 0


def _cmd_extend(args) -> int:
    spec, space = _load_space(args.sft, args.budget)
    tower = files.read_tower(args.tower)
    if spec.group != tower.levels[args.frm]:
        raise FinshiftError(
            f"sft group does not match tower level {args.frm}"
        )
    ext = tower_extend(space, tower, args.frm, args.to, budget=args.budget)
    print(f"extended from level {args.frm} to level {args.to}")
    print(f"{len(ext.configs)} configurations")
    print(_entropy_line(dynprops.entropy(ext)))
    return 0


def _cmd_extract(args) -> int:
    spec, space = _load_space(args.space, args.budget)
    tower = files.read_tower(args.tower)
    ambient_level = next(
        (j for j, lvl in enumerate(tower.levels) if lvl == spec.group), None
    )
    if ambient_level is None:
        raise FinshiftError("the space's group is not a tower level")
    ctx = tower_context(tower, args.level, ambient_level)
    result = base_extract(space, spec.forbidden_shape, ctx, budget=args.budget)
    if not result.ok:
        print(f"FAIL: not a free extension; witness {result.witness}")
        return 1
    print(f"base spec on level {args.level} "
          f"(group of order {ctx.base_group.order})")
    print(f"shape {' '.join(str(f) for f in result.spec.forbidden_shape)}")
    for w in sorted(result.spec.forbidden, key=lambda w: w.symbols):
        print("forbid " + " ".join(spec.alphabet.symbols[s] for s in w.symbols))
    return 0


def _cmd_check(args) -> int:
    spec, space = _load_space(args.sft, args.budget)
    kind = args.check_kind
    if kind == "si":
        if args.witness is not None:
            k = tuple(int(t) for t in args.witness.split(","))
            verdict = dynprops.strongly_irreducible_witness(space, k)
            if verdict.ok:
                print(f"strongly irreducible with witness set {sorted(set(k))}")
                return 0
            u, v = verdict.counterexample
            print(f"FAIL: counterexample patterns {u.as_dict()} and {v.as_dict()}")
            return 1
        minimal = dynprops.minimal_si_witnesses(space)
        rows = [("witness",)] + [
            (" ".join(str(a) for a in k) or "(empty)",) for k in minimal
        ]
        _emit_table(rows, args.format)
        return 0 if minimal else 1
    if kind == "entmin":
        verdict = dynprops.is_entropy_minimal(space)
        if verdict.ok:
            print("entropy minimal")
            return 0
        print(f"FAIL: proper subshift with {len(verdict.counterexample.configs)} "
              "configurations has equal entropy")
        return 1
    if kind == "zero":
        print(dynprops.zero_entropy_classify(space))
        return 0
    if kind == "aut":
        aut = dynprops.automorphism_group(space, cap=args.aut_cap)
        print(f"automorphism group order {aut.order}")
        _emit_table([row for row in aut.composition], args.format)
        return 0
    verdict = dynprops.mme_unique_check(space, grid=args.grid, budget=args.budget)
    print(f"max measure entropy {verdict.max_entropy:.6f}")
    print(f"uniform attains the maximum: {verdict.uniform_is_max}")
    print(f"unique maximizer: {verdict.unique}")
    if not verdict.unique:
        print(f"{len(verdict.maximizers)} maximizers")
    return 0 if verdict.uniform_is_max else 1


def _cmd_entropy_set(args) -> int:
    tower = files.read_tower(args.tower)
    values = dynprops.entropy_set(
        tower, max_level=args.max_level, max_n=args.max_n, budget=args.budget
    )
    rows = [("count", "denom", "value")]
    for v in sorted(values, key=lambda v: (float(v), v.count)):
        rows.append((v.count, v.denom, f"{float(v):.6f}"))
    _emit_table(rows, args.format)
    return 0


def _cmd_zline(args) -> int:
    if args.zline_kind == "golden":
        n = args.n if args.n is not None else 20
        rows = [("n", "estimate")]
        for m in range(3, n + 1):
            rows.append((m, f"{zline.golden_mean_entropy_estimate(m):.6f}"))
        _emit_table(rows, args.format)
        print(f"reference log(phi) = {zline.LOG_GOLDEN:.6f}")
        return 0
    if args.zline_kind == "even":
        n = args.n if args.n is not None else 12
        rows = [("n", "admissible-words")]
        for m in range(1, n + 1):
            zline.even_cover_factor_check(m)
            rows.append((m, len(zline._cover_words(m))))
        _emit_table(rows, args.format)
        print("cover and oracle agree at every length")
        return 0
    k = args.n if args.n is not None else 10
    rows = [("k", "witness")]
    for m in range(2, k + 1):
        word = zline.sft_gap_witness(m)
        rows.append((m, "".join(str(s) for s in word)))
    _emit_table(rows, args.format)
    return 0


def _cmd_verify(args) -> int:
    report = suites.run_suite(args.suite, seed=args.seed)
    print(report.render())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finshift",
        description="symbolic dynamics on finite groups and towers",
    )
    parser.add_argument("--budget", type=int, default=None,
                        help="search budget (overrides $" + BUDGET_ENV_VAR + ")")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks")
    parser.add_argument("--format", choices=("text", "tsv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="group file operations")
    gsub = p.add_subparsers(dest="group_action", required=True)
    pv = gsub.add_parser("validate", help="parse and validate a group file")
    pv.add_argument("file")
    pv.set_defaults(fn=_cmd_group)

    p = sub.add_parser("sft", help="SFT file operations")
    ssub = p.add_subparsers(dest="sft_action", required=True)
    pe = ssub.add_parser("enum", help="enumerate the configurations")
    pe.add_argument("file")
    pe.set_defaults(fn=_cmd_sft)
    ph = ssub.add_parser("entropy", help="exact entropy with approximation")
    ph.add_argument("file")
    ph.set_defaults(fn=_cmd_sft)

    p = sub.add_parser("extend", help="free extension along a tower")
    p.add_argument("sft")
    p.add_argument("tower")
    p.add_argument("frm", type=int, metavar="from")
    p.add_argument("to", type=int)
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("extract", help="recover a base spec from an extension")
    p.add_argument("space")
    p.add_argument("tower")
    p.add_argument("level", type=int)
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("check", help="dynamical property checks")
    p.add_argument("check_kind", choices=("si", "entmin", "zero", "aut", "mme"))
    p.add_argument("sft")
    p.add_argument("--witness", default=None,
                   help="comma-separated witness set for the si check")
    p.add_argument("--grid", type=int, default=100,
                   help="simplex resolution for the mme check")
    p.add_argument("--aut-cap", type=int, default=dynprops.DEFAULT_AUT_CAP)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("entropy-set", help="truncated entropy set of a tower")
    p.add_argument("tower")
    p.add_argument("--max-level", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(fn=_cmd_entropy_set)

    p = sub.add_parser("zline", help="integer-line truncation demos")
    p.add_argument("zline_kind", choices=("golden", "even", "gap"))
    p.add_argument("n", type=int, nargs="?", default=None)
    p.set_defaults(fn=_cmd_zline)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=suites.suite_names())
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = int(
            os.environ.get(BUDGET_ENV_VAR, DEFAULT_CANDIDATE_BUDGET)
        )
    try:
        return args.fn(args)
    except FinshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
