"""Command-line interface.

Five subcommands cover the batch workflows: ``construct`` builds and
verifies a code and writes its record; ``verify`` re-checks a record;
``distance`` computes a row-distance profile and writes it as JSON, CSV,
and a rendered figure; ``encode`` turns an information sequence into a
codeword sequence; ``weight`` reports the weights of a block sequence.

Every command writes identical bytes on repeated runs with the same
inputs.  Exit statuses: 0 success, 2 validation failure (bad parameters or
failed checks), 3 unreadable or malformed files, 4 exhausted search
budgets.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import BudgetExceeded, RecordError
from .field import make_field
from .matrices import hamming_weight, rank_norm, sum_rank_weight
from .pum import (
    build_code,
    check_minimal_basic,
    encode_sequence,
    generator_checks,
    min_field_size,
    rate_check,
    verify_gabidulin_chain,
)
from .distances import row_distance_profile
from .records import (
    BLOCKSEQ_FORMAT,
    CODE_FORMAT,
    blockseq_from_record,
    blockseq_to_record,
    code_from_record,
    code_to_record,
    load_record,
    profile_to_csv,
    profile_to_record,
    save_record,
    verify_report_to_record,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_BUDGET = 4


def _parse_modulus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(
            f"modulus must be comma-separated integers, got {text!r}") from exc


def _print_checks(items) -> bool:
    all_ok = True
    for item in items:
        mark = "ok  " if item.ok else "FAIL"
        print(f"  {mark} {item.name}: {item.detail}")
        all_ok = all_ok and item.ok
    return all_ok


def cmd_construct(args) -> int:
    s = args.s if args.s is not None else min_field_size(args.n, args.k,
                                                         args.mH)
    modulus = _parse_modulus(args.modulus) if args.modulus else None
    field = make_field(args.q, s, modulus)
    code = build_code(field, args.n, args.k, args.k1, args.mH)

    rc = rate_check(args.n, args.k, args.k1, args.mH)
    chain = verify_gabidulin_chain(code)
    gen = generator_checks(field, code.H_blocks, code.G0, code.G1,
                           args.k, args.k1)
    minimal = check_minimal_basic(code)
    ok = (chain.ok and all(c.ok for c in gen) and minimal.ok)
    print(f"constructed {rc.kind} code (n={args.n}, k={args.k}, "
          f"k1={args.k1}, mH={args.mH}) over F_{args.q}^{s}")
    _print_checks(chain.checks)
    _print_checks(gen)
    mark = "ok  " if minimal.ok else "FAIL"
    print(f"  {mark} minimal_basic: constraint length {minimal.mu}, "
          f"expected {minimal.expected}")
    if not ok:
        print("error: construction checks failed; record not written",
              file=sys.stderr)
        return EXIT_VALIDATION
    save_record(args.out, code_to_record(code))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    data = load_record(args.code_file, CODE_FORMAT)
    code = code_from_record(data)
    p = code.params
    rc = rate_check(p.n, p.k, p.k1, p.mh)
    chain = verify_gabidulin_chain(code)
    gen = generator_checks(p.field, code.H_blocks, code.G0, code.G1,
                           p.k, p.k1)
    minimal = None
    minimal_error = None
    try:
        minimal = check_minimal_basic(code)
    except (ValueError, IndexError) as exc:
        minimal_error = str(exc)

    ok = (rc.kind != "invalid" and chain.ok and all(c.ok for c in gen)
          and minimal is not None and minimal.ok)

    out = args.out or str(Path(args.code_file).with_suffix(".verify.json"))
    save_record(out, verify_report_to_record(rc, chain, gen, minimal, ok,
                                             minimal_error=minimal_error))

    mark = "ok  " if rc.kind != "invalid" else "FAIL"
    print(f"  {mark} rate_check: {rc.detail}")
    _print_checks(chain.checks)
    _print_checks(gen)
    if minimal is None:
        print(f"  FAIL minimal_basic: not computable: {minimal_error}")
    else:
        mark = "ok  " if minimal.ok else "FAIL"
        print(f"  {mark} minimal_basic: constraint length {minimal.mu}, "
              f"expected {minimal.expected}")
    print(f"wrote {out}")
    print("all checks passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_distance(args) -> int:
    data = load_record(args.code_file, CODE_FORMAT)
    code = code_from_record(data)
    profile = row_distance_profile(code, args.L, args.metric,
                                   state_budget=args.budget,
                                   max_inputs=args.max_inputs)
    out = Path(args.out) if args.out else \
        Path(args.code_file).with_suffix(".profile.json")
    save_record(out, profile_to_record(profile, code.params.field))
    csv_path = out.with_suffix(".csv")
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write(profile_to_csv(profile))
    written = [str(out), str(csv_path)]
    if not args.no_plot:
        from .figures import render_profile_figure
        png_path = out.with_suffix(".png")
        render_profile_figure(profile, png_path)
        written.append(str(png_path))

    def show(x):
        return "-" if x is None else x

    print(f"metric {profile.metric}, orders 1..{profile.L}")
    print("  d_row: " + " ".join(str(show(d)) for d in profile.d_row))
    if profile.d_free is None:
        print("  every order is empty (no nonzero input parks the encoder)")
    else:
        print(f"  free distance {profile.d_free} ({profile.status})")
        if profile.slope_estimate is not None:
            print(f"  slope estimate {profile.slope_estimate} over window "
                  f"{profile.window[0]}..{profile.window[1]}")
    if profile.bounds is not None:
        b = profile.bounds
        print(f"  bounds [{b.kind}]: free distance <= {b.d_free_bound}, "
              f"slope <= {b.slope_bound}")
    print("wrote " + ", ".join(written))
    return EXIT_OK


def cmd_encode(args) -> int:
    data = load_record(args.code_file, CODE_FORMAT)
    code = code_from_record(data)
    seq_field, blocks = blockseq_from_record(load_record(args.info_file,
                                                         BLOCKSEQ_FORMAT))
    if seq_field != code.params.field:
        raise ValueError(
            "information sequence and code use different fields "
            f"(q={seq_field.q}, s={seq_field.s} vs q={code.params.field.q}, "
            f"s={code.params.field.s})")
    codeword = encode_sequence(code, blocks)
    out = args.out or str(Path(args.info_file).with_suffix(".encoded.json"))
    save_record(out, blockseq_to_record(code.params.field, codeword))
    f = code.params.field
    print(f"encoded {len(blocks)} information blocks into "
          f"{len(codeword)} code blocks (flush included)")
    print(f"  sum-rank weight {sum_rank_weight(f, codeword)}, "
          f"Hamming weight {hamming_weight(codeword)}")
    print(f"wrote {out}")
    return EXIT_OK


def cmd_weight(args) -> int:
    field, blocks = blockseq_from_record(load_record(args.seq_file,
                                                     BLOCKSEQ_FORMAT))
    ranks = [rank_norm(field, b) for b in blocks]
    hams = [sum(1 for x in b if x) for b in blocks]
    for i, (r, h) in enumerate(zip(ranks, hams)):
        print(f"  block {i}: rank {r}, hamming {h}")
    print(f"sum-rank weight {sum(ranks)}, Hamming weight {sum(hams)} "
          f"({len(blocks)} blocks over F_{field.q}^{field.s})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pumrank",
        description="Construct memory-1 convolutional codes from Gabidulin "
                    "block codes and compute their exact sum-rank distance "
                    "profiles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct",
                       help="build a code, verify it, and write its record")
    p.add_argument("--n", type=int, required=True, help="block length")
    p.add_argument("--k", type=int, required=True, help="information length")
    p.add_argument("--k1", type=int, required=True,
                   help="rank of the memory generator matrix")
    p.add_argument("--mH", type=int, required=True,
                   help="number of delayed parity-check blocks")
    p.add_argument("--q", type=int, required=True, help="base field size")
    p.add_argument("--s", type=int, default=None,
                   help="extension degree (default: smallest valid)")
    p.add_argument("--modulus", default=None,
                   help="comma-separated modulus coefficients, low degree "
                        "first (default: lexicographically first "
                        "irreducible)")
    p.add_argument("--out", default="code.json", help="output record path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-run all checks on a code record")
    p.add_argument("code_file", help="code record to verify")
    p.add_argument("--out", default=None,
                   help="report path (default: <code>.verify.json)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance",
                       help="compute a row-distance profile; writes JSON, "
                            "CSV, and a PNG figure")
    p.add_argument("code_file", help="code record to analyze")
    p.add_argument("--L", type=int, required=True,
                   help="largest order to compute")
    p.add_argument("--metric", choices=("sum_rank", "hamming"),
                   default="sum_rank")
    p.add_argument("--budget", type=int, default=1 << 16,
                   help="largest allowed collapsed state count")
    p.add_argument("--max-inputs", type=int, default=1 << 20,
                   help="largest allowed per-layer input count")
    p.add_argument("--out", default=None,
                   help="profile path (default: <code>.profile.json); the "
                        "CSV and PNG take the same name with their own "
                        "suffixes")
    p.add_argument("--no-plot", action="store_true",
                   help="skip the PNG figure")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("encode",
                       help="encode an information sequence with flush")
    p.add_argument("code_file", help="code record")
    p.add_argument("info_file", help="information block-sequence record")
    p.add_argument("--out", default=None,
                   help="output path (default: <info>.encoded.json)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("weight",
                       help="sum-rank and Hamming weights of a sequence")
    p.add_argument("seq_file", help="block-sequence record")
    p.set_defaults(func=cmd_weight)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RecordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
