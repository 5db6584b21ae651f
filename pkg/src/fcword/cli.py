"""Command line front end (installed as ``fc``).

Subcommands:

  check   is each word fully commutative?
  nf      canonical normal-form record for each word
  enum    stream normal-form records for all FC elements up to a length
  count   how many FC elements up to a length (or in a finite system)
  verify  run the acceptance sweeps

Exit codes: 0 success / answered query, 1 verification failure,
2 invalid input, 3 domain precondition violated (e.g. a word that is
not fully commutative handed to ``nf``).

Words are space-separated letters with the affine cycle generator
spelled "a", so "2 1 a" in the rank-3 affine system means letters
(2, 1, 4).  ``enum`` and ``verify`` write JSON lines; when --out names
an existing file, records already present are kept and their ids are
skipped, which makes interrupted runs resumable.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys

from . import fc, normalform, perm, verify
from .coxeter import (
    AffineA,
    DomainError,
    FiniteA,
    InputError,
    parse_word,
    render_word,
    type_from_string,
)


def _coxeter_type(text: str):
    try:
        return type_from_string(text)
    except (InputError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nf_record(ctype, x) -> dict:
    """Normal-form record for an element; affine elements whose support
    avoids the cycle generator get the finite run record."""
    if isinstance(ctype, AffineA):
        if ctype.n + 1 in perm.canonical_reduced_word(x):
            return normalform.affine_nf_record(normalform.affine_nf(x))
    return normalform.finite_nf_record(normalform.finite_nf(x))


def _known_ids(path: str, key: str) -> set:
    """Ids already present in a JSONL checkpoint file.  Unreadable lines
    (say, a partial write from an interrupted run) are ignored."""
    ids = set()
    if not os.path.exists(path):
        return ids
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue
            if isinstance(rec, dict) and key in rec:
                ids.add(rec[key])
    return ids


def cmd_check(args) -> int:
    ct = args.type
    for text in args.word:
        letters = parse_word(ct, text)
        rec = {
            "type": "check",
            "word": render_word(ct, letters),
            "reduced": fc.is_reduced(ct, letters),
            "fc": fc.is_fully_commutative(ct, letters, method=args.mode),
        }
        print(json.dumps(rec))
    return 0


def cmd_nf(args) -> int:
    ct = args.type
    for text in args.word:
        letters = parse_word(ct, text)
        x = perm.word_to_element(ct, letters)
        print(json.dumps(_nf_record(ct, x)))
    return 0


def cmd_enum(args) -> int:
    ct = args.type
    max_len = args.max_len
    if max_len is None:
        if isinstance(ct, AffineA):
            raise InputError("--max-len is required for an affine system")
        max_len = ct.n * (ct.n + 1) // 2
    entries = fc.enumerate_fc(ct, max_len)
    if args.out is None:
        for entry in entries:
            print(json.dumps(_nf_record(ct, entry.element)))
        return 0
    done = _known_ids(args.out, "word")
    written = skipped = 0
    with open(args.out, "a", encoding="utf-8") as fh:
        for entry in entries:
            rec = _nf_record(ct, entry.element)
            if rec["word"] in done:
                skipped += 1
                continue
            fh.write(json.dumps(rec) + "\n")
            written += 1
    print(f"{written} records written, {skipped} already present", file=sys.stderr)
    return 0


def cmd_count(args) -> int:
    ct = args.type
    if args.max_len is None:
        if isinstance(ct, AffineA):
            raise InputError("--max-len is required for an affine system")
        print(fc.count_fc_finite(ct.n))
        return 0
    print(len(fc.enumerate_fc(ct, args.max_len)))
    return 0


def _run_criterion(name: str) -> dict:
    for rec in verify.run_criteria(only=[name]):
        return rec
    raise RuntimeError(f"criterion {name} produced no record")


def cmd_verify(args) -> int:
    ids = verify.criterion_ids()
    wanted = list(ids)
    if args.only:
        chosen = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = [s for s in chosen if s not in ids]
        if unknown:
            raise InputError(f"unknown criteria: {', '.join(unknown)}")
        wanted = [name for name in ids if name in chosen]

    cached: dict[str, dict] = {}
    if args.out:
        for line in _iter_jsonl(args.out):
            if line.get("passed") and line.get("id") in ids:
                cached[line["id"]] = line

    to_run = [name for name in wanted if name not in cached]
    if args.jobs > 1 and len(to_run) > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            fresh = dict(zip(to_run, pool.map(_run_criterion, to_run)))
    else:
        fresh = {name: _run_criterion(name) for name in to_run}

    sink = open(args.out, "a", encoding="utf-8") if args.out else None
    all_ok = True
    try:
        for name in wanted:
            rec = cached.get(name) or fresh[name]
            state = "PASS" if rec["passed"] else "FAIL"
            note = " (cached)" if name in cached else ""
            print(f"{state} {rec['index']:>2} {rec['id']}: {rec['summary']}{note}")
            all_ok = all_ok and rec["passed"]
            if sink is not None and name not in cached:
                sink.write(json.dumps(rec) + "\n")
    finally:
        if sink is not None:
            sink.close()
    return 0 if all_ok else 1


def _iter_jsonl(path: str):
    if not os.path.exists(path):
        return
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue
            if isinstance(rec, dict):
                yield rec


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fc", description="fully commutative elements and normal forms"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument(
        "--type",
        required=True,
        type=_coxeter_type,
        help="coxeter system, finite-a:N or affine-a:N",
    )
    typed.add_argument(
        "--cap",
        type=int,
        help="commutation class size bound (overrides FCWORD_CAP)",
    )

    p = sub.add_parser("check", parents=[typed], help="test full commutativity")
    p.add_argument("word", nargs="+", help='word text, e.g. "2 1 a"')
    p.add_argument("--mode", choices=("fast", "class"), default="fast")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("nf", parents=[typed], help="canonical normal form records")
    p.add_argument("word", nargs="+")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("enum", parents=[typed], help="list FC elements as JSONL")
    p.add_argument("--max-len", type=int)
    p.add_argument("--out", help="JSONL file; existing records are skipped")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("count", parents=[typed], help="count FC elements")
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run the acceptance sweeps")
    p.add_argument("--only", help="comma-separated criterion ids")
    p.add_argument("--out", help="JSONL checkpoint; passed criteria are skipped")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("FCWORD_CAP")
    if getattr(args, "cap", None) is not None:
        if args.cap < 1:
            print("error: --cap must be positive", file=sys.stderr)
            return 2
        os.environ["FCWORD_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    finally:
        if getattr(args, "cap", None) is not None:
            if saved is None:
                os.environ.pop("FCWORD_CAP", None)
            else:
                os.environ["FCWORD_CAP"] = saved


if __name__ == "__main__":
    sys.exit(main())
