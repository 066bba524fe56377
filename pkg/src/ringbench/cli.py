"""Command-line interface.

Subcommands::

    classify RING IDEAL     full predicate record for one ideal
    ideals RING             the ideal lattice with prime/maximal/radical tags
    verify                  run the theorem suite over a corpus
    search separation       find ideals in class A but not class B
    search nq-question      mine the open annihilator question
    report FILE             render a saved JSON verify report as text

Exit codes: 0 success (and zero violations), 1 violations found, 2 parse
error, 3 semantic error, 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classifiers import PREDICATES, classify
from .dsl import build_ring, parse_ideal, parse_ring
from .errors import ParseError, ResourceLimitError, RingbenchError
from .ideal_algebra import all_ideals, maximal_ideals, radical
from .ring_core import DEFAULT_MAX_ORDER
from .theorem_suite import (
    Corpus,
    CorpusConfig,
    SuiteResult,
    VERIFIER_ORDER,
    default_corpus_texts,
    resolve_theorems,
    run_suite,
)

PREDICATE_ALIASES = {
    "weakly_1AP": "weakly_one_absorbing_primary",
    "1AP": "one_absorbing_primary",
    "weakly_2AP_primary": "weakly_two_absorbing_primary",
    "2AP_primary": "two_absorbing_primary",
    "weakly_2AP": "weakly_two_absorbing",
    "2AP": "two_absorbing",
}


def _canon_predicate(name: str) -> str:
    got = PREDICATE_ALIASES.get(name, name)
    if got not in PREDICATES:
        raise RingbenchError(
            f"unknown predicate {name!r}; choose from "
            f"{', '.join(PREDICATES)} (aliases: {', '.join(PREDICATE_ALIASES)})"
        )
    return got


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _corpus_from_args(args) -> Corpus:
    if args.corpus:
        lines = Path(args.corpus).read_text().splitlines()
        texts = []
        for line in lines:
            body = line.split("#", 1)[0].strip()
            if body:
                parse_ring(body)  # surface parse errors with positions now
                texts.append(body)
        return Corpus(tuple(texts), args.max_order)
    cfg = CorpusConfig(max_order=args.max_order)
    return Corpus(tuple(default_corpus_texts(cfg)), args.max_order)


def cmd_classify(args) -> int:
    built = build_ring(parse_ring(args.ring), max_order=args.max_order)
    ideal = built.resolve_ideal(parse_ideal(args.ideal))
    record = classify(ideal)
    rad = radical(ideal)
    ring = built.ring
    payload = {
        "schema": "ringbench-classify/1",
        "ring": args.ring,
        "order": ring.order,
        "ideal": list(ring.names_of(ideal.elems)),
        "ideal_indices": list(ideal.elems),
        "radical": list(ring.names_of(rad.elems)),
        "verdicts": dict(record.verdicts),
        "witnesses": {k: list(ring.names_of(w)) for k, w in record.witnesses.items()},
        "witness_indices": {k: list(w) for k, w in record.witnesses.items()},
    }
    if args.json:
        sys.stdout.write(_dump(payload))
        return 0
    print(f"ring  : {ring.label} (order {ring.order})")
    print(f"ideal : {{{', '.join(payload['ideal'])}}}  ({len(ideal.elems)} elements)")
    print(f"radical: {{{', '.join(payload['radical'])}}}")
    for name in PREDICATES:
        if record.verdicts[name]:
            print(f"  [ok] {name}")
        else:
            witness = ", ".join(ring.names_of(record.witnesses[name]))
            print(f"  [ x] {name}  witness ({witness})")
    return 0


def cmd_ideals(args) -> int:
    built = build_ring(parse_ring(args.ring), max_order=args.max_order)
    ring = built.ring
    lattice = all_ideals(ring, max_order=args.max_order)
    maximal = {m.elem_set for m in maximal_ideals(ring, max_order=args.max_order)}
    rows = []
    for pos, ideal in enumerate(lattice):
        tags = {
            "proper": ideal.is_proper,
            "prime": ideal.is_proper and classify(ideal).verdicts["prime"],
            "maximal": ideal.elem_set in maximal,
            "radical": radical(ideal).elems == ideal.elems if ideal.is_proper else True,
        }
        rows.append(
            {
                "index": pos,
                "size": len(ideal.elems),
                "elems": list(ring.names_of(ideal.elems)),
                **tags,
            }
        )
    if args.json:
        sys.stdout.write(
            _dump(
                {
                    "schema": "ringbench-ideals/1",
                    "ring": args.ring,
                    "order": ring.order,
                    "count": len(rows),
                    "ideals": rows,
                }
            )
        )
        return 0
    print(f"{ring.label}: {len(rows)} ideals (ring order {ring.order})")
    for row in rows:
        tags = [t for t in ("prime", "maximal", "radical") if row[t]]
        if not row["proper"]:
            tags = ["unit ideal"]
        body = ", ".join(row["elems"][:8]) + (", ..." if row["size"] > 8 else "")
        print(f"  [{row['index']:2d}] |{row['size']:3d}| {{{body}}} {' '.join(tags)}")
    return 0


def _print_suite(result: SuiteResult):
    for rep in result.reports:
        flag = "pass" if not rep.violations else "FAIL"
        print(
            f"  {rep.theorem:28s} instances={rep.instances:8d} skips={rep.skips:8d} "
            f"violations={len(rep.violations):4d} [{flag}] ({rep.elapsed:.1f}s)"
        )
        for note in rep.notes:
            print(f"      note: {note}")
        for v in rep.violations[:3]:
            print(f"      violation: {v['ring']}: {v['detail']}")
        if len(rep.violations) > 3:
            print(f"      ... and {len(rep.violations) - 3} more")
    for note in result.notes:
        print(f"  corpus note: {note}")
    print(
        f"  total: {len(result.corpus)} rings, "
        f"{sum(r.instances for r in result.reports)} instances, "
        f"{result.total_violations} violations, {result.elapsed:.1f}s"
    )


def cmd_verify(args) -> int:
    corpus = _corpus_from_args(args)
    theorems = resolve_theorems(args.theorems)
    result = run_suite(corpus, theorems=theorems, jobs=args.jobs)
    if args.json:
        sys.stdout.write(_dump(result.to_dict()))
    else:
        print(f"verify: {len(corpus.texts)} corpus rings, theorems: {', '.join(theorems)}")
        _print_suite(result)
    if args.output:
        Path(args.output).write_text(_dump(result.to_dict()))
    return 1 if result.total_violations else 0


def cmd_search(args) -> int:
    corpus = _corpus_from_args(args)
    if args.mode == "nq-question":
        result = run_suite(corpus, theorems=["nq_question"], jobs=args.jobs)
        rep = result.reports[0]
        payload = {
            "schema": "ringbench-search/1",
            "mode": "nq-question",
            "corpus_size": len(corpus.texts),
            "candidates": rep.data.get("candidates", []),
            "candidate_count": rep.data.get("candidate_count", 0),
            "all_candidates_have_maximal_annihilator": rep.data.get(
                "all_candidates_have_maximal_annihilator"
            ),
            "notes": rep.notes,
        }
        if args.json:
            sys.stdout.write(_dump(payload))
        else:
            print(f"nq-question miner over {len(corpus.texts)} rings:")
            for c in payload["candidates"]:
                print(
                    f"  {c['ring']}: ideal {{{', '.join(c['ideal'])}}} "
                    f"maximal-annihilator={c['has_maximal_annihilator']} "
                    f"replay={c['replay_confirms']}"
                )
            for note in rep.notes:
                print(f"  {note}")
        return 0
    # separation mode
    pred_a = _canon_predicate(args.a)
    pred_b = _canon_predicate(args.b)
    hits = []
    for text in corpus.texts:
        built = build_ring(text, max_order=corpus.max_order)
        for ideal in all_ideals(built.ring, max_order=corpus.max_order):
            if not ideal.is_proper:
                continue
            rec = classify(ideal).verdicts
            if rec[pred_a] and not rec[pred_b]:
                hits.append(
                    {
                        "ring": text,
                        "ideal": list(built.ring.names_of(ideal.elems)),
                        "witness": list(
                            built.ring.names_of(classify(ideal).witnesses[pred_b])
                        ),
                    }
                )
    payload = {
        "schema": "ringbench-search/1",
        "mode": "separation",
        "a": pred_a,
        "b": pred_b,
        "corpus_size": len(corpus.texts),
        "hits": hits,
    }
    if args.json:
        sys.stdout.write(_dump(payload))
    else:
        print(f"separation {pred_a} minus {pred_b}: {len(hits)} hit(s)")
        for h in hits:
            print(f"  {h['ring']}: {{{', '.join(h['ideal'])}}} witness ({', '.join(h['witness'])})")
    return 0


def cmd_report(args) -> int:
    try:
        payload = json.loads(Path(args.file).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON report: {exc}", 0) from exc
    if payload.get("schema") != "ringbench-verify/1":
        raise RingbenchError(f"unsupported report schema {payload.get('schema')!r}")
    result = SuiteResult.from_dict(payload)
    if args.json:
        sys.stdout.write(_dump(result.to_dict()))
        return 0
    print(f"report: {len(result.corpus)} corpus rings")
    _print_suite(result)
    return 1 if result.total_violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringbench",
        description="finite commutative ring workbench: ideal classification "
        "and exhaustive theorem verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, corpus=False):
        p.add_argument("--json", action="store_true", help="emit deterministic JSON")
        p.add_argument(
            "--max-order",
            type=int,
            default=DEFAULT_MAX_ORDER,
            help=f"ring order bound (default {DEFAULT_MAX_ORDER})",
        )
        if corpus:
            p.add_argument(
                "--corpus",
                help="file with one ring expression per line (default: built-in corpus)",
            )
            p.add_argument("--jobs", type=int, default=1, help="parallel worker count")

    p = sub.add_parser("classify", help="classify one ideal")
    p.add_argument("ring", help='ring expression, e.g. "Z12" or "prod(Z2,Z3)"')
    p.add_argument("ideal", help='ideal generators, e.g. "(4)" or "((1,0))"')
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("ideals", help="list the ideal lattice")
    p.add_argument("ring")
    common(p)
    p.set_defaults(fn=cmd_ideals)

    p = sub.add_parser("verify", help="run the theorem suite")
    common(p, corpus=True)
    p.add_argument(
        "--theorems",
        help=f"comma-separated subset of: {', '.join(VERIFIER_ORDER)}",
    )
    p.add_argument("--output", help="also write the JSON report to this file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="counterexample / separation mining")
    p.add_argument("mode", choices=["separation", "nq-question"])
    p.add_argument("--a", help="predicate that must hold (separation mode)")
    p.add_argument("--b", help="predicate that must fail (separation mode)")
    common(p, corpus=True)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("report", help="render a saved JSON verify report")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "search" and args.mode == "separation":
        if not args.a or not args.b:
            print("search separation requires --a and --b", file=sys.stderr)
            return 3
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource bound exceeded: {exc} (partial progress discarded)", file=sys.stderr)
        return 4
    except RingbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
