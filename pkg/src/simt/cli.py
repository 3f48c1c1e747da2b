"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from simt import construct, fixtures, ratfg, stephen
from simt.benois import SpecialInversePresentation, Verdict, benois_report
from simt.errors import NoValidRotation, NotPositive, ParseError, SimtError, WordSyntaxError
from simt.fgword import Alphabet, Word, classify
from simt.presfile import format_presentation, load
from simt.quotient import non_group_certificate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _word(text: str) -> Word:
    return Word.parse(text)


def _limits(args) -> stephen.Limits:
    return stephen.Limits(args.max_rounds, args.max_vertices)


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=False))


def cmd_benois(args) -> int:
    pres = load(args.file).presentation
    report = benois_report(pres)
    if args.refine:
        search = stephen.StephenSearch(pres, _limits(args))
        report.refined = [
            stephen.refine_factorization(pres, f, search=search) for f in report.factorizations
        ]
    if report.group_verdict is not Verdict.GROUP:
        cert = non_group_certificate(pres)
        if cert:
            report.certificate = cert
    if args.dot:
        oracle = ratfg.SubmonoidOracle(report.generators)
        Path(args.dot).write_text(ratfg.to_dot(oracle.automaton), encoding="utf-8")
    if args.json:
        _emit_json(report.to_json())
        return EXIT_OK
    print(f"presentation: {pres}")
    print("generators: " + " ".join(str(x) for x in report.generators))
    for i, f in enumerate(report.factorizations):
        print(f"relator: {f.relator}")
        print(f"benois: {f}")
        if report.refined:
            print(f"refined: {report.refined[i]}")
    print("invertible: " + " ".join(f"{k}={v.value}" for k, v in report.invertible_letters.items()))
    print(f"group_verdict: {report.group_verdict.value}")
    print("pieces: " + " ".join(str(p) for p in report.pieces))
    if report.certificate is not None:
        cert = report.certificate
        print(f"not_group_certificate: {cert.hom} (witness {cert.witness_letter})")
    return EXIT_OK


def cmd_member(args) -> int:
    alphabet = Alphabet(args.gens)
    words = [_word(x) for x in args.set.split(",") if x]
    gens = ratfg.GeneratingSet.of(alphabet, words)
    if args.semigroup_identity:
        print(str(ratfg.subsemigroup_contains_identity(gens)).lower())
        return EXIT_OK
    if args.word is None:
        raise SimtError("--word is required unless --semigroup-identity is given")
    word = _word(args.word)
    if not alphabet.covers(word):
        raise SimtError(f"{word} uses letters outside {alphabet.letters}")
    oracle = ratfg.SubmonoidOracle(gens)
    if args.dot:
        Path(args.dot).write_text(ratfg.to_dot(oracle.automaton), encoding="utf-8")
    print(str(word in oracle).lower())
    return EXIT_OK


def cmd_fixtures(args) -> int:
    cases = fixtures.select(args.filter)
    if not cases:
        print(f"warning: no fixture matches {args.filter!r}", file=sys.stderr)
        return EXIT_OK
    results = fixtures.run(cases)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  [{r.anchor}]  {r.detail}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} passed")
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_classify(args) -> int:
    flags = classify(_word(args.word))
    names = flags.names()
    print(", ".join(names) if names else "none")
    return EXIT_OK


def cmd_stephen(args) -> int:
    pres = load(args.file).presentation
    word = _word(args.word)
    search = stephen.StephenSearch(pres, _limits(args))
    goals = stephen.invertibility_goals(word) if args.invertible else (word,)
    result = search.prove(*goals)
    if args.dot:
        Path(args.dot).write_text(stephen.to_dot(search.graph), encoding="utf-8")
    if args.json:
        _emit_json(
            {
                "word": str(word),
                "goal": "invertible" if args.invertible else "identity",
                "status": result.status.value,
                "rounds": result.rounds_used,
                "vertices": result.vertices_used,
            }
        )
    else:
        print(f"{result.status.value} (rounds={result.rounds_used}, vertices={result.vertices_used})")
    return EXIT_OK


def _print_presentation(pres: SpecialInversePresentation, args, comment: str) -> None:
    if args.json:
        report = benois_report(pres)
        _emit_json({"presentation": format_presentation(pres), **report.to_json()})
    else:
        sys.stdout.write(format_presentation(pres, comment))


def cmd_construct(args) -> int:
    kind = args.construction
    if kind in ("rwr", "positive"):
        group = construct.GroupPresentationInput(Alphabet(args.gens), _word(args.rel))
        if kind == "rwr":
            pres = construct.rwr_presentation(group)
        else:
            pres = construct.positive_transfer(group)
        _print_presentation(pres, args, f"{kind} construction for <{args.gens} | {args.rel}>")
    elif kind == "ohare":
        pres = construct.ohare_family(args.kind, args.i)
        _print_presentation(pres, args, f"a^2 b^2 {args.kind}^{args.i} a^3 bab")
    elif kind == "sample":
        report = construct.group_making_sampler(
            _word(args.u), _word(args.v), args.samples, args.max_len, args.seed, Alphabet(args.gens)
        )
        _emit_json(report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simt", description="Special inverse monoid presentations: Benois, Stephen, certificates."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def stephen_flags(p):
        p.add_argument("--max-rounds", type=int, default=stephen.DEFAULT_LIMITS.max_rounds)
        p.add_argument("--max-vertices", type=int, default=stephen.DEFAULT_LIMITS.max_vertices)

    p = sub.add_parser("benois", help="Benois factorization and group verdict")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH", help="write the saturated automaton as DOT")
    p.add_argument("--refine", action="store_true", help="refine with the bounded Stephen procedure")
    stephen_flags(p)
    p.set_defaults(func=cmd_benois)

    p = sub.add_parser("member", help="submonoid membership in a free group")
    p.add_argument("--gens", required=True)
    p.add_argument("--set", required=True, help="comma-separated generating words")
    p.add_argument("--word")
    p.add_argument("--semigroup-identity", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("fixtures", help="run the worked examples")
    p.add_argument("--filter", metavar="NAME")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("classify", help="word predicates")
    p.add_argument("word")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stephen", help="bounded proof that a word is 1 or invertible")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.add_argument("--invertible", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    stephen_flags(p)
    p.set_defaults(func=cmd_stephen)

    p = sub.add_parser("construct", help="presentation constructions")
    csub = p.add_subparsers(dest="construction", required=True)
    for name in ("rwr", "positive"):
        c = csub.add_parser(name)
        c.add_argument("--gens", required=True)
        c.add_argument("--rel", required=True)
        c.add_argument("--json", action="store_true")
    c = csub.add_parser("ohare")
    c.add_argument("--kind", choices=("a", "b"), required=True)
    c.add_argument("--i", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c = csub.add_parser("sample")
    c.add_argument("--u", required=True)
    c.add_argument("--v", required=True)
    c.add_argument("--gens", default="ab")
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--max-len", type=int, default=8)
    c.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, WordSyntaxError, NotPositive, NoValidRotation, OSError, ValueError, SimtError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
