"""``dupcode`` command line.

Exit status: 0 on success, 1 on a domain error (bad word, decoding failure,
limit exceeded), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from dupcode import analysis, channel, codes, sidon, verify
from dupcode.sidon import AbelianGroup, SidonSet
from dupcode.words import Word, phi, phi_inv, weight


class DomainError(Exception):
    pass


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")
    elif fmt == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
    else:
        rows = obj if isinstance(obj, list) else [obj]
        for row in rows:
            out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")


def _parse_elements(text: str) -> list[list[int]]:
    # "1;3" for cyclic groups, "1,0;2,1" for products
    return [[int(c) for c in part.split(",")] for part in text.split(";") if part.strip()]


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition("..")
    return range(int(lo), int(hi) + 1)


def _load_code(path: str) -> tuple[codes.CodeSpec, dict]:
    obj = json.loads(Path(path).read_text())
    return codes.CodeSpec.from_json(obj), obj


def _codebook(spec: codes.CodeSpec, obj: dict, limit: int) -> list[Word]:
    if "codewords" in obj:
        return [Word.parse(c, spec.q) for c in obj["codewords"]]
    return codes.enumerate_code(spec, limit)


# ------------------------------------------------------------ handlers


def cmd_sidon(args) -> object:
    if args.action == "verify":
        G = AbelianGroup(tuple(int(m) for m in args.factors.split(",")))
        elems = [G.element(e) for e in _parse_elements(args.elements)]
        ok, witness = sidon.is_sidon(elems, G, args.t, args.exact_only, args.max_enum)
        out = {"factors": list(G.factors), "elements": [list(e) for e in elems], "t": args.t,
               "exact_only": args.exact_only, "sidon": ok}
        if witness is not None:
            out["witness"] = {"u": list(witness.first), "v": list(witness.second), "sum": list(witness.value)}
        return out
    if args.action == "greedy":
        return sidon.greedy_sidon(args.w, args.t).to_json()
    if args.action == "bose-chowla":
        B = sidon.bose_chowla(args.prime_power, args.t)
        if args.augment:
            B = sidon.augment_counts(B)
        return B.to_json()
    raise AssertionError(args.action)


def cmd_code(args) -> object:
    if args.action == "build":
        spec = codes.make_spec(args.q, args.n, args.w, args.t, args.k,
                               b=None if args.b is None else [int(c) for c in args.b.split(",")],
                               method=args.sidon)
        book = codes.enumerate_code(spec, args.max_enum)
        obj = spec.to_json(book)
        obj["size"] = len(book)
        if args.out:
            Path(args.out).write_text(json.dumps(obj, indent=2) + "\n")
        return obj
    spec, obj = _load_code(args.code_file)
    if args.action == "list":
        book = _codebook(spec, obj, args.max_enum)
        if args.domain == "duplication":
            book = [phi_inv(x, spec.k) for x in book]
        return {"size": len(book), "domain": args.domain, "codewords": [str(x) for x in book]}
    if args.action == "encode":
        book = _codebook(spec, obj, args.max_enum)
        x = codes.encode(args.index, spec, book)
        y = phi_inv(x, spec.k) if args.domain == "duplication" else x
        return {"index": args.index, "domain": args.domain, "codeword": str(y)}
    if args.action == "decode":
        y = Word.parse(args.word, spec.q)
        if args.domain == "duplication":
            d = codes.decode(phi(y, spec.k), spec)
            return {"received": str(y), "domain": args.domain,
                    "codeword": str(phi_inv(d.codeword, spec.k)),
                    "pattern": list(d.pattern), "method": d.method}
        d = codes.decode(y, spec)
        return {"received": str(y), "domain": args.domain, "codeword": str(d.codeword),
                "pattern": list(d.pattern), "method": d.method}
    raise AssertionError(args.action)


def cmd_simulate(args) -> object:
    x = Word.parse(args.word, args.q)
    if args.domain == "duplication":
        if args.t_del:
            raise DomainError("the duplication channel has no deletions")
        trace = channel.simulate_duplications(x, args.t_ins, args.k, args.seed)
    else:
        trace = channel.simulate(x, args.t_ins, args.t_del, args.k, args.seed)
    out = trace.to_json()
    out["domain"] = args.domain
    # weight is invariant in the 0^k domain, i.e. after phi_k for duplications
    to_zero = (lambda x: phi(x, args.k)) if args.domain == "duplication" else (lambda x: x)
    out["zero_domain_weight_in"] = weight(to_zero(trace.input))
    out["zero_domain_weight_out"] = weight(to_zero(trace.output))
    out["output_length"] = len(trace.output)
    return out


def cmd_verify(args) -> object:
    spec, obj = _load_code(args.code_file)
    book = _codebook(spec, obj, args.max_enum)
    t = spec.t if args.t is None else args.t
    k = spec.k if args.k is None else args.k
    verdict = verify.balls_disjoint(book, t, k, args.mode)
    return {"size": len(book), "t": t, "k": k, "mode": args.mode} | verdict.to_json()


def cmd_bounds(args) -> object:
    ns = _parse_range(args.table) if args.table else [args.n]
    rows = [analysis.bound_report(n, args.q, args.t, args.k).to_json() for n in ns]
    return rows if args.table else rows[0]


def cmd_oracle(args) -> object:
    res = analysis.exact_optimal(args.n, args.q, args.t, args.k, args.max_enum)
    return res.to_json()


def cmd_stats(args) -> object:
    return analysis.typicality_stats(args.n, args.q, args.k, args.samples, args.seed).to_json()


# --------------------------------------------------------------- parser


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _alphabet(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("alphabet size must be >= 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--max-enum", type=_positive, default=10**6, help="enumeration guard")

    p = argparse.ArgumentParser(prog="dupcode", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sidon", help="Sidon set tools")
    ssub = ps.add_subparsers(dest="action", required=True)
    v = ssub.add_parser("verify", parents=[common])
    v.add_argument("--factors", required=True, help="cyclic orders, e.g. 7 or 3,3")
    v.add_argument("--elements", required=True, help="e.g. '1;3' or '1,1;2,1'")
    v.add_argument("--t", type=_positive, required=True)
    v.add_argument("--exact-only", action="store_true")
    g = ssub.add_parser("greedy", parents=[common])
    g.add_argument("--w", type=_positive, required=True)
    g.add_argument("--t", type=_positive, required=True)
    bc = ssub.add_parser("bose-chowla", parents=[common])
    bc.add_argument("--prime-power", type=_alphabet, required=True)
    bc.add_argument("--t", type=_positive, required=True)
    bc.add_argument("--augment", action="store_true", help="append the size counter coordinate")
    ps.set_defaults(func=cmd_sidon)

    pc = sub.add_parser("code", help="build, list, encode and decode codes")
    csub = pc.add_subparsers(dest="action", required=True)
    b = csub.add_parser("build", parents=[common])
    b.add_argument("--q", type=_alphabet, required=True)
    b.add_argument("--n", type=_nonneg, required=True)
    b.add_argument("--w", type=_nonneg, required=True)
    b.add_argument("--t", type=_nonneg, required=True)
    b.add_argument("--k", type=_positive, required=True)
    b.add_argument("--b", help="offset coordinates; default is the best offset")
    b.add_argument("--sidon", choices=["greedy", "bose-chowla"], default="greedy")
    b.add_argument("--out", help="write the code file here as well")
    for name in ("list", "encode", "decode"):
        c = csub.add_parser(name, parents=[common])
        c.add_argument("--code-file", required=True)
        c.add_argument("--domain", choices=["zero", "duplication"], default="zero")
        if name == "encode":
            c.add_argument("--index", type=_nonneg, required=True)
        if name == "decode":
            c.add_argument("--word", required=True)
    pc.set_defaults(func=cmd_code)

    sm = sub.add_parser("simulate", parents=[common], help="seeded random channel")
    sm.add_argument("--q", type=_alphabet, required=True)
    sm.add_argument("--k", type=_positive, required=True)
    sm.add_argument("--t-ins", type=_nonneg, default=0)
    sm.add_argument("--t-del", type=_nonneg, default=0)
    sm.add_argument("--seed", type=int, required=True)
    sm.add_argument("--word", required=True)
    sm.add_argument("--domain", choices=["zero", "duplication"], default="zero")
    sm.set_defaults(func=cmd_simulate)

    vf = sub.add_parser("verify", parents=[common], help="exhaustive ball-disjointness check")
    vf.add_argument("--code-file", required=True)
    vf.add_argument("--t", type=_nonneg)
    vf.add_argument("--k", type=_positive)
    vf.add_argument("--mode", choices=["ins", "del", "indel"], default="indel")
    vf.set_defaults(func=cmd_verify)

    bd = sub.add_parser("bounds", parents=[common], help="asymptotic bound coefficients")
    bd.add_argument("--q", type=_alphabet, required=True)
    bd.add_argument("--k", type=_positive, required=True)
    bd.add_argument("--t", type=_positive, required=True)
    bd.add_argument("--n", type=_positive, default=100)
    bd.add_argument("--table", help="range of n, e.g. 10..40")
    bd.set_defaults(func=cmd_bounds)

    orc = sub.add_parser("oracle", parents=[common], help="exact optimal code size (tiny n)")
    orc.add_argument("--n", type=_positive, required=True)
    orc.add_argument("--q", type=_alphabet, required=True)
    orc.add_argument("--t", type=_positive, required=True)
    orc.add_argument("--k", type=_positive, required=True)
    orc.set_defaults(func=cmd_oracle, max_enum=analysis.DEFAULT_ORACLE_LIMIT)

    st = sub.add_parser("stats", parents=[common], help="weight / long-run typicality")
    st.add_argument("--n", type=_positive, required=True)
    st.add_argument("--q", type=_alphabet, required=True)
    st.add_argument("--k", type=_positive, required=True)
    st.add_argument("--samples", type=_positive, default=1000)
    st.add_argument("--seed", type=int, required=True)
    st.set_defaults(func=cmd_stats)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
    except (DomainError, ValueError, IndexError, KeyError, sidon.EnumerationLimitError,
            sidon.SidonSearchError, channel.InfeasibleEditError, OSError) as e:
        print(f"dupcode: error: {e}", file=sys.stderr)
        return 1
    _emit(result, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
