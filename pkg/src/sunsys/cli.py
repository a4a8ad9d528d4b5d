"""Command-line front end and the JSON certificate format.

Certificates are integer-only JSON with a fixed key order:

    {"format_version": 1, "kind": "complete" | "hole", "m": ..., "hole_size": ...,
     "blocks": [[a, b, c, d, e, f], ...]}

Blocks are written with the triangle sorted (pendants follow their
triangle vertex) and the block list sorted, so equal decompositions give
byte-identical files.  ``lemma`` emits kind ``"lemma"`` certificates that
also record ``u``, ``t`` and the difference set.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .core import HoleGraph, sun_to_ints
from .errors import BoundViolated, NonExistent, NotAdmissible, SunSystemError
from .lemmas import LEMMAS
from .oracle import BASE_ORDERS, base_system
from .planner import (
    construct_3ss,
    embed,
    hole_residues,
    is_admissible_order,
    min_embedding_order,
)
from .verify import Decomposition, verify_partition

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INADMISSIBLE = 2
EXIT_BOUND = 3


def canonical_block(b) -> tuple:
    """Sort the triangle, carrying each pendant along with its vertex."""
    pairs = sorted(zip(b[:3], b[3:]))
    return tuple(p[0] for p in pairs) + tuple(p[1] for p in pairs)


def canonical_blocks(blocks) -> list:
    return sorted(canonical_block(b) for b in blocks)


def certificate(d: Decomposition) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": d.kind,
        "m": d.m,
        "hole_size": d.n,
        "blocks": [list(b) for b in canonical_blocks(d.blocks)],
    }


def lemma_certificate(out) -> dict:
    g = out.graph
    return {
        "format_version": FORMAT_VERSION,
        "kind": "lemma",
        "m": g.u + g.t,
        "hole_size": g.t,
        "u": g.u,
        "D": sorted(g.D),
        "blocks": [list(b) for b in canonical_blocks(sun_to_ints(s, g.u) for s in out.blocks)],
    }


def dumps(cert: dict) -> str:
    """One block per line keeps large certificates diffable."""
    head = {k: v for k, v in cert.items() if k != "blocks"}
    lines = [json.dumps(head)[:-1] + ', "blocks": [']
    blocks = cert["blocks"]
    for i, b in enumerate(blocks):
        lines.append("  " + json.dumps(b) + ("," if i + 1 < len(blocks) else ""))
    lines.append("]}")
    return "\n".join(lines) + "\n"


def load_certificate(text: str):
    """Parse a certificate into (Decomposition or LemmaOutput-like, target)."""
    data = json.loads(text)
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {data.get('format_version')!r}")
    kind = data["kind"]
    blocks = tuple(tuple(int(x) for x in b) for b in data["blocks"])
    if kind == "lemma":
        g = HoleGraph(int(data["u"]), int(data["hole_size"]), frozenset(data["D"]))
        return Decomposition(g.u + g.t, 0, blocks, "complete"), g
    d = Decomposition(int(data["m"]), int(data["hole_size"]), blocks, kind)
    return d, d.target()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    d = construct_3ss(args.m)
    if not verify_partition(d, d.target()).ok:
        print(f"generated system of order {args.m} failed verification", file=sys.stderr)
        return EXIT_VERIFY
    _emit(dumps(certificate(d)), args.output)
    return EXIT_OK


def _base_for(n: int, path: Optional[str]) -> Decomposition:
    if path:
        with open(path) as fh:
            base, target = load_certificate(fh.read())
        if base.kind != "complete" or base.m != n:
            raise ValueError(f"{path} is not a complete system of order {n}")
        report = verify_partition(base, target)
        if not report.ok:
            raise ValueError(f"base certificate does not verify: {report.summary()}")
        return base
    if n in BASE_ORDERS:
        return base_system(n)
    return construct_3ss(n)


def cmd_embed(args) -> int:
    base = _base_for(args.n, args.base)
    d = embed(base, args.m)
    _emit(dumps(certificate(d)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        d, target = load_certificate(fh.read())
    report = verify_partition(d, target)
    print(report.summary())
    for label, edges in (
        ("missing", report.missing_edges),
        ("duplicated", report.duplicated_edges),
        ("foreign", report.foreign_edges),
    ):
        if edges:
            print(f"{label}: " + " ".join(f"{x}-{y}" for x, y in edges))
    return EXIT_OK if report.ok else EXIT_VERIFY


def format_residues(rs) -> str:
    return "{" + ",".join(str(x) for x in sorted(rs)) + "}"


def table_rows(n_max: int) -> list:
    rows = []
    for n in range(9, n_max + 1):
        if is_admissible_order(n).admissible:
            rows.append(f"{n}  {min_embedding_order(n)}  {format_residues(hole_residues(n))}")
    return rows


def cmd_table(args) -> int:
    print("n  m_min  u mod 12")
    for row in table_rows(args.n_max):
        print(row)
    return EXIT_OK


def cmd_lemma(args) -> int:
    if args.name not in LEMMAS:
        print(f"unknown lemma {args.name!r}; choose from {', '.join(sorted(LEMMAS))}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    params = list(args.params)
    kwargs = {}
    if args.name == "leave_decomposition" and len(params) == 4:
        kwargs["skip_first"] = bool(params.pop())
    out = LEMMAS[args.name](*params, **kwargs)
    report = verify_partition(out, out.graph)
    if not report.ok:
        print(report.summary(), file=sys.stderr)
        return EXIT_VERIFY
    _emit(dumps(lemma_certificate(out)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sunsys", description="3-sun system constructions and certificates")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a 3-sun system of order m")
    g.add_argument("m", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("embed", help="embed a system of order n into one of order m")
    e.add_argument("n", type=int)
    e.add_argument("m", type=int)
    e.add_argument("--base", help="certificate of the system to embed")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_embed)

    v = sub.add_parser("verify", help="check a certificate is an exact edge partition")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="minimal embedding orders and hole residues")
    t.add_argument("n_max", type=int)
    t.set_defaults(func=cmd_table)

    lm = sub.add_parser("lemma", help="run one piece constructor directly")
    lm.add_argument("name")
    lm.add_argument("params", type=int, nargs="*")
    lm.add_argument("-o", "--output")
    lm.set_defaults(func=cmd_lemma)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundViolated as exc:
        print(f"bound violated: {exc} (minimum m = {exc.bound})", file=sys.stderr)
        return EXIT_BOUND
    except (NotAdmissible, NonExistent) as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (SunSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE


if __name__ == "__main__":
    sys.exit(main())
