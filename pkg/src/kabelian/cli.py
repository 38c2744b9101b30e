"""Command-line entry point.

Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import catalog as cat
from . import e6roots as e6
from . import fileformat
from .derivations import derivation_space, diagonal_torus, is_characteristically_nilpotent
from .errors import KabelianError
from .liealg import analyze, verify_jacobi
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _family_id(text: str) -> int:
    m = re.fullmatch(r"g?(\d+)", text)
    if not m:
        raise InputError(f"family must look like g11 or 11, got {text!r}")
    return int(m.group(1))


def _alpha(text: str | None):
    if text is None:
        return None
    if not fileformat.RATIONAL_RE.match(text):
        raise InputError(f"alpha must be an integer or p/q, got {text!r}")
    return Fraction(text)


def cmd_catalog_list(args) -> int:
    rows = []
    for e in cat.list_families():
        dims = e.dimensions(7, args.max_dim)
        rows.append({
            "family": e.family_id,
            "parity": e.parity,
            "min_dim": e.min_dim,
            "parameter": e.has_param,
            "dim_c1": e.expected_c1_dim,
            "recipe": [str(t) for t in e.recipe],
            "dims": dims,
        })
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            par = " alpha" if r["parameter"] else ""
            print(f"g{r['family']:<3} {r['parity']:4} n>={r['min_dim']:<3} dimC1={r['dim_c1']}{par}  {' + '.join(r['recipe'])}")
    return EXIT_OK


def cmd_catalog_build(args) -> int:
    g = cat.build_family(_family_id(args.family), args.dim, _alpha(args.alpha))
    text = fileformat.dumps(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        g = fileformat.read(args.file)
    except OSError as e:
        raise InputError(str(e)) from None
    bad = verify_jacobi(g)
    if bad:
        for v in bad[:10]:
            print(f"Jacobi fails at {v}", file=sys.stderr)
        return EXIT_INPUT
    rep = analyze(g, seed=args.seed)
    der = derivation_space(g)
    torus = diagonal_torus(g).dim
    cn = is_characteristically_nilpotent(g, der) if rep.nilindex is not None else None
    data = {
        "dim": rep.dim,
        "lcs_dims": list(rep.lcs_dims),
        "nilindex": rep.nilindex,
        "commutativity_index": rep.commutativity_index,
        "char_seq_at_first_vector": _part(rep.char_seq_claimed_vector),
        "char_seq_sampled": _part(rep.char_seq_sampled),
        "seed": args.seed,
        "derivation_dim": der.dim,
        "diagonal_torus_dim": torus,
        "characteristically_nilpotent": None if cn is None else cn.nilpotent,
        "der_chain": None if cn is None else list(cn.profile),
    }
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for k, v in data.items():
            print(f"{k}: {v}")
    return EXIT_OK


def _part(p):
    return None if p is None else str(p)


def cmd_verify(args) -> int:
    report = run_suite(args.suite, max_dim=args.max_dim, seed=args.seed)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _subset(text: str) -> tuple:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InputError(f"subset must be comma-separated integers, got {text!r}") from None
    if not vals or any(not 1 <= v <= 6 for v in vals):
        raise InputError(f"subset must be a nonempty part of 1..6, got {text!r}")
    return vals


def cmd_e6(args) -> int:
    d = _subset(args.subset)
    rs = e6.build_e6()
    lay = e6.layers(rs, d)
    w = e6.two_abelian_witness(rs, d)
    data = {
        "delta1": list(d),
        "phi2_size": sum(len(v) for v in lay.values()),
        "layer_sizes": {str(h): len(v) for h, v in lay.items()},
        "lcs_dims": e6.nilradical_lcs_dims(rs, d),
        "verdict": w.verdict,
    }
    if isinstance(w, e6.TwoAbelian):
        data["alpha"] = list(w.alpha)
        data["beta"] = list(w.beta)
        data["heights"] = [e6.height(w.alpha, d), e6.height(w.beta, d)]
        data["sum"] = list(e6.add(w.alpha, w.beta))
        data["sum_is_max_root"] = e6.add(w.alpha, w.beta) == e6.maximal_root(rs)
    elif isinstance(w, e6.DeeperAbelian):
        data["gamma"] = list(w.gamma)
        data["epsilon"] = list(w.epsilon)
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for k, v in data.items():
            print(f"{k}: {v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kabelian", description="Exact checks on nilpotent Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pc = sub.add_parser("catalog", help="list or build catalog algebras")
    csub = pc.add_subparsers(dest="action", required=True, parser_class=_Parser)
    pl = csub.add_parser("list", help="list the families")
    pl.add_argument("--max-dim", type=int, default=16)
    pl.add_argument("--json", action="store_true")
    pl.set_defaults(func=cmd_catalog_list)

    def add_build(sp):
        sp.add_argument("family", help="family id, e.g. g11")
        sp.add_argument("--dim", type=int, required=True)
        sp.add_argument("--alpha", help="parameter for families 24 and 25, e.g. 3/2")
        sp.add_argument("--out", help="output file (default: stdout)")
        sp.set_defaults(func=cmd_catalog_build)

    add_build(csub.add_parser("build", help="write one algebra as JSON"))
    add_build(sub.add_parser("build", help="alias for 'catalog build'"))

    pa = sub.add_parser("analyze", help="invariants of an algebra file")
    pa.add_argument("file")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--json", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", choices=SUITES + ("all",), default="all")
    pv.add_argument("--max-dim", type=int, default=16)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("e6", help="2-abelian analysis of one parabolic nilradical of E6")
    pe.add_argument("subset", help="simple-root indices, e.g. 1,4")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_e6)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KabelianError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
