"""Command-line front end: ``frobw report|bracket|normal-form|wreath|verify``.

Exit codes: 0 on success, 1 when a verification fails, 2 on invalid input.
``--format machine`` prints ``key=value`` lines with rationals as ``num/den``.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra import AxiomError, FrobeniusAlgebra, load_algebra
from .builtins import builtin
from .linalg import fstr
from .pbw import RewriteLimitError, normal_order
from .verify import SUITES, SuiteParams, format_result, run_suite
from .walgebra import WElement, bracket
from .wreath import DegreeCapError, TruncatedCocenter, WreathAlgebra, claimed_basis_labels

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_TERM = re.compile(r"^\s*L\(\s*(-?\d+)\s*,\s*(\d+)\s*,\s*([^()\s,]+)\s*\)\s*$")
_WORD_TERM = re.compile(r"L\(\s*(-?\d+)\s*,\s*(\d+)\s*,\s*([^()\s,]+)\s*\)")


class InputError(ValueError):
    pass


def q(x: Fraction) -> str:
    """Machine rendering of a rational."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def vec(xs: Sequence, machine: bool) -> str:
    f = q if machine else fstr
    return "(" + ", ".join(f(x) for x in xs) + ")"


def resolve_class(A: FrobeniusAlgebra, label: str) -> int:
    if label in A.cocenter.labels:
        return A.coc_index(label)
    if label.isdigit() and int(label) < A.ncoc:
        return int(label)
    raise InputError(f"unknown cocenter label {label!r}; known: {', '.join(A.cocenter.labels)}")


def parse_term(A: FrobeniusAlgebra, text: str) -> WElement:
    if text.strip() == "C":
        return WElement.C(A)
    m = _TERM.match(text)
    if not m:
        raise InputError(f"cannot parse term {text!r}; expected L(m,r,label) or C")
    return WElement.L(A, int(m.group(1)), int(m.group(2)), resolve_class(A, m.group(3)))


def parse_word(A: FrobeniusAlgebra, text: str) -> list:
    word = []
    pos = 0
    for m in _WORD_TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise InputError(f"cannot parse word {text!r}")
        word.append((int(m.group(1)), int(m.group(2)), resolve_class(A, m.group(3))))
        pos = m.end()
    if text[pos:].strip():
        raise InputError(f"cannot parse word {text!r}")
    return word


def load(args) -> FrobeniusAlgebra:
    if args.file:
        try:
            return load_algebra(args.file)
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from exc
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.graph is not None:
        params["graph"] = args.graph
    return builtin(args.builtin, **params)


# -- commands --------------------------------------------------------------------

def cmd_report(A: FrobeniusAlgebra, args) -> List[str]:
    machine = args.format == "machine"
    coc = A.cocenter
    if machine:
        out = [f"algebra={A.name}", f"dim={A.dim}", f"d={A.d}"]
        out += [f"basis.{i}={A.labels[i]} degree={A.degrees[i]} parity={A.parities[i]}" for i in range(A.dim)]
        out.append(f"center_dim={len(A.center.basis)}")
        out += [f"center.{i}={vec(z, True)}" for i, z in enumerate(A.center.basis)]
        out.append(f"cocenter_dim={A.ncoc}")
        out += [f"cocenter.{b}={coc.labels[b]} degree={coc.degrees[b]} parity={coc.parities[b]}" for b in range(A.ncoc)]
        out.append(f"kappa={vec(A.kappa, True)}")
        for s in range(A.ncoc):
            for t in range(A.ncoc):
                out.append(f"diamond.{coc.labels[s]}.{coc.labels[t]}={vec(A.diamond_basis(s, t), True)}")
        return out
    out = [f"algebra {A.name}: dim {A.dim}, d = {A.d}"]
    out.append("basis: " + ", ".join(f"{A.labels[i]} [{A.degrees[i]}{'|odd' if A.parities[i] else ''}]" for i in range(A.dim)))
    out.append(f"center: dim {len(A.center.basis)}")
    out += [f"  {render_element(A, z)}" for z in A.center.basis]
    out.append(f"cocenter: dim {A.ncoc}")
    out += [f"  <{coc.labels[b]}>  degree {coc.degrees[b]}, parity {coc.parities[b]}" for b in range(A.ncoc)]
    out.append(f"kappa = {render_element(A, A.kappa)}")
    out.append("diamond table:")
    for s in range(A.ncoc):
        for t in range(A.ncoc):
            out.append(f"  <{coc.labels[s]}> <> <{coc.labels[t]}> = {render_class(A, A.diamond_basis(s, t))}")
    return out


def render_element(A: FrobeniusAlgebra, x: Sequence) -> str:
    return _render_lin([(A.labels[i], c) for i, c in enumerate(x)])


def render_class(A: FrobeniusAlgebra, x: Sequence) -> str:
    return _render_lin([(f"<{A.cocenter.labels[i]}>", c) for i, c in enumerate(x)])


def _render_lin(pairs) -> str:
    parts = []
    for label, c in pairs:
        if not c:
            continue
        body = label if abs(c) == 1 else f"{fstr(abs(c))}{label}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def cmd_bracket(A: FrobeniusAlgebra, args) -> List[str]:
    x, y = parse_term(A, args.lhs), parse_term(A, args.rhs)
    b = bracket(x, y)
    if args.format == "machine":
        out = [f"{m},{r},{A.cocenter.labels[beta]}={q(c)}" for (m, r, beta), c in sorted(b.terms.items())]
        return out + [f"C={q(b.central)}"]
    return [b.render()]


def cmd_normal_form(A: FrobeniusAlgebra, args) -> List[str]:
    word = parse_word(A, args.word)
    u = normal_order(A, word, args.k)
    if args.format == "machine":
        labels = A.cocenter.labels
        out = [f"k={q(args.k)}"]
        for mono in sorted(u.terms):
            key = " ".join(f"L({m},{r},{labels[b]})" for m, r, b in mono) or "1"
            out.append(f"{key}={q(u.terms[mono])}")
        return out
    return [u.render()]


def cmd_wreath(A: FrobeniusAlgebra, args) -> List[str]:
    machine = args.format == "machine"
    W = WreathAlgebra(A, args.wreath_n)
    out: List[str] = []
    if args.cocenter_dim:
        D = args.D
        Dc = args.Dcomm if args.Dcomm is not None else D + 2
        tc = TruncatedCocenter(W, D, Dc, mode=args.mode)
        labels = claimed_basis_labels(A, W.n, D)
        indep = tc.independent_mod([_claimed(W, l) for l in labels])
        if machine:
            out += [f"n={W.n}", f"D={D}", f"Dcomm={Dc}", f"dimension={tc.dimension}",
                    f"commutators={tc.ncommutators}", f"claimed={len(labels)}", f"claimed_independent={int(indep)}"]
        else:
            out.append(f"truncation: D = {D}, Dcomm = {Dc} (commutators of total degree > {Dc} are not used;"
                       " the dimension is an upper bound)")
            out.append(f"AWA_{W.n}({A.name}): degree <= {D} part modulo commutators, dimension {tc.dimension}")
            out.append(f"claimed basis elements: {len(labels)}, independent in the quotient: {'yes' if indep else 'no'}")
    else:
        basis = claimed_basis_labels(A, W.n, args.D)
        coc = A.cocenter.labels
        if machine:
            out += [f"n={W.n}", f"D={args.D}", f"claimed={len(basis)}"]
            out += [f"label.{i}=" + " ".join(f"L({m},{r},{coc[b]})" for m, r, b in lab) for i, lab in enumerate(basis)]
        else:
            out.append(f"claimed basis of the truncated cocenter for n = {W.n}, D = {args.D}: {len(basis)} elements")
            out += ["  " + "".join(f"L({m},{r},{coc[b]})" for m, r, b in lab) for lab in basis]
    return out


def _claimed(W, label):
    from .wreath import claimed_basis_element
    return claimed_basis_element(W, label)


def cmd_verify(A: FrobeniusAlgebra, args) -> tuple:
    names = args.suite or sorted(SUITES)
    for name in names:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    machine = args.format == "machine"
    out: List[str] = []
    failed = False
    for name in names:
        r = run_suite(name, A, args.seed, SuiteParams())
        out += format_result(r, machine)
        failed |= not r.ok
    return out, failed


# -- entry point ---------------------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--builtin", default="field", help="built-in algebra name (default: field)")
    src.add_argument("--file", help="algebra definition JSON")
    common.add_argument("--n", type=int, help="size parameter of the built-in")
    common.add_argument("--graph", help="graph for zigzag: pathN, cycleN or 1-2,2-3")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    p = argparse.ArgumentParser(prog="frobw", description="Frobenius superalgebras, W(A), PBW and AWA_n(A).")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("report", parents=[common], help="structure report of an algebra")
    b = sub.add_parser("bracket", parents=[common], help="bracket of two terms in W(A)")
    b.add_argument("lhs")
    b.add_argument("rhs")
    nf = sub.add_parser("normal-form", parents=[common], help="PBW normal form of a word")
    nf.add_argument("word")
    nf.add_argument("--k", type=_rational, default=Fraction(0), help="central charge")
    w = sub.add_parser("wreath", parents=[common], help="truncated cocenter of AWA_n(A)")
    w.add_argument("--strands", dest="wreath_n", type=int, default=None, help="number of strands (alias of --n)")
    w.add_argument("--cocenter-dim", action="store_true")
    w.add_argument("--D", type=int, default=1)
    w.add_argument("--Dcomm", type=int, default=None)
    w.add_argument("--mode", choices=("generators", "brute"), default="generators")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append", help="suite name (repeatable; default: all)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--list", action="store_true", help="list suites and exit")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if args.command == "verify" and args.list:
            for name in sorted(SUITES):
                print(f"{name}: {SUITES[name][0]}")
            return EXIT_OK
        if args.command == "wreath":
            # --n is the strand count here; the algebra comes from --builtin/--file
            if args.wreath_n is None:
                args.wreath_n = args.n if args.n is not None else 1
                args.n = None
        A = load(args)
        if args.command == "report":
            lines = cmd_report(A, args)
        elif args.command == "bracket":
            lines = cmd_bracket(A, args)
        elif args.command == "normal-form":
            lines = cmd_normal_form(A, args)
        elif args.command == "wreath":
            lines = cmd_wreath(A, args)
        else:
            lines, failed = cmd_verify(A, args)
            print("\n".join(lines))
            return EXIT_FAIL if failed else EXIT_OK
    except AxiomError as exc:
        print(str(exc))
        return EXIT_INPUT
    except (InputError, ValueError, KeyError, DegreeCapError, RewriteLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
