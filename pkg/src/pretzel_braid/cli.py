"""Command-line front end.

Exit codes: 0 success or pass, 1 verification failure, 2 skipped by the
oracle caps, 64 usage error, 70 internal error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .braid import BraidWord, closure_components, free_reduce, word_from_seq
from .diagram import closure_pd, pretzel_pd
from .invariants import CapExceededError, certify
from .pretzel import InternalError, Pretzel, synthesize
from .render import render_svg

EX_OK, EX_FAIL, EX_SKIPPED, EX_USAGE, EX_SOFTWARE = 0, 1, 2, 64, 70
FORMATS = ("seq", "sigma", "letters", "json", "latex")


class PretzelParseError(ValueError):
    """Malformed pretzel text; ``position`` is the 0-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.reason = message
        self.position = position


_INT = re.compile(r"[+-]?\d+")


def parse_pretzel(text: str) -> Pretzel:
    """Parse ``"P(a,...)"``, ``"(a,...)"`` or bare comma/space-separated integers.

    >>> parse_pretzel("P(-2, 3, 7)")
    Pretzel(entries=(-2, 3, 7))
    >>> parse_pretzel("9 5 7 11 13").n
    5
    >>> parse_pretzel("P(1,0,3)")
    Traceback (most recent call last):
    ...
    pretzel_braid.cli.PretzelParseError: zero entries unsupported (at column 5)
    """
    s, n = text, len(text)
    i = 0

    def skip(i: int) -> int:
        while i < n and s[i].isspace():
            i += 1
        return i

    i = skip(i)
    closer = None
    if i < n and s[i] in "Pp":
        i = skip(i + 1)
        if i >= n or s[i] != "(":
            raise PretzelParseError("expected '(' after 'P'", i)
    if i < n and s[i] == "(":
        closer = ")"
        i += 1
    entries: list[int] = []
    while True:
        i = skip(i)
        if closer and i < n and s[i] == closer and not entries:
            raise PretzelParseError("empty pretzel", i)
        m = _INT.match(s, i)
        if not m:
            what = "end of input" if i >= n else repr(s[i])
            raise PretzelParseError(f"expected an integer, found {what}", i)
        v = int(m.group())
        if v == 0:
            raise PretzelParseError("zero entries unsupported", i)
        entries.append(v)
        i = skip(m.end())
        if i < n and s[i] == ",":
            i += 1
            continue
        if closer:
            if i < n and s[i] == closer:
                i += 1
                break
            if i >= n:
                raise PretzelParseError(f"missing '{closer}'", i)
        elif i >= n:
            break
        if i > 0 and not s[i - 1].isspace():
            raise PretzelParseError(f"unexpected {s[i]!r}", i)
    i = skip(i)
    if i < n:
        raise PretzelParseError(f"trailing text {s[i:]!r}", i)
    if not entries:
        raise PretzelParseError("empty pretzel", i)
    return Pretzel(tuple(entries))


def format_pretzel(p: Pretzel) -> str:
    return str(p)


def parse_seq(text: str) -> tuple[int, ...]:
    """Parse a letter sequence such as ``"(1,-2,1)"`` or ``"1 -2 1"``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [t for t in re.split(r"[\s,]+", body) if t]
    try:
        seq = tuple(int(t) for t in parts)
    except ValueError:
        raise ValueError(f"malformed braid word {text!r}") from None
    if 0 in seq:
        raise ValueError("braid letters must be nonzero")
    return seq


# -- word formats ----------------------------------------------------------

def format_word(w: BraidWord, fmt: str) -> str:
    """Render ``w`` in one of :data:`FORMATS` except json.

    >>> w = word_from_seq([1, -2, 1, -2], 3)
    >>> format_word(w, "seq"), format_word(w, "letters")
    ('(1,-2,1,-2)', 'aBaB')
    >>> format_word(w, "sigma")
    's1 s2^-1 s1 s2^-1'
    """
    L = w.letters
    if fmt == "seq":
        return "(" + ",".join(map(str, L)) + ")"
    if fmt == "sigma":
        return " ".join(f"s{abs(m)}" + ("" if m > 0 else "^-1") for m in L) or "e"
    if fmt == "letters":
        if L and max(abs(m) for m in L) > 26:
            raise ValueError("letters format covers at most 26 generators; use seq or json")
        return "".join(chr(96 + m) if m > 0 else chr(64 - m) for m in L)
    if fmt == "latex":
        return " ".join(r"\sigma_{%d}" % abs(m) + ("" if m > 0 else "^{-1}") for m in L) or "1"
    raise ValueError(f"unknown format {fmt!r}")


def synth_record(p: Pretzel, w: BraidWord, case: str, comps: int) -> dict:
    return {
        "pretzel": list(p.entries),
        "case": case,
        "word": list(w.letters),
        "strands": w.strands,
        "crossings": len(w),
        "components": comps,
        "verified": None,
        "framing_k": None,
    }


# -- argparse plumbing -----------------------------------------------------

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pretzel-braid", description="Braid words for pretzel links, with invariant checks.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    sp = sub.add_parser("synth", help="print the braid word for a pretzel link")
    sp.add_argument("pretzel")
    sp.add_argument("--format", choices=FORMATS, default="seq")
    sp.add_argument("--reduce", action="store_true", help="cancel adjacent inverse pairs")
    sp.add_argument("--counts", action="store_true", help="print only crossing and strand counts")

    sp = sub.add_parser("verify", help="certify the synthesized braid against the pretzel diagram")
    sp.add_argument("pretzel")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("pd", help="emit a planar diagram as JSON")
    sp.add_argument("pretzel", nargs="?")
    sp.add_argument("--braid", help="braid word instead of a pretzel, e.g. '1,-2,1'")
    sp.add_argument("--strands", type=int, help="strand count for --braid (default: max letter + 1)")

    sp = sub.add_parser("render", help="draw the synthesized braid as SVG")
    sp.add_argument("pretzel")
    sp.add_argument("--svg", required=True, metavar="FILE")

    sp = sub.add_parser("batch", help="verify one pretzel per line, JSON-lines out")
    sp.add_argument("file")
    sp.add_argument("--jobs", type=int, default=1)
    return ap


def _pretzel_arg(text: str) -> Pretzel:
    try:
        return parse_pretzel(text)
    except PretzelParseError as e:
        print(f"pretzel-braid: {e}", file=sys.stderr)
        raise UsageError(str(e)) from None


def _cmd_synth(args) -> int:
    p = _pretzel_arg(args.pretzel)
    syn = synthesize(p)
    w = free_reduce(syn.word) if args.reduce else syn.word
    if args.counts:
        print(f"crossings: {len(w)}, strands: {w.strands}")
        return EX_OK
    if args.format == "json":
        print(json.dumps(synth_record(p, w, syn.case.value, closure_components(w))))
        return EX_OK
    try:
        text = format_word(w, args.format)
    except ValueError as e:
        print(f"pretzel-braid: {e}", file=sys.stderr)
        raise UsageError(str(e)) from None
    print(text)
    print(f"strands: {w.strands}")
    return EX_OK


_EXIT = {"pass": EX_OK, "fail": EX_FAIL, "skipped": EX_SKIPPED}


def _cmd_verify(args) -> int:
    rep = certify(_pretzel_arg(args.pretzel))
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        line = f"{rep.pretzel}: {rep.status}"
        if rep.framing_k is not None:
            line += f" (framing k={rep.framing_k})"
        line += f"; components {rep.pd_components}/{rep.braid_components}"
        line += f"; {len(rep.word)} crossings, {rep.word.strands} strands"
        print(line)
        for r in rep.reasons:
            print(f"  {r}")
    return _EXIT[rep.status]


def _cmd_pd(args) -> int:
    if (args.pretzel is None) == (args.braid is None):
        raise UsageError("give exactly one of a pretzel or --braid")
    if args.braid is not None:
        try:
            seq = parse_seq(args.braid)
            s = args.strands if args.strands else max((abs(m) for m in seq), default=0) + 1
            pd = closure_pd(word_from_seq(seq, s))
        except ValueError as e:
            print(f"pretzel-braid: {e}", file=sys.stderr)
            raise UsageError(str(e)) from None
    else:
        pd = pretzel_pd(_pretzel_arg(args.pretzel))
    print(pd.to_json())
    return EX_OK


def _cmd_render(args) -> int:
    syn = synthesize(_pretzel_arg(args.pretzel))
    render_svg(syn.word, args.svg)
    return EX_OK


def batch_line(text: str) -> dict:
    """Report for one batch input line (never raises on bad input)."""
    try:
        p = parse_pretzel(text)
    except PretzelParseError as e:
        return {"input": text, "status": "parse-error", "error": str(e)}
    rec = certify(p).to_dict()
    rec["input"] = text
    return rec


def _cmd_batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        print(f"pretzel-braid: {e}", file=sys.stderr)
        raise UsageError(str(e)) from None
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(batch_line, lines))
    else:
        records = [batch_line(t) for t in lines]
    worst = EX_OK
    for rec in records:
        print(json.dumps(rec))
        if rec["status"] in ("fail", "parse-error"):
            worst = EX_FAIL
    return worst


_COMMANDS = {
    "synth": _cmd_synth,
    "verify": _cmd_verify,
    "pd": _cmd_pd,
    "render": _cmd_render,
    "batch": _cmd_batch,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.cmd](args)
    except UsageError:
        return EX_USAGE
    except CapExceededError as e:
        print(f"pretzel-braid: {e}", file=sys.stderr)
        return EX_SKIPPED
    except (InternalError, AssertionError) as e:
        print(f"pretzel-braid: internal error: {e}", file=sys.stderr)
        return EX_SOFTWARE
    except OSError as e:
        print(f"pretzel-braid: {e}", file=sys.stderr)
        return EX_FAIL


def main() -> None:
    sys.exit(run())
