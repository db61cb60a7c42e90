"""Kauffman bracket oracles and certification of synthesized braids.

Two independent routes compute the bracket: a state sum over a planar
diagram (:func:`bracket_pd`) and a Temperley-Lieb evaluation of a braid
word (:func:`bracket_braid`).  Brackets of isotopic diagrams agree up to a
framing factor ``(-A^3)^k``, which :func:`framing_ratio` recovers.

>>> from .braid import word_from_seq
>>> str(bracket_braid(word_from_seq([1], 2)))
'-A^3'
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import _pykernels, kernels
from .braid import BraidWord, closure_components
from .diagram import PlanarDiagram, closure_pd, components, pretzel_pd
from .laurent import LaurentPoly, framing_unit, loop_power
from .pretzel import CaseTag, CountPrediction, Pretzel, synthesize
from .temperley_lieb import tl_basis

CAPS_ENV = "PRETZEL_BRAID_CAPS"
_INT64_SAFE = 1 << 62
#: above this many crossings "auto" prefers contraction to full enumeration
STATES_MAX = 14


class CapExceededError(RuntimeError):
    """Raised when an oracle would run past the configured size caps."""


@dataclass(frozen=True)
class Caps:
    crossings: int = 22
    strands: int = 10

    @classmethod
    def from_env(cls) -> Caps:
        """Read ``PRETZEL_BRAID_CAPS="crossings,strands"``; defaults otherwise."""
        raw = os.environ.get(CAPS_ENV, "").strip()
        if not raw:
            return cls()
        try:
            c, s = (int(x) for x in raw.split(","))
        except ValueError:
            raise ValueError(f"{CAPS_ENV} must look like '22,10', got {raw!r}") from None
        return cls(c, s)


def _caps(caps: Caps | None) -> Caps:
    return Caps.from_env() if caps is None else caps


# -- state sum -------------------------------------------------------------

Method = Literal["auto", "states", "contract"]


def bracket_histogram(pd: PlanarDiagram, method: Method = "auto") -> np.ndarray:
    """``hist[a, l]`` over Kauffman states of the crossings (free loops excluded).

    ``"states"`` enumerates all ``2^c`` states; ``"contract"`` sweeps the
    crossings keeping only how open edge ends are paired, which stays small
    for column and braid diagrams.  ``"auto"`` enumerates small diagrams
    with the compiled kernel and contracts the rest.
    """
    if method == "auto":
        small = pd.n_crossings <= STATES_MAX
        method = "states" if kernels.BACKEND == "compiled" and small else "contract"
    if method == "states":
        return kernels.state_histogram(pd.crossings, pd.n_edges)
    if method == "contract":
        return kernels.contract_histogram(pd.crossings, pd.n_edges)
    raise ValueError(f"unknown method {method!r}")


def bracket_pd(pd: PlanarDiagram, caps: Caps | None = None, method: Method = "auto") -> LaurentPoly:
    """Normalized bracket (the unknot diagram has bracket 1) by state sum."""
    cap = _caps(caps).crossings
    c = pd.n_crossings
    if c > cap:
        raise CapExceededError(f"{c} crossings exceeds the cap of {cap}")
    hist = bracket_histogram(pd, method)
    total = LaurentPoly()
    for loops in range(hist.shape[1]):
        col = hist[:, loops]
        if not col.any():
            continue
        poly = LaurentPoly({2 * na - c: int(v) for na, v in enumerate(col) if v})
        total = total + poly * loop_power(loops + pd.free_loops - 1)
    return total


# -- Temperley-Lieb --------------------------------------------------------

def _apply(V: np.ndarray, target: np.ndarray, loop: np.ndarray, positive: bool,
           fanin: int) -> np.ndarray:
    if V.dtype != object:
        peak = int(np.abs(V).max()) if V.size else 0
        if peak * (3 + fanin) >= _INT64_SAFE:
            V = V.astype(object)
    if V.dtype == object:
        return _pykernels.tl_apply(V, target, loop, positive)
    return kernels.tl_apply(V, target, loop, positive)


def bracket_braid(w: BraidWord, caps: Caps | None = None) -> LaurentPoly:
    """Normalized bracket of the braid closure via the Temperley-Lieb algebra."""
    cap = _caps(caps).strands
    s = w.strands
    if s > cap:
        raise CapExceededError(f"{s} strands exceeds the cap of {cap}")
    basis = tl_basis(s)
    fanin = [0] + [
        int(np.bincount(basis.targets[i][basis.loops[i] == 0]).max(initial=0))
        for i in range(1, s)
    ]
    V = np.zeros((len(basis), 1), dtype=np.int64)
    V[basis.identity, 0] = 1
    lo = 0
    for m in w.letters:
        i = abs(m)
        V = _apply(V, basis.targets[i], basis.loops[i], m > 0, fanin[i])
        lo -= 3
        live = np.flatnonzero(V.any(axis=0))
        V = np.ascontiguousarray(V[:, live[0]:live[-1] + 1])
        lo += 2 * int(live[0])
    total = LaurentPoly()
    for loops in np.unique(basis.trace_loops):
        col = V[basis.trace_loops == loops].sum(axis=0)
        poly = LaurentPoly({lo + 2 * j: int(v) for j, v in enumerate(col) if v})
        total = total + poly * loop_power(int(loops) - 1)
    return total


def framing_ratio(p: LaurentPoly, q: LaurentPoly) -> int | None:
    """The ``k`` with ``p == (-A^3)^k q``, or ``None`` when no such ``k`` exists.

    >>> framing_ratio(LaurentPoly({3: -1}), LaurentPoly({0: 1}))
    1
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("bracket must be nonzero")
    diff = p.max_degree() - q.max_degree()
    if diff % 3:
        return None
    k = diff // 3
    return k if framing_unit(k) * q == p else None


# -- certification ---------------------------------------------------------

Status = Literal["pass", "fail", "skipped"]


@dataclass(frozen=True)
class CertifyReport:
    pretzel: Pretzel
    case: CaseTag
    word: BraidWord
    predicted: CountPrediction
    status: Status
    framing_k: int | None
    pd_components: int
    braid_components: int
    reasons: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def counts_match(self) -> bool:
        return (len(self.word), self.word.strands) == (self.predicted.crossings, self.predicted.strands)

    def to_dict(self) -> dict:
        d = {
            "pretzel": list(self.pretzel.entries),
            "case": self.case.value,
            "word": list(self.word.letters),
            "strands": self.word.strands,
            "crossings": len(self.word),
            "components": self.braid_components,
            "verified": None if self.status == "skipped" else self.passed,
            "framing_k": self.framing_k,
            "status": self.status,
        }
        if self.reasons:
            d["reasons"] = list(self.reasons)
        return d


def certify(p: Pretzel, caps: Caps | None = None, method: Method = "auto") -> CertifyReport:
    """Synthesize a braid for ``p`` and check it against the pretzel diagram.

    Checks the bracket up to framing, the component count and the predicted
    word size.  Oversized instances come back ``skipped`` with the bracket
    untested.

    >>> certify(Pretzel.of(3, 3, 3)).status
    'pass'
    """
    caps = _caps(caps)
    syn = synthesize(p)
    pd = pretzel_pd(p)
    w = syn.word
    pd_comp = components(pd)
    br_comp = closure_components(w)
    reasons: list[str] = []
    if pd_comp != br_comp:
        reasons.append(f"components differ: diagram {pd_comp}, braid {br_comp}")
    if (len(w), w.strands) != (syn.prediction.crossings, syn.prediction.strands):
        reasons.append("word size differs from prediction")
    k = None
    if pd.n_crossings > caps.crossings or w.strands > caps.strands:
        status: Status = "fail" if reasons else "skipped"
        if not reasons:
            reasons.append(f"over caps ({pd.n_crossings} crossings, {w.strands} strands)")
    else:
        k = framing_ratio(bracket_pd(pd, caps, method), bracket_braid(w, caps))
        if k is None:
            reasons.append("brackets differ beyond framing")
        status = "fail" if reasons else "pass"
    return CertifyReport(p, syn.case, w, syn.prediction, status, k, pd_comp, br_comp, tuple(reasons))


def closure_bracket_pd(w: BraidWord, caps: Caps | None = None, method: Method = "auto") -> LaurentPoly:
    """State-sum bracket of the braid closure, for cross-checking the TL route."""
    return bracket_pd(closure_pd(w), caps, method)
