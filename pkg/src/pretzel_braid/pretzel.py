"""Closed-form braid words for pretzel links.

Every routine here writes down an explicit braid word whose closure is the
pretzel link ``P(a_1, ..., a_n)``.  Which template applies depends on the
number of entries and on how many of them are even; :func:`synthesize`
dispatches and cross-checks the resulting word against the crossing and
strand counts predicted by closed formulas.

Template notation: ``k^e`` is ``|e|`` letters ``sign(e)*k``; ranges and
block repeats come from :mod:`pretzel_braid.braid`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Literal

from .braid import (
    BraidWord,
    IntSeq,
    block_repeat,
    inverse,
    power,
    range_seq,
    sign_scale,
)


class InternalError(RuntimeError):
    """A synthesized word disagrees with its predicted counts (a bug)."""


class CaseTag(enum.Enum):
    SINGLE = "single"
    PAIR = "pair"
    THREE_EVEN_CENTER = "three-even-center"
    THREE_ALL_ODD = "three-all-odd"
    EVEN_N = "even-n"
    ODD_N_EVEN_ENTRY = "odd-n-even-entry"
    ODD_N_ALL_ODD = "odd-n-all-odd"


@dataclass(frozen=True)
class Pretzel:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        if not self.entries:
            raise ValueError("a pretzel needs at least one entry")
        if any(a == 0 for a in self.entries):
            raise ValueError("zero entries unsupported")

    @classmethod
    def of(cls, *entries: int) -> Pretzel:
        return cls(tuple(entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "P(" + ",".join(str(a) for a in self.entries) + ")"

    def even_positions(self) -> list[int]:
        return [i for i, a in enumerate(self.entries) if a % 2 == 0]

    def mirror(self) -> Pretzel:
        return Pretzel(tuple(-a for a in self.entries))

    def rotated(self, k: int) -> Pretzel:
        """Cyclic rotation: the entry at index ``k`` moves to the front."""
        k %= self.n
        return Pretzel(self.entries[k:] + self.entries[:k])


@dataclass(frozen=True)
class CountPrediction:
    crossings: int
    strands: int


@dataclass(frozen=True)
class TwistParams:
    """Per-column half-twist counts for an all-odd pretzel.

    ``b[j-1] = (|a_j|-1)/2`` and ``eps[j-1] = sign(a_j)``; indices in the
    public methods are 1-based to match the column numbering.
    """

    b: tuple[int, ...]
    eps: tuple[int, ...]

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> TwistParams:
        entries = tuple(entries)
        if any(a % 2 == 0 for a in entries):
            raise ValueError("twist parameters need all entries odd")
        return cls(tuple((abs(a) - 1) // 2 for a in entries), tuple(1 if a > 0 else -1 for a in entries))

    @property
    def n(self) -> int:
        return len(self.b)

    def B(self, i: int, j: int) -> int:
        """Strands surrounding the crossing of columns ``i < j``: ``2 + b_{i+1} + ... + b_{j-1}``."""
        if not 1 <= i < j <= self.n:
            raise ValueError(f"need 1 <= i < j <= {self.n}, got ({i}, {j})")
        return 2 + sum(self.b[i:j - 1])


def classify(p: Pretzel) -> CaseTag:
    n = p.n
    has_even = bool(p.even_positions())
    if n == 1:
        return CaseTag.SINGLE
    if n == 2:
        return CaseTag.PAIR
    if n == 3:
        return CaseTag.THREE_EVEN_CENTER if has_even else CaseTag.THREE_ALL_ODD
    if n % 2 == 0:
        return CaseTag.EVEN_N
    return CaseTag.ODD_N_EVEN_ENTRY if has_even else CaseTag.ODD_N_ALL_ODD


def rotate_even_to_position(p: Pretzel, target: Literal["center-of-3", "first"]) -> Pretzel:
    """Rotate so the earliest even entry sits in the center (n=3) or in front."""
    evens = p.even_positions()
    if not evens:
        raise ValueError(f"{p} has no even entry to rotate into place")
    e = evens[0]
    if target == "first":
        return p.rotated(e)
    if target == "center-of-3":
        if p.n != 3:
            raise ValueError(f"center-of-3 rotation needs three entries, {p} has {p.n}")
        return p.rotated(e - 1)
    raise ValueError(f"unknown rotation target {target!r}")


# -- synthesis ---------------------------------------------------------------

def synth_pair(a: int, b: int) -> BraidWord:
    if a == 0 or b == 0:
        raise ValueError("zero entries unsupported")
    return BraidWord(power(1, a + b), 2)


def synth_three_even_center(a: int, b: int, c: int) -> BraidWord:
    if 0 in (a, b, c):
        raise ValueError("zero entries unsupported")
    if b % 2:
        raise ValueError(f"central entry must be even, got {b}")
    h = abs(b) // 2
    letters = (
        power(1, c)
        + sign_scale(b, range_seq(-2, -h - 1, "desc"))
        + power(1, a)
        + sign_scale(b, range_seq(2, h) + range_seq(-h - 1, -2))
    )
    return BraidWord(letters, h + 2)


def synth_three_all_odd(a: int, b: int, c: int) -> BraidWord:
    if any(x % 2 == 0 for x in (a, b, c)):
        raise ValueError(f"all entries must be odd, got ({a}, {b}, {c})")
    ap, bp, cp = (abs(a) - 1) // 2, (abs(b) - 1) // 2, (abs(c) - 1) // 2
    letters = (
        block_repeat(bp + cp + 2, bp + 3, "desc", ap, "up")
        + sign_scale(a, range_seq(-bp - 2, -bp - ap - 1, "desc")
                     + range_seq(bp + 1, bp + ap)
                     + range_seq(-bp - ap - 1, -bp - 1))
        + block_repeat(-bp - ap - 2, -bp - 3, "asc", cp, "down")
        + sign_scale(b, range_seq(-bp, -1)
                     + range_seq(-1, -bp - 1, "desc")
                     + range_seq(1, bp))
        + sign_scale(c, range_seq(-bp - 2, -bp - cp - 1, "desc")
                     + range_seq(bp + 1, bp + cp)
                     + range_seq(-bp - cp - 1, -bp - 1))
    )
    return BraidWord(letters, (abs(a) + abs(b) + abs(c) + 1) // 2)


def _interleaved_powers(entries: tuple[int, ...], top: int, offset: int) -> IntSeq:
    """``top^{a_k} (top-2)^{a_{k+2}} ... `` where generator g carries ``a_{n-g+offset}``."""
    n = len(entries)
    out: list[int] = []
    for g in range(top, 0, -2):
        out.extend(power(g, entries[n - g + offset - 1]))
    return tuple(out)


def synth_even_n(p: Pretzel) -> BraidWord:
    n = p.n
    if n % 2 or n <= 2:
        raise ValueError(f"even-n template needs an even number of entries above two, got {n}")
    a = p.entries
    letters = (
        range_seq(1, n - 2)
        + _interleaved_powers(a, n - 1, 0)      # (n-1)^{a_1} (n-3)^{a_3} ... 1^{a_{n-1}}
        + range_seq(-(n - 2), -1)
        + _interleaved_powers(a, n - 1, 1)      # (n-1)^{a_2} (n-3)^{a_4} ... 1^{a_n}
    )
    return BraidWord(letters, n)


def synth_odd_n_even_entry(p: Pretzel) -> BraidWord:
    """Odd number of entries with an even first entry (rotate beforehand)."""
    n = p.n
    if n % 2 == 0 or n < 3:
        raise ValueError(f"odd-n template needs an odd number of entries, at least three, got {n}")
    a = p.entries
    if a[0] % 2:
        raise ValueError(f"first entry must be even, got {a[0]}")
    h = abs(a[0]) // 2
    ascending_odd = range(1, n - 1, 2)
    first = tuple(x for g in ascending_odd for x in power(g, a[n - g - 1]))   # 1^{a_{n-1}} ... (n-2)^{a_2}
    second = tuple(x for g in ascending_odd for x in power(g, a[n - g]))      # 1^{a_n} ... (n-2)^{a_3}
    letters = (
        first
        + sign_scale(a[0], range_seq(1 - n, 2 - n - h, "desc"))
        + range_seq(2 - n, -1)
        + second
        + range_seq(1, n - 2)
        + sign_scale(a[0], range_seq(n - 1, n - 3 + h) + range_seq(2 - n - h, 1 - n))
    )
    return BraidWord(letters, h + n - 1)


def synth_T(j: int, tp: TwistParams) -> IntSeq:
    """Crossings left by the basic moves in column ``j`` (1-based); ``3 b_j + 1`` letters."""
    bj = tp.b[j - 1]
    return sign_scale(tp.eps[j - 1],
                      range_seq(-2, -bj - 1, "desc") + range_seq(1, bj) + range_seq(-bj - 1, -1))


def synth_G(i: int, j: int, tp: TwistParams) -> IntSeq:
    """Crossings between the parallel strands of columns ``i < j``; ``b_i b_j`` letters."""
    bi, bj = tp.b[i - 1], tp.b[j - 1]
    if bi == 0 or bj == 0:
        return ()
    top = -tp.B(i, j) - bj
    return block_repeat(top, top - bi + 1, "desc", bj, "up")


def _G(k: int, tp: TwistParams) -> IntSeq:
    # G(k) = G(k-1,k) ... G(2,k) G(1,k)
    return tuple(x for i in range(k - 1, 0, -1) for x in synth_G(i, k, tp))


def synth_odd_n_all_odd(p: Pretzel) -> BraidWord:
    n = p.n
    if n % 2 == 0 or n < 3:
        raise ValueError(f"odd-n template needs an odd number of entries, at least three, got {n}")
    tp = TwistParams.from_entries(p.entries)
    strands = (4 - n + sum(abs(a) for a in p.entries)) // 2
    letters: list[int] = []
    for k in range(n, 1, -1):
        letters.extend(_G(k, tp))
    letters.extend(synth_T(1, tp))
    for k in range(2, n + 1):
        letters.extend(inverse(BraidWord(_G(k, tp), strands)).letters)
        letters.extend(synth_T(k, tp))
    return BraidWord(tuple(letters), strands)


# -- counts ------------------------------------------------------------------

def predict_counts(p: Pretzel, case: CaseTag | None = None) -> CountPrediction:
    """Crossing and strand counts from the closed formulas, never from a word.

    ``p`` must already be rotated the way :func:`synthesize` rotates it.
    """
    case = case or classify(p)
    a = [abs(x) for x in p.entries]
    n = p.n
    total = sum(a)
    if case is CaseTag.SINGLE:
        return CountPrediction(0, 1)
    if case is CaseTag.PAIR:
        return CountPrediction(abs(p.entries[0] + p.entries[1]), 2)
    if case is CaseTag.THREE_EVEN_CENTER:
        return CountPrediction(a[0] + a[2] + 3 * a[1] // 2 - 1, a[1] // 2 + 2)
    if case is CaseTag.THREE_ALL_ODD:
        return CountPrediction(a[0] + a[2] - 1 + (3 * a[1] + a[0] * a[2]) // 2, (total + 1) // 2)
    if case is CaseTag.EVEN_N:
        return CountPrediction(2 * n + total - 4, n)
    if case is CaseTag.ODD_N_EVEN_ENTRY:
        return CountPrediction(a[0] // 2 + total + 2 * n - 5, a[0] // 2 + n - 1)
    if case is CaseTag.ODD_N_ALL_ODD:
        pairs = sum((a[i] - 1) * (a[j] - 1) for i in range(n) for j in range(i + 1, n))
        return CountPrediction((3 * total + pairs - n) // 2, (4 - n + total) // 2)
    raise AssertionError(case)


@dataclass(frozen=True)
class Synthesis:
    pretzel: Pretzel      # as given
    arranged: Pretzel     # after the cyclic rotation the template needs
    case: CaseTag
    word: BraidWord
    prediction: CountPrediction


def synthesize(p: Pretzel) -> Synthesis:
    """Braid word for ``p`` chosen by case, checked against the count formulas."""
    case = classify(p)
    arranged = p
    if case is CaseTag.SINGLE:
        word = BraidWord((), 1)
    elif case is CaseTag.PAIR:
        word = synth_pair(*p.entries)
    elif case is CaseTag.THREE_EVEN_CENTER:
        arranged = rotate_even_to_position(p, "center-of-3")
        word = synth_three_even_center(*arranged.entries)
    elif case is CaseTag.THREE_ALL_ODD:
        word = synth_three_all_odd(*p.entries)
    elif case is CaseTag.EVEN_N:
        word = synth_even_n(p)
    elif case is CaseTag.ODD_N_EVEN_ENTRY:
        arranged = rotate_even_to_position(p, "first")
        word = synth_odd_n_even_entry(arranged)
    else:
        word = synth_odd_n_all_odd(p)

    prediction = predict_counts(arranged, case)
    if (len(word), word.strands) != (prediction.crossings, prediction.strands):
        raise InternalError(
            f"{p}: word has {len(word)} letters on {word.strands} strands, "
            f"formulas predict {prediction.crossings} on {prediction.strands}"
        )
    return Synthesis(p, arranged, case, word, prediction)
