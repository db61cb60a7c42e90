"""Braid words and the integer-sequence notation used to write them down.

A braid word is a sequence of nonzero integers: the letter ``m`` stands for
the generator ``sigma_|m|`` raised to ``sign(m)``.  Sequences are plain
tuples of ints (``IntSeq``); a :class:`BraidWord` attaches a strand count.

The range helpers follow one rule throughout: a range whose endpoints are
out of order, or that touches or crosses zero, is empty.  That convention
lets the pretzel templates absorb entries of absolute value one and two
without special cases.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

IntSeq = tuple[int, ...]

Direction = Literal["asc", "desc"]
Shift = Literal["up", "down"]


def _sign(a: int) -> int:
    return 1 if a > 0 else -1


def range_seq(i: int, j: int, direction: Direction = "asc") -> IntSeq:
    """Consecutive run from ``i`` to ``j``; empty unless ``i*j > 0`` and the order fits.

    >>> range_seq(-5, -3)
    (-5, -4, -3)
    >>> range_seq(-3, 5)
    ()
    >>> range_seq(4, 2, "desc")
    (4, 3, 2)
    """
    if i * j <= 0:
        return ()
    if direction == "asc":
        return tuple(range(i, j + 1)) if i <= j else ()
    if direction == "desc":
        return tuple(range(i, j - 1, -1)) if i >= j else ()
    raise ValueError(f"direction must be 'asc' or 'desc', got {direction!r}")


def sign_scale(a: int, seq: Iterable[int]) -> IntSeq:
    """Multiply every value of ``seq`` by the sign of ``a``."""
    if a == 0:
        raise ValueError("sign_scale needs a nonzero integer")
    s = _sign(a)
    return tuple(s * m for m in seq)


def block_repeat(i: int, j: int, range_dir: Direction, m: int, shift: Shift) -> IntSeq:
    """Concatenate ``m`` ranges, the k-th with both endpoints moved by ``k`` (up) or ``-k`` (down).

    Each group is subject to the empty-range rule on its own, so a group that
    reaches zero simply contributes nothing:

    >>> block_repeat(2, 4, "asc", 3, "up")
    (2, 3, 4, 3, 4, 5, 4, 5, 6)
    >>> block_repeat(-3, -1, "asc", 2, "up")
    (-3, -2, -1)
    """
    if m < 0:
        raise ValueError(f"repeat count must be nonnegative, got {m}")
    if shift not in ("up", "down"):
        raise ValueError(f"shift must be 'up' or 'down', got {shift!r}")
    step = 1 if shift == "up" else -1
    out: list[int] = []
    for k in range(m):
        out.extend(range_seq(i + step * k, j + step * k, range_dir))
    return tuple(out)


def power(k: int, e: int) -> IntSeq:
    """``k^e`` in template notation: ``|e|`` copies of ``sign(e)*k``."""
    if e == 0:
        return ()
    return (_sign(e) * k,) * abs(e)


@dataclass(frozen=True)
class BraidWord:
    """A braid word on a fixed number of strands."""

    letters: IntSeq
    strands: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(m) for m in self.letters))
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for m in self.letters:
            if m == 0:
                raise ValueError("braid letters must be nonzero")
            if abs(m) > self.strands - 1:
                raise ValueError(
                    f"letter {m} needs at least {abs(m) + 1} strands, word has {self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord(self.letters + other.letters, max(self.strands, other.strands))

    def mirror(self) -> BraidWord:
        """Negate every letter (the mirror-image braid)."""
        return BraidWord(tuple(-m for m in self.letters), self.strands)


def word_from_seq(seq: Iterable[int], strands: int) -> BraidWord:
    return BraidWord(tuple(seq), strands)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(-m for m in reversed(w.letters)), w.strands)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``m, -m`` pairs until none are left."""
    stack: list[int] = []
    for m in w.letters:
        if stack and stack[-1] == -m:
            stack.pop()
        else:
            stack.append(m)
    return BraidWord(tuple(stack), w.strands)


def writhe(w: BraidWord) -> int:
    return sum(1 if m > 0 else -1 for m in w.letters)


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..s}``; ``images[p-1]`` is where the strand starting at ``p`` ends."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, s: int) -> Permutation:
        return cls(tuple(range(1, s + 1)))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(p)) for p in range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(q == p for p, q in enumerate(self.images, 1))


def permutation(w: BraidWord) -> Permutation:
    """Strand permutation of ``w``: letter ``m`` swaps positions ``|m|`` and ``|m|+1``."""
    # occupant[pos] = starting position of the strand currently at pos
    occupant = list(range(w.strands + 1))
    for m in w.letters:
        i = abs(m)
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    images = [0] * w.strands
    for pos in range(1, w.strands + 1):
        images[occupant[pos] - 1] = pos
    return Permutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    """Number of components of the closed braid (cycles of the permutation)."""
    return len(permutation(w).cycles())
