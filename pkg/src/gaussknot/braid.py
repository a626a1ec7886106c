"""Braid words in the Artin generators and their closures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidParseError",
    "NotAKnotError",
    "BraidWord",
    "parse_braid",
    "exponent_sum",
    "closure_permutation",
    "cycle_count",
    "is_knot_closure",
    "free_reduce",
    "cable",
    "full_twist",
]


class BraidParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)


class NotAKnotError(ValueError):
    """The closure of a braid has more than one component."""

    def __init__(self, braid: BraidWord):
        self.braid = braid
        self.components = cycle_count(closure_permutation(braid))
        super().__init__(
            f"closure of {braid} has {self.components} components, not a knot"
        )


@dataclass(frozen=True)
class BraidWord:
    """An element of B_n written as signed generator indices.

    Letter ``+i`` is sigma_i and ``-i`` its inverse, ``1 <= i < n``.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for pos, x in enumerate(self.letters):
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(
                    f"letter {x} at position {pos} is not a generator of B_{self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        """Concatenation in a common braid group."""
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def conjugate(self, alpha: BraidWord) -> BraidWord:
        """alpha * self * alpha^-1."""
        return alpha * self * alpha.inverse()

    def stabilize(self, sign: int = 1) -> BraidWord:
        """Markov stabilization: append sigma_n^(+-1) inside B_(n+1)."""
        n = self.strands
        return BraidWord(n + 1, self.letters + ((n if sign > 0 else -n),))

    def embed(self, strands: int) -> BraidWord:
        if strands < self.strands:
            raise ValueError("cannot embed into fewer strands")
        return BraidWord(strands, self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Read a whitespace separated list of nonzero integers.

    Without ``strands`` the smallest braid group containing the word is used,
    and the empty word is read on one strand.
    """
    letters = []
    for pos, tok in enumerate(text.split()):
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(f"malformed letter {tok!r}", pos) from None
        if x == 0:
            raise BraidParseError("0 is not a generator index", pos)
        letters.append(x)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    if strands < 1:
        raise BraidParseError(f"strand count must be positive, got {strands}")
    for pos, x in enumerate(letters):
        if abs(x) >= strands:
            raise BraidParseError(f"index {abs(x)} needs more than {strands} strands", pos)
    return BraidWord(strands, tuple(letters))


def exponent_sum(beta: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in beta.letters)


def closure_permutation(beta: BraidWord) -> tuple[int, ...]:
    """0-based permutation p with strand at position i ending at position p[i]."""
    pos = list(range(beta.strands))  # pos[s] = current position of strand s
    where = list(range(beta.strands))  # where[p] = strand at position p
    for x in beta.letters:
        i = abs(x) - 1
        a, b = where[i], where[i + 1]
        where[i], where[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return tuple(pos)


def cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def is_knot_closure(beta: BraidWord) -> bool:
    return cycle_count(closure_permutation(beta)) == 1


def free_reduce(beta: BraidWord) -> BraidWord:
    """Cancel adjacent x, -x pairs."""
    out: list[int] = []
    for x in beta.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(beta.strands, tuple(out))


def _block_crossing(block: int, m: int, sign: int) -> list[int]:
    # block (1-based) of m strands passes across block+1; every crossing carries `sign`
    s = (block - 1) * m
    word = []
    for j in range(m):
        word.extend(sign * k for k in range(s + m - j, s + 2 * m - j))
    return word


def full_twist(m: int, power: int = 1, offset: int = 0) -> list[int]:
    """(sigma_1 ... sigma_(m-1))^(m * power), shifted by ``offset``."""
    if m < 2 or power == 0:
        return []
    sign = 1 if power > 0 else -1
    cyc = [sign * (offset + k) for k in range(1, m)]
    if sign < 0:
        cyc.reverse()
    return cyc * (m * abs(power))


def cable(beta: BraidWord, m: int) -> BraidWord:
    """Zero-framed m-cable of the closure, then the first strand is brought
    under the other m-1 strands of its block.

    Every letter becomes a crossing of two m-strand blocks.  The blackboard
    framing of the closure equals the exponent sum, so a compensating full
    twist of the first block makes the parallel copies unlinked; without it
    the pattern would be a nontrivial torus knot.  The result closes to a
    knot whose Alexander polynomial is Delta(t^m).
    """
    if m < 1:
        raise ValueError(f"cable multiplicity must be positive, got {m}")
    if not is_knot_closure(beta):
        raise NotAKnotError(beta)
    if m == 1:
        return beta
    letters: list[int] = []
    for x in beta.letters:
        letters.extend(_block_crossing(abs(x), m, 1 if x > 0 else -1))
    letters.extend(full_twist(m, -exponent_sum(beta)))
    letters.extend(-k for k in range(1, m))
    result = BraidWord(beta.strands * m, tuple(letters))
    assert is_knot_closure(result), "cable closure must be a single cycle"
    return result
