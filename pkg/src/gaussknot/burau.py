"""Unreduced and reduced Burau matrices of braid words."""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .ring import LAURENT, LaurentPoly, RingMatrix

__all__ = [
    "BlockShapeError",
    "BurauBlocks",
    "ReducedBurau",
    "U_MATRIX",
    "U_INVERSE",
    "generator_matrix",
    "psi_unreduced",
    "c_matrix",
    "c_matrix_inverse",
    "reduced_burau",
    "block_decompose",
    "row_relation_check",
]

T = LaurentPoly.t()
T_INV = LaurentPoly.monomial(-1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()

U_MATRIX = RingMatrix([[1 - T, T], [ONE, ZERO]])
U_INVERSE = RingMatrix([[ZERO, ONE], [T_INV, 1 - T_INV]])


class BlockShapeError(ArithmeticError):
    """Conjugated Burau matrix lacks the expected (0,...,0,1) last column."""


@dataclass(frozen=True)
class BurauBlocks:
    hat: RingMatrix
    b_col: tuple[LaurentPoly, ...]
    c_row: tuple[LaurentPoly, ...]
    d: LaurentPoly

    def assemble(self) -> RingMatrix:
        rows = [list(self.hat.row(i)) + [self.b_col[i]] for i in range(self.hat.rows)]
        rows.append(list(self.c_row) + [self.d])
        return RingMatrix(rows)


@dataclass(frozen=True)
class ReducedBurau:
    matrix: RingMatrix
    star_row: tuple[LaurentPoly, ...]


def generator_matrix(n: int, letter: int) -> RingMatrix:
    """I_(i-1) + U^(+-1) + I_(n-i-1) for letter +-i."""
    i = abs(letter) - 1
    block = U_MATRIX if letter > 0 else U_INVERSE
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for a in range(2):
        for b in range(2):
            rows[i + a][i + b] = block[a, b]
    return RingMatrix(rows)


def psi_unreduced(beta: BraidWord) -> RingMatrix:
    """Product of generator images in word order."""
    n = beta.strands
    m = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    one_minus_t = 1 - T
    one_minus_tinv = 1 - T_INV
    # right multiplication by a generator only mixes two columns
    for x in beta.letters:
        i = abs(x) - 1
        for row in m:
            a, b = row[i], row[i + 1]
            if x > 0:
                row[i] = one_minus_t * a + b
                row[i + 1] = T * a
            else:
                row[i] = b.shift(-1)
                row[i + 1] = a + one_minus_tinv * b
    return RingMatrix(m)


def c_matrix(k: int) -> RingMatrix:
    """Upper triangular all-ones matrix C_k."""
    return RingMatrix([[1 if i <= j else 0 for j in range(k)] for i in range(k)])


def c_matrix_inverse(k: int) -> RingMatrix:
    return RingMatrix([[1 if i == j else (-1 if j == i + 1 else 0) for j in range(k)] for i in range(k)])


def reduced_burau(beta: BraidWord) -> ReducedBurau:
    n = beta.strands
    if n < 2:
        raise ValueError("reduced Burau representation needs at least 2 strands")
    conj = c_matrix_inverse(n) @ psi_unreduced(beta) @ c_matrix(n)
    last = conj.col(n - 1)
    if any(last[:-1]) or last[-1] != 1:
        raise BlockShapeError(f"last column of C^-1 psi C for {beta} is {[str(x) for x in last]}")
    k = range(n - 1)
    return ReducedBurau(conj.submatrix(k, k), conj.row(n - 1)[:-1])


def block_decompose(beta: BraidWord) -> BurauBlocks:
    n = beta.strands
    if n < 2:
        raise ValueError("block decomposition needs at least 2 strands")
    psi = psi_unreduced(beta)
    k = range(n - 1)
    return BurauBlocks(
        hat=psi.submatrix(k, k),
        b_col=psi.col(n - 1)[:-1],
        c_row=psi.row(n - 1)[:-1],
        d=psi[n - 1, n - 1],
    )


def row_relation_check(beta: BraidWord) -> bool:
    """(1 - t^n) * star == sum_i (t^i - 1) a_i, a_i the rows of psi^r - I."""
    n = beta.strands
    red = reduced_burau(beta)
    a = red.matrix - RingMatrix.identity(n - 1, LAURENT)
    lhs = [(1 - T ** n) * s for s in red.star_row]
    rhs = [ZERO] * (n - 1)
    for i in range(n - 1):
        f = T ** (i + 1) - 1
        rhs = [r + f * x for r, x in zip(rhs, a.row(i))]
    return lhs == rhs
