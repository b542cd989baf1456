"""Exact rational linear algebra.

Scalars are ``fractions.Fraction`` (arbitrary precision, always in lowest
terms with positive denominator), vectors are tuples of Fractions and
matrices are tuples of row vectors.  Elimination is fraction-free in the
Bareiss style: rows are cleared to integers once, pivoting keeps every
intermediate entry an exact minor of the input, and rational division only
happens during back-substitution.  Nothing here is ever approximate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

QVector = tuple[Fraction, ...]
QMatrix = tuple[QVector, ...]


def qvector(entries: Iterable) -> QVector:
    """Coerce an iterable of ints / strings / Fractions to an exact vector."""
    return tuple(Fraction(e) for e in entries)


def qmatrix(rows: Iterable[Iterable]) -> QMatrix:
    m = tuple(qvector(r) for r in rows)
    if m:
        width = len(m[0])
        if any(len(r) != width for r in m):
            raise ValueError("matrix rows must all have the same length")
    return m


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with q > 0 after normalization."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational literal {text!r}") from exc
    return value

def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def primitive(v: Sequence, flip_sign: bool = True) -> tuple[int, ...]:
    """Scale to a primitive integer vector (entry gcd 1).

    With ``flip_sign`` the first nonzero entry is made positive, the
    canonical form for kernel vectors and lineality generators.  Rays and
    inequality normals carry an orientation, so they pass ``flip_sign=False``
    and are only rescaled by a positive rational.
    """
    fracs = [Fraction(e) for e in v]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    mult = lcm(*(f.denominator for f in fracs))
    ints = [int(f * mult) for f in fracs]
    content = gcd(*ints)
    ints = [a // content for a in ints]
    if flip_sign:
        lead = next(a for a in ints if a != 0)
        if lead < 0:
            ints = [-a for a in ints]
    return tuple(ints)


def _integer_rows(m: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in m:
        fracs = [Fraction(e) for e in row]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * mult) for f in fracs])
    return out


def _echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows and the pivot column indices.  Row
    scaling by the previous pivot keeps all entries integral (Sylvester's
    identity guarantees the divisions below are exact).
    """
    if not rows:
        return [], []
    nrows, ncols = len(rows), len(rows[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(r + 1, nrows):
            for jc in range(c + 1, ncols):
                rows[i][jc] = (rows[r][c] * rows[i][jc] - rows[i][c] * rows[r][jc]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence]) -> int:
    _, pivots = _echelon(_integer_rows(m))
    return len(pivots)


def kernel_basis(m: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Basis of the right kernel of ``m``.

    One vector per free column, in ascending free-column order, each scaled
    to a primitive integer vector whose first nonzero entry is positive.
    """
    mat = qmatrix(m)
    if not mat:
        raise ValueError("kernel of an empty matrix is undetermined, supply rows")
    ncols = len(mat[0])
    ech, pivots = _echelon(_integer_rows(mat))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for ri in reversed(range(len(pivots))):
            pc = pivots[ri]
            s = sum((Fraction(ech[ri][j]) * x[j] for j in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / ech[ri][pc]
        basis.append(primitive(x))
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Optional[QVector]:
    """One exact solution of ``m x = b`` (free variables set to 0), or None."""
    mat = qmatrix(m)
    rhs = qvector(b)
    if len(rhs) != len(mat):
        raise ValueError("right-hand side length must match the row count")
    ncols = len(mat[0]) if mat else 0
    aug = [list(row) + [val] for row, val in zip(mat, rhs)]
    ech, pivots = _echelon(_integer_rows(aug))
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for ri in reversed(range(len(pivots))):
        pc = pivots[ri]
        s = sum((Fraction(ech[ri][j]) * x[j] for j in range(pc + 1, ncols)), Fraction(0))
        x[pc] = (Fraction(ech[ri][ncols]) - s) / ech[ri][pc]
    return tuple(x)
