"""Form counts on cyclic covers of the line with three or four branch points.

A degree-p cyclic cover of the projective line carries an action of the
deck group, and its holomorphic one-forms split into character summands.
For covers branched at three or four points the dimension of each summand
is determined by elementary residue arithmetic; these small covers are
exactly the ones appearing over the special fibers of a four-tail family,
so the same arithmetic yields the rank and degree of each eigenbundle on
such a family.

``oracle_h0`` recounts the dimensions by brute force, enumerating monomial
differentials over an exponent box and checking orders of vanishing point
by point.  It shares no logic with the closed-form counts and serves as an
independent check on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Sequence

from .covers import residue


@dataclass(frozen=True)
class BranchData:
    """Branch weights of a cyclic cover of the line with 3 or 4 branch points.

    ``weights`` lists every branch weight, reduced mod p on construction;
    the last entry must complete the sum to a multiple of p.  ``j`` selects
    the character of the deck-group action.
    """

    weights: tuple[int, ...]
    p: int
    j: int = 0

    def __post_init__(self) -> None:
        p = int(self.p)
        if p < 2:
            raise ValueError(f"cover degree must be at least 2, got {p}")
        ws = tuple(residue(int(w), p) for w in self.weights)
        if len(ws) not in (3, 4):
            raise ValueError(f"expected 3 or 4 branch weights, got {len(ws)}")
        if sum(ws) % p:
            raise ValueError(f"branch weights {ws} do not sum to 0 mod {p}")
        j = int(self.j)
        if not 0 <= j < p:
            raise ValueError(f"character must lie in 0..{p - 1}, got {j}")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "j", j)

    @classmethod
    def complete(cls, partial: Sequence[int], p: int, j: int = 0) -> "BranchData":
        """Build branch data from all weights but the last, which is implied."""
        ws = tuple(int(w) for w in partial)
        return cls(ws + (-sum(ws) % p,), p, j)

    def residues(self) -> tuple[int, ...]:
        """The scaled residues <j*w> of the branch weights."""
        return tuple(residue(self.j * w, self.p) for w in self.weights)

    def h0(self) -> int:
        """Dimension of the weight-j summand of the forms on this cover."""
        return _h0_from_residues(self.residues(), self.p)


def _h0_from_residues(residues: Sequence[int], p: int) -> int:
    # Each nonzero residue allows one pole order at its branch point; the
    # residue total, a multiple of p, fixes how many orders the point at
    # infinity eats.  A vanishing residue means the point is unbranched in
    # this character and contributes nothing, matching the cover with that
    # point dropped.
    total = sum(residues)
    if total % p:
        raise ValueError(f"residues {tuple(residues)} do not sum to 0 mod {p}")
    nonzero = sum(1 for r in residues if r)
    return max(0, nonzero - 1 - total // p)


def h0_weight_3pt(a: int, b: int, p: int, j: int) -> int:
    """Form count for a three-point cover: 1 exactly when both scaled
    residues <aj>, <bj> are nonzero and their sum stays below p."""
    if p < 2:
        raise ValueError(f"cover degree must be at least 2, got {p}")
    rs = (residue(a * j, p), residue(b * j, p), residue(-(a + b) * j, p))
    return _h0_from_residues(rs, p)


def h0_weight_4pt(a: int, b: int, c: int, p: int, j: int) -> int:
    """Form count for a four-point cover, between 0 and 2."""
    if p < 2:
        raise ValueError(f"cover degree must be at least 2, got {p}")
    rs = (
        residue(a * j, p),
        residue(b * j, p),
        residue(c * j, p),
        residue(-(a + b + c) * j, p),
    )
    return _h0_from_residues(rs, p)


def eigen_rank_degree_fcurve(
    a: int, b: int, c: int, d: int, p: int, j: int
) -> tuple[int, Fraction]:
    """Rank and degree of the weight-j eigenbundle on a four-tail family
    whose tails carry total branch weights a, b, c, d.

    The rank is the fiberwise form count.  The degree is nonzero only in
    the balanced case, all four scaled residues positive with sum 2p, and
    then equals the smallest of the eight residues <aj>, <-aj>, ..., <-dj>
    divided by p.
    """
    if p < 2:
        raise ValueError(f"cover degree must be at least 2, got {p}")
    if (a + b + c + d) % p:
        raise ValueError(f"tail weights {(a, b, c, d)} do not sum to 0 mod {p}")
    if not 0 <= j < p:
        raise ValueError(f"character must lie in 0..{p - 1}, got {j}")
    rs = tuple(residue(x * j, p) for x in (a, b, c, d))
    rank = _h0_from_residues(rs, p)
    if all(rs) and sum(rs) == 2 * p:
        degree = Fraction(min(min(rs), p - max(rs)), p)
    else:
        degree = Fraction(0)
    return rank, degree


def oracle_h0(weights: Sequence[int], p: int, j: int) -> int:
    """Brute-force form count for the cover y^p = prod (x - b_i)^{w_i}.

    ``weights`` lists the 2 or 3 finite branch weights; the point at
    infinity carries the complementary weight.  Candidate forms
    y^j dx / prod (x - b_i)^{s_i} are enumerated over the exponent box
    0 <= s_i <= p, a candidate is kept when its vanishing order is
    nonnegative over every branch point, and the span of the survivors
    has one dimension per distinct total exponent among them.
    """
    if p < 2:
        raise ValueError(f"cover degree must be at least 2, got {p}")
    if len(weights) not in (2, 3):
        raise ValueError(f"expected 2 or 3 finite branch weights, got {len(weights)}")
    key = tuple(sorted(residue(int(w), p) for w in weights))
    return _oracle_h0_cached(key, p, residue(j, p))


@lru_cache(maxsize=None)
def _oracle_h0_cached(weights: tuple[int, ...], p: int, j: int) -> int:
    total = sum(weights)
    g_inf = gcd(total, p)
    e_inf = p // g_inf
    # Over a finite branch point of weight w the local sheet count is
    # e = p/gcd(w, p); there y vanishes to order w/gcd(w, p), dx to order
    # e - 1, and x - b_i to order e.  Exponents past the regularity cap
    # can never survive, so the box is trimmed to it.
    caps = []
    for w in weights:
        g = gcd(w, p)
        e = p // g
        caps.append(min(p, (j * (w // g) + e - 1) // e))
    totals = set()
    for sig in product(*(range(c + 1) for c in caps)):
        # order over infinity: poles of y^j and dx against the zeros
        # contributed by every finite factor
        s = sum(sig)
        if s * e_inf - j * (total // g_inf) - e_inf - 1 >= 0:
            totals.add(s)
    if not totals:
        return 0
    return max(totals) - min(totals) + 1
