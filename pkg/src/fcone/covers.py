"""Divisor classes pulled back along cyclic covering maps.

A degree-p cyclic cover of the line branched at n weighted points turns a
pointed rational curve into a positive-genus curve; pushing divisor
classes of the target moduli space back through that construction yields
the classes built here: the Hodge class and its eigenbundle summands,
boundary pullbacks, and a few named nonnegative combinations.

All functions return SymDivisor or FullDivisor values with exact rational
coefficients, unreduced: callers normalize to rays when they need to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterator, Optional, Sequence

from .moduli import FullDivisor, SymDivisor, delta_range


def residue(a: int, p: int) -> int:
    """The representative of a mod p in {0, ..., p−1}."""
    if p < 1:
        raise ValueError("modulus must be positive")
    return a % p


@dataclass(frozen=True)
class WeightData:
    """Branch weights of a degree-p cyclic cover of the line.

    d lists one nonnegative weight per marking; p must divide their sum so
    the cover is unramified away from the markings.  The optional j picks
    a character of the deck action for eigenbundle constructions.
    """

    d: tuple[int, ...]
    p: int
    j: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.p < 2:
            raise ValueError("cover degree must be at least 2")
        if any(x < 0 for x in self.d):
            raise ValueError("weights must be nonnegative")
        if sum(self.d) % self.p:
            raise ValueError(f"degree {self.p} does not divide the total weight {sum(self.d)}")
        if self.j is not None and not 1 <= self.j <= self.p - 1:
            raise ValueError(f"character {self.j} out of range 1..{self.p - 1}")

    @property
    def n(self) -> int:
        return len(self.d)


def _genus_value(weights: Sequence[int], p: int) -> int:
    # Riemann-Hurwitz for y^p = prod (x - x_i)^{d_i}; counts each branch
    # point with p - gcd(d_i, p) and assumes no ramification elsewhere.
    chi = 2 * p - sum(p - gcd(x, p) for x in weights)
    return 1 - chi // 2


def genus(w: WeightData) -> int:
    """Genus of the cover; negative values flag disconnected weight data."""
    return _genus_value(w.d, w.p)


def exceptional_genus(di: int, dj: int, p: int) -> int:
    """Genus of the curve over the bubble where two branch points collide."""
    if p < 2:
        raise ValueError("cover degree must be at least 2")
    q = gcd(di + dj, p)
    twice, remainder = divmod(2 + p - q - gcd(di, p) - gcd(dj, p), 2)
    if remainder:
        raise RuntimeError(f"half-integral genus for weights ({di},{dj}) at degree {p}")
    return twice


def _sides(n: int) -> Iterator[frozenset[int]]:
    # canonical node sides: subsets omitting the last marking
    for size in range(2, n - 1):
        for side in combinations(range(1, n), size):
            yield frozenset(side)


def _side_weight(w: WeightData, side: frozenset[int]) -> int:
    return sum(w.d[i - 1] for i in side)


def _side_genus(w: WeightData, side) -> int:
    # the cover over one side of a node, branched also at the attaching point
    total = _side_weight(w, frozenset(side))
    weights = [w.d[i - 1] for i in side]
    weights.append((-total) % w.p)
    return _genus_value(weights, w.p)


def hodge_class(n: int, p: int) -> SymDivisor:
    """Hodge-class pullback for the unit-weight cover, on the symmetric quotient."""
    if p < 2:
        raise ValueError("cover degree must be at least 2")
    if n % p:
        raise ValueError(f"degree {p} must divide the number of markings {n}")
    psi = Fraction(p * p - 1, 12 * p)
    delta = {k: -Fraction(p * p - gcd(k, p) ** 2, 12 * p) for k in delta_range(n)}
    return SymDivisor(n, psi, delta)


def pullback_boundary(n: int, p: int) -> tuple[SymDivisor, SymDivisor]:
    """Pullbacks of the two boundary classes of the target moduli space.

    Returns (irreducible-node class, separating-node class): a node whose
    side size shares a factor with p stays irreducible upstairs and picks
    up multiplicity gcd²/p; coprime sides split the cover.
    """
    if p < 2:
        raise ValueError("cover degree must be at least 2")
    if n % p:
        raise ValueError(f"degree {p} must divide the number of markings {n}")
    irr = {k: Fraction(gcd(k, p) ** 2, p) for k in delta_range(n) if gcd(k, p) > 1}
    red = {k: Fraction(1, p) for k in delta_range(n) if gcd(k, p) == 1}
    return SymDivisor(n, 0, irr), SymDivisor(n, 0, red)


def pullback_combo(n: int, p: int, c_lambda, c_irr, c_red) -> SymDivisor:
    """Linear combination c_λ·λ + c_irr·δ_irr + c_red·δ_red, pulled back."""
    irr, red = pullback_boundary(n, p)
    return (
        Fraction(c_lambda) * hodge_class(n, p)
        + Fraction(c_irr) * irr
        + Fraction(c_red) * red
    )


def weighted_pullbacks(w: WeightData) -> tuple[FullDivisor, FullDivisor, FullDivisor]:
    """Hodge and boundary pullbacks of a weighted cover, per marking.

    Returns (λ, δ_irr, δ_red) as FullDivisor values.  A node side with
    weight sum coprime to p splits the cover into a one-node curve, but
    only contributes to the separating-node pullback when both halves
    have positive genus; a genus-0 half is contracted on stabilization
    and the image family leaves the boundary.
    """
    p, n = w.p, w.n
    psi = tuple(Fraction(p * p - gcd(di, p) ** 2, 12 * p) for di in w.d)
    lam, irr, red = {}, {}, {}
    for side in _sides(n):
        q = gcd(_side_weight(w, side), p)
        lam[side] = -Fraction(p * p - q * q, 12 * p)
        if q > 1:
            irr[side] = Fraction(q * q, p)
        elif _side_genus(w, side) > 0 and _side_genus(w, frozenset(range(1, n + 1)) - side) > 0:
            red[side] = Fraction(1, p)
    zero = (Fraction(0),) * n
    return (
        FullDivisor(n, psi, lam),
        FullDivisor(n, zero, irr),
        FullDivisor(n, zero, red),
    )


def eigen_det_class(w: WeightData, j: Optional[int] = None) -> FullDivisor:
    """Determinant of the weight-j eigenbundle of the Hodge bundle.

    Closed formula: (1/2p²)[Σ⟨j·d_i⟩(p−⟨j·d_i⟩)ψ_i − Σ⟨j·d(I)⟩(p−⟨j·d(I)⟩)Δ_{I,J}].
    """
    if j is None:
        j = w.j
    if j is None:
        raise ValueError("no character given")
    p, n = w.p, w.n
    if not 1 <= j <= p - 1:
        raise ValueError(f"character {j} out of range 1..{p - 1}")
    scale = Fraction(1, 2 * p * p)

    def weight(t: int) -> Fraction:
        r = residue(t, p)
        return scale * r * (p - r)

    psi = tuple(weight(j * di) for di in w.d)
    delta = {side: -weight(j * _side_weight(w, side)) for side in _sides(n)}
    return FullDivisor(n, psi, delta)


def conformal_blocks_class(p: int, d: Sequence[int]) -> FullDivisor:
    """Class of the level-1 conformal blocks bundle with the given weights."""
    return p * eigen_det_class(WeightData(tuple(d), p), 1)


def p5_class(n: int, j: int) -> SymDivisor:
    """The two nonnegative degree-5 eigenbundle combinations 50·det E_j − δ_irr."""
    if n % 5:
        raise ValueError(f"5 must divide the number of markings {n}")
    if j == 1:
        psi, near, far = 4, -4, -6
    elif j == 2:
        psi, near, far = 6, -6, -4
    else:
        raise ValueError("character must be 1 or 2")
    delta = {}
    for k in delta_range(n):
        r = k % 5
        if r == 0:
            delta[k] = Fraction(-5)
        elif r in (1, 4):
            delta[k] = Fraction(near)
        else:
            delta[k] = Fraction(far)
    return SymDivisor(n, psi, delta)


def log_canonical_class(n: int, p: int) -> SymDivisor:
    """ψ − ΣΔ_k − (1/2)Σ_{p|k}Δ_k, the boundary log canonical combination."""
    if p < 2:
        raise ValueError("cover degree must be at least 2")
    if n % p:
        raise ValueError(f"degree {p} must divide the number of markings {n}")
    delta = {
        k: Fraction(-3, 2) if k % p == 0 else Fraction(-1)
        for k in delta_range(n)
    }
    return SymDivisor(n, 1, delta)
