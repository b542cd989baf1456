"""Divisor and curve classes on the moduli of stable n-pointed rational curves.

Two coordinate systems coexist.  On the symmetric quotient, a divisor class
is written in the basis ψ, Δ_2, ..., Δ_{⌊n/2⌋}, where ψ is the total
cotangent class Σψ_i and Δ_k is the boundary class of nodal curves whose
node splits the markings into sides of sizes k and n−k.  Before the
quotient, a class has one ψ_i per marking and one coefficient per boundary
class Δ_{I,J}; the key for {I, J} is the side not containing the marking n.

The two bases are redundant on the symmetric side: (n−1)ψ = Σ_k k(n−k)Δ_k,
so equality of symmetric divisors is always decided after eliminating ψ.

Curve classes supported are the F-curves (one-dimensional boundary strata,
indexed by partitions of n into four nonzero parts, or by set partitions of
the markings into four blocks) and the sweeping test curves T_k inside Δ_k.
All intersection rules here are validated against independently known
coordinate lists in the test suite.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Optional, Sequence

from .exactlin import QVector, format_rational, parse_rational


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"need at least 4 markings, got n={n}")


def delta_range(n: int) -> range:
    """Indices of the symmetric boundary basis Δ_2..Δ_{⌊n/2⌋}."""
    return range(2, n // 2 + 1)


class SymDivisor:
    """Symmetric divisor class: a ψ-coefficient plus one coefficient per Δ_k.

    Immutable.  Supports +, -, and scaling by a rational.  Equality is
    equality of classes, i.e. of the pure-Δ expansions, not of the raw
    (ψ, Δ) coordinate tuples.
    """

    __slots__ = ("n", "psi", "_delta")

    def __init__(self, n: int, psi=0, delta: Optional[Mapping[int, object]] = None):
        _check_n(n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "psi", Fraction(psi))
        coeffs = {}
        for k, c in (delta or {}).items():
            if k not in delta_range(n):
                raise ValueError(f"Delta_{k} is not a basis class for n={n}")
            c = Fraction(c)
            if c:
                coeffs[k] = c
        object.__setattr__(self, "_delta", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("SymDivisor is immutable")

    def delta(self, k: int) -> Fraction:
        if k not in delta_range(self.n):
            raise ValueError(f"Delta_{k} is not a basis class for n={self.n}")
        return self._delta.get(k, Fraction(0))

    def delta_map(self) -> dict[int, Fraction]:
        return dict(self._delta)

    def delta_vector(self) -> QVector:
        return tuple(self.delta(k) for k in delta_range(self.n))

    def class_vector(self) -> QVector:
        """Coordinates in the pure-Δ basis (ψ eliminated)."""
        return psi_expand(self).delta_vector()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.class_vector())

    def _binop(self, other: "SymDivisor", sign: int) -> "SymDivisor":
        if not isinstance(other, SymDivisor):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot combine divisors with different n")
        delta = dict(self._delta)
        for k, c in other._delta.items():
            delta[k] = delta.get(k, Fraction(0)) + sign * c
        return SymDivisor(self.n, self.psi + sign * other.psi, delta)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return Fraction(-1) * self

    def __mul__(self, scalar):
        c = Fraction(scalar)
        return SymDivisor(self.n, c * self.psi, {k: c * v for k, v in self._delta.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymDivisor):
            return NotImplemented
        return self.n == other.n and self.class_vector() == other.class_vector()

    def __hash__(self):
        return hash((self.n, self.class_vector()))

    def __repr__(self):
        return f"SymDivisor({self.n}, {format_divisor(self)!r})"


def sym_divisor_from_vector(n: int, vector: Sequence) -> SymDivisor:
    """Build a pure-Δ divisor from coordinates on Δ_2..Δ_{⌊n/2⌋}."""
    ks = list(delta_range(n))
    if len(vector) != len(ks):
        raise ValueError(f"expected {len(ks)} coordinates for n={n}, got {len(vector)}")
    return SymDivisor(n, 0, dict(zip(ks, vector)))


def psi_expand(d: SymDivisor) -> SymDivisor:
    """Rewrite the class with ψ-coefficient 0 via (n−1)ψ = Σ k(n−k)Δ_k."""
    if d.psi == 0:
        return d
    n = d.n
    delta = d.delta_map()
    for k in delta_range(n):
        delta[k] = delta.get(k, Fraction(0)) + d.psi * Fraction(k * (n - k), n - 1)
    return SymDivisor(n, 0, delta)


@dataclass(frozen=True)
class SymFCurve:
    """F-curve type: partition of n into four parts, stored descending."""

    parts: tuple[int, int, int, int]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if len(parts) != 4 or any(not isinstance(v, int) or v < 1 for v in parts):
            raise ValueError(f"F-curve needs 4 positive parts, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "F_{%d,%d,%d,%d}" % self.parts


def enumerate_sym_fcurves(n: int) -> list[SymFCurve]:
    """All F-curve types on n markings, in descending lexicographic order.

    This ordering puts the curve with the largest spine part first; it is
    the order used for every table and report in the package.
    """
    _check_n(n)
    found = set()
    for b in range(1, n):
        for c in range(1, b + 1):
            for d in range(1, c + 1):
                a = n - b - c - d
                if a >= b:
                    found.add((a, b, c, d))
    return [SymFCurve(parts) for parts in sorted(found, reverse=True)]


def fcurve_class_vector(f: SymFCurve) -> QVector:
    """Coordinates of the F-curve class in the dual pure-Δ basis.

    Each of the three ways to split the four parts into pairs contributes
    +1 on Δ_{min(x+y, n−x−y)}; each part v ≥ 2 contributes −1 on
    Δ_{min(v, n−v)}.
    """
    n = f.n
    coeffs = {k: 0 for k in delta_range(n)}
    a, b, c, d = f.parts
    for x, y in ((a + b, c + d), (a + c, b + d), (a + d, b + c)):
        coeffs[min(x, y)] += 1
    for v in f.parts:
        if v >= 2:
            coeffs[min(v, n - v)] -= 1
    return tuple(Fraction(coeffs[k]) for k in delta_range(n))


def sym_pairing(d: SymDivisor, f: SymFCurve) -> Fraction:
    """Intersection number of a symmetric divisor with an F-curve class."""
    if d.n != f.n:
        raise ValueError(f"divisor lives on n={d.n}, curve on n={f.n}")
    from .exactlin import dot

    return dot(d.class_vector(), fcurve_class_vector(f))


def tk_pairing(d: SymDivisor, k: int) -> Fraction:
    """Degree of a symmetric divisor on the test curve T_k sweeping Δ_k.

    T_k pairs as Δ_k·T_k = 2−k and Δ_{k−1}·T_k = k, all other boundary
    classes 0.
    """
    n = d.n
    if not 3 <= k <= n // 2:
        raise ValueError(f"T_k needs 3 <= k <= {n // 2}, got k={k}")
    expanded = psi_expand(d)
    return expanded.delta(k) * (2 - k) + expanded.delta(k - 1) * k


def proportional(d1: SymDivisor, d2: SymDivisor) -> Optional[Fraction]:
    """The positive constant c with d1 = c·d2 as classes, if one exists.

    Both zero gives 1; zero against nonzero, a negative ratio, or genuinely
    independent classes give None.
    """
    if d1.n != d2.n:
        raise ValueError("cannot compare divisors with different n")
    v1, v2 = d1.class_vector(), d2.class_vector()
    if all(x == 0 for x in v2):
        return Fraction(1) if all(x == 0 for x in v1) else None
    i = next(i for i, x in enumerate(v2) if x != 0)
    c = v1[i] / v2[i]
    if c <= 0:
        return None
    return c if all(x == c * y for x, y in zip(v1, v2)) else None


# ---------------------------------------------------------------------------
# Classes on the unquotiented space.


def canonical_side(markings: Iterable[int], n: int) -> frozenset[int]:
    """The representative side of a boundary partition: the one without n."""
    side = frozenset(markings)
    if not side <= frozenset(range(1, n + 1)):
        raise ValueError(f"markings {sorted(side)} out of range for n={n}")
    if n in side:
        side = frozenset(range(1, n + 1)) - side
    if not 2 <= len(side) <= n - 2:
        raise ValueError(f"boundary class needs sides of size >= 2, got {sorted(side)}")
    return side


class FullDivisor:
    """Divisor class before symmetrization: ψ_1..ψ_n plus Δ_{I,J} terms.

    Boundary keys are canonical sides (the half of the partition not
    containing the marking n); zero coefficients are dropped on
    construction.
    """

    __slots__ = ("n", "psi", "_delta")

    def __init__(self, n: int, psi: Sequence = (), delta: Optional[Mapping] = None):
        _check_n(n)
        object.__setattr__(self, "n", n)
        psi = tuple(Fraction(c) for c in psi) if psi else (Fraction(0),) * n
        if len(psi) != n:
            raise ValueError(f"need {n} psi-coefficients, got {len(psi)}")
        object.__setattr__(self, "psi", psi)
        coeffs = {}
        for side, c in (delta or {}).items():
            c = Fraction(c)
            if c:
                key = canonical_side(side, n)
                coeffs[key] = coeffs.get(key, Fraction(0)) + c
        object.__setattr__(self, "_delta", {k: c for k, c in coeffs.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("FullDivisor is immutable")

    def delta(self, side: Iterable[int]) -> Fraction:
        return self._delta.get(canonical_side(side, self.n), Fraction(0))

    def delta_map(self) -> dict[frozenset[int], Fraction]:
        return dict(self._delta)

    def _binop(self, other: "FullDivisor", sign: int) -> "FullDivisor":
        if not isinstance(other, FullDivisor):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot combine divisors with different n")
        delta = dict(self._delta)
        for key, c in other._delta.items():
            delta[key] = delta.get(key, Fraction(0)) + sign * c
        psi = tuple(a + sign * b for a, b in zip(self.psi, other.psi))
        return FullDivisor(self.n, psi, delta)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        return FullDivisor(self.n, tuple(c * x for x in self.psi),
                           {k: c * v for k, v in self._delta.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return Fraction(-1) * self

    def __eq__(self, other):
        if not isinstance(other, FullDivisor):
            return NotImplemented
        return self.n == other.n and self.psi == other.psi and self._delta == other._delta

    def __hash__(self):
        return hash((self.n, self.psi, frozenset(self._delta.items())))

    def is_zero(self) -> bool:
        return not self._delta and all(c == 0 for c in self.psi)

    def __repr__(self):
        return f"FullDivisor(n={self.n}, psi={self.psi}, {len(self._delta)} boundary terms)"

    def to_json(self) -> str:
        delta = {
            ",".join(str(i) for i in sorted(side)): format_rational(c)
            for side, c in sorted(self._delta.items(), key=lambda kv: sorted(kv[0]))
        }
        return json.dumps(
            {"n": self.n, "psi": [format_rational(c) for c in self.psi], "delta": delta}
        )

    @classmethod
    def from_json(cls, text: str) -> "FullDivisor":
        data = json.loads(text)
        delta = {
            frozenset(int(i) for i in key.split(",")): parse_rational(value)
            for key, value in data.get("delta", {}).items()
        }
        return cls(data["n"], [parse_rational(c) for c in data.get("psi", [])] or (), delta)


@dataclass(frozen=True)
class FullFCurve:
    """F-curve as a set partition of the markings into four blocks."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=min))
        if len(blocks) != 4 or any(not b for b in blocks):
            raise ValueError("F-curve needs 4 nonempty blocks")
        union = frozenset().union(*blocks)
        if len(union) != sum(len(b) for b in blocks):
            raise ValueError("F-curve blocks must be disjoint")
        if union != frozenset(range(1, len(union) + 1)):
            raise ValueError("F-curve blocks must partition {1..n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def sym_type(self) -> SymFCurve:
        return SymFCurve(tuple(len(b) for b in self.blocks))


def standard_full_fcurve(f: SymFCurve) -> FullFCurve:
    """The realization of an F-curve type on consecutive marking blocks."""
    bounds = [0]
    for v in f.parts:
        bounds.append(bounds[-1] + v)
    return FullFCurve(tuple(
        frozenset(range(bounds[i] + 1, bounds[i + 1] + 1)) for i in range(4)
    ))


def enumerate_full_fcurves(n: int) -> list[FullFCurve]:
    """All set partitions of {1..n} into four nonempty blocks."""
    _check_n(n)
    out = []

    def split(rest: list[int], blocks: list[list[int]]):
        if not rest:
            if all(blocks):
                out.append(FullFCurve(tuple(frozenset(b) for b in blocks)))
            return
        item, rest = rest[0], rest[1:]
        for i, block in enumerate(blocks):
            if block or all(not b for b in blocks[i + 1:]):
                # empty blocks are filled left to right, killing relabelings
                block.append(item)
                split(rest, blocks)
                block.pop()
            if not block:
                break

    split(list(range(1, n + 1)), [[], [], [], []])
    return out


def full_pairing(d: FullDivisor, f: FullFCurve) -> Fraction:
    """Intersection number of an unsymmetrized divisor with an F-curve.

    ψ_i meets the curve once exactly when {i} is one of the four blocks.
    A boundary class Δ_{I,J} meets it +1 when {I, J} merges the blocks two
    against two, −1 when one side is a single block, and 0 otherwise.
    """
    if d.n != f.n:
        raise ValueError(f"divisor lives on n={d.n}, curve on n={f.n}")
    total = Fraction(0)
    for block in f.blocks:
        if len(block) == 1:
            (i,) = block
            total += d.psi[i - 1]
    for side, c in d.delta_map().items():
        covered = []
        saturated = True
        for block in f.blocks:
            if block <= side:
                covered.append(block)
            elif block & side:
                saturated = False
                break
        if not saturated:
            continue
        if len(covered) == 2:
            total += c
        elif len(covered) in (1, 3):
            total -= c
    return total


def symmetrize(d: FullDivisor) -> SymDivisor:
    """Average of the class over all relabelings of the markings.

    In closed form the ψ-coefficient is (Σψ_i)/n and the Δ_k coefficient is
    the sum of the coefficients on boundary classes with min side k divided
    by the number of such classes.
    """
    n = d.n
    psi = sum(d.psi, Fraction(0)) / n
    sums: dict[int, Fraction] = {}
    for side, c in d.delta_map().items():
        k = min(len(side), n - len(side))
        sums[k] = sums.get(k, Fraction(0)) + c
    delta = {}
    for k, total in sums.items():
        classes = Fraction(factorial(n), factorial(k) * factorial(n - k))
        if 2 * k == n:
            classes /= 2
        delta[k] = total / classes
    return SymDivisor(n, psi, delta)


# ---------------------------------------------------------------------------
# Divisor literal grammar: rational-coefficient terms in psi and D<k>.

_TERM = re.compile(r"^(?:(?P<coef>[0-9]+(?:/[0-9]+)?)\s*\*\s*)?(?P<sym>psi|D(?P<k>[0-9]+))$")


def parse_divisor(text: str, n: int) -> SymDivisor:
    """Parse literals like ``2*psi - 2*D2 - 3*D3`` or ``0``."""
    _check_n(n)
    tokens = [t.strip() for t in re.split(r"([+-])", text) if t.strip()]
    if not tokens:
        raise ValueError("empty divisor literal")
    psi = Fraction(0)
    delta: dict[int, Fraction] = {}
    # optional sign at the start, then strictly alternating term, sign, term, ...
    sign: Optional[int] = 1
    pending_sign = False
    for tok in tokens:
        if tok in "+-":
            if pending_sign:
                raise ValueError(f"two consecutive signs in divisor literal {text!r}")
            sign = 1 if tok == "+" else -1
            pending_sign = True
            continue
        if sign is None:
            raise ValueError(f"missing +/- between terms in {text!r}")
        m = _TERM.match(tok)
        if m:
            coef = sign * (Fraction(m.group("coef")) if m.group("coef") else Fraction(1))
            if m.group("sym") == "psi":
                psi += coef
            else:
                k = int(m.group("k"))
                if k not in delta_range(n):
                    raise ValueError(f"D{k} is not a basis class for n={n}")
                delta[k] = delta.get(k, Fraction(0)) + coef
        elif parse_rational(tok) != 0:
            raise ValueError(f"constant term {tok!r} is not a divisor")
        sign = None
        pending_sign = False
    if pending_sign:
        raise ValueError(f"dangling sign in divisor literal {text!r}")
    return SymDivisor(n, psi, delta)


def format_divisor(d: SymDivisor) -> str:
    """Render in the literal grammar, all terms over one common denominator."""
    terms = []
    if d.psi:
        terms.append(("psi", d.psi))
    for k in delta_range(d.n):
        c = d.delta(k)
        if c:
            terms.append((f"D{k}", c))
    if not terms:
        return "0"
    from math import lcm

    common = lcm(*(c.denominator for _, c in terms))
    rendered = []
    for i, (sym, c) in enumerate(terms):
        num = c.numerator * (common // c.denominator)
        mag = f"{abs(num)}/{common}" if common > 1 else f"{abs(num)}"
        if i == 0:
            prefix = "-" if num < 0 else ""
            rendered.append(f"{prefix}{mag}*{sym}")
        else:
            rendered.append(f"{'-' if num < 0 else '+'} {mag}*{sym}")
    return " ".join(rendered)
