"""Exact rational polyhedral cone engine.

A cone is given either by homogeneous inequalities (ConeH: normal·x ≥ 0)
or by generators (ConeV: extreme rays plus a lineality basis).  The
conversion from H to V is the double description method with incremental
inequality insertion and exact adjacency tests; everything runs over
Fractions, so the output is exact and canonical.

Canonical forms: normals and rays are primitive integer vectors (no sign
flip, orientation is meaningful); the lineality basis is the reduced row
echelon basis of the lineality space; rays are reduced modulo lineality
and sorted lexicographically.  Two ConeV values describing the same cone
therefore compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exactlin import dot, kernel_basis, primitive, rank


def _unit(i: int, dim: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(dim))


def _rref_basis(vectors: Iterable[Sequence], dim: int) -> tuple[tuple[int, ...], ...]:
    """Canonical primitive basis of the span: reduced row echelon rows."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots = []
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(primitive(rows[i]) for i in range(r))


def _reduce_mod(v: Sequence, basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Zero out the pivot coordinates of v against an RREF basis.

    Only positive rescaling and shifts along the basis are used, so cone
    membership is preserved when the basis spans lineality directions.
    """
    vec = [Fraction(x) for x in v]
    for row in basis:
        j = next(i for i, x in enumerate(row) if x != 0)
        if vec[j]:
            factor = vec[j] / row[j]
            vec = [x - factor * y for x, y in zip(vec, row)]
    if all(x == 0 for x in vec):
        return tuple(0 for _ in vec)
    return primitive(vec, flip_sign=False)


@dataclass(frozen=True)
class ConeH:
    """Cone cut out by homogeneous inequalities normal·x ≥ 0."""

    dim: int
    normals: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("cone dimension must be at least 1")
        seen = set()
        out = []
        for a in self.normals:
            if len(a) != self.dim:
                raise ValueError(f"normal {a} does not have dimension {self.dim}")
            if all(Fraction(x) == 0 for x in a):
                continue
            v = primitive(a, flip_sign=False)
            if v not in seen:
                seen.add(v)
                out.append(v)
        object.__setattr__(self, "normals", tuple(out))


@dataclass(frozen=True)
class ConeV:
    """Cone spanned by extreme rays and a lineality space."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("cone dimension must be at least 1")
        for v in (*self.rays, *self.lineality):
            if len(v) != self.dim:
                raise ValueError(f"generator {v} does not have dimension {self.dim}")
        lin = _rref_basis(self.lineality, self.dim)
        rays = set()
        for r in self.rays:
            reduced = _reduce_mod(r, lin)
            if any(reduced):
                rays.add(reduced)
        object.__setattr__(self, "lineality", lin)
        object.__setattr__(self, "rays", tuple(sorted(rays)))


@dataclass(frozen=True)
class Certificate:
    """Witness of extremality: independent tight normals of rank dim−1."""

    indices: tuple[int, ...]
    rank: int


def contains(c: ConeH, v: Sequence) -> bool:
    if len(v) != c.dim:
        raise ValueError(f"vector of dimension {len(v)} against cone of dimension {c.dim}")
    return all(dot(a, v) >= 0 for a in c.normals)


def extremality_certificate(c: ConeH, v: Sequence) -> Optional[Certificate]:
    """Certify that v spans an extreme ray of the cone.

    Returns a rank-(dim−1) independent subset of the inequalities tight at
    v (as indices into c.normals), or None when the tight normals have any
    other rank.  v must lie in the cone.
    """
    if not contains(c, v):
        raise ValueError("vector is not in the cone")
    tight = [i for i, a in enumerate(c.normals) if dot(a, v) == 0]
    full_rank = rank([c.normals[i] for i in tight]) if tight else 0
    if full_rank != c.dim - 1:
        return None
    chosen: list[int] = []
    for i in tight:
        if rank([c.normals[j] for j in chosen + [i]]) > len(chosen):
            chosen.append(i)
        if len(chosen) == full_rank:
            break
    return Certificate(tuple(chosen), full_rank)


def extreme_rays(c: ConeH) -> ConeV:
    """V-representation via double description with incremental insertion.

    State: a lineality basis plus extreme rays (mod lineality) of the cone
    cut by the inequalities processed so far, each ray carrying its tight
    set.  A new inequality either slices the lineality space (every ray is
    projected onto the new wall and the surviving lineality direction
    becomes a ray) or removes the strictly negative rays, replacing them
    with combinations of adjacent positive/negative pairs.  Adjacency is
    the exact rank test: common tight normals of rank dim − lineality − 2.
    """
    dim = c.dim
    lineality: list[tuple[int, ...]] = [_unit(i, dim) for i in range(dim)]
    rays: list[tuple[tuple[int, ...], frozenset[int]]] = []
    processed: set[int] = set()
    remaining = list(range(len(c.normals)))
    while remaining:
        # cheapest-first heuristic: fewest currently violated rays
        nxt = min(
            remaining,
            key=lambda i: (sum(1 for r, _ in rays if dot(c.normals[i], r) < 0), c.normals[i]),
        )
        remaining.remove(nxt)
        a = c.normals[nxt]
        hit = next((v for v in lineality if dot(a, v) != 0), None)
        if hit is not None:
            v0 = hit if dot(a, hit) > 0 else tuple(-x for x in hit)
            av0 = dot(a, v0)
            new_lin = []
            for v in lineality:
                if v is hit:
                    continue
                av = dot(a, v)
                vec = v if av == 0 else tuple(av0 * x - av * y for x, y in zip(v, v0))
                new_lin.append(primitive(vec))
            lineality = new_lin
            new_rays = []
            for r, tight in rays:
                ar = dot(a, r)
                vec = r if ar == 0 else tuple(av0 * x - ar * y for x, y in zip(r, v0))
                new_rays.append((primitive(vec, flip_sign=False), tight | {nxt}))
            new_rays.append((primitive(v0, flip_sign=False), frozenset(processed)))
            rays = new_rays
        else:
            values = [(dot(a, r), r, tight) for r, tight in rays]
            negative = [(ar, r, tight) for ar, r, tight in values if ar < 0]
            if negative:
                kept = [(r, tight | {nxt}) if ar == 0 else (r, tight)
                        for ar, r, tight in values if ar >= 0]
                positive = [(ar, r, tight) for ar, r, tight in values if ar > 0]
                adjacency_rank = dim - len(lineality) - 2
                for ap, rp, tp in positive:
                    for an, rn, tn in negative:
                        common = tp & tn
                        if rank([c.normals[i] for i in common]) != adjacency_rank:
                            continue
                        vec = tuple(ap * x - an * y for x, y in zip(rn, rp))
                        kept.append((primitive(vec, flip_sign=False), common | {nxt}))
                rays = kept
        processed.add(nxt)
    return ConeV(dim, tuple(r for r, _ in rays), tuple(lineality))


def extreme_rays_by_enumeration(c: ConeH) -> ConeV:
    """Brute-force reference enumeration for pointed cones.

    Every extreme ray of a pointed cone is the kernel of some dim−1
    independent normals; enumerate all such subsets, keep the kernel
    direction that lies in the cone, and certify tight rank dim−1.
    """
    dim = c.dim
    if not c.normals or rank(c.normals) < dim:
        raise ValueError("enumeration oracle requires a pointed cone")
    if dim == 1:
        candidates = [(1,), (-1,)]
    else:
        candidates = []
        for subset in combinations(range(len(c.normals)), dim - 1):
            sub = [c.normals[i] for i in subset]
            if rank(sub) != dim - 1:
                continue
            (v,) = kernel_basis(sub)
            candidates.append(v)
            candidates.append(tuple(-x for x in v))
    found = set()
    for v in candidates:
        if not contains(c, v):
            continue
        tight = [a for a in c.normals if dot(a, v) == 0]
        if tight and rank(tight) == dim - 1:
            found.add(primitive(v, flip_sign=False))
    return ConeV(dim, tuple(found), ())


# ---------------------------------------------------------------------------
# Plain-text H/V files: header `H <dim> <count>` or `V <dim> <count>`, one
# integer vector per line; a V description with lineality appends a second
# block headed `L <dim> <count>`.


def format_cone(cone) -> str:
    lines = []
    if isinstance(cone, ConeH):
        lines.append(f"H {cone.dim} {len(cone.normals)}")
        lines.extend(" ".join(str(x) for x in a) for a in cone.normals)
    elif isinstance(cone, ConeV):
        lines.append(f"V {cone.dim} {len(cone.rays)}")
        lines.extend(" ".join(str(x) for x in r) for r in cone.rays)
        if cone.lineality:
            lines.append(f"L {cone.dim} {len(cone.lineality)}")
            lines.extend(" ".join(str(x) for x in v) for v in cone.lineality)
    else:
        raise TypeError(f"not a cone: {cone!r}")
    return "\n".join(lines) + "\n"


def parse_cone(text: str):
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("empty cone description")

    def read_block(expect_kinds):
        header = rows.pop(0)
        if len(header) != 3 or header[0] not in expect_kinds:
            raise ValueError(f"malformed cone header {' '.join(header)!r}")
        kind, dim, count = header[0], int(header[1]), int(header[2])
        if count > len(rows):
            raise ValueError(f"{kind} block promises {count} rows, found {len(rows)}")
        vectors = []
        for _ in range(count):
            row = rows.pop(0)
            if len(row) != dim:
                raise ValueError(f"row {' '.join(row)!r} does not have dimension {dim}")
            vectors.append(tuple(int(x) for x in row))
        return kind, dim, tuple(vectors)

    kind, dim, vectors = read_block({"H", "V"})
    if kind == "H":
        if rows:
            raise ValueError("trailing content after H block")
        return ConeH(dim, vectors)
    lineality = ()
    if rows:
        lkind, ldim, lineality = read_block({"L"})
        if ldim != dim:
            raise ValueError("lineality block dimension differs from ray block")
        if rows:
            raise ValueError("trailing content after L block")
    return ConeV(dim, vectors, lineality)
