"""Canonical tables: extremal rays of the symmetric F-cone together with
their identifications against cyclic-cover classes, F-curve coordinate
tables, and the certificate blocks for the triple-cover extremal class.

Every renderer returns CSV text with a fixed header and a fixed row
order, so the output is byte-stable and suitable for golden-file tests.
"""

from __future__ import annotations

import csv
import io
from typing import Optional, Sequence

from .cones import ConeH, ConeV, extreme_rays
from .covers import (
    WeightData,
    eigen_det_class,
    hodge_class,
    p5_class,
    pullback_combo,
    weighted_pullbacks,
)
from .moduli import (
    SymDivisor,
    SymFCurve,
    enumerate_sym_fcurves,
    fcurve_class_vector,
    proportional,
    sym_divisor_from_vector,
    sym_pairing,
    symmetrize,
)

COMBO_COEFFS = ((9, -1, 0), (12, -1, 0), (10, -1, -2))

TABLE_NAMES = ("n6", "n7", "n9", "n10", "n10-fcurves", "t3-certificates")


def fcurve_cone(n: int) -> ConeH:
    """The symmetric F-cone on Δ_2..Δ_{⌊n/2⌋} coordinates, one inequality
    per F-curve type."""
    dim = n // 2 - 1
    return ConeH(dim, [fcurve_class_vector(f) for f in enumerate_sym_fcurves(n)])


def fcone_rays(n: int) -> ConeV:
    return extreme_rays(fcurve_cone(n))


def _weight_label(weights: Sequence[int]) -> str:
    runs = []
    for w in weights:
        if runs and runs[-1][0] == w:
            runs[-1][1] += 1
        else:
            runs.append([w, 1])
    return " ".join(f"{w}^{c}" if c > 1 else f"{w}" for w, c in runs)


def annotation_candidates(n: int) -> list[tuple[str, SymDivisor]]:
    """Deterministic list of labeled cover classes used to identify rays.

    Covers the unit-weight pullbacks for every degree dividing n, the
    standard degree combinations, the symmetrized eigenbundle determinants,
    and the weighted covers that perturb a single marking weight.
    """
    out: list[tuple[str, SymDivisor]] = []
    for p in range(2, n + 1):
        if n % p:
            continue
        out.append((f"hodge({n},{p})", hodge_class(n, p)))
        for cl, ci, cr in COMBO_COEFFS:
            out.append(
                (f"combo({n},{p},{cl},{ci},{cr})", pullback_combo(n, p, cl, ci, cr))
            )
        w = WeightData((1,) * n, p)
        for j in range(1, p):
            out.append((f"eigen(1^{n},{p},{j})", symmetrize(eigen_det_class(w, j))))
    if n % 5 == 0:
        for j in (1, 2):
            out.append((f"p5({n},{j})", p5_class(n, j)))
    for v in (0, 2):
        weights = (1,) * (n - 1) + (v,)
        label = _weight_label(weights)
        total = sum(weights)
        for p in range(2, n + 1):
            if total % p:
                continue
            w = WeightData(weights, p)
            lam, irr, red = (symmetrize(d) for d in weighted_pullbacks(w))
            out.append((f"weighted({label},{p})", lam))
            for cl, ci, cr in COMBO_COEFFS:
                out.append(
                    (
                        f"wcombo({label},{p},{cl},{ci},{cr})",
                        lam * cl + irr * ci + red * cr,
                    )
                )
            for j in range(1, p):
                out.append(
                    (f"eigenw({label},{p},{j})", symmetrize(eigen_det_class(w, j)))
                )
    return out


def ray_annotations(n: int) -> list[tuple[tuple[int, ...], list[str]]]:
    """Extreme rays of the F-cone with the labels of every candidate class
    lying on each ray."""
    candidates = annotation_candidates(n)
    rows = []
    for ray in fcone_rays(n).rays:
        div = sym_divisor_from_vector(n, ray)
        labels = [lab for lab, d in candidates if proportional(d, div) is not None]
        rows.append((ray, labels))
    return rows


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_rays_csv(n: int) -> str:
    header = [f"D{k}" for k in range(2, n // 2 + 1)] + ["annotations"]
    rows = []
    for ray, labels in ray_annotations(n):
        rows.append([str(x) for x in ray] + ["; ".join(labels)])
    return _csv(header, rows)


def render_fcurves_csv(n: int) -> str:
    header = ["curve"] + [f"D{k}" for k in range(2, n // 2 + 1)]
    rows = []
    for f in enumerate_sym_fcurves(n):
        vec = fcurve_class_vector(f)
        rows.append([str(f)] + [str(x) for x in vec])
    return _csv(header, rows)


def triple_cover_divisor(n: int) -> SymDivisor:
    """The extremal class cut out by degree-3 covers: 2ψ - 2Δ - Σ_{3|k}Δ_k."""
    return pullback_combo(n, 3, 9, -1, 0)


def _t3_curve_blocks(n: int) -> list[tuple[str, list[SymFCurve]]]:
    t, r = divmod(n, 12)
    if r not in (0, 3, 6, 9):
        raise ValueError(f"number of markings must be a multiple of 3, got {n}")

    def F(*parts: int) -> SymFCurve:
        return SymFCurve(parts)

    if n == 12:
        return [("base", [F(5, 5, 1, 1), F(4, 4, 2, 2), F(1, 2, 2, 7), F(1, 1, 2, 8)])]

    blocks: list[tuple[str, list[SymFCurve]]] = []
    if t >= 2:
        # leading block: the generic pattern collides at i = 0, where the
        # first two rows would be the same curve class, so one row is
        # traded for a longer curve
        blocks.append(
            (
                "block-0",
                [
                    F(1, 1, 2, n - 4),
                    F(1, 2, 2, n - 5),
                    F(4, 1, 2, n - 7),
                    F(5, 1, 1, n - 7),
                    F(4, 2, 2, n - 8),
                    F(5, 1, 2, n - 8),
                ],
            )
        )
        for i in range(1, t - 1):
            blocks.append(
                (
                    f"block-{i}",
                    [
                        F(6 * i + 1, 1, 2, n - 4 - 6 * i),
                        F(6 * i + 2, 1, 1, n - 4 - 6 * i),
                        F(6 * i + 1, 2, 2, n - 5 - 6 * i),
                        F(6 * i + 4, 2, 2, n - 8 - 6 * i),
                        F(6 * i + 5, 1, 1, n - 7 - 6 * i),
                        F(6 * i + 5, 1, 2, n - 8 - 6 * i),
                    ],
                )
            )
    if r == 0:
        final = [
            F(6 * t - 5, 1, 2, 6 * t + 2),
            F(6 * t - 4, 1, 1, 6 * t + 2),
            F(6 * t - 5, 2, 2, 6 * t + 1),
            F(6 * t - 1, 1, 1, 6 * t - 1),
        ]
    elif r == 3:
        final = [
            F(6 * t - 5, 1, 2, 6 * t + 5),
            F(6 * t - 4, 1, 1, 6 * t + 5),
            F(6 * t - 1, 1, 1, 6 * t + 2),
            F(6 * t - 4, 1, 2, 6 * t + 4),
            F(6 * t - 1, 1, 2, 6 * t + 1),
        ]
    elif r == 6:
        final = [
            F(6 * t - 5, 1, 2, 6 * t + 8),
            F(6 * t - 4, 1, 1, 6 * t + 8),
            F(6 * t - 5, 2, 2, 6 * t + 7),
            F(6 * t - 1, 1, 1, 6 * t + 5),
            F(6 * t - 2, 1, 2, 6 * t + 5),
            F(6 * t - 2, 2, 2, 6 * t + 4),
            F(6 * t + 1, 2, 2, 6 * t + 1),
        ]
    else:
        final = [
            F(6 * t - 5, 1, 2, 6 * t + 11),
            F(6 * t - 4, 1, 1, 6 * t + 11),
            F(6 * t - 5, 2, 2, 6 * t + 10),
            F(6 * t - 1, 1, 1, 6 * t + 8),
            F(6 * t - 2, 1, 2, 6 * t + 8),
            F(6 * t - 2, 2, 2, 6 * t + 7),
            F(6 * t + 1, 1, 2, 6 * t + 5),
            F(6 * t + 1, 2, 2, 6 * t + 4),
        ]
    blocks.append(("final", final))
    return blocks


def t3_certificate_blocks(n: int) -> list[tuple[str, SymFCurve]]:
    """Zero-degree F-curves certifying extremality of the triple-cover ray.

    Rows come in blocks whose pairing matrices against consecutive Δ windows
    are triangular in shape; repeated curve classes are dropped, and when a
    block family degenerates (small n re-uses a curve class) the span is
    completed greedily from the remaining zero-degree curves.
    """
    if n % 3 or n < 12:
        raise ValueError(f"certificate blocks need a multiple of 3 at least 12, got {n}")
    div = triple_cover_divisor(n)
    rows: list[tuple[str, SymFCurve]] = []
    seen: set[SymFCurve] = set()
    vectors: list[tuple] = []

    def rank_of(vecs) -> int:
        from .exactlin import rank

        return rank(vecs) if vecs else 0

    for label, curves in _t3_curve_blocks(n):
        for f in curves:
            if sym_pairing(div, f) != 0:
                raise RuntimeError(f"certificate curve {f} has nonzero degree")
            if f in seen:
                continue
            seen.add(f)
            rows.append((label, f))
            vectors.append(fcurve_class_vector(f))
    target = n // 2 - 2
    if rank_of(vectors) < target:
        for f in enumerate_sym_fcurves(n):
            if f in seen or sym_pairing(div, f) != 0:
                continue
            trial = vectors + [fcurve_class_vector(f)]
            if rank_of(trial) > rank_of(vectors):
                vectors = trial
                seen.add(f)
                rows.append(("patch", f))
            if rank_of(vectors) == target:
                break
    if rank_of(vectors) != target:
        raise RuntimeError(f"certificate for n={n} spans rank {rank_of(vectors)}, need {target}")
    return rows


def render_t3_certificates_csv(n: int) -> str:
    header = ["block", "curve"] + [f"D{k}" for k in range(2, n // 2 + 1)]
    rows = []
    for label, f in t3_certificate_blocks(n):
        vec = fcurve_class_vector(f)
        rows.append([label, str(f)] + [str(x) for x in vec])
    return _csv(header, rows)


def table_csv(name: str, n: Optional[int] = None) -> str:
    """Render one of the named tables; n is only consulted where a table
    family is parameterized."""
    fixed = {
        "n6": lambda: render_rays_csv(6),
        "n7": lambda: render_rays_csv(7),
        "n9": lambda: render_rays_csv(9),
        "n10": lambda: render_rays_csv(10),
        "n10-fcurves": lambda: render_fcurves_csv(10),
    }
    if name in fixed:
        return fixed[name]()
    if name == "t3-certificates":
        return render_t3_certificates_csv(12 if n is None else n)
    raise ValueError(f"unknown table {name!r}")
