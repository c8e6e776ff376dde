"""Normalized volume: d! times the Euclidean volume of conv(columns + 0).

Computed from an incremental placing triangulation with exact integer
orientation tests.  The simplices (with the origin labeled 0 and columns by
their 1-based labels) are returned as a certificate: the volume is the sum
of the |det| contributions, and each simplex can be re-checked
independently.  For a configuration the normalized volume equals the
holonomic rank of the associated hypergeometric system at generic
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .cones import Configuration, Face, reduce_configuration
from .errors import DegenerateConfiguration, EmptyFace
from .intlinalg import IntMatrix, IntVec, det_int, rank_int

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class VolumeResult:
    volume: int
    triangulation: tuple[tuple[Simplex, int], ...]

    def to_json(self) -> dict:
        return {
            "volume": self.volume,
            "triangulation": [
                {"vertices": list(s), "det": c} for s, c in self.triangulation
            ],
        }


def _orient(facet_points: list[IntVec], x: IntVec) -> int:
    base = facet_points[0]
    rows = [tuple(p - b for p, b in zip(q, base)) for q in facet_points[1:]]
    rows.append(tuple(p - b for p, b in zip(x, base)))
    det = det_int(rows)
    return (det > 0) - (det < 0)


def _simplex_det(points: list[IntVec]) -> int:
    base = points[0]
    rows = [tuple(p - b for p, b in zip(q, base)) for q in points[1:]]
    return abs(det_int(rows))


def _placing_triangulation(points: dict[int, IntVec], d: int) -> list[Simplex]:
    """Triangulate conv(points) by inserting in ascending label order.

    Each new point is joined to the boundary facets it strictly sees; points
    inside (or on) the current hull contribute nothing.  Duplicate points
    must have been removed by the caller.
    """
    labels = sorted(points)
    seed: list[int] = []
    for label in labels:
        trial = seed + [label]
        base = points[trial[0]]
        diffs = [
            tuple(p - b for p, b in zip(points[l], base)) for l in trial[1:]
        ]
        if not diffs or rank_int(diffs) == len(diffs):
            seed = trial
        if len(seed) == d + 1:
            break
    if len(seed) < d + 1:
        raise DegenerateConfiguration("points do not span the ambient space")
    simplices: list[Simplex] = [tuple(sorted(seed))]
    remaining = [l for l in labels if l not in seed]
    for label in remaining:
        p = points[label]
        facet_owner: dict[Simplex, list[int]] = {}
        for simplex in simplices:
            for facet in combinations(simplex, d):
                facet_owner.setdefault(facet, []).append(
                    next(v for v in simplex if v not in facet)
                )
        for facet, owners in sorted(facet_owner.items()):
            if len(owners) != 1:
                continue
            facet_points = [points[v] for v in facet]
            side_new = _orient(facet_points, p)
            if side_new == 0:
                continue
            side_inner = _orient(facet_points, points[owners[0]])
            if side_new != side_inner:
                simplices.append(tuple(sorted(facet + (label,))))
    return sorted(simplices)


@lru_cache(maxsize=1024)
def _volume_of_matrix(A: IntMatrix) -> VolumeResult:
    d = A.rows
    points: dict[int, IntVec] = {0: tuple(0 for _ in range(d))}
    seen = {points[0]: 0}
    for j in range(1, A.cols + 1):
        col = A.column(j - 1)
        if col not in seen:
            seen[col] = j
            points[j] = col
    simplices = _placing_triangulation(points, d)
    certificate = []
    total = 0
    for simplex in simplices:
        contribution = _simplex_det([points[v] for v in simplex])
        assert contribution > 0
        certificate.append((simplex, contribution))
        total += contribution
    return VolumeResult(total, tuple(certificate))


def normalized_volume(config: Configuration) -> VolumeResult:
    """Exact normalized volume of conv(columns + origin) with certificate."""
    return _volume_of_matrix(config.A)


def face_volume(config: Configuration, face: Face) -> int:
    """Normalized volume of a face, computed in its own saturated lattice.

    The face's columns are re-expressed in a basis of the sublattice they
    generate before triangulating.  A face consisting of zero columns only
    spans a rank-0 lattice; its volume is 1 (the volume of a point).
    """
    if not face.indices:
        raise EmptyFace("volume of the empty face is undefined")
    sub = config.submatrix(face.indices)
    if rank_int(sub.data) == 0:
        return 1
    face_config, _, _ = reduce_configuration(sub, [0] * config.d)
    return _volume_of_matrix(face_config.A).volume


def generic_rank(config: Configuration) -> int:
    """Holonomic rank at generic parameters: alias for the normalized volume."""
    return _volume_of_matrix(config.A).volume
