"""Points, lines and incidence in PG(2, q)."""

from __future__ import annotations

import functools
from typing import NamedTuple

import numpy as np

from .gf import FieldSpec
from .linalg import det3


class ProjPoint(NamedTuple):
    """Homogeneous coordinates (encodings), first nonzero coordinate equal to 1."""
    x: int
    y: int
    z: int

    def __str__(self):
        return f"({self.x}:{self.y}:{self.z})"


class ProjLine(NamedTuple):
    """Dual coordinates of the line aX + bY + cZ = 0, normalized like points."""
    a: int
    b: int
    c: int

    def __str__(self):
        return f"[{self.a}:{self.b}:{self.c}]"


def _normalized(F: FieldSpec, triple):
    triple = tuple(int(v) for v in triple)
    for v in triple:
        if v:
            inv = F.inv(v)
            return tuple(F.mul(inv, w) for w in triple)
    raise ValueError("the zero triple is not a projective point")


def normalize(F: FieldSpec, triple) -> ProjPoint:
    return ProjPoint(*_normalized(F, triple))


def normalize_line(F: FieldSpec, triple) -> ProjLine:
    return ProjLine(*_normalized(F, triple))


def cross(F: FieldSpec, u, v):
    return (
        F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])),
        F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
        F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0])),
    )


def dot(F: FieldSpec, u, v) -> int:
    return F.add(F.add(F.mul(u[0], v[0]), F.mul(u[1], v[1])), F.mul(u[2], v[2]))


def line_through(F: FieldSpec, P, Q) -> ProjLine:
    if tuple(P) == tuple(Q):
        raise ValueError("a line needs two distinct points")
    return normalize_line(F, cross(F, P, Q))


def meet(F: FieldSpec, L, M) -> ProjPoint:
    if tuple(L) == tuple(M):
        raise ValueError("two distinct lines are needed")
    return normalize(F, cross(F, L, M))


def incident(F: FieldSpec, P, L) -> bool:
    return dot(F, P, L) == 0


def collinear(F: FieldSpec, P, Q, R) -> bool:
    return det3(F, (P, Q, R)) == 0


def point_index(q: int, P) -> int:
    """Position of a normalized point in :func:`enumerate_points` order."""
    x, y, z = P
    if x == 1:
        return y * q + z
    if y == 1:
        return q * q + z
    return q * q + q


@functools.lru_cache(maxsize=None)
def _points(F: FieldSpec) -> tuple[ProjPoint, ...]:
    q = F.q
    pts = [ProjPoint(1, y, z) for y in range(q) for z in range(q)]
    pts += [ProjPoint(0, 1, z) for z in range(q)]
    pts.append(ProjPoint(0, 0, 1))
    return tuple(pts)


def enumerate_points(F: FieldSpec) -> tuple[ProjPoint, ...]:
    """All q^2 + q + 1 points: (1:y:z), then (0:1:z), then (0:0:1)."""
    return _points(F)


def enumerate_lines(F: FieldSpec) -> tuple[ProjLine, ...]:
    return tuple(ProjLine(*P) for P in _points(F))


@functools.lru_cache(maxsize=None)
def point_arrays(F: FieldSpec) -> np.ndarray:
    """The points of PG(2, q) as an (n, 3) integer array."""
    return np.array(_points(F), dtype=np.int64)


def two_points_on(F: FieldSpec, L) -> tuple[ProjPoint, ProjPoint]:
    a, b, c = _normalized(F, L)
    if a:
        return normalize(F, (F.neg(b), 1, 0)), normalize(F, (F.neg(c), 0, 1))
    if b:
        return ProjPoint(1, 0, 0), normalize(F, (0, F.neg(c), 1))
    return ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)


def points_on_line(F: FieldSpec, L) -> list[ProjPoint]:
    A, B = two_points_on(F, L)
    pts = {A}
    for s in range(F.q):
        pts.add(normalize(F, tuple(F.add(F.mul(s, a), b) for a, b in zip(A, B))))
    return sorted(pts, key=lambda P: point_index(F.q, P))


def combine(F: FieldSpec, s: int, A, t: int, B):
    """The coordinate vector s*A + t*B."""
    return tuple(F.add(F.mul(s, a), F.mul(t, b)) for a, b in zip(A, B))


def parse_point(F: FieldSpec, text: str) -> ProjPoint:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"malformed point {text!r}, expected (x:y:z)")
    coords = [F.check(int(v)) for v in body[1:-1].split(":")]
    if len(coords) != 3:
        raise ValueError(f"malformed point {text!r}, expected three coordinates")
    return normalize(F, coords)
