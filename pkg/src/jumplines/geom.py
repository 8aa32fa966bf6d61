"""Projective-plane points, duality and general-position configurations.

Points are normalized coordinate triples (last nonzero coordinate equal to 1)
so that equality and hashing are canonical.  A :class:`PointConfig` is an
ordered tuple of distinct points with no three collinear, the divisor the
rest of the library works from.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .algebra import DegenerateInputError, FieldSpec, Mat, det, rank

Point = tuple


def normalize_point(field: FieldSpec, coords) -> Point:
    """Scale so the last nonzero coordinate is 1."""
    coords = tuple(field.of(c) for c in coords)
    last = -1
    for i, c in enumerate(coords):
        if not field.is_zero(c):
            last = i
    if last < 0:
        raise ValueError("(0:0:0) is not a projective point")
    inv = field.inv(coords[last])
    return tuple(field.mul(inv, c) for c in coords)


def collinear(field: FieldSpec, a: Point, b: Point, c: Point) -> bool:
    return field.is_zero(det(field, Mat.from_rows([list(a), list(b), list(c)])))


def dual_line_basis(field: FieldSpec, x: Point):
    """Two independent linear forms vanishing at ``x``.

    The span of the two forms is the pencil of lines through ``x``, i.e. the
    line dual to ``x``.  The choice is the canonical kernel basis of the
    1x3 evaluation row: for the first nonzero coordinate ``i0`` of ``x`` and
    each other index ``j``, the form ``e_j - (x_j / x_i0) e_i0``.
    """
    i0 = 0
    while field.is_zero(x[i0]):
        i0 += 1
    inv = field.inv(x[i0])
    forms = []
    for j in range(3):
        if j == i0:
            continue
        v = [field.zero] * 3
        v[j] = field.one
        v[i0] = field.neg(field.mul(x[j], inv))
        forms.append(tuple(v))
    return forms[0], forms[1]


def plane_points(p: int) -> list:
    """All points of the projective plane over F_p, in a fixed order.

    Affine chart (a : b : 1) first (lexicographic), then the line at
    infinity (a : 1 : 0), then (1 : 0 : 0).  Total p^2 + p + 1.
    """
    pts = [(a, b, 1) for a in range(p) for b in range(p)]
    pts += [(a, 1, 0) for a in range(p)]
    pts.append((1, 0, 0))
    return pts


@dataclass(frozen=True)
class PointConfig:
    """Ordered tuple of distinct plane points over a common field."""

    points: tuple
    field: FieldSpec

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, x) -> bool:
        return tuple(x) in set(self.points)

    def to_json(self) -> str:
        payload = {
            "field": self.field.tag,
            "points": [[self.field.to_json(c) for c in pt] for pt in self.points],
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PointConfig":
        payload = json.loads(text)
        field = FieldSpec.from_tag(payload["field"])
        pts = tuple(normalize_point(field, pt) for pt in payload["points"])
        return cls(pts, field)


def _degree_exponents(d: int):
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


def _evaluation_rank(field: FieldSpec, points, d: int) -> int:
    rows = []
    for pt in points:
        rows.append([
            field.mul(field.mul(scalar_pow(field, pt[0], a), scalar_pow(field, pt[1], b)), scalar_pow(field, pt[2], c))
            for (a, b, c) in _degree_exponents(d)
        ])
    return rank(field, Mat.from_rows(rows))


def scalar_pow(field: FieldSpec, x, e: int):
    out = field.one
    for _ in range(e):
        out = field.mul(out, x)
    return out


def validate_config(cfg: PointConfig, degrees=()) -> None:
    """Check distinctness, no three collinear and imposed-condition ranks.

    For each requested degree ``d`` the points must impose independent
    conditions on degree-d forms, i.e. the evaluation matrix must have rank
    ``min(len(cfg), binom(d+2, 2))``.  Over a small prime field this is a
    strictly stronger condition than linear general position.
    """
    pts = cfg.points
    m = len(pts)
    if len(set(pts)) != m:
        raise DegenerateInputError("configuration has repeated points")
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if collinear(cfg.field, pts[i], pts[j], pts[k]):
                    raise DegenerateInputError(
                        f"points {i},{j},{k} are collinear"
                    )
    for d in degrees:
        want = min(m, (d + 2) * (d + 1) // 2)
        got = _evaluation_rank(cfg.field, pts, d)
        if got != want:
            raise DegenerateInputError(
                f"points impose dependent conditions in degree {d} (rank {got} < {want})"
            )


def default_validation_degrees(count: int) -> tuple:
    """Degrees the scans will use for a configuration of this size."""
    return tuple(range(1, count // 2 + 1))


def random_config(count: int, field: FieldSpec, seed: int, degrees_to_validate=None,
                  retries: int = 1000) -> PointConfig:
    """Seeded random configuration in linear general position.

    Deterministic in ``(count, field, seed)``.  Rejection-resamples until no
    three points are collinear and the imposed-condition ranks hold for every
    requested degree; raises after the retry budget (field too small).
    """
    if count < 1:
        raise ValueError("count must be positive")
    if field.kind == "fp" and field.p * field.p + field.p + 1 <= 10 * count:
        raise DegenerateInputError(
            f"field fp:{field.p} too small for {count} points in general position"
        )
    if degrees_to_validate is None:
        degrees_to_validate = default_validation_degrees(count)
    rng = random.Random(f"jumplines:config:{field.tag}:{count}:{seed}")

    def draw() -> Point:
        while True:
            if field.kind == "fp":
                c = (rng.randrange(field.p), rng.randrange(field.p), rng.randrange(field.p))
            else:
                c = tuple(rng.randint(-9, 9) for _ in range(3))
            if any(c):
                return normalize_point(field, c)

    for _ in range(retries):
        pts: list = []
        stuck = False
        for _ in range(count):
            for _ in range(200):
                cand = draw()
                if cand in pts:
                    continue
                if any(
                    collinear(field, pts[i], pts[j], cand)
                    for i in range(len(pts))
                    for j in range(i + 1, len(pts))
                ):
                    continue
                pts.append(cand)
                break
            else:
                stuck = True
                break
        if stuck:
            continue
        cfg = PointConfig(tuple(pts), field)
        try:
            validate_config(cfg, degrees_to_validate)
        except DegenerateInputError:
            continue
        return cfg
    raise DegenerateInputError(
        f"no general-position configuration of {count} points found in {retries} tries"
    )
