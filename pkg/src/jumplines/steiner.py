"""Steiner matrix pencils of point configurations and their splitting types.

A configuration Z of m points yields a pencil A(l) = l0*A0 + l1*A1 + l2*A2
of (m-3) x (m-1) matrices: the multiplication map from functions-on-Z modulo
constants to functions-on-Z modulo linear evaluations, taken with fixed
affine lifts of the points.  Restricting to the pencil of lines through a
point x and reading off the Kronecker column minimal indices of the
restricted pencil decides whether the dual line of x is a jumping line.
"""

from __future__ import annotations

from dataclasses import dataclass

import json

from . import kernels
from .algebra import DegenerateInputError, FieldSpec, Mat, mat_inverse, rank, rref
from .geom import PointConfig, Point, dual_line_basis


@dataclass(frozen=True)
class SteinerPencil:
    m: int
    A0: Mat
    A1: Mat
    A2: Mat
    config: PointConfig
    lifts: tuple

    def matrices(self):
        return (self.A0, self.A1, self.A2)

    def member(self, l) -> Mat:
        """A(l) for a linear form l given by its three coefficients."""
        field = self.config.field
        ent = tuple(
            field.add(
                field.mul(l[0], self.A0.entries[i]),
                field.add(field.mul(l[1], self.A1.entries[i]), field.mul(l[2], self.A2.entries[i])),
            )
            for i in range(len(self.A0.entries))
        )
        return Mat(self.A0.rows, self.A0.cols, ent)

    def to_json(self) -> str:
        field = self.config.field
        payload = {
            "m": self.m,
            "A": [[field.to_json(v) for v in a.entries] for a in self.matrices()],
        }
        return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class SplittingType:
    """Splitting degrees (eps1 <= eps2) of the restriction to a dual line.

    Stored in the twisted presentation normalization: each value is the raw
    polynomial kernel degree of the restricted pencil plus one, so that
    eps1 + eps2 = m - 1 and the balanced generic value of eps1 is
    floor((m-1)/2).
    """

    eps1: int
    eps2: int

    def __post_init__(self):
        if self.eps1 > self.eps2:
            raise ValueError("splitting type must be ordered")


def _complement_indices(field: FieldSpec, spanning_rows, width: int):
    """Standard-basis indices completing the row span to the full space."""
    _, _, pivots = rref(field, Mat.from_rows(spanning_rows))
    pivot_set = set(pivots)
    return [j for j in range(width) if j not in pivot_set]


def steiner_pencil(cfg: PointConfig) -> SteinerPencil:
    """Build the pencil presenting the configuration's direct-image bundle.

    The affine lifts are the normalized representatives.  The quotient bases
    are canonical complements: standard basis vectors away from the pivot
    columns of the constants row (for functions mod constants) and of the
    transpose lift matrix (for functions mod linear evaluations).
    """
    field = cfg.field
    m = len(cfg)
    if m < 4:
        raise DegenerateInputError("pencil needs at least 4 points")
    lifts = cfg.points

    # Complement of the constants inside k^m.
    w_idx = _complement_indices(field, [[field.one] * m], m)

    # Complement of the 3-dim space of linear evaluations inside k^m.
    lcols = [[lifts[i][k] for i in range(m)] for k in range(3)]
    c_idx = _complement_indices(field, lcols, m)
    if len(c_idx) != m - 3:
        raise DegenerateInputError("linear evaluations are degenerate on the lifts")

    # P = [L | e_j, j in complement]; the projection onto the complement
    # coordinates is the bottom block of P^-1.
    prows = []
    for i in range(m):
        row = [lifts[i][0], lifts[i][1], lifts[i][2]]
        row += [field.one if i == j else field.zero for j in c_idx]
        prows.append(row)
    pinv = mat_inverse(field, Mat.from_rows(prows))

    mats = []
    for k in range(3):
        rows = [[field.zero] * (m - 1) for _ in range(m - 3)]
        for col, j in enumerate(w_idx):
            scale = lifts[j][k]
            for i in range(m - 3):
                rows[i][col] = field.mul(scale, pinv.at(3 + i, j))
        mats.append(Mat.from_rows(rows))

    sp = SteinerPencil(m, mats[0], mats[1], mats[2], cfg, lifts)

    # Generic member must have full row rank (no trisecant-type degeneracy).
    probe_rank = 0
    for l in ((field.one, field.zero, field.zero),
              (field.zero, field.one, field.zero),
              (field.zero, field.zero, field.one),
              (field.one, field.one, field.of(2)),
              (field.one, field.of(2), field.of(3))):
        probe_rank = max(probe_rank, rank(field, sp.member(l)))
        if probe_rank == m - 3:
            break
    if probe_rank != m - 3:
        raise DegenerateInputError("pencil has deficient generic rank")
    return sp


def restrict_to_dual_line(sp: SteinerPencil, x: Point):
    """(B0, B1) = (A(l0), A(l1)) for the canonical basis of lines through x."""
    l0, l1 = dual_line_basis(sp.config.field, x)
    return sp.member(l0), sp.member(l1)


def minimal_indices(field: FieldSpec, b0: Mat, b1: Mat, want: int | None = None):
    """Kronecker column minimal indices of the pencil s*B0 + t*B1.

    For each degree d the map sends a vector of degree-d binary forms v(s,t)
    to the coefficients of (s*B0 + t*B1) v; the nullity sequence N_d equals
    sum(max(0, d - e + 1)) over the minimal indices e, and the indices are
    read off its increments.  Requires full generic row rank; the number of
    indices is then cols - rows.
    """
    if b0.rows != b1.rows or b0.cols != b1.cols:
        raise ValueError("pencil matrices must share a shape")
    rows, cols = b0.rows, b0.cols
    if want is None:
        want = cols - rows
    if field.kind == "fp":
        degs = kernels.pencil_kernel_degrees(
            [int(v) for v in b0.entries], [int(v) for v in b1.entries], rows, cols, field.p, want
        )
        return tuple(int(d) for d in degs)
    # rational path: same algorithm over exact scalars
    probe_rank = 0
    for s, t in ((field.one, field.zero), (field.zero, field.one),
                 (field.one, field.one), (field.one, field.of(2)), (field.one, field.of(3))):
        ent = tuple(field.add(field.mul(s, a), field.mul(t, b)) for a, b in zip(b0.entries, b1.entries))
        probe_rank = max(probe_rank, rank(field, Mat(rows, cols, ent)))
        if probe_rank == rows:
            break
    if probe_rank < rows:
        raise ArithmeticError("pencil is rank deficient for generic members")
    if cols - rows < want:
        raise ArithmeticError("pencil kernel is too small")
    found = []
    for d in range(cols + 1):
        nd = pencil_nullity(field, b0, b1, d)
        expected = sum(d - e + 1 for e in found if e <= d)
        for _ in range(nd - expected):
            found.append(d)
        if len(found) >= want:
            return tuple(found[:want])
    raise ArithmeticError("minimal indices not found within the degree cap")


def pencil_nullity(field: FieldSpec, b0: Mat, b1: Mat, d: int) -> int:
    """Nullity N_d of the degree-d coefficient map of the pencil."""
    rows, cols = b0.rows, b0.cols
    bigr, bigc = rows * (d + 2), cols * (d + 1)
    m = [[field.zero] * bigc for _ in range(bigr)]
    for r in range(rows):
        for e in range(cols):
            v0, v1 = b0.at(r, e), b1.at(r, e)
            for k in range(d + 1):
                col = e * (d + 1) + k
                m[r * (d + 2) + k][col] = field.add(m[r * (d + 2) + k][col], v0)
                m[r * (d + 2) + k + 1][col] = field.add(m[r * (d + 2) + k + 1][col], v1)
    return bigc - rank(field, Mat.from_rows(m))


def splitting_type(sp: SteinerPencil, x: Point) -> SplittingType:
    """Splitting type at one point (kernel degrees shifted by the twist)."""
    b0, b1 = restrict_to_dual_line(sp, x)
    d1, d2 = minimal_indices(sp.config.field, b0, b1, want=2)
    return SplittingType(d1 + 1, d2 + 1)


def generic_eps1(m: int) -> int:
    """Balanced value of eps1; anything below it is a jumping line."""
    return (m - 1) // 2


def jumping_order(sp: SteinerPencil, x: Point) -> int:
    """How far eps1 at x falls below the balanced value (0 = not jumping)."""
    st = splitting_type(sp, x)
    return generic_eps1(sp.m) - st.eps1


def splitting_scan(sp: SteinerPencil, points, threads: int = 1):
    """Splitting types at many points (prime fields only).

    Deterministic regardless of thread count: the point list is chunked in
    order and the per-chunk results are concatenated in order.
    """
    field = sp.config.field
    if field.kind != "fp":
        raise ValueError("scans require a prime field")
    a0 = [int(v) for v in sp.A0.entries]
    a1 = [int(v) for v in sp.A1.entries]
    a2 = [int(v) for v in sp.A2.entries]
    rows, cols = sp.A0.rows, sp.A0.cols
    pts_flat = [int(c) for pt in points for c in pt]

    def run(chunk):
        return kernels.splitting_scan(a0, a1, a2, rows, cols, chunk, field.p)

    if threads <= 1 or len(points) < 64:
        raw = run(pts_flat)
    else:
        from concurrent.futures import ThreadPoolExecutor

        step = 3 * max(64, (len(points) + threads - 1) // threads)
        chunks = [pts_flat[i : i + step] for i in range(0, len(pts_flat), step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            raw = [v for part in pool.map(run, chunks) for v in part]
    return [SplittingType(int(raw[2 * i]) + 1, int(raw[2 * i + 1]) + 1) for i in range(len(points))]
