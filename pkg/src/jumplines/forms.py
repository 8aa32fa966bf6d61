"""Homogeneous ternary forms, jets, fat-point systems and resultants.

A form of degree d is a coefficient vector over the deg-lex monomial basis:
exponent triples (a, b, c) with a+b+c = d, ordered lexicographically
descending.  The same order is reused for derivative multi-indices, so all
matrices built here are bit-for-bit reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    DegenerateInputError,
    FieldSpec,
    Mat,
    binomial,
    det,
    kernel_basis,
    rank,
    solve_exact,
    up_interpolate,
    up_trim,
)
from .geom import PointConfig, Point, scalar_pow


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple:
    """Exponent triples of degree d, deg-lex descending."""
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict:
    return {e: i for i, e in enumerate(monomials(d))}


def basis_size(d: int) -> int:
    return (d + 2) * (d + 1) // 2


@dataclass(frozen=True)
class HForm:
    """Homogeneous ternary form as a deg-lex coefficient vector."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != basis_size(self.degree):
            raise ValueError("coefficient count does not match degree")

    def to_json_obj(self, field: FieldSpec) -> dict:
        return {"degree": self.degree, "coeffs": [field.to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, field: FieldSpec, obj) -> "HForm":
        return cls(obj["degree"], tuple(field.of(c) for c in obj["coeffs"]))


def hf_zero(field: FieldSpec, d: int) -> HForm:
    return HForm(d, (field.zero,) * basis_size(d))


def hf_is_zero(field: FieldSpec, f: HForm) -> bool:
    return all(field.is_zero(c) for c in f.coeffs)


def hf_from_dict(field: FieldSpec, d: int, coeffs: dict) -> HForm:
    idx = monomial_index(d)
    vec = [field.zero] * basis_size(d)
    for e, c in coeffs.items():
        vec[idx[e]] = field.of(c)
    return HForm(d, tuple(vec))


def hf_add(field: FieldSpec, f: HForm, g: HForm) -> HForm:
    if f.degree != g.degree:
        raise ValueError("degree mismatch")
    return HForm(f.degree, tuple(field.add(a, b) for a, b in zip(f.coeffs, g.coeffs)))


def hf_sub(field: FieldSpec, f: HForm, g: HForm) -> HForm:
    if f.degree != g.degree:
        raise ValueError("degree mismatch")
    return HForm(f.degree, tuple(field.sub(a, b) for a, b in zip(f.coeffs, g.coeffs)))


def hf_scale(field: FieldSpec, c, f: HForm) -> HForm:
    return HForm(f.degree, tuple(field.mul(c, v) for v in f.coeffs))


def hf_mul(field: FieldSpec, f: HForm, g: HForm) -> HForm:
    d = f.degree + g.degree
    idx = monomial_index(d)
    out = [field.zero] * basis_size(d)
    gmons = monomials(g.degree)
    for i, cf in enumerate(f.coeffs):
        if field.is_zero(cf):
            continue
        (a1, b1, c1) = monomials(f.degree)[i]
        for j, cg in enumerate(g.coeffs):
            if field.is_zero(cg):
                continue
            (a2, b2, c2) = gmons[j]
            k = idx[(a1 + a2, b1 + b2, c1 + c2)]
            out[k] = field.add(out[k], field.mul(cf, cg))
    return HForm(d, tuple(out))


def hf_eval(field: FieldSpec, f: HForm, x: Point):
    p0 = [field.one]
    p1 = [field.one]
    p2 = [field.one]
    for _ in range(f.degree):
        p0.append(field.mul(p0[-1], x[0]))
        p1.append(field.mul(p1[-1], x[1]))
        p2.append(field.mul(p2[-1], x[2]))
    acc = field.zero
    for (a, b, c), cf in zip(monomials(f.degree), f.coeffs):
        if field.is_zero(cf):
            continue
        acc = field.add(acc, field.mul(cf, field.mul(field.mul(p0[a], p1[b]), p2[c])))
    return acc


def hf_partial(field: FieldSpec, f: HForm, axis: int) -> HForm:
    """Formal partial derivative along one coordinate axis."""
    if f.degree == 0:
        raise ValueError("cannot differentiate a constant form")
    d = f.degree - 1
    idx = monomial_index(d)
    out = [field.zero] * basis_size(d)
    for (a, b, c), cf in zip(monomials(f.degree), f.coeffs):
        e = [a, b, c]
        if e[axis] == 0 or field.is_zero(cf):
            continue
        k = e[axis]
        e[axis] -= 1
        out[idx[tuple(e)]] = field.add(out[idx[tuple(e)]], field.mul(field.of(k), cf))
    return HForm(d, tuple(out))


def hf_partial_multi(field: FieldSpec, f: HForm, alpha) -> HForm:
    out = f
    for axis in range(3):
        for _ in range(alpha[axis]):
            out = hf_partial(field, out, axis)
    return out


def hf_normalize(field: FieldSpec, f: HForm) -> HForm:
    """Scale so the first nonzero coefficient is 1 (canonical representative)."""
    for c in f.coeffs:
        if not field.is_zero(c):
            return hf_scale(field, field.inv(c), f)
    return f


def hf_div_exact(field: FieldSpec, f: HForm, g: HForm) -> HForm:
    """The form h with f = g*h; raises ValueError when no such form exists."""
    if hf_is_zero(field, g):
        raise ZeroDivisionError("division by the zero form")
    k = f.degree - g.degree
    if k < 0:
        raise ValueError("quotient degree would be negative")
    cols = []
    for e in monomials(k):
        mono = hf_from_dict(field, k, {e: field.one})
        cols.append(hf_mul(field, g, mono).coeffs)
    m = Mat.from_rows([[cols[j][i] for j in range(len(cols))] for i in range(basis_size(f.degree))])
    sol = solve_exact(field, m, list(f.coeffs))
    if sol is None:
        raise ValueError("inexact form division")
    h = HForm(k, tuple(sol))
    if hf_mul(field, g, h).coeffs != f.coeffs:
        raise ValueError("inexact form division")
    return h


def hf_gcd(field: FieldSpec, f: HForm, g: HForm) -> HForm:
    """Greatest common divisor of two nonzero forms, normalized.

    Uses the Sylvester-style kernel criterion: f and g share a factor of
    degree k iff p*f = q*g has a solution with deg p = deg g - k and
    deg q = deg f - k; at the true gcd degree the solution is (g1, f1) with
    f = G*f1, g = G*g1, so G = f / q.
    """
    if hf_is_zero(field, f) or hf_is_zero(field, g):
        raise ZeroDivisionError("gcd with the zero form")
    df, dg = f.degree, g.degree
    for k in range(min(df, dg), 0, -1):
        np_, nq = basis_size(dg - k), basis_size(df - k)
        total = basis_size(df + dg - k)
        cols = []
        for e in monomials(dg - k):
            cols.append(hf_mul(field, f, hf_from_dict(field, dg - k, {e: field.one})).coeffs)
        for e in monomials(df - k):
            prod = hf_mul(field, g, hf_from_dict(field, df - k, {e: field.one})).coeffs
            cols.append(tuple(field.neg(c) for c in prod))
        m = Mat.from_rows([[cols[j][i] for j in range(np_ + nq)] for i in range(total)])
        ker = kernel_basis(field, m)
        if not ker:
            continue
        v = ker[0]
        q = HForm(df - k, tuple(v[np_:]))
        if hf_is_zero(field, q):
            continue
        try:
            cand = hf_div_exact(field, f, q)
            hf_div_exact(field, g, cand)
        except ValueError:
            continue
        return hf_normalize(field, cand)
    return hf_from_dict(field, 0, {(0, 0, 0): field.one})


# ---------------------------------------------------------------------------
# Linear systems of curves through a configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearSystem:
    """Canonical basis of degree-d forms vanishing on a configuration."""

    degree: int
    basis: tuple
    config: PointConfig

    def dim(self) -> int:
        return len(self.basis)


def curves_through(cfg: PointConfig, d: int) -> LinearSystem:
    """Kernel of the evaluation matrix of the configuration in degree d."""
    if d < 1:
        raise ValueError("degree must be positive")
    field = cfg.field
    mons = monomials(d)
    rows = []
    for pt in cfg.points:
        p0 = [field.one]
        p1 = [field.one]
        p2 = [field.one]
        for _ in range(d):
            p0.append(field.mul(p0[-1], pt[0]))
            p1.append(field.mul(p1[-1], pt[1]))
            p2.append(field.mul(p2[-1], pt[2]))
        rows.append([field.mul(field.mul(p0[a], p1[b]), p2[c]) for (a, b, c) in mons])
    if rows:
        ker = kernel_basis(field, Mat.from_rows(rows))
    else:
        ker = [tuple(field.one if i == j else field.zero for i in range(len(mons))) for j in range(len(mons))]
    basis = tuple(HForm(d, tuple(v)) for v in ker)
    return LinearSystem(d, basis, cfg)


def jet_matrix(system: LinearSystem, x: Point, k: int) -> Mat:
    """Matrix of order-k partials of the basis, evaluated at x.

    Rows are the multi-indices of weight k (deg-lex), columns the basis
    members.  Its nullity is the dimension of the subsystem vanishing to
    order k+1 at x: by the Euler identity the top-order partials already
    force all lower-order ones (valid in char 0 or p > degree).
    """
    field = system.config.field
    if not 0 <= k <= system.degree:
        raise ValueError("jet order out of range")
    if 0 < field.characteristic() <= system.degree:
        raise ValueError("jet reduction needs characteristic 0 or p > degree")
    rows = []
    for alpha in monomials(k):
        rows.append([hf_eval(field, hf_partial_multi(field, f, alpha), x) for f in system.basis])
    return Mat.from_rows(rows) if rows else Mat(0, len(system.basis), ())


def fat_point_dim(cfg: PointConfig, x: Point, k: int, d: int) -> int:
    """dim of degree-d curves through the configuration vanishing to order k at x.

    Meaningful as a jumping test only for x outside the configuration; the
    value is still computed (not an error) when x is one of the points.
    """
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")
    system = curves_through(cfg, d)
    if system.dim() == 0:
        return 0
    m = jet_matrix(system, x, k - 1)
    return system.dim() - rank(cfg.field, m)


# ---------------------------------------------------------------------------
# Determinants of form-valued matrices
# ---------------------------------------------------------------------------


def _form_det_direct(field: FieldSpec, a) -> HForm:
    """Determinant by Laplace expansion with subset memoization."""
    n = len(a)
    entry_deg = a[0][0].degree
    if n == 0:
        return hf_from_dict(field, 0, {(0, 0, 0): field.one})
    minors = {(): hf_from_dict(field, 0, {(0, 0, 0): field.one})}
    for size in range(1, n + 1):
        nxt = {}
        row = size - 1
        for cols in itertools.combinations(range(n), size):
            acc = hf_zero(field, size * entry_deg)
            for pos, j in enumerate(cols):
                rest = cols[:pos] + cols[pos + 1 :]
                term = hf_mul(field, a[row][j], minors[rest])
                # cofactor sign of entry (row, pos) in the submatrix
                acc = hf_add(field, acc, term) if (row + pos) % 2 == 0 else hf_sub(field, acc, term)
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


def _form_det_interpolated(field: FieldSpec, a, total_deg: int) -> HForm:
    """Determinant by evaluation on a deterministic affine grid.

    Evaluates at (1, s, t) for s, t in a (D+1) x (D+1) grid, takes scalar
    determinants, interpolates the bivariate dehomogenization and lifts it
    back to a form of the known total degree.
    """
    n = len(a)
    D = total_deg
    p = field.characteristic()
    if 0 < p <= D:
        raise ValueError(f"interpolation grid needs p > {D}")
    svals = [field.of(i) for i in range(D + 1)]
    tvals = [field.of(i) for i in range(D + 1)]
    per_s = []
    for s in svals:
        dets = []
        for t in tvals:
            pt = (field.one, s, t)
            m = Mat.from_rows([[hf_eval(field, a[i][j], pt) for j in range(n)] for i in range(n)])
            dets.append(det(field, m))
        per_s.append(up_interpolate(field, tvals, dets))
    coeffs = {}
    for tk in range(D + 1):
        column = [per_s[i][tk] if tk < len(per_s[i]) else field.zero for i in range(D + 1)]
        poly_s = up_interpolate(field, svals, column)
        for sj, c in enumerate(up_trim(field, poly_s)):
            if field.is_zero(c):
                continue
            if sj + tk > D:
                raise ArithmeticError("interpolated determinant exceeds expected degree")
            coeffs[(D - sj - tk, sj, tk)] = c
    return hf_from_dict(field, D, coeffs)


def form_matrix_det(field: FieldSpec, a, total_deg: int) -> HForm:
    """Determinant of a square matrix of forms of uniform degree."""
    n = len(a)
    if n <= 6:
        out = _form_det_direct(field, a)
        if out.degree != total_deg:
            raise ArithmeticError("degree bookkeeping mismatch")
        return out
    return _form_det_interpolated(field, a, total_deg)


# ---------------------------------------------------------------------------
# Monoidal determinant and the extra-jumping-point minors
# ---------------------------------------------------------------------------


def _symbolic_jet_rows(field: FieldSpec, system: LinearSystem, order: int):
    rows = []
    for alpha in monomials(order):
        rows.append([hf_partial_multi(field, f, alpha) for f in system.basis])
    return rows


def monoidal_det(cfg: PointConfig) -> HForm:
    """Determinant cutting out the locus of high-multiplicity curves.

    For an odd configuration of size 2n+1, the rows are the order-(n-2)
    partials of the degree-n system through the points, a square matrix of
    quadric entries of size binom(n, 2); the determinant has degree n(n-1)
    and vanishes exactly where some degree-n curve through the configuration
    acquires a point of multiplicity n-1.
    """
    m = len(cfg)
    if m % 2 == 0 or m < 5:
        raise DegenerateInputError("monoidal determinant needs an odd configuration of >= 5 points")
    n = (m - 1) // 2
    system = curves_through(cfg, n)
    size = binomial(n, 2)
    if system.dim() != size:
        raise DegenerateInputError(
            f"expected a {size}-dimensional system, got {system.dim()} (degenerate configuration)"
        )
    rows = _symbolic_jet_rows(cfg.field, system, n - 2)
    return form_matrix_det(cfg.field, rows, n * (n - 1))


def gamma_minor_matrix(cfg: PointConfig):
    """Symbolic jet matrix whose maximal minors cut out the extra jumping points."""
    m = len(cfg)
    if m % 2 or m < 8:
        raise DegenerateInputError("needs an even configuration of >= 8 points")
    n = m // 2
    system = curves_through(cfg, n - 1)
    q = n * (n - 3) // 2
    if system.dim() != q:
        raise DegenerateInputError(
            f"expected a {q}-dimensional system, got {system.dim()} (degenerate configuration)"
        )
    return _symbolic_jet_rows(cfg.field, system, n - 3)


def gamma_minors(cfg: PointConfig) -> list:
    """Maximal minors of the symbolic jet matrix for an even configuration.

    Empty for 2n points with n <= 3 (the relevant linear system is empty and
    the locus of extra jumping points is empty as well).
    """
    m = len(cfg)
    if m % 2:
        raise DegenerateInputError("needs an even configuration")
    n = m // 2
    if n <= 3:
        return []
    rows = gamma_minor_matrix(cfg)
    q = len(rows[0])
    field = cfg.field
    out = []
    for skip in range(len(rows)):
        sub = [rows[i] for i in range(len(rows)) if i != skip]
        out.append(form_matrix_det(field, sub, 2 * q))
    return out


# ---------------------------------------------------------------------------
# Sylvester resultants
# ---------------------------------------------------------------------------


class LeadingCoefficientError(DegenerateInputError):
    """Eliminating variable does not reach the total degree: change coordinates."""


def _axis_coefficients(field: FieldSpec, f: HForm, axis: int):
    """Coefficients of f as a polynomial in x_axis; entry k is a form in the
    other two variables of degree f.degree - k, returned as coefficient maps."""
    others = [i for i in range(3) if i != axis]
    out = [dict() for _ in range(f.degree + 1)]
    for e, c in zip(monomials(f.degree), f.coeffs):
        if field.is_zero(c):
            continue
        k = e[axis]
        out[k][(e[others[0]], e[others[1]])] = c
    return out, others


def _eval_binary(field: FieldSpec, coeffmap: dict, u, v):
    acc = field.zero
    for (a, b), c in coeffmap.items():
        acc = field.add(acc, field.mul(c, field.mul(scalar_pow(field, u, a), scalar_pow(field, v, b))))
    return acc


def sylvester_resultant(field: FieldSpec, f: HForm, g: HForm, axis: int) -> HForm:
    """Resultant of two forms with respect to one variable.

    Requires both forms to have full degree in the chosen axis (nonzero
    scalar leading coefficient); the result is a form of degree
    deg(f) * deg(g) in the remaining two variables, computed by evaluating
    the Sylvester determinant along a deterministic grid and interpolating.
    """
    df, dg = f.degree, g.degree
    if df < 1 or dg < 1:
        raise ValueError("resultant needs positive degrees")
    fc, others = _axis_coefficients(field, f, axis)
    gc, _ = _axis_coefficients(field, g, axis)
    if not fc[df] or not gc[dg]:
        raise LeadingCoefficientError(
            f"leading coefficient in axis {axis} vanishes; change coordinates"
        )
    D = df * dg
    p = field.characteristic()
    if 0 < p <= D:
        raise ValueError(f"resultant interpolation needs p > {D}")
    ts = [field.of(i) for i in range(D + 1)]
    vals = []
    size = df + dg
    for t in ts:
        frow = [_eval_binary(field, fc[df - j], field.one, t) for j in range(df + 1)]
        grow = [_eval_binary(field, gc[dg - j], field.one, t) for j in range(dg + 1)]
        rows = []
        for i in range(dg):
            rows.append([field.zero] * i + frow + [field.zero] * (dg - 1 - i))
        for i in range(df):
            rows.append([field.zero] * i + grow + [field.zero] * (df - 1 - i))
        vals.append(det(field, Mat.from_rows(rows)))
    upoly = up_interpolate(field, ts, vals)
    coeffs = {}
    for k, c in enumerate(up_trim(field, upoly)):
        if field.is_zero(c):
            continue
        e = [0, 0, 0]
        e[others[0]] = D - k
        e[others[1]] = k
        coeffs[tuple(e)] = c
    return hf_from_dict(field, D, coeffs)


def binary_form_to_upoly(field: FieldSpec, f: HForm, axis: int):
    """Dehomogenize a form supported on the two variables other than axis.

    Coefficient k of the result multiplies u^(D-k) v^k where (u, v) are the
    remaining variables in increasing index order; the form has full degree
    iff the returned polynomial has degree D.
    """
    others = [i for i in range(3) if i != axis]
    out = [field.zero] * (f.degree + 1)
    for e, c in zip(monomials(f.degree), f.coeffs):
        if field.is_zero(c):
            continue
        if e[axis] != 0:
            raise ValueError("form involves the eliminated variable")
        out[e[others[1]]] = c
    return up_trim(field, out)
