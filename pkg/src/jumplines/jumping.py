"""Jumping-line scans, the eliminant pipeline and the structural cross checks.

The main theorem this library exercises says: for an even configuration Z of
2n points in linear general position (n >= 2), the jumping lines of the
associated logarithmic bundle are the points of Z (with order n-2) together
with the finite set Gamma of points x admitting a degree-(n-1) curve through
Z with an (n-2)-fold point at x (order 1); for an odd configuration of 2n+1
points they are the zero locus of the monoidal determinant.  Everything here
verifies those statements pointwise over a prime field, by exhaustive scans
and by resultant elimination.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass

from . import kernels
from .algebra import (
    DegenerateInputError,
    FieldSpec,
    Mat,
    binomial,
    det,
    kernel_basis,
    mat_inverse,
    rank,
    up_divrem,
    up_gcd,
    up_eval,
    up_trim,
)
from .forms import (
    HForm,
    curves_through,
    gamma_minor_matrix,
    hf_eval,
    hf_div_exact,
    hf_gcd,
    hf_mul,
    hf_partial,
    hf_partial_multi,
    hf_sub,
    jet_matrix,
    monomials,
    monoidal_det,
    sylvester_resultant,
    binary_form_to_upoly,
)
from .geom import PointConfig, Point, normalize_point, plane_points, validate_config
from .steiner import (
    SteinerPencil,
    generic_eps1,
    jumping_order,
    splitting_scan,
    steiner_pencil,
)


class VerificationError(AssertionError):
    """A structural identity failed on concrete input (with a witness)."""


# ---------------------------------------------------------------------------
# Batch evaluation helpers (prime field)
# ---------------------------------------------------------------------------


def eval_form_on_points(field: FieldSpec, f: HForm, pts) -> list:
    if field.kind != "fp":
        raise ValueError("batch evaluation needs a prime field")
    coeffs = [int(c) for c in f.coeffs]
    exps = [v for e in monomials(f.degree) for v in e]
    flat = [int(c) for pt in pts for c in pt]
    return kernels.eval_form_many(coeffs, exps, flat, field.p)


# ---------------------------------------------------------------------------
# The extra jumping points Gamma
# ---------------------------------------------------------------------------


def gamma_scan(cfg: PointConfig):
    """(gamma points, configuration points hitting the fat-point condition).

    Gamma is the set of plane points outside the configuration where the
    symbolic jet matrix drops rank, i.e. where some degree-(n-1) curve
    through the 2n points is (n-2)-fold singular.  The second list must be
    empty for the disjoint-union statement to hold.
    """
    field = cfg.field
    if field.kind != "fp":
        raise ValueError("exhaustive scans need a prime field")
    m = len(cfg)
    if m % 2:
        raise DegenerateInputError("gamma scan needs an even configuration")
    n = m // 2
    if n <= 3:
        return [], []
    rows = gamma_minor_matrix(cfg)
    q = len(rows[0])
    pts = plane_points(field.p)
    vals = [[eval_form_on_points(field, entry, pts) for entry in row] for row in rows]
    zset = set(cfg.points)
    gamma, zhits = [], []
    nrows = len(rows)
    for idx, pt in enumerate(pts):
        flat = [vals[i][j][idx] for i in range(nrows) for j in range(q)]
        if kernels.rank_mod_p(flat, nrows, q, field.p) < q:
            (zhits if pt in zset else gamma).append(pt)
    return sorted(gamma), zhits


def gamma_points(cfg: PointConfig) -> list:
    """All rational points carrying the extra-jumping condition, sorted."""
    return gamma_scan(cfg)[0]


# ---------------------------------------------------------------------------
# Exhaustive jumping scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointRecord:
    point: Point
    eps1: int
    eps2: int
    order: int
    in_z: bool
    in_gamma: bool


@dataclass
class JumpingReport:
    config: PointConfig
    epsilon: int  # 1 for an even configuration (finite jumping scheme), 0 otherwise
    n: int
    records: tuple
    gamma: tuple
    counts: dict
    verdicts: dict
    witness: Point | None
    reseeds: int = 0
    seed: int | None = None

    def all_verdicts_true(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> str:
        f = self.config.field
        payload = {
            "config": {
                "field": f.tag,
                "points": [[f.to_json(c) for c in pt] for pt in self.config.points],
            },
            "epsilon": self.epsilon,
            "n": self.n,
            "seed": self.seed,
            "reseeds": self.reseeds,
            "counts": self.counts,
            "verdicts": self.verdicts,
            "witness": list(self.witness) if self.witness is not None else None,
            "gamma": [[f.to_json(c) for c in pt] for pt in self.gamma],
            "records": [
                [f.to_json(c) for c in r.point]
                + [r.eps1, r.eps2, r.order, int(r.in_z), int(r.in_gamma)]
                for r in self.records
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x0", "x1", "x2", "eps1", "eps2", "order", "in_z", "in_gamma"])
        for r in self.records:
            w.writerow(list(r.point) + [r.eps1, r.eps2, r.order, int(r.in_z), int(r.in_gamma)])
        return buf.getvalue()


def jumping_scan(cfg: PointConfig, threads: int = 1) -> JumpingReport:
    """Scan every point of the plane and test the structural theorem.

    Even configuration (2n points): the jumping set must be exactly
    Z union Gamma with orders n-2 and 1.  Odd configuration (2n+1 points):
    the jumping set must be exactly the zero locus of the monoidal
    determinant.  Any pointwise failure is recorded with a witness and flips
    the corresponding verdict; nothing fails silently.
    """
    field = cfg.field
    if field.kind != "fp":
        raise ValueError("exhaustive scans need a prime field")
    m = len(cfg)
    sp = steiner_pencil(cfg)
    pts = plane_points(field.p)
    sts = splitting_scan(sp, pts, threads=threads)
    e1gen = generic_eps1(m)
    zset = set(cfg.points)

    even = m % 2 == 0
    n = m // 2 if even else (m - 1) // 2
    records = []
    verdicts: dict = {}
    witness = None
    counts: dict = {"m": m, "n": n, "p": field.p, "plane_points": len(pts)}

    if even:
        gamma, zhits = gamma_scan(cfg) if n > 3 else ([], [])
        gset = set(gamma)
        z_order = n - 2
        ok_set = ok_zorder = ok_gorder = True
        for pt, st in zip(pts, sts):
            order = e1gen - st.eps1
            in_z, in_g = pt in zset, pt in gset
            records.append(PointRecord(pt, st.eps1, st.eps2, order, in_z, in_g))
            if (order >= 1) != ((in_z and z_order >= 1) or in_g):
                ok_set = False
                witness = witness or pt
            if in_z and order != z_order:
                ok_zorder = False
                witness = witness or pt
            if in_g and order != 1:
                ok_gorder = False
                witness = witness or pt
        verdicts["jumping_set_is_z_union_gamma"] = ok_set
        verdicts["order_on_z_is_n_minus_2"] = ok_zorder
        verdicts["order_on_gamma_is_1"] = ok_gorder
        verdicts["gamma_disjoint_from_z"] = not zhits
        total, z_part, gamma_part = length_accounting(n)
        counts["gamma_rational"] = len(gamma)
        counts["length_total"] = total
        counts["length_z_part"] = z_part
        counts["length_gamma_part"] = gamma_part
        counts["jumping_points"] = sum(1 for r in records if r.order >= 1)
        verdicts["length_split_consistent"] = total == z_part + gamma_part
        report_gamma = tuple(gamma)
    else:
        mono = monoidal_det(cfg)
        vals = eval_form_on_points(field, mono, pts)
        ok_set = True
        for pt, st, v in zip(pts, sts, vals):
            order = e1gen - st.eps1
            in_z = pt in zset
            records.append(PointRecord(pt, st.eps1, st.eps2, order, in_z, False))
            if (order >= 1) != (v == 0):
                ok_set = False
                witness = witness or pt
        verdicts["jumping_set_is_monoidal_zero_locus"] = ok_set
        verdicts["monoidal_degree_is_n_times_n_minus_1"] = mono.degree == n * (n - 1)
        counts["monoidal_degree"] = mono.degree
        counts["monoidal_zeros"] = sum(1 for v in vals if v == 0)
        counts["jumping_points"] = sum(1 for r in records if r.order >= 1)
        report_gamma = ()

    return JumpingReport(
        config=cfg,
        epsilon=1 if even else 0,
        n=n,
        records=tuple(records),
        gamma=report_gamma,
        counts=counts,
        verdicts=verdicts,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Length bookkeeping
# ---------------------------------------------------------------------------


def length_accounting(n: int):
    """(total, part on Z, part on Gamma) of the length of the jumping scheme.

    total = binom((n-1)^2, 2) splits as 2n * binom(n-1, 2) from the n-fold
    points of Z plus n(n-1)(n-2)(n-3)/2 from Gamma.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = binomial((n - 1) ** 2, 2)
    z_part = 2 * n * binomial(n - 1, 2)
    gamma_part = n * (n - 1) * (n - 2) * (n - 3) // 2
    if total != z_part + gamma_part:
        raise ArithmeticError("length split identity failed")
    return total, z_part, gamma_part


# ---------------------------------------------------------------------------
# Random coordinate changes
# ---------------------------------------------------------------------------


def _random_transform(field: FieldSpec, rng):
    while True:
        if field.kind == "fp":
            ent = tuple(field.of(rng.randrange(field.p)) for _ in range(9))
        else:
            ent = tuple(field.of(rng.randint(-9, 9)) for _ in range(9))
        t = Mat(3, 3, ent)
        if not field.is_zero(det(field, t)):
            return t, mat_inverse(field, t)


def _apply_transform(field: FieldSpec, t: Mat, pt: Point) -> Point:
    out = []
    for i in range(3):
        acc = field.zero
        for j in range(3):
            acc = field.add(acc, field.mul(t.at(i, j), pt[j]))
        out.append(acc)
    return normalize_point(field, out)


def _transform_config(cfg: PointConfig, t: Mat) -> PointConfig:
    return PointConfig(tuple(_apply_transform(cfg.field, t, pt) for pt in cfg.points), cfg.field)


# ---------------------------------------------------------------------------
# The eliminant pipeline for 8 points
# ---------------------------------------------------------------------------


@dataclass
class Pencil4Result:
    r12: list
    r16: list
    r4: list
    transform: Mat
    transform_inv: Mat
    attempts: int
    minors: tuple  # (M01, M02) in transformed coordinates
    pencil_basis: tuple  # (f0, f1) in transformed coordinates


def pencil4_eliminant(cfg: PointConfig, transform_seed: int = 0, retries: int = 24) -> Pencil4Result:
    """Eliminate the singular-point conditions of the cubic pencil through 8 points.

    With pencil basis (f0, f1) and the 2x2 minors M01, M02 of the matrix of
    gradients [grad f0 | grad f1], the resultant R16 = Res_{x2}(M01, M02)
    has degree 16 and splits off R4 = Res_{x2}(d0 f0, d0 f1), the Bezout
    factor of the shared gradient row; the exact quotient R12 of degree 12
    cuts out the projection of Gamma.  A recorded random coordinate change
    keeps every leading coefficient nonzero; degenerate draws are retried.
    """
    field = cfg.field
    if len(cfg) != 8:
        raise DegenerateInputError("the eliminant pipeline needs exactly 8 points")
    rng = random.Random(f"jumplines:pencil4:{field.tag}:{transform_seed}")
    last = "no attempt"
    for attempt in range(1, retries + 1):
        t, tinv = _random_transform(field, rng)
        zt = _transform_config(cfg, t)
        system = curves_through(zt, 3)
        if system.dim() != 2:
            raise DegenerateInputError("cubics through the 8 points do not form a pencil")
        f0, f1 = system.basis
        g = [[hf_partial(field, f, i) for f in (f0, f1)] for i in range(3)]
        m01 = _two_by_two(field, g[0], g[1])
        m02 = _two_by_two(field, g[0], g[2])
        try:
            r16 = binary_form_to_upoly(field, sylvester_resultant(field, m01, m02, 2), 2)
            r4 = binary_form_to_upoly(field, sylvester_resultant(field, g[0][0], g[0][1], 2), 2)
        except DegenerateInputError as exc:
            last = str(exc)
            continue
        if len(r16) != 17 or len(r4) != 5:
            last = f"degrees {len(r16) - 1}/{len(r4) - 1}, want 16/4"
            continue
        q, rem = up_divrem(field, r16, r4)
        if rem or len(q) != 13:
            last = "inexact division R16 / R4"
            continue
        return Pencil4Result(
            r12=q, r16=r16, r4=r4, transform=t, transform_inv=tinv,
            attempts=attempt, minors=(m01, m02), pencil_basis=(f0, f1),
        )
    raise DegenerateInputError(f"eliminant pipeline failed after {retries} coordinate changes ({last})")


def _two_by_two(field: FieldSpec, rowa, rowb) -> HForm:
    return hf_sub(field, hf_mul(field, rowa[0], rowb[1]), hf_mul(field, rowa[1], rowb[0]))


def lift_eliminant_roots(cfg: PointConfig, res: Pencil4Result) -> list:
    """Lift the rational roots of R12 back to plane points (original coordinates).

    Each root t gives the projection (1 : t) of a singular point of a pencil
    member; the fiber is recovered from the gcd of the two minors restricted
    to the line x0 = 1, x1 = t.  Returns the lifted points, sorted.
    """
    field = cfg.field
    if field.kind != "fp":
        raise ValueError("root lifting needs a prime field")
    p = field.p
    m01, m02 = res.minors
    out = set()
    for tval in range(p):
        if up_eval(field, res.r12, field.of(tval)) != 0:
            continue
        a = _restrict_to_vertical_line(field, m01, field.of(tval))
        b = _restrict_to_vertical_line(field, m02, field.of(tval))
        gcd = up_gcd(field, a, b)
        for cval in range(p):
            if up_eval(field, gcd, field.of(cval)) == 0:
                pt = _apply_transform(field, res.transform_inv, (field.one, field.of(tval), field.of(cval)))
                out.add(pt)
    return sorted(out)


def _restrict_to_vertical_line(field: FieldSpec, f: HForm, tval):
    """f(1, t, x2) as a univariate polynomial in x2."""
    out = [field.zero] * (f.degree + 1)
    tpow = [field.one]
    for _ in range(f.degree):
        tpow.append(field.mul(tpow[-1], tval))
    for (a, b, c), cf in zip(monomials(f.degree), f.coeffs):
        if field.is_zero(cf):
            continue
        out[c] = field.add(out[c], field.mul(cf, tpow[b]))
    return up_trim(field, out)


# ---------------------------------------------------------------------------
# The ninth base point of the cubic pencil
# ---------------------------------------------------------------------------


def ninth_point(cfg: PointConfig, transform_seed: int = 0, retries: int = 24) -> Point:
    """Residual base point of the pencil of cubics through 8 general points.

    Eliminates x2 from the pencil basis, strips the eight known root factors
    from the degree-9 resultant by exact division, and back-substitutes; the
    result is verified to be a base point.
    """
    field = cfg.field
    if len(cfg) != 8:
        raise DegenerateInputError("the ninth point needs exactly 8 points")
    system = curves_through(cfg, 3)
    if system.dim() != 2:
        raise DegenerateInputError("cubics through the 8 points do not form a pencil")
    f0_orig, f1_orig = system.basis
    rng = random.Random(f"jumplines:ninth:{field.tag}:{transform_seed}")
    last = "no attempt"
    for attempt in range(retries):
        t, tinv = _random_transform(field, rng)
        zt = _transform_config(cfg, t)
        if any(field.is_zero(pt[0]) for pt in zt.points):
            last = "a transformed point lies on x0 = 0"
            continue
        projs = [field.div(pt[1], pt[0]) for pt in zt.points]
        if len(set(projs)) != 8:
            last = "transformed projections collide"
            continue
        sys_t = curves_through(zt, 3)
        f0, f1 = sys_t.basis
        # mix the basis: the canonical kernel vectors can miss the top x2 power
        lam = field.of(rng.randrange(1, field.p) if field.kind == "fp" else rng.randint(1, 9))
        mu = field.of(rng.randrange(1, field.p) if field.kind == "fp" else rng.randint(1, 9))
        if field.is_zero(field.sub(field.one, field.mul(lam, mu))):
            continue
        g0 = HForm(3, tuple(field.add(a, field.mul(lam, b)) for a, b in zip(f0.coeffs, f1.coeffs)))
        g1 = HForm(3, tuple(field.add(field.mul(mu, a), b) for a, b in zip(f0.coeffs, f1.coeffs)))
        try:
            r9 = binary_form_to_upoly(field, sylvester_resultant(field, g0, g1, 2), 2)
        except DegenerateInputError as exc:
            last = str(exc)
            continue
        if len(r9) != 10:
            last = f"resultant degree {len(r9) - 1}, want 9"
            continue
        residual = r9
        ok = True
        for tv in projs:
            residual, rem = up_divrem(field, residual, [field.neg(tv), field.one])
            if rem:
                ok = False
                last = "known base projections do not divide the resultant"
                break
        if not ok or len(residual) != 2:
            continue
        t9 = field.neg(field.div(residual[0], residual[1]))
        a = _restrict_to_vertical_line(field, g0, t9)
        b = _restrict_to_vertical_line(field, g1, t9)
        gcd = up_gcd(field, a, b)
        if len(gcd) != 2:
            last = f"fiber gcd degree {len(gcd) - 1}, want 1"
            continue
        c = field.neg(field.div(gcd[0], gcd[1]))
        # the transformed ninth point projects to t9 with x0 = 1
        pt = _apply_transform(field, tinv, (field.one, t9, c))
        if not field.is_zero(hf_eval(field, f0_orig, pt)) or not field.is_zero(hf_eval(field, f1_orig, pt)):
            last = "back-substituted point is not a base point"
            continue
        return pt
    raise DegenerateInputError(f"ninth point not found after {retries} coordinate changes ({last})")


# ---------------------------------------------------------------------------
# Monoidal containment and base-locus checks
# ---------------------------------------------------------------------------


def containment_monoidal(cfg: PointConfig, x_extra: Point) -> bool:
    """Does the monoidal curve of the augmented configuration contain Z and Gamma?"""
    field = cfg.field
    m = len(cfg)
    if m % 2:
        raise DegenerateInputError("containment check needs an even configuration")
    n = m // 2
    x_extra = normalize_point(field, x_extra)
    aug = PointConfig(cfg.points + (x_extra,), field)
    validate_config(aug, degrees=(n,))
    mono = monoidal_det(aug)
    targets = list(cfg.points)
    if n > 3:
        targets += gamma_points(cfg)
    return all(field.is_zero(hf_eval(field, mono, pt)) for pt in targets)


def _valid_extra_point(cfg: PointConfig, rng) -> Point:
    field = cfg.field
    n = len(cfg) // 2
    for _ in range(500):
        if field.kind == "fp":
            coords = (rng.randrange(field.p), rng.randrange(field.p), rng.randrange(field.p))
        else:
            coords = tuple(rng.randint(-9, 9) for _ in range(3))
        if not any(coords):
            continue
        x = normalize_point(field, coords)
        if x in cfg:
            continue
        aug = PointConfig(cfg.points + (x,), field)
        try:
            validate_config(aug, degrees=(n,))
        except DegenerateInputError:
            continue
        return x
    raise DegenerateInputError("no valid augmenting point found")


def base_locus_equality(cfg: PointConfig, trials: int, seed: int = 0):
    """Intersect the zero sets of several augmented monoidal curves.

    Returns ``(equal, intersection)`` where ``equal`` says whether the
    intersection over all plane points equals Z union Gamma exactly.
    """
    field = cfg.field
    if field.kind != "fp":
        raise ValueError("base-locus intersection needs a prime field")
    m = len(cfg)
    if m % 2:
        raise DegenerateInputError("base-locus check needs an even configuration")
    n = m // 2
    rng = random.Random(f"jumplines:baselocus:{field.tag}:{seed}")
    pts = plane_points(field.p)
    alive = None
    for _ in range(trials):
        x = _valid_extra_point(cfg, rng)
        aug = PointConfig(cfg.points + (x,), field)
        vals = eval_form_on_points(field, monoidal_det(aug), pts)
        zeros = {pt for pt, v in zip(pts, vals) if v == 0}
        alive = zeros if alive is None else (alive & zeros)
    expected = set(cfg.points) | set(gamma_points(cfg) if n > 3 else [])
    return alive == expected, alive


# ---------------------------------------------------------------------------
# Factorization of the fat-point system at an extra jumping point
# ---------------------------------------------------------------------------


@dataclass
class PinceauResult:
    common_factor: HForm
    members: tuple
    lines: tuple


def pinceau_factorization(cfg: PointConfig, x: Point) -> PinceauResult:
    """Split the fat-point system at an extra jumping point x.

    For 2n points and x in Gamma the degree-n curves through Z with an
    (n-1)-fold point at x form a system of dimension >= 2 whose members all
    share a degree-(n-1) factor: the curve through Z that is (n-2)-fold
    singular at x; the residual factors are lines through x.  Violations
    raise VerificationError (they would falsify the factorization statement).
    """
    field = cfg.field
    m = len(cfg)
    if m % 2 or m // 2 < 4:
        raise DegenerateInputError("needs an even configuration of at least 8 points")
    n = m // 2
    x = normalize_point(field, x)
    system = curves_through(cfg, n)
    jm = jet_matrix(system, x, n - 2)
    combos = kernel_basis(field, jm)
    if len(combos) < 2:
        raise VerificationError(f"fat-point system at {x} has dimension {len(combos)} < 2")
    members = []
    for v in combos[:2]:
        acc = None
        for c, f in zip(v, system.basis):
            term = HForm(n, tuple(field.mul(c, w) for w in f.coeffs))
            acc = term if acc is None else HForm(n, tuple(field.add(a, b) for a, b in zip(acc.coeffs, term.coeffs)))
        members.append(acc)
    g0, g1 = members
    c = hf_gcd(field, g0, g1)
    if c.degree != n - 1:
        raise VerificationError(f"common factor has degree {c.degree}, want {n - 1}")
    for pt in cfg.points:
        if not field.is_zero(hf_eval(field, c, pt)):
            raise VerificationError(f"common factor misses the configuration point {pt}")
    for alpha in monomials(n - 3):
        if not field.is_zero(hf_eval(field, hf_partial_multi(field, c, alpha), x)):
            raise VerificationError("common factor is not (n-2)-fold singular at x")
    lines = []
    for g in members:
        line = hf_div_exact(field, g, c)
        if line.degree != 1 or not field.is_zero(hf_eval(field, line, x)):
            raise VerificationError("residual factor is not a line through x")
        lines.append(line)
    return PinceauResult(common_factor=c, members=tuple(members), lines=tuple(lines))


# ---------------------------------------------------------------------------
# Pointwise equivalence of the pencil test and the fat-point test
# ---------------------------------------------------------------------------


def lien_equivalence(cfg: PointConfig, sp: SteinerPencil | None = None, sample: int = 500,
                     seed: int = 0, orders_from_scan: dict | None = None):
    """Check: a dual line jumps iff some fat-point system is nonempty.

    For every sampled x outside the configuration, jumping_order(x) >= 1
    must be equivalent to fat_point_dim(z, x, a, a+1) >= 1 for some a below
    the balanced index floor((m-1)/2).  The sample always includes the
    rational Gamma points; configuration points are skipped (the ideal-sheaf
    translation of the jumping test is only valid away from Z).
    Returns (ok, witness).
    """
    field = cfg.field
    if field.kind != "fp":
        raise ValueError("sampling needs a prime field")
    m = len(cfg)
    if sp is None:
        sp = steiner_pencil(cfg)
    e1gen = generic_eps1(m)
    systems = {}
    for a in range(1, e1gen):
        systems[a] = curves_through(cfg, a + 1)
    pts = plane_points(field.p)
    rng = random.Random(f"jumplines:lien:{field.tag}:{seed}")
    chosen = [pts[i] for i in rng.sample(range(len(pts)), min(sample, len(pts)))]
    if m % 2 == 0 and m // 2 > 3:
        chosen += gamma_points(cfg)
    zset = set(cfg.points)
    for x in chosen:
        if x in zset:
            continue
        if orders_from_scan is not None and x in orders_from_scan:
            jumps = orders_from_scan[x] >= 1
        else:
            jumps = jumping_order(sp, x) >= 1
        fat = False
        for a, system in systems.items():
            if system.dim() == 0:
                continue
            jm = jet_matrix(system, x, a - 1)
            if system.dim() - rank(field, jm) >= 1:
                fat = True
                break
        if jumps != fat:
            return False, x
    return True, None
