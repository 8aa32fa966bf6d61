"""Pure-Python twins of the compiled scan kernels.

Same conventions as the Cython module `jumplines._fastkern`: flat row-major
int lists, entries reduced mod p, deterministic first-nonzero pivoting.
Used automatically when the extension is not built (or when JUMPLINES_PURE
is set); the two backends must agree bit for bit.
"""

from __future__ import annotations

BACKEND = "pure"


def rank_mod_p(flat, rows: int, cols: int, p: int) -> int:
    a = [list(flat[i * cols : (i + 1) * cols]) for i in range(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i][c] % p:
                sel = i
                break
        if sel < 0:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = pow(a[r][c] % p, p - 2, p)
        arow = a[r]
        for i in range(r + 1, rows):
            f = a[i][c] * inv % p
            if f:
                ai = a[i]
                for j in range(c, cols):
                    ai[j] = (ai[j] - f * arow[j]) % p
        r += 1
    return r


def _pencil_nullity(b0, b1, rows: int, cols: int, p: int, d: int) -> int:
    """Nullity of the map sending a degree-d polynomial vector v(s,t) to the
    coefficient vector of (s*B0 + t*B1) v."""
    bigr = rows * (d + 2)
    bigc = cols * (d + 1)
    m = [0] * (bigr * bigc)
    for r in range(rows):
        for e in range(cols):
            v0 = b0[r * cols + e] % p
            v1 = b1[r * cols + e] % p
            for k in range(d + 1):
                col = e * (d + 1) + k
                if v0:
                    m[(r * (d + 2) + k) * bigc + col] = v0
                if v1:
                    row = r * (d + 2) + k + 1
                    m[row * bigc + col] = (m[row * bigc + col] + v1) % p
    return bigc - rank_mod_p(m, bigr, bigc, p)


def pencil_kernel_degrees(b0, b1, rows: int, cols: int, p: int, want: int = 2):
    """First `want` column minimal indices of the pencil s*B0 + t*B1.

    Scans d = 0, 1, ... and reads the indices off the increments of the
    nullity sequence; raises if the generic member is rank deficient or the
    indices are not all found by d = cols.
    """
    best = 0
    for s, t in ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3)):
        member = [(s * b0[i] + t * b1[i]) % p for i in range(rows * cols)]
        best = max(best, rank_mod_p(member, rows, cols, p))
        if best == rows:
            break
    if best < rows:
        raise ArithmeticError("pencil is rank deficient for generic members")
    if cols - rows < want:
        raise ArithmeticError("pencil kernel is too small")
    found = []
    for d in range(cols + 1):
        nd = _pencil_nullity(b0, b1, rows, cols, p, d)
        expected = sum(d - e + 1 for e in found if e <= d)
        for _ in range(nd - expected):
            found.append(d)
        if len(found) >= want:
            return tuple(found[:want])
    raise ArithmeticError("minimal indices not found within the degree cap")


def _dual_basis_mod_p(x0: int, x1: int, x2: int, p: int):
    x = (x0 % p, x1 % p, x2 % p)
    i0 = 0
    while x[i0] == 0:
        i0 += 1
    inv = pow(x[i0], p - 2, p)
    forms = []
    for j in range(3):
        if j == i0:
            continue
        v = [0, 0, 0]
        v[j] = 1
        v[i0] = (-x[j] * inv) % p
        forms.append(v)
    return forms[0], forms[1]


def splitting_scan(a0, a1, a2, rows: int, cols: int, pts_flat, p: int):
    """Per-point kernel degrees of the pencil restricted to each dual line.

    pts_flat holds normalized coordinate triples; returns a flat list of
    2 * npoints ints (degree pair per point, ascending).
    """
    npts = len(pts_flat) // 3
    size = rows * cols
    out = [0] * (2 * npts)
    for n in range(npts):
        x0, x1, x2 = pts_flat[3 * n], pts_flat[3 * n + 1], pts_flat[3 * n + 2]
        l0, l1 = _dual_basis_mod_p(x0, x1, x2, p)
        b0 = [(l0[0] * a0[i] + l0[1] * a1[i] + l0[2] * a2[i]) % p for i in range(size)]
        b1 = [(l1[0] * a0[i] + l1[1] * a1[i] + l1[2] * a2[i]) % p for i in range(size)]
        d1, d2 = pencil_kernel_degrees(b0, b1, rows, cols, p, 2)
        out[2 * n] = d1
        out[2 * n + 1] = d2
    return out


def eval_form_many(coeffs, exps_flat, pts_flat, p: int):
    """Evaluate one form (coefficients + flat exponent triples) at many points."""
    nmono = len(coeffs)
    npts = len(pts_flat) // 3
    deg = 0
    for i in range(nmono):
        deg = max(deg, exps_flat[3 * i] + exps_flat[3 * i + 1] + exps_flat[3 * i + 2])
    out = [0] * npts
    for n in range(npts):
        x = pts_flat[3 * n] % p
        y = pts_flat[3 * n + 1] % p
        z = pts_flat[3 * n + 2] % p
        px = [1] * (deg + 1)
        py = [1] * (deg + 1)
        pz = [1] * (deg + 1)
        for i in range(1, deg + 1):
            px[i] = px[i - 1] * x % p
            py[i] = py[i - 1] * y % p
            pz[i] = pz[i - 1] * z % p
        acc = 0
        for i in range(nmono):
            c = coeffs[i] % p
            if c:
                acc = (acc + c * (px[exps_flat[3 * i]] * py[exps_flat[3 * i + 1]] % p) % p * pz[exps_flat[3 * i + 2]]) % p
        out[n] = acc
    return out
