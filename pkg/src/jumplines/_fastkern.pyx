# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: dense mod-p elimination and pencil minimal indices.

Mirrors jumplines.kernels.pure exactly (same pivoting, same conventions);
the point loop of `splitting_scan` releases the GIL so chunked scans can run
on real threads.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 mod_inv(i64 a, i64 p) nogil:
    # extended Euclid; a in (0, p)
    cdef i64 old_r = a, r = p
    cdef i64 old_s = 1, s = 0
    cdef i64 q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s; old_s = s; s = tmp
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


cdef i64 c_rank(i64 *a, int rows, int cols, i64 p) nogil:
    cdef int r = 0, c, i, j, sel
    cdef i64 inv, f, v
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i * cols + c] % p != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(cols):
                v = a[r * cols + j]
                a[r * cols + j] = a[sel * cols + j]
                a[sel * cols + j] = v
        inv = mod_inv(a[r * cols + c] % p, p)
        for i in range(r + 1, rows):
            f = (a[i * cols + c] % p) * inv % p
            if f != 0:
                for j in range(c, cols):
                    a[i * cols + j] = (a[i * cols + j] - f * a[r * cols + j]) % p
                    if a[i * cols + j] < 0:
                        a[i * cols + j] += p
        r += 1
    return r


cdef i64 c_pencil_nullity(i64 *b0, i64 *b1, int rows, int cols, i64 p, int d,
                          i64 *scratch) nogil:
    cdef int bigr = rows * (d + 2)
    cdef int bigc = cols * (d + 1)
    cdef int r, e, k, col, row
    cdef i64 v0, v1
    for r in range(bigr * bigc):
        scratch[r] = 0
    for r in range(rows):
        for e in range(cols):
            v0 = b0[r * cols + e] % p
            v1 = b1[r * cols + e] % p
            for k in range(d + 1):
                col = e * (d + 1) + k
                if v0 != 0:
                    scratch[(r * (d + 2) + k) * bigc + col] = v0
                if v1 != 0:
                    row = r * (d + 2) + k + 1
                    scratch[row * bigc + col] = (scratch[row * bigc + col] + v1) % p
    return bigc - c_rank(scratch, bigr, bigc, p)


cdef int c_pencil_degrees(i64 *b0, i64 *b1, int rows, int cols, i64 p, int want,
                          i64 *scratch, i64 *member, i64 *out) nogil:
    """Returns 0 on success, filling `out` with `want` kernel degrees."""
    cdef int probes[5][2]
    probes[0][0] = 1; probes[0][1] = 0
    probes[1][0] = 0; probes[1][1] = 1
    probes[2][0] = 1; probes[2][1] = 1
    probes[3][0] = 1; probes[3][1] = 2
    probes[4][0] = 1; probes[4][1] = 3
    cdef int best = 0, t, i, d, nfound = 0
    cdef i64 nd, expected
    for t in range(5):
        for i in range(rows * cols):
            member[i] = (probes[t][0] * b0[i] + probes[t][1] * b1[i]) % p
        i = c_rank(member, rows, cols, p)
        if i > best:
            best = i
        if best == rows:
            break
    if best < rows:
        return 1
    if cols - rows < want:
        return 2
    for d in range(cols + 1):
        nd = c_pencil_nullity(b0, b1, rows, cols, p, d, scratch)
        expected = 0
        for i in range(nfound):
            if out[i] <= d:
                expected += d - out[i] + 1
        while nd > expected and nfound < want:
            out[nfound] = d
            nfound += 1
            expected += 1
        if nfound >= want:
            return 0
    return 3


def rank_mod_p(flat, int rows, int cols, long long p):
    cdef int n = rows * cols
    cdef i64 *a = <i64 *> malloc(n * sizeof(i64)) if n else <i64 *> malloc(sizeof(i64))
    cdef int i
    cdef i64 out
    try:
        for i in range(n):
            a[i] = flat[i] % p
        with nogil:
            out = c_rank(a, rows, cols, p)
        return out
    finally:
        free(a)


def pencil_kernel_degrees(b0, b1, int rows, int cols, long long p, int want=2):
    cdef int n = rows * cols
    cdef int cap = rows * (cols + 2) * cols * (cols + 1)
    cdef i64 *cb0 = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *cb1 = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *scratch = <i64 *> malloc(cap * sizeof(i64))
    cdef i64 *member = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *out = <i64 *> malloc(want * sizeof(i64))
    cdef int i, rc
    try:
        for i in range(n):
            cb0[i] = b0[i] % p
            cb1[i] = b1[i] % p
        with nogil:
            rc = c_pencil_degrees(cb0, cb1, rows, cols, p, want, scratch, member, out)
        if rc == 1:
            raise ArithmeticError("pencil is rank deficient for generic members")
        if rc == 2:
            raise ArithmeticError("pencil kernel is too small")
        if rc == 3:
            raise ArithmeticError("minimal indices not found within the degree cap")
        return tuple(out[i] for i in range(want))
    finally:
        free(cb0); free(cb1); free(scratch); free(member); free(out)


def splitting_scan(a0, a1, a2, int rows, int cols, pts_flat, long long p):
    cdef int size = rows * cols
    cdef int npts = len(pts_flat) // 3
    cdef int cap = rows * (cols + 2) * cols * (cols + 1)
    cdef i64 *ca0 = <i64 *> malloc(size * sizeof(i64))
    cdef i64 *ca1 = <i64 *> malloc(size * sizeof(i64))
    cdef i64 *ca2 = <i64 *> malloc(size * sizeof(i64))
    cdef i64 *cpts = <i64 *> malloc(3 * npts * sizeof(i64)) if npts else <i64 *> malloc(sizeof(i64))
    cdef i64 *b0 = <i64 *> malloc(size * sizeof(i64))
    cdef i64 *b1 = <i64 *> malloc(size * sizeof(i64))
    cdef i64 *scratch = <i64 *> malloc(cap * sizeof(i64))
    cdef i64 *member = <i64 *> malloc(size * sizeof(i64))
    cdef i64 *res = <i64 *> malloc((2 * npts if npts else 1) * sizeof(i64))
    cdef i64 pair[2]
    cdef i64 x[3]
    cdef i64 l0[3]
    cdef i64 l1[3]
    cdef int i, n, j, i0, rc = 0
    cdef i64 inv
    try:
        for i in range(size):
            ca0[i] = a0[i] % p
            ca1[i] = a1[i] % p
            ca2[i] = a2[i] % p
        for i in range(3 * npts):
            cpts[i] = pts_flat[i] % p
        with nogil:
            for n in range(npts):
                x[0] = cpts[3 * n]; x[1] = cpts[3 * n + 1]; x[2] = cpts[3 * n + 2]
                i0 = 0
                while x[i0] == 0:
                    i0 += 1
                inv = mod_inv(x[i0], p)
                for j in range(3):
                    l0[j] = 0; l1[j] = 0
                if i0 == 0:
                    l0[1] = 1; l0[0] = (p - x[1] * inv % p) % p
                    l1[2] = 1; l1[0] = (p - x[2] * inv % p) % p
                elif i0 == 1:
                    l0[0] = 1; l0[1] = (p - x[0] * inv % p) % p
                    l1[2] = 1; l1[1] = (p - x[2] * inv % p) % p
                else:
                    l0[0] = 1; l0[2] = (p - x[0] * inv % p) % p
                    l1[1] = 1; l1[2] = (p - x[1] * inv % p) % p
                for i in range(size):
                    b0[i] = (l0[0] * ca0[i] + l0[1] * ca1[i] + l0[2] * ca2[i]) % p
                    b1[i] = (l1[0] * ca0[i] + l1[1] * ca1[i] + l1[2] * ca2[i]) % p
                rc = c_pencil_degrees(b0, b1, rows, cols, p, 2, scratch, member, pair)
                if rc != 0:
                    break
                res[2 * n] = pair[0]
                res[2 * n + 1] = pair[1]
        if rc == 1:
            raise ArithmeticError("pencil is rank deficient for generic members")
        if rc == 2:
            raise ArithmeticError("pencil kernel is too small")
        if rc == 3:
            raise ArithmeticError("minimal indices not found within the degree cap")
        return [res[i] for i in range(2 * npts)]
    finally:
        free(ca0); free(ca1); free(ca2); free(cpts)
        free(b0); free(b1); free(scratch); free(member); free(res)


def eval_form_many(coeffs, exps_flat, pts_flat, long long p):
    cdef int nmono = len(coeffs)
    cdef int npts = len(pts_flat) // 3
    cdef int deg = 0, i, n, a, b, c
    cdef i64 acc, xv, yv, zv
    cdef i64 *cc = <i64 *> malloc((nmono if nmono else 1) * sizeof(i64))
    cdef i64 *ee = <i64 *> malloc((3 * nmono if nmono else 1) * sizeof(i64))
    cdef i64 *cpts = <i64 *> malloc((3 * npts if npts else 1) * sizeof(i64))
    cdef i64 *out = <i64 *> malloc((npts if npts else 1) * sizeof(i64))
    cdef i64 *px
    cdef i64 *py
    cdef i64 *pz
    try:
        for i in range(nmono):
            cc[i] = coeffs[i] % p
            ee[3 * i] = exps_flat[3 * i]
            ee[3 * i + 1] = exps_flat[3 * i + 1]
            ee[3 * i + 2] = exps_flat[3 * i + 2]
            c = ee[3 * i] + ee[3 * i + 1] + ee[3 * i + 2]
            if c > deg:
                deg = c
        for i in range(3 * npts):
            cpts[i] = pts_flat[i] % p
        px = <i64 *> malloc((deg + 1) * sizeof(i64))
        py = <i64 *> malloc((deg + 1) * sizeof(i64))
        pz = <i64 *> malloc((deg + 1) * sizeof(i64))
        try:
            with nogil:
                for n in range(npts):
                    xv = cpts[3 * n]; yv = cpts[3 * n + 1]; zv = cpts[3 * n + 2]
                    px[0] = 1; py[0] = 1; pz[0] = 1
                    for i in range(1, deg + 1):
                        px[i] = px[i - 1] * xv % p
                        py[i] = py[i - 1] * yv % p
                        pz[i] = pz[i - 1] * zv % p
                    acc = 0
                    for i in range(nmono):
                        if cc[i] != 0:
                            acc = (acc + cc[i] * (px[ee[3 * i]] * py[ee[3 * i + 1]] % p) % p * pz[ee[3 * i + 2]]) % p
                    out[n] = acc
            return [out[i] for i in range(npts)]
        finally:
            free(px); free(py); free(pz)
    finally:
        free(cc); free(ee); free(cpts); free(out)


BACKEND = "compiled"
