import random

from jumplines.algebra import Mat, prime_field, rank
from jumplines.forms import HForm, basis_size, hf_eval, monomials
from jumplines.geom import plane_points, random_config
from jumplines.kernels import backends, eval_form_many, pencil_kernel_degrees, rank_mod_p
from jumplines.steiner import restrict_to_dual_line, steiner_pencil

F101 = prime_field(101)
IMPLS = backends()


def test_backends_present():
    assert "pure" in IMPLS
    # the compiled extension is expected in this build
    assert "compiled" in IMPLS, "compiled kernel missing: build with pip install -e ."


def test_rank_matches_generic_linalg():
    rng = random.Random(1)
    for _ in range(25):
        r, c = rng.randint(1, 6), rng.randint(1, 7)
        flat = [rng.randrange(101) for _ in range(r * c)]
        expect = rank(F101, Mat(r, c, tuple(flat)))
        for impl in IMPLS.values():
            assert impl.rank_mod_p(list(flat), r, c, 101) == expect


def test_pencil_degrees_backend_parity():
    rng = random.Random(2)
    for _ in range(30):
        r = rng.randint(1, 5)
        c = r + 2
        b0 = [rng.randrange(101) for _ in range(r * c)]
        b1 = [rng.randrange(101) for _ in range(r * c)]
        outs = []
        for impl in IMPLS.values():
            try:
                outs.append(tuple(impl.pencil_kernel_degrees(b0, b1, r, c, 101, 2)))
            except ArithmeticError as exc:
                outs.append(str(exc))
        assert all(o == outs[0] for o in outs)


def test_eval_form_many_matches_pointwise():
    rng = random.Random(3)
    f = HForm(4, tuple(rng.randrange(101) for _ in range(basis_size(4))))
    pts = plane_points(101)[:300]
    coeffs = list(f.coeffs)
    exps = [v for e in monomials(4) for v in e]
    flat = [c for pt in pts for c in pt]
    for impl in IMPLS.values():
        vals = impl.eval_form_many(coeffs, exps, flat, 101)
        assert [int(v) for v in vals] == [hf_eval(F101, f, pt) for pt in pts]


def test_splitting_scan_backend_parity():
    cfg = random_config(8, F101, seed=5)
    sp = steiner_pencil(cfg)
    a0 = [int(v) for v in sp.A0.entries]
    a1 = [int(v) for v in sp.A1.entries]
    a2 = [int(v) for v in sp.A2.entries]
    pts = plane_points(101)[:80] + list(cfg.points)
    flat = [int(c) for pt in pts for c in pt]
    outs = []
    for impl in IMPLS.values():
        outs.append([int(v) for v in impl.splitting_scan(a0, a1, a2, 5, 7, flat, 101)])
    assert all(o == outs[0] for o in outs)
    # spot check against the per-point route
    for i, x in enumerate(pts[:10]):
        b0, b1 = restrict_to_dual_line(sp, x)
        d = pencil_kernel_degrees([int(v) for v in b0.entries], [int(v) for v in b1.entries], 5, 7, 101, 2)
        assert [int(v) for v in d] == outs[0][2 * i : 2 * i + 2]


def test_selected_backend_exports():
    flat = [1, 0, 0, 1]
    assert rank_mod_p(flat, 2, 2, 101) == 2
    vals = eval_form_many([1], [0, 0, 1], [0, 0, 1, 4, 5, 1], 101)
    assert [int(v) for v in vals] == [1, 1]
