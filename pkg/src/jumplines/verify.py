"""End-to-end verification suite: every structural claim at desk scale.

Each criterion is a standalone function returning a result record; the CLI
`verify` command and the acceptance tests both run the whole list.  All
randomness is seeded, so a verdict is reproducible bit for bit.

A degenerate draw (the claims hold for general configurations only) is not a
failure: the seed resolver walks to the next derived seed and records the
reseed.  Genuine pointwise mismatches on a clean configuration are never
retried.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .algebra import DegenerateInputError, distinct_degree_profile, prime_field, up_squarefree_part
from .geom import PointConfig, random_config
from .intersect import jumping_length, tangency_degree
from .jumping import (
    VerificationError,
    _valid_extra_point,
    base_locus_equality,
    containment_monoidal,
    gamma_scan,
    jumping_scan,
    length_accounting,
    lien_equivalence,
    lift_eliminant_roots,
    ninth_point,
    pencil4_eliminant,
    pinceau_factorization,
)
from .steiner import steiner_pencil

SHIPPED_SEEDS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10)
_RESEED_STRIDE = 100003


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


@dataclass
class SeedBundle:
    """Everything criterion checks need for one 8-point configuration."""

    seed: int
    used_seed: int
    reseeds: int
    config: PointConfig
    report: object
    gamma: list
    pencil: object


def resolve_bundle(seed: int, p: int, threads: int = 1) -> SeedBundle:
    """Scan an 8-point configuration, reseeding past degenerate draws only."""
    field = prime_field(p)
    reseeds = 0
    s = seed
    while True:
        try:
            cfg = random_config(8, field, seed=s)
            gamma, zhits = gamma_scan(cfg)
            if zhits:
                raise DegenerateInputError("fat-point condition meets the configuration")
            res = pencil4_eliminant(cfg)
            sf = up_squarefree_part(field, res.r12)
            if len(sf) != len(res.r12):
                raise DegenerateInputError("eliminant is not squarefree")
        except DegenerateInputError:
            reseeds += 1
            if reseeds > 4:
                raise
            s = seed + reseeds * _RESEED_STRIDE
            continue
        report = jumping_scan(cfg, threads=threads)
        report.reseeds = reseeds
        report.seed = s
        return SeedBundle(seed, s, reseeds, cfg, report, gamma, steiner_pencil(cfg))


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_1(bundles) -> CriterionResult:
    """Exhaustive scan: jumping set = Z union Gamma with orders 2 / 1 / 0."""
    def run():
        fails = []
        gammas = []
        for b in bundles:
            v = b.report.verdicts
            need = (
                v["jumping_set_is_z_union_gamma"]
                and v["order_on_z_is_n_minus_2"]
                and v["order_on_gamma_is_1"]
                and v["gamma_disjoint_from_z"]
            )
            if not need:
                fails.append((b.used_seed, b.report.witness))
            gammas.append(len(b.gamma))
        detail = f"seeds {[b.used_seed for b in bundles]} gamma sizes {gammas}"
        if fails:
            detail = f"witnesses {fails}"
        return not fails, detail

    (ok, detail), dt = _timed(run)
    return CriterionResult(1, "odd-c1 theorem, exhaustive over the plane", ok, detail, dt)


def criterion_2(bundles, p: int) -> CriterionResult:
    """Length split 36 = 24 + 12 and the eliminant degree bookkeeping."""
    field = prime_field(p)

    def run():
        for b in bundles:
            total, z_part, gamma_part = length_accounting(4)
            if (total, z_part, gamma_part) != (36, 24, 12):
                return False, f"length split {(total, z_part, gamma_part)}"
            res = pencil4_eliminant(b.config)
            degs = (len(res.r16) - 1, len(res.r4) - 1, len(res.r12) - 1)
            if degs != (16, 4, 12):
                return False, f"seed {b.used_seed}: degrees {degs}"
            sf = up_squarefree_part(field, res.r12)
            if len(sf) != len(res.r12):
                return False, f"seed {b.used_seed}: eliminant not squarefree"
            prof = distinct_degree_profile(field, sf)
            if sum(t for _, t in prof) != 12:
                return False, f"seed {b.used_seed}: buckets {prof}"
            lifted = lift_eliminant_roots(b.config, res)
            if lifted != b.gamma:
                return False, f"seed {b.used_seed}: lifted {lifted} != gamma {b.gamma}"
        return True, f"16 = 4 + 12 with closure count 12 on all {len(bundles)} seeds"

    (ok, detail), dt = _timed(run)
    return CriterionResult(2, "eliminant pipeline and example counts", ok, detail, dt)


def criterion_3(seeds, p: int, threads: int = 1) -> CriterionResult:
    """Even-c1 theorem: jumping set = monoidal zero locus, degree n(n-1)."""
    field = prime_field(p)

    def run():
        for seed in seeds:
            cfg = random_config(7, field, seed=seed)
            rep = jumping_scan(cfg, threads=threads)
            if not rep.all_verdicts_true():
                return False, f"seed {seed}: witness {rep.witness}"
        return True, f"monoidal degree 6 locus matches on seeds {list(seeds)}"

    (ok, detail), dt = _timed(run)
    return CriterionResult(3, "even-c1 theorem, exhaustive over the plane", ok, detail, dt)


def criterion_4(bundles) -> CriterionResult:
    """Pencil test and fat-point test agree on samples and on Gamma."""
    def run():
        for b in bundles:
            orders = {r.point: r.order for r in b.report.records}
            ok, witness = lien_equivalence(
                b.config, b.pencil, sample=500, seed=b.used_seed, orders_from_scan=orders
            )
            if not ok:
                return False, f"seed {b.used_seed}: witness {witness}"
            if any(orders[pt] < 1 for pt in b.config.points):
                return False, f"seed {b.used_seed}: a configuration point does not jump"
        return True, f"500 samples + all of Z and Gamma per seed, {len(bundles)} seeds"

    (ok, detail), dt = _timed(run)
    return CriterionResult(4, "splitting test equivalent to fat-point test", ok, detail, dt)


def criterion_5(p: int, threads: int = 1) -> CriterionResult:
    """4 points: no jumping lines. 6 points: exactly Z, order 1, Gamma empty."""
    field = prime_field(p)

    def run():
        cfg4 = random_config(4, field, seed=1)
        rep4 = jumping_scan(cfg4, threads=threads)
        if not rep4.all_verdicts_true() or rep4.counts["jumping_points"] != 0:
            return False, f"4 points: witness {rep4.witness}"
        cfg6 = random_config(6, field, seed=1)
        rep6 = jumping_scan(cfg6, threads=threads)
        if not rep6.all_verdicts_true() or rep6.counts["jumping_points"] != 6:
            return False, f"6 points: witness {rep6.witness}"
        return True, "4 points: empty; 6 points: exactly Z with order 1"

    (ok, detail), dt = _timed(run)
    return CriterionResult(5, "degenerate anchors (4 and 6 points)", ok, detail, dt)


def criterion_6(bundles) -> CriterionResult:
    """The ninth base point of the cubic pencil never jumps."""
    def run():
        pts = []
        for b in bundles:
            p9 = ninth_point(b.config)
            orders = {r.point: r.order for r in b.report.records}
            if p9 in b.config or p9 in set(b.gamma) or orders[p9] != 0:
                return False, f"seed {b.used_seed}: ninth point {p9} misbehaves"
            pts.append(p9)
        return True, f"base point verified, outside Z and Gamma, order 0 ({len(pts)} seeds)"

    (ok, detail), dt = _timed(run)
    return CriterionResult(6, "ninth base point is not a jumping line", ok, detail, dt)


def criterion_7(bundles, trials: int = 4) -> CriterionResult:
    """Augmented monoidal curves contain Z u Gamma; a few of them cut it exactly."""
    def run():
        for b in bundles:
            rng = random.Random(f"jumplines:fixe:{b.used_seed}")
            for _ in range(5):
                x = _valid_extra_point(b.config, rng)
                if not containment_monoidal(b.config, x):
                    return False, f"seed {b.used_seed}: containment fails at {x}"
            equal, alive = base_locus_equality(b.config, trials=trials, seed=b.used_seed)
            if not equal:
                return False, f"seed {b.used_seed}: intersection has {len(alive)} points"
        return True, f"5 containments + exact {trials}-curve base locus per seed ({len(bundles)} seeds)"

    (ok, detail), dt = _timed(run)
    return CriterionResult(7, "fixed-point containment and base-locus equality", ok, detail, dt)


def criterion_8(bundles) -> CriterionResult:
    """Every rational Gamma point splits its fat-point system as curve + line."""
    def run():
        n_checked = 0
        for b in bundles:
            for x in b.gamma:
                try:
                    pinceau_factorization(b.config, x)
                except VerificationError as exc:
                    return False, f"seed {b.used_seed} at {x}: {exc}"
                n_checked += 1
        return True, f"factorization verified at {n_checked} rational Gamma points"

    (ok, detail), dt = _timed(run)
    return CriterionResult(8, "fat-point system factors as cubic + line", ok, detail, dt)


def criterion_9() -> CriterionResult:
    """Chern arithmetic reproduces the closed-form dimensions and degrees."""
    def run():
        for n in range(2, 13):
            dim, deg = tangency_degree(n)
            if dim != 2 * n + 2:
                return False, f"n={n}: dim {dim}"
        if tangency_degree(3)[1] != 12:
            return False, "cubic discriminant degree is not 12"
        for n in range(2, 51):
            jumping_length(n)
        return True, "degrees for n=2..12 (anchor 12 at n=3), length split for n=2..50"

    (ok, detail), dt = _timed(run)
    return CriterionResult(9, "intersection-theory formulas", ok, detail, dt)


def criterion_10(p: int, threads: int = 1) -> CriterionResult:
    """Byte-identical reports on repeated runs with the same seed."""
    field = prime_field(p)

    def run():
        cfg_a = random_config(6, field, seed=1)
        cfg_b = random_config(6, field, seed=1)
        if cfg_a.to_json() != cfg_b.to_json():
            return False, "configuration generation is not deterministic"
        rep_a = jumping_scan(cfg_a, threads=threads)
        rep_b = jumping_scan(cfg_b, threads=max(2, threads))
        if rep_a.to_json() != rep_b.to_json() or rep_a.to_csv() != rep_b.to_csv():
            return False, "scan reports differ between runs"
        return True, "config JSON, report JSON and CSV reproduce byte for byte"

    (ok, detail), dt = _timed(run)
    return CriterionResult(10, "determinism of reports", ok, detail, dt)


def run_all(seeds=SHIPPED_SEEDS, p: int = 101, threads: int = 1, trials: int = 4):
    bundles = [resolve_bundle(s, p, threads) for s in seeds]
    results = [
        criterion_1(bundles),
        criterion_2(bundles, p),
        criterion_3(seeds[: min(3, len(seeds))], p, threads),
        criterion_4(bundles),
        criterion_5(p, threads),
        criterion_6(bundles),
        criterion_7(bundles, trials),
        criterion_8(bundles),
        criterion_9(),
        criterion_10(p, threads),
    ]
    return results, bundles
