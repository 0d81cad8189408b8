"""Verification suites: every theorem-level property this library claims,
run as exact checks over exhaustive or fixed-seed corpora.

Each suite returns a list of CheckResult records; a failing record carries
a reproducer (inputs in file/CLI form).  The CLI ``verify`` subcommand and
the acceptance test module both drive these functions.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import bridge, mm, monomials, spectra
from .boolfun import BooleanFunction, UnivariatePoly, from_trace_poly
from .field import default_field


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""
    reproducer: dict | None = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "details": self.details}
        if self.reproducer is not None:
            out["reproducer"] = self.reproducer
        return out


def _check(results: list[CheckResult], name: str, passed: bool,
           details: str = "", reproducer: dict | None = None) -> None:
    results.append(CheckResult(name, bool(passed), details,
                               None if passed else reproducer))


# ---------------------------------------------------------------------------
# field-core suite
# ---------------------------------------------------------------------------

def suite_field_core(n_max: int = 12, threads: int = 1) -> list[CheckResult]:
    out: list[CheckResult] = []
    for n in range(1, n_max + 1):
        ctx = default_field(n)
        gram_ok = all(
            ctx.trace(ctx.mul(ai, aj)) == (1 if i == j else 0)
            for i, ai in enumerate(ctx.sd_basis)
            for j, aj in enumerate(ctx.sd_basis))
        _check(out, f"gram identity n={n}", gram_ok,
               reproducer={"field": ctx.spec_string()})

        # Tr(xy) = <coords x, coords y> over the full q x q grid
        e2i = ctx.elem2idx
        ys = np.arange(ctx.q, dtype=np.int64)
        ok = True
        bad = None
        for x in range(ctx.q):
            tr = ctx.trace_table[ctx.mul_vec(x, ys)]
            dot = (np.bitwise_count(e2i[x] & e2i) & 1).astype(np.uint8)
            if not np.array_equal(tr, dot):
                ok = False
                bad = {"field": ctx.spec_string(), "x": x,
                       "y": int(ys[tr != dot][0])}
                break
        _check(out, f"trace dot product n={n}", ok, reproducer=bad)

        # trace is linear onto {0,1}; Frobenius is squaring
        tt = ctx.trace_table
        _check(out, f"trace surjective n={n}", tt.min() == 0 and tt.max() == 1,
               reproducer={"field": ctx.spec_string()})
        xs = np.arange(ctx.q, dtype=np.int64)
        _check(out, f"frobenius squaring n={n}",
               bool(np.array_equal(ctx.mul_vec(xs, xs), ctx.pow_vec(xs, 2))),
               reproducer={"field": ctx.spec_string()})

        # rel_trace transitivity for every divisor
        for m in range(1, n + 1):
            if n % m:
                continue
            trans_ok = all(
                ctx.subfield_trace(m, ctx.rel_trace(m, x)) == ctx.trace(x)
                for x in range(ctx.q))
            _check(out, f"rel_trace transitivity n={n} m={m}", trans_ok,
                   reproducer={"field": ctx.spec_string(), "m": m})
    return out


# ---------------------------------------------------------------------------
# monomial-grid suite (four-way agreement, root counts, census)
# ---------------------------------------------------------------------------

def _grid_pair(args) -> list[CheckResult]:
    n, k = args
    ctx = default_field(n)
    out: list[CheckResult] = []
    sweep = monomials.classify_monomials(ctx, k)
    failures = sweep.agreement_failures()
    _check(out, f"four-way agreement n={n} k={k}", not failures,
           details=f"{len(failures)} disagreements" if failures else "",
           reproducer=(None if not failures else
                       {"field": ctx.spec_string(), "k": k, **failures[0]}))
    nroots = len(monomials.zt_root_set(ctx, k))
    formula = monomials.zt_root_count(n, k)
    _check(out, f"root count n={n} k={k}", nroots == formula,
           details=f"enumerated {nroots}, formula {formula}",
           reproducer={"field": ctx.spec_string(), "k": k})
    if n % 2 == 0 and n >= 4:
        cen = monomials.existence_census(ctx, k)
        if cen.gcd_exp > 1:
            ok = (cen.surplus >= 1
                  and cen.surplus >= cen.inter_star_size + 1)
            _check(out, f"census inequality n={n} k={k}", ok,
                   details=(f"surplus={cen.surplus} "
                            f"inter={cen.inter_star_size} "
                            f"witnesses={cen.bent_negabent_count}"),
                   reproducer={"field": ctx.spec_string(), "k": k})
    return out


def suite_monomial_grid(n_max: int = 12, threads: int = 1) -> list[CheckResult]:
    pairs = [(n, k) for n in range(4, n_max + 1, 2) for k in range(1, n)]
    out: list[CheckResult] = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            for res in ex.map(_grid_pair, pairs):
                out.extend(res)
    else:
        for p in pairs:
            out.extend(_grid_pair(p))

    # pinned counts for n = 4
    if n_max >= 4:
        ctx = default_field(4)
        sw1 = monomials.classify_monomials(ctx, 1)
        _check(out, "bent count (4,1) = 10", len(sw1.bent_lambdas()) == 10,
               details=f"got {len(sw1.bent_lambdas())}",
               reproducer={"field": ctx.spec_string(), "k": 1})
        sw2 = monomials.classify_monomials(ctx, 2)
        bn = sw2.bent_negabent_lambdas()
        direct = [lam for lam in range(1, 16)
                  if (lam ^ ctx.frob(lam, 2)) not in (0, 1)]
        _check(out, "bent-negabent count (4,2) = 8",
               len(bn) == 8 and sorted(bn) == sorted(direct),
               details=f"got {len(bn)}",
               reproducer={"field": ctx.spec_string(), "k": 2})
    return out


# ---------------------------------------------------------------------------
# transport suite
# ---------------------------------------------------------------------------

def _all_quadratic_tables(n: int) -> np.ndarray:
    """Truth tables of every function of degree <= 2 on n variables."""
    xs = np.arange(1 << n, dtype=np.int64)
    monos = [(((xs >> i) & 1) & ((xs >> j) & 1)).astype(np.uint8)
             for i in range(n) for j in range(i + 1, n)]
    nq = len(monos)
    total = 1 << (nq + n + 1)
    tts = np.zeros((total, 1 << n), dtype=np.uint8)
    for row in range(total):
        tt = np.zeros(1 << n, dtype=np.uint8)
        for b in range(nq):
            if (row >> b) & 1:
                tt ^= monos[b]
        l = (row >> nq) & ((1 << n) - 1)
        tt ^= (np.bitwise_count(xs & l) & 1).astype(np.uint8)
        tt ^= (row >> (nq + n)) & 1
        tts[row] = tt
    return tts


def suite_transport(n_small: int = 4, big_ns: tuple[int, ...] = (6, 8),
                    samples: int = 1000, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []

    # exhaustive over quadratics at n_small, filtered by the rank oracle
    ctx = default_field(n_small)
    q_tt = bridge.q_function(ctx).tt
    tts = _all_quadratic_tables(n_small)
    bent_mask = np.zeros(len(tts), dtype=bool)
    nega_mask = np.zeros(len(tts), dtype=bool)
    for i, tt in enumerate(tts):
        b, ng = spectra.quad_rank_oracle(BooleanFunction(n_small, tt))
        bent_mask[i] = b
        nega_mask[i] = ng
    moved = tts ^ q_tt
    nega_after = spectra.nega_flat_rows(moved)
    bent_after = spectra.walsh_flat_rows(moved)
    ok_b2n = bool(nega_after[bent_mask].all())
    ok_n2b = bool(bent_after[nega_mask].all())
    _check(out, f"transport bent->negabent exhaustive n={n_small}", ok_b2n,
           details=f"{int(bent_mask.sum())} bent quadratics",
           reproducer={"field": ctx.spec_string()})
    _check(out, f"transport negabent->bent exhaustive n={n_small}", ok_n2b,
           details=f"{int(nega_mask.sum())} negabent quadratics",
           reproducer={"field": ctx.spec_string()})

    # corollary: bent-negabent <=> f and f+Q both bent, on the same corpus
    bn_direct = bent_mask & nega_mask
    bn_via_q = bent_mask & bent_after
    _check(out, f"btnbt corollary exhaustive n={n_small}",
           bool(np.array_equal(bn_direct, bn_via_q)),
           reproducer={"field": ctx.spec_string()})

    # constructed families at larger n
    rng = np.random.default_rng(seed)
    for n in big_ns:
        t = n // 2
        tctx = default_field(t)
        nctx = default_field(n)
        qq = bridge.q_function(nctx).tt
        bent_tts = np.zeros((samples, 1 << n), dtype=np.uint8)
        for i in range(samples):
            pi = mm.PermSpec(tctx, rng.permutation(tctx.q).astype(np.int64))
            h = UnivariatePoly(
                tctx, [(int(rng.integers(tctx.q)), int(rng.integers(tctx.q)))
                       for _ in range(3)])
            bent_tts[i] = mm.mm_build(pi, h).func.tt
        ok = bool(spectra.nega_flat_rows(bent_tts ^ qq).all())
        _check(out, f"transport bent->negabent n={n} ({samples} MM)", ok,
               reproducer={"field": nctx.spec_string(), "seed": seed})

        nega_tts = np.zeros((samples, 1 << n), dtype=np.uint8)
        for i in range(samples):
            if i % 2:
                nega_tts[i] = BooleanFunction.affine(
                    n, int(rng.integers(1 << n)), int(rng.integers(2))).tt
            else:
                nega_tts[i] = bent_tts[i] ^ qq  # transported MM, negabent
        ok = bool(spectra.walsh_flat_rows(nega_tts ^ qq).all())
        _check(out, f"transport negabent->bent n={n} ({samples} fns)", ok,
               reproducer={"field": nctx.spec_string(), "seed": seed})
    return out


# ---------------------------------------------------------------------------
# mm suite
# ---------------------------------------------------------------------------

def suite_mm(random_ts: tuple[int, ...] = (3, 4), samples: int = 1000,
             seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []

    # exhaustive t=2: every permutation of GF(4) x every univariate h
    tctx = default_field(2)
    bad = None
    count = 0
    for ptab in itertools.permutations(range(4)):
        pi = mm.PermSpec(tctx, np.array(ptab, dtype=np.int64))
        for cbits in range(256):
            h = UnivariatePoly(
                tctx, [((cbits >> (2 * e)) & 3, e) for e in range(4)])
            f = mm.mm_build(pi, h)
            if mm.mm_negabent_test(f) != spectra.is_negabent(f.func):
                bad = {"t": 2, "pi": list(ptab), "h": [(c, e) for e, c in h.terms]}
                break
            count += 1
        if bad:
            break
    _check(out, "mm criterion == NHT exhaustive t=2", bad is None,
           details=f"{count} functions", reproducer=bad)

    # homo biconditional, exhaustive t=2
    bad = None
    for i in range(2):
        for cbits in range(256):
            h = UnivariatePoly(
                tctx, [((cbits >> (2 * e)) & 3, e) for e in range(4)])
            f = mm.homo_build(tctx, i, h)
            lhs = spectra.is_negabent(f.func)
            rhs = spectra.is_bent(from_trace_poly(tctx, h))
            if lhs != rhs:
                bad = {"t": 2, "i": i, "h": [(c, e) for e, c in h.terms]}
                break
        if bad:
            break
    _check(out, "homo biconditional exhaustive t=2", bad is None, reproducer=bad)

    # random (pi, h) at larger t
    rng = np.random.default_rng(seed)
    for t in random_ts:
        tctx = default_field(t)
        bad = None
        for _ in range(samples):
            pi = mm.PermSpec(tctx, rng.permutation(tctx.q).astype(np.int64))
            h = UnivariatePoly(
                tctx, [(int(rng.integers(tctx.q)), int(rng.integers(tctx.q)))
                       for _ in range(3)])
            f = mm.mm_build(pi, h)
            if mm.mm_negabent_test(f) != spectra.is_negabent(f.func):
                bad = {"t": t, "pi": pi.table.tolist(),
                       "h": [(c, e) for e, c in h.terms]}
                break
        _check(out, f"mm criterion == NHT t={t} ({samples} random)",
               bad is None, reproducer=bad)

        bad = None
        for _ in range(samples):
            i = int(rng.integers(t))
            h = UnivariatePoly(
                tctx, [(int(rng.integers(tctx.q)), int(rng.integers(tctx.q)))
                       for _ in range(3)])
            f = mm.homo_build(tctx, i, h)
            if spectra.is_negabent(f.func) != spectra.is_bent(
                    from_trace_poly(tctx, h)):
                bad = {"t": t, "i": i, "h": [(c, e) for e, c in h.terms]}
                break
        _check(out, f"homo biconditional t={t} ({samples} random)",
               bad is None, reproducer=bad)
    return out


# ---------------------------------------------------------------------------
# construction suite
# ---------------------------------------------------------------------------

def full_degree_mapping(t: int, seed: int = 0) -> mm.PermSpec:
    """A complete mapping pi with deg(pi + id) = t - 1, so that the
    Tr(x (pi(y) + y)) part alone reaches algebraic degree t.  Generic
    random complete mappings have this; structured families often do not."""
    tctx = default_field(t)
    rng = np.random.default_rng(seed)
    for _ in range(256):
        pi = mm.random_complete_mapping(tctx, rng)
        if (pi is not None and mm.is_complete_mapping(pi)
                and pi.plus_identity().map_degree() == t - 1):
            return pi
    raise RuntimeError(f"no full-degree complete mapping found for t={t}")


def suite_construction(ns: tuple[int, ...] = (8, 12),
                       seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    for n in ns:
        t = n // 2
        tctx = default_field(t)
        pi = full_degree_mapping(t, seed)
        h = UnivariatePoly.monomial(tctx, 1, tctx.q - 1)
        res = bridge.construct_F(pi, h)
        good = spectra.is_bent_negabent(res.function) and res.degree() == t
        _check(out, f"construct_F n={n} degree n/2", good,
               details=f"degree={res.degree()}",
               reproducer={"n": n, "pi": pi.table.tolist(), "seed": seed})

        res2 = bridge.optimal_degree_construction(n, "search", seed=seed)
        good2 = (spectra.is_bent_negabent(res2.function)
                 and res2.degree() == t)
        _check(out, f"optimal_degree_construction n={n}", good2,
               details=f"degree={res2.degree()}",
               reproducer={"n": n, "seed": seed})
    return out


# ---------------------------------------------------------------------------
# oracles suite (transform and predicate consistency)
# ---------------------------------------------------------------------------

def suite_oracles(seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []

    # fast NHT/WHT == direct phase-matrix sums: every function for n <= 4
    for n in range(1, 5):
        m = 1 << n
        nfun = 1 << m
        vs = np.arange(nfun, dtype=np.int64)
        tts = ((vs[:, None] >> np.arange(m)[None, :]) & 1).astype(np.uint8)
        re, im = spectra.nega_batch(tts)
        w = spectra.walsh_batch(tts)
        s = spectra.signs(tts)
        xs = np.arange(m, dtype=np.int64)
        sign_m = 1 - 2 * (np.bitwise_count(xs[:, None] & xs[None, :]).astype(np.int64) & 1)
        wt4 = np.bitwise_count(xs) % 4
        ph_re = np.array([1, 0, -1, 0], dtype=np.int64)[wt4]
        ph_im = np.array([0, 1, 0, -1], dtype=np.int64)[wt4]
        ok = (np.array_equal(re, (s * ph_re) @ sign_m)
              and np.array_equal(im, (s * ph_im) @ sign_m)
              and np.array_equal(w, s @ sign_m))
        _check(out, f"fast == direct transform, all {nfun} functions n={n}",
               ok, reproducer=None if ok else {"n": n})

    # 1000 random n=8 functions
    rng = np.random.default_rng(seed)
    bad = None
    for _ in range(1000):
        f = BooleanFunction(8, rng.integers(0, 2, 256, dtype=np.uint8))
        ng = spectra.nega(f)
        rre, rim = spectra.nega_reference(f)
        w_ok = np.array_equal(spectra.walsh(f).values, spectra.walsh_reference(f))
        if not (w_ok and np.array_equal(ng.re, rre) and np.array_equal(ng.im, rim)):
            bad = {"n": 8, "seed": seed}
            break
    _check(out, "fast == direct transform, 1000 random n=8", bad is None,
           reproducer=bad)

    # quad rank oracle == spectral predicates on every n=4 quadratic
    bad = None
    for tt in _all_quadratic_tables(4):
        f = BooleanFunction(4, tt)
        if spectra.quad_rank_oracle(f) != (spectra.is_bent(f),
                                           spectra.is_negabent(f)):
            bad = {"n": 4, "tt": tt.tolist()}
            break
    _check(out, "rank oracle == spectra, all n=4 quadratics", bad is None,
           reproducer=bad)

    # negaperiodic ACF flat-at-nonzero <=> NHT flat, random + affine, n <= 10
    bad = None
    total = 0
    for n in range(1, 11):
        for _ in range(100):
            f = BooleanFunction(n, rng.integers(0, 2, 1 << n, dtype=np.uint8))
            acf_flat = bool((spectra.negaperiodic_acf(f)[1:] == 0).all())
            if acf_flat != spectra.is_negabent(f):
                bad = {"n": n, "seed": seed}
                break
            total += 1
        aff = BooleanFunction.affine(n, int(rng.integers(1 << n)),
                                     int(rng.integers(2)))
        acf = spectra.negaperiodic_acf(aff)
        if not ((acf[1:] == 0).all() and spectra.is_negabent(aff)):
            bad = {"n": n, "affine": True}
        if bad:
            break
    _check(out, f"negaperiodic ACF == NHT flatness ({total} random, n<=10)",
           bad is None, reproducer=bad)
    return out


SUITES = {
    "field-core": suite_field_core,
    "monomial-grid": suite_monomial_grid,
    "transport": suite_transport,
    "mm": suite_mm,
    "construction": suite_construction,
    "oracles": suite_oracles,
}
