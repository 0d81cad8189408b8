"""Classification of the quadratic monomial functions Tr(c x^(2^k + 1)).

Everything here runs four independent routes to the same verdicts and is
cross-checked exhaustively in the test suite:

  * the spectral predicates (nega-Hadamard / Walsh flatness),
  * permutation tests of the associated linearized polynomials,
  * the C/Z recurrence whose value at c decides negabentness,
  * explicit root-form and power-image set enumeration.

The recurrence is C_1 = C_2 = 1, C_{i+2}(x) = C_{i+1}(x) + x^(2^(ik)) C_i(x)
for 1 <= i <= t-1 where t = n / gcd(k, n), followed by
Z_t(x) = C_{t+1}(x) + x C_{t-1}(x)^(2^k).  (The source recurrence only
defines C up to index t+1, so the final index is taken as t+1; the
exhaustive agreement suite is what justifies that choice.)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import gf2mat, spectra
from .boolfun import BooleanFunction, UnivariatePoly, from_trace_poly
from .field import FieldCtx


# ---------------------------------------------------------------------------
# Linearized polynomials (GF(2)-linear maps)
# ---------------------------------------------------------------------------

class LinearizedPoly:
    """Sum of c_i x^(2^i), i < n; exponent indices fold mod n (x^(2^n) = x)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        cs = list(coeffs)
        if len(cs) != ctx.n:
            raise ValueError(f"need exactly n={ctx.n} coefficients")
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def from_terms(cls, ctx: FieldCtx, terms) -> "LinearizedPoly":
        cs = [0] * ctx.n
        for coef, i in terms:
            cs[i % ctx.n] ^= coef
        return cls(ctx, cs)

    def evaluate(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        v = x
        for c in self.coeffs:
            if c:
                acc ^= ctx.mul(c, v)
            v = ctx.mul(v, v)
        return acc

    def matrix(self) -> list[int]:
        """Images of the value basis 1 << j; rank n iff trivial kernel."""
        return [self.evaluate(1 << j) for j in range(self.ctx.n)]

    def is_permutation(self) -> bool:
        """Linearized polynomials permute the field iff they have no
        nonzero root, i.e. the coordinate matrix has full rank."""
        return gf2mat.rank(self.matrix()) == self.ctx.n


def negabent_perm_poly(ctx: FieldCtx, lam: int, k: int) -> LinearizedPoly:
    """P(x) = lam^(2^(n-k)) x^(2^(n-k)) + lam x^(2^k) + x."""
    n = ctx.n
    return LinearizedPoly.from_terms(
        ctx, [(ctx.frob(lam, (n - k) % n), n - k), (lam, k), (1, 0)])


def bent_perm_poly(ctx: FieldCtx, lam: int, k: int) -> LinearizedPoly:
    """M(x) = lam^(2^(n-k)) x^(2^(n-k)) + lam x^(2^k) (P without the +x)."""
    n = ctx.n
    return LinearizedPoly.from_terms(
        ctx, [(ctx.frob(lam, (n - k) % n), n - k), (lam, k)])


# ---------------------------------------------------------------------------
# Gold functions and scalar predicates
# ---------------------------------------------------------------------------

def _check_lam_k(ctx: FieldCtx, lam: int, k: int) -> None:
    if not 0 < lam < ctx.q:
        raise ValueError("lam must be a nonzero field element")
    if not 1 <= k < ctx.n:
        raise ValueError(f"k must satisfy 1 <= k < n={ctx.n}")


def gold_function(ctx: FieldCtx, lam: int, k: int) -> BooleanFunction:
    """Truth table of Tr(lam x^(2^k + 1))."""
    _check_lam_k(ctx, lam, k)
    return from_trace_poly(ctx, UnivariatePoly.monomial(ctx, lam, (1 << k) + 1))


def is_negabent_monomial(ctx: FieldCtx, lam: int, k: int) -> bool:
    """Negabent iff P has no nonzero root, i.e. is a permutation."""
    _check_lam_k(ctx, lam, k)
    return negabent_perm_poly(ctx, lam, k).is_permutation()


def zt_eval(ctx: FieldCtx, lam: int, k: int) -> int:
    """Value of Z_t at lam; nonzero exactly when the monomial is negabent."""
    n = ctx.n
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n={n}")
    t = n // gcd(k, n)
    if t <= 1:
        raise ValueError("recurrence requires t = n/gcd(k,n) > 1")
    cs = [0, 1, 1]  # C_1 = C_2 = 1 (index 0 unused)
    for i in range(1, t + 1):
        cs.append(cs[i + 1] ^ ctx.mul(ctx.frob(lam, (i * k) % n), cs[i]))
    return cs[t + 1] ^ ctx.mul(lam, ctx.frob(cs[t - 1], k % n))


def zt_root_set(ctx: FieldCtx, k: int) -> frozenset[int]:
    """All roots of Z_t, built from the closed root form
    v0^(2^(2k)+1) / (v0 + v0^(2^k))^(2^k+1) with v0 outside GF(2^d)."""
    n = ctx.n
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n={n}")
    d = gcd(k, n)
    xs = np.arange(ctx.q, dtype=np.int64)
    v0 = xs[ctx.frob_vec(xs, d) != xs]
    v1 = ctx.frob_vec(v0, k)
    num = ctx.pow_vec(v0, (1 << (2 * k)) + 1)
    den = ctx.pow_vec(v0 ^ v1, (1 << k) + 1)
    roots = ctx.mul_vec(num, ctx.pow_vec(den, ctx.q - 2))
    return frozenset(int(r) for r in roots)


def zt_root_count(n: int, k: int) -> int:
    """Closed-form count of distinct roots of Z_t over GF(2^n)."""
    d = gcd(k, n)
    t = n // d
    if t % 2 == 0:
        return ((1 << (n + d)) - (1 << d)) // ((1 << (2 * d)) - 1)
    return ((1 << (n + d)) - (1 << (2 * d))) // ((1 << (2 * d)) - 1)


def power_image(ctx: FieldCtx, k: int) -> frozenset[int]:
    """S_1 = { x^(2^k+1) : x in GF(2^n) }, zero included."""
    xs = np.arange(ctx.q, dtype=np.int64)
    return frozenset(int(v) for v in np.unique(ctx.pow_vec(xs, (1 << k) + 1)))


def is_bent_monomial(ctx: FieldCtx, lam: int, k: int) -> bool:
    """Bent iff lam lies outside the (2^k+1)-power image; even n only."""
    _check_lam_k(ctx, lam, k)
    if ctx.n % 2:
        raise ValueError("bent functions need an even number of variables")
    return lam not in power_image(ctx, k)


def complete_mapping_check(ctx: FieldCtx, lam: int, k: int) -> bool:
    """True iff M(x) and M(x) + x are both permutations (M linearized)."""
    _check_lam_k(ctx, lam, k)
    if ctx.n % 2:
        raise ValueError("bent functions need an even number of variables")
    return (bent_perm_poly(ctx, lam, k).is_permutation()
            and negabent_perm_poly(ctx, lam, k).is_permutation())


def is_bent_negabent_monomial(ctx: FieldCtx, lam: int, k: int) -> bool:
    """Bent-negabent iff lam avoids both the root form and the power image."""
    _check_lam_k(ctx, lam, k)
    if ctx.n % 2:
        raise ValueError("bent functions need an even number of variables")
    return lam not in zt_root_set(ctx, k) and lam not in power_image(ctx, k)


# ---------------------------------------------------------------------------
# Whole-field sweeps
# ---------------------------------------------------------------------------

def gold_tt_batch(ctx: FieldCtx, k: int, lams: np.ndarray) -> np.ndarray:
    """Truth tables of Tr(lam x^(2^k+1)) for a vector of lams, one per row."""
    xs = np.arange(ctx.q, dtype=np.int64)
    p_idx = ctx.pow_vec(xs, (1 << k) + 1)[ctx.idx2elem]
    prods = ctx.mul_vec(np.asarray(lams, dtype=np.int64)[:, None], p_idx[None, :])
    return ctx.trace_table[prods]


@dataclass(frozen=True)
class MonomialSweep:
    """Per-lam verdicts for one (field, k) pair; arrays indexed by lam value.

    Entry 0 corresponds to lam = 0 (the zero function) and is excluded from
    the agreement properties, which quantify over nonzero lam.
    """

    ctx: FieldCtx
    k: int
    d: int
    t: int
    nht_negabent: np.ndarray   # bool, per lam value
    perm_negabent: np.ndarray
    zt_nonzero: np.ndarray
    in_root_set: np.ndarray
    in_power_image: np.ndarray
    wht_bent: np.ndarray | None  # None for odd n

    def agreement_failures(self) -> list[dict]:
        """Nonzero lams where any two negabent routes (or the two bent
        routes) disagree; empty list is the expected outcome."""
        out = []
        for lam in range(1, self.ctx.q):
            votes = {
                "nht": bool(self.nht_negabent[lam]),
                "perm": bool(self.perm_negabent[lam]),
                "zt": bool(self.zt_nonzero[lam]),
                "root_form": not bool(self.in_root_set[lam]),
            }
            if len(set(votes.values())) > 1:
                out.append({"lam": lam, "kind": "negabent", **votes})
            if self.wht_bent is not None:
                if bool(self.wht_bent[lam]) != (not bool(self.in_power_image[lam])):
                    out.append({
                        "lam": lam, "kind": "bent",
                        "wht": bool(self.wht_bent[lam]),
                        "power_image": bool(self.in_power_image[lam]),
                    })
        return out

    def negabent_lambdas(self) -> list[int]:
        return [lam for lam in range(1, self.ctx.q) if self.nht_negabent[lam]]

    def bent_lambdas(self) -> list[int]:
        if self.wht_bent is None:
            return []
        return [lam for lam in range(1, self.ctx.q) if self.wht_bent[lam]]

    def bent_negabent_lambdas(self) -> list[int]:
        return [lam for lam in self.bent_lambdas() if self.nht_negabent[lam]]


def classify_monomials(ctx: FieldCtx, k: int, chunk: int = 512) -> MonomialSweep:
    """Run all verdict routes for every nonzero lam of the field."""
    if not 1 <= k < ctx.n:
        raise ValueError(f"k must satisfy 1 <= k < n={ctx.n}")
    q = ctx.q
    d = gcd(k, ctx.n)
    t = ctx.n // d
    even = ctx.n % 2 == 0

    nht = np.zeros(q, dtype=bool)
    wht = np.zeros(q, dtype=bool) if even else None
    lams = np.arange(1, q, dtype=np.int64)
    for lo in range(0, lams.size, chunk):
        ch = lams[lo:lo + chunk]
        tts = gold_tt_batch(ctx, k, ch)
        nht[ch] = spectra.nega_flat_rows(tts)
        if even:
            wht[ch] = spectra.walsh_flat_rows(tts)

    perm = np.zeros(q, dtype=bool)
    ztnz = np.zeros(q, dtype=bool)
    for lam in range(1, q):
        perm[lam] = negabent_perm_poly(ctx, lam, k).is_permutation()
        ztnz[lam] = zt_eval(ctx, lam, k) != 0

    roots = zt_root_set(ctx, k)
    in_roots = np.zeros(q, dtype=bool)
    for r in roots:
        in_roots[r] = True
    image = power_image(ctx, k)
    in_image = np.zeros(q, dtype=bool)
    for v in image:
        in_image[v] = True

    return MonomialSweep(ctx, k, d, t, nht, perm, ztnz, in_roots, in_image, wht)


# ---------------------------------------------------------------------------
# Existence census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRecord:
    """Exact cardinalities behind the counting proof that bent-negabent
    quadratic monomials exist.

    S1 is the power image (paper convention, zero included; ``s1_star`` is
    the same set without zero) and S2 the root-form set.  ``surplus`` is
    2^n - |S1* u S2|; the proof inequality surplus >= |S1* n S2| + 1 is
    stated for the zero-free S1, which is the convention that makes it an
    identity-or-better.  ``bent_negabent_count`` counts lams outside the
    zero-included union, i.e. actual witnesses.
    """

    n: int
    k: int
    d: int
    t: int
    gcd_exp: int  # gcd(2^k + 1, 2^n - 1)
    s1_size: int
    s1_star_size: int
    s2_size: int
    union_star_size: int
    inter_star_size: int
    surplus: int
    bent_negabent_count: int


def existence_census(ctx: FieldCtx, k: int) -> CensusRecord:
    if ctx.n % 2 or ctx.n < 4:
        raise ValueError("census needs even n >= 4")
    if not 1 <= k < ctx.n:
        raise ValueError(f"k must satisfy 1 <= k < n={ctx.n}")
    d = gcd(k, ctx.n)
    t = ctx.n // d
    g = gcd((1 << k) + 1, ctx.q - 1)
    s1 = power_image(ctx, k)
    s1_star = s1 - {0}
    s2 = zt_root_set(ctx, k)
    union_star = s1_star | s2
    surplus = ctx.q - len(union_star)
    witnesses = ctx.q - len(s1 | s2)
    return CensusRecord(
        n=ctx.n, k=k, d=d, t=t, gcd_exp=g,
        s1_size=len(s1), s1_star_size=len(s1_star), s2_size=len(s2),
        union_star_size=len(union_star), inter_star_size=len(s1_star & s2),
        surplus=surplus, bent_negabent_count=witnesses)
