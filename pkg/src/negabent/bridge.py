"""The quadratic bridge between bent and negabent functions.

Q(x) = sum_{i=1}^{n/2-1} Tr(x^(2^i+1)) + Tr_half(x^(2^(n/2)+1)) is bent but
not negabent, and xor-ing it swaps the two properties: f bent implies f + Q
negabent, f negabent implies f + Q bent.  Combined with Maiorana-McFarland
functions built from complete mappings this yields bent-negabent functions
of the maximum degree n/2.

Quadratic bent functions are all affine equivalent; ``quad_equivalence``
makes that effective by reducing both symplectic matrices to the canonical
chain of hyperbolic pairs and composing the changes of basis, then reading
the leftover affine part off the truth tables.  The bridge needs exactly
this to carry the product-space inner product G(x, y) = Tr(x y) onto Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2mat, spectra
from .boolfun import (AffineTransform, BooleanFunction, UnivariatePoly,
                      compose_affine, mobius)
from .field import FieldCtx, default_field
from .mm import MMFunction, PermSpec, is_complete_mapping, mm_build, \
    search_complete_mappings, yann_mapping, yann_params


# ---------------------------------------------------------------------------
# The quadratic function Q and its derivative identity
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_function(ctx: FieldCtx) -> BooleanFunction:
    """Truth table of Q; defined for even n only (the sums need n/2)."""
    if ctx.n % 2:
        raise ValueError("Q is defined for even n only")
    half = ctx.n // 2
    arr = np.arange(ctx.q, dtype=np.int64)
    acc = np.zeros(ctx.q, dtype=np.uint8)
    for i in range(1, half):
        acc ^= ctx.trace_table[ctx.pow_vec(arr, (1 << i) + 1)]
    z = ctx.pow_vec(arr, (1 << half) + 1)  # lands in the half-degree subfield
    sub = np.zeros(ctx.q, dtype=np.int64)
    v = z
    for _ in range(half):
        sub ^= v
        v = ctx.mul_vec(v, v)
    if sub.max() > 1:
        raise AssertionError("subfield trace escaped GF(2)")
    acc ^= sub.astype(np.uint8)
    return BooleanFunction(ctx.n, acc[ctx.idx2elem])


def q_derivative_check(ctx: FieldCtx, a: int) -> bool:
    """Pointwise check of Q(x) + Q(x+a) = Tr(a) Tr(x) + Tr(a x) + const,
    with the constant taken exactly (it equals Q(a))."""
    if a == 0:
        raise ValueError("a must be nonzero")
    qf = q_function(ctx)
    xs = np.arange(ctx.q, dtype=np.int64)
    a_idx = int(ctx.elem2idx[a])
    lhs = qf.tt ^ qf.tt[xs ^ a_idx]
    tr_x = ctx.trace_table[ctx.idx2elem]
    rhs = (np.bitwise_count(xs & a_idx) & 1).astype(np.uint8)
    if ctx.trace(a):
        rhs = rhs ^ tr_x
    rhs = rhs ^ lhs[0]  # constant term; lhs[0] = Q(a) + Q(0) = Q(a)
    return bool(np.array_equal(lhs, rhs))


def transport(ctx: FieldCtx, f: BooleanFunction) -> BooleanFunction:
    """f + Q: sends bent to negabent and negabent to bent; an involution."""
    if f.n != ctx.n:
        raise ValueError("function and field sizes differ")
    return f ^ q_function(ctx)


def hyperplane_sum_check(f: BooleanFunction, beta: int, a: int) -> int:
    """Raw value of sum_x (-1)^(f(x) + f(x+a) + <beta, x>).

    ``beta`` and ``a`` are coordinate masks; for field elements pass their
    self-dual coordinates.  For bent f the sum vanishes whenever
    <beta, a> = 1 (a outside the hyperplane of beta).
    """
    s = spectra.signs(f.tt)
    xs = np.arange(s.size, dtype=np.int64)
    tw = 1 - 2 * (np.bitwise_count(xs & beta).astype(np.int64) & 1)
    return int(s @ (s[xs ^ a] * tw))


# ---------------------------------------------------------------------------
# Quadratic forms and affine equivalence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    """x Q x^T + <l, x> + c captured by the symplectic matrix B = Q + Q^T
    (int-packed rows, symmetric, zero diagonal), linear mask l and bit c."""

    n: int
    rows: tuple[int, ...]
    l: int = 0
    c: int = 0

    @classmethod
    def from_function(cls, f: BooleanFunction) -> "QuadraticForm":
        rows = spectra.symplectic_matrix(f)  # validates degree <= 2
        a = f.anf()
        l = 0
        for i in range(f.n):
            l |= int(a.coeffs[1 << i]) << i
        return cls(f.n, tuple(rows), l, int(a.coeffs[0]))

    def to_function(self) -> BooleanFunction:
        xs = np.arange(1 << self.n, dtype=np.int64)
        tt = (np.bitwise_count(xs & self.l) & 1).astype(np.uint8) ^ (self.c & 1)
        for i in range(self.n):
            upper = self.rows[i] >> (i + 1) << (i + 1)  # j > i half of B
            if upper:
                tt ^= (((xs >> i) & 1) * (np.bitwise_count(xs & upper) & 1)).astype(np.uint8)
        return BooleanFunction(self.n, tt)

    def is_bent_form(self) -> bool:
        return gf2mat.rank(list(self.rows)) == self.n


def _bilinear(rows: list[int], u: int, v: int) -> int:
    acc = 0
    i = 0
    while u >> i:
        if (u >> i) & 1:
            acc ^= rows[i]
        i += 1
    return (acc & v).bit_count() & 1


def symplectic_basis(rows: list[int], n: int) -> list[int]:
    """Rows S with S B S^T the canonical chain of hyperbolic pairs
    (antidiagonal 2x2 blocks); requires B alternating of full rank."""
    basis = [1 << i for i in range(n)]
    out: list[int] = []
    while basis:
        u = basis.pop(0)
        v = None
        for w in basis:
            if _bilinear(rows, u, w):
                v = w
                break
        if v is None:
            raise ValueError("symplectic matrix is singular (not bent)")
        basis.remove(v)
        basis = [w ^ (_bilinear(rows, w, v) * u) ^ (_bilinear(rows, w, u) * v)
                 for w in basis]
        out.extend([u, v])
    return out


def quad_equivalence(q1: QuadraticForm, q2: QuadraticForm) -> AffineTransform:
    """Affine T with q1(T x) = q2(x) as truth tables, exactly.

    Both forms must be bent (full-rank B).  The matrix part carries B_1 to
    B_2 through the canonical symplectic shape; two quadratics with equal
    symplectic matrices differ by an affine function, which the linear and
    constant parts of T absorb.
    """
    if q1.n != q2.n:
        raise ValueError("forms have different sizes")
    n = q1.n
    if not q1.is_bent_form() or not q2.is_bent_form():
        raise ValueError("affine equivalence solver requires bent forms")
    s1 = symplectic_basis(list(q1.rows), n)
    s2 = symplectic_basis(list(q2.rows), n)
    m = gf2mat.matmul(gf2mat.inverse(s2, n), s1, n)  # S2^{-1} S1
    a = tuple(gf2mat.transpose(m, n))
    f1 = q1.to_function()
    f2 = q2.to_function()
    resid = (compose_affine(f1, AffineTransform(a)) ^ f2).anf()
    if resid.degree() > 1:
        raise AssertionError("residual after matrix match is not affine")
    l = 0
    for i in range(n):
        l |= int(resid.coeffs[1 << i]) << i
    t = AffineTransform(a, 0, l, int(resid.coeffs[0]))
    if compose_affine(f1, t) != f2:
        raise AssertionError("equivalence verification failed")
    return t


# ---------------------------------------------------------------------------
# Block-structured relation between G(x, y) = Tr(x y) and Q (when it exists)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockRelation:
    """Q(x,y) = G(a1 x + a2, a3 y + a4) + Tr(beta x) + Tr(gamma y) + c with
    field-multiplication blocks; reported with a3 = 1 and zero translations
    (translations only shift the affine part, so this loses nothing)."""

    alpha1: int
    alpha2: int
    alpha3: int
    alpha4: int
    beta: int
    gamma: int
    c: int


def inner_product_function(tctx: FieldCtx) -> BooleanFunction:
    """G(x, y) = Tr(x y) on the product space (x low block, y high block)."""
    return mm_build(PermSpec(tctx, np.arange(tctx.q, dtype=np.int64)),
                    UnivariatePoly.zero(tctx)).func


def find_block_relation(tctx: FieldCtx,
                        big_ctx: FieldCtx | None = None) -> BlockRelation | None:
    """Search for a field-multiplication block relation carrying G onto Q.

    Exhaustive over the product a1 a3 (translations fold into the affine
    part), so a None answer is a proof of nonexistence for this field pair.
    Practical for t <= 4.
    """
    t = tctx.n
    if t > 4:
        raise ValueError("block relation search is limited to t <= 4")
    if big_ctx is None:
        big_ctx = default_field(2 * t)
    q_tt = q_function(big_ctx).tt
    for g0 in range(1, tctx.q):
        g_fn = mm_build(PermSpec.scalar_multiple(tctx, g0),
                        UnivariatePoly.zero(tctx)).func
        resid = BooleanFunction(2 * t, q_tt ^ g_fn.tt).anf()
        if resid.degree() <= 1:
            l = 0
            for i in range(2 * t):
                l |= int(resid.coeffs[1 << i]) << i
            lx = l & (tctx.q - 1)
            ly = l >> t
            return BlockRelation(
                alpha1=g0, alpha2=0, alpha3=1, alpha4=0,
                beta=int(tctx.idx2elem[lx]), gamma=int(tctx.idx2elem[ly]),
                c=int(resid.coeffs[0]))
    return None


# ---------------------------------------------------------------------------
# Bent-negabent construction from complete mappings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstructResult:
    function: BooleanFunction
    transform: AffineTransform
    pi: PermSpec
    h: UnivariatePoly
    big_ctx: FieldCtx
    mm_bent: BooleanFunction  # f = Tr(x pi(y) + h(y)), the bent MM part

    def degree(self):
        return self.function.degree()

    def certificate(self) -> dict:
        summary = spectra.spectrum_summary(self.function)
        return {
            "n": self.function.n,
            "field": self.big_ctx.spec_string(),
            "bent": summary["bent"],
            "negabent": summary["negabent"],
            "degree": self.degree(),
            "transform_used": {
                "A": [f"{row:x}" for row in self.transform.A],
                "b": f"{self.transform.b:x}",
                "l": f"{self.transform.l:x}",
                "c": self.transform.c,
            },
        }


def construct_F(pi: PermSpec, h: UnivariatePoly,
                transform: AffineTransform | str = "auto",
                big_ctx: FieldCtx | None = None,
                verify: bool = True) -> ConstructResult:
    """Bent-negabent function from a complete mapping pi and any h.

    Builds the bent function f + G = Tr(x (pi(y) + y) + h(y)) and composes
    it with an affine T satisfying G(T x) + affine = Q, so that the result
    F equals f(A x + b) + Q(x).  Then F and F + Q are both bent, hence F is
    bent-negabent.  ``transform="auto"`` obtains T from quad_equivalence;
    any explicit T is accepted if it carries G onto Q exactly.
    """
    tctx = pi.ctx
    n = 2 * tctx.n
    if n > 24:
        raise ValueError("2t exceeds the supported variable count")
    if not is_complete_mapping(pi):
        raise ValueError("pi is not a complete mapping")
    if h.ctx != tctx:
        raise ValueError("h lives over a different field")
    if big_ctx is None:
        big_ctx = default_field(n)
    if big_ctx.n != n:
        raise ValueError("big field degree must be 2t")

    fg = mm_build(pi.plus_identity(), h).func
    g_fn = inner_product_function(tctx)
    qf = q_function(big_ctx)
    if transform == "auto":
        t = quad_equivalence(QuadraticForm.from_function(g_fn),
                             QuadraticForm.from_function(qf))
    else:
        t = transform
        if compose_affine(g_fn, t) != qf:
            raise ValueError("supplied transform does not carry G onto Q")

    func = compose_affine(fg, t)
    mm_bent = mm_build(pi, h).func
    if verify:
        moved = compose_affine(mm_bent, AffineTransform(t.A, t.b, 0, 0))
        if func ^ qf != moved:
            raise AssertionError("F + Q is not the transported MM part")
        if not spectra.is_bent_negabent(func):
            raise AssertionError("constructed function failed the predicates")
    return ConstructResult(func, t, pi, h, big_ctx, mm_bent)


def top_trace_coefficient(tctx: FieldCtx) -> int:
    """Smallest c with Tr(c) = 1; the coefficient of y^(2^t - 1) must have
    trace 1 or its trace function vanishes identically (y^(2^t-1) is 0 or 1,
    so Tr(c y^(2^t-1)) = Tr(c) off zero).  For odd t this is c = 1."""
    return next(c for c in range(1, tctx.q) if tctx.trace(c) == 1)


def optimal_degree_construction(n: int, source: str = "search",
                                seed: int = 0) -> ConstructResult:
    """Bent-negabent function of the maximum degree n/2.

    ``source`` picks the complete mapping: "search" uses
    search_complete_mappings, "yann1"/"yann2" the two monomial families
    (raising when no parameter triple k*ell*m = n/2 admits a valid a).
    h is the all-ones-exponent monomial c y^(2^(n/2)-1) with Tr(c) = 1, so
    its trace function is the degree-n/2 indicator of nonzero y no matter
    which mapping the source produced.
    """
    if n % 2 or n < 4:
        raise ValueError("need even n >= 4")
    t = n // 2
    tctx = default_field(t)
    if source == "search":
        found = search_complete_mappings(tctx, 1, seed=seed)
        if not found:
            raise ValueError(f"no complete mapping found for t={t}")
        pi = found[0]
    elif source in ("yann1", "yann2"):
        variant = 1 if source == "yann1" else 2
        pi = _yann_for_degree(tctx, t, variant)
    else:
        raise ValueError(f"unknown source {source!r}")
    h = UnivariatePoly.monomial(tctx, top_trace_coefficient(tctx), tctx.q - 1)
    res = construct_F(pi, h, big_ctx=default_field(n))
    if res.degree() != t:
        raise AssertionError(f"degree {res.degree()} != n/2 = {t}")
    return res


def _yann_for_degree(tctx: FieldCtx, t: int, variant: int) -> PermSpec:
    """First (m, ell) with k*ell*m = t that admits a valid a."""
    reasons = []
    for m in range(3, t + 1, 2):
        try:
            k = yann_params(m, 1).k
        except ValueError:
            continue
        if t % (k * m):
            continue
        ell = t // (k * m)
        try:
            return yann_mapping(m, ell, None, variant, tctx)
        except ValueError as e:
            reasons.append(f"(m={m}, ell={ell}): {e}")
    detail = "; ".join(reasons) if reasons else "no (m, ell) with k*ell*m = t"
    raise ValueError(
        f"no usable parameters for t={t}: {detail}; source='search' works")
