"""Maiorana-McFarland functions f(x, y) = Tr(x pi(y) + h(y)) on
GF(2^t) x GF(2^t), their negabent criterion, and complete mapping
polynomials (pi such that pi and pi + id are both permutations).

Block convention for the realized 2t-variable truth table: the x block
occupies the low t index bits and the y block the high t bits, each block
in the self-dual coordinates of the t-bit field.  Every consumer of these
tables (notably the bent/negabent bridge) shares this layout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfun import BooleanFunction, UnivariatePoly, from_trace_poly, mobius
from .field import FieldCtx, make_field


@dataclass(frozen=True)
class PermSpec:
    """A map on GF(2^t) materialized as a value table (table[x] = pi(x))."""

    ctx: FieldCtx
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (self.ctx.q,):
            raise ValueError("table must cover every field element")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    @classmethod
    def from_univariate(cls, poly: UnivariatePoly) -> "PermSpec":
        return cls(poly.ctx, poly.evaluate_all())

    @classmethod
    def scalar_multiple(cls, ctx: FieldCtx, c: int) -> "PermSpec":
        return cls(ctx, ctx.mul_vec(c, np.arange(ctx.q, dtype=np.int64)))

    def is_bijection(self) -> bool:
        return np.unique(self.table).size == self.ctx.q

    def is_affine_map(self) -> bool:
        """True when pi(x) = L(x) + pi(0) for a GF(2)-linear L."""
        base = int(self.table[0])
        xs = np.arange(self.ctx.q, dtype=np.int64)
        lx = np.zeros(self.ctx.q, dtype=np.int64)
        for j in range(self.ctx.n):
            lx ^= np.where((xs >> j) & 1, int(self.table[1 << j]) ^ base, 0)
        return bool(np.array_equal(lx ^ base, self.table))

    def map_degree(self) -> int:
        """Max ANF degree over the coordinate functions of the map."""
        best = 0
        for j in range(self.ctx.n):
            bits = ((self.table >> j) & 1).astype(np.uint8)
            nz = np.nonzero(mobius(bits))[0]
            if nz.size:
                best = max(best, int(np.bitwise_count(nz.astype(np.int64)).max()))
        return best

    def plus_identity(self) -> "PermSpec":
        return PermSpec(self.ctx, self.table ^ np.arange(self.ctx.q, dtype=np.int64))


def is_complete_mapping(pi: PermSpec) -> bool:
    """Both pi and pi + id permute the field."""
    return pi.is_bijection() and pi.plus_identity().is_bijection()


# ---------------------------------------------------------------------------
# Maiorana-McFarland construction and negabent criterion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MMFunction:
    t: int
    pi: PermSpec
    h: UnivariatePoly
    func: BooleanFunction  # 2t variables, x low block / y high block


def mm_build(pi: PermSpec, h: UnivariatePoly) -> MMFunction:
    """Realize Tr(x pi(y) + h(y)); bent exactly when pi is a bijection."""
    ctx = pi.ctx
    if h.ctx != ctx:
        raise ValueError("pi and h live over different fields")
    t = ctx.n
    if 2 * t > 24:
        raise ValueError("2t exceeds the supported variable count")
    y_elems = ctx.idx2elem
    pi_idx = ctx.elem2idx[pi.table[y_elems]]          # pi(y) as index mask, per y index
    h_bits = ctx.trace_table[h.evaluate_all()[y_elems]]
    xs = np.arange(ctx.q, dtype=np.int64)
    tt2d = (np.bitwise_count(xs[None, :] & pi_idx[:, None]) & 1).astype(np.uint8)
    tt2d ^= h_bits[:, None]
    return MMFunction(t, pi, h, BooleanFunction(2 * t, tt2d.reshape(-1)))


def y_set(pi: PermSpec, a: int, b: int) -> set[int]:
    """{ y : pi(y) + pi(y + b) = a } as element values."""
    ys = np.arange(pi.ctx.q, dtype=np.int64)
    d = pi.table ^ pi.table[ys ^ b]
    return {int(y) for y in ys[d == a]}


def mm_negabent_test(m: MMFunction) -> bool:
    """Negabent criterion for an MM bent function, without any transform:
    for every a, b != 0 the signed sum of Tr(a pi(y) + h(y) + h(y+b) + b y)
    over y in Y_{a,b} must vanish.
    """
    pi, h = m.pi, m.h
    if not pi.is_bijection():
        raise ValueError("criterion assumes a bent MM function (pi bijective)")
    ctx = pi.ctx
    q = ctx.q
    ys = np.arange(q, dtype=np.int64)
    h_vals = h.evaluate_all()
    tr = ctx.trace_table
    for b in range(1, q):
        d = pi.table ^ pi.table[ys ^ b]  # the a-value each y contributes to
        rest = h_vals ^ h_vals[ys ^ b] ^ ctx.mul_vec(b, ys)
        bits = tr[ctx.mul_vec(d, pi.table) ^ rest].astype(np.int64)
        sums = np.bincount(d, weights=1 - 2 * bits, minlength=q)
        if np.any(sums != 0):
            return False
    return True


def homo_build(ctx: FieldCtx, i: int, h: UnivariatePoly) -> MMFunction:
    """MM function with the homomorphic permutation pi(y) = y^(2^i);
    negabent exactly when Tr(h(y)) is bent over GF(2^t)."""
    if not 0 <= i < ctx.n:
        raise ValueError(f"need 0 <= i < t={ctx.n}")
    ys = np.arange(ctx.q, dtype=np.int64)
    return mm_build(PermSpec(ctx, ctx.frob_vec(ys, i)), h)


# ---------------------------------------------------------------------------
# Complete mapping families
# ---------------------------------------------------------------------------

def multiplicative_order(a: int, m: int) -> int:
    v = a % m
    for k in range(1, m + 1):
        if v == 1:
            return k
        v = (v * a) % m
    raise ValueError(f"{a} is not invertible mod {m}")


@dataclass(frozen=True)
class YannParams:
    m: int
    ell: int
    k: int  # multiplicative order of 2 mod m
    t: int  # k * ell * m, the extension degree the mappings live over


def yann_params(m: int, ell: int) -> YannParams:
    """Resolve the parameter triple for the two monomial-times-linear
    complete mapping families; requires odd m >= 3 (order of 2 undefined
    mod even m) and the resulting field within the supported range."""
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be odd and at least 3")
    if ell < 1:
        raise ValueError("ell must be positive")
    k = multiplicative_order(2, m)
    t = k * ell * m
    if t > 24:
        raise ValueError(f"field degree k*ell*m = {t} exceeds the supported 24")
    return YannParams(m, ell, k, t)


def yann_valid_a(ctx: FieldCtx, m: int, ell: int) -> list[int]:
    """Elements a of the subfield GF(2^(k*ell)) with a != 0 and a^m != 1.

    Over GF(2) the published condition (-a)^m != 1 collapses to a^m != 1;
    a = 0 is excluded because it degenerates both families.  The list can
    legitimately be empty (e.g. m=3, ell=1).
    """
    p = yann_params(m, ell)
    if ctx.n != p.t:
        raise ValueError(f"context degree {ctx.n} != k*ell*m = {p.t}")
    return [a for a in ctx.subfield_elements(p.k * ell)
            if a != 0 and ctx.pow(a, m) != 1]


def yann_mapping(m: int, ell: int, a: int | None = None, variant: int = 1,
                 ctx: FieldCtx | None = None) -> PermSpec:
    """Complete mapping over GF(2^(k*ell*m)): variant 1 is
    x (x^((2^t-1)/m) + a), variant 2 is a x^((2^t-1)/m + 1)."""
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    p = yann_params(m, ell)
    if ctx is None:
        ctx = make_field(p.t)
    valid = yann_valid_a(ctx, m, ell)
    if a is None:
        if not valid:
            raise ValueError(
                f"no valid a exists for m={m}, ell={ell} (every nonzero "
                f"subfield element has a^{m} = 1)")
        a = valid[0]
    elif a not in valid:
        raise ValueError(f"a={a} violates the a^m != 1 / subfield condition")
    e = (ctx.q - 1) // m
    xs = np.arange(ctx.q, dtype=np.int64)
    if variant == 1:
        table = ctx.mul_vec(xs, ctx.pow_vec(xs, e) ^ a)
    else:
        table = ctx.mul_vec(a, ctx.pow_vec(xs, e + 1))
    return PermSpec(ctx, table)


def search_complete_mappings(ctx: FieldCtx, max_count: int, seed: int = 0,
                             nonlinear_only: bool = False) -> list[PermSpec]:
    """Produce verified complete mappings of GF(2^t).

    Deterministic given ``seed``: the scalar family c x (c not in {0, 1})
    comes first unless ``nonlinear_only``, then monomial complete mappings
    a x^e for small fields, then conflict-directed random repair, which
    finds generic (full-degree) complete mappings in a few hundred steps.
    Returns fewer than ``max_count`` only when none exist (t = 1).
    """
    out: list[PermSpec] = []

    def push(spec: PermSpec) -> bool:
        if (not nonlinear_only or not spec.is_affine_map()) and is_complete_mapping(spec):
            out.append(spec)
        return len(out) >= max_count

    if ctx.n == 1:
        return out  # only two permutations of GF(2), neither works
    if not nonlinear_only:
        for c in range(2, ctx.q):
            if push(PermSpec.scalar_multiple(ctx, c)):
                return out
    xs = np.arange(ctx.q, dtype=np.int64)
    if ctx.n <= 6:
        for e in range(2, ctx.q - 1):
            if e.bit_count() < 2:
                continue
            pe = ctx.pow_vec(xs, e)
            for a in range(1, ctx.q):
                if push(PermSpec(ctx, ctx.mul_vec(a, pe))):
                    return out
    rng = np.random.default_rng(seed)
    budget = 400 * max(1, max_count)
    for _ in range(budget):
        spec = random_complete_mapping(ctx, rng)
        if spec is not None and push(spec):
            return out
    return out


def random_complete_mapping(ctx: FieldCtx, rng: np.random.Generator,
                            max_steps: int = 20000) -> PermSpec | None:
    """One complete mapping from conflict-directed repair; generic draws
    have near-maximal algebraic degree, unlike the structured families."""
    table = _repair_search(ctx.q, rng, max_steps)
    return None if table is None else PermSpec(ctx, table)


def _repair_search(q: int, rng: np.random.Generator,
                   max_steps: int = 20000) -> np.ndarray | None:
    """Conflict-directed repair: swap entries so that perm ^ id becomes a
    permutation (each swap retargets one collision onto a missing value)."""
    xs = np.arange(q, dtype=np.int64)
    perm = rng.permutation(q).astype(np.int64)
    pos = np.empty(q, dtype=np.int64)
    pos[perm] = xs
    for _ in range(max_steps):
        g = perm ^ xs
        counts = np.bincount(g, minlength=q)
        if (counts <= 1).all():
            return perm
        collide = np.nonzero(counts[g] > 1)[0]
        missing = np.nonzero(counts == 0)[0]
        i = int(collide[rng.integers(collide.size)])
        mv = int(missing[rng.integers(missing.size)])
        j = int(pos[mv ^ i])
        perm[i], perm[j] = perm[j], perm[i]
        pos[perm[i]], pos[perm[j]] = i, j
    return None
