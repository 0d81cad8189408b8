"""Boolean functions as truth tables, ANF via the binary Moebius transform,
builders from univariate trace polynomials, and affine composition.

Truth tables follow the self-dual index convention of :mod:`negabent.field`:
position ``i`` of the table holds f at the field element whose self-dual
coordinates are the bits of ``i``.  Consequently index xor is field addition
and ``Tr(a x)`` is the parity of ``a_index & x_index``; derivatives and
linear functionals below rely on both facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

import numpy as np

from . import gf2mat
from .field import FieldCtx

NEG_INF = -inf  # degree of the zero function (max over an empty set)


def _parity(arr) -> np.ndarray:
    return (np.bitwise_count(arr) & 1).astype(np.uint8)


class BooleanFunction:
    """A function on n bits stored as a read-only 2^n truth table."""

    __slots__ = ("n", "tt")

    def __init__(self, n: int, tt):
        if not 1 <= n <= 24:
            raise ValueError(f"variable count n={n} out of supported range 1..24")
        arr = np.array(tt, dtype=np.uint8, copy=True)
        if arr.shape != (1 << n,):
            raise ValueError(f"truth table must have length 2^{n}")
        if arr.max(initial=0) > 1:
            raise ValueError("truth table entries must be bits")
        arr.flags.writeable = False
        self.n = n
        self.tt = arr

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "BooleanFunction":
        return cls(n, np.zeros(1 << n, dtype=np.uint8))

    @classmethod
    def constant(cls, n: int, bit: int) -> "BooleanFunction":
        return cls(n, np.full(1 << n, bit & 1, dtype=np.uint8))

    @classmethod
    def affine(cls, n: int, l: int, c: int = 0) -> "BooleanFunction":
        """x -> <l, x> + c."""
        xs = np.arange(1 << n, dtype=np.int64)
        return cls(n, _parity(xs & l) ^ (c & 1))

    @classmethod
    def from_anf(cls, anf: "Anf") -> "BooleanFunction":
        return cls(anf.n, mobius(anf.coeffs))

    # -- basic queries -------------------------------------------------------

    def weight(self) -> int:
        return int(self.tt.sum())

    def is_balanced(self) -> bool:
        return self.weight() == 1 << (self.n - 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BooleanFunction) and self.n == other.n
                and np.array_equal(self.tt, other.tt))

    def __hash__(self) -> int:
        return hash((self.n, self.tt.tobytes()))

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        if self.n != other.n:
            raise ValueError("variable counts differ")
        return BooleanFunction(self.n, self.tt ^ other.tt)

    def __repr__(self) -> str:
        bits = "".join(map(str, self.tt[:32]))
        tail = "..." if self.n > 5 else ""
        return f"BooleanFunction(n={self.n}, tt={bits}{tail})"

    # -- calculus --------------------------------------------------------------

    def derivative(self, a: int) -> "BooleanFunction":
        """D_a f (x) = f(x) + f(x + a); index xor is field addition here."""
        xs = np.arange(1 << self.n, dtype=np.int64)
        return BooleanFunction(self.n, self.tt ^ self.tt[xs ^ a])

    def linear_structures(self) -> set[int]:
        """All a != 0 whose derivative is constant."""
        out = set()
        for a in range(1, 1 << self.n):
            d = self.tt ^ self.tt[np.arange(1 << self.n) ^ a]
            if d.max() == d.min():
                out.add(a)
        return out

    def anf(self) -> "Anf":
        return Anf(self.n, mobius(self.tt))

    def degree(self):
        """Algebraic degree; the zero function reports -inf."""
        return self.anf().degree()


def mobius(bits: np.ndarray) -> np.ndarray:
    """Binary Moebius transform (an involution): tt <-> ANF coefficients."""
    v = np.array(bits, dtype=np.uint8, copy=True)
    m = v.size
    step = 1
    while step < m:
        v = v.reshape(-1, 2, step)
        v[:, 1, :] ^= v[:, 0, :]
        v = v.reshape(m)
        step <<= 1
    return v


@dataclass(frozen=True)
class Anf:
    """ANF coefficient vector: bit a is the coefficient of prod x_i^(a_i)."""

    n: int
    coeffs: np.ndarray

    def degree(self):
        idx = np.nonzero(self.coeffs)[0]
        if idx.size == 0:
            return NEG_INF
        return int(np.bitwise_count(idx.astype(np.int64)).max())

    def to_function(self) -> BooleanFunction:
        return BooleanFunction(self.n, mobius(self.coeffs))

    def monomials(self) -> list[int]:
        return [int(a) for a in np.nonzero(self.coeffs)[0]]


# ---------------------------------------------------------------------------
# Univariate polynomials over GF(2^n) and trace functions
# ---------------------------------------------------------------------------

class UnivariatePoly:
    """Sum of c * x^e terms over a field context.

    Exponents are reduced by x^(2^n) = x into [1, 2^n - 1] (constant terms
    keep exponent 0); duplicate exponents merge by xor and zero coefficients
    drop out.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms):
        merged: dict[int, int] = {}
        q1 = ctx.q - 1
        for coef, exp in terms:
            if exp < 0:
                raise ValueError("negative exponent")
            if not 0 <= coef < ctx.q:
                raise ValueError("coefficient outside field")
            if exp > 0 and q1 > 0:
                exp = exp % q1 or q1
            merged[exp] = merged.get(exp, 0) ^ coef
        self.ctx = ctx
        self.terms = tuple(sorted((e, c) for e, c in merged.items() if c))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "UnivariatePoly":
        return cls(ctx, [])

    @classmethod
    def monomial(cls, ctx: FieldCtx, coef: int, exp: int) -> "UnivariatePoly":
        return cls(ctx, [(coef, exp)])

    def __xor__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        if self.ctx != other.ctx:
            raise ValueError("field contexts differ")
        return UnivariatePoly(
            self.ctx, [(c, e) for e, c in self.terms] + [(c, e) for e, c in other.terms])

    def evaluate(self, x: int) -> int:
        acc = 0
        for e, c in self.terms:
            acc ^= self.ctx.mul(c, self.ctx.pow(x, e))
        return acc

    def evaluate_all(self) -> np.ndarray:
        """Values at every field element, indexed by element value."""
        ctx = self.ctx
        acc = np.zeros(ctx.q, dtype=np.int64)
        xs = np.arange(ctx.q, dtype=np.int64)
        for e, c in self.terms:
            acc ^= ctx.mul_vec(c, ctx.pow_vec(xs, e))
        return acc

    def algebraic_degree(self):
        """Max binary weight of an exponent; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(e.bit_count() for e, _ in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "UnivariatePoly(0)"
        body = " + ".join(f"{c:x}*x^{e}" for e, c in reversed(self.terms))
        return f"UnivariatePoly({body} over {self.ctx.spec_string()})"


def from_trace_poly(ctx: FieldCtx, poly: UnivariatePoly) -> BooleanFunction:
    """Realize f(x) = Tr(F(x)) as a truth table over self-dual indices."""
    if poly.ctx != ctx:
        raise ValueError("polynomial belongs to a different field")
    tr_by_elem = ctx.trace_table[poly.evaluate_all()]
    return BooleanFunction(ctx.n, tr_by_elem[ctx.idx2elem])


# ---------------------------------------------------------------------------
# Affine transforms acting on truth tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineTransform:
    """x -> f(A x + b) + <l, x> + c with A an invertible bit matrix.

    ``A`` is stored as int-packed rows; ``b``, ``l`` are packed vectors.
    """

    A: tuple[int, ...]
    b: int = 0
    l: int = 0
    c: int = 0

    @property
    def n(self) -> int:
        return len(self.A)

    @classmethod
    def identity(cls, n: int) -> "AffineTransform":
        return cls(tuple(gf2mat.identity(n)))

    def is_invertible(self) -> bool:
        return gf2mat.is_invertible(list(self.A), self.n)

    def apply_index(self, x: int) -> int:
        return gf2mat.matvec(list(self.A), x) ^ self.b


def compose_affine(f: BooleanFunction, t: AffineTransform) -> BooleanFunction:
    """Truth table of f(A x + b) + <l, x> + c."""
    if t.n != f.n:
        raise ValueError("transform dimension does not match function")
    if not t.is_invertible():
        raise ValueError("affine transform matrix is singular")
    xs = np.arange(1 << f.n, dtype=np.int64)
    ax = np.zeros(xs.size, dtype=np.int64)
    for i, row in enumerate(t.A):
        ax |= (np.bitwise_count(xs & row) & 1).astype(np.int64) << i
    tt = f.tt[ax ^ t.b] ^ _parity(xs & t.l) ^ (t.c & 1)
    return BooleanFunction(f.n, tt)
