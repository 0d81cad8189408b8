"""Exact arithmetic in GF(2^n) with a self-dual basis, for 1 <= n <= 24.

Field elements are plain ints whose binary digits are the coordinates in the
polynomial basis modulo an irreducible polynomial (also a bitmask, leading
term included).  Addition is xor.  Multiplication uses log/antilog tables up
to ``TABLE_LIMIT`` bits and carry-less multiply with reduction above that.

The distinguishing feature of this module is the *self-dual* basis
{a_1, ..., a_n} it constructs for every field: Tr(a_i a_j) = 1 exactly when
i = j.  Writing x_i, y_i for coordinates in that basis,

    Tr(x y) = x_1 y_1 + ... + x_n y_n  (mod 2),

so the field trace of a product becomes a dot product of coordinate
vectors.  Truth tables downstream index functions by self-dual coordinates,
which makes Tr(a x) literally equal to the parity of ``a_index & x_index``.

Default moduli are the lowest-weight primitive polynomials per degree, so
``x`` generates the multiplicative group and the antilog table is a plain
power ladder.  Any other irreducible modulus can be supplied explicitly.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import gf2mat

TABLE_LIMIT = 20  # log/antilog tables up to this many bits

# Lowest-weight primitive polynomial per degree (bitmask incl. leading term).
DEFAULT_MODULI = {
    1: 0x3,  # x + 1
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x402B,  # x^14 + x^5 + x^3 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1002D,  # x^16 + x^5 + x^3 + x^2 + 1
    17: 0x20009,  # x^17 + x^3 + 1
    18: 0x40081,  # x^18 + x^7 + 1
    19: 0x80027,  # x^19 + x^5 + x^2 + x + 1
    20: 0x100009,  # x^20 + x^3 + 1
    21: 0x200005,  # x^21 + x^2 + 1
    22: 0x400003,  # x^22 + x + 1
    23: 0x800021,  # x^23 + x^5 + 1
    24: 0x100001B,  # x^24 + x^4 + x^3 + x + 1
}


# ---------------------------------------------------------------------------
# Polynomial arithmetic over GF(2) on bitmask ints
# ---------------------------------------------------------------------------

def _pmod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def _pmulmod(a: int, b: int, mod: int, n: int) -> int:
    """Carry-less multiply of two reduced elements, reduced mod ``mod``."""
    r = 0
    top = 1 << (n - 1)
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        if a & top:
            a = (a << 1) ^ mod
        else:
            a <<= 1
    return r


def _prime_factors(x: int) -> list[int]:
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


def _x_pow_2k(mod: int, n: int, k: int) -> int:
    """x^(2^k) mod ``mod`` via k squarings."""
    v = _pmod(2, mod)
    for _ in range(k):
        v = _pmulmod(v, v, mod, n)
    return v


def is_irreducible(mod: int, n: int) -> bool:
    """Rabin's test: x^(2^n) = x and gcd(x^(2^(n/p)) - x, mod) = 1."""
    if mod.bit_length() - 1 != n or not mod & 1:
        return False
    if n == 1:
        return True
    if _x_pow_2k(mod, n, n) != _pmod(2, mod):
        return False
    for p in _prime_factors(n):
        if _pgcd(mod, _x_pow_2k(mod, n, n // p) ^ 2) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """Immutable context for GF(2^n): modulus, tables, self-dual basis.

    Do not instantiate directly; use :func:`make_field`.  Instances are
    safe to share across threads (nothing mutates after construction; the
    lazily built lookup tables are idempotent).
    """

    def __init__(self, n: int, modulus: int):
        self.n = n
        self.modulus = modulus
        self.q = 1 << n
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.generator: int | None = None
        if n <= TABLE_LIMIT:
            self._build_tables()
        self.sd_basis: tuple[int, ...] = tuple(self._make_self_dual_basis())
        self.sd_basis_inv: tuple[int, ...] = tuple(
            gf2mat.inverse(list(self.sd_basis), n))
        # numpy table caches, built on first use
        self._np_exp: np.ndarray | None = None
        self._np_log: np.ndarray | None = None
        self._trace_table: np.ndarray | None = None
        self._idx2elem: np.ndarray | None = None
        self._elem2idx: np.ndarray | None = None

    # -- construction helpers ------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return _pmulmod(a, b, self.modulus, self.n)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        q1 = self.q - 1
        if q1 == 1:
            return 1
        fs = _prime_factors(q1)
        for g in range(2, self.q):
            if all(self._raw_pow(g, q1 // p) != 1 for p in fs):
                return g
        raise AssertionError("no generator found; modulus not irreducible?")

    def _build_tables(self) -> None:
        q1 = self.q - 1
        g = self._find_generator()
        log = [0] * self.q
        exp = [0] * (2 * q1 if q1 > 1 else 2)
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = self._raw_mul(v, g)
        for i in range(q1, len(exp)):
            exp[i] = exp[i - q1]
        self.generator = g
        self._exp = exp
        self._log = log

    def _raw_trace(self, x: int) -> int:
        t = x
        s = x
        for _ in range(self.n - 1):
            s = self._raw_mul(s, s)
            t ^= s
        return t  # 0 or 1

    def _make_self_dual_basis(self) -> list[int]:
        """Congruence-reduce the trace form Tr(uv) to the identity.

        Greedily splits off vectors with Tr(v^2) = 1; when the remaining
        subspace is alternating it comes in hyperbolic pairs (u, w), and one
        previously found unit e turns {e, u, w} into three orthonormal
        vectors {u+e, w+e, u+w+e}.  Tr(v^2) = Tr(v) is a nonzero functional,
        so the first split always succeeds and units never run out.
        """
        bform = lambda u, v: self._raw_trace(self._raw_mul(u, v))
        rest = [1 << i for i in range(self.n)]
        ortho: list[int] = []
        while rest:
            piv = next((v for v in rest if bform(v, v) == 1), None)
            if piv is not None:
                rest = [w ^ (bform(w, piv) * piv) for w in rest if w != piv]
                ortho.append(piv)
                continue
            u = rest[0]
            w = next(v for v in rest[1:] if bform(u, v) == 1)
            rest = [v ^ (bform(v, w) * u) ^ (bform(v, u) * w)
                    for v in rest if v != u and v != w]
            if not ortho:
                raise AssertionError(
                    "trace form alternating; impossible over GF(2)")
            e = ortho.pop()
            ortho.extend([u ^ e, w ^ e, u ^ w ^ e])
        for i, ai in enumerate(ortho):
            for j, aj in enumerate(ortho):
                if bform(ai, aj) != (1 if i == j else 0):
                    raise AssertionError("self-dual basis Gram check failed")
        return ortho

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return _pmulmod(a, b, self.modulus, self.n)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        """a**e; exponents of any size (reduced mod 2^n - 1 for a != 0)."""
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if e == 0 else 0
        q1 = self.q - 1
        em = e % q1 if q1 > 1 else 0
        if em == 0:
            return 1
        if self._log is not None and self._exp is not None:
            return self._exp[(self._log[a] * em) % q1]
        return self._raw_pow(a, em)

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^n)")
        if self._exp is not None:
            q1 = self.q - 1
            return self._exp[(q1 - self._log[a]) % q1]
        return self._raw_pow(a, self.q - 2)

    def frob(self, a: int, j: int = 1) -> int:
        """a^(2^j), the j-fold Frobenius."""
        for _ in range(j % self.n if self.n > 1 else 0):
            a = self.mul(a, a)
        return a

    def trace(self, x: int) -> int:
        """Absolute trace Tr(x) = x + x^2 + ... + x^(2^(n-1)), in {0, 1}."""
        if self._trace_table is not None:
            return int(self._trace_table[x])
        return self._raw_trace(x)

    def rel_trace(self, m: int, x: int) -> int:
        """Relative trace into GF(2^m): sum of x^(2^(m*i)) for i < n/m."""
        if m <= 0 or self.n % m != 0:
            raise ValueError(f"m={m} does not divide n={self.n}")
        t = 0
        v = x
        for _ in range(self.n // m):
            t ^= v
            v = self.frob(v, m)
        return t

    def subfield_trace(self, m: int, y: int) -> int:
        """Absolute trace of GF(2^m) applied to y, for y in that subfield."""
        if m <= 0 or self.n % m != 0:
            raise ValueError(f"m={m} does not divide n={self.n}")
        if self.frob(y, m) != y:
            raise ValueError("element does not lie in the requested subfield")
        t = 0
        v = y
        for _ in range(m):
            t ^= v
            v = self.mul(v, v)
        if t not in (0, 1):
            raise AssertionError("subfield trace left GF(2)")
        return t

    # -- self-dual coordinates -------------------------------------------------

    def coords(self, x: int) -> int:
        """Coordinate bits of x in the self-dual basis (bit j = coeff of a_j).

        Computed as Tr(x a_j), which is what self-duality means.
        """
        c = 0
        for j, a in enumerate(self.sd_basis):
            c |= self.trace(self.mul(x, a)) << j
        return c

    def from_coords(self, bits: int) -> int:
        x = 0
        for j, a in enumerate(self.sd_basis):
            if (bits >> j) & 1:
                x ^= a
        return x

    # -- bulk tables ------------------------------------------------------------

    @property
    def np_exp(self) -> np.ndarray:
        if self._np_exp is None:
            if self._exp is None:
                raise RuntimeError(f"no log tables for n={self.n}")
            self._np_exp = np.asarray(self._exp, dtype=np.int64)
        return self._np_exp

    @property
    def np_log(self) -> np.ndarray:
        if self._np_log is None:
            if self._log is None:
                raise RuntimeError(f"no log tables for n={self.n}")
            self._np_log = np.asarray(self._log, dtype=np.int64)
        return self._np_log

    @property
    def trace_table(self) -> np.ndarray:
        """Tr(x) for every x, as a uint8 array indexed by element value."""
        if self._trace_table is None:
            arr = np.arange(self.q, dtype=np.int64)
            t = arr.copy()
            s = arr
            for _ in range(self.n - 1):
                s = self.mul_vec(s, s)
                t ^= s
            self._trace_table = t.astype(np.uint8)
            self._trace_table.flags.writeable = False
        return self._trace_table

    @property
    def idx2elem(self) -> np.ndarray:
        """Element value at each truth-table index (self-dual coordinates)."""
        if self._idx2elem is None:
            t = np.zeros(1, dtype=np.int64)
            for a in self.sd_basis:
                t = np.concatenate([t, t ^ a])
            t.flags.writeable = False
            self._idx2elem = t
        return self._idx2elem

    @property
    def elem2idx(self) -> np.ndarray:
        """Truth-table index of each element value (inverse of idx2elem)."""
        if self._elem2idx is None:
            inv = np.empty(self.q, dtype=np.int64)
            inv[self.idx2elem] = np.arange(self.q, dtype=np.int64)
            inv.flags.writeable = False
            self._elem2idx = inv
        return self._elem2idx

    # -- vectorized arithmetic ---------------------------------------------------

    def mul_vec(self, a, b) -> np.ndarray:
        """Elementwise product of arrays (or scalar with array) of elements."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._exp is not None:
            out = self.np_exp[self.np_log[a] + self.np_log[b]]
            zero = (a == 0) | (b == 0)
            if zero.any():
                out = np.where(zero, 0, out)
            return out
        # bit-slice carry-less multiply: accumulate a * x^j for set bits of b
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        aj = a.copy()
        top = 1 << (self.n - 1)
        for j in range(self.n):
            out ^= np.where((b >> j) & 1, aj, 0)
            aj = np.where(aj & top, (aj << 1) ^ self.modulus, aj << 1)
        return out

    def pow_vec(self, a, e: int) -> np.ndarray:
        """Elementwise a**e for a fixed integer exponent (0^0 = 1)."""
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones(a.shape, dtype=np.int64)
        q1 = self.q - 1
        em = e % q1 if q1 > 1 else 0
        if self._exp is not None:
            if em == 0:
                out = np.ones(a.shape, dtype=np.int64)
            else:
                out = self.np_exp[(self.np_log[a] * em) % q1]
            return np.where(a == 0, 0, out)
        out = np.ones(a.shape, dtype=np.int64)
        base = a
        ee = em if em else q1  # a^(q-1) = 1 handled by mask below
        while ee:
            if ee & 1:
                out = self.mul_vec(out, base)
            base = self.mul_vec(base, base)
            ee >>= 1
        return np.where(a == 0, 0, out)

    def frob_vec(self, a, j: int = 1) -> np.ndarray:
        out = np.asarray(a, dtype=np.int64)
        for _ in range(j % self.n if self.n > 1 else 0):
            out = self.mul_vec(out, out)
        return out

    # -- misc ---------------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def subfield_elements(self, m: int) -> list[int]:
        """All elements of the subfield GF(2^m), i.e. fixed by x -> x^(2^m)."""
        if m <= 0 or self.n % m != 0:
            raise ValueError(f"m={m} does not divide n={self.n}")
        arr = np.arange(self.q, dtype=np.int64)
        fixed = self.frob_vec(arr, m) == arr
        return [int(v) for v in arr[fixed]]

    def spec_string(self) -> str:
        return f"gf2_{self.n}:{self.modulus:x}"

    def __repr__(self) -> str:
        return f"FieldCtx({self.spec_string()})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx)
                and self.n == other.n and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def make_field(n: int, modulus: int | None = None) -> FieldCtx:
    """Build GF(2^n) with a verified-irreducible modulus and self-dual basis.

    ``modulus`` is a degree-n polynomial bitmask (leading term included);
    omitted, the compiled-in default for that degree is used.
    """
    if not 1 <= n <= 24:
        raise ValueError(f"extension degree n={n} out of supported range 1..24")
    if modulus is None:
        modulus = DEFAULT_MODULI[n]
    if modulus.bit_length() - 1 != n:
        raise ValueError(
            f"modulus 0x{modulus:x} does not have degree {n}")
    if not is_irreducible(modulus, n):
        raise ValueError(f"modulus 0x{modulus:x} is reducible over GF(2)")
    return FieldCtx(n, modulus)


@lru_cache(maxsize=None)
def default_field(n: int) -> FieldCtx:
    """Shared GF(2^n) with the default modulus (contexts are immutable)."""
    return make_field(n)


def parse_field_spec(spec: str) -> FieldCtx:
    """Parse "gf2_<n>:<modulus-hex>" as used in file headers and CLI flags."""
    try:
        head, mhex = spec.split(":")
        if not head.startswith("gf2_"):
            raise ValueError
        n = int(head[4:])
        modulus = int(mhex, 16)
    except ValueError:
        raise ValueError(f"bad field spec {spec!r}; expected gf2_<n>:<hex>") from None
    if n in DEFAULT_MODULI and modulus == DEFAULT_MODULI[n]:
        return default_field(n)
    return make_field(n, modulus)
