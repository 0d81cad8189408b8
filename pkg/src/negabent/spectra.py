"""Exact Walsh-Hadamard and nega-Hadamard transforms plus the bent and
negabent predicates.

All spectra are unnormalized integer sums: W(l) = sum_x (-1)^(f(x) + <l,x>)
and N(l) = sum_x (-1)^(f(x) + <l,x>) i^wt(x), so flatness tests are the
exact comparisons W(l)^2 = 2^n and re^2 + im^2 = 2^n with no floats in
sight.  Values fit comfortably in 64-bit integers for n <= 24; the batch
kernels use 16- or 32-bit intermediates (entries after s butterfly stages
are bounded by 2^s).

Slow reference transforms evaluate the defining sums against explicit phase
matrices; they exist to cross-check the butterflies and stay independent of
them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2mat
from .boolfun import BooleanFunction


def _work_dtype(n: int):
    return np.int16 if n <= 13 else np.int32


def signs(tt: np.ndarray, dtype=np.int64) -> np.ndarray:
    """(-1)^f as integers, along the last axis."""
    return (1 - 2 * tt.astype(dtype, copy=False))


# ---------------------------------------------------------------------------
# Fast transforms (butterflies along the last axis, coordinate 0 innermost)
# ---------------------------------------------------------------------------

def fwht(values: np.ndarray) -> np.ndarray:
    """In-place Walsh-Hadamard butterfly on a fresh copy; exact integers."""
    v = np.array(values, copy=True)
    m = v.shape[-1]
    lead = v.shape[:-1]
    step = 1
    while step < m:
        v = v.reshape(*lead, m // (2 * step), 2, step)
        a = v[..., 0, :].copy()
        b = v[..., 1, :].copy()
        v[..., 0, :] = a + b
        v[..., 1, :] = a - b
        v = v.reshape(*lead, m)
        step <<= 1
    return v


def nega_butterfly(re: np.ndarray, im: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nega-Hadamard butterfly: each stage maps (u, v) to (u + iv, u - iv).

    The i-twist applied at every coordinate split accumulates exactly
    i^wt(x) across coordinates.  Operates on copies; exact integers.
    """
    re = np.array(re, copy=True)
    im = np.array(im, copy=True)
    m = re.shape[-1]
    lead = re.shape[:-1]
    step = 1
    while step < m:
        shape = (*lead, m // (2 * step), 2, step)
        re = re.reshape(shape)
        im = im.reshape(shape)
        ur = re[..., 0, :].copy()
        ui = im[..., 0, :].copy()
        vr = re[..., 1, :].copy()
        vi = im[..., 1, :].copy()
        re[..., 0, :] = ur - vi
        im[..., 0, :] = ui + vr
        re[..., 1, :] = ur + vi
        im[..., 1, :] = ui - vr
        re = re.reshape(*lead, m)
        im = im.reshape(*lead, m)
        step <<= 1
    return re, im


def walsh_batch(tts: np.ndarray) -> np.ndarray:
    """Walsh spectra of a (..., 2^n) batch of truth tables, as int64."""
    n = tts.shape[-1].bit_length() - 1
    return fwht(signs(tts, _work_dtype(n))).astype(np.int64)


def nega_batch(tts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nega-Hadamard spectra (re, im) of a batch of truth tables, as int64."""
    n = tts.shape[-1].bit_length() - 1
    s = signs(tts, _work_dtype(n))
    re, im = nega_butterfly(s, np.zeros_like(s))
    return re.astype(np.int64), im.astype(np.int64)


# ---------------------------------------------------------------------------
# Spectrum containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WalshSpectrum:
    n: int
    values: np.ndarray  # int64, length 2^n

    def abs_sq(self) -> np.ndarray:
        return self.values * self.values

    def is_flat(self) -> bool:
        return bool((self.abs_sq() == 1 << self.n).all())

    def parseval_sum(self) -> int:
        return int(self.abs_sq().sum())


@dataclass(frozen=True)
class NegaSpectrum:
    n: int
    re: np.ndarray  # int64, length 2^n
    im: np.ndarray

    def abs_sq(self) -> np.ndarray:
        return self.re * self.re + self.im * self.im

    def is_flat(self) -> bool:
        return bool((self.abs_sq() == 1 << self.n).all())

    def parseval_sum(self) -> int:
        return int(self.abs_sq().sum())


def walsh(f: BooleanFunction) -> WalshSpectrum:
    return WalshSpectrum(f.n, walsh_batch(f.tt))


def nega(f: BooleanFunction) -> NegaSpectrum:
    re, im = nega_batch(f.tt)
    return NegaSpectrum(f.n, re, im)


# ---------------------------------------------------------------------------
# Direct-sum references (test oracles; no butterfly)
# ---------------------------------------------------------------------------

def _sign_matrix(n: int) -> np.ndarray:
    xs = np.arange(1 << n, dtype=np.int64)
    wt = np.bitwise_count(xs[:, None] & xs[None, :]).astype(np.int64)
    return 1 - 2 * (wt & 1)


def walsh_reference(f: BooleanFunction) -> np.ndarray:
    """W(l) by the defining sum, evaluated as an explicit matrix product."""
    if f.n > 12:
        raise ValueError("reference transform limited to n <= 12")
    return signs(f.tt) @ _sign_matrix(f.n)


def nega_reference(f: BooleanFunction) -> tuple[np.ndarray, np.ndarray]:
    """N(l) by the defining sum with explicit i^wt(x) phases."""
    if f.n > 12:
        raise ValueError("reference transform limited to n <= 12")
    xs = np.arange(1 << f.n, dtype=np.int64)
    w = np.bitwise_count(xs) % 4
    ph_re = np.array([1, 0, -1, 0], dtype=np.int64)[w]
    ph_im = np.array([0, 1, 0, -1], dtype=np.int64)[w]
    m = _sign_matrix(f.n)
    s = signs(f.tt)
    return (s * ph_re) @ m, (s * ph_im) @ m


# ---------------------------------------------------------------------------
# Autocorrelations (computed directly from the definitions)
# ---------------------------------------------------------------------------

def periodic_acf(f: BooleanFunction) -> np.ndarray:
    """tau_a = sum_x (-1)^(f(x) + f(x+a)) for every a."""
    s = signs(f.tt)
    xs = np.arange(s.size, dtype=np.int64)
    out = np.empty(s.size, dtype=np.int64)
    for a in range(s.size):
        out[a] = int(s @ s[xs ^ a])
    return out


def negaperiodic_acf(f: BooleanFunction) -> np.ndarray:
    """nu_a = sum_x (-1)^(f(x) + f(x+a)) (-1)^(<x,a>) for every a."""
    s = signs(f.tt)
    xs = np.arange(s.size, dtype=np.int64)
    out = np.empty(s.size, dtype=np.int64)
    for a in range(s.size):
        tw = 1 - 2 * (np.bitwise_count(xs & a).astype(np.int64) & 1)
        out[a] = int(s @ (s[xs ^ a] * tw))
    return out


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_bent(f: BooleanFunction) -> bool:
    """Flat Walsh spectrum; false outright for odd n (no bent functions)."""
    if f.n % 2:
        return False
    return walsh(f).is_flat()


def is_negabent(f: BooleanFunction) -> bool:
    return nega(f).is_flat()


def is_bent_negabent(f: BooleanFunction) -> bool:
    return is_bent(f) and is_negabent(f)


def walsh_flat_rows(tts: np.ndarray) -> np.ndarray:
    """Per-row bent flatness of a (rows, 2^n) batch of truth tables."""
    n = tts.shape[-1].bit_length() - 1
    w = walsh_batch(tts)
    return ((w * w) == (1 << n)).all(axis=-1)


def nega_flat_rows(tts: np.ndarray) -> np.ndarray:
    """Per-row negabent flatness of a (rows, 2^n) batch of truth tables."""
    n = tts.shape[-1].bit_length() - 1
    re, im = nega_batch(tts)
    return ((re * re + im * im) == (1 << n)).all(axis=-1)


# ---------------------------------------------------------------------------
# Quadratic rank oracle
# ---------------------------------------------------------------------------

def symplectic_matrix(f: BooleanFunction) -> list[int]:
    """B = Q + Q^T (zero diagonal) from the ANF of a function of degree <= 2."""
    a = f.anf()
    if a.degree() > 2:
        raise ValueError("function has degree > 2")
    n = f.n
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if a.coeffs[(1 << i) | (1 << j)]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def quad_rank_oracle(f: BooleanFunction) -> tuple[bool, bool]:
    """(bent, negabent) for a quadratic, via ranks of B and B + I over GF(2)."""
    rows = symplectic_matrix(f)
    n = f.n
    bent = gf2mat.rank(rows) == n
    negabent = gf2mat.rank([rows[i] ^ (1 << i) for i in range(n)]) == n
    return bent, negabent


def spectrum_summary(f: BooleanFunction) -> dict:
    """JSON-ready summary: verdicts, peak magnitudes, flatness violations."""
    w = walsh(f)
    ng = nega(f)
    wsq = w.abs_sq()
    nsq = ng.abs_sq()
    flat = 1 << f.n
    violations = [
        {"transform": "walsh", "lambda": int(i), "abs_sq": int(v)}
        for i, v in enumerate(wsq) if v != flat
    ] + [
        {"transform": "nega", "lambda": int(i), "abs_sq": int(v)}
        for i, v in enumerate(nsq) if v != flat
    ]
    return {
        "bent": bool(f.n % 2 == 0 and (wsq == flat).all()),
        "negabent": bool((nsq == flat).all()),
        "max_abs_sq": {"walsh": int(wsq.max()), "nega": int(nsq.max())},
        "violations": violations,
    }
