"""Portable truth-table and ANF files.

Format (two lines, ascii):

    btf1 n=<n> field=gf2_<n>:<modulus-hex>
    <hex dump of the 2^n table bits, little-endian, bit 0 first>

ANF exports mirror the layout under the tag ``anf1`` with the Moebius
coefficient vector in place of the table.  The field spec records which
field (and therefore which self-dual index convention) produced the bits,
so tables stay portable across machines and runs.
"""

from __future__ import annotations

import numpy as np

from .boolfun import Anf, BooleanFunction, mobius
from .field import FieldCtx, parse_field_spec


def _pack_bits(bits: np.ndarray) -> str:
    return np.packbits(bits, bitorder="little").tobytes().hex()


def _unpack_bits(hexdump: str, count: int) -> np.ndarray:
    raw = np.frombuffer(bytes.fromhex(hexdump), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")
    if bits.size < count or bits[count:].any():
        raise ValueError("hex dump does not match the declared length")
    return bits[:count]


def _header(tag: str, ctx: FieldCtx) -> str:
    return f"{tag} n={ctx.n} field={ctx.spec_string()}"


def format_truth_table(f: BooleanFunction, ctx: FieldCtx) -> str:
    if f.n != ctx.n:
        raise ValueError("function and field sizes differ")
    return _header("btf1", ctx) + "\n" + _pack_bits(f.tt) + "\n"


def format_anf(a: Anf, ctx: FieldCtx) -> str:
    if a.n != ctx.n:
        raise ValueError("ANF and field sizes differ")
    return _header("anf1", ctx) + "\n" + _pack_bits(a.coeffs) + "\n"


def write_truth_table(path: str, f: BooleanFunction, ctx: FieldCtx) -> None:
    with open(path, "w") as fh:
        fh.write(format_truth_table(f, ctx))


def write_anf(path: str, a: Anf, ctx: FieldCtx) -> None:
    with open(path, "w") as fh:
        fh.write(format_anf(a, ctx))


def parse_function(text: str) -> tuple[BooleanFunction, FieldCtx]:
    """Parse either file flavor; ANF files are transformed back to tables."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("expected a two-line function file")
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("btf1", "anf1"):
        raise ValueError(f"unrecognized header {lines[0]!r}")
    tag = head[0]
    try:
        n = int(head[1].removeprefix("n="))
        ctx = parse_field_spec(head[2].removeprefix("field="))
    except ValueError as e:
        raise ValueError(f"bad header {lines[0]!r}: {e}") from None
    if ctx.n != n:
        raise ValueError(f"declared n={n} does not match field degree {ctx.n}")
    bits = _unpack_bits(lines[1], 1 << n)
    if tag == "anf1":
        bits = mobius(bits)
    return BooleanFunction(n, bits), ctx


def read_function(path: str) -> tuple[BooleanFunction, FieldCtx]:
    with open(path) as fh:
        return parse_function(fh.read())


# ---------------------------------------------------------------------------
# CLI polynomial syntax: comma-separated "coefhex*x^exp" terms
# ---------------------------------------------------------------------------

def parse_poly(ctx: FieldCtx, text: str):
    """Parse "a*x^3,1*x^0" into a UnivariatePoly; "0" is the zero poly."""
    from .boolfun import UnivariatePoly

    text = text.strip()
    if text == "0":
        return UnivariatePoly.zero(ctx)
    terms = []
    for part in text.split(","):
        part = part.strip()
        try:
            coefhex, exp = part.split("*x^")
            terms.append((int(coefhex, 16), int(exp)))
        except ValueError:
            raise ValueError(
                f"bad polynomial term {part!r}; expected coefhex*x^exp") from None
    return UnivariatePoly(ctx, terms)


def format_poly(poly) -> str:
    if not poly.terms:
        return "0"
    return ",".join(f"{c:x}*x^{e}" for e, c in poly.terms)
