"""Exact arithmetic in GF(q) for prime powers q = p^h.

Field elements are encoded as integers in [0, q): the polynomial-basis
element c_0 + c_1*x + ... + c_{h-1}*x^{h-1} is packed as sum(c_i * p**i),
so for h = 1 the encoding is the residue itself.  The reduction modulus is
the monic degree-h irreducible polynomial over GF(p) whose packed encoding
(including the leading 1) is smallest, and alpha is the smallest-encoded
element of multiplicative order q - 1.  Both choices are deterministic
functions of q alone, which makes every file this package writes
reproducible bit for bit given q.

Multiplication and inversion run on log/antilog tables built once per
field; addition is digitwise mod p.  Vectorized helpers expose elements as
GF(p) digit rows and linear forms as stacked multiply-by-constant
matrices, so incidence counting downstream reduces to one integer matrix
product evaluated exactly in float64 (all intermediate values stay far
below 2**53).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotAPrimePower, TooLarge

MAX_FIELD_SIZE = 1 << 16


@dataclass(frozen=True)
class FieldSpec:
    """Defining data of one GF(p^h): deterministic given q."""

    p: int
    h: int
    q: int
    modulus: tuple[int, ...]  # little-endian coefficients, length h+1, monic
    alpha: int  # encoding of the chosen primitive element


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotAPrimePower(f"field size must be at least 2, got {q}")
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            h, m = 0, q
            while m % p == 0:
                m //= p
                h += 1
            if m != 1:
                raise NotAPrimePower(f"{q} is divisible by {p} but is not a power of it")
            return p, h
    return q, 1


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    # b monic is all we ever divide by
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        lead = a[-1]
        shift = len(a) - 1 - db
        if lead:
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * bi) % p
        _poly_trim(a)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            g = _digits(low, p, d) + [1]
            if not _poly_rem(f, g, p):
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def field_create(q: int, max_q: int = MAX_FIELD_SIZE) -> FieldSpec:
    """Build the canonical FieldSpec for GF(q).

    The modulus is the smallest-encoded monic irreducible of degree h over
    GF(p) (trial division suffices at these sizes) and alpha the
    smallest-encoded element of multiplicative order exactly q - 1.
    """
    p, h = _prime_power(q)
    if q > max_q:
        raise TooLarge(f"field size {q} exceeds the configured bound {max_q}")

    modulus: tuple[int, ...] | None = None
    for low in range(p**h):
        coeffs = _digits(low, p, h) + [1]
        if _is_irreducible(coeffs, p):
            modulus = tuple(coeffs)
            break
    assert modulus is not None  # an irreducible exists for every degree

    mod_list = list(modulus)

    def as_poly(a: int) -> list[int]:
        return _poly_trim(_digits(a, p, h))

    def as_enc(poly: list[int]) -> int:
        return sum(c * p**i for i, c in enumerate(poly))

    def mul(a: int, b: int) -> int:
        return as_enc(_poly_rem(_poly_mul(as_poly(a), as_poly(b), p), mod_list, p))

    def power(a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = mul(r, a)
            a = mul(a, a)
            e >>= 1
        return r

    factors = _prime_factors(q - 1)
    alpha = None
    for a in range(1, q):
        if all(power(a, (q - 1) // f) != 1 for f in factors):
            alpha = a
            break
    assert alpha is not None  # the multiplicative group is cyclic

    return FieldSpec(p=p, h=h, q=q, modulus=modulus, alpha=alpha)


class Field:
    """Arithmetic context for one FieldSpec; immutable after construction."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p, self.h, self.q = spec.p, spec.h, spec.q
        p, h, q = self.p, self.h, self.q

        self._ppow = [p**i for i in range(h)]
        self._dig = [tuple(_digits(a, p, h)) for a in range(q)]

        mod_list = list(spec.modulus)

        def raw_mul(a: int, b: int) -> int:
            poly = _poly_rem(
                _poly_mul(_poly_trim(_digits(a, p, h)), _poly_trim(_digits(b, p, h)), p),
                mod_list,
                p,
            )
            return sum(c * p**i for i, c in enumerate(poly))

        exp = [0] * (q - 1)
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = raw_mul(x, spec.alpha)
        if x != 1:
            raise NotAPrimePower(f"alpha={spec.alpha} does not have order {q - 1}")
        self._exp = exp
        self._log = log

        self.digit_table = np.array(self._dig, dtype=np.int64)  # (q, h)
        self._mult_mats: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"Field(GF({self.q}))"

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.h == 1:
            return (a + b) % p
        da, db = self._dig[a], self._dig[b]
        return sum(((x + y) % p) * w for x, y, w in zip(da, db, self._ppow))

    def neg(self, a: int) -> int:
        p = self.p
        if self.h == 1:
            return (-a) % p
        return sum(((-x) % p) * w for x, w in zip(self._dig[a], self._ppow))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0 in GF(q)")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def alpha_power(self, i: int) -> int:
        """alpha^i with the exponent reduced mod q-1; alpha_power(0) == 1."""
        return self._exp[i % (self.q - 1)]

    # vectorized support ---------------------------------------------------

    @property
    def mult_matrices(self) -> np.ndarray:
        """(q, h, h) int64; digits(x*a) == digits(x) @ mult_matrices[a] mod p."""
        if self._mult_mats is None:
            q, h = self.q, self.h
            mats = np.zeros((q, h, h), dtype=np.int64)
            for a in range(q):
                for i in range(h):
                    mats[a, i, :] = self._dig[self.mul(a, self._ppow[i])]
            self._mult_mats = mats
        return self._mult_mats

    def digit_rows(self, vectors) -> np.ndarray:
        """(N, k) encodings -> (N, k*h) float64 GF(p) digit rows."""
        arr = np.asarray(vectors, dtype=np.int64)
        n, k = arr.shape
        return self.digit_table[arr].reshape(n, k * self.h).astype(np.float64)

    def linear_form_matrix(self, vectors) -> np.ndarray:
        """(N, k) coefficient vectors -> (k*h, N*h) float64 block matrix.

        For a digit row x of a length-k vector, (x @ result) mod p holds, for
        each of the N forms, the h digits of the GF(q) dot product.
        """
        arr = np.asarray(vectors, dtype=np.int64)
        n, k = arr.shape
        h = self.h
        blocks = self.mult_matrices[arr]  # (N, k, h, h)
        return blocks.transpose(1, 2, 0, 3).reshape(k * h, n * h).astype(np.float64)


def field_arith(spec: FieldSpec) -> Field:
    """Arithmetic table/context for a FieldSpec."""
    return Field(spec)


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Memoized canonical Field for GF(q)."""
    return Field(field_create(q))
