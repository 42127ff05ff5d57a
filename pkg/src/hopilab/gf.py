"""Exact arithmetic in GF(q^2) for the supported curve parameters q.

Elements are encoded as integers in [0, q^2): the little-endian base-p
digits of the index are the coefficients of the element in the polynomial
basis {1, a, a^2, ...}, where ``a`` is a root of the fixed irreducible
modulus below.  Index 0 is the additive identity and index 1 the
multiplicative identity, and the encoding is the canonical on-disk form
for every serialized field element.

One irreducible polynomial is pinned per field so that encodings are
bit-exact across runs and reimplementations (Conway polynomials, from
the standard tables):

    GF(4)  = GF(2^2): x^2 + x + 1
    GF(9)  = GF(3^2): x^2 + 2x + 2
    GF(16) = GF(2^4): x^4 + x + 1
    GF(25) = GF(5^2): x^2 + 4x + 2
    GF(49) = GF(7^2): x^2 + 6x + 3
    GF(64) = GF(2^6): x^6 + x^4 + x^3 + x + 1
    GF(81) = GF(3^4): x^4 + 2x^3 + 2

All operations are table lookups after construction, so a FieldSpec is
immutable and safe to share across threads.  Supported q caps at 9
(fields up to GF(81)); the analytic performance model does not need a
field and accepts arbitrary q elsewhere in the package.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero, UnsupportedQ

# q -> (p, m, modulus coefficients little-endian, monic)
_MODULI: dict[int, tuple[int, int, tuple[int, ...]]] = {
    2: (2, 2, (1, 1, 1)),
    3: (3, 2, (2, 2, 1)),
    4: (2, 4, (1, 1, 0, 0, 1)),
    5: (5, 2, (2, 4, 1)),
    7: (7, 2, (3, 6, 1)),
    8: (2, 6, (1, 1, 0, 1, 1, 0, 1)),
    9: (3, 4, (2, 0, 0, 2, 1)),
}

SUPPORTED_Q: tuple[int, ...] = tuple(sorted(_MODULI))

# FieldElement values are plain ints (the canonical index encoding).
FieldElement = int


def _index_to_digits(index: int, p: int, m: int) -> list[int]:
    digits = []
    for _ in range(m):
        digits.append(index % p)
        index //= p
    return digits


def _digits_to_index(digits: list[int], p: int) -> int:
    index = 0
    for d in reversed(digits):
        index = index * p + d
    return index


def _poly_mul_mod(x: list[int], y: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Schoolbook product of two coefficient vectors, reduced mod the monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            prod[i + j] = (prod[i + j] + xi * yj) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c == 0:
            continue
        prod[d] = 0
        for j in range(m):
            prod[d - m + j] = (prod[d - m + j] - c * modulus[j]) % p
    return prod[:m]


class FieldSpec:
    """Arithmetic tables for GF(q^2), q a supported prime power.

    Attributes
    ----------
    p : prime characteristic
    m : extension degree over GF(p), so q^2 = p^m
    q : curve parameter
    order : field size q^2
    modulus : little-endian coefficients of the pinned irreducible polynomial

    The numpy lookup tables (``add_table``, ``mul_table``, ``neg_table``,
    ``inv_table``, ``frob_table``) are exposed for vectorized callers;
    entry [a, b] (or [a]) is the index of the result.  inv_table[0] is 0
    as a placeholder, the scalar ``inv`` raises instead.
    """

    def __init__(self, q: int) -> None:
        if q not in _MODULI:
            raise UnsupportedQ(
                f"q={q} not supported; q must be a prime power in {list(SUPPORTED_Q)}"
            )
        p, m, modulus = _MODULI[q]
        self.q = q
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = q * q

        digits = [_index_to_digits(i, p, m) for i in range(self.order)]
        add = np.zeros((self.order, self.order), dtype=np.int16)
        mul = np.zeros((self.order, self.order), dtype=np.int16)
        for a in range(self.order):
            for b in range(a, self.order):
                s = _digits_to_index([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                add[a, b] = s
                add[b, a] = s
                pr = _digits_to_index(_poly_mul_mod(digits[a], digits[b], modulus, p), p)
                mul[a, b] = pr
                mul[b, a] = pr
        self.add_table = add
        self.mul_table = mul

        neg = np.array(
            [_digits_to_index([(-d) % p for d in digits[a]], p) for a in range(self.order)],
            dtype=np.int16,
        )
        self.neg_table = neg

        inv = np.zeros(self.order, dtype=np.int16)
        for a in range(1, self.order):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.inv_table = inv

        # a -> a^q as repeated p-power maps, q = p^m_q
        m_q = 0
        v = q
        while v > 1:
            v //= p
            m_q += 1
        frob = np.arange(self.order, dtype=np.int16)
        for _ in range(m_q):
            frob = np.array([self._pow_raw(int(a), p) for a in frob], dtype=np.int16)
        self.frob_table = frob

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return result

    # scalar operations -------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return int(self.add_table[a, b])

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return int(self.mul_table[a, b])

    def neg(self, a: FieldElement) -> FieldElement:
        return int(self.neg_table[a])

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise DivisionByZero("inverse of 0 requested")
        return int(self.inv_table[a])

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """a^e for nonnegative integer e (a^0 = 1, including a = 0)."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return self._pow_raw(a, e)

    def frobenius_q(self, a: FieldElement) -> FieldElement:
        """The field automorphism a -> a^q fixing the subfield GF(q)."""
        return int(self.frob_table[a])

    def elements(self) -> range:
        """All q^2 element indices in ascending canonical order."""
        return range(self.order)

    def __repr__(self) -> str:  # pragma: no cover
        return f"FieldSpec(q={self.q}, order={self.order}, p={self.p}, m={self.m})"


_FIELD_CACHE: dict[int, FieldSpec] = {}


def field_new(q: int) -> FieldSpec:
    """Return the (cached, immutable) FieldSpec for GF(q^2).

    Raises UnsupportedQ when q is not one of the supported prime powers.
    """
    spec = _FIELD_CACHE.get(q)
    if spec is None:
        spec = FieldSpec(q)
        _FIELD_CACHE[q] = spec
    return spec
