"""Finite fields F_q, q = p^e, with table-driven arithmetic.

Elements are plain integers in ``range(q)``.  For an extension field the
integer ``sum(c_i * p**i)`` encodes the residue polynomial ``sum(c_i x^i)``
modulo the field's defining polynomial.  Index 0 is zero and index 1 is one.

Scalar operations (``F.add``, ``F.mul``, ...) work on Python ints; the
``*_arrays`` helpers and ``matmul`` work elementwise on numpy integer arrays
and are what the enumeration code uses.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

MAX_PRIME = 257
MAX_EXTENSION_ORDER = 256


class FieldError(ValueError):
    """Invalid field parameters."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# Polynomials over F_p are coefficient tuples, lowest degree first.

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a divided by the monic polynomial b over F_p."""
    a = _poly_trim(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _poly_trim(a)
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def is_irreducible(modulus, p: int) -> bool:
    """Exhaustive factor search: no monic factor of degree 1..deg/2 divides it."""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, tuple(low) + (1,), p):
                return False
    return True


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e whose integer encoding is smallest."""
    for code in range(p**e):
        low = tuple((code // p**i) % p for i in range(e))
        poly = low + (1,)
        if low[0] != 0 or e == 1:
            if is_irreducible(poly, p):
                return poly
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


class GF:
    """The finite field with ``p**e`` elements.

    Construct through :func:`make_field`, which validates the parameters and
    caches one instance per ``(p, e, modulus)``.
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self.is_prime_field = e == 1
        self._build_tables()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        digits = [[(x // p**i) % p for i in range(e)] for x in range(q)]

        def encode(coeffs):
            return sum(c * p**i for i, c in enumerate(coeffs))

        add = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
        neg = [encode([(-x) % p for x in digits[a]]) for a in range(q)]

        if e == 1:
            def raw_mul(a, b):
                return (a * b) % p
        else:
            def raw_mul(a, b):
                prod_ = _poly_mul(_poly_trim(digits[a]), _poly_trim(digits[b]), p)
                return encode(_poly_mod(prod_, self.modulus, p))

        # log/antilog tables from a primitive element
        exp = log = None
        for g in range(1, q):
            powers = [1]
            x = 1
            for _ in range(q - 2):
                x = raw_mul(x, g)
                powers.append(x)
            if len(set(powers)) == q - 1:
                exp = powers
                log = [0] * q
                for i, v in enumerate(powers):
                    log[v] = i
                self.generator = g
                break
        if exp is None:
            raise FieldError("modulus does not define a field")

        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(1, q):
                mul[a, b] = exp[(log[a] + log[b]) % (q - 1)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(-log[a]) % (q - 1)]

        self.exp_table = exp
        self.log_table = log
        self.add_table = add
        self.mul_table = mul
        self.neg_table = np.array(neg, dtype=np.int64)
        self.inv_table = np.array(inv, dtype=np.int64)
        self.sub_table = add[:, self.neg_table]
        # list copies: scalar indexing into lists is much cheaper than into arrays
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._sub = self.sub_table.tolist()
        self._neg = neg
        self._inv = inv

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero in " + repr(self))
            return 1 if k == 0 else 0
        return self.exp_table[(self.log_table[a] * k) % (self.q - 1)]

    def dot(self, u, v) -> int:
        acc = 0
        add, mul = self._add, self._mul
        for a, b in zip(u, v):
            if a and b:
                acc = add[acc][mul[a][b]]
        return acc

    def elements(self) -> range:
        return range(self.q)

    # -- vectorized arithmetic on integer arrays ---------------------------

    def add_arrays(self, a, b):
        if self.is_prime_field:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_table[a, b]

    def sub_arrays(self, a, b):
        if self.is_prime_field:
            return (a - b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.sub_table[a, b]

    def mul_arrays(self, a, b):
        if self.is_prime_field:
            return (a * b) % self.p
        return self.mul_table[a, b]

    def neg_arrays(self, a):
        if self.is_prime_field:
            return (-a) % self.p
        return self.neg_table[a]

    def matmul(self, A, B):
        """Matrix product over the field; broadcasts like ``@``."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.is_prime_field:
            return (A @ B) % self.p
        shape = np.broadcast_shapes(A.shape[:-2], B.shape[:-2]) + (A.shape[-2], B.shape[-1])
        out = np.zeros(shape, dtype=np.int64)
        for t in range(A.shape[-1]):
            out = self.add_arrays(out, self.mul_table[A[..., :, t, None], B[..., None, t, :]])
        return out

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        out = {"p": self.p, "e": self.e}
        if self.e > 1:
            out["modulus"] = list(self.modulus)
        return out


def make_field(p: int, e: int = 1, modulus=None) -> GF:
    """Validated, cached field constructor.

    ``modulus`` is the coefficient list of a monic polynomial of degree
    ``e``, lowest degree first (``[1, 1, 1]`` is x^2 + x + 1).  When omitted
    for ``e > 1`` the monic irreducible with the smallest integer encoding is
    used.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p!r} is not prime")
    if not isinstance(e, int) or e < 1:
        raise FieldError(f"extension degree must be a positive integer, got {e!r}")
    if e == 1:
        if p > MAX_PRIME:
            raise FieldError(f"prime fields are capped at p <= {MAX_PRIME}")
        if modulus is not None:
            raise FieldError("prime fields take no modulus")
        return _cached_field(p, 1, None)
    if p**e > MAX_EXTENSION_ORDER:
        raise FieldError(f"extension fields are capped at q <= {MAX_EXTENSION_ORDER}")
    if modulus is None:
        modulus = least_irreducible(p, e)
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != e + 1:
        raise FieldError(f"modulus must have degree {e}")
    if modulus[-1] != 1:
        raise FieldError("modulus must be monic")
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
    return _cached_field(p, e, modulus)


@lru_cache(maxsize=None)
def _cached_field(p, e, modulus):
    return GF(p, e, modulus)


def field_from_order(q: int) -> GF:
    """Field of order q with the default modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                break
            return make_field(p, e)
    raise FieldError(f"{q} is not a prime power")


def field_from_json(obj: dict) -> GF:
    return make_field(int(obj["p"]), int(obj.get("e", 1)), obj.get("modulus"))
