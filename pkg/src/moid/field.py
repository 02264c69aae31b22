"""Arithmetic in GF(2^m) and in the tower extension GF((2^m)^k).

Base-field elements are integers in [0, 2^m) whose bits are polynomial
coefficients over GF(2); addition is XOR and multiplication is carry-less
multiplication reduced modulo a fixed irreducible polynomial.  Extension
elements are length-k coefficient vectors over GF(2^m), also packed into
integer codes whose base-q digits (least significant first) are the
coefficients.  Because q is a power of two, extension addition is again a
plain XOR of codes.

Two multiplication routes are kept on purpose: a shift-XOR reference
(`mul_basic`) and table-backed fast paths, so tests can cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

# Lexicographically smallest irreducible polynomial of each degree over
# GF(2), as an (m+1)-bit mask.  Regenerated and checked in the test suite.
IRREDUCIBLE_GF2 = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
    13: 0b10000000011011,
    14: 0b100000000100001,
    15: 0b1000000000000011,
    16: 0b10000000000101011,
}

MAX_M = 16

# Table-backed extension arithmetic is only built for fields this small;
# larger extensions fall back to digit-wise multiplication.
_EXT_TABLE_LIMIT = 1 << 18


def gf2_poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b, both GF(2)[x] polynomials as bit masks."""
    if b == 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def gf2_is_irreducible(poly: int, degree: int) -> bool:
    """Trial-division irreducibility test over GF(2); fine for degree <= 16."""
    if poly.bit_length() - 1 != degree or degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if gf2_poly_mod(poly, cand) == 0:
                return False
    return True


class FieldParams:
    """GF(2^m): bit width m and irreducible modulus (an (m+1)-bit mask)."""

    _interned: dict[int, "FieldParams"] = {}

    def __init__(self, m: int, irreducible: int | None = None):
        if not 1 <= m <= MAX_M:
            raise ValueError(f"m must be in [1, {MAX_M}], got {m}")
        if irreducible is None:
            irreducible = IRREDUCIBLE_GF2[m]
        if not gf2_is_irreducible(irreducible, m):
            raise ValueError(f"0b{irreducible:b} is not irreducible of degree {m}")
        self.m = m
        self.irreducible = irreducible
        self.q = 1 << m
        self._log: np.ndarray | None = None
        self._exp: np.ndarray | None = None

    @classmethod
    def gf(cls, m: int) -> "FieldParams":
        """Shared instance with the built-in modulus for GF(2^m)."""
        inst = cls._interned.get(m)
        if inst is None:
            inst = cls._interned[m] = cls(m)
        return inst

    def __eq__(self, other):
        return (
            isinstance(other, FieldParams)
            and self.m == other.m
            and self.irreducible == other.irreducible
        )

    def __hash__(self):
        return hash((self.m, self.irreducible))

    def __repr__(self):
        return f"FieldParams(m={self.m}, irreducible=0b{self.irreducible:b})"

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    # int-level arithmetic ------------------------------------------------

    def mul_basic(self, a: int, b: int) -> int:
        """Shift-XOR reference multiplication; kept table-free."""
        p = 0
        top = self.q
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.irreducible
        return p

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            self._exp = np.array([1], dtype=np.int64)
            self._log = np.array([0, 0], dtype=np.int64)
            return
        order = q - 1
        for g in range(2, q):
            val, steps = 1, 0
            while True:
                val = self.mul_basic(val, g)
                steps += 1
                if val == 1:
                    break
            if steps == order:
                break
        else:  # pragma: no cover - a generator always exists
            raise RuntimeError("no generator found")
        exp = np.zeros(order, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        val = 1
        for i in range(order):
            exp[i] = val
            log[val] = i
            val = self.mul_basic(val, g)
        self._exp, self._log = exp, log

    def mul(self, a: int, b: int) -> int:
        """Table-backed multiplication of element codes."""
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._build_tables()
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def mul_vec(self, a, b) -> np.ndarray:
        """Elementwise product of arrays of element codes (broadcasts)."""
        if self._exp is None:
            self._build_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        av = np.where(nz, a, 1)
        bv = np.where(nz, b, 1)
        out = self._exp[(self._log[av] + self._log[bv]) % (self.q - 1)]
        return np.where(nz, out, 0)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(2^m), paired with its field parameters."""

    value: int
    params: FieldParams

    def __post_init__(self):
        if not 0 <= self.value < self.params.q:
            raise ValueError(f"value {self.value} outside [0, {self.params.q})")

    def _check(self, other: "FieldElement") -> None:
        if self.params != other.params:
            raise ValueError("field parameters do not match")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.value ^ other.value, self.params)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.params.mul(self.value, other.value), self.params)

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.params.pow(self.value, e), self.params)


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    """Characteristic-2 sum (XOR of coefficient masks)."""
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Product modulo the field's irreducible polynomial."""
    return a * b


def fe_pow(a: FieldElement, e: int) -> FieldElement:
    """a**e with a**0 == 1."""
    return a**e


class ExtFieldParams:
    """GF(q^k) over base GF(q), q = 2^m, in a polynomial basis.

    Element codes are integers in [0, q^k) whose base-q digits, least
    significant first, are the basis coefficients.  The modulus is a monic
    degree-k polynomial over GF(q) found by lexicographic search unless
    supplied explicitly.
    """

    _interned: dict[tuple[int, int, int], "ExtFieldParams"] = {}

    def __init__(self, base: FieldParams, k: int,
                 ext_irreducible: Sequence[int] | None = None):
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.base = base
        self.k = k
        self.order = base.q**k
        if ext_irreducible is None:
            ext_irreducible = self._find_irreducible(base, k)
        ext_irreducible = tuple(int(c) for c in ext_irreducible)
        if len(ext_irreducible) != k + 1 or ext_irreducible[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not self._is_irreducible(base, ext_irreducible[:-1], k):
            raise ValueError(f"{ext_irreducible} is not irreducible over GF({base.q})")
        self.ext_irreducible = ext_irreducible
        self._log: np.ndarray | None = None
        self._exp: np.ndarray | None = None

    @classmethod
    def build(cls, base: FieldParams, k: int) -> "ExtFieldParams":
        """Shared instance with the searched modulus."""
        key = (base.m, base.irreducible, k)
        inst = cls._interned.get(key)
        if inst is None:
            inst = cls._interned[key] = cls(base, k)
        return inst

    # modulus search -------------------------------------------------------

    @staticmethod
    def _poly_divides(base: FieldParams, divisor: list[int], poly: list[int]) -> bool:
        # both monic, coefficient lists low-to-high
        rem = list(poly)
        dd = len(divisor) - 1
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c:
                for j in range(dd + 1):
                    rem[top - dd + j] ^= base.mul(c, divisor[j])
        return not any(rem[:dd])

    @classmethod
    def _is_irreducible(cls, base: FieldParams, low_coeffs: Sequence[int], k: int) -> bool:
        poly = list(low_coeffs) + [1]
        q = base.q
        for d in range(1, k // 2 + 1):
            for code in range(q**d):
                divisor = [(code >> (j * base.m)) & (q - 1) for j in range(d)] + [1]
                if cls._poly_divides(base, divisor, poly):
                    return False
        return True

    @classmethod
    def _find_irreducible(cls, base: FieldParams, k: int) -> tuple[int, ...]:
        q = base.q
        for code in range(q**k):
            low = tuple((code >> (j * base.m)) & (q - 1) for j in range(k))
            if cls._is_irreducible(base, low, k):
                return low + (1,)
        raise RuntimeError("no irreducible polynomial found")  # pragma: no cover

    def __eq__(self, other):
        return (
            isinstance(other, ExtFieldParams)
            and self.base == other.base
            and self.k == other.k
            and self.ext_irreducible == other.ext_irreducible
        )

    def __hash__(self):
        return hash((self.base, self.k, self.ext_irreducible))

    def __repr__(self):
        return f"ExtFieldParams(q={self.base.q}, k={self.k}, modulus={self.ext_irreducible})"

    # coding ---------------------------------------------------------------

    def digits(self, code: int) -> tuple[int, ...]:
        m, mask = self.base.m, self.base.q - 1
        return tuple((code >> (j * m)) & mask for j in range(self.k))

    def code(self, digits: Sequence[int]) -> int:
        m = self.base.m
        out = 0
        for j, d in enumerate(digits):
            out |= int(d) << (j * m)
        return out

    def element(self, value: int | Sequence[int]) -> "ExtFieldElement":
        if isinstance(value, int):
            value = self.digits(value)
        return ExtFieldElement(tuple(int(c) for c in value), self)

    # int-level arithmetic ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        """Product of element codes (schoolbook + long-division reduction)."""
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])
        k, base = self.k, self.base
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] ^= base.mul(x, y)
        mod = self.ext_irreducible
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for j in range(k):
                    if mod[j]:
                        prod[top - k + j] ^= base.mul(c, mod[j])
        return self.code(prod[:k])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        r, x = 1, a
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def enable_tables(self) -> None:
        """Build log/exp tables over the full extension (small fields only)."""
        if self._exp is not None:
            return
        if self.order > _EXT_TABLE_LIMIT:
            raise ValueError(f"extension of order {self.order} too large for tables")
        order = self.order - 1
        if order == 1:
            self._exp = np.array([1], dtype=np.int64)
            self._log = np.array([0, 0], dtype=np.int64)
            return
        g = 2
        while True:
            val, steps = 1, 0
            while True:
                val = self.mul(val, g)
                steps += 1
                if val == 1:
                    break
            if steps == order:
                break
            g += 1
        exp = np.zeros(order, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        val = 1
        for i in range(order):
            exp[i] = val
            log[val] = i
            val = self.mul(val, g)
        self._exp, self._log = exp, log

    def mul_vec(self, a, b) -> np.ndarray:
        """Elementwise product of arrays of element codes (broadcasts)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._exp is None and self.order <= _EXT_TABLE_LIMIT:
            self.enable_tables()
        if self._exp is not None:
            nz = (a != 0) & (b != 0)
            av = np.where(nz, a, 1)
            bv = np.where(nz, b, 1)
            out = self._exp[(self._log[av] + self._log[bv]) % (self.order - 1)]
            return np.where(nz, out, 0)
        return self._mul_vec_digits(a, b)

    def _mul_vec_digits(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        k, base, m = self.k, self.base, self.base.m
        mask = base.q - 1
        da = [(a >> (j * m)) & mask for j in range(k)]
        db = [(b >> (j * m)) & mask for j in range(k)]
        prod = [np.zeros(np.broadcast(a, b).shape, dtype=np.int64) for _ in range(2 * k - 1)]
        for i in range(k):
            for j in range(k):
                prod[i + j] = prod[i + j] ^ base.mul_vec(da[i], db[j])
        mod = self.ext_irreducible
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            for j in range(k):
                if mod[j]:
                    prod[top - k + j] = prod[top - k + j] ^ base.mul_vec(c, np.int64(mod[j]))
        out = np.zeros_like(prod[0])
        for j in range(k):
            out |= prod[j] << (j * m)
        return out


@dataclass(frozen=True)
class ExtFieldElement:
    """An element of GF(q^k) as its length-k coefficient vector over GF(q)."""

    coeffs: tuple[int, ...]
    params: ExtFieldParams

    def __post_init__(self):
        if len(self.coeffs) != self.params.k:
            raise ValueError(f"need exactly {self.params.k} coefficients")
        if any(not 0 <= c < self.params.base.q for c in self.coeffs):
            raise ValueError("coefficient outside the base field")

    def to_int(self) -> int:
        return self.params.code(self.coeffs)

    def _check(self, other: "ExtFieldElement") -> None:
        if self.params != other.params:
            raise ValueError("extension parameters do not match")

    def __add__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check(other)
        return self.params.element(self.to_int() ^ other.to_int())

    def __mul__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check(other)
        return self.params.element(self.params.mul(self.to_int(), other.to_int()))


def ext_poly_eval(coeffs: Sequence[ExtFieldElement], point: ExtFieldElement) -> ExtFieldElement:
    """Horner evaluation of sum(coeffs[d] * point^d) in GF(q^k)."""
    if not coeffs:
        raise ValueError("coefficient vector is empty")
    ext = point.params
    x = point.to_int()
    acc = coeffs[-1].to_int()
    for c in reversed(coeffs[:-1]):
        acc = ext.mul(acc, x) ^ c.to_int()
    return ext.element(acc)
