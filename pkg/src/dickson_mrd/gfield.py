"""Exact arithmetic in the finite-field tower F_p <= F_q <= F_{q^m}.

Elements of F_{q^m} (q = p^h) are plain ints: the element with polynomial
coefficients (c_0, c_1, ..., c_{d-1}) over F_p, d = h*m, little-endian in a
fixed primitive modulus, is encoded as sum(c_i * p**i).  The class of x (the
polynomial variable) is the fixed generator g of the multiplicative group,
so g == p as an int.

Multiplication runs on discrete-log tables, addition on Zech logarithms,
so every operation is O(1) table lookups once the context is built.  The
subfield F_q sits inside F_{q^m} as the elements whose discrete log is a
multiple of (q^m - 1)/(q - 1).

Contexts are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

# Size bound for exact table-based arithmetic.
MAX_FIELD_ORDER = 2 ** 24

# Built-in primitive polynomials, keyed by (p, degree).  Each entry is the
# full little-endian coefficient list (constant term first, monic).  Every
# entry is the first monic primitive polynomial of its degree in ascending
# order of the encoded low-coefficient integer sum(c_i * p**i); the table is
# frozen so that serialized artifacts are reproducible bit-for-bit.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> List[int]:
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


# ----------------------------------------------------------------------
# Polynomial arithmetic over F_p on little-endian coefficient lists.
# Only used while validating a modulus and building tables.
# ----------------------------------------------------------------------

def _poly_trim(a: Sequence[int]) -> List[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    d = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            res[i + j] = (res[i + j] + ai * bj) % p
    # reduce modulo the monic polynomial `mod`
    for k in range(len(res) - 1, d - 1, -1):
        c = res[k]
        if c == 0:
            continue
        res[k] = 0
        for i in range(d):
            res[k - d + i] = (res[k - d + i] - c * mod[i]) % p
    return _poly_trim(res[:d] if len(res) > d else res)


def _poly_powmod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = _poly_trim(a)
    while e > 0:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        # a mod b, with b made monic on the fly
        lead_inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and _poly_trim(r):
            r = _poly_trim(r)
            if len(r) < len(b):
                break
            c = (r[-1] * lead_inv) % p
            shift = len(r) - len(b)
            for i, bi in enumerate(b):
                r[shift + i] = (r[shift + i] - c * bi) % p
            r = _poly_trim(r)
        a, b = b, r
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin test: x^(p^d) == x mod f and gcd(x^(p^(d/r)) - x, f) = 1."""
    mod = list(modulus)
    d = len(mod) - 1
    x = [0, 1]
    if d < 1:
        return False
    top = _poly_powmod(x, p ** d, mod, p)
    if _poly_trim(_poly_sub(top, x, p)):
        return False
    for r in _prime_factors(d):
        mid = _poly_powmod(x, p ** (d // r), mod, p)
        g = _poly_gcd(_poly_sub(mid, x, p), mod, p)
        if len(_poly_trim(g)) > 1:
            return False
    return True


def is_primitive(modulus: Sequence[int], p: int) -> bool:
    """True when the class of x generates the multiplicative group."""
    if not is_irreducible(modulus, p):
        return False
    d = len(modulus) - 1
    n = p ** d - 1
    x = [0, 1]
    for r in _prime_factors(n):
        if _poly_trim(_poly_powmod(x, n // r, modulus, p)) == [1]:
            return False
    return True


def find_primitive_modulus(p: int, d: int) -> Tuple[int, ...]:
    """First monic primitive polynomial of degree d over F_p.

    Candidates are ordered by the integer sum(c_i * p**i) over the low
    coefficients; this is the rule that generated DEFAULT_MODULI.
    """
    for k in range(p ** d):
        coeffs = []
        kk = k
        for _ in range(d):
            coeffs.append(kk % p)
            kk //= p
        cand = coeffs + [1]
        if is_primitive(cand, p):
            return tuple(cand)
    raise ValueError(f"no primitive polynomial of degree {d} over F_{p}")


class FieldCtx:
    """The tower F_p <= F_q <= F_{q^m} with table-based exact arithmetic.

    Parameters
    ----------
    p, h, m : int
        Prime characteristic, with q = p^h and extension degree m >= 2.
    modulus : sequence of int, optional
        Little-endian coefficients of a monic primitive polynomial of
        degree h*m over F_p.  Defaults to the built-in table entry.
    """

    def __init__(self, p: int, h: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if h < 1:
            raise ValueError("h must be >= 1")
        if m < 2:
            raise ValueError("m must be >= 2")
        d = h * m
        if p ** d > MAX_FIELD_ORDER:
            raise ValueError(f"field order p^(h*m) = {p}^{d} exceeds bound {MAX_FIELD_ORDER}")
        if modulus is None:
            if (p, d) not in DEFAULT_MODULI:
                raise ValueError(
                    f"no built-in modulus for (p={p}, degree={d}); pass one explicitly"
                )
            modulus = DEFAULT_MODULI[(p, d)]
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1:
            raise ValueError(f"modulus must have degree {d} (got {len(modulus) - 1})")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        if not is_primitive(modulus, p):
            raise ValueError("modulus is irreducible but not primitive")

        self.p = p
        self.h = h
        self.m = m
        self.q = p ** h
        self.degree = d
        self.order = p ** d
        self.modulus = modulus
        self.mult_order = self.order - 1
        self.subfield_index = self.mult_order // (self.q - 1)

        self._build_tables()

        self.zero = 0
        self.one = 1
        self.g = self.exp[1]
        # q^i mod (q^m - 1) for Frobenius exponent arithmetic
        self._qpow = [pow(self.q, i, self.mult_order) for i in range(m)]
        self._ppow = [pow(self.p, i, self.mult_order) for i in range(d)]
        self._half = self.mult_order // 2 if p != 2 else 0
        self._build_subfield_tables()
        self._coords_map = None
        self._conj_basis = None

    # -- table construction -------------------------------------------------

    def _build_tables(self) -> None:
        p, d, n = self.p, self.degree, self.mult_order
        mod_low = self.modulus[:d]
        exp = [0] * n
        log = [-1] * self.order
        state = [0] * d
        state[0] = 1
        pp = [p ** i for i in range(d)]
        for k in range(n):
            val = 0
            for i in range(d):
                val += state[i] * pp[i]
            if log[val] != -1:
                raise ValueError("modulus is not primitive (cycle shorter than q^m - 1)")
            exp[k] = val
            log[val] = k
            lead = state[d - 1]
            new = [0] * d
            for i in range(d - 1):
                new[i + 1] = state[i]
            if lead:
                for i in range(d):
                    new[i] = (new[i] - lead * mod_low[i]) % p
            state = new
        if exp[0] != 1 or state != ([1] + [0] * (d - 1)):
            raise ValueError("modulus failed table closure check")
        # Zech logarithms: zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
        zech = [-1] * n
        for k in range(n):
            val = exp[k]
            c0 = val % p
            bumped = val - c0 + (c0 + 1) % p
            zech[k] = log[bumped] if bumped else -1
        self.exp = exp
        self.log = log
        self.zech = zech

    def _build_subfield_tables(self) -> None:
        q, s, n = self.q, self.subfield_index, self.mult_order
        elems = [0] + [self.exp[(k * s) % n] for k in range(q - 1)]
        index = {e: i for i, e in enumerate(elems)}
        self.fq_elems = tuple(elems)
        self._fq_index = index
        self.fq_add = [[index[self.add(a, b)] for b in elems] for a in elems]
        self.fq_sub = [[index[self.sub(a, b)] for b in elems] for a in elems]
        self.fq_mul = [[index[self.mul(a, b)] for b in elems] for a in elems]
        self.fq_neg = [index[self.neg(a)] for a in elems]
        self.fq_inv = [0] + [index[self.inv(a)] for a in elems[1:]]

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        i = self.log[a]
        j = self.log[b]
        z = self.zech[(j - i) % self.mult_order]
        if z < 0:
            return 0
        return self.exp[(i + z) % self.mult_order]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self.exp[(self.log[a] + self._half) % self.mult_order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.mult_order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(-self.log[a]) % self.mult_order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % self.mult_order]

    # -- Galois structure ----------------------------------------------------

    def frobenius(self, x: int, i: int) -> int:
        """x raised to the q^i-th power (i reduced mod m)."""
        if x == 0:
            return 0
        return self.exp[(self.log[x] * self._qpow[i % self.m]) % self.mult_order]

    def p_power(self, x: int, k: int) -> int:
        """x raised to the p^k-th power (k reduced mod h*m)."""
        if x == 0:
            return 0
        return self.exp[(self.log[x] * self._ppow[k % self.degree]) % self.mult_order]

    def trace(self, x: int) -> int:
        """Relative trace onto F_q: sum of the m conjugates x^(q^j)."""
        acc = 0
        for j in range(self.m):
            acc = self.add(acc, self.frobenius(x, j))
        return acc

    def norm(self, x: int) -> int:
        """Relative norm onto F_q: product of the m conjugates."""
        if x == 0:
            return 0
        return self.exp[(self.log[x] * self.subfield_index) % self.mult_order]

    def norm_fiber(self, a: int) -> List[int]:
        """All x with norm(x) = a, ascending by discrete log.  a in F_q*."""
        if a == 0:
            raise ValueError("norm fiber of 0 is just {0}; a must be nonzero")
        if not self.in_fq(a):
            raise ValueError("a is not in the subfield F_q")
        j = self.log[a] // self.subfield_index
        return [self.exp[e] for e in range(j, self.mult_order, self.q - 1)]

    def in_fq(self, x: int) -> bool:
        return x == 0 or self.log[x] % self.subfield_index == 0

    def fq_index(self, x: int) -> int:
        """Canonical index of a subfield element: 0 -> 0, g^(k*s) -> k+1."""
        return self._fq_index[x]

    def fq_elem(self, i: int) -> int:
        return self.fq_elems[i]

    # -- enumeration and coordinates ------------------------------------------

    def elements(self) -> Iterator[int]:
        """All field elements: 0 first, then g^0, g^1, ..."""
        yield 0
        yield from self.exp

    def nonzero(self) -> Iterator[int]:
        yield from self.exp

    def coords(self, x: int) -> Tuple[int, ...]:
        """F_q-coordinates (as canonical subfield indices) of x in the basis
        1, g, g^2, ..., g^(m-1) of F_{q^m} over F_q."""
        if self._coords_map is None:
            self._build_coords()
        return self._coords_map[x]

    def from_fq_coords(self, cs: Sequence[int]) -> int:
        """Inverse of coords: element sum(fq_elem(c_j) * g^j)."""
        acc = 0
        for j, c in enumerate(cs):
            acc = self.add(acc, self.mul(self.fq_elems[c], self.pow(self.g, j)))
        return acc

    def _build_coords(self) -> None:
        mapping = {}
        gpow = [self.pow(self.g, j) for j in range(self.m)]
        for cs in itertools.product(range(self.q), repeat=self.m):
            acc = 0
            for j, c in enumerate(cs):
                acc = self.add(acc, self.mul(self.fq_elems[c], gpow[j]))
            mapping[acc] = cs
        if len(mapping) != self.order:
            raise RuntimeError("g-power basis failed to span the field")
        self._coords_map = mapping

    def conj_basis(self) -> List[List[int]]:
        """conj_basis[j][i] = (g^j)^(q^i), the Frobenius images of the basis."""
        if self._conj_basis is None:
            self._conj_basis = [
                [self.frobenius(self.pow(self.g, j), i) for i in range(self.m)]
                for j in range(self.m)
            ]
        return self._conj_basis

    # -- serialization ---------------------------------------------------------

    def coeffs(self, x: int) -> Tuple[int, ...]:
        """Little-endian F_p coefficient vector of length h*m."""
        out = []
        for _ in range(self.degree):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(cs)}")
        acc = 0
        for c in reversed(cs):
            acc = acc * self.p + int(c) % self.p
        return acc

    def describe(self) -> dict:
        return {"p": self.p, "h": self.h, "m": self.m, "modulus": list(self.modulus)}

    def __repr__(self) -> str:  # pragma: no cover
        return f"FieldCtx(p={self.p}, h={self.h}, m={self.m})"


def make_field(p: int, h: int, m: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Build a verified field context for the tower F_p <= F_q <= F_{q^m}."""
    return FieldCtx(p, h, m, modulus)
