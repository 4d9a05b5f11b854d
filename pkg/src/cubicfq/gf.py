"""Exact arithmetic in finite fields F_q, q = p^h.

Elements are handled internally as integers: the element
c_0 + c_1 T + ... + c_{h-1} T^{h-1} of F_p[T]/(m) is encoded as
sum(c_i * p**i).  This encoding is also the element order used for every
"smallest" tie-break in the package.

:class:`FieldSpec` does the arithmetic on encodings (scalar and numpy
vectorised).  :class:`FieldElement` is a thin operator-overloading wrapper
for interactive use.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p, coefficient lists with constant term first ---------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _ptrim(a[:dm] if len(a) > dm else a)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible_mod_p(f, p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** n, f, p), x, p):
        return False
    for r in prime_factors(n):
        g = _pgcd(f, _psub(_ppowmod(x, p ** (n // r), f, p), x, p), p)
        if len(g) > 1:
            return False
    return True


# -- the field ----------------------------------------------------------------

class FieldSpec:
    """The field F_p[T]/(modulus); for h = 1 the modulus is the placeholder T."""

    def __init__(self, p: int, h: int, modulus: tuple[int, ...]):
        self.p = p
        self.h = h
        self.modulus = tuple(modulus)
        self.q = p ** h
        self._tables_ready = False

    # identity -------------------------------------------------------------
    def _key(self):
        return (self.p, self.h, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, h={self.h}, modulus={self.modulus})"

    def header(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"field p={self.p} h={self.h} modulus={mod}"

    @property
    def characteristic(self) -> int:
        return self.p

    # encoding ---------------------------------------------------------------
    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.h:
            raise FieldError(f"expected at most {self.h} coefficients")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.h):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element encoding of F_{self.q}")
        return int(a)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def _polymul(self, a: int, b: int) -> int:
        # slow path, used only while building tables
        return self.encode(_pmulmod(list(self.decode(a)), list(self.decode(b)), list(self.modulus), self.p))

    def _polypow(self, a: int, e: int) -> int:
        return self.encode(_ppowmod(_ptrim(list(self.decode(a))), e, list(self.modulus), self.p))

    # tables -----------------------------------------------------------------
    def _build_tables(self):
        if self._tables_ready:
            return
        p, h, q = self.p, self.h, self.q
        if h == 1:
            self._primitive = _smallest_primitive_prime(p)
            self._tables_ready = True
            return
        factors = prime_factors(q - 1)
        g = None
        for a in range(2, q):
            if all(self._polypow(a, (q - 1) // r) != 1 for r in factors):
                g = a
                break
        self._primitive = g
        # multiplication by g is F_p-linear: tabulate the images of the basis
        basis_images = [self._polymul(g, p ** i) for i in range(h)]
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        if p == 2:
            for k in range(q - 1):
                exp[k] = x
                log[x] = k
                y = 0
                i = 0
                while x:
                    if x & 1:
                        y ^= basis_images[i]
                    x >>= 1
                    i += 1
                x = y
        else:
            image_digits = [self.decode(b) for b in basis_images]
            for k in range(q - 1):
                exp[k] = x
                log[x] = k
                acc = [0] * h
                for i, c in enumerate(self.decode(x)):
                    if c:
                        row = image_digits[i]
                        for j in range(h):
                            acc[j] += c * row[j]
                x = self.encode(acc)
        self._exp = exp
        self._log = log
        if p != 2:
            neg = [0] * q
            for a in range(q):
                neg[a] = self.encode([(-c) % p for c in self.decode(a)])
            self._neg = neg
            # Zech logarithms: log(1 + g^k), or -1 when 1 + g^k = 0
            zech = [0] * (q - 1)
            for k in range(q - 1):
                e = exp[k]
                d0 = e % p
                one_plus = e - d0 + (d0 + 1) % p
                zech[k] = log[one_plus] if one_plus else -1
            self._zech = zech
        self._tables_ready = True

    # scalar arithmetic ------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.h == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        self._build_tables()
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.h == 1:
            return (-a) % self.p
        self._build_tables()
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.h == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        self._build_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.h == 1:
            return pow(a, self.p - 2, self.p)
        self._build_tables()
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.h == 1:
            return pow(a, e, self.p)
        self._build_tables()
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def log(self, a: int) -> int:
        """Discrete log to the base of :attr:`primitive_element`."""
        if a == 0:
            raise ZeroDivisionError("log of zero")
        self._build_tables()
        if self.h == 1:
            return _discrete_log_prime(a, self._primitive, self.p)
        return self._log[a]

    # vectorised arithmetic on numpy integer arrays ---------------------------
    def _np_tables(self):
        if not hasattr(self, "_np_exp"):
            self._build_tables()
            self._np_exp = np.array(self._exp + self._exp, dtype=np.int64)
            self._np_log = np.array(self._log, dtype=np.int64)
            if self.p != 2:
                self._np_neg = np.array(self._neg, dtype=np.int64)
                self._np_zech = np.array(self._zech, dtype=np.int64)

    def vadd(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.h == 1:
            return (a + b) % self.p
        self._np_tables()
        if self.q <= 256:
            if not hasattr(self, "_np_add"):
                self._np_add = np.array(
                    [[self.add(x, y) for y in range(self.q)] for x in range(self.q)], dtype=np.int64
                )
            return self._np_add[a, b]
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = np.where(a == 0, b, a).copy()
        both = (a != 0) & (b != 0)
        la = self._np_log[a[both]]
        z = self._np_zech[(self._np_log[b[both]] - la) % (self.q - 1)]
        res = np.where(z < 0, 0, self._np_exp[(la + np.maximum(z, 0)) % (self.q - 1)])
        out[both] = res
        return out

    def vneg(self, a):
        if self.p == 2:
            return a
        if self.h == 1:
            return (-np.asarray(a)) % self.p
        self._np_tables()
        return self._np_neg[a]

    def vmul(self, a, b):
        if self.h == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        self._np_tables()
        if self.q <= 256:
            if not hasattr(self, "_np_mul"):
                self._np_mul = np.array(
                    [[self.mul(x, y) for y in range(self.q)] for x in range(self.q)], dtype=np.int64
                )
            return self._np_mul[a, b]
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        prod = self._np_exp[self._np_log[a] + self._np_log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vscale(self, c: int, a):
        """c * a for a scalar c and an array a."""
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a
        return self.vmul(a, c)

    # structure ------------------------------------------------------------
    @property
    def primitive_element(self) -> int:
        self._build_tables()
        return self._primitive

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def is_cube(self, a: int) -> bool:
        if a == 0 or (self.q - 1) % 3:
            return True
        return self.pow(a, (self.q - 1) // 3) == 1

    def cube_roots_of_unity(self) -> tuple[int, ...]:
        if (self.q - 1) % 3:
            return (1,)
        omega = min(a for a in range(2, self.q) if self.pow(a, 3) == 1)
        return (1, omega, self.mul(omega, omega))

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^p + ... + a^(p^(h-1)), an element of F_p."""
        acc, x = 0, a
        for _ in range(self.h):
            acc = self.add(acc, x)
            x = self.frobenius(x)
        return acc

    def sqrt(self, a: int) -> int | None:
        """Smallest square root of a, or None."""
        for x in range(self.q):
            if self.mul(x, x) == a:
                return x
        return None

    def roots(self, poly) -> list[int]:
        """All roots in this field of a polynomial given low-degree first."""
        poly = list(poly)
        while poly and poly[-1] == 0:
            poly.pop()
        if not poly:
            raise FieldError("the zero polynomial has every element as a root")
        xs = np.arange(self.q, dtype=np.int64)
        acc = np.full(self.q, poly[-1], dtype=np.int64)
        for c in reversed(poly[:-1]):
            acc = self.vadd(self.vmul(acc, xs), c)
        return [int(x) for x in np.nonzero(acc == 0)[0]]


def _smallest_primitive_prime(p: int) -> int:
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for a in range(2, p):
        if all(pow(a, (p - 1) // r, p) != 1 for r in factors):
            return a
    raise AssertionError("no primitive root")


def _discrete_log_prime(a: int, g: int, p: int) -> int:
    x = 1
    for k in range(p - 1):
        if x == a:
            return k
        x = x * g % p
    raise AssertionError("element not in the group")


@functools.lru_cache(maxsize=None)
def build_field(p: int, h: int = 1) -> FieldSpec:
    """F_{p^h} with the lexicographically smallest monic irreducible modulus.

    Coefficient sequences are compared constant term first.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if not isinstance(h, int) or h < 1:
        raise FieldError(f"extension degree h={h} must be a positive integer")
    if h == 1:
        return FieldSpec(p, 1, (0, 1))
    for low in itertools.product(range(p), repeat=h):
        f = list(low) + [1]
        if low[0] != 0 and is_irreducible_mod_p(f, p):
            return FieldSpec(p, h, tuple(f))
    raise AssertionError("no irreducible polynomial found")


def field_of_order(q: int) -> FieldSpec:
    for p in range(2, q + 1):
        if q % p == 0:
            break
    h, r = 0, q
    while r % p == 0:
        r //= p
        h += 1
    if r != 1 or not is_prime(p):
        raise FieldError(f"q={q} is not a prime power")
    return build_field(p, h)


def parse_header(line: str) -> FieldSpec:
    parts = dict(item.split("=", 1) for item in line.split()[1:])
    if not line.startswith("field "):
        raise FieldError(f"malformed field header: {line!r}")
    p, h = int(parts["p"]), int(parts["h"])
    spec = build_field(p, h)
    mod = tuple(int(c) for c in parts["modulus"].split(","))
    if mod != spec.modulus:
        raise FieldError(f"modulus {mod} differs from the canonical {spec.modulus}")
    return spec


@functools.lru_cache(maxsize=None)
def extension(spec: FieldSpec, k: int) -> tuple[FieldSpec, tuple[int, ...]]:
    """F_{q^k} built fresh over F_p, with an embedding table F_q -> F_{q^k}.

    The generator T of F_q is sent to the smallest root of its modulus.
    """
    big = build_field(spec.p, spec.h * k)
    if spec.h == 1 or k == 1:
        return big, tuple(range(spec.q))
    theta = big.roots(spec.modulus)[0]
    table = []
    for a in range(spec.q):
        acc, power = 0, 1
        for c in spec.decode(a):
            acc = big.add(acc, big.mul(c, power))
            power = big.mul(power, theta)
        table.append(acc)
    return big, tuple(table)


def unit_group_data(spec: FieldSpec) -> dict:
    return {
        "primitive_element": spec.primitive_element,
        "is_square": [spec.is_square(a) for a in spec.elements()],
        "is_cube": [spec.is_cube(a) for a in spec.elements()],
        "cube_roots_of_unity": spec.cube_roots_of_unity(),
    }


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, coeffs) -> "FieldElement":
        return cls(spec, spec.encode(coeffs))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.decode(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def trace(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.trace(self.value))


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.spec != b.spec:
        raise FieldError("elements of different fields")
    ops = {"add": a.spec.add, "sub": a.spec.sub, "mul": a.spec.mul, "div": a.spec.div}
    if op not in ops:
        raise FieldError(f"unknown operation {op!r}")
    return FieldElement(a.spec, ops[op](a.value, b.value))
