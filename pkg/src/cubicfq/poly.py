"""Polynomial helpers over a :class:`~cubicfq.gf.FieldSpec`.

Univariate polynomials are lists of element encodings, constant term first,
with no trailing zeros (``[]`` is the zero polynomial).

Ternary forms are dicts ``{(i, j, k): coeff}`` for the monomial
X^i Y^j Z^k, zero coefficients omitted.
"""

from __future__ import annotations

from .gf import FieldSpec


# -- univariate ---------------------------------------------------------------

def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a) -> int:
    return len(a) - 1


def padd(F: FieldSpec, a, b):
    n = max(len(a), len(b))
    return trim([F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])


def psub(F: FieldSpec, a, b):
    n = max(len(a), len(b))
    return trim([F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])


def pscale(F: FieldSpec, c: int, a):
    return trim([F.mul(c, x) for x in a])


def pmul(F: FieldSpec, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def pdivmod(F: FieldSpec, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = F.inv(b[-1])
    db = len(b) - 1
    quo = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = F.mul(a[i], inv_lead)
        if c:
            quo[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return trim(quo), trim(a[:db])


def pmod(F: FieldSpec, a, b):
    return pdivmod(F, a, b)[1]


def monic(F: FieldSpec, a):
    if not a:
        return []
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F: FieldSpec, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, pmod(F, a, b)
    return monic(F, a)


def ppowmod(F: FieldSpec, a, e: int, m):
    result = [1]
    base = pmod(F, a, m)
    while e:
        if e & 1:
            result = pmod(F, pmul(F, result, base), m)
        base = pmod(F, pmul(F, base, base), m)
        e >>= 1
    return result


def peval(F: FieldSpec, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def distinct_degree_parts(F: FieldSpec, f):
    """Yield (d, g_d) where g_d is the product of the distinct irreducible
    factors of degree d of f.  Repeated factors are stripped along the way."""
    rem = monic(F, f)
    d = 0
    while deg(rem) > 0:
        d += 1
        x_qd = ppowmod(F, [0, 1], F.q ** d, rem)
        gd = pgcd(F, rem, psub(F, x_qd, [0, 1]))
        if deg(gd) > 0:
            yield d, gd
            while True:
                common = pgcd(F, rem, gd)
                if deg(common) <= 0:
                    break
                rem = monic(F, pdivmod(F, rem, common)[0])


def has_root(F: FieldSpec, f) -> bool:
    return any(peval(F, f, x) == 0 for x in F.elements())


# -- ternary forms ------------------------------------------------------------

def monomials(degree: int) -> list[tuple[int, int, int]]:
    """Exponent triples of the given degree, X-heavy first."""
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return out


def form_add(F: FieldSpec, a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = F.add(out.get(m, 0), c)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def form_scale(F: FieldSpec, c: int, a: dict) -> dict:
    if c == 0:
        return {}
    return {m: F.mul(c, v) for m, v in a.items()}


def form_mul(F: FieldSpec, a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
            v = F.add(out.get(m, 0), F.mul(ca, cb))
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def form_partial(F: FieldSpec, a: dict, var: int) -> dict:
    """Formal partial derivative; integer exponents are reduced mod p."""
    out = {}
    for m, c in a.items():
        e = m[var]
        if e == 0:
            continue
        v = F.mul(F.from_int(e), c)
        if v:
            m2 = list(m)
            m2[var] -= 1
            out[tuple(m2)] = v
    return out


def form_eval(F: FieldSpec, a: dict, point) -> int:
    acc = 0
    x, y, z = point
    for (i, j, k), c in a.items():
        t = F.mul(c, F.mul(F.pow(x, i), F.mul(F.pow(y, j), F.pow(z, k))))
        acc = F.add(acc, t)
    return acc


def form_substitute(F: FieldSpec, a: dict, matrix) -> dict:
    """The form v -> a(M v), with M given as three rows."""
    linear = [{(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]} for r in matrix]
    linear = [{m: c for m, c in lf.items() if c} for lf in linear]
    powers = [[{(0, 0, 0): 1}] for _ in range(3)]
    out: dict = {}
    for m, c in a.items():
        term = {(0, 0, 0): c}
        for var in range(3):
            while len(powers[var]) <= m[var]:
                powers[var].append(form_mul(F, powers[var][-1], linear[var]))
            term = form_mul(F, term, powers[var][m[var]])
        out = form_add(F, out, term)
    return out


def form_degree(a: dict) -> int | None:
    for m in a:
        return sum(m)
    return None


def eval_monomials(F: FieldSpec, degree: int, point) -> list[int]:
    x, y, z = point
    return [F.mul(F.pow(x, i), F.mul(F.pow(y, j), F.pow(z, k))) for i, j, k in monomials(degree)]
