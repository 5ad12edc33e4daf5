"""Dense univariate polynomials over a Field: the ring A = F_q[T].

Coefficients are stored ascending by degree as raw field data, trimmed so
the last entry is nonzero; the zero polynomial is the empty tuple and its
degree is the distinguished marker NEG_INF (float('-inf'), which absorbs
addition and compares below every integer).

Polynomials carry the variable they are written in ("T" by default, "u"
for the zeta-side polynomials, "y"/"z" for tower moduli); mixing
variables or fields in arithmetic raises FieldMismatchError.

Factorization runs square-free decomposition (with p-th root descent for
inseparable input), distinct-degree splitting, then seeded random
equal-degree splitting; the seed only affects the internal search order
because factors are sorted into canonical order (ascending degree, then
coefficient ranks compared low degree first) before they are returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .errors import CapacityError, FieldMismatchError, ValidationError
from .ff import Field, FieldElem

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial over a Field."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: Field, coeffs=(), var: str = "T"):
        norm = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.field != field:
                    raise FieldMismatchError("coefficient from a different field")
                norm.append(c.raw)
            elif isinstance(c, int):
                norm.append(field.rfrom_int(c))
            else:
                norm.append(c)
        while norm and field.is_zero(norm[-1]):
            norm.pop()
        self.field = field
        self.coeffs = tuple(norm)
        self.var = var

    # -- constructors ----------------------------------------------------

    @classmethod
    def gen(cls, field: Field, var: str = "T") -> "Poly":
        return cls(field, (field.zero_raw(), field.one_raw()), var)

    @classmethod
    def const(cls, field: Field, value, var: str = "T") -> "Poly":
        return cls(field, (value,), var)

    @classmethod
    def zero(cls, field: Field, var: str = "T") -> "Poly":
        return cls(field, (), var)

    # -- basic queries -----------------------------------------------------

    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one_raw()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one_raw()

    def leading(self) -> FieldElem:
        if not self.coeffs:
            raise ValidationError("zero polynomial has no leading coefficient")
        return FieldElem(self.field, self.coeffs[-1])

    def coeff(self, i: int) -> FieldElem:
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero_raw()
        return FieldElem(self.field, raw)

    def key(self):
        """Canonical sort key: (degree, coefficient ranks low degree first)."""
        return (len(self.coeffs), tuple(self.field.rank(c) for c in self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatchError(
                f"polynomials over different fields: {self.field} vs {other.field}")
        if self.var != other.var:
            raise FieldMismatchError(
                f"polynomials in different variables: {self.var} vs {other.var}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.radd(out[i], c)
        return Poly(F, out, self.var)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        z = F.zero_raw()
        out = [F.rsub(self.coeffs[i] if i < len(self.coeffs) else z,
                      other.coeffs[i] if i < len(other.coeffs) else z)
               for i in range(n)]
        return Poly(F, out, self.var)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.rneg(c) for c in self.coeffs], self.var)

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int)):
            return self.scale(other)
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, (), self.var)
        out = [F.zero_raw()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if F.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = F.radd(out[i + j], F.rmul(ai, bj))
        return Poly(F, out, self.var)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        F = self.field
        if isinstance(c, FieldElem):
            raw = c.raw
        elif isinstance(c, int):
            raw = F.rfrom_int(c)
        else:
            raw = c
        return Poly(F, [F.rmul(raw, x) for x in self.coeffs], self.var)

    def shift(self, k: int) -> "Poly":
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, (self.field.zero_raw(),) * k + self.coeffs, self.var)

    def divrem(self, other: "Poly") -> "tuple[Poly, Poly]":
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        b = other.coeffs
        inv_lead = F.rinv(b[-1])
        r = list(self.coeffs)
        db = len(b) - 1
        q = [F.zero_raw()] * max(len(r) - db, 0)
        for i in range(len(r) - db - 1, -1, -1):
            t = F.rmul(r[i + db], inv_lead)
            if F.is_zero(t):
                continue
            q[i] = t
            for j in range(db + 1):
                r[i + j] = F.rsub(r[i + j], F.rmul(t, b[j]))
        return Poly(F, q, self.var), Poly(F, r[:db], self.var)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValidationError("negative polynomial powers are not defined")
        result = Poly.const(self.field, self.field.one_raw(), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.leading().inverse())

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.rmul(F.rfrom_int(i), self.coeffs[i]))
        return Poly(F, out, self.var)

    def eval(self, x) -> FieldElem:
        """Horner evaluation at an element of the coefficient field."""
        F = self.field
        raw = x.raw if isinstance(x, FieldElem) else (
            F.rfrom_int(x) if isinstance(x, int) else x)
        if isinstance(x, FieldElem) and x.field != F:
            raise FieldMismatchError("evaluation point lies in a different field")
        acc = F.zero_raw()
        for c in reversed(self.coeffs):
            acc = F.radd(F.rmul(acc, raw), c)
        return FieldElem(F, acc)

    def lift(self, ext: Field) -> "Poly":
        """Reinterpret coefficients inside an extension of the coefficient field."""
        if ext.base != self.field:
            raise FieldMismatchError("target is not an extension of the coefficient field")
        return Poly(ext, [ext.lift_raw(c) for c in self.coeffs], self.var)

    def descend(self) -> "Poly":
        """Push coefficients down one tower level; fails loudly if any is outside."""
        F = self.field
        return Poly(F.base, [F.descend_raw(c) for c in self.coeffs], self.var)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return (self.field == other.field and self.var == other.var
                    and self.coeffs == other.coeffs)
        if isinstance(other, int):
            return self == Poly.const(self.field, other, self.var)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.var, self.coeffs))

    def __str__(self) -> str:
        from .textio import poly_str
        return poly_str(self)

    def __repr__(self) -> str:
        return str(self)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(a: Poly, e: int, m: Poly) -> Poly:
    """a^e mod m by square and multiply; e may be any non-negative int."""
    if e < 0:
        raise ValidationError("pow_mod exponent must be non-negative")
    if m.is_zero():
        raise ZeroDivisionError("pow_mod by the zero modulus")
    result = Poly.const(a.field, a.field.one_raw(), a.var) % m
    base = a % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def _prime_divisors(n: int) -> "list[int]":
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


def is_irreducible(a: Poly) -> bool:
    """Rabin test: a | T^(Q^d) - T and gcd conditions at maximal subdegrees."""
    d = a.degree()
    if d is NEG_INF or d < 1:
        raise ValidationError("irreducibility is only defined for degree >= 1")
    if d == 1:
        return True
    a = a.monic()
    Q = a.field.order
    x = Poly.gen(a.field, a.var)
    for r in _prime_divisors(d):
        h = pow_mod(x, Q ** (d // r), a)
        if gcd(h - x, a).degree() != 0:
            return False
    return pow_mod(x, Q ** d, a) == x % a


@dataclass(frozen=True)
class Factorization:
    """unit * product(factor^multiplicity), factors canonical and irreducible."""

    unit: FieldElem
    factors: "tuple[tuple[Poly, int], ...]"
    var: str = "T"

    def expand(self) -> Poly:
        out = Poly.const(self.unit.field, self.unit.raw, self.var)
        for poly, mult in self.factors:
            out = out * poly ** mult
        return out

    def __str__(self) -> str:
        if not self.factors:
            return str(self.unit)
        s = "".join(f"({p})" + (f"^{m}" if m > 1 else "")
                    for p, m in self.factors)
        return s if self.unit == 1 else str(self.unit) + s

    def to_json(self) -> dict:
        return {"unit": str(self.unit),
                "factors": [[str(p), m] for p, m in self.factors]}


def _pth_root(f: Poly) -> Poly:
    """Inverse of g -> g^p for f with zero derivative (f = sum c_i T^(p*i))."""
    F = f.field
    p = F.p
    root_exp = F.order // p  # c -> c^(q/p) is the inverse of c -> c^p
    out = [F.rpow(f.coeffs[i], root_exp) for i in range(0, len(f.coeffs), p)]
    return Poly(F, out, f.var)


def _squarefree_parts(f: Poly) -> "list[tuple[Poly, int]]":
    """[(g, m)] with product g^m = f, each g squarefree; f monic, deg >= 1."""
    out = []
    n = 1
    one = Poly.const(f.field, f.field.one_raw(), f.var)
    while True:
        d = f.derivative()
        if not d.is_zero():
            g = gcd(f, d)
            h = f // g
            i = 1
            while h != one:
                G = gcd(g, h)
                H = h // G
                if H.degree() >= 1:
                    out.append((H, i * n))
                g, h, i = g // G, G, i + 1
            if g == one:
                return out
            f = g
        # remaining multiplicities all divisible by p: take the p-th root
        f = _pth_root(f)
        n *= f.field.p


def _distinct_degree(f: Poly) -> "list[tuple[Poly, int]]":
    """[(product of the irreducible factors of degree d, d)]; f monic squarefree."""
    out = []
    Q = f.field.order
    x = Poly.gen(f.field, f.var)
    h = x
    i = 1
    while 2 * i <= f.degree():
        h = pow_mod(h, Q, f)
        d = gcd(h - x, f)
        if d.degree() >= 1:
            out.append((d, i))
            f = f // d
            h = h % f
        i += 1
    if f.degree() >= 1:
        out.append((f, f.degree()))
    return out


def _equal_degree(f: Poly, d: int, rng: random.Random) -> "list[Poly]":
    """Split a product of degree-d irreducibles into its factors (Cantor-Zassenhaus)."""
    if f.degree() == d:
        return [f]
    F = f.field
    Q = F.order
    n = f.degree()
    one = Poly.const(F, F.one_raw(), f.var)
    while True:
        r = Poly(F, [F.unrank(rng.randrange(Q)) for _ in range(n)], f.var)
        if r.degree() is NEG_INF or r.degree() < 1:
            continue
        if Q % 2 == 1:
            t = pow_mod(r, (Q ** d - 1) // 2, f) - one
        else:
            # char 2: additive trace map of r over GF(2)
            k = Q.bit_length() - 1
            t = r % f
            cur = t
            for _ in range(k * d - 1):
                cur = (cur * cur) % f
                t = t + cur
        g = gcd(t, f)
        if 0 < g.degree() < n:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor(a: Poly, seed: int = 0) -> Factorization:
    """Full canonical factorization into monic irreducibles."""
    if a.is_zero():
        raise ValidationError("cannot factor the zero polynomial")
    unit = a.leading()
    rng = random.Random(seed)
    pieces: "list[tuple[Poly, int]]" = []
    monic = a.monic()
    if monic.degree() >= 1:
        for g, mult in _squarefree_parts(monic):
            for prod, d in _distinct_degree(g):
                for irr in _equal_degree(prod, d, rng):
                    pieces.append((irr, mult))
    pieces.sort(key=lambda pm: pm[0].key())
    return Factorization(unit, tuple(pieces), a.var)


def enumerate_monic(field: Field, degree: int, cap: int = 10 ** 6) -> Iterator[Poly]:
    """All q^degree monic polynomials of the given degree, counting order."""
    if degree < 0:
        raise ValidationError("degree must be non-negative")
    total = field.order ** degree
    if total > cap:
        raise CapacityError(
            f"enumerating {total} monic polynomials exceeds the cap of {cap}")
    one = field.one_raw()
    n = field.order
    for r in range(total):
        low = []
        rr = r
        for _ in range(degree):
            rr, rem = divmod(rr, n)
            low.append(field.unrank(rem))
        yield Poly(field, tuple(low) + (one,))


def enumerate_monic_irreducible(field: Field, degree: int,
                                cap: int = 10 ** 6) -> Iterator[Poly]:
    """Monic irreducibles of the given degree, counting order."""
    if degree < 1:
        raise ValidationError("irreducible polynomials have degree >= 1")
    for p in enumerate_monic(field, degree, cap):
        if is_irreducible(p):
            yield p
