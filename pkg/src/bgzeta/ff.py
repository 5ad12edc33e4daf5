"""Finite field towers F_p <= F_q <= E with exact arithmetic.

A Field describes one level of a two-step tower.  Elements are stored as
raw coefficient data over the level below:

  * prime level:  an int residue in [0, p)
  * middle level: a fixed-width tuple of ints (length = modulus degree)
  * top level:    a fixed-width tuple of middle-level raws

Coefficient tuples are never trimmed, so equality of raws is structural
equality of elements.  FieldElem is a thin operator-overloading wrapper
around (field, raw); all loops in hot code work on raws directly.

The canonical element order is counting order: the rank of an element is
its coefficient vector read as an integer with the lowest-degree (lowest
level) coefficient least significant.  enumerate_field yields elements by
ascending rank, e.g. F_4 -> 0, 1, y, y+1.
"""

from __future__ import annotations

from typing import Iterator, Union

from .errors import FieldMismatchError, NotPrimeError, ReducibleModulusError

Raw = Union[int, tuple]

PRIME, MIDDLE, TOP = "prime", "middle", "top"


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """One level of the tower.  Immutable after construction."""

    __slots__ = ("p", "level", "base", "var", "deg", "order", "mod_coeffs", "_red",
                 "_zero", "_one")

    def __init__(self, p: int, level: str, base: "Field | None",
                 mod_coeffs: "tuple[Raw, ...] | None", var: str | None):
        self.p = p
        self.level = level
        self.base = base
        self.var = var
        if level == PRIME:
            self.deg = 1
            self.order = p
            self.mod_coeffs = None
            self._red = None
            self._zero: Raw = 0
            self._one: Raw = 1
        else:
            assert base is not None and mod_coeffs is not None
            # mod_coeffs: ascending, monic, leading 1 included
            self.deg = len(mod_coeffs) - 1
            self.order = base.order ** self.deg
            self.mod_coeffs = mod_coeffs
            # T^deg = -(m_0 + m_1 T + ... ), precomputed for reduction
            self._red = tuple(base.rneg(c) for c in mod_coeffs[:-1])
            self._zero = tuple(base.zero_raw() for _ in range(self.deg))
            self._one = tuple(base.one_raw() if i == 0 else base.zero_raw()
                              for i in range(self.deg))

    # -- raw arithmetic ------------------------------------------------

    def zero_raw(self) -> Raw:
        return self._zero

    def one_raw(self) -> Raw:
        return self._one

    def radd(self, a: Raw, b: Raw) -> Raw:
        if self.level == PRIME:
            return (a + b) % self.p
        base = self.base
        return tuple(base.radd(x, y) for x, y in zip(a, b))

    def rsub(self, a: Raw, b: Raw) -> Raw:
        if self.level == PRIME:
            return (a - b) % self.p
        base = self.base
        return tuple(base.rsub(x, y) for x, y in zip(a, b))

    def rneg(self, a: Raw) -> Raw:
        if self.level == PRIME:
            return (-a) % self.p
        return tuple(self.base.rneg(x) for x in a)

    def rmul(self, a: Raw, b: Raw) -> Raw:
        if self.level == PRIME:
            return (a * b) % self.p
        base = self.base
        k = self.deg
        if k == 1:
            return (base.rmul(a[0], b[0]),)
        conv = [base.zero_raw()] * (2 * k - 1)
        for i, ai in enumerate(a):
            if base.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                conv[i + j] = base.radd(conv[i + j], base.rmul(ai, bj))
        red = self._red
        for j in range(2 * k - 2, k - 1, -1):
            t = conv[j]
            if base.is_zero(t):
                continue
            off = j - k
            for i in range(k):
                conv[off + i] = base.radd(conv[off + i], base.rmul(red[i], t))
        return tuple(conv[:k])

    def rpow(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return self.rpow(self.rinv(a), -e)
        if self.level == PRIME:
            return pow(a, e, self.p)
        result = self.one_raw()
        while e:
            if e & 1:
                result = self.rmul(result, a)
            a = self.rmul(a, a)
            e >>= 1
        return result

    def rinv(self, a: Raw) -> Raw:
        if self.is_zero(a):
            raise ZeroDivisionError("inversion of zero field element")
        return self.rpow(a, self.order - 2)

    def rfrob(self, a: Raw) -> Raw:
        """x -> x^q where q is the order of the base field.  Top level only."""
        if self.level != TOP:
            raise FieldMismatchError("frobenius over F_q is defined on the top field")
        return self.rpow(a, self.base.order)

    def is_zero(self, a: Raw) -> bool:
        return a == self._zero

    def rfrom_int(self, n: int) -> Raw:
        if self.level == PRIME:
            return n % self.p
        c0 = self.base.rfrom_int(n)
        return tuple(c0 if i == 0 else self.base.zero_raw() for i in range(self.deg))

    # -- ranking / enumeration -----------------------------------------

    def rank(self, a: Raw) -> int:
        if self.level == PRIME:
            return a
        n = self.base.order
        r = 0
        for c in reversed(a):
            r = r * n + self.base.rank(c)
        return r

    def unrank(self, r: int) -> Raw:
        if self.level == PRIME:
            return r % self.p
        n = self.base.order
        out = []
        for _ in range(self.deg):
            r, rem = divmod(r, n)
            out.append(self.base.unrank(rem))
        return tuple(out)

    def raws(self) -> Iterator[Raw]:
        for r in range(self.order):
            yield self.unrank(r)

    # -- tower helpers ---------------------------------------------------

    def lift_raw(self, a: Raw) -> Raw:
        """Embed a base-field raw into this extension."""
        if self.level == PRIME:
            raise FieldMismatchError("prime field has no base to lift from")
        return tuple(a if i == 0 else self.base.zero_raw() for i in range(self.deg))

    def descend_raw(self, a: Raw) -> Raw:
        """Inverse of lift_raw; raises if the element is not in the base field."""
        if self.level == PRIME:
            raise FieldMismatchError("prime field has no base to descend to")
        if any(not self.base.is_zero(c) for c in a[1:]):
            raise ValueError(f"element {elem_str(self, a)} is not in the base field")
        return a[0]

    def in_base(self, a: Raw) -> bool:
        return self.level != PRIME and all(self.base.is_zero(c) for c in a[1:])

    def prime_subfield(self) -> "Field":
        f = self
        while f.level != PRIME:
            f = f.base
        return f

    def in_prime_raw(self, a: Raw) -> "int | None":
        """Residue in [0, p) if `a` lies in the prime subfield, else None."""
        if self.level == PRIME:
            return a
        if not self.in_base(a):
            return None
        return self.base.in_prime_raw(a[0])

    # -- public wrappers -------------------------------------------------

    def __call__(self, value) -> "FieldElem":
        return self.elem(value)

    def elem(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field is not self and value.field != self:
                raise FieldMismatchError(
                    f"element of {value.field} cannot be reinterpreted in {self}")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.rfrom_int(value))
        if isinstance(value, str):
            from .textio import parse_elem
            return parse_elem(self, value)
        if isinstance(value, tuple):
            return FieldElem(self, value)
        raise TypeError(f"cannot build a field element from {value!r}")

    def zero(self) -> "FieldElem":
        return FieldElem(self, self._zero)

    def one(self) -> "FieldElem":
        return FieldElem(self, self._one)

    def elements(self) -> Iterator["FieldElem"]:
        for raw in self.raws():
            yield FieldElem(self, raw)

    # -- identity ----------------------------------------------------------

    def _key(self):
        if self.level == PRIME:
            return (PRIME, self.p)
        return (self.level, self.p, self.base._key(), self.mod_coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return str(self)

    def __str__(self) -> str:
        if self.level == PRIME:
            return f"GF({self.p})"
        from .textio import raw_poly_str
        mod = raw_poly_str(self.base, self.mod_coeffs, self.var)
        return f"GF({self.order})=GF({self.base.order})[{self.var}]/({mod})"


def elem_str(field: Field, raw: Raw) -> str:
    from .textio import elem_str as _es
    return _es(FieldElem(field, raw))


class FieldElem:
    """A field element: owning field plus raw coefficient data."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw: Raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other) -> Raw:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixing elements of {self.field} and {other.field}")
            return other.raw
        if isinstance(other, int):
            return self.field.rfrom_int(other)
        return NotImplemented

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.radd(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.rsub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.rsub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.rmul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.rmul(self.raw, self.field.rinv(raw)))

    def __neg__(self):
        return FieldElem(self.field, self.field.rneg(self.raw))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.rpow(self.raw, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.rinv(self.raw))

    def frobenius(self) -> "FieldElem":
        """x -> x^q over the middle field; identity after s iterations."""
        return FieldElem(self.field, self.field.rfrob(self.raw))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def rank(self) -> int:
        return self.field.rank(self.raw)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.field.rfrom_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.raw))

    def __str__(self) -> str:
        from .textio import elem_str
        return elem_str(self)

    def __repr__(self) -> str:
        return str(self)


def frobenius_q(x: FieldElem) -> FieldElem:
    """x^q for x in the top field E over F_q."""
    return x.frobenius()


def enumerate_field(field: Field) -> "list[FieldElem]":
    """All elements, canonical counting order (e.g. F_4 -> 0, 1, y, y+1)."""
    return list(field.elements())


def make_tower(p: int, q_modulus=None) -> Field:
    """Build F_p, or the middle field F_q = F_p[y]/(q_modulus).

    q_modulus may be a string in the polynomial grammar ("y^2+y+1"), an
    ascending list of int coefficients, or a Poly over F_p.  It must be
    monic and irreducible.  When absent, the prime field is returned.
    """
    if not isinstance(p, int) or not is_prime_int(p):
        raise NotPrimeError(f"characteristic must be a prime number, got {p!r}")
    prime = Field(p, PRIME, None, None, None)
    if q_modulus is None:
        return prime
    coeffs = _canonical_modulus(prime, q_modulus, "y")
    return Field(p, MIDDLE, prime, coeffs, "y")


def extend_field(base: Field, modulus, var: str = "z") -> Field:
    """Build the top field E = base[var]/(modulus); modulus monic irreducible.

    The base may be the middle field or the prime field itself (q = p);
    either way the result is the tower's top level, housing alpha.
    """
    if base.level == TOP:
        raise FieldMismatchError("towers deeper than F_p <= F_q <= E are not supported")
    coeffs = _canonical_modulus(base, modulus, var)
    return Field(base.p, TOP, base, coeffs, var)


def default_modulus(base: Field, degree: int) -> "tuple[Raw, ...]":
    """Lexicographically smallest monic irreducible of the given degree
    (coefficients compared low-degree-first by element rank)."""
    from .polyring import Poly, is_irreducible
    for low in _lex_tuples(base, degree):
        coeffs = low + (base.one_raw(),)
        if is_irreducible(Poly(base, coeffs)):
            return coeffs
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _lex_tuples(base: Field, width: int):
    # ascending low-degree-first lexicographic order on coefficient tuples
    if width == 0:
        yield ()
        return
    ordered = list(base.raws())
    def rec(i):
        if i == width:
            yield ()
            return
        for c in ordered:
            for rest in rec(i + 1):
                yield (c,) + rest
    for low in rec(0):
        yield low


def _canonical_modulus(base: Field, modulus, var: str) -> "tuple[Raw, ...]":
    from .polyring import Poly, is_irreducible
    from .textio import parse_poly
    if isinstance(modulus, int):
        # requested extension degree: pick the canonical default modulus
        if modulus < 1:
            raise ReducibleModulusError("extension degree must be >= 1")
        return default_modulus(base, modulus)
    if isinstance(modulus, str):
        poly = parse_poly(base, modulus, var)
    elif isinstance(modulus, (list, tuple)):
        poly = Poly(base, tuple(base.rfrom_int(c) if isinstance(c, int) else c
                                for c in modulus), var)
    else:
        poly = modulus  # assume Poly
        if poly.field != base:
            raise FieldMismatchError("modulus is not a polynomial over the base field")
    if poly.degree() < 1:
        raise ReducibleModulusError("modulus must have degree >= 1")
    if not poly.is_monic():
        raise ReducibleModulusError(f"modulus {poly} is not monic")
    if poly.degree() > 1 and not is_irreducible(poly):
        from .polyring import factor
        hint = factor(poly, seed=0)
        raise ReducibleModulusError(f"modulus {poly} is reducible: {hint}")
    return poly.coeffs
