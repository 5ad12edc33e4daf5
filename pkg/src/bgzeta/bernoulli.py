"""Bernoulli-Goss machinery over A = F_q[T].

The power sum of exponent n in degree i is the sum of a^n over all monic
a in A of degree i; it vanishes once i exceeds digitsum_q(n)/(q-1), which
caps every generating polynomial computed here at a small u-degree.

Degree bookkeeping uses a digit-reduction map: strip the q-1 smallest
base-q summands of n, with NEG_INF (float('-inf')) once fewer than q-1
digits remain.  NEG_INF absorbs addition and compares below any
integer, so bounds like "sum of the first i reductions" stay total.

The u-polynomials live in A[u]: the generating polynomial C(u) of the
power sums, and the Bernoulli-Goss polynomial B(u), which divides C(u)
by (1-u) via partial sums when (q-1) | n.  Evaluating B at a root alpha
of a monic irreducible f(u) in F_p[u] and taking the norm down to F_q(T)
gives the divisibility witnesses consumed by the zeta criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (CapacityError, ContractViolationError, FieldMismatchError,
                     ValidationError)
from .ff import Field, FieldElem, extend_field
from .polyring import NEG_INF, Poly, enumerate_monic, factor, is_irreducible


@dataclass(frozen=True)
class DigitProfile:
    """Base-q expansion of n with its digit sum and exponent multiset.

    exponents lists e with multiplicity digit_e, ascending, so that
    n == sum(q**e for e in exponents) and len(exponents) == digit_sum.
    """

    n: int
    q: int
    digits: "tuple[int, ...]"
    digit_sum: int
    exponents: "tuple[int, ...]"


def digit_profile(n: int, q: int) -> DigitProfile:
    if n < 1:
        raise ValidationError(f"digit profile requires n >= 1, got {n}")
    if q < 2:
        raise ValidationError(f"base must be at least 2, got {q}")
    digits = []
    m = n
    while m:
        m, r = divmod(m, q)
        digits.append(r)
    exps = tuple(e for e, a in enumerate(digits) for _ in range(a))
    return DigitProfile(n, q, tuple(digits), sum(digits), exps)


def digit_sum(n: int, q: int) -> int:
    s = 0
    while n:
        n, r = divmod(n, q)
        s += r
    return s


def digit_reduce(x, q: int):
    """Drop the q-1 smallest base-q summands of x; NEG_INF when impossible.

    Total on int-or-NEG_INF: NEG_INF maps to itself, and so does any x
    whose digit sum is below q-1 (in particular 0).
    """
    if x == NEG_INF:
        return NEG_INF
    if x < 0:
        raise ValidationError("digit_reduce is defined on non-negative integers")
    if x == 0:
        return NEG_INF
    prof = digit_profile(x, q)
    if prof.digit_sum < q - 1:
        return NEG_INF
    return x - sum(q ** e for e in prof.exponents[:q - 1])


def digit_reduce_iter(n, q: int, times: int):
    """The `times`-fold composition; 0 applications return n unchanged."""
    x = n
    for _ in range(times):
        x = digit_reduce(x, q)
    return x


def binom_mod(n: int, k: int, p: int) -> int:
    """Binomial coefficient mod prime p by digit-wise products (Lucas)."""
    if n < 0 or k < 0:
        raise ValidationError("binom_mod requires non-negative arguments")
    acc = 1
    while k or n:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        acc = acc * math.comb(nd, kd) % p
    return acc


def power_sum_exact(i: int, n: int, field: Field, cap: int = 10 ** 6) -> Poly:
    """Sum of a^n over monic a of degree i, exactly in F_q[T].

    Returns zero immediately when i > digit_sum(n)/(q-1), without
    enumerating anything.
    """
    if i < 0 or n < 1:
        raise ValidationError("power sums need i >= 0 and n >= 1")
    q = field.order
    if i * (q - 1) > digit_sum(n, q):
        return Poly.zero(field)
    if i == 0:
        return Poly.const(field, field.one_raw())
    if n > cap:
        raise CapacityError(
            f"exact power sums of exponent {n} exceed the cap of {cap}; "
            "use the modular path")
    total = Poly.zero(field)
    for a in enumerate_monic(field, i, cap):
        total = total + a ** n
    return total


def power_sum_mod(i: int, n: int, modulus: Poly, cap: int = 10 ** 6) -> Poly:
    """power_sum_exact reduced mod `modulus`; n may be far beyond exact reach."""
    if modulus.is_zero():
        raise ZeroDivisionError("power sum modulo the zero polynomial")
    if i < 0 or n < 1:
        raise ValidationError("power sums need i >= 0 and n >= 1")
    field = modulus.field
    q = field.order
    if i * (q - 1) > digit_sum(n, q):
        return Poly.zero(field, modulus.var)
    if i == 0:
        return Poly.const(field, field.one_raw(), modulus.var) % modulus
    from .polyring import pow_mod
    total = Poly.zero(field, modulus.var)
    for a in enumerate_monic(field, i, cap):
        total = total + pow_mod(a, n, modulus)
    return total % modulus


class UPoly:
    """Polynomial in u with coefficients in F_q[T], ascending and trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = list(coeffs)
        for c in cs:
            if c.field != field:
                raise FieldMismatchError("u-coefficients over mixed fields")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly.zero(self.field)

    def value_at_one(self) -> Poly:
        """Sum of all coefficients: the evaluation at u = 1."""
        total = Poly.zero(self.field)
        for c in self.coeffs:
            total = total + c
        return total

    def eval_coeffwise(self, x: FieldElem) -> Poly:
        """Evaluate at x, lifting coefficients into x's field when needed."""
        target = x.field
        if target == self.field:
            lifted = self.coeffs
        elif target.base == self.field:
            lifted = [c.lift(target) for c in self.coeffs]
        else:
            raise FieldMismatchError("evaluation point is not in F_q or an extension")
        result = Poly.zero(target)
        xi = target.one()
        for c in lifted:
            result = result + c.scale(xi)
            xi = xi * x
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        from .textio import upoly_str
        return upoly_str(self)

    def __repr__(self) -> str:
        return str(self)

    def to_json(self) -> "list[str]":
        return [str(c) for c in self.coeffs]


def power_sum_poly(n: int, field: Field, cap: int = 10 ** 6) -> UPoly:
    """The generating polynomial of the power sums of exponent n in A[u].

    Truncated at u-degree digit_sum(n)/(q-1); when (q-1) | n its value at
    u = 1 must vanish, and this is asserted.
    """
    if n < 1:
        raise ValidationError("defined for n >= 1")
    q = field.order
    cutoff = digit_sum(n, q) // (q - 1)
    up = UPoly(field, [power_sum_exact(i, n, field, cap) for i in range(cutoff + 1)])
    if n % (q - 1) == 0 and not up.value_at_one().is_zero():
        raise ContractViolationError(
            f"power sum polynomial of n={n} does not vanish at u=1")
    return up


def bernoulli_poly(n: int, field: Field, cap: int = 10 ** 6) -> UPoly:
    """The Bernoulli-Goss polynomial in A[u].

    Equal to the power sum polynomial, except divided by (1-u) through
    partial sums when (q-1) | n (the quotient is a polynomial because the
    value at u = 1 vanishes).
    """
    up = power_sum_poly(n, field, cap)
    if n % (field.order - 1) != 0:
        return up
    partial = []
    acc = Poly.zero(field)
    for c in up.coeffs:
        acc = acc + c
        partial.append(acc)
    if partial:
        last = partial.pop()
        if not last.is_zero():
            raise ContractViolationError(
                f"partial sums of n={n} do not telescope to zero")
    return UPoly(field, partial)


def bernoulli_scalar(n: int, field: Field, cap: int = 10 ** 6) -> Poly:
    """The scalar Bernoulli-Goss element of A, from the two-case sum directly.

    Uses sum(s_i) when n is not a multiple of q-1 and sum(-i * s_i)
    otherwise; kept independent of bernoulli_poly as a cross-check, even
    though both agree with the u = 1 evaluation.
    """
    if n < 1:
        raise ValidationError("defined for n >= 1")
    q = field.order
    cutoff = digit_sum(n, q) // (q - 1)
    total = Poly.zero(field)
    coprime_branch = n % (q - 1) != 0
    for i in range(cutoff + 1):
        s = power_sum_exact(i, n, field, cap)
        total = total + (s if coprime_branch else s.scale(-i))
    return total


@dataclass(frozen=True)
class RootContext:
    """A monic irreducible f(u) over F_p with a chosen root alpha.

    top is the field F_q(alpha): the top tower level when s >= 2, F_q
    itself when f acquires a linear factor over F_q.  conjugates lists
    alpha, alpha^q, ..., alpha^(q^(s-1)).
    """

    f: Poly
    fq: Field
    s: int
    top: Field
    alpha: FieldElem
    conjugates: "tuple[FieldElem, ...]"

    def __str__(self) -> str:
        return f"root of {self.f} over {self.fq}, s={self.s}"


def _eval_prime_poly(f: Poly, x: FieldElem) -> FieldElem:
    """Evaluate a polynomial with prime-field coefficients at any tower element."""
    F = x.field
    acc = F.zero_raw()
    for c in reversed(f.coeffs):
        acc = F.radd(F.rmul(acc, x.raw), F.rfrom_int(c))
    return FieldElem(F, acc)


def root_context(f: Poly, fq: Field) -> RootContext:
    """Build the extension housing a root of f and its conjugates over F_q."""
    prime = fq.prime_subfield()
    if f.field != prime:
        raise ValidationError("f must have coefficients in the prime field F_p")
    if f.degree() is NEG_INF or f.degree() < 1:
        raise ValidationError("f must have degree >= 1")
    if not f.is_monic():
        raise ValidationError(f"f = {f} must be monic")
    if not is_irreducible(f):
        raise ValidationError(f"f = {f} is reducible over {prime}")

    f_over_q = f if fq == prime else f.lift(fq)
    parts = factor(f_over_q, seed=0)
    degrees = {g.degree() for g, _ in parts.factors}
    if len(degrees) != 1 or any(m != 1 for _, m in parts.factors):
        raise ContractViolationError(
            f"{f} did not split into distinct equal-degree factors over {fq}")
    g = parts.factors[0][0]
    s = g.degree()

    if s == 1:
        top = fq
        alpha = FieldElem(fq, fq.rneg(g.coeffs[0]))
        conjugates = (alpha,)
    else:
        top = extend_field(fq, g, var="z")
        alpha = FieldElem(top, top.unrank(fq.order))  # the class of z
        conjugates = [alpha]
        for _ in range(s - 1):
            conjugates.append(conjugates[-1].frobenius())
        conjugates = tuple(conjugates)

    if f.degree() % s != 0:
        raise ContractViolationError(f"factor degree {s} incompatible with {f}")
    for c in conjugates:
        if not _eval_prime_poly(f, c).is_zero():
            raise ContractViolationError(f"conjugate {c} is not a root of {f}")
    if len(set(conjugates)) != s:
        raise ContractViolationError("conjugates are not pairwise distinct")
    return RootContext(f, fq, s, top, alpha, conjugates)


def bernoulli_norm(n: int, ctx: RootContext, cap: int = 10 ** 6) -> Poly:
    """Norm of the Bernoulli-Goss polynomial at alpha, descended into F_q[T]."""
    up = bernoulli_poly(n, ctx.fq, cap)
    values = [up.eval_coeffwise(c) for c in ctx.conjugates]
    prod = values[0]
    for v in values[1:]:
        prod = prod * v
    if ctx.s == 1:
        return prod
    try:
        return prod.descend()
    except ValueError as exc:
        raise ContractViolationError(
            f"norm of B at n={n} has a coefficient outside F_q: {exc}") from exc


@dataclass(frozen=True)
class NormResidues:
    """Conjugate values of B_n(alpha_i) in the residue field of a factor of m.

    `values` are residues modulo `front_factor`, the canonically first
    irreducible factor of m over F_q(alpha); divisibility of the norm by
    m holds exactly when some value vanishes.
    """

    n: int
    modulus: Poly
    front_factor: Poly
    values: "tuple[Poly, ...]"
    divisible: bool


def bernoulli_norm_mod(n: int, ctx: RootContext, m: Poly,
                       cap: int = 10 ** 6) -> NormResidues:
    """Modular route to the divisibility m | norm(B_n(alpha)).

    Coefficients of B_n(u) are reduced mod m via power_sum_mod, mapped
    into the residue field of the first irreducible factor of m over
    F_q(alpha), and evaluated at every conjugate.  Supports n far beyond
    the exact path (the digit sum of n is what must stay small).
    """
    fq = ctx.fq
    if m.field != fq:
        raise ValidationError("modulus must be a polynomial over F_q")
    if not m.is_monic() or not is_irreducible(m):
        raise ValidationError(f"modulus {m} must be monic irreducible")
    coeffs = _bernoulli_coeffs_mod(n, m, cap)

    if ctx.s == 1:
        frak = m
        reduce_into = coeffs
    else:
        lifted = m.lift(ctx.top)
        frak = factor(lifted, seed=0).factors[0][0]
        reduce_into = [c.lift(ctx.top) % frak for c in coeffs]

    values = []
    for a in ctx.conjugates:
        acc = Poly.zero(frak.field)
        for c in reversed(reduce_into):
            acc = acc.scale(a) + c
        values.append(acc % frak)
    return NormResidues(n, m, frak, tuple(values),
                        any(v.is_zero() for v in values))


def _bernoulli_coeffs_mod(n: int, m: Poly, cap: int) -> "list[Poly]":
    """Coefficients of B_n(u) reduced mod m, via modular power sums."""
    if n < 1:
        raise ValidationError("defined for n >= 1")
    field = m.field
    q = field.order
    cutoff = digit_sum(n, q) // (q - 1)
    sums = [power_sum_mod(i, n, m, cap) for i in range(cutoff + 1)]
    if n % (q - 1) != 0:
        coeffs = sums
    else:
        coeffs = []
        acc = Poly.zero(field, m.var)
        for svalue in sums:
            acc = acc + svalue
            coeffs.append(acc)
        last = coeffs.pop()
        if not last.is_zero():
            raise ContractViolationError(
                f"modular partial sums of n={n} do not telescope to zero mod {m}")
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs
