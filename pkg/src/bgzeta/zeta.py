"""Reduced zeta factors of cyclotomic function fields and the divisibility
criterion.

For a monic irreducible modulus m of degree d over F_q, the minus (resp.
plus) factor of the zeta numerator, reduced mod the characteristic p, is
the product of the Bernoulli-Goss polynomials B_n(u) over n = 1..q^d-2
with n not divisible (resp. divisible) by q-1, with every coefficient
reduced mod m.  The product provably lands in F_p[u]; this module checks
that membership at runtime and re-types the result.

criterion_check derives the divisibility verdict for a monic irreducible
f(u) in F_p[u] twice, by independent routes: polynomial division of the
reduced product by f, and a scan for the smallest exponent n whose norm
value is divisible by m.  Disagreement raises ContractViolationError.

The two inner loops (running powers a^n mod m for every monic a, and the
accumulating product over n) dominate at degree 5-6 moduli, so residues
are kept as fixed-width coefficient vectors with precomputed reduction
rows, batched through numpy when the coefficient field is prime.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .bernoulli import (RootContext, bernoulli_norm, digit_sum, root_context)
from .errors import (CapacityError, ContractViolationError, ValidationError)
from .ff import Field, PRIME
from .polyring import Factorization, Poly, enumerate_monic, enumerate_monic_irreducible, factor, is_irreducible

MINUS, PLUS = "minus", "plus"
DEFAULT_CAP = 10 ** 6


def _check_part(part: str) -> str:
    if part not in (MINUS, PLUS):
        raise ValidationError(f"part must be 'minus' or 'plus', got {part!r}")
    return part


def in_part(n: int, q: int, part: str) -> bool:
    """Parity-class filter: minus keeps n not divisible by q-1 (empty for
    q = 2), plus keeps the multiples of q-1."""
    divisible = n % (q - 1) == 0
    return divisible if part == PLUS else not divisible


def _validate_modulus(m: Poly) -> None:
    if not m.is_monic() or not is_irreducible(m):
        raise ValidationError(f"modulus {m} must be monic irreducible over {m.field}")


class _ResidueRing:
    """A/mA as fixed-width coefficient vectors with precomputed reduction."""

    def __init__(self, m: Poly):
        self.field = m.field
        self.m = m
        d = m.degree()
        self.d = d
        F = self.field
        rows = []
        if d >= 2:
            base = tuple(F.rneg(c) for c in m.coeffs[:d])  # T^d mod m
            rows.append(base)
            for _ in range(d - 2):
                prev = rows[-1]
                shifted = [F.zero_raw()] + list(prev[:d - 1])
                top = prev[d - 1]
                if not F.is_zero(top):
                    for i in range(d):
                        shifted[i] = F.radd(shifted[i], F.rmul(top, base[i]))
                rows.append(tuple(shifted))
        self.red = rows
        self.zero = (F.zero_raw(),) * d
        one = [F.zero_raw()] * d
        if d:
            one[0] = F.one_raw()
        self.one = tuple(one)

    def from_poly(self, p: Poly) -> tuple:
        r = p % self.m
        pad = list(r.coeffs) + [self.field.zero_raw()] * (self.d - len(r.coeffs))
        return tuple(pad)

    def to_poly(self, v: tuple) -> Poly:
        return Poly(self.field, v, self.m.var)

    def add(self, a: tuple, b: tuple) -> tuple:
        F = self.field
        return tuple(F.radd(x, y) for x, y in zip(a, b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        F, d = self.field, self.d
        if d == 1:
            return (F.rmul(a[0], b[0]),)
        conv = [F.zero_raw()] * (2 * d - 1)
        for i, ai in enumerate(a):
            if F.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                conv[i + j] = F.radd(conv[i + j], F.rmul(ai, bj))
        for j in range(2 * d - 2, d - 1, -1):
            t = conv[j]
            if F.is_zero(t):
                continue
            row = self.red[j - d]
            for i in range(d):
                conv[i] = F.radd(conv[i], F.rmul(t, row[i]))
        return tuple(conv[:d])

    def scale(self, a: tuple, c) -> tuple:
        F = self.field
        raw = c.raw if hasattr(c, "raw") else c
        return tuple(F.rmul(raw, x) for x in a)

    def is_zero(self, a: tuple) -> bool:
        F = self.field
        return all(F.is_zero(x) for x in a)

    def prime_residue(self, a: tuple) -> "int | None":
        """The residue in [0, p) if `a` is a constant in F_p, else None."""
        F = self.field
        if any(not F.is_zero(x) for x in a[1:]):
            return None
        return F.in_prime_raw(a[0]) if self.d else 0


class _PowerScan:
    """Running table of a^n mod m for every monic a of degree <= i_max.

    step() advances n by one across the whole table; degree_sums() then
    returns the modular power sums s_i(n) for i = 0..cutoff as residue
    vectors.  Batched through numpy int64 arrays when the coefficient
    field is prime, with exact mod-p arithmetic.
    """

    def __init__(self, ring: _ResidueRing, i_max: int, cap: int = DEFAULT_CAP):
        self.ring = ring
        q = ring.field.order
        total = (q ** (i_max + 1) - 1) // (q - 1)
        if total > cap:
            raise CapacityError(
                f"power table of {total} monic polynomials exceeds the cap {cap}")
        mults = []
        self.slices = []
        start = 0
        for i in range(i_max + 1):
            for a in enumerate_monic(ring.field, i, cap):
                mults.append(ring.from_poly(a))
            self.slices.append((start, start + q ** i))
            start += q ** i
        self.use_np = ring.field.level == PRIME and ring.d >= 1
        if self.use_np:
            p, d = ring.field.p, ring.d
            self.p, self.d = p, d
            self.np_mults = np.array(mults, dtype=np.int64)
            self.np_pows = np.zeros_like(self.np_mults)
            self.np_pows[:, 0] = 1
            self.np_red = (np.array(ring.red, dtype=np.int64)
                           if ring.red else np.zeros((0, d), dtype=np.int64))
        else:
            self.mults = mults
            self.pows = [ring.one] * len(mults)

    def step(self) -> None:
        if self.use_np:
            self.np_pows = self._np_mul(self.np_pows, self.np_mults)
        else:
            ring = self.ring
            self.pows = [ring.mul(x, a) for x, a in zip(self.pows, self.mults)]

    def _np_mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        d, p = self.d, self.p
        if d == 1:
            return (A * B) % p
        conv = np.zeros(A.shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for j in range(d):
            conv[..., j:j + d] += A * B[..., j:j + 1]
        conv %= p
        for j in range(2 * d - 2, d - 1, -1):
            conv[..., :d] += conv[..., j:j + 1] * self.np_red[j - d]
            conv[..., :d] %= p
        return conv[..., :d]

    def degree_sums(self, up_to: int) -> "list[tuple]":
        """Modular power sums for degrees 0..up_to at the current exponent."""
        out = []
        if self.use_np:
            for i in range(up_to + 1):
                lo, hi = self.slices[i]
                row = self.np_pows[lo:hi].sum(axis=0) % self.p
                out.append(tuple(int(x) for x in row))
        else:
            ring = self.ring
            for i in range(up_to + 1):
                lo, hi = self.slices[i]
                acc = ring.zero
                for v in self.pows[lo:hi]:
                    acc = ring.add(acc, v)
                out.append(acc)
        return out


def _bernoulli_vec(ring: _ResidueRing, n: int, sums: "list[tuple]") -> "list[tuple]":
    """Coefficient vectors of B_n(u) mod m from the power sums of n."""
    q = ring.field.order
    if n % (q - 1) != 0:
        coeffs = list(sums)
    else:
        coeffs = []
        acc = ring.zero
        for svec in sums:
            acc = ring.add(acc, svec)
            coeffs.append(acc)
        last = coeffs.pop()
        if not ring.is_zero(last):
            raise ContractViolationError(
                f"partial sums at n={n} fail to vanish mod {ring.m}")
    while coeffs and ring.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _umul(ring: _ResidueRing, a: "list[tuple]", b: "list[tuple]") -> "list[tuple]":
    """Product of u-polynomials with residue coefficients."""
    if not a or not b:
        return []
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ring.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = ring.add(out[i + j], ring.mul(ai, bj))
    return out


@dataclass(frozen=True)
class ReducedZeta:
    """A mod-p zeta numerator factor: a polynomial in u over F_p."""

    modulus: Poly
    part: str
    poly: Poly

    def coefficients(self) -> "list[int]":
        return [c for c in self.poly.coeffs]

    def __str__(self) -> str:
        return str(self.poly)


def reduced_zeta(m: Poly, part: str, cap: int = DEFAULT_CAP) -> ReducedZeta:
    """The reduced minus/plus zeta factor of the modulus m.

    Computed as the product over the parity class of the Bernoulli-Goss
    polynomials with coefficients reduced mod m throughout (the exact
    coefficients are astronomically large already for degree 3); each
    coefficient of the result is checked to lie in the prime field.
    """
    _check_part(part)
    _validate_modulus(m)
    field = m.field
    q = field.order
    d = m.degree()
    count = q ** d - 2
    if count > cap:
        raise CapacityError(
            f"product over {count} exponents exceeds the cap {cap}")
    ring = _ResidueRing(m)
    scan = _PowerScan(ring, d, cap)
    prod = [ring.one]
    for n in range(1, count + 1):
        scan.step()
        if not in_part(n, q, part):
            continue
        cutoff = digit_sum(n, q) // (q - 1)
        vec = _bernoulli_vec(ring, n, scan.degree_sums(cutoff))
        prod = _umul(ring, prod, vec)
    prime = field.prime_subfield()
    out = []
    for v in prod:
        c = ring.prime_residue(v)
        if c is None:
            raise ContractViolationError(
                f"reduced zeta coefficient {ring.to_poly(v)} is outside F_p "
                f"(modulus {m}, part {part})")
        out.append(c)
    return ReducedZeta(m, part, Poly(prime, out, "u"))


def _scan_witness(ctx: RootContext, m: Poly, part: str,
                  cap: int = DEFAULT_CAP) -> "int | None":
    """Smallest n in [1, q^d-2] of the right parity with m | norm(B_n(alpha))."""
    field = m.field
    q = field.order
    d = m.degree()
    count = q ** d - 2
    if count > cap:
        raise CapacityError(f"witness scan over {count} exponents exceeds the cap {cap}")
    ring = _ResidueRing(m)
    scan = _PowerScan(ring, d, cap)

    if ctx.s == 1:
        frak = m
        lift = None
    else:
        frak = factor(m.lift(ctx.top), seed=0).factors[0][0]
        lift = ctx.top
    alphas = [c for c in ctx.conjugates]

    for n in range(1, count + 1):
        scan.step()
        if not in_part(n, q, part):
            continue
        cutoff = digit_sum(n, q) // (q - 1)
        vec = _bernoulli_vec(ring, n, scan.degree_sums(cutoff))
        coeffs = [ring.to_poly(v) for v in vec]
        if lift is not None:
            coeffs = [c.lift(lift) % frak for c in coeffs]
        for a in alphas:
            acc = Poly.zero(frak.field, frak.var)
            for c in reversed(coeffs):
                acc = acc.scale(a) + c
            if (acc % frak).is_zero():
                return n
    return None


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of one criterion check, with both routes' agreed verdict."""

    f: Poly
    modulus: Poly
    part: str
    verdict: bool
    witness: "int | None"
    reduced: ReducedZeta
    elapsed_ms: "float | None" = None
    note: "str | None" = None

    @property
    def q(self) -> int:
        return self.modulus.field.order

    def to_json_dict(self, timings: bool = False) -> dict:
        fq = self.modulus.field
        from .textio import raw_poly_str
        field_modulus = (raw_poly_str(fq.base, fq.mod_coeffs, fq.var)
                         if fq.level != PRIME else None)
        return {
            "q": fq.order,
            "field_modulus": field_modulus,
            "f": str(self.f),
            "m": str(self.modulus),
            "part": self.part,
            "verdict": self.verdict,
            "witness_n": self.witness,
            "reduced_zeta": [int(c) for c in self.reduced.poly.coeffs],
            "elapsed_ms": (self.elapsed_ms if timings else None),
            **({"note": self.note} if self.note else {}),
        }


def criterion_check(f: Poly, m: Poly, part: str,
                    cap: int = DEFAULT_CAP) -> DivisibilityReport:
    """Decide f(u) | reduced zeta factor of m, by two independent routes.

    Route one divides the reduced product by f over F_p; route two scans
    for the smallest exponent witness.  The routes must agree; the report
    records the witness when the verdict is positive.
    """
    t0 = time.perf_counter()
    _check_part(part)
    fq = m.field
    ctx = root_context(Poly(f.field, f.coeffs, "u"), fq)
    f_u = ctx.f
    rz = reduced_zeta(m, part, cap)
    by_division = (rz.poly % f_u).is_zero()
    witness = _scan_witness(ctx, m, part, cap)
    by_witness = witness is not None
    if by_division != by_witness:
        raise ContractViolationError(
            f"criterion routes disagree for f={f_u}, m={m}, part={part}: "
            f"division says {by_division}, witness scan says {by_witness}")
    note = None
    if fq.order == 2 and part == MINUS:
        note = "minus part is empty when q=2: the reduced factor is 1"
    elapsed = round((time.perf_counter() - t0) * 1000.0, 3)
    return DivisibilityReport(f_u, m, part, by_division, witness, rz,
                              elapsed, note)


def class_number_divisibility(m: Poly, cap: int = DEFAULT_CAP) -> "tuple[bool, bool]":
    """(p | h_minus, p | h_plus) for the modulus m, via f(u) = u - 1."""
    prime = m.field.prime_subfield()
    f = Poly(prime, (prime.rfrom_int(-1), prime.one_raw()), "u")
    minus = criterion_check(f, m, MINUS, cap)
    plus = criterion_check(f, m, PLUS, cap)
    return minus.verdict, plus.verdict


def survey(f: Poly, fq: Field, d_max: int, part: str = "both",
           cap: int = DEFAULT_CAP, jobs: int = 1) -> "list[DivisibilityReport]":
    """criterion_check across every monic irreducible m with deg m <= d_max.

    Deterministic order: ascending degree, canonical modulus order, minus
    before plus.  With jobs > 1 the independent cells are evaluated in a
    process pool; the merge order is the same.
    """
    parts = [MINUS, PLUS] if part == "both" else [_check_part(part)]
    cells = []
    for d in range(1, d_max + 1):
        for m in enumerate_monic_irreducible(fq, d, cap):
            for pt in parts:
                cells.append((m, pt))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_survey_cell, [(f, m, pt, cap) for m, pt in cells]))
    return [criterion_check(f, m, pt, cap) for m, pt in cells]


def _survey_cell(args) -> DivisibilityReport:
    f, m, pt, cap = args
    return criterion_check(f, m, pt, cap)


@dataclass(frozen=True)
class SearchResult:
    """A constructed modulus whose reduced zeta factor f divides."""

    f: Poly
    part: str
    d: int
    exponent: int
    norm_factors: Factorization
    modulus: Poly
    witness: int
    report: DivisibilityReport
    trace: "tuple[str, ...]"

    def to_json_dict(self, timings: bool = False) -> dict:
        out = self.report.to_json_dict(timings)
        out.update({
            "search_d": self.d,
            "exponent_n": self.exponent,
            "norm_factorization": self.norm_factors.to_json(),
            "witness_b": self.witness,
            "trace": list(self.trace),
        })
        return out


def find_divisible_modulus(f: Poly, fq: Field, d: int, part: str,
                           cap: int = DEFAULT_CAP,
                           factorial_exponent: bool = False) -> SearchResult:
    """Construct an irreducible m with deg m > d whose reduced factor f divides.

    Forms the exponent n = 1 + (q-1) q^L (minus) or (q-1) + (q-1) q^L
    (plus) with L = lcm(1..d) by default (L = d! behind the flag; any
    multiple of every d' <= d works, and lcm keeps n desk-scale), factors
    the exact norm value, takes its canonically first irreducible factor,
    and re-verifies the divisibility end to end with criterion_check.
    """
    _check_part(part)
    q = fq.order
    if d < 2:
        raise ValidationError("the constructive search needs d >= 2")
    if part == MINUS and q == 2:
        raise ValidationError(
            "minus part is empty when q=2; no modulus can work (use plus)")
    L = math.factorial(d) if factorial_exponent else math.lcm(*range(1, d + 1))
    n = (1 if part == MINUS else q - 1) + (q - 1) * q ** L
    if n > cap:
        raise CapacityError(
            f"construction exponent n={n} exceeds the cap {cap}; "
            "the exact norm value would be infeasible at desk scale")
    trace = [f"exponent L = {'d!' if factorial_exponent else 'lcm(1..d)'} = {L}",
             f"n = {'1' if part == MINUS else 'q-1'} + (q-1)*q^L = {n}"]

    ctx = root_context(Poly(f.field, f.coeffs, "u"), fq)
    value = bernoulli_norm(n, ctx, cap)
    if not value.degree() >= 1:
        raise ContractViolationError(
            f"norm value at n={n} is a constant; the construction guarantees "
            "positive degree")
    norm_factors = factor(value, seed=0)
    trace.append(f"norm value has degree {value.degree()}, "
                 f"factors {norm_factors}")
    m = norm_factors.factors[0][0]
    dm = m.degree()
    if not dm > d:
        raise ContractViolationError(
            f"selected factor {m} has degree {dm} <= d = {d}, contradicting "
            "the congruence argument")
    trace.append(f"m = {m} (degree {dm} > d = {d})")

    b = n % (q ** dm - 1)
    if b == 0:
        raise ContractViolationError(
            f"witness b reduced to 0 for n={n}, m={m}; the construction "
            "guarantees b >= 1")
    if not in_part(b, q, part):
        raise ContractViolationError(
            f"witness b={b} has the wrong parity class for the {part} part")
    trace.append(f"b = n mod (q^{dm} - 1) = {b}, parity class {part}, b > 0")

    report = criterion_check(ctx.f, m, part, cap)
    if not report.verdict:
        raise ContractViolationError(
            f"end-to-end check failed: f does not divide the reduced {part} "
            f"factor of {m}")
    trace.append(f"criterion_check: verdict {report.verdict}, "
                 f"smallest witness {report.witness}")
    return SearchResult(ctx.f, part, d, n, norm_factors, m, b, report,
                        tuple(trace))
