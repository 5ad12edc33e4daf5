"""Acceptance gate: every criterion asserted bit-exactly (tolerance zero),
with its stated runtime bound, printing one PASS line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random
import time

import pytest

from bgzeta import (Poly, bernoulli_norm, bernoulli_norm_mod, bernoulli_poly,
                    bernoulli_scalar, binom_mod, criterion_check, digit_reduce_iter,
                    digit_sum, enumerate_monic, enumerate_monic_irreducible,
                    factor, find_divisible_modulus, make_tower, parse_poly,
                    power_sum_exact, power_sum_poly, reduced_zeta,
                    root_context, survey)
from bgzeta.polyring import NEG_INF
from bgzeta.zeta import MINUS, PLUS, in_part

F2 = make_tower(2)
F3 = make_tower(3)
F4 = make_tower(2, "y^2+y+1")


def P(field, text):
    return parse_poly(field, text)


def U(field, text):
    return parse_poly(field, text, var="u")


def _report(num, description, elapsed, bound):
    line = f"PASS criterion {num}: {description}"
    if bound is not None:
        line += f" ({elapsed:.2f}s < {bound}s)"
    print(line)


def test_criterion_1_golden_factorizations_q2():
    t0 = time.perf_counter()
    ctx = root_context(U(F2, "u^2+u+1"), F2)
    values = {n: factor(bernoulli_norm(n, ctx)) for n in range(1, 7)}
    for n in (1, 2, 4):
        assert str(values[n]) == "1"
    assert str(values[3]) == "(T^4+T+1)"
    assert str(values[5]) == "(T^4+T^3+1)(T^4+T^3+T^2+T+1)"
    assert str(values[6]) == "(T^4+T+1)^2"
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report(1, "golden norm factorizations at q=2, f=u^2+u+1", elapsed, 1)


def test_criterion_2_plus_part_never_divides_q2():
    t0 = time.perf_counter()
    reports = survey(U(F2, "u^2+u+1"), F2, 3, part=PLUS)
    assert len(reports) == 5
    assert [str(r.modulus) for r in reports] == \
        ["T", "T+1", "T^2+T+1", "T^3+T+1", "T^3+T^2+1"]
    assert all(r.verdict is False for r in reports)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report(2, "plus part fails for all five deg<=3 moduli at q=2", elapsed, 1)


def test_criterion_3_golden_q3():
    t0 = time.perf_counter()
    ctx = root_context(U(F3, "u^2+1"), F3)
    assert str(bernoulli_norm(1, ctx)) == "1"
    assert str(bernoulli_norm(3, ctx)) == "1"
    expected = "(T^2+1)(T^2+T+2)(T^2+2*T+2)"
    assert str(factor(bernoulli_norm(5, ctx))) == expected
    assert str(factor(bernoulli_norm(7, ctx))) == expected
    for mtext in ("T^2+1", "T^2+T+2", "T^2+2*T+2"):
        rep = criterion_check(U(F3, "u^2+1"), P(F3, mtext), MINUS)
        assert rep.verdict is True
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report(3, "golden norms and minus-part verdicts at q=3, f=u^2+1", elapsed, 1)


def test_criterion_4_derived_zeta_value():
    """Independent oracle: over F_3 mod T^2+1 the minus class is n=1,3,5,7
    with B_1 = B_3 = 1, B_5 = 1+2Tu and B_7 = 1+Tu after reduction, so the
    product is (1+2Tu)(1+Tu) = 1 + 3Tu + 2T^2u^2 = 1 + u^2 since T^2 = -1
    and 3 = 0."""
    rz = reduced_zeta(P(F3, "T^2+1"), MINUS)
    assert [int(c) for c in rz.poly.coeffs] == [1, 0, 1]
    assert str(rz.poly) == "u^2+1"
    _report(4, "reduced minus factor of T^2+1 over F_3 equals u^2+1", 0.0, None)


def _brute_power_sum(i, n, field):
    total = Poly.zero(field)
    for a in enumerate_monic(field, i):
        total = total + a ** n
    return total


def test_criterion_5_property_suite():
    t0 = time.perf_counter()

    # vanishing beyond the cutoff (brute force, guard path not trusted)
    for field in (F2, F3):
        q = field.order
        for n in range(1, 41):
            cutoff = digit_sum(n, q) // (q - 1)
            for i in (cutoff + 1, cutoff + 2):
                if q ** i <= 2048:
                    assert _brute_power_sum(i, n, field).is_zero()

    # degree bounds with the binomial equality condition
    for field in (F2, F3):
        q, p = field.order, field.p
        for n in range(1, 41):
            cutoff = digit_sum(n, q) // (q - 1)
            for i in range(1, cutoff + 1):
                s = power_sum_exact(i, n, field)
                its = [digit_reduce_iter(n, q, k) for k in range(1, i + 1)]
                bound = sum(its)
                assert s.degree() <= bound
                if all(it != NEG_INF for it in its) and \
                        all(binom_mod(n, it, p) != 0 for it in its):
                    assert s.degree() == bound

    # value at u=1 vanishes in the divisible class; scalar matches at u=1;
    # u-degree caps
    for field in (F2, F3, F4):
        q = field.order
        for n in range(1, 61):
            if n % (q - 1) == 0:
                assert power_sum_poly(n, field).value_at_one().is_zero()
            up = bernoulli_poly(n, field)
            assert up.value_at_one() == bernoulli_scalar(n, field)
            cap = digit_sum(n, q) // (q - 1)
            if n % (q - 1) == 0:
                cap -= 1
            assert up.degree() == NEG_INF or up.degree() <= cap

    # congruent exponents give identical norm residues: 200 random pairs
    rng = random.Random(20260809)
    cases = [(F2, "u^2+u+1", "T^2+T+1", 60), (F3, "u^2+1", "T^2+1", 200)]
    pairs_done = 0
    for field, ftext, mtext, n_hi in cases:
        ctx = root_context(U(field, ftext), field)
        m = P(field, mtext)
        period = field.order ** 2 - 1
        for _ in range(100):
            n1 = rng.randrange(1, n_hi)
            n2 = n1 + period * rng.randrange(1, 51)
            r1 = bernoulli_norm_mod(n1, ctx, m)
            r2 = bernoulli_norm_mod(n2, ctx, m)
            assert r1.values == r2.values
            pairs_done += 1
    assert pairs_done == 200

    # unit norm values at n = q and n = 2(q-1), in every context
    context_fs = {2: ("u+1", "u^2+u+1", "u^3+u+1"),
                  3: ("u-1", "u+1", "u^2+1"),
                  4: ("u+1", "u^2+u+1", "u^3+u+1")}
    for field in (F2, F3, F4):
        q = field.order
        for ftext in context_fs[q]:
            ctx = root_context(parse_poly(field.prime_subfield(), ftext,
                                          var="u"), field)
            assert str(bernoulli_norm(q, ctx)) == "1"
            assert str(bernoulli_norm(2 * (q - 1), ctx)) == "1"

    # reduced factors live in F_p[u] for every small modulus
    for field, dmax in ((F2, 3), (F3, 2), (F4, 2)):
        prime = field.prime_subfield()
        for d in range(1, dmax + 1):
            for m in enumerate_monic_irreducible(field, d):
                for part in (MINUS, PLUS):
                    assert reduced_zeta(m, part).poly.field == prime

    # two-path agreement on every survey cell (checked inside criterion_check;
    # a disagreement raises instead of returning)
    for f, field, dmax in ((U(F2, "u^2+u+1"), F2, 3), (U(F3, "u^2+1"), F3, 2),
                           (U(F2, "u^2+u+1"), F4, 2)):
        for rep in survey(f, field, dmax):
            assert (rep.witness is not None) == rep.verdict

    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    _report(5, "property suite (vanishing, degree bounds, u=1 identities, "
               "congruences, unit norms, membership, two-path agreement)",
            elapsed, 60)


def test_criterion_6_constructive_search():
    t0 = time.perf_counter()

    sr2 = find_divisible_modulus(U(F2, "u^2+u+1"), F2, 2, PLUS)
    assert str(sr2.modulus) == "T^4+T^3+1"
    assert sr2.witness == 5
    again = criterion_check(U(F2, "u^2+u+1"), sr2.modulus, PLUS)
    assert again.verdict is True

    sr3 = find_divisible_modulus(U(F3, "u^2+1"), F3, 2, MINUS)
    assert sr3.modulus.degree() > 2
    assert sr3.report.verdict is True
    assert in_part(sr3.witness, 3, MINUS)
    ctx = root_context(U(F3, "u^2+1"), F3)
    assert bernoulli_norm_mod(sr3.witness, ctx, sr3.modulus).divisible
    fresh = criterion_check(U(F3, "u^2+1"), sr3.modulus, MINUS)
    assert fresh.verdict is True

    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    _report(6, "constructive search at d=2 (q=2 plus pinned; q=3 minus "
               "verified end to end)", elapsed, 120)


def test_criterion_7_note_on_full_generality():
    print("NOTE criterion 7: full-generality infinitude is out of desk-scale "
          "reach; covered by the property suite (criterion 5) and the d=2 "
          "constructive runs (criterion 6), plus a d=3 run in test_zeta.")
