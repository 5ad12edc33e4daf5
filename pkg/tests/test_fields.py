import pytest

from bgzeta import (FieldMismatchError, NotPrimeError, ReducibleModulusError,
                    enumerate_field, extend_field, frobenius_q, make_tower,
                    parse_elem)

F2 = make_tower(2)
F3 = make_tower(3)
F4 = make_tower(2, "y^2+y+1")
F9 = make_tower(3, "y^2+1")


def test_make_tower_prime():
    assert F3.order == 3
    assert F3.p == 3


def test_make_tower_middle():
    assert F4.order == 4
    assert str(F4) == "GF(4)=GF(2)[y]/(y^2+y+1)"


def test_make_tower_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulusError):
        make_tower(2, "y^2+1")  # (y+1)^2


def test_make_tower_rejects_non_prime():
    with pytest.raises(NotPrimeError):
        make_tower(4)
    with pytest.raises(NotPrimeError):
        make_tower(1)


def test_make_tower_rejects_non_monic():
    with pytest.raises(ReducibleModulusError):
        make_tower(3, "2*y^2+1")


def test_default_modulus_is_lex_smallest():
    # degree 2 over F_3: y^2, y^2+y, y^2+2y reducible; y^2+1 is the first
    assert str(make_tower(3, 2)) == "GF(9)=GF(3)[y]/(y^2+1)"
    assert str(make_tower(2, 2)) == "GF(4)=GF(2)[y]/(y^2+y+1)"


def test_prime_arithmetic():
    assert F3(2) * F3(2) == F3(1)
    assert F3(1) - F3(2) == F3(2)
    assert (F3(2) ** 5) == F3(2)


def test_middle_arithmetic():
    y = F4("y")
    assert y * y == F4("y+1")
    assert y.inverse() == F4("y+1")
    assert y * y.inverse() == F4.one()


def test_inversion_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F4.zero().inverse()


def test_field_mismatch_raises():
    with pytest.raises(FieldMismatchError):
        F3(1) + F2(1)


def test_frobenius_on_f9():
    E = extend_field(F3, "z^2+1")
    z = E("z")
    assert frobenius_q(z) == E("2*z")
    assert frobenius_q(frobenius_q(z)) == z


def test_frobenius_fixes_base_field():
    E = extend_field(F3, "z^2+1")
    for c in range(3):
        x = E(c)
        assert frobenius_q(x) == x


def test_frobenius_requires_top_field():
    with pytest.raises(FieldMismatchError):
        F4("y").frobenius()


def test_enumerate_field_order():
    assert [str(x) for x in enumerate_field(F2)] == ["0", "1"]
    assert [str(x) for x in enumerate_field(F3)] == ["0", "1", "2"]
    assert [str(x) for x in enumerate_field(F4)] == ["0", "1", "y", "y+1"]


def test_tower_depth_is_limited():
    E = extend_field(F4, 2)
    with pytest.raises(FieldMismatchError):
        extend_field(E, 2)


def _field_battery(max_order):
    fields = [make_tower(p) for p in (2, 3, 5, 7, 11, 13) if p <= max_order]
    for p, degs in ((2, (2, 3, 4, 5, 6, 7, 8)), (3, (2, 3, 4, 5)),
                    (5, (2, 3)), (7, (2,)), (11, (2,)), (13, (2,))):
        for e in degs:
            if p ** e <= max_order:
                fields.append(make_tower(p, e))
    # top levels of two-step towers
    for base, deg in ((F4, 2), (F9, 2), (F4, 4), (F9, 3)):
        if base.order ** deg <= max_order:
            fields.append(extend_field(base, deg))
    return fields


@pytest.mark.parametrize("field", _field_battery(256), ids=lambda f: f"N{f.order}")
def test_fermat_property(field):
    N = field.order
    elems = enumerate_field(field)
    assert len(elems) == N
    assert len({e.raw for e in elems}) == N
    for x in elems:
        assert x ** N == x
        if not x.is_zero():
            assert x ** (N - 1) == field.one()


@pytest.mark.parametrize("base,deg", [(F3, 2), (F4, 2), (F9, 2), (F2, 3)])
def test_frobenius_is_ring_hom(base, deg):
    E = extend_field(base, deg)
    assert E.order <= 81
    elems = enumerate_field(E)
    for x in elems:
        for y in elems:
            assert frobenius_q(x + y) == frobenius_q(x) + frobenius_q(y)
            assert frobenius_q(x * y) == frobenius_q(x) * frobenius_q(y)


@pytest.mark.parametrize("base,deg", [(F3, 2), (F4, 2), (F2, 3)])
def test_frobenius_order(base, deg):
    E = extend_field(base, deg)
    for x in enumerate_field(E):
        it = x
        for _ in range(deg):
            it = it.frobenius()
        assert it == x


def test_rank_unrank_roundtrip():
    for field in (F3, F4, F9, extend_field(F4, 2)):
        for i, x in enumerate(enumerate_field(field)):
            assert x.rank() == i
            assert field.unrank(i) == x.raw


def test_element_text_roundtrip():
    for field in (F3, F4, F9, extend_field(F9, 2), extend_field(F4, 2)):
        for x in enumerate_field(field):
            assert parse_elem(field, str(x)) == x


def test_element_parse_accepts_loose_grammar():
    assert parse_elem(F4, "y + 1") == F4("y+1")
    assert parse_elem(F4, "1+y") == F4("y+1")
    assert parse_elem(F3, "-1") == F3(2)
    E = extend_field(F9, 2)
    x = parse_elem(E, "(y+1)*z + y")
    assert str(x) == "(y+1)*z+y"


def test_in_prime_subfield_detection():
    assert F4.in_prime_raw(F4(1).raw) == 1
    assert F4.in_prime_raw(F4("y").raw) is None
    E = extend_field(F9, 2)
    assert E.in_prime_raw(E(2).raw) == 2
    assert E.in_prime_raw(E("y").raw) is None
    assert E.in_prime_raw(E("z").raw) is None


def test_structural_equality_is_fixed_width():
    a = F4("y+1")
    b = F4("y") + F4.one()
    assert a == b and a.raw == b.raw and len(a.raw) == 2
