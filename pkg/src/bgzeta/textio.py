"""Text grammar for field elements and polynomials.

Printing: polynomials are emitted in descending degree, terms joined by
"+", powers written with "^", explicit "*" between a coefficient and the
variable, e.g. "T^4+T+1" or "(y+1)*T^2+y". Field elements print as a
decimal residue at the prime level, as a polynomial in y at the middle
level, and in z at the top level.

Parsing accepts the same grammar with "*" optional, any term order, "-"
signs, and parenthesized coefficients.
"""

from __future__ import annotations

from .errors import ValidationError
from .ff import Field, FieldElem, PRIME, Raw


def elem_str(x: FieldElem) -> str:
    return _raw_elem_str(x.field, x.raw)


def _raw_elem_str(field: Field, raw: Raw) -> str:
    if field.level == PRIME:
        return str(raw)
    return raw_poly_str(field.base, raw, field.var)


def raw_poly_str(base: Field, coeffs, var: str) -> str:
    """Print a raw coefficient sequence (ascending, possibly untrimmed)."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if base.is_zero(c):
            continue
        cs = _raw_elem_str(base, c)
        if i == 0:
            terms.append(cs)
        else:
            power = var if i == 1 else f"{var}^{i}"
            if c == base.one_raw():
                terms.append(power)
            else:
                if "+" in cs or "-" in cs:
                    cs = f"({cs})"
                terms.append(f"{cs}*{power}")
    return "+".join(terms) if terms else "0"


def poly_str(poly) -> str:
    return raw_poly_str(poly.field, poly.coeffs, poly.var)


def upoly_str(up) -> str:
    """Ascending in u, coefficients in T parenthesized: "1 + (T^4+T)*u"."""
    terms = []
    for i, c in enumerate(up.coeffs):
        if c.is_zero():
            continue
        if i == 0:
            terms.append(str(c))
            continue
        power = "u" if i == 1 else f"u^{i}"
        if c.is_one():
            terms.append(power)
        elif c.degree() >= 1:
            terms.append(f"({c})*{power}")
        else:
            terms.append(f"{c}*{power}")
    return " + ".join(terms) if terms else "0"


def _split_terms(text: str) -> "list[tuple[int, str]]":
    """Split on top-level +/- into (sign, term) pairs."""
    out = []
    depth = 0
    sign = 1
    cur = []
    pending_sign = False
    for ch in text:
        if ch == "(":
            depth += 1
            cur.append(ch)
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValidationError(f"unbalanced parentheses in {text!r}")
            cur.append(ch)
        elif ch in "+-" and depth == 0:
            if cur:
                out.append((sign, "".join(cur)))
                cur = []
            elif out or pending_sign:
                raise ValidationError(f"misplaced sign in {text!r}")
            sign = 1 if ch == "+" else -1
            pending_sign = True
        else:
            cur.append(ch)
            pending_sign = False
    if depth != 0:
        raise ValidationError(f"unbalanced parentheses in {text!r}")
    if not cur:
        raise ValidationError(f"trailing sign in {text!r}")
    out.append((sign, "".join(cur)))
    return out


def _find_var(term: str, var: str) -> int:
    depth = 0
    for i, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and term[i:i + len(var)] == var:
            return i
    return -1


def parse_poly(field: Field, text: str, var: str = "T"):
    """Parse a polynomial over `field` in the given variable."""
    from .polyring import Poly
    s = "".join(text.split())
    if not s:
        raise ValidationError("empty polynomial text")
    acc: dict[int, Raw] = {}
    for sign, term in _split_terms(s):
        pos = _find_var(term, var)
        if pos == -1:
            coef_text, exp = term, 0
        else:
            coef_text = term[:pos].rstrip("*")
            rest = term[pos + len(var):]
            if rest == "":
                exp = 1
            elif rest.startswith("^"):
                try:
                    exp = int(rest[1:])
                except ValueError:
                    raise ValidationError(f"bad exponent in term {term!r}") from None
                if exp < 0:
                    raise ValidationError(f"negative exponent in term {term!r}")
            else:
                raise ValidationError(f"cannot parse term {term!r}")
        if coef_text == "":
            raw = field.one_raw()
        else:
            if coef_text.startswith("(") and coef_text.endswith(")"):
                coef_text = coef_text[1:-1]
            raw = parse_elem(field, coef_text).raw
        if sign < 0:
            raw = field.rneg(raw)
        acc[exp] = field.radd(acc.get(exp, field.zero_raw()), raw)
    width = max(acc) + 1 if acc else 0
    coeffs = [acc.get(i, field.zero_raw()) for i in range(width)]
    return Poly(field, coeffs, var)


def parse_elem(field: Field, text: str) -> FieldElem:
    """Parse a field element: residue, or polynomial in y (middle) / z (top)."""
    s = "".join(text.split())
    if field.level == PRIME:
        try:
            return FieldElem(field, int(s, 10) % field.p)
        except ValueError:
            raise ValidationError(
                f"{text!r} is not a residue of {field}") from None
    inner = parse_poly(field.base, s, field.var)
    if len(inner.coeffs) > field.deg:
        raise ValidationError(f"{text!r} does not fit in {field}")
    pad = list(inner.coeffs) + [field.base.zero_raw()] * (field.deg - len(inner.coeffs))
    return FieldElem(field, tuple(pad))
