"""Shared helper for rendering dense univariate polynomials as text."""


def needs_parens(s: str) -> bool:
    """True when a coefficient string must be wrapped before '*var^k'."""
    body = s[1:] if s.startswith("-") else s
    return any(ch in body for ch in "+-/* ")


def format_poly(coeffs, var: str, fmt_coeff) -> str:
    """Render a dense coefficient sequence (ascending exponent) as text.

    Zero coefficients are passed as None and skipped; ``fmt_coeff`` renders
    the remaining ones. Highest-degree term first, e.g. ``(2/3)*X^2 + 1``.
    """
    terms = []
    for exp in range(len(coeffs) - 1, -1, -1):
        c = coeffs[exp]
        if c is None:
            continue
        s = fmt_coeff(c)
        if exp == 0:
            terms.append(s)
            continue
        xpart = var if exp == 1 else f"{var}^{exp}"
        if s == "1":
            terms.append(xpart)
        elif s == "-1":
            terms.append(f"-{xpart}")
        elif needs_parens(s):
            terms.append(f"({s})*{xpart}")
        else:
            terms.append(f"{s}*{xpart}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
