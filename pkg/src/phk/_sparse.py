"""Monomial-level divided difference shared by the z- and x-polynomial code."""

from __future__ import annotations


def divided_difference_dict(terms: dict, a: int, b: int) -> dict:
    """Apply (f - f|_{a<->b}) / (v_a - v_b) to a dict of exponent tuples.

    Each monomial v_a^p v_b^q maps to a geometric sum, so the quotient is
    exact by construction.
    """
    out: dict = {}
    get = out.get
    for key, c in terms.items():
        p, q = key[a], key[b]
        if p == q:
            continue
        if p > q:
            lo, hi, s = q, p, c
        else:
            lo, hi, s = p, q, -c
        base = list(key)
        total = p + q - 1
        for k in range(lo, hi):
            base[a] = k
            base[b] = total - k
            m = tuple(base)
            v = get(m, 0) + s
            if v:
                out[m] = v
            else:
                del out[m]
    return out
