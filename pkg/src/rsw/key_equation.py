"""Key-equation solving: halted EEA cofactor extraction.

Running the EEA on (x^{d-1}, S) yields, at each iteration i, a basis
{(u_i, r_i), (u_{i-1}, r_{i-1})} of the solution module of the key equation
with determinant x^{d-1}.  Any error locator compatible with the syndrome
expands over the pair: locator = A*h1 + B*h2 with (h1, h2) = (u_i, u_{i-1}),
and Cramer's rule bounds the expansion degrees:

    deg A <= deg(locator) + max(deg r_{i-1} - (d-1), -1 - deg r_{i-2})
    deg B <= deg(locator) + max(deg r_i     - (d-1), -1 - deg r_{i-1})

(stored below as the offsets a_off and b_off).  The halt is chosen to
minimize a_off + b_off, which lands on the first iteration with
deg r_i < (d-1)/2 whenever the remainder degree ladder has no gaps, and one
step past a gap otherwise; per-row sums are never below -d, so the combined
budget the decoders derive is 2*tau - d at best.  Below half distance the
chosen h1 is the error locator itself up to a scalar.
"""

from __future__ import annotations

from dataclasses import dataclass

from rsw.code import GrsCode
from rsw.poly import Poly, eea_full


@dataclass
class KeyEqOutput:
    h1: Poly
    h2: Poly
    halt_iteration: int
    remainder_at_halt: Poly
    a_off: int  # deg A <= deg(locator) + a_off
    b_off: int  # deg B <= deg(locator) + b_off


def solve_key_equation(code: GrsCode, synd: Poly) -> KeyEqOutput:
    """Cofactor pair (h1, h2) for a syndrome of degree < d-1.

    Both cofactors are returned monic (the scalar is immaterial: locators
    are recovered up to a constant).  A zero syndrome short-circuits to the
    empty-error convention (h1 = 1, h2 = x^{d-1}).  If the syndrome itself
    already has degree < (d-1)/2 the halt can land on the seed row and h2
    degenerates to 0; the pair is still coprime and the decoders treat it
    soundly.
    """
    f = code.field
    d = code.d
    if synd.degree > d - 2:
        raise ValueError(f"syndrome degree {synd.degree} too large for d={d}")
    if synd.is_zero():
        return KeyEqOutput(Poly.one(f), Poly.x_pow(f, d - 1), 0, Poly.zero(f), 0, -d)
    trace = eea_full(Poly.x_pow(f, d - 1), synd)
    rs = trace.remainders
    best = None
    for i in range(1, len(rs)):
        a_off = rs[i - 1].degree - (d - 1)
        if i >= 2:
            a_off = max(a_off, -1 - rs[i - 2].degree)
        b_off = max(rs[i].degree - (d - 1), -1 - rs[i - 1].degree)
        if best is None or a_off + b_off < best[0]:
            best = (a_off + b_off, i, a_off, b_off)
    _, i, a_off, b_off = best
    return KeyEqOutput(
        trace.u[i].monic(),
        trace.u[i - 1].monic(),
        i,
        rs[i],
        int(a_off),
        int(b_off),
    )
