"""Threshold formulas for rc_k = 2 and the f(k) versus (k+1)^2 table.

All integer fields are computed exactly: ceilings of square roots go through
``math.isqrt`` and ceilings of quotients through floor division.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import isqrt


def ceil_sqrt(x: int) -> int:
    """Smallest integer ``a >= 0`` with ``a*a >= x``."""
    if x < 0:
        raise ValueError("negative radicand")
    a = isqrt(x)
    return a if a * a == x else a + 1


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ell0(k: int, r: int) -> int:
    """ceil(max(sqrt(k/2 + 1), (k-1)/r + 2)).

    The ceiling of a max is the max of the ceilings, and since ``a*a`` is an
    integer, ``a*a >= (k+2)/2`` iff ``a*a >= ceil((k+2)/2)``.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    a = ceil_sqrt(ceil_div(k + 2, 2))
    return max(a, ceil_div(k - 1, r) + 2)


def r0(k: int) -> int:
    return ceil_sqrt(2 * k)


def ell0_simplified(k: int) -> int:
    """Simplified threshold ``ceil((k-1)/r0) + 2`` with ``r0 = ceil(sqrt(2k))``."""
    return ceil_div(k - 1, r0(k)) + 2


@dataclass(frozen=True)
class BoundsRow:
    k: int
    r0: int
    ell0: int
    f_k: int
    chartrand: int
    ratio: Decimal
    ell0_simplified: int

    @property
    def forms_agree(self) -> bool:
        return self.ell0 == self.ell0_simplified

    @property
    def improves(self) -> bool:
        return self.f_k < self.chartrand


def ratio(f_k: int, k: int, digits: int = 28) -> Decimal:
    """``f_k / k^(3/2)`` to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 5
        value = Decimal(f_k) / (Decimal(k) * Decimal(k).sqrt())
        ctx.prec = digits
        return +value


def f_of_k(k: int) -> BoundsRow:
    """Row of the table for one ``k``; ``f_k = ell0^2 * r0``.

    ``ell0`` is the max-form threshold evaluated at ``r = r0``. The simplified
    form is kept alongside so any disagreement is visible rather than hidden.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    rr = r0(k)
    l0 = ell0(k, rr)
    f_k = l0 * l0 * rr
    return BoundsRow(k, rr, l0, f_k, (k + 1) ** 2, ratio(f_k, k), ell0_simplified(k))


def bounds_table(k_min: int, k_max: int) -> list[BoundsRow]:
    if k_min < 2 or k_max < k_min:
        raise ValueError(f"need 2 <= k_min <= k_max, got [{k_min}, {k_max}]")
    return [f_of_k(k) for k in range(k_min, k_max + 1)]


def crossover(rows: list[BoundsRow]) -> int | None:
    """Smallest ``k`` in ``rows`` where ``f(k) < (k+1)^2``."""
    for row in rows:
        if row.improves:
            return row.k
    return None


def ell0_form_disagreements(k_max: int) -> list[int]:
    """All ``k`` in ``[2, k_max]`` where the simplified threshold differs from the max-form."""
    bad = []
    for k in range(2, k_max + 1):
        rr = ceil_sqrt(2 * k)
        simple = -(-(k - 1) // rr) + 2
        if simple != ell0(k, rr):
            bad.append(k)
    return bad


def ratio_threshold(k_max: int) -> int | None:
    """Least ``k*`` such that ``f(k) < k^(3/2)`` for every ``k`` in ``[k*, k_max]``.

    Exact test: ``f(k) < k^(3/2)`` iff ``f(k)^2 < k^3``.
    """
    k_star = None
    for k in range(2, k_max + 1):
        rr = ceil_sqrt(2 * k)
        l0 = ell0(k, rr)
        f = l0 * l0 * rr
        if f * f < k ** 3:
            if k_star is None:
                k_star = k
        else:
            k_star = None
    return k_star


def to_csv(rows: list[BoundsRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    first = crossover(rows)
    writer.writerow(["k", "r0", "ell0", "f_k", "chartrand", "ratio", "crossover"])
    for row in rows:
        writer.writerow([row.k, row.r0, row.ell0, row.f_k, row.chartrand,
                         f"{row.ratio:.6f}", "*" if row.k == first else ""])
    return buf.getvalue()
