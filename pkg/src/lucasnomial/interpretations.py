"""The two tiling-sum interpretations of the lucasnomials, and verifiers.

Both interpretations sum over partitions inside an m x n rectangle, tiling
the rows of the partition and the columns of its complement.  The linear
flavor forbids column tilings from starting with a monomino (at the end
touching the partition boundary) and reproduces the coefficient itself; the
circular flavor allows wrap dominoes everywhere, gives every empty part the
weight-2 empty tiling, and reproduces 2^(m+n) times the coefficient.

Each sum can be evaluated two ways: `enumerate` materializes every tiling
pair, `gf` multiplies per-part closed forms.  Enumeration is refused above a
configurable predicted-pair budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

from .coefficients import via_quotient
from .errors import DomainError, ResourceError
from .lucas import check_lemma1, lucas_F, lucas_L
from .partitions import enumerate_in_rect
from .poly import BivariatePolynomial, ONE, T
from .reports import CaseResult, IdentityReport
from .tilings import (
    CIRCULAR,
    LINEAR,
    LINEAR_NOLEAD,
    MONO,
    Tiling,
    _tiling_pool,
    gf,
)

LINEAR_PAIR = "linear_pair"
CIRCULAR_PAIR = "circular_pair"

PAIR_BUDGET = 10**7


@dataclass(frozen=True)
class TilingPair:
    """One tiling per row of a partition plus one per column of its
    complement."""

    row_tilings: tuple[Tiling, ...]
    col_tilings: tuple[Tiling, ...]
    flavor: str

    def __post_init__(self) -> None:
        if self.flavor not in (LINEAR_PAIR, CIRCULAR_PAIR):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        kind = LINEAR if self.flavor == LINEAR_PAIR else CIRCULAR
        for t in self.row_tilings + self.col_tilings:
            if t.kind != kind:
                raise ValueError(f"{self.flavor} pair holds a {t.kind} tiling")
        if self.flavor == LINEAR_PAIR:
            for t in self.col_tilings:
                if t.tiles and t.tiles[0] == MONO:
                    raise ValueError("column tilings must not begin with a monomino")

    def weight(self) -> BivariatePolynomial:
        a, b, c = self.weight_exponents()
        return BivariatePolynomial.monomial(a, b, c)

    def weight_exponents(self) -> tuple[int, int, int]:
        a = b = 0
        c = 1
        for t in self.row_tilings + self.col_tilings:
            ta, tb, tc = t.weight_exponents()
            a += ta
            b += tb
            c *= tc
        return a, b, c


@cache
def _count(kind: str, n: int) -> int:
    """Tiling count without materializing; matches enumerate_tilings."""
    if kind == LINEAR:
        return 1 if n <= 1 else _count(LINEAR, n - 1) + _count(LINEAR, n - 2)
    if kind == LINEAR_NOLEAD:
        return 1 if n == 0 else 0 if n == 1 else _count(LINEAR, n - 2)
    if kind == CIRCULAR:
        return 1 if n <= 1 else _count(LINEAR, n) + _count(LINEAR, n - 2)
    raise DomainError(f"unknown tiling kind {kind!r}")


def _pair_kinds(flavor: str) -> tuple[str, str]:
    if flavor == LINEAR_PAIR:
        return LINEAR, LINEAR_NOLEAD
    if flavor == CIRCULAR_PAIR:
        return CIRCULAR, CIRCULAR
    raise DomainError(f"unknown flavor {flavor!r}")


def predicted_pair_count(m: int, n: int, flavor: str) -> int:
    """Number of (partition, pair) objects enumeration would produce."""
    row_kind, col_kind = _pair_kinds(flavor)
    total = 0
    for part in enumerate_in_rect(m, n):
        comp = part.complement()
        count = 1
        for p in part.parts:
            count *= _count(row_kind, p)
        for p in comp.parts:
            count *= _count(col_kind, p)
        total += count
    return total


def iter_pairs(m: int, n: int, flavor: str):
    """Yield every (partition, TilingPair) object, deterministically ordered."""
    row_kind, col_kind = _pair_kinds(flavor)
    for part in enumerate_in_rect(m, n):
        comp = part.complement()
        factor_lists = [_tiling_pool(row_kind, p) for p in part.parts]
        factor_lists += [_tiling_pool(col_kind, p) for p in comp.parts]
        rows = part.rows
        for combo in product(*factor_lists):
            yield part, TilingPair(combo[:rows], combo[rows:], flavor)


def _rhs(m: int, n: int, flavor: str, mode: str, budget: int) -> BivariatePolynomial:
    if m < 0 or n < 0:
        raise DomainError("rectangle dimensions must be nonnegative")
    row_kind, col_kind = _pair_kinds(flavor)
    if mode == "gf":
        total = BivariatePolynomial.zero()
        for part in enumerate_in_rect(m, n):
            comp = part.complement()
            factor = ONE
            for p in part.parts:
                factor = factor * gf(row_kind, p)
            for p in comp.parts:
                factor = factor * gf(col_kind, p)
            total = total + factor
        return total
    if mode == "enumerate":
        predicted = predicted_pair_count(m, n, flavor)
        if predicted > budget:
            raise ResourceError(
                f"enumeration of ({m}, {n}) {flavor} predicts {predicted} tiling "
                f"pairs, over the budget of {budget}; use gf mode"
            )
        acc: dict[tuple[int, int], int] = {}
        for _, pair in iter_pairs(m, n, flavor):
            a, b, c = pair.weight_exponents()
            acc[(a, b)] = acc.get((a, b), 0) + c
        return BivariatePolynomial(acc)
    raise DomainError(f"unknown mode {mode!r}")


def rhs_linear(
    m: int, n: int, mode: str = "gf", budget: int = PAIR_BUDGET
) -> BivariatePolynomial:
    """Total weight of linear pairs over all partitions in m x n."""
    return _rhs(m, n, LINEAR_PAIR, mode, budget)


def rhs_circular(
    m: int, n: int, mode: str = "gf", budget: int = PAIR_BUDGET
) -> BivariatePolynomial:
    """Total weight of circular pairs over all partitions in m x n."""
    return _rhs(m, n, CIRCULAR_PAIR, mode, budget)


def theorem_cases(
    m: int,
    n: int,
    flavor: str = "both",
    mode: str = "gf",
    budget: int = PAIR_BUDGET,
) -> list[CaseResult]:
    """Compare the tiling sums at one (m, n) against the quotient route."""
    if flavor not in ("linear", "circular", "both"):
        raise DomainError(f"unknown flavor {flavor!r}")
    expected = via_quotient(m + n, m)
    out = []
    if flavor in ("linear", "both"):
        rhs = rhs_linear(m, n, mode, budget)
        out.append(
            CaseResult(
                key=("linear", m, n),
                label=f"theorem linear m={m} n={n} mode={mode}",
                passed=expected == rhs,
                lhs=expected,
                rhs=rhs,
            )
        )
    if flavor in ("circular", "both"):
        rhs = rhs_circular(m, n, mode, budget)
        doubled = expected * (1 << (m + n))
        out.append(
            CaseResult(
                key=("circular", m, n),
                label=f"theorem circular m={m} n={n} mode={mode}",
                passed=doubled == rhs,
                lhs=doubled,
                rhs=rhs,
            )
        )
    return out


def verify_theorem(
    m_max: int,
    n_max: int,
    flavor: str = "both",
    mode: str = "gf",
    budget: int = PAIR_BUDGET,
) -> IdentityReport:
    """Check both interpretations on the whole (m, n) grid; failures are
    recorded in the report, never raised."""
    cases: list[CaseResult] = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            cases.extend(theorem_cases(m, n, flavor, mode, budget))
    return IdentityReport(
        "theorem",
        f"0<=m<={m_max}, 0<=n<={n_max}, flavor={flavor}, mode={mode}",
        tuple(cases),
    )


def recursion_cases(m: int, n: int) -> list[CaseResult]:
    """Both Pascal-style splits at one (m, n) with m, n >= 1, expanded via the
    quotient route so the check is independent of the recursion memos."""
    if m < 1 or n < 1:
        raise DomainError("the coefficient splits need m, n >= 1")
    total = m + n
    lhs = via_quotient(total, m)
    upper_left = via_quotient(total - 1, m - 1)
    upper_right = via_quotient(total - 1, n - 1)
    rhs_fib = lucas_F(n + 1) * upper_left + T * lucas_F(m - 1) * upper_right
    rhs_luc = lucas_L(n) * upper_left + lucas_L(m) * upper_right
    return [
        CaseResult(
            key=("rec-fib", m, n),
            label=f"rec-fib m={m} n={n}",
            passed=lhs == rhs_fib,
            lhs=lhs,
            rhs=rhs_fib,
        ),
        CaseResult(
            key=("rec-luc", m, n),
            label=f"rec-luc doubled m={m} n={n}",
            passed=lhs * 2 == rhs_luc,
            lhs=lhs * 2,
            rhs=rhs_luc,
        ),
    ]


def recursion_task_cases(m: int, n: int) -> list[CaseResult]:
    """All recursion and index-addition cases at one (m, n)."""
    out = []
    if m >= 1 and n >= 1:
        out.extend(recursion_cases(m, n))
    if m >= 1 and n >= 0:
        out.extend(check_lemma1(m, n).cases)
    return out


def verify_recursions(total_max: int) -> IdentityReport:
    """Both coefficient splits plus the index-addition identities for every
    admissible (m, n) with m + n <= total_max."""
    cases: list[CaseResult] = []
    for m in range(1, total_max + 1):
        for n in range(total_max - m + 1):
            cases.extend(recursion_task_cases(m, n))
    return IdentityReport(
        "recursions", f"m>=1, n>=0, m+n<={total_max}", tuple(cases)
    )
