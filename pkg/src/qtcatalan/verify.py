"""Brute-force oracles and cross-checks for the generating-function catalog.

Everything here is independent of the cone machinery: polynomials are built
by enumerating paths and applying the rank-tableau algorithm, so they can
arbitrate both the closed-form statistics and the assembled series.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .catalog import assemble_theorem, printed_theorem
from .cones import RationalGF, gf_equals, gf_substitute, series_expand
from .errors import DomainError, InternalInvariantError, UsageError
from .paths import (
    DyckPath,
    KVector,
    closed_stats_k4,
    closed_stats_kaaa,
    closed_stats_three,
    enumerate_paths,
    path_stats,
)
from .polynomial import QT_CONTEXT, LaurentPoly, VariableContext, coefficient_grid

Q_CONTEXT = VariableContext(("q",))


def refined_catalan(parts: Sequence[int]) -> LaurentPoly:
    """Sum of q^area t^bounce over all paths with the given run lengths."""
    total: Dict[Tuple[int, int], int] = {}
    for path in enumerate_paths(KVector(parts)):
        stats = path_stats(path)
        key = (stats.area, stats.bounce)
        total[key] = total.get(key, 0) + 1
    return LaurentPoly(QT_CONTEXT, total)


def lambda_catalan(partition: Sequence[int]) -> LaurentPoly:
    """Sum of :func:`refined_catalan` over all distinct rearrangements."""
    partition = tuple(int(p) for p in partition)
    if any(p < 1 for p in partition) or list(partition) != sorted(partition, reverse=True):
        raise DomainError(f"{partition} is not a partition (weakly decreasing, positive)")
    total = LaurentPoly.zero(QT_CONTEXT)
    for arrangement in sorted(set(itertools.permutations(partition))):
        total = total + refined_catalan(arrangement)
    return total


@dataclass(frozen=True)
class SymmetryReport:
    subject: Tuple[int, ...]
    symmetric: bool
    # ((i, j), coefficient of q^i t^j, coefficient of q^j t^i) for the
    # lexicographically smallest witness with i < j, when asymmetric
    witness: Optional[Tuple[Tuple[int, int], int, int]]

    def witness_line(self) -> str:
        if self.witness is None:
            return "symmetric"
        (i, j), cij, cji = self.witness
        return f"q^{j}*t^{i}={cji} vs q^{i}*t^{j}={cij}"


def _symmetry_witness(poly: LaurentPoly) -> Optional[Tuple[Tuple[int, int], int, int]]:
    grid = coefficient_grid(poly)
    size = max(len(grid), len(grid[0]))

    def cell(i: int, j: int) -> int:
        if i < len(grid) and j < len(grid[0]):
            return grid[i][j]
        return 0

    for i in range(size):
        for j in range(i + 1, size):
            cij, cji = cell(i, j), cell(j, i)
            if cij != cji:
                return ((i, j), cij, cji)
    return None


def symmetry_report(parts: Sequence[int], poly: Optional[LaurentPoly] = None) -> SymmetryReport:
    if poly is None:
        poly = refined_catalan(parts)
    witness = _symmetry_witness(poly)
    return SymmetryReport(subject=tuple(parts), symmetric=witness is None, witness=witness)


def symmetry_scan(family: Iterable[Sequence[int]]) -> List[SymmetryReport]:
    """One report per member, in the family's own order."""
    return [symmetry_report(parts) for parts in family]


def kvectors_of_length(length: int, max_part: int) -> List[Tuple[int, ...]]:
    return [tuple(v) for v in itertools.product(range(1, max_part + 1), repeat=length)]


def repeated_tail_vectors(max_value: int, lengths: Sequence[int]) -> List[Tuple[int, ...]]:
    """Vectors (k, a, a, ..., a) for 1 <= k, a <= max_value."""
    out = []
    for length in lengths:
        if length < 2:
            raise UsageError("repeated-tail vectors need length >= 2")
        for k in range(1, max_value + 1):
            for a in range(1, max_value + 1):
                out.append((k,) + (a,) * (length - 1))
    return out


def check_last_param(prefix: Sequence[int], m: int, l: int) -> bool:
    """Whether replacing the last run length m by l leaves the polynomial fixed."""
    prefix = tuple(prefix)
    return refined_catalan(prefix + (m,)) == refined_catalan(prefix + (l,))


# -- closed-form vs algorithm agreement ---------------------------------------


def _family_vectors(family: str, bound: int) -> List[Tuple[int, ...]]:
    if family == "three":
        return kvectors_of_length(3, bound)
    if family == "k4":
        return [(k,) * 4 for k in range(1, bound + 1)]
    if family == "kaaa":
        return [
            (k,) + (k + m,) * 3
            for k in range(1, bound + 1)
            for m in range(0, bound - k + 1)
        ]
    raise UsageError(f"unknown family {family!r}")


def _closed_form_stats(family: str, path: DyckPath) -> Tuple[int, int]:
    parts, ranks = path.kvec.parts, path.ranks
    if family == "three":
        return closed_stats_three(*parts, ranks[1], ranks[2])
    if family == "k4":
        k = parts[0]
        a = k - ranks[1]
        b = 2 * k - a - ranks[2]
        c = 3 * k - a - b - ranks[3]
        return closed_stats_k4(k, a, b, c)
    k, km = parts[0], parts[1]
    m = km - k
    a = k - ranks[1]
    b = 2 * k + m - a - ranks[2]
    c = 3 * k + 2 * m - a - b - ranks[3]
    return closed_stats_kaaa(k, m, a, b, c)


def check_bounce_agreement(family: str, bound: int) -> bool:
    """Exhaustively compare the tableau algorithm against the closed form.

    Raises :class:`InternalInvariantError` describing the first disagreement;
    a disagreement means one of the two implementations is wrong.
    """
    for parts in _family_vectors(family, bound):
        for path in enumerate_paths(KVector(parts)):
            got = path_stats(path)
            expected = _closed_form_stats(family, path)
            if (got.area, got.bounce) != expected:
                raise InternalInvariantError(
                    f"stats disagree on runs {parts} ranks {path.ranks}: "
                    f"algorithm gives {(got.area, got.bounce)}, closed form {expected}"
                )
    return True


# -- theorem verification -------------------------------------------------------


def gf_qt_swap(g: RationalGF) -> RationalGF:
    """Exchange q and t throughout a generating function."""
    ctx = g.context
    images = {}
    for name in ctx.names:
        if name == "q":
            images[name] = ctx.monomial(t=1)
        elif name == "t":
            images[name] = ctx.monomial(q=1)
        else:
            images[name] = ctx.monomial(**{name: 1})
    return gf_substitute(g, ctx, images)


def _brute_series_cases(family: str, bound: int) -> List[Tuple[Dict[str, int], Tuple[int, ...]]]:
    """(size-variable assignment, run-length vector) pairs to compare."""
    cases = []
    if family == "three":
        for k1 in range(1, bound + 1):
            for k2 in range(1, bound + 1 - k1):
                for k3 in range(1, bound + 1 - k1 - k2):
                    cases.append(({"x1": k1, "x2": k2, "x3": k3}, (k1, k2, k3)))
    elif family == "k4":
        for k in range(1, bound + 1):
            cases.append(({"x": k}, (k,) * 4))
    elif family == "kaaa":
        for k in range(1, bound + 1):
            for m in range(0, bound - k + 1):
                cases.append(({"x": k, "y": m}, (k,) + (k + m,) * 3))
    else:
        raise UsageError(f"unknown family {family!r}")
    return cases


def _series_weights(family: str) -> Dict[str, int]:
    if family == "three":
        return {"x1": 1, "x2": 1, "x3": 1}
    if family == "k4":
        return {"x": 1}
    return {"x": 1, "y": 1}


@dataclass(frozen=True)
class TheoremReport:
    family: str
    bound: int
    formula_match: bool
    series_match: bool
    symmetric: bool

    @property
    def all_ok(self) -> bool:
        return self.formula_match and self.series_match and self.symmetric


def series_matches_paths(gf: RationalGF, family: str, bound: int) -> bool:
    """Compare series coefficients of ``gf`` against path enumeration."""
    expansion = series_expand(gf, _series_weights(family), bound)
    for assignment, parts in _brute_series_cases(family, bound):
        coefficient = expansion.extract_coefficient(assignment, QT_CONTEXT)
        if coefficient != refined_catalan(parts):
            return False
    return True


def verify_theorem(family: str, bound: int) -> TheoremReport:
    printed = printed_theorem(family)
    assembled = assemble_theorem(family)
    formula_match = gf_equals(assembled, printed)
    series_match = series_matches_paths(printed, family, bound)
    symmetric = gf_equals(printed, gf_qt_swap(printed))
    return TheoremReport(
        family=family,
        bound=bound,
        formula_match=formula_match,
        series_match=series_match,
        symmetric=symmetric,
    )


# -- one-variable specializations ----------------------------------------------


def _q_poly(coeffs: Sequence[int]) -> LaurentPoly:
    return LaurentPoly(Q_CONTEXT, {(i,): c for i, c in enumerate(coeffs) if c})


def _dense(poly: LaurentPoly) -> List[int]:
    if poly.is_zero():
        return [0]
    exps = [e[0] for e in poly.terms]
    if min(exps) < 0:
        raise UsageError("expected a polynomial with nonnegative exponents")
    out = [0] * (max(exps) + 1)
    for (e,), c in poly.terms.items():
        out[e] = c
    return out


def _divexact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact univariate division in q; nonzero remainder is an error."""
    n, d = _dense(num), _dense(den)
    while d and d[-1] == 0:
        d.pop()
    if not d:
        raise UsageError("division by the zero polynomial")
    q = [0] * (max(len(n) - len(d) + 1, 0))
    rem = n[:]
    for i in range(len(q) - 1, -1, -1):
        head = rem[i + len(d) - 1]
        if head % d[-1] != 0:
            raise InternalInvariantError("division is not exact")
        factor = head // d[-1]
        q[i] = factor
        if factor:
            for j, dj in enumerate(d):
                rem[i + j] -= factor * dj
    if any(rem):
        raise InternalInvariantError("division left a remainder")
    return _q_poly(q)


def q_integer(n: int) -> LaurentPoly:
    return _q_poly([1] * n)


def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient, by exact polynomial division."""
    if not 0 <= k <= n:
        return LaurentPoly.zero(Q_CONTEXT)
    numerator = LaurentPoly.constant(Q_CONTEXT, 1)
    for i in range(n - k + 1, n + 1):
        numerator = numerator * q_integer(i)
    result = numerator
    for i in range(1, k + 1):
        result = _divexact(result, q_integer(i))
    return result


def carlitz_riordan(n: int) -> LaurentPoly:
    """q-Catalan polynomial from the weighted recurrence."""
    polys = [LaurentPoly.constant(Q_CONTEXT, 1)]
    for size in range(1, n + 1):
        total = LaurentPoly.zero(Q_CONTEXT)
        for k in range(1, size + 1):
            term = polys[k - 1] * polys[size - k]
            total = total + LaurentPoly.monomial(Q_CONTEXT, (k - 1,)) * term
        polys.append(total)
    return polys[n]


def macmahon_q_catalan(n: int) -> LaurentPoly:
    return _divexact(q_binomial(2 * n, n), q_integer(n + 1))


def _specialize_qt(poly: LaurentPoly, q_image: Tuple[int], t_image: Tuple[int]) -> LaurentPoly:
    from .polynomial import substitute_monomials

    return substitute_monomials(poly, Q_CONTEXT, {"q": q_image, "t": t_image})


def check_q_specializations(n: int) -> bool:
    """Classical one-variable identities for runs (1, 1, ..., 1) of length n."""
    if n < 1:
        raise DomainError("n must be positive")
    cn = refined_catalan((1,) * n)
    at_t1 = _specialize_qt(cn, (1,), (0,))
    at_q1 = _specialize_qt(cn, (0,), (1,))
    if at_t1 != carlitz_riordan(n):
        return False
    if at_t1 != at_q1:
        return False
    inverted = _specialize_qt(cn, (1,), (-1,))
    shifted = LaurentPoly.monomial(Q_CONTEXT, (comb(n, 2),)) * inverted
    return shifted == macmahon_q_catalan(n)
