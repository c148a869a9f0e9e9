"""Half-open simplicial cones and their rational generating functions.

A cone is given by a rational apex, linearly independent integer generators,
and one openness flag per generator (an open flag removes the facet opposite
that generator, i.e. the generator's coefficient ranges over (0, 1] instead
of [0, 1) inside the fundamental parallelepiped).

The generating function of the cone's integer points is the sum of monomials
over the fundamental-parallelepiped points divided by one factor
``(1 - z^v)`` per generator ``v``.  :class:`RationalGF` keeps exactly that
shape: an explicit numerator over a multiset of denominator monomials, with
equality decided by cross-multiplication and never by cancellation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DegenerateSubstitutionError,
    NonExpandableError,
    ParityError,
    UsageError,
)
from .polynomial import Exponents, LaurentPoly, VariableContext, substitute_monomials


def _solve_exact(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Solve ``sum_j lam_j * columns[j] = target`` exactly, or return None.

    The columns must be linearly independent; inconsistency (target outside
    their span) returns None.
    """
    rows = len(target)
    k = len(columns)
    mat = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(rows)]
    pivots = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, rows) if mat[i][col] != 0), None)
        if pivot is None:
            return None  # dependent columns; constructor should have rejected
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, rows):
        if mat[i][k] != 0:
            return None
    return tuple(mat[i][k] for i in range(k))


def _rank(columns: Sequence[Sequence[int]], dim: int) -> int:
    mat = [[Fraction(columns[j][i]) for j in range(len(columns))] for i in range(dim)]
    rank = 0
    for col in range(len(columns)):
        pivot = next((i for i in range(rank, dim) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(dim):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col] / mat[rank][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _det(matrix: List[List[int]]) -> int:
    """Integer determinant by fraction-free Gaussian elimination (Bareiss)."""
    mat = [row[:] for row in matrix]
    n = len(mat)
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                mat[i][j] = (mat[i][j] * mat[col][col] - mat[i][col] * mat[col][j]) // prev
        prev = mat[col][col]
    return sign * mat[n - 1][n - 1]


@dataclass(frozen=True)
class HalfOpenCone:
    dim: int
    apex: Tuple[Fraction, ...]
    generators: Tuple[Exponents, ...]
    open_flags: Tuple[bool, ...]

    def __init__(
        self,
        dim: int,
        apex: Sequence,
        generators: Sequence[Sequence[int]],
        open_flags: Optional[Sequence[bool]] = None,
    ):
        apex = tuple(Fraction(x) for x in apex)
        generators = tuple(tuple(int(x) for x in g) for g in generators)
        if open_flags is None:
            open_flags = (False,) * len(generators)
        open_flags = tuple(bool(f) for f in open_flags)
        if len(apex) != dim:
            raise UsageError(f"apex has length {len(apex)}, expected {dim}")
        if any(len(g) != dim for g in generators):
            raise UsageError("generator length does not match dimension")
        if len(open_flags) != len(generators):
            raise UsageError("need one open flag per generator")
        if not generators:
            raise UsageError("cone needs at least one generator")
        if len(generators) > dim or _rank(generators, dim) != len(generators):
            raise UsageError(f"generators {generators} are not linearly independent")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "open_flags", open_flags)

    @property
    def k(self) -> int:
        return len(self.generators)


def lattice_index(cone: HalfOpenCone) -> int:
    """Index of the lattice spanned by the generators inside its saturation.

    Full-dimensional cones: absolute determinant.  Lower-dimensional ones:
    gcd of the absolute values of all maximal minors.
    """
    k, d = cone.k, cone.dim
    if k == d:
        return abs(_det([[cone.generators[j][i] for j in range(k)] for i in range(d)]))
    value = 0
    for rows in itertools.combinations(range(d), k):
        minor = _det([[cone.generators[j][i] for j in range(k)] for i in rows])
        value = gcd(value, abs(minor))
    return value


def is_unimodular(cone: HalfOpenCone) -> bool:
    return lattice_index(cone) == 1


def parallelepiped_points(cone: HalfOpenCone) -> List[Exponents]:
    """Integer points of the fundamental parallelepiped, sorted.

    A point qualifies when ``p - apex = sum lam_j v_j`` with each coefficient
    in [0, 1) for a closed generator and (0, 1] for an open one.  Candidates
    are drawn from the integer bounding box of the closed parallelepiped.
    """
    d = cone.dim
    points = []
    ranges = []
    for i in range(d):
        lo = cone.apex[i] + sum(min(0, g[i]) for g in cone.generators)
        hi = cone.apex[i] + sum(max(0, g[i]) for g in cone.generators)
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    for candidate in itertools.product(*ranges):
        target = [Fraction(candidate[i]) - cone.apex[i] for i in range(d)]
        lams = _solve_exact(cone.generators, target)
        if lams is None:
            continue
        ok = True
        for lam, is_open in zip(lams, cone.open_flags):
            if is_open:
                if not (0 < lam <= 1):
                    ok = False
                    break
            elif not (0 <= lam < 1):
                ok = False
                break
        if ok:
            points.append(tuple(candidate))
    points.sort()
    return points


@dataclass(frozen=True)
class RationalGF:
    """Numerator polynomial over a multiset of ``(1 - z^m)`` factors."""

    context: VariableContext
    numerator: LaurentPoly
    denominator: Tuple[Exponents, ...]

    def __init__(self, context: VariableContext, numerator: LaurentPoly, denominator: Iterable[Sequence[int]]):
        if numerator.context != context:
            raise UsageError("numerator context does not match the GF context")
        factors = tuple(sorted(tuple(int(x) for x in m) for m in denominator))
        zero = (0,) * len(context)
        if any(m == zero for m in factors):
            raise UsageError("denominator factor (1 - z^0) is zero")
        if any(len(m) != len(context) for m in factors):
            raise UsageError("denominator monomial length does not match context")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", factors)

    def denominator_poly(self) -> LaurentPoly:
        out = LaurentPoly.constant(self.context, 1)
        for m in self.denominator:
            out = out * _one_minus(self.context, m)
        return out


def _one_minus(context: VariableContext, monomial: Exponents) -> LaurentPoly:
    one = (0,) * len(context)
    return LaurentPoly(context, {one: 1, tuple(monomial): -1})


def integer_point_transform(cone: HalfOpenCone, context: VariableContext) -> RationalGF:
    """Generating function of the cone's integer points."""
    if len(context) != cone.dim:
        raise UsageError(f"context size {len(context)} != cone dimension {cone.dim}")
    numerator = LaurentPoly(context, {p: 1 for p in parallelepiped_points(cone)})
    return RationalGF(context, numerator, cone.generators)


def _multiset_diff(big: Tuple[Exponents, ...], small: Tuple[Exponents, ...]) -> List[Exponents]:
    remaining = list(big)
    for m in small:
        remaining.remove(m)
    return remaining


def _multiset_union(a: Tuple[Exponents, ...], b: Tuple[Exponents, ...]) -> List[Exponents]:
    union: Dict[Exponents, int] = {}
    for m in a:
        union[m] = union.get(m, 0) + 1
    other: Dict[Exponents, int] = {}
    for m in b:
        other[m] = other.get(m, 0) + 1
    for m, c in other.items():
        union[m] = max(union.get(m, 0), c)
    out: List[Exponents] = []
    for m, c in union.items():
        out.extend([m] * c)
    return sorted(out)


def _multiset_intersection(a: Tuple[Exponents, ...], b: Tuple[Exponents, ...]) -> List[Exponents]:
    counts: Dict[Exponents, int] = {}
    for m in a:
        counts[m] = counts.get(m, 0) + 1
    out: List[Exponents] = []
    for m in b:
        if counts.get(m, 0) > 0:
            counts[m] -= 1
            out.append(m)
    return sorted(out)


def gf_arith(lhs: RationalGF, rhs: RationalGF, op: str) -> RationalGF:
    """Add or subtract over the least common multiset of denominators."""
    if lhs.context != rhs.context:
        raise UsageError("context mismatch between generating functions")
    if op not in ("add", "sub"):
        raise UsageError(f"unknown op {op!r}")
    common = tuple(_multiset_union(lhs.denominator, rhs.denominator))
    left = lhs.numerator
    for m in _multiset_diff(common, lhs.denominator):
        left = left * _one_minus(lhs.context, m)
    right = rhs.numerator
    for m in _multiset_diff(common, rhs.denominator):
        right = right * _one_minus(lhs.context, m)
    numerator = left + right if op == "add" else left - right
    return RationalGF(lhs.context, numerator, common)


def gf_neg(g: RationalGF) -> RationalGF:
    return RationalGF(g.context, -g.numerator, g.denominator)


def gf_substitute(
    g: RationalGF, target: VariableContext, images: Mapping[str, Sequence[int]]
) -> RationalGF:
    """Apply a monomial substitution to numerator and denominator alike."""
    numerator = substitute_monomials(g.numerator, target, images)
    table = {name: tuple(images[name]) for name in g.context.names}
    zero = (0,) * len(target)
    factors = []
    for m in g.denominator:
        vec = [0] * len(target)
        for e, name in zip(m, g.context.names):
            if e:
                image = table[name]
                for i, ei in enumerate(image):
                    vec[i] += e * ei
        vec = tuple(vec)
        if vec == zero:
            raise DegenerateSubstitutionError(
                f"denominator factor {m} maps to the zero exponent vector"
            )
        factors.append(vec)
    return RationalGF(target, numerator, factors)


def gf_equals(lhs: RationalGF, rhs: RationalGF) -> bool:
    """Exact equality by cross-multiplication, after cancelling shared factors."""
    if lhs.context != rhs.context:
        raise UsageError("context mismatch between generating functions")
    shared = _multiset_intersection(lhs.denominator, rhs.denominator)
    left = lhs.numerator
    for m in _multiset_diff(rhs.denominator, tuple(shared)):
        left = left * _one_minus(lhs.context, m)
    right = rhs.numerator
    for m in _multiset_diff(lhs.denominator, tuple(shared)):
        right = right * _one_minus(lhs.context, m)
    return left == right


def _weight_of(monomial: Exponents, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(monomial, weights))


def series_expand(g: RationalGF, weights: Mapping[str, int], bound: int) -> LaurentPoly:
    """Truncate the power series of ``g`` to terms of weight <= bound.

    Weights are nonnegative integers per variable (absent names weigh 0).
    Every denominator factor must have positive total weight; every numerator
    term must have nonnegative weight, so truncation is exact.
    """
    ctx = g.context
    wvec = [int(weights.get(name, 0)) for name in ctx.names]
    if any(w < 0 for w in wvec):
        raise UsageError("weights must be nonnegative")
    for m in g.denominator:
        if _weight_of(m, wvec) <= 0:
            raise NonExpandableError(f"denominator factor {m} has nonpositive weight")
    result: Dict[Exponents, int] = {}
    for exps, coef in g.numerator.terms.items():
        w = _weight_of(exps, wvec)
        if w < 0:
            raise NonExpandableError("numerator term with negative weight")
        if w <= bound:
            result[exps] = coef
    # multiply in the geometric series of each factor, heaviest first
    for m in sorted(g.denominator, key=lambda mm: -_weight_of(mm, wvec)):
        wm = _weight_of(m, wvec)
        powers = []
        shift = tuple(0 for _ in m)
        total = 0
        while total <= bound:
            powers.append(shift)
            shift = tuple(s + e for s, e in zip(shift, m))
            total += wm
        new: Dict[Exponents, int] = {}
        for exps, coef in result.items():
            base_w = _weight_of(exps, wvec)
            for p in powers:
                w = base_w + _weight_of(p, wvec)
                if w > bound:
                    break
                key = tuple(a + b for a, b in zip(exps, p))
                val = new.get(key, 0) + coef
                if val:
                    new[key] = val
                else:
                    del new[key]
        result = new
    return LaurentPoly(ctx, result)


def gf_extract_parity(g: RationalGF, name: str, parity: str) -> RationalGF:
    """Restrict the numerator to terms of even or odd exponent in ``name``.

    Only sound when the variable occurs with even exponents in every
    denominator factor, so that denominator expansion cannot change parity.
    """
    if parity not in ("even", "odd"):
        raise UsageError(f"parity must be 'even' or 'odd', not {parity!r}")
    idx = g.context.index(name)
    for m in g.denominator:
        if m[idx] % 2 != 0:
            raise ParityError(f"denominator factor {m} is odd in {name!r}")
    want = 0 if parity == "even" else 1
    terms = {e: c for e, c in g.numerator.terms.items() if e[idx] % 2 == want}
    return RationalGF(g.context, LaurentPoly(g.context, terms), g.denominator)


# -- plain-text cone files ----------------------------------------------------
#
# dim 4
# apex -1/2 0 -1 -1/2
# gen open 1 0 0 3
# gen closed 1 0 2 0


def parse_cone(text: str) -> HalfOpenCone:
    dim: Optional[int] = None
    apex: Optional[Tuple[Fraction, ...]] = None
    generators: List[Tuple[int, ...]] = []
    flags: List[bool] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        directive, args = tokens[0], tokens[1:]
        if directive == "dim":
            if len(args) != 1 or not args[0].isdigit():
                raise UsageError(f"line {lineno}: dim needs one positive integer")
            dim = int(args[0])
        elif directive == "apex":
            if dim is None:
                raise UsageError(f"line {lineno}: apex before dim")
            if len(args) != dim:
                raise UsageError(f"line {lineno}: apex needs {dim} entries")
            try:
                apex = tuple(Fraction(a) for a in args)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"line {lineno}: bad apex entry ({exc})") from None
        elif directive == "gen":
            if dim is None:
                raise UsageError(f"line {lineno}: gen before dim")
            if not args or args[0] not in ("closed", "open"):
                raise UsageError(f"line {lineno}: gen needs 'closed' or 'open'")
            if len(args) != dim + 1:
                raise UsageError(f"line {lineno}: gen needs {dim} coordinates")
            try:
                generators.append(tuple(int(a) for a in args[1:]))
            except ValueError:
                raise UsageError(f"line {lineno}: generator entries must be integers") from None
            flags.append(args[0] == "open")
        else:
            raise UsageError(f"line {lineno}: unknown directive {directive!r}")
    if dim is None:
        raise UsageError("cone file is missing a dim line")
    if apex is None:
        apex = (Fraction(0),) * dim
    if not generators:
        raise UsageError("cone file has no generators")
    return HalfOpenCone(dim, apex, generators, flags)
