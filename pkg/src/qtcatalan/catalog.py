"""Case catalogs that assemble the three product-formula generating functions.

Each supported shape family (three free run lengths; four equal runs; one
short run followed by three equal longer runs) comes with a fixed list of
:class:`CaseSpec` entries.  A case records, as literal data:

* the region of path coordinates it covers (affine inequalities plus an
  optional parity constraint),
* a realization of that region's lattice points, either a
  :class:`~.cones.HalfOpenCone` or an explicit :class:`LatticePiece`
  (signed base points over a free generator set),
* how to map lattice points to generating-function monomials, either a
  monomial substitution or pointwise through the family's closed-form
  statistics,
* optional correction pieces (e.g. removal of a spurious boundary slice).

:func:`assemble_case` turns one case into a rational generating function and
:func:`assemble_theorem` sums a family, specializing marking variables to 1,
which the verification layer compares against the transcribed product
formulas from :func:`printed_theorem`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .cones import (
    HalfOpenCone,
    RationalGF,
    gf_arith,
    gf_extract_parity,
    gf_substitute,
    integer_point_transform,
    parallelepiped_points,
)
from .errors import InternalInvariantError, UsageError
from .paths import stats_k4, stats_kaaa, stats_three
from .polynomial import Exponents, LaurentPoly, VariableContext

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Constraint:
    """Affine condition ``const + sum coeff * coordinate  (>=, >, ==)  0``."""

    coeffs: Tuple[Tuple[str, Fraction], ...]
    const: Fraction
    op: str

    def value(self, point: Mapping[str, int]) -> Fraction:
        return self.const + sum(c * point[name] for name, c in self.coeffs)

    def holds(self, point: Mapping[str, int]) -> bool:
        v = self.value(point)
        if self.op == "ge":
            return v >= 0
        if self.op == "gt":
            return v > 0
        return v == 0


def _constraint(op: str, const=0, **coeffs) -> Constraint:
    items = tuple(sorted((name, Fraction(c)) for name, c in coeffs.items() if c))
    return Constraint(items, Fraction(const), op)


def _ge(const=0, **coeffs) -> Constraint:
    return _constraint("ge", const, **coeffs)


def _gt(const=0, **coeffs) -> Constraint:
    return _constraint("gt", const, **coeffs)


def _eq(const=0, **coeffs) -> Constraint:
    return _constraint("eq", const, **coeffs)


@dataclass(frozen=True)
class LatticePiece:
    """Signed base points over a free commutative monoid of generators.

    Enumerates ``base + N v_1 + ... + N v_r`` for each base, with the base's
    sign as multiplicity.  This covers both fundamental-parallelepiped
    decompositions and correction slices.
    """

    bases: Tuple[Tuple[int, Point], ...]
    generators: Tuple[Point, ...]


Realization = Union[HalfOpenCone, LatticePiece]


@dataclass(frozen=True)
class CaseSpec:
    case_id: str
    family: str
    region: Tuple[Constraint, ...]
    realization: Realization
    parity: Optional[Tuple[str, str]] = None  # (coordinate, "even"|"odd")
    corrections: Tuple[Tuple[int, LatticePiece], ...] = ()
    subst: Optional[Tuple[Tuple[str, Exponents], ...]] = None  # None = pointwise
    sign: int = 1


@dataclass(frozen=True)
class FamilyInfo:
    name: str
    coords: Tuple[str, ...]
    zctx: VariableContext
    out_ctx: VariableContext
    theorem_ctx: VariableContext
    stats: Callable[..., Tuple[int, int]]
    # marking specialization applied when assembling the theorem; None = identity
    specialize: Optional[Tuple[Tuple[str, Exponents], ...]]

    def out_exponents(self, point: Point) -> Exponents:
        """Image of a lattice point: marks, then q^area t^bounce."""
        area, bounce = self.stats(*point)
        marks = len(self.out_ctx) - 2
        return tuple(point[:marks]) + (area, bounce)


THREE_OUT = VariableContext(("x1", "x2", "x3", "q", "t"))
K4_OUT = VariableContext(("x", "y1", "y2", "y3", "q", "t"))
K4_THEOREM = VariableContext(("x", "q", "t"))
KAAA_OUT = VariableContext(("x", "y", "z1", "z2", "z3", "q", "t"))
KAAA_THEOREM = VariableContext(("x", "y", "q", "t"))

FAMILIES: Dict[str, FamilyInfo] = {
    "three": FamilyInfo(
        name="three",
        coords=("k1", "k2", "k3", "r2", "r3"),
        zctx=VariableContext(("z1", "z2", "z3", "w2", "w3")),
        out_ctx=THREE_OUT,
        theorem_ctx=THREE_OUT,
        stats=stats_three,
        specialize=None,
    ),
    "k4": FamilyInfo(
        name="k4",
        coords=("k", "a", "b", "c"),
        zctx=VariableContext(("y", "z1", "z2", "z3")),
        out_ctx=K4_OUT,
        theorem_ctx=K4_THEOREM,
        stats=stats_k4,
        specialize=(
            ("x", K4_THEOREM.monomial(x=1)),
            ("y1", K4_THEOREM.monomial()),
            ("y2", K4_THEOREM.monomial()),
            ("y3", K4_THEOREM.monomial()),
            ("q", K4_THEOREM.monomial(q=1)),
            ("t", K4_THEOREM.monomial(t=1)),
        ),
    ),
    "kaaa": FamilyInfo(
        name="kaaa",
        coords=("k", "m", "a", "b", "c"),
        zctx=VariableContext(("k", "m", "a", "b", "c")),
        out_ctx=KAAA_OUT,
        theorem_ctx=KAAA_THEOREM,
        stats=stats_kaaa,
        specialize=(
            ("x", KAAA_THEOREM.monomial(x=1)),
            ("y", KAAA_THEOREM.monomial(y=1)),
            ("z1", KAAA_THEOREM.monomial()),
            ("z2", KAAA_THEOREM.monomial()),
            ("z3", KAAA_THEOREM.monomial()),
            ("q", KAAA_THEOREM.monomial(q=1)),
            ("t", KAAA_THEOREM.monomial(t=1)),
        ),
    ),
}


# -- family "three": coordinates (k1, k2, k3, r2, r3) -------------------------

_THREE_BASE = (
    _ge(k1=1),
    _ge(k2=1),
    _ge(k3=1),
    _ge(r2=1),
    _ge(k1=1, r2=-1),
    _ge(r3=1),
    _ge(r2=1, k2=1, r3=-1),
)

_E1 = (1, 0, 0, 0, 0)
_E2 = (0, 1, 0, 0, 0)
_E3 = (0, 0, 1, 0, 0)
_U = (1, 0, 0, 1, 0)
_S = (1, 0, 0, 1, 1)
_G = (1, 1, 0, 1, 0)
_H = (0, 1, 0, 0, 1)

_THREE_SUBST_C1 = (
    ("z1", THREE_OUT.monomial(x1=1, t=2)),
    ("z2", THREE_OUT.monomial(x2=1)),
    ("z3", THREE_OUT.monomial(x3=1)),
    ("w2", THREE_OUT.monomial(q=1, t=-1)),
    ("w3", THREE_OUT.monomial(q=1, t=-1)),
)

_THREE_SUBST_C2 = (
    ("z1", THREE_OUT.monomial(x1=1, t=2)),
    ("z2", THREE_OUT.monomial(x2=1, t=1)),
    ("z3", THREE_OUT.monomial(x3=1)),
    ("w2", THREE_OUT.monomial(q=1, t=-2)),
    ("w3", THREE_OUT.monomial(q=1, t=-1)),
)


def _three_cases() -> Tuple[CaseSpec, ...]:
    c3_gens = (_E1, _E3, _G, _S, _H)
    return (
        CaseSpec(
            case_id="three.C1",
            family="three",
            region=_THREE_BASE + (_ge(r2=1, k2=-1, r3=-1), _ge(r2=1, k2=-1)),
            realization=HalfOpenCone(5, (0,) * 5, (_E1, _E3, _U, _S, _G)),
            subst=_THREE_SUBST_C1,
        ),
        CaseSpec(
            case_id="three.C2",
            family="three",
            # gap condition relative to r2, the smaller side here
            region=_THREE_BASE + (_ge(k2=1, r2=-1, r3=-1), _ge(k2=1, r2=-1)),
            realization=HalfOpenCone(5, (0,) * 5, (_E1, _E2, _E3, _G, _H)),
            subst=_THREE_SUBST_C2,
        ),
        CaseSpec(
            case_id="three.C3A",
            family="three",
            region=_THREE_BASE + (_gt(k2=1, r2=-1, r3=1), _gt(r2=1, k2=-1, r3=1)),
            realization=LatticePiece(bases=((1, (1, 1, 0, 1, 2)),), generators=c3_gens),
        ),
        CaseSpec(
            case_id="three.C3B",
            family="three",
            region=_THREE_BASE + (_gt(k2=1, r2=-1, r3=1), _gt(r2=1, k2=-1, r3=1)),
            realization=LatticePiece(bases=((1, (1, 1, 0, 1, 1)),), generators=c3_gens),
        ),
        CaseSpec(
            case_id="three.overlap",
            family="three",
            region=_THREE_BASE + (_eq(r2=1, k2=-1), _eq(r3=1)),
            realization=HalfOpenCone(5, (0,) * 5, (_E1, _E3, _G)),
            subst=_THREE_SUBST_C1,
            sign=-1,
        ),
    )


# -- family "k4": coordinates (k, a, b, c) ------------------------------------

_V1 = (1, 0, 2, 0)
_V2 = (1, 0, 0, 0)
_V3 = (1, 1, 0, 0)
_V4 = (1, 1, 1, 0)
_V5 = (1, 1, 1, 1)
_V6 = (1, 0, 2, 1)
_V7 = (1, 0, 0, 3)
_V8 = (1, 1, 0, 2)

_K4_BASE = (
    _ge(a=1),
    _ge(k=1, a=-1),
    _ge(b=1),
    _ge(k=2, a=-1, b=-1),
    _ge(c=1),
    _ge(k=3, a=-1, b=-1, c=-1),
)

_K4_PART1 = _ge(b=1, k=-2, a=2)  # b >= 2k - 2a
_K4_PART23 = _gt(k=2, a=-2, b=-1)  # b < 2k - 2a

_K4_SUBST_P1C1 = (
    ("y", K4_OUT.monomial(x=1, q=6, t=-4)),
    ("z1", K4_OUT.monomial(y1=1, q=-3, t=6)),
    ("z2", K4_OUT.monomial(y2=1, q=-2, t=3)),
    ("z3", K4_OUT.monomial(y3=1, q=-1, t=1)),
)

_K4_SUBST_P2C1 = (
    ("y", K4_OUT.monomial(x=1, q=6, t=-2)),
    ("z1", K4_OUT.monomial(y1=1, q=-3, t=4)),
    ("z2", K4_OUT.monomial(y2=1, q=-2, t=2)),
    ("z3", K4_OUT.monomial(y3=1, q=-1, t=1)),
)


def _k4_cases() -> Tuple[CaseSpec, ...]:
    half = Fraction(1, 2)
    return (
        CaseSpec(
            case_id="k4.P1C1A",
            family="k4",
            region=_K4_BASE + (_K4_PART1, _ge(c=1, k=-4, a=2, b=2)),
            realization=HalfOpenCone(4, (0,) * 4, (_V1, _V4, _V6, _V8)),
            subst=_K4_SUBST_P1C1,
        ),
        CaseSpec(
            case_id="k4.P1C1B",
            family="k4",
            region=_K4_BASE + (_K4_PART1, _ge(c=1, k=-4, a=2, b=2)),
            realization=HalfOpenCone(
                4, (0,) * 4, (_V4, _V5, _V6, _V8), (False, True, False, False)
            ),
            subst=_K4_SUBST_P1C1,
        ),
        CaseSpec(
            case_id="k4.P1C2",
            family="k4",
            region=_K4_BASE + (_K4_PART1, _gt(k=4, a=-2, b=-2, c=-1)),
            realization=HalfOpenCone(
                4, (0,) * 4, (_V1, _V3, _V4, _V8), (False, True, False, False)
            ),
        ),
        CaseSpec(
            case_id="k4.P2C1",
            family="k4",
            region=_K4_BASE
            + (_K4_PART23, _ge(c=1, k=-3, a=1, b=Fraction(3, 2))),
            realization=HalfOpenCone(
                4, (0,) * 4, (_V1, _V6, _V7, _V8), (False, False, True, False)
            ),
            parity=("b", "even"),
            subst=_K4_SUBST_P2C1,
        ),
        CaseSpec(
            case_id="k4.P2C2",
            family="k4",
            region=_K4_BASE
            + (
                _K4_PART23,
                _ge(c=1, k=-3, a=3, b=Fraction(3, 2)),
                _gt(k=3, a=-1, b=Fraction(-3, 2), c=-1),
            ),
            realization=HalfOpenCone(
                4, (0,) * 4, (_V1, _V3, _V7, _V8), (False, True, True, False)
            ),
            parity=("b", "even"),
        ),
        CaseSpec(
            case_id="k4.P2C3",
            family="k4",
            region=_K4_BASE + (_K4_PART23, _gt(k=3, a=-3, b=Fraction(-3, 2), c=-1)),
            realization=HalfOpenCone(
                4, (0,) * 4, (_V1, _V2, _V3, _V7), (False, True, False, False)
            ),
            parity=("b", "even"),
        ),
        CaseSpec(
            case_id="k4.P3C1",
            family="k4",
            region=_K4_BASE
            + (_K4_PART23, _ge(const=half, c=1, k=-3, a=1, b=Fraction(3, 2))),
            realization=HalfOpenCone(
                4, (-half, 0, -1, -half), (_V1, _V6, _V7, _V8), (False, False, True, False)
            ),
            parity=("b", "odd"),
            corrections=((-1, LatticePiece(bases=((1, (0, 0, -1, 1)),), generators=(_V7, _V8))),),
        ),
        CaseSpec(
            case_id="k4.P3C2",
            family="k4",
            region=_K4_BASE
            + (
                _K4_PART23,
                _ge(const=half, c=1, k=-3, a=3, b=Fraction(3, 2)),
                _gt(const=-half, k=3, a=-1, b=Fraction(-3, 2), c=-1),
            ),
            realization=HalfOpenCone(
                4, (0, 0, 0, -half), (_V1, _V3, _V7, _V8), (False, True, True, False)
            ),
            parity=("b", "odd"),
        ),
        CaseSpec(
            case_id="k4.P3C3",
            family="k4",
            region=_K4_BASE
            + (_K4_PART23, _gt(const=-half, k=3, a=-3, b=Fraction(-3, 2), c=-1)),
            realization=HalfOpenCone(
                4, (Fraction(1, 6), 0, 0, 0), (_V1, _V2, _V3, _V7), (False, True, False, False)
            ),
            parity=("b", "odd"),
        ),
    )


# -- family "kaaa": coordinates (k, m, a, b, c) --------------------------------
#
# The pieces are reconstructed from the per-case generating functions: each
# denominator factor is a generator, each numerator term a base point, read
# off in the coordinates (k, m, a, b, c).

_W_KA = (1, 0, 1, 0, 0)  # one long-run unit of a
_W_M = (0, 1, 0, 0, 0)
_W_K = (1, 0, 0, 0, 0)
_W_C3 = (1, 0, 0, 0, 3)
_W_MC2 = (0, 1, 0, 0, 2)
_W_B2 = (1, 0, 0, 2, 0)
_W_AC2 = (1, 0, 1, 0, 2)
_W_B2C = (1, 0, 0, 2, 1)
_W_MB = (0, 1, 0, 1, 0)
_W_AB = (1, 0, 1, 1, 0)
_W_MBC = (0, 1, 0, 1, 1)
_W_ABC = (1, 0, 1, 1, 1)

_KAAA_BASE = (
    _ge(m=1),
    _ge(a=1),
    _ge(k=1, a=-1),
    _ge(b=1),
    _ge(k=2, m=1, a=-1, b=-1),
    _ge(c=1),
    _ge(k=3, m=2, a=-1, b=-1, c=-1),
)


def _piece(bases: Sequence[Point], gens: Sequence[Point]) -> LatticePiece:
    return LatticePiece(
        bases=tuple((1, tuple(b)) for b in bases),
        generators=tuple(tuple(g) for g in gens),
    )


def _kaaa_cases() -> Tuple[CaseSpec, ...]:
    in_band = (_gt(b=1), _ge(k=2, a=-2, b=-1))  # 0 < b <= 2(k - a)
    above_band = _gt(b=1, k=-2, a=2)  # b > 2(k - a)
    p1c1 = (_eq(b=1), _eq(c=1))
    p1c2 = (_eq(b=1), _gt(c=1), _ge(k=3, a=-3, c=-1))
    p1c3 = (_eq(b=1), _gt(c=1, k=-3, a=3))
    p2 = in_band + (_eq(c=1),)
    p3c1 = in_band + (_gt(c=1), _ge(k=3, a=-3, b=Fraction(-3, 2), c=-1))
    p3c2 = in_band + (
        _gt(c=1, k=-3, a=3, b=Fraction(3, 2)),
        _ge(k=3, m=2, a=-1, b=Fraction(-3, 2), c=-1),
    )
    p3c3 = in_band + (_gt(c=1, k=-3, m=-2, a=1, b=Fraction(3, 2)),)
    p4c1 = in_band + (
        _ge(const=-1, c=1),
        _ge(const=Fraction(-1, 2), k=3, a=-3, b=Fraction(-3, 2), c=-1),
    )
    p4c2 = in_band + (
        _gt(const=Fraction(1, 2), c=1, k=-3, a=3, b=Fraction(3, 2)),
        _ge(const=Fraction(-1, 2), k=3, m=2, a=-1, b=Fraction(-3, 2), c=-1),
    )
    p4c3 = in_band + (_gt(const=Fraction(1, 2), c=1, k=-3, m=-2, a=1, b=Fraction(3, 2)),)
    p5c1 = (above_band, _ge(k=4, m=2, a=-2, b=-2, c=-1))
    p5c2 = (above_band, _gt(c=1, k=-4, m=-2, a=2, b=2))

    entries = [
        ("kaaa.P1C1", p1c1, None, [(0, 0, 0, 0, 0)], [_W_KA, _W_M, _W_K]),
        (
            "kaaa.P1C2",
            p1c2,
            None,
            [(1, 0, 0, 0, 1), (1, 0, 0, 0, 2), (1, 0, 0, 0, 3)],
            [_W_C3, _W_K, _W_KA, _W_M],
        ),
        (
            "kaaa.P1C3a",
            p1c3,
            None,
            [(0, 1, 0, 0, 1), (0, 1, 0, 0, 2)],
            [_W_C3, _W_M, _W_KA, _W_MC2],
        ),
        (
            "kaaa.P1C3b",
            p1c3,
            None,
            [(1, 0, 1, 0, 1), (1, 0, 1, 0, 2)],
            [_W_C3, _W_KA, _W_AC2, _W_MC2],
        ),
        (
            "kaaa.P2",
            p2,
            None,
            [(1, 0, 0, 1, 0), (1, 0, 0, 2, 0)],
            [_W_KA, _W_M, _W_B2, _W_K],
        ),
        (
            "kaaa.P3C1",
            p3c1,
            ("b", "even"),
            [(2, 0, 0, 2, 1), (2, 0, 0, 2, 2), (2, 0, 0, 2, 3)],
            [_W_M, _W_B2, _W_KA, _W_C3, _W_K],
        ),
        (
            "kaaa.P3C2a",
            p3c2,
            ("b", "even"),
            [(1, 1, 0, 2, 1), (1, 1, 0, 2, 2)],
            [_W_M, _W_MC2, _W_C3, _W_B2, _W_KA],
        ),
        (
            "kaaa.P3C2b",
            p3c2,
            ("b", "even"),
            [(2, 0, 1, 2, 1), (2, 0, 1, 2, 2)],
            [_W_MC2, _W_C3, _W_B2, _W_KA, _W_AC2],
        ),
        (
            "kaaa.P3C3",
            p3c3,
            ("b", "even"),
            [(1, 0, 0, 2, 1)],
            [_W_C3, _W_MC2, _W_AC2, _W_B2, _W_B2C],
        ),
        (
            "kaaa.P4C1",
            p4c1,
            ("b", "odd"),
            [(1, 0, 0, 1, 1), (2, 0, 0, 1, 2), (2, 0, 0, 1, 3)],
            [_W_M, _W_B2, _W_KA, _W_C3, _W_K],
        ),
        (
            "kaaa.P4C2a",
            p4c2,
            ("b", "odd"),
            [(1, 1, 0, 1, 2), (1, 1, 0, 1, 3)],
            [_W_C3, _W_B2, _W_MC2, _W_KA, _W_M],
        ),
        (
            "kaaa.P4C2b",
            p4c2,
            ("b", "odd"),
            [(2, 0, 1, 1, 2), (2, 0, 1, 1, 3)],
            [_W_C3, _W_B2, _W_MC2, _W_KA, _W_AC2],
        ),
        (
            "kaaa.P4C3",
            p4c3,
            ("b", "odd"),
            [(1, 0, 0, 1, 2)],
            [_W_C3, _W_MC2, _W_AC2, _W_B2, _W_B2C],
        ),
        (
            "kaaa.P5C1a",
            p5c1,
            None,
            [(0, 1, 0, 1, 0), (0, 2, 0, 1, 1)],
            [_W_M, _W_MC2, _W_MB, _W_B2, _W_KA],
        ),
        (
            "kaaa.P5C1b",
            p5c1,
            None,
            [(1, 1, 1, 1, 1), (1, 1, 1, 1, 2)],
            [_W_MC2, _W_MB, _W_B2, _W_KA, _W_AC2],
        ),
        (
            "kaaa.P5C1c",
            p5c1,
            None,
            [(1, 0, 1, 1, 0), (2, 0, 2, 1, 1)],
            [_W_MB, _W_B2, _W_KA, _W_AC2, _W_AB],
        ),
        (
            "kaaa.P5C2a",
            p5c2,
            None,
            [(0, 1, 0, 1, 1)],
            [_W_MC2, _W_MB, _W_MBC, _W_B2, _W_AC2],
        ),
        (
            "kaaa.P5C2b",
            p5c2,
            None,
            [(1, 1, 0, 3, 2)],
            [_W_MC2, _W_MBC, _W_B2, _W_B2C, _W_AC2],
        ),
        (
            "kaaa.P5C2c",
            p5c2,
            None,
            [(1, 1, 1, 2, 1)],
            [_W_MB, _W_MBC, _W_B2, _W_AC2, _W_AB],
        ),
        (
            "kaaa.P5C2d",
            p5c2,
            None,
            [(2, 0, 1, 3, 1)],
            [_W_MBC, _W_B2, _W_B2C, _W_AC2, _W_AB],
        ),
        (
            "kaaa.P5C2e",
            p5c2,
            None,
            [(1, 0, 1, 1, 1)],
            [_W_MBC, _W_B2C, _W_AC2, _W_AB, _W_ABC],
        ),
    ]
    return tuple(
        CaseSpec(
            case_id=case_id,
            family="kaaa",
            region=_KAAA_BASE + extra,
            realization=_piece(bases, gens),
            parity=parity,
        )
        for case_id, extra, parity, bases, gens in entries
    )


@lru_cache(maxsize=None)
def case_catalog(family: str) -> Tuple[CaseSpec, ...]:
    """The fixed, ordered case list of a family."""
    if family == "three":
        return _three_cases()
    if family == "k4":
        return _k4_cases()
    if family == "kaaa":
        return _kaaa_cases()
    raise UsageError(f"unknown family {family!r}; expected three, k4, or kaaa")


def case_membership(spec: CaseSpec, point: Sequence[int]) -> bool:
    """Whether the point satisfies the case's region and parity constraints."""
    fam = FAMILIES[spec.family]
    if len(point) != len(fam.coords):
        raise UsageError(f"point has {len(point)} coordinates, expected {len(fam.coords)}")
    values = dict(zip(fam.coords, point))
    if not all(c.holds(values) for c in spec.region):
        return False
    if spec.parity is not None:
        coord, parity = spec.parity
        want = 0 if parity == "even" else 1
        if values[coord] % 2 != want:
            return False
    return True


def _piece_gf(piece: LatticePiece, zctx: VariableContext) -> RationalGF:
    terms: Dict[Exponents, int] = {}
    for coef, base in piece.bases:
        terms[base] = terms.get(base, 0) + coef
    return RationalGF(zctx, LaurentPoly(zctx, terms), piece.generators)


def _realization_gf(spec: CaseSpec, zctx: VariableContext) -> RationalGF:
    if isinstance(spec.realization, HalfOpenCone):
        return integer_point_transform(spec.realization, zctx)
    return _piece_gf(spec.realization, zctx)


def _pointwise_map(zgf: RationalGF, fam: FamilyInfo) -> RationalGF:
    """Rebuild a coordinate-space GF in the output variables via statistics.

    Base points map through the family's closed-form statistics; each
    generator maps to the common increment it induces, which must agree
    across all base points.
    """
    bases = sorted(zgf.numerator.terms.items())
    if not bases:
        raise InternalInvariantError("cannot map an empty generating function")
    out_of: Dict[Point, Exponents] = {}

    def out(point: Point) -> Exponents:
        if point not in out_of:
            out_of[point] = fam.out_exponents(point)
        return out_of[point]

    factors: List[Exponents] = []
    for gen in zgf.denominator:
        deltas = {
            tuple(o - b for o, b in zip(out(tuple(p + g for p, g in zip(base, gen))), out(base)))
            for base, _ in bases
        }
        if len(deltas) != 1:
            raise InternalInvariantError(
                f"generator {gen} induces inconsistent statistic increments: {sorted(deltas)}"
            )
        factors.append(deltas.pop())
    terms: Dict[Exponents, int] = {}
    for base, coef in bases:
        key = out(base)
        terms[key] = terms.get(key, 0) + coef
    return RationalGF(fam.out_ctx, LaurentPoly(fam.out_ctx, terms), factors)


def assemble_case(spec: CaseSpec) -> RationalGF:
    """Generating function of one case, in the family's marked output variables."""
    fam = FAMILIES[spec.family]
    zgf = _realization_gf(spec, fam.zctx)
    for sign, piece in spec.corrections:
        zgf = gf_arith(zgf, _piece_gf(piece, fam.zctx), "add" if sign > 0 else "sub")
    if spec.parity is not None:
        coord, parity = spec.parity
        zvar = fam.zctx.names[fam.coords.index(coord)]
        zgf = gf_extract_parity(zgf, zvar, parity)
    if spec.subst is not None:
        return gf_substitute(zgf, fam.out_ctx, dict(spec.subst))
    return _pointwise_map(zgf, fam)


def assemble_theorem(family: str) -> RationalGF:
    """Signed sum of the family's cases, marking variables set to 1."""
    fam = FAMILIES[family]
    total: Optional[RationalGF] = None
    for spec in case_catalog(family):
        gf = assemble_case(spec)
        if total is None:
            if spec.sign < 0:
                gf = RationalGF(gf.context, -gf.numerator, gf.denominator)
            total = gf
        else:
            total = gf_arith(total, gf, "add" if spec.sign > 0 else "sub")
    assert total is not None
    if fam.specialize is not None:
        total = gf_substitute(total, fam.theorem_ctx, dict(fam.specialize))
    return total


# -- transcribed product formulas ---------------------------------------------

_K4_NUMERATOR_X0 = "1"
_K4_NUMERATOR_X1 = "q^5*t + q*t^5 + q^4*t^2 + q^2*t^4 + q^4*t + q*t^4 + q^3*t^2 + q^2*t^3 + q^3*t^3"
_K4_NUMERATOR_X2 = (
    "-q^7*t^3 - q^3*t^7 + q^6*t^5 + q^5*t^6 - q^6*t^4 - q^4*t^6 - q^5*t^5 - q^5*t^4 - q^4*t^5"
)
_K4_NUMERATOR_X3 = "q^8*t^8 + q^9*t^6 + q^6*t^9 + q^8*t^7 + q^7*t^8"

# Numerator of the (k, k+m, k+m, k+m) series, grouped by x^i y^j; the overall
# sign is normalized so that the constant term is +1.
_KAAA_NUMERATOR_GROUPS = (
    ("x^3*y^2", -1,
     "q^13*t^7 + q^7*t^13 + q^12*t^8 + q^8*t^12 + q^9*t^12 + q^12*t^9 + q^11*t^11"
     " + q^10*t^11 + q^11*t^10 + q^9*t^11 + q^11*t^9 + q^10*t^10"),
    ("x^2*y^2", 1,
     "q^11*t^5 + q^5*t^11 + q^10*t^6 + q^6*t^10 + q^8*t^9 + q^9*t^8 + q^7*t^9"
     " + q^9*t^7 + q^8*t^8 - q^7*t^8 - q^8*t^7 + q^7*t^7"),
    ("x*y^2", 1, "q^7*t^4 + q^4*t^7 + q^6*t^5 + q^5*t^6"),
    ("x^3*y", 1,
     "q^12*t^6 + q^6*t^12 + q^8*t^11 + q^11*t^8 + q^10*t^8 + q^8*t^10 + q^7*t^11"
     " + q^11*t^7 + q^7*t^10 + q^10*t^7 + 2*q^9*t^9 + q^8*t^9 + q^9*t^8"),
    ("x^2*y", 1,
     "q^10*t^3 + q^3*t^10 + q^5*t^7 + q^7*t^5 - q^5*t^9 - q^9*t^5 + q^4*t^9"
     " + q^9*t^4 + q^4*t^8 + q^8*t^4 + q^5*t^6 + q^6*t^5 - q^8*t^6 - q^6*t^8"),
    ("x*y", -1,
     "q*t^8 + q^8*t + q*t^7 + q^7*t + q^6*t^3 + q^3*t^6 + q^4*t^5 + q^5*t^4"
     " + q^2*t^5 + q^5*t^2 + 2*q^4*t^4 + q^5*t^3 + q^3*t^5 + 2*q^3*t^4 + 2*q^4*t^3"
     " + q^7*t^2 + q^2*t^7 + q^6*t^2 + q^2*t^6"),
    ("y", 1, "q^2*t + q*t^2"),
    ("x^3", -1, "q^9*t^6 + q^6*t^9 + q^8*t^7 + q^7*t^8 + q^8*t^8"),
    ("x^2", -1,
     "q^7*t^3 + q^3*t^7 - q^5*t^6 - q^6*t^5 + q^4*t^6 + q^6*t^4 + q^5*t^5 + q^4*t^5 + q^5*t^4"),
    ("x", 1, "q*t^5 + q^5*t + q^2*t^4 + q^4*t^2 + q*t^4 + q^4*t + q^3*t^3 + q^2*t^3 + q^3*t^2"),
    ("1", 1, "1"),
)


@lru_cache(maxsize=None)
def printed_theorem(family: str) -> RationalGF:
    """The closed product form that the family's assembled series must equal."""
    if family == "three":
        ctx = THREE_OUT
        numerator = LaurentPoly.parse(ctx, "1 - x1*x2*q*t^2") * LaurentPoly.parse(
            ctx, "1 - x1*x2*q^2*t"
        )
        denominator = [
            ctx.monomial(x2=1, q=1),
            ctx.monomial(x2=1, t=1),
            ctx.monomial(x1=1, q=1, t=1),
            ctx.monomial(x1=1, t=2),
            ctx.monomial(x1=1, q=2),
            ctx.monomial(x1=1, x2=1, q=1, t=1),
            ctx.monomial(x3=1),
        ]
        return RationalGF(ctx, numerator, denominator)
    if family == "k4":
        ctx = K4_THEOREM
        x = LaurentPoly.variable(ctx, "x")
        numerator = (
            LaurentPoly.parse(ctx, _K4_NUMERATOR_X0)
            + LaurentPoly.parse(ctx, _K4_NUMERATOR_X1) * x
            + LaurentPoly.parse(ctx, _K4_NUMERATOR_X2) * x * x
            - LaurentPoly.parse(ctx, _K4_NUMERATOR_X3) * x * x * x
        )
        denominator = [
            ctx.monomial(x=1, q=3, t=1),
            ctx.monomial(x=1, q=1, t=3),
            ctx.monomial(x=1, q=2, t=2),
            ctx.monomial(x=1, q=6),
            ctx.monomial(x=1, t=6),
        ]
        return RationalGF(ctx, numerator, denominator)
    if family == "kaaa":
        ctx = KAAA_THEOREM
        numerator = LaurentPoly.zero(ctx)
        for stem, sign, body in _KAAA_NUMERATOR_GROUPS:
            numerator = numerator + sign * LaurentPoly.parse(ctx, stem) * LaurentPoly.parse(
                ctx, body
            )
        denominator = [
            ctx.monomial(x=1, q=6),
            ctx.monomial(x=1, t=6),
            ctx.monomial(x=1, q=3, t=1),
            ctx.monomial(x=1, q=1, t=3),
            ctx.monomial(x=1, q=2, t=2),
            ctx.monomial(y=1, q=3),
            ctx.monomial(y=1, t=3),
            ctx.monomial(y=1, q=1, t=1),
        ]
        return RationalGF(ctx, numerator, denominator)
    raise UsageError(f"unknown family {family!r}")


# -- signed point coverage (partition checks) ----------------------------------


@lru_cache(maxsize=None)
def _membership_solver(generators: Tuple[Point, ...]):
    """Integer solver for ``sum lam_j v_j = target`` with lam in N^r.

    Precomputes the adjugate of an invertible row submatrix so membership
    tests run in pure integer arithmetic.
    """
    r = len(generators)
    d = len(generators[0])
    rows = [[g[i] for g in generators] for i in range(d)]

    # pick r linearly independent rows by incremental elimination
    chosen: List[int] = []
    reduced: List[List[Fraction]] = []
    for i, row in enumerate(rows):
        work = [Fraction(x) for x in row]
        for base_row in reduced:
            lead = next(j for j, x in enumerate(base_row) if x != 0)
            if work[lead] != 0:
                factor = work[lead] / base_row[lead]
                work = [x - factor * y for x, y in zip(work, base_row)]
        if any(x != 0 for x in work):
            reduced.append(work)
            chosen.append(i)
        if len(chosen) == r:
            break
    if len(chosen) != r:
        raise InternalInvariantError("piece generators are linearly dependent")

    square = [[rows[i][j] for j in range(r)] for i in chosen]
    det = Fraction(1)
    inverse = [[Fraction(1 if i == j else 0) for j in range(r)] for i in range(r)]
    work_rows = [[Fraction(x) for x in row] for row in square]
    for col in range(r):
        pivot = next(i for i in range(col, r) if work_rows[i][col] != 0)
        if pivot != col:
            work_rows[col], work_rows[pivot] = work_rows[pivot], work_rows[col]
            inverse[col], inverse[pivot] = inverse[pivot], inverse[col]
            det = -det
        det *= work_rows[col][col]
        scale = 1 / work_rows[col][col]
        work_rows[col] = [x * scale for x in work_rows[col]]
        inverse[col] = [x * scale for x in inverse[col]]
        for i in range(r):
            if i != col and work_rows[i][col] != 0:
                factor = work_rows[i][col]
                work_rows[i] = [x - factor * y for x, y in zip(work_rows[i], work_rows[col])]
                inverse[i] = [x - factor * y for x, y in zip(inverse[i], inverse[col])]
    det_int = int(det)
    adjugate = [[inverse[i][j] * det_int for j in range(r)] for i in range(r)]
    if any(x.denominator != 1 for row in adjugate for x in row):
        raise InternalInvariantError("adjugate of an integer matrix must be integral")
    adj = [[int(x) for x in row] for row in adjugate]
    if det_int < 0:
        det_int = -det_int
        adj = [[-x for x in row] for row in adj]

    def solve(target: Point):
        sub = [target[i] for i in chosen]
        lams = []
        for i in range(r):
            v = sum(adj[i][j] * sub[j] for j in range(r))
            if v < 0 or v % det_int:
                return None
            lams.append(v // det_int)
        for i in range(d):
            if sum(rows[i][j] * lams[j] for j in range(r)) != target[i]:
                return None
        return tuple(lams)

    return solve


def _piece_covers(piece: LatticePiece, point: Point) -> int:
    solve = _membership_solver(piece.generators)
    total = 0
    for coef, base in piece.bases:
        if solve(tuple(p - b for p, b in zip(point, base))) is not None:
            total += coef
    return total


@lru_cache(maxsize=None)
def _realization_piece(spec: CaseSpec) -> LatticePiece:
    if isinstance(spec.realization, LatticePiece):
        return spec.realization
    cone = spec.realization
    bases = tuple((1, p) for p in parallelepiped_points(cone))
    return LatticePiece(bases=bases, generators=cone.generators)


def realized_multiplicity(spec: CaseSpec, point: Sequence[int]) -> int:
    """How many times the case's realization (with corrections) hits a point."""
    point = tuple(int(x) for x in point)
    if spec.parity is not None:
        fam = FAMILIES[spec.family]
        coord, parity = spec.parity
        want = 0 if parity == "even" else 1
        if point[fam.coords.index(coord)] % 2 != want:
            return 0
    total = _piece_covers(_realization_piece(spec), point)
    for sign, piece in spec.corrections:
        total += sign * _piece_covers(piece, point)
    return total


def signed_multiplicity(family: str, point: Sequence[int]) -> int:
    """Signed number of catalog pieces covering a coordinate point."""
    return sum(
        spec.sign * realized_multiplicity(spec, point) for spec in case_catalog(family)
    )
