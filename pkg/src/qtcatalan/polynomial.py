"""Exact multivariate Laurent polynomials over arbitrary-precision integers.

Terms are stored as a dict mapping exponent tuples (one integer per context
variable, negatives allowed) to nonzero integer coefficients.  All operations
are pure and return new objects; two polynomials interoperate only when they
share a :class:`VariableContext`.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import UsageError

Exponents = Tuple[int, ...]


class VariableContext:
    """An ordered tuple of distinct variable names with stable indices."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise UsageError("variable context needs at least one name")
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}; context has {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VariableContext) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableContext({', '.join(self.names)})"

    def monomial(self, **exponents: int) -> Exponents:
        """Exponent vector with the named entries set and all others zero."""
        vec = [0] * len(self.names)
        for name, e in exponents.items():
            vec[self.index(name)] = int(e)
        return tuple(vec)


def _require_same_context(a: "LaurentPoly", b: "LaurentPoly") -> None:
    if a.context != b.context:
        raise UsageError(f"context mismatch: {a.context} vs {b.context}")


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("context", "terms")

    def __init__(self, context: VariableContext, terms: Mapping[Exponents, int]):
        clean: Dict[Exponents, int] = {}
        width = len(context)
        for exps, coef in terms.items():
            if len(exps) != width:
                raise UsageError(f"exponent vector {exps} has wrong length for {context}")
            if coef:
                clean[tuple(exps)] = int(coef)
        self.context = context
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, context: VariableContext) -> "LaurentPoly":
        return cls(context, {})

    @classmethod
    def constant(cls, context: VariableContext, value: int) -> "LaurentPoly":
        return cls(context, {(0,) * len(context): value})

    @classmethod
    def monomial(cls, context: VariableContext, exps: Sequence[int], coef: int = 1) -> "LaurentPoly":
        return cls(context, {tuple(exps): coef})

    @classmethod
    def variable(cls, context: VariableContext, name: str) -> "LaurentPoly":
        vec = [0] * len(context)
        vec[context.index(name)] = 1
        return cls(context, {tuple(vec): 1})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        _require_same_context(self, other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            new = terms.get(exps, 0) + coef
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.context, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.context, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.context, {e: c * other for e, c in self.terms.items()})
        _require_same_context(self, other)
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(key, 0) + c1 * c2
                if new:
                    out[key] = new
                else:
                    del out[key]
        return LaurentPoly(self.context, out)

    def __rmul__(self, other: int) -> "LaurentPoly":
        return self * other

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise UsageError("negative polynomial powers are not defined")
        result = LaurentPoly.constant(self.context, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.context == other.context
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def extract_coefficient(
        self, assignment: Mapping[str, int], target: VariableContext
    ) -> "LaurentPoly":
        """Coefficient of the given variable powers, in the leftover variables.

        Keeps the terms whose exponents match `assignment` exactly and maps
        each surviving term onto `target` by variable name; every variable
        neither assigned nor present in `target` must have exponent zero.
        """
        fixed = {self.context.index(name): e for name, e in assignment.items()}
        out: Dict[Exponents, int] = {}
        for exps, coef in self.terms.items():
            if any(exps[pos] != e for pos, e in fixed.items()):
                continue
            vec = [0] * len(target)
            ok = True
            for pos, e in enumerate(exps):
                if pos in fixed:
                    continue
                name = self.context.names[pos]
                if name in target:
                    vec[target.index(name)] = e
                elif e != 0:
                    ok = False
                    break
            if ok:
                out[tuple(vec)] = coef
        return LaurentPoly(target, out)

    # -- canonical ordering and rendering -----------------------------------

    def canonical_terms(self) -> Iterable[Tuple[Exponents, int]]:
        """Terms ordered by ascending total degree, then descending lex."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), tuple(-e for e in item[0])),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, coef in self.canonical_terms():
            factors = []
            for name, e in zip(self.context.names, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            magnitude = abs(coef)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if not chunks:
                chunks.append(body if coef > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # -- parsing -------------------------------------------------------------

    _FACTOR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^(-?\d+))?$")

    @classmethod
    def parse(cls, context: VariableContext, text: str) -> "LaurentPoly":
        """Parse the canonical string syntax, e.g. ``"q^3 + 2*q*t - t^-1"``.

        Accepts sums of ``[int*]name[^int]`` products joined by + and -.
        """
        total = cls.zero(context)
        stripped = text.replace("−", "-").strip()
        if not stripped:
            raise UsageError("empty polynomial string")
        pieces = re.split(r"(?=[+-])(?<![\^*])", stripped)
        for piece in pieces:
            piece = piece.strip()
            if not piece:
                continue
            sign = 1
            if piece[0] in "+-":
                sign = -1 if piece[0] == "-" else 1
                piece = piece[1:].strip()
            if not piece:
                raise UsageError(f"dangling sign in {text!r}")
            coef = sign
            vec = [0] * len(context)
            for factor in piece.split("*"):
                factor = factor.strip()
                if not factor:
                    raise UsageError(f"empty factor in {text!r}")
                if re.fullmatch(r"-?\d+", factor):
                    coef *= int(factor)
                    continue
                match = cls._FACTOR_RE.match(factor)
                if not match:
                    raise UsageError(f"cannot parse factor {factor!r}")
                name, exp = match.group(1), match.group(2)
                vec[context.index(name)] += int(exp) if exp is not None else 1
            total = total + cls.monomial(context, vec, coef)
        return total


def poly_arith(lhs: LaurentPoly, rhs: LaurentPoly, op: str) -> LaurentPoly:
    """Dispatch form of +, -, * used by callers that take the op as data."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise UsageError(f"unknown op {op!r}")


def substitute_monomials(
    poly: LaurentPoly,
    target: VariableContext,
    images: Mapping[str, Sequence[int]],
) -> LaurentPoly:
    """Multiplicative substitution: each source variable maps to a monomial.

    `images` assigns every variable of ``poly.context`` an exponent vector in
    ``target``.  Exponents combine additively, so this is a ring homomorphism.
    """
    width = len(target)
    table = []
    for name in poly.context.names:
        if name not in images:
            raise UsageError(f"no image given for variable {name!r}")
        image = tuple(images[name])
        if len(image) != width:
            raise UsageError(f"image for {name!r} has wrong length for {target}")
        table.append(image)
    out: Dict[Exponents, int] = {}
    for exps, coef in poly.terms.items():
        vec = [0] * width
        for e, image in zip(exps, table):
            if e:
                for i, ei in enumerate(image):
                    vec[i] += e * ei
        key = tuple(vec)
        new = out.get(key, 0) + coef
        if new:
            out[key] = new
        else:
            del out[key]
    return LaurentPoly(target, out)


def qt_swap(poly: LaurentPoly) -> LaurentPoly:
    """Exchange the exponents of q and t in every term."""
    ctx = poly.context
    if "q" not in ctx or "t" not in ctx:
        raise UsageError("context must contain both q and t")
    qi, ti = ctx.index("q"), ctx.index("t")
    out = {}
    for exps, coef in poly.terms.items():
        swapped = list(exps)
        swapped[qi], swapped[ti] = swapped[ti], swapped[qi]
        out[tuple(swapped)] = coef
    return LaurentPoly(ctx, out)


def is_qt_symmetric(poly: LaurentPoly) -> bool:
    return poly == qt_swap(poly)


def coefficient_grid(poly: LaurentPoly) -> list:
    """Matrix of coefficients: ``grid[i][j]`` is the coefficient of q^i t^j.

    Requires a polynomial with nonnegative exponents in which only q and t
    occur; any other live variable is an error.
    """
    ctx = poly.context
    qi, ti = ctx.index("q"), ctx.index("t")
    max_q = max_t = 0
    for exps, _ in poly.terms.items():
        for pos, e in enumerate(exps):
            if pos in (qi, ti):
                if e < 0:
                    raise UsageError("grid requires nonnegative exponents")
            elif e != 0:
                name = ctx.names[pos]
                raise UsageError(f"grid requires a q,t-polynomial; found live {name!r}")
        max_q = max(max_q, exps[qi])
        max_t = max(max_t, exps[ti])
    grid = [[0] * (max_t + 1) for _ in range(max_q + 1)]
    for exps, coef in poly.terms.items():
        grid[exps[qi]][exps[ti]] = coef
    return grid


def poly_from_grid(context: VariableContext, grid: Sequence[Sequence[int]]) -> LaurentPoly:
    """Inverse of :func:`coefficient_grid` for a (q, t) context."""
    qi, ti = context.index("q"), context.index("t")
    terms: Dict[Exponents, int] = {}
    for i, row in enumerate(grid):
        for j, coef in enumerate(row):
            if coef:
                vec = [0] * len(context)
                vec[qi], vec[ti] = i, j
                terms[tuple(vec)] = coef
    return LaurentPoly(context, terms)


QT_CONTEXT = VariableContext(("q", "t"))
