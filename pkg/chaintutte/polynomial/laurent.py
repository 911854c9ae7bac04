"""Sparse multivariate Laurent polynomials with exact integer coefficients.

A :class:`LaurentPoly` maps monomials to Python ``int`` coefficients.  A
monomial is a tuple of ``(Variable, exponent)`` pairs sorted by the global
variable order ``x < y < u < v < a < b < s < t < z`` (then by index) with no
zero exponents, so two equal polynomials always have equal term dicts.

Values are immutable; every operation returns a new polynomial.  Rationals
only appear in :func:`evaluate`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import DomainError, InternalError, InvalidParametersError

__all__ = [
    "FAMILIES",
    "Variable",
    "Monomial",
    "LaurentPoly",
    "parse_variable",
    "var",
    "constant",
    "as_fraction",
    "add",
    "sub",
    "mul",
    "neg",
    "power",
    "substitute",
    "evaluate",
    "partial_derivative",
    "coefficient",
    "extract",
    "taylor_coefficient",
    "translate",
    "rename",
    "support",
    "variables",
    "total_degree",
    "is_polynomial",
    "require_polynomial",
    "canonical_terms",
    "canonical_string",
    "from_dense",
    "to_dense",
    "to_model",
    "from_model",
    "to_json",
    "from_json",
]

FAMILIES: Tuple[str, ...] = ("x", "y", "u", "v", "a", "b", "s", "t", "z")
SCALAR_FAMILIES = frozenset({"s", "t", "z"})

_VAR_RE = re.compile(r"^([xyuvabstz])(\d*)$")


# ---------------------------------------------------------------------------
# Variables
# ---------------------------------------------------------------------------


@total_ordering
@dataclass(frozen=True)
class Variable:
    family: str
    index: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidParametersError(f"Unknown variable family {self.family!r}")
        if self.index < 1:
            raise InvalidParametersError(f"Variable index must be positive, got {self.index}")
        if self.family in SCALAR_FAMILIES and self.index != 1:
            raise InvalidParametersError(f"Scalar variable {self.family} takes no index")

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (FAMILIES.index(self.family), self.index)

    def __lt__(self, other: "Variable") -> bool:
        if not isinstance(other, Variable):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.family in SCALAR_FAMILIES:
            return self.family
        return f"{self.family}{self.index}"

    def __repr__(self) -> str:
        return f"Variable({str(self)!r})"


@lru_cache(maxsize=None)
def parse_variable(name: str) -> Variable:
    """Parse ``"x1"``, ``"y3"``, ``"t"`` ... into a :class:`Variable`."""
    m = _VAR_RE.match(name.strip())
    if not m:
        raise InvalidParametersError(f"Cannot parse variable name {name!r}")
    family, digits = m.groups()
    if family in SCALAR_FAMILIES:
        if digits not in ("", "1"):
            raise InvalidParametersError(f"Scalar variable {family} takes no index: {name!r}")
        return Variable(family, 1)
    if not digits:
        raise InvalidParametersError(f"Variable {name!r} needs an index")
    return Variable(family, int(digits))


VarLike = Union[Variable, str]
Monomial = Tuple[Tuple[Variable, int], ...]


def _as_variable(v: VarLike) -> Variable:
    return v if isinstance(v, Variable) else parse_variable(v)


def as_fraction(value: object, variable: object = None) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float.

    Floats go through their shortest decimal repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, bool):
        raise InvalidParametersError(f"{value!r} is not a number", {"variable": str(variable)})
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)  # type: ignore[arg-type]
    except (TypeError, ValueError, ZeroDivisionError):
        raise InvalidParametersError(
            f"Value {value!r} for {variable} is not an exact rational", {"variable": str(variable)}
        ) from None


def _normalise_monomial(exps: Mapping[Variable, int]) -> Monomial:
    return tuple(sorted(((v, e) for v, e in exps.items() if e != 0), key=lambda ve: ve[0].sort_key))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps: Dict[Variable, int] = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return _normalise_monomial(exps)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


# ---------------------------------------------------------------------------
# The polynomial type
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self._terms: Dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c != 0}
        self._hash: Optional[int] = None

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Mapping[VarLike, int], int]]) -> "LaurentPoly":
        """Build from ``(exponent mapping, coefficient)`` pairs, summing repeats."""
        acc: Dict[Monomial, int] = {}
        for exps, coeff in terms:
            mono = _normalise_monomial({_as_variable(v): int(e) for v, e in exps.items()})
            acc[mono] = acc.get(mono, 0) + int(coeff)
        return cls(acc)

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: object) -> "LaurentPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in q._terms.items():
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> "LaurentPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> "LaurentPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        acc: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in q._terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if not isinstance(e, int) or e < 0:
            raise InvalidParametersError(f"Exponent must be a non-negative integer, got {e!r}")
        result = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        q = _coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({canonical_string(self)!r})"

    # -- constructors --------------------------------------------------------
    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({(): 1})


def _coerce(value: object) -> Optional[LaurentPoly]:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return constant(value)
    return None


def constant(c: int) -> LaurentPoly:
    return LaurentPoly({(): int(c)})


def var(name: VarLike, exponent: int = 1) -> LaurentPoly:
    """The monomial ``name**exponent`` (negative exponents allowed)."""
    v = _as_variable(name)
    return LaurentPoly({_normalise_monomial({v: exponent}): 1})


# ---------------------------------------------------------------------------
# Ring operations as functions
# ---------------------------------------------------------------------------


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p - q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def power(p: LaurentPoly, e: int) -> LaurentPoly:
    return p**e


# ---------------------------------------------------------------------------
# Inspection helpers
# ---------------------------------------------------------------------------


def variables(p: LaurentPoly) -> List[Variable]:
    seen = {v for m in p._terms for v, _ in m}
    return sorted(seen)


def total_degree(p: LaurentPoly) -> int:
    """Largest total degree of a term; ``-1`` for the zero polynomial."""
    return max((_mono_degree(m) for m in p._terms), default=-1)


def is_polynomial(p: LaurentPoly) -> bool:
    return all(e >= 0 for m in p._terms for _, e in m)


def require_polynomial(p: LaurentPoly, context: str = "result") -> LaurentPoly:
    """Raise :class:`InternalError` if negative exponents survived."""
    if not is_polynomial(p):
        bad = next(m for m in p._terms if any(e < 0 for _, e in m))
        raise InternalError(
            f"Negative exponents survived in {context}",
            {"monomial": {str(v): e for v, e in bad}},
        )
    return p


def _parse_exponents(exponents: Mapping[VarLike, int]) -> Monomial:
    return _normalise_monomial({_as_variable(v): int(e) for v, e in exponents.items()})


def coefficient(p: LaurentPoly, exponents: Mapping[VarLike, int]) -> int:
    """Coefficient of the monomial with exactly these exponents."""
    return p._terms.get(_parse_exponents(exponents), 0)


def support(p: LaurentPoly) -> List[Dict[Variable, int]]:
    return [dict(m) for m, _ in canonical_terms(p)]


def extract(p: LaurentPoly, exponents: Mapping[VarLike, int]) -> LaurentPoly:
    """Coefficient of a partial monomial, as a polynomial in the other variables.

    Variables named in ``exponents`` are matched exactly (a missing
    variable in a term counts as exponent 0) and removed from the result.
    """
    fixed = {_as_variable(v): int(e) for v, e in exponents.items()}
    acc: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        exps = dict(m)
        if any(exps.get(v, 0) != e for v, e in fixed.items()):
            continue
        rest = tuple((v, e) for v, e in m if v not in fixed)
        acc[rest] = acc.get(rest, 0) + c
    return LaurentPoly(acc)


def taylor_coefficient(p: LaurentPoly, v: VarLike, center: int, order: int) -> LaurentPoly:
    """Coefficient of ``(v - center)**order`` when ``p`` is expanded around ``center``."""
    v = _as_variable(v)
    if order < 0:
        raise InvalidParametersError(f"Taylor order must be non-negative, got {order}")
    acc: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        exps = dict(m)
        e = exps.pop(v, 0)
        if e < 0:
            raise DomainError(f"Cannot expand {v} with negative exponent {e} around {center}")
        if e < order:
            continue
        weight = comb(e, order) * center ** (e - order)
        if weight == 0:
            continue
        rest = _normalise_monomial(exps)
        acc[rest] = acc.get(rest, 0) + c * weight
    return LaurentPoly(acc)


# ---------------------------------------------------------------------------
# Substitution, evaluation, differentiation
# ---------------------------------------------------------------------------


def _unit_inverse(value: LaurentPoly, v: Variable) -> LaurentPoly:
    if len(value._terms) != 1:
        raise DomainError(f"Cannot substitute non-unit {value} into a negative power of {v}")
    ((m, c),) = value._terms.items()
    if c not in (1, -1):
        raise DomainError(f"Cannot substitute non-unit {value} into a negative power of {v}")
    return LaurentPoly({tuple((w, -e) for w, e in m): c})


def substitute(p: LaurentPoly, bindings: Mapping[VarLike, Union[LaurentPoly, int]]) -> LaurentPoly:
    """Simultaneously replace variables by polynomials.

    A variable appearing with a negative exponent may only be bound to a
    unit (a single term with coefficient +1 or -1).
    """
    bound: Dict[Variable, LaurentPoly] = {}
    for k, val in bindings.items():
        poly = _coerce(val)
        if poly is None:
            raise InvalidParametersError(f"Cannot bind {k} to {val!r}")
        bound[_as_variable(k)] = poly
    if not bound:
        return p

    power_cache: Dict[Tuple[Variable, int], LaurentPoly] = {}

    def bound_power(v: Variable, e: int) -> LaurentPoly:
        key = (v, e)
        if key not in power_cache:
            base = bound[v] if e >= 0 else _unit_inverse(bound[v], v)
            power_cache[key] = base ** abs(e)
        return power_cache[key]

    acc: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        kept = tuple((v, e) for v, e in m if v not in bound)
        piece = LaurentPoly({kept: c})
        for v, e in m:
            if v in bound:
                piece = piece * bound_power(v, e)
        for pm, pc in piece._terms.items():
            acc[pm] = acc.get(pm, 0) + pc
    return LaurentPoly(acc)


def evaluate(p: LaurentPoly, point: Mapping[VarLike, Union[int, Fraction, str]]) -> Fraction:
    """Exact rational value of ``p`` at ``point``."""
    values: Dict[Variable, Fraction] = {_as_variable(k): as_fraction(v, k) for k, v in point.items()}
    total = Fraction(0)
    for m, c in p._terms.items():
        term = Fraction(c)
        for v, e in m:
            if v not in values:
                raise DomainError(f"Variable {v} is not bound", {"variable": str(v)})
            x = values[v]
            if e < 0 and x == 0:
                raise DomainError(f"Zero raised to negative power {e} at {v}", {"variable": str(v)})
            term *= x**e
        total += term
    return total


def partial_derivative(p: LaurentPoly, v: VarLike) -> LaurentPoly:
    v = _as_variable(v)
    acc: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        exps = dict(m)
        e = exps.get(v, 0)
        if e == 0:
            continue
        exps[v] = e - 1
        mono = _normalise_monomial(exps)
        acc[mono] = acc.get(mono, 0) + c * e
    return LaurentPoly(acc)


def rename(p: LaurentPoly, mapping: Mapping[VarLike, VarLike]) -> LaurentPoly:
    """Rename variables; two old variables may map onto the same new one."""
    ren = {_as_variable(k): _as_variable(v) for k, v in mapping.items()}
    acc: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        exps: Dict[Variable, int] = {}
        for v, e in m:
            w = ren.get(v, v)
            exps[w] = exps.get(w, 0) + e
        mono = _normalise_monomial(exps)
        acc[mono] = acc.get(mono, 0) + c
    return LaurentPoly(acc)


# ---------------------------------------------------------------------------
# Dense exponent vectors (used by the enumerators)
# ---------------------------------------------------------------------------


def from_dense(order: Sequence[VarLike], terms: Mapping[Tuple[int, ...], int]) -> LaurentPoly:
    """Build a polynomial from exponent tuples aligned with ``order``."""
    vs = [_as_variable(v) for v in order]
    perm = sorted(range(len(vs)), key=lambda i: vs[i].sort_key)
    acc: Dict[Monomial, int] = {}
    for exps, c in terms.items():
        if c == 0:
            continue
        mono = tuple((vs[i], exps[i]) for i in perm if exps[i] != 0)
        acc[mono] = acc.get(mono, 0) + c
    return LaurentPoly(acc)


def to_dense(p: LaurentPoly, order: Sequence[VarLike]) -> Dict[Tuple[int, ...], int]:
    vs = [_as_variable(v) for v in order]
    pos = {v: i for i, v in enumerate(vs)}
    out: Dict[Tuple[int, ...], int] = {}
    for m, c in p._terms.items():
        vec = [0] * len(vs)
        for v, e in m:
            if v not in pos:
                raise InvalidParametersError(f"Variable {v} missing from dense order")
            vec[pos[v]] = e
        out[tuple(vec)] = c
    return out


def _translate_dense(terms: Dict[Tuple[int, ...], int], axis: int, shift: int) -> Dict[Tuple[int, ...], int]:
    out: Dict[Tuple[int, ...], int] = {}
    for exps, c in terms.items():
        e = exps[axis]
        if e == 0 or shift == 0:
            out[exps] = out.get(exps, 0) + c
            continue
        head, tail = exps[:axis], exps[axis + 1 :]
        for m in range(e + 1):
            key = head + (m,) + tail
            out[key] = out.get(key, 0) + c * comb(e, m) * shift ** (e - m)
    return {k: c for k, c in out.items() if c != 0}


def translate(p: LaurentPoly, shifts: Mapping[VarLike, int]) -> LaurentPoly:
    """Substitute ``v -> v + shift`` for each listed variable.

    Works one variable at a time on dense exponent vectors, which keeps the
    intermediate expansion small.  Negative exponents in a shifted variable
    are a domain error.
    """
    sh = {_as_variable(v): int(c) for v, c in shifts.items()}
    order = sorted(set(variables(p)) | set(sh))
    dense = to_dense(p, order)
    for axis, v in enumerate(order):
        c = sh.get(v, 0)
        if c == 0:
            continue
        if any(exps[axis] < 0 for exps in dense):
            raise DomainError(f"Cannot translate {v}: it appears with a negative exponent")
        dense = _translate_dense(dense, axis, c)
    return from_dense(order, dense)


# ---------------------------------------------------------------------------
# Canonical order and text form
# ---------------------------------------------------------------------------


def canonical_terms(p: LaurentPoly) -> List[Tuple[Monomial, int]]:
    """Terms sorted by total degree (descending), then lexicographically
    descending on the exponent vector in variable order."""
    order = variables(p)

    def key(item: Tuple[Monomial, int]) -> Tuple:
        exps = dict(item[0])
        return (-_mono_degree(item[0]), tuple(-exps.get(v, 0) for v in order))

    return sorted(p._terms.items(), key=key)


def _format_monomial(m: Monomial) -> str:
    parts = []
    for v, e in m:
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def canonical_string(p: LaurentPoly) -> str:
    """Render e.g. ``x1^2*x2 - 2*y1 + 1``; the zero polynomial is ``0``."""
    if p.is_zero:
        return "0"
    pieces: List[str] = []
    for i, (m, c) in enumerate(canonical_terms(p)):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _format_monomial(m)
        else:
            body = f"{mag}*{_format_monomial(m)}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def to_model(p: LaurentPoly) -> "PolynomialModel":
    from .output_schemas import PolynomialModel, TermModel

    return PolynomialModel(
        terms=[TermModel(exp={str(v): e for v, e in m}, coeff=str(c)) for m, c in canonical_terms(p)]
    )


def from_model(model: "PolynomialModel") -> LaurentPoly:
    return LaurentPoly.from_terms((t.exp, int(t.coeff)) for t in model.terms)


def to_json(p: LaurentPoly) -> str:
    return to_model(p).model_dump_json()


def from_json(text: str) -> LaurentPoly:
    from pydantic import ValidationError

    from .output_schemas import PolynomialModel

    try:
        return from_model(PolynomialModel.model_validate_json(text))
    except ValidationError as e:
        raise InvalidParametersError(f"Malformed polynomial JSON: {e}") from e
