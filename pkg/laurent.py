# laurent.py
"""Exact Laurent polynomials in half-integer powers of t1..tmu, their fractions,
and points of the open torus where they are evaluated.

Exponents are stored as integers counting half-steps: the exponent vector
(k1, ..., kmu) stands for t1^(k1/2) * ... * tmu^(kmu/2). Coefficients are exact
rationals (plain ``int`` whenever integral, ``Fraction`` otherwise).
"""
import math
import re
import operator
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from errors import InvalidPointError, NonExactDivisionError, PoleError, VariableMismatchError
from settings import POLE_TOLERANCE

Exponents = Tuple[int, ...]
Coefficient = Union[int, Fraction]
Scalar = Union[int, Fraction]

_add = operator.add
_sub = operator.sub


def _clean(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_coefficient(value) -> Coefficient:
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, (Fraction, str)):
        return _clean(Fraction(value))
    raise TypeError(f"unsupported coefficient {value!r}")


def _divide(c: Coefficient, d: Coefficient) -> Coefficient:
    if isinstance(c, int) and isinstance(d, int) and c % d == 0:
        return c // d
    return _clean(Fraction(c) / d)


class TorusPoint(BaseModel):
    """A point omega = (e^{i theta_1}, ..., e^{i theta_mu}) with every theta in (0, 2pi)."""
    model_config = ConfigDict(frozen=True)

    thetas: Tuple[float, ...]

    @field_validator("thetas")
    @classmethod
    def _open_interval(cls, thetas: Tuple[float, ...]) -> Tuple[float, ...]:
        if not thetas:
            raise ValueError("a torus point needs at least one angle")
        for theta in thetas:
            if not math.isfinite(theta) or not 0.0 < theta < 2.0 * math.pi:
                raise ValueError(f"angle {theta} is outside the open interval (0, 2*pi)")
        return thetas

    @classmethod
    def of(cls, *thetas: float) -> "TorusPoint":
        try:
            return cls(thetas=tuple(float(t) for t in thetas))
        except ValueError as exc:
            raise InvalidPointError(str(exc)) from exc

    @classmethod
    def parse(cls, text: str) -> "TorusPoint":
        """Parse a comma separated list of radians such as ``"3.14159265,3.14159265"``."""
        try:
            values = [float(part) for part in text.split(",") if part.strip()]
        except ValueError as exc:
            raise InvalidPointError(f"cannot read angles from {text!r}") from exc
        return cls.of(*values)

    @property
    def num_vars(self) -> int:
        return len(self.thetas)

    def omegas(self) -> np.ndarray:
        return np.exp(1j * np.asarray(self.thetas))

    def square_root(self) -> "TorusPoint":
        """The point t_j = omega_j^{1/2}, taken with Im(omega_j^{1/2}) in (0, 1]."""
        return TorusPoint(thetas=tuple(theta / 2.0 for theta in self.thetas))


def _point_angles(point: Union[TorusPoint, Sequence[float]]) -> np.ndarray:
    if isinstance(point, TorusPoint):
        return np.asarray(point.thetas, dtype=float)
    return np.asarray(point, dtype=float)


class LaurentPoly:
    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Optional[Dict[Sequence[int], Scalar]] = None):
        if num_vars < 1:
            raise ValueError("a Laurent polynomial needs at least one variable")
        clean: Dict[Exponents, Coefficient] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != num_vars:
                raise VariableMismatchError(
                    f"exponent vector {key} does not have {num_vars} entries", expected=num_vars, got=len(key))
            value = _clean(clean.get(key, 0) + _as_coefficient(coeff))
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self.num_vars = num_vars
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, num_vars: int, terms: Dict[Exponents, Coefficient]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj._terms = terms
        obj._hash = None
        return obj

    # --- Constructors ---

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPoly":
        return cls._wrap(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value: Scalar) -> "LaurentPoly":
        value = _as_coefficient(value)
        return cls._wrap(num_vars, {(0,) * num_vars: value} if value else {})

    @classmethod
    def one(cls, num_vars: int) -> "LaurentPoly":
        return cls.constant(num_vars, 1)

    @classmethod
    def monomial(cls, num_vars: int, exps: Sequence[int], coeff: Scalar = 1) -> "LaurentPoly":
        return cls(num_vars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, num_vars: int, index: int, half_steps: int = 2) -> "LaurentPoly":
        """t_index ** (half_steps / 2), with 1-based index."""
        if not 1 <= index <= num_vars:
            raise VariableMismatchError(f"variable t{index} does not exist in {num_vars} variables")
        exps = [0] * num_vars
        exps[index - 1] = half_steps
        return cls._wrap(num_vars, {tuple(exps): 1})

    # --- Inspection ---

    @property
    def terms(self) -> Dict[Exponents, Coefficient]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Coefficient:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0,) * self.num_vars, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_term(self) -> Tuple[Exponents, Coefficient]:
        """Lexicographically largest exponent vector and its coefficient."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def leading_coefficient(self) -> Coefficient:
        return self.leading_term()[1]

    def min_exponents(self) -> Exponents:
        return tuple(min(column) for column in zip(*self._terms)) if self._terms else (0,) * self.num_vars

    def max_exponents(self) -> Exponents:
        return tuple(max(column) for column in zip(*self._terms)) if self._terms else (0,) * self.num_vars

    # --- Arithmetic ---

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.num_vars != self.num_vars:
                raise VariableMismatchError(
                    f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables",
                    expected=self.num_vars, got=other.num_vars)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.constant(self.num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = _clean(terms.get(exps, 0) + coeff)
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return LaurentPoly._wrap(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[Exponents, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(map(_add, e1, e2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly._wrap(self.num_vars, {e: _clean(c) for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int):
            raise TypeError("only integer powers are defined")
        if power < 0:
            if not self.is_monomial():
                raise ValueError("negative powers exist only for monomials")
            (exps, coeff), = self._terms.items()
            return LaurentPoly._wrap(
                self.num_vars, {tuple(e * power for e in exps): _clean(Fraction(coeff) ** power)})
        result = LaurentPoly.one(self.num_vars)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "LaurentPoly":
        factor = _as_coefficient(factor)
        if not factor:
            return LaurentPoly.zero(self.num_vars)
        return LaurentPoly._wrap(self.num_vars, {e: _clean(c * factor) for e, c in self._terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given half-step exponents."""
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise VariableMismatchError(f"shift {exps} does not match {self.num_vars} variables")
        return LaurentPoly._wrap(self.num_vars, {tuple(map(_add, e, exps)): c for e, c in self._terms.items()})

    def phi(self) -> "LaurentPoly":
        """The involution t_i -> t_i^{-1}."""
        return LaurentPoly._wrap(self.num_vars, {tuple(-x for x in e): c for e, c in self._terms.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient q with q * other == self; raises NonExactDivisionError otherwise."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot divide by {other!r}")
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero(self.num_vars)
        if other.is_monomial():
            (exps, coeff), = other._terms.items()
            shifted = self.shift(tuple(-e for e in exps))
            return LaurentPoly._wrap(self.num_vars, {e: _divide(c, coeff) for e, c in shifted._terms.items()})

        a_min = self.min_exponents()
        b_min = other.min_exponents()
        divisor = other.shift(tuple(-e for e in b_min))
        lead_exps, lead_coeff = divisor.leading_term()

        remainder = {tuple(map(_sub, e, a_min)): c for e, c in self._terms.items()}
        quotient: Dict[Exponents, Coefficient] = {}
        while remainder:
            exps = max(remainder)
            step = tuple(map(_sub, exps, lead_exps))
            if min(step) < 0:
                raise NonExactDivisionError(f"({self}) is not divisible by ({other})")
            q = _divide(remainder[exps], lead_coeff)
            quotient[step] = q
            for d_exps, d_coeff in divisor._terms.items():
                key = tuple(map(_add, d_exps, step))
                value = _clean(remainder.get(key, 0) - q * d_coeff)
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)

        offset = tuple(map(_sub, a_min, b_min))
        return LaurentPoly._wrap(self.num_vars, {tuple(map(_add, e, offset)): c for e, c in quotient.items()})

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
        except NonExactDivisionError:
            return False
        return True

    def contract_exponents(self, divisor: int) -> "LaurentPoly":
        """Divide every exponent by ``divisor``; the substitution t_i^divisor -> t_i."""
        terms = {}
        for exps, coeff in self._terms.items():
            if any(e % divisor for e in exps):
                raise ValueError(f"exponents of {self} are not all multiples of {divisor}")
            terms[tuple(e // divisor for e in exps)] = coeff
        return LaurentPoly._wrap(self.num_vars, terms)

    def centered(self) -> "LaurentPoly":
        """Shift so that, in every variable, the smallest and largest exponents are opposite."""
        lo, hi = self.min_exponents(), self.max_exponents()
        if any((a + b) % 2 for a, b in zip(lo, hi)):
            raise ValueError(f"{self} cannot be centered in half-integer powers")
        return self.shift(tuple(-(a + b) // 2 for a, b in zip(lo, hi)))

    def with_positive_lead(self) -> "LaurentPoly":
        if self and self.leading_coefficient() < 0:
            return -self
        return self

    # --- Comparison ---

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return not self._terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    # --- Evaluation ---

    def evaluate(self, point: Union[TorusPoint, Sequence[float]]) -> complex:
        """Value at t_j = e^{i theta_j}, so that t_j^{1/2} = e^{i theta_j / 2}."""
        thetas = _point_angles(point)
        if thetas.shape != (self.num_vars,):
            raise VariableMismatchError(f"point has {thetas.size} angles, polynomial has {self.num_vars} variables")
        if not self._terms:
            return 0j
        exps = np.array(list(self._terms.keys()), dtype=float)
        coeffs = np.array([float(c) for c in self._terms.values()])
        phases = exps @ thetas / 2.0
        return complex(np.sum(coeffs * np.exp(1j * phases)))

    # --- Rendering ---

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            factors = [_format_factor(i + 1, e) for i, e in enumerate(exps) if e]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    __str__ = to_string

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_string()!r}, num_vars={self.num_vars})"

    def to_json(self) -> List[Dict[str, object]]:
        return [{"exponents": list(exps), "coeff": str(Fraction(self._terms[exps]))}
                for exps in sorted(self._terms, reverse=True)]

    @classmethod
    def from_json(cls, num_vars: int, records: Iterable[Dict[str, object]]) -> "LaurentPoly":
        return cls(num_vars, {tuple(r["exponents"]): Fraction(str(r["coeff"])) for r in records})

    @classmethod
    def parse(cls, text: str, num_vars: int) -> "LaurentPoly":
        """Read the rendering produced by ``to_string``, e.g. ``"t1*t2 - 1/2*t1^(-1/2)"``."""
        source = text.replace(" ", "")
        if not source:
            raise ValueError("empty polynomial text")
        result = cls.zero(num_vars)
        for term in _split_terms(source):
            sign = -1 if term.startswith("-") else 1
            body = term.lstrip("+-")
            if not body:
                raise ValueError(f"cannot parse polynomial {text!r}")
            coeff: Coefficient = sign
            exps = [0] * num_vars
            for factor in body.split("*"):
                var = _FACTOR_PATTERN.fullmatch(factor)
                if var is None:
                    try:
                        coeff = _clean(coeff * Fraction(factor))
                    except ValueError:
                        raise ValueError(f"cannot parse factor {factor!r} in {text!r}") from None
                    continue
                index = int(var.group("index"))
                if not 1 <= index <= num_vars:
                    raise VariableMismatchError(f"t{index} is not among {num_vars} variables")
                exps[index - 1] += _half_steps(var.group("power"))
            result = result + cls._wrap(num_vars, {tuple(exps): coeff})
        return result


_FACTOR_PATTERN = re.compile(r"t(?P<index>\d+)(?:\^(?P<power>-?\d+|\(-?\d+/2\)))?")


def _split_terms(source: str) -> List[str]:
    terms, start, depth = [], 0, 0
    for i, ch in enumerate(source):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and source[i - 1] not in "^*":
            terms.append(source[start:i])
            start = i
    terms.append(source[start:])
    return terms


def _half_steps(power: Optional[str]) -> int:
    if power is None:
        return 2
    if power.startswith("("):
        numerator, denominator = power[1:-1].split("/")
        if denominator != "2":
            raise ValueError(f"unsupported exponent {power}")
        return int(numerator)
    return 2 * int(power)


def _format_factor(index: int, half_steps: int) -> str:
    if half_steps % 2:
        return f"t{index}^({half_steps}/2)"
    power = half_steps // 2
    return f"t{index}" if power == 1 else f"t{index}^{power}"


class RationalFn:
    """A quotient of Laurent polynomials kept in a cheap normal form.

    The denominator has minimum exponent 0 in every variable, integer coefficients
    with no common factor, and a positive lexicographically-leading coefficient;
    any monomial factor lives in the numerator. No polynomial GCD is taken, so
    equality is decided by cross-multiplication.
    """
    __slots__ = ("numerator", "denominator")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, numerator: Union[LaurentPoly, "RationalFn"], denominator: Optional[LaurentPoly] = None):
        if isinstance(numerator, RationalFn):
            if denominator is not None:
                raise TypeError("a RationalFn numerator takes no extra denominator")
            self.numerator, self.denominator = numerator.numerator, numerator.denominator
            return
        if denominator is None:
            denominator = LaurentPoly.one(numerator.num_vars)
        if denominator.num_vars != numerator.num_vars:
            raise VariableMismatchError("numerator and denominator use different variable counts")
        if not denominator:
            raise ZeroDivisionError("rational function with zero denominator")
        self.numerator, self.denominator = _normalize(numerator, denominator)

    @property
    def num_vars(self) -> int:
        return self.numerator.num_vars

    @classmethod
    def of(cls, value: Union[LaurentPoly, "RationalFn"]) -> "RationalFn":
        return value if isinstance(value, RationalFn) else cls(value)

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            if other.num_vars != self.num_vars:
                raise VariableMismatchError("rational functions in different variable counts")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFn(self.numerator._coerce(other))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFn(LaurentPoly.constant(self.num_vars, other))
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.numerator

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def is_polynomial(self) -> bool:
        return self.denominator.is_constant()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.numerator:
            return self
        if not self.numerator:
            return other
        n1, d1, n2, d2 = self.numerator, self.denominator, other.numerator, other.denominator
        if d1 == d2:
            return RationalFn(n1 + n2, d1)
        if d2.is_constant():
            return RationalFn(n1 + n2 * d1, d1)
        if d1.is_constant():
            return RationalFn(n1 * d2 + n2, d2)
        try:
            return RationalFn(n1 + n2 * d1.exact_div(d2), d1)
        except NonExactDivisionError:
            pass
        try:
            return RationalFn(n1 * d2.exact_div(d1) + n2, d2)
        except NonExactDivisionError:
            pass
        return RationalFn(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._raw(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.numerator or not other.numerator:
            return RationalFn(LaurentPoly.zero(self.num_vars))
        return RationalFn(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.numerator:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, power: int) -> "RationalFn":
        if power < 0:
            return RationalFn(LaurentPoly.one(self.num_vars)) / (self ** -power)
        return RationalFn(self.numerator ** power, self.denominator ** power)

    def phi(self) -> "RationalFn":
        return RationalFn(self.numerator.phi(), self.denominator.phi())

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFn) and other.num_vars != self.num_vars:
            return False
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.denominator == other.denominator:
            return self.numerator == other.numerator
        return self.numerator * other.denominator == other.numerator * self.denominator

    def as_laurent(self) -> LaurentPoly:
        """The polynomial this fraction equals; NonExactDivisionError when it is not one."""
        if self.is_polynomial():
            return self.numerator.scale(Fraction(1, 1) / self.denominator.constant_value())
        return self.numerator.exact_div(self.denominator)

    def evaluate(self, point: Union[TorusPoint, Sequence[float]]) -> complex:
        den = self.denominator.evaluate(point)
        scale = max(1.0, sum(abs(float(c)) for _, c in self.denominator.items()))
        if abs(den) <= POLE_TOLERANCE * scale:
            raise PoleError(f"denominator {self.denominator} vanishes at {tuple(_point_angles(point))}",
                            residual=abs(den))
        return self.numerator.evaluate(point) / den

    def to_string(self) -> str:
        if self.denominator == 1:
            return self.numerator.to_string()
        return f"({self.numerator.to_string()}) / ({self.denominator.to_string()})"

    __str__ = to_string

    def __repr__(self) -> str:
        return f"RationalFn({self.to_string()!r})"

    def to_json(self) -> Dict[str, str]:
        return {"numerator": self.numerator.to_string(), "denominator": self.denominator.to_string()}

    @classmethod
    def _raw(cls, numerator: LaurentPoly, denominator: LaurentPoly) -> "RationalFn":
        obj = cls.__new__(cls)
        obj.numerator = numerator
        obj.denominator = denominator
        return obj


def _normalize(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    n = num.num_vars
    if not num:
        return num, LaurentPoly.one(n)
    low = den.min_exponents()
    if any(low):
        negated = tuple(-e for e in low)
        den = den.shift(negated)
        num = num.shift(negated)
    if den.is_constant():
        return num.scale(Fraction(1, 1) / den.constant_value()), LaurentPoly.one(n)

    coeffs = [Fraction(c) for _, c in den.items()]
    common_den = math.lcm(*(c.denominator for c in coeffs))
    common_num = math.gcd(*(int(c * common_den) for c in coeffs))
    factor = Fraction(common_den, common_num)
    if den.leading_coefficient() < 0:
        factor = -factor
    if factor != 1:
        den = den.scale(factor)
        num = num.scale(factor)
    return num, den


# --- Operation-style entry points ---

_ARITH = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    try:
        return _ARITH[op](a, b)
    except KeyError:
        raise ValueError(f"unknown polynomial operation {op!r}; expected one of {sorted(_ARITH)}") from None


def poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.exact_div(b)


def phi(value: Union[LaurentPoly, RationalFn]) -> Union[LaurentPoly, RationalFn]:
    return value.phi()


def eval_complex(value: Union[LaurentPoly, RationalFn], point: TorusPoint) -> complex:
    return value.evaluate(point)


def compare_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True when a = +-(monomial) * b, monomials in half-integer powers allowed."""
    if a.num_vars != b.num_vars:
        raise VariableMismatchError("cannot compare polynomials in different variable counts")
    if not a or not b:
        return not a and not b
    if len(a) != len(b):
        return False
    a_exps, a_coeff = a.leading_term()
    b_exps, b_coeff = b.leading_term()
    ratio = Fraction(a_coeff) / Fraction(b_coeff)
    if abs(ratio) != 1:
        return False
    return a == b.shift(tuple(map(_sub, a_exps, b_exps))).scale(ratio)
