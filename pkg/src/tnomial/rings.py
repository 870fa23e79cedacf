"""Exact arithmetic cores.

Everything here is immutable and exact: arbitrary-precision integers
(plain ``int``), always-reduced rationals (``fractions.Fraction``), a
sparse bivariate polynomial ring over the integers, a quadratic integer
ring Z[t]/(t^2 - alpha*t - 1), and truncated formal power series over
any of those coefficient rings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisibilityError, ParameterMismatchError

# Reduced rationals: Fraction already guarantees gcd(|num|, den) = 1,
# den >= 1, and zero normalized to 0/1, which is exactly the contract
# the exact routines below rely on.
Rational = Fraction


def exact_div(a: int, b: int) -> int:
    """Quotient a / b when b divides a exactly; DivisibilityError otherwise."""
    if b == 0:
        raise DivisibilityError(a, b)
    quot, rem = divmod(a, b)
    if rem:
        raise DivisibilityError(a, b)
    return quot


def _pow_str(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"


class BiPoly:
    """Polynomial in the two indeterminates p and q with integer coefficients.

    Sparse representation: a map from exponent pairs ``(i, j)``, standing
    for ``p**i * q**j``, to nonzero coefficients.  The map is canonical
    (zero coefficients are never stored), so structural equality of the
    maps is polynomial equality.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None) -> None:
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), coeff in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent pair ({i}, {j})")
                if coeff:
                    clean[(i, j)] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> BiPoly:
        return cls()

    @classmethod
    def one(cls) -> BiPoly:
        return cls.from_int(1)

    @classmethod
    def from_int(cls, value: int) -> BiPoly:
        return cls({(0, 0): value} if value else None)

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> BiPoly:
        return cls({(i, j): coeff} if coeff else None)

    @classmethod
    def var_p(cls) -> BiPoly:
        return cls.monomial(1, 0)

    @classmethod
    def var_q(cls) -> BiPoly:
        return cls.monomial(0, 1)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(other: object) -> BiPoly | None:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.from_int(other)
        return None

    def __add__(self, other: BiPoly | int) -> BiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self._terms)
        for exp, coeff in rhs._terms.items():
            total = merged.get(exp, 0) + coeff
            if total:
                merged[exp] = total
            else:
                del merged[exp]
        return BiPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other: BiPoly | int) -> BiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int) -> BiPoly:
        return (-self) + other

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({exp: coeff * other for exp, coeff in self._terms.items()} if other else None)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                exp = (i1 + i2, j1 + j2)
                total = out.get(exp, 0) + c1 * c2
                if total:
                    out[exp] = total
                else:
                    del out[exp]
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BiPoly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if not self._terms:
            return hash(0)
        if set(self._terms) == {(0, 0)}:
            return hash(self._terms[(0, 0)])
        return hash(frozenset(self._terms.items()))

    def eval(self, p0: int, q0: int) -> int:
        """Exact evaluation at integer arguments."""
        return sum(coeff * p0**i * q0**j for (i, j), coeff in self._terms.items())

    def swap_vars(self) -> BiPoly:
        """The image under exchanging p and q."""
        return BiPoly({(j, i): coeff for (i, j), coeff in self._terms.items()})

    def total_degrees(self) -> set[int]:
        return {i + j for i, j in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = self.total_degrees()
        if not degrees:
            return True
        if degree is None:
            return len(degrees) == 1
        return degrees == {degree}

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in canonical display order: lexicographic on the exponent
        pair (p-degree, q-degree), leading term first."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered: list[tuple[str, str]] = []
        for (i, j), coeff in self.sorted_terms():
            mono = "*".join(s for s in (_pow_str("p", i), _pow_str("q", j)) if s)
            if mono:
                body = mono if abs(coeff) == 1 else f"{abs(coeff)}*{mono}"
            else:
                body = str(abs(coeff))
            rendered.append(("-" if coeff < 0 else "+", body))
        sign, first = rendered[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in rendered[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self._terms!r})"


class QuadElem:
    """Element a + b*t of the quadratic integer ring Z[t]/(t^2 - alpha*t - 1).

    t is the image of the larger root (alpha + sqrt(alpha^2 + 4)) / 2 and
    alpha - t the image of the smaller; their product reduces to exactly -1.
    Instances are immutable; mixing elements with different alpha raises
    ParameterMismatchError.
    """

    __slots__ = ("a", "b", "alpha")

    def __init__(self, a: int, b: int, alpha: int) -> None:
        if alpha < 1:
            raise ValueError("alpha must be a positive integer")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "alpha", alpha)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadElem is immutable")

    @classmethod
    def from_int(cls, value: int, alpha: int) -> QuadElem:
        return cls(value, 0, alpha)

    @classmethod
    def root(cls, alpha: int) -> QuadElem:
        """t itself: the image of (alpha + sqrt(alpha^2 + 4)) / 2."""
        return cls(0, 1, alpha)

    @classmethod
    def conjugate_root(cls, alpha: int) -> QuadElem:
        """alpha - t: the image of (alpha - sqrt(alpha^2 + 4)) / 2."""
        return cls(alpha, -1, alpha)

    def _check(self, other: QuadElem) -> None:
        if self.alpha != other.alpha:
            raise ParameterMismatchError(
                f"cannot mix rings with alpha={self.alpha} and alpha={other.alpha}"
            )

    def __add__(self, other: QuadElem | int) -> QuadElem:
        if isinstance(other, int):
            return QuadElem(self.a + other, self.b, self.alpha)
        if not isinstance(other, QuadElem):
            return NotImplemented
        self._check(other)
        return QuadElem(self.a + other.a, self.b + other.b, self.alpha)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.a, -self.b, self.alpha)

    def __sub__(self, other: QuadElem | int) -> QuadElem:
        if isinstance(other, int):
            return QuadElem(self.a - other, self.b, self.alpha)
        if not isinstance(other, QuadElem):
            return NotImplemented
        self._check(other)
        return QuadElem(self.a - other.a, self.b - other.b, self.alpha)

    def __rsub__(self, other: int) -> QuadElem:
        return (-self) + other

    def __mul__(self, other: QuadElem | int) -> QuadElem:
        if isinstance(other, int):
            return QuadElem(self.a * other, self.b * other, self.alpha)
        if not isinstance(other, QuadElem):
            return NotImplemented
        self._check(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        # (a1 + b1 t)(a2 + b2 t) with t^2 = alpha*t + 1
        return QuadElem(
            a1 * a2 + b1 * b2,
            a1 * b2 + a2 * b1 + self.alpha * b1 * b2,
            self.alpha,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> QuadElem:
        if exponent < 0:
            raise ValueError("negative power in the quadratic ring")
        result = QuadElem.from_int(1, self.alpha)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> QuadElem:
        """Ring conjugate: swaps t and alpha - t."""
        return QuadElem(self.a + self.alpha * self.b, -self.b, self.alpha)

    def norm(self) -> int:
        """Product with the conjugate; always t-free."""
        return self.a * self.a + self.alpha * self.a * self.b - self.b * self.b

    def is_integer(self) -> bool:
        return self.b == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.alpha) == (other.a, other.b, other.alpha)
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.alpha))

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}*t"

    def __repr__(self) -> str:
        return f"QuadElem({self.a}, {self.b}, alpha={self.alpha})"


class XSeries:
    """Formal power series in x truncated at a fixed order.

    ``coefficients[k]`` is the coefficient of x**k; exactly ``order`` of
    them are kept and anything at or beyond the order is undefined (asking
    for it raises IndexError).  Sums and products truncate to the smaller
    operand order; the retained coefficients of a truncated product agree
    with the untruncated one.  Works over any coefficient ring supporting
    ``+``, unary ``-``, ``*``, and multiplication by int.
    """

    __slots__ = ("_coeffs", "_order", "_zero")

    def __init__(self, coeffs: Iterable, order: int | None = None, zero: object = None) -> None:
        cs = list(coeffs)
        if zero is None:
            if not cs:
                raise ValueError("cannot infer the zero coefficient of an empty series")
            zero = cs[0] * 0
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) < order:
            cs.extend([zero] * (order - len(cs)))
        else:
            cs = cs[:order]
        self._coeffs = tuple(cs)
        self._order = order
        self._zero = zero

    @classmethod
    def one(cls, order: int, one: object = 1) -> XSeries:
        """The multiplicative identity truncated at ``order``."""
        return cls([one], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def __getitem__(self, k: int):
        if not 0 <= k < self._order:
            raise IndexError(f"coefficient {k} is beyond the truncation order {self._order}")
        return self._coeffs[k]

    def __add__(self, other: XSeries) -> XSeries:
        if not isinstance(other, XSeries):
            return NotImplemented
        order = min(self._order, other._order)
        return XSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(order)],
            order,
            zero=self._zero,
        )

    def __neg__(self) -> XSeries:
        return XSeries([-c for c in self._coeffs], self._order, zero=self._zero)

    def __sub__(self, other: XSeries) -> XSeries:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: XSeries) -> XSeries:
        if not isinstance(other, XSeries):
            return NotImplemented
        order = min(self._order, other._order)
        out = []
        for k in range(order):
            acc = self._zero
            for i in range(k + 1):
                acc = acc + self._coeffs[i] * other._coeffs[k - i]
            out.append(acc)
        return XSeries(out, order, zero=self._zero)

    def scale(self, factor) -> XSeries:
        """Multiply every coefficient by a ring scalar."""
        return XSeries([c * factor for c in self._coeffs], self._order, zero=self._zero)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"XSeries({list(self._coeffs)!r}, order={self._order})"


def geometric_series(lam, order: int) -> XSeries:
    """Expansion of 1 / (1 - lam*x) to the given order: sum of lam**j x**j."""
    one = lam**0
    coeffs = [one]
    current = one
    for _ in range(max(order - 1, 0)):
        current = current * lam
        coeffs.append(current)
    return XSeries(coeffs, order, zero=one * 0)


def series_product(factors: Iterable[XSeries], order: int, one=1) -> XSeries:
    """Product of already-expanded series factors, truncated at ``order``.

    The empty product is the identity series; reciprocal factors must be
    expanded (e.g. with :func:`geometric_series`) before being passed in.
    """
    acc = XSeries([one], order, zero=one * 0)
    for factor in factors:
        acc = acc * factor
    return acc
