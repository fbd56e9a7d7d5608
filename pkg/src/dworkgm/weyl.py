"""Exact normal-form arithmetic in the localized one-variable Weyl algebra.

The algebra is k[t, t^-1]<d>, generated by the coordinate t (invertible) and
the derivation d = d/dt, subject to the single relation

    d*t - t*d = 1.

Every operator is stored in the normal form

    sum_k  p_k(t) * d^k

with Laurent-polynomial coefficients p_k over exact rationals; this
representation is unique, so equality of operators is equality of coefficient
lists.  On top of the ring arithmetic this module provides:

  * a text grammar for operators (``parse_op`` / ``str(op)``), with the Euler
    operator D = t*d available as sugar;
  * the Fourier-Laplace substitution t -> d, d -> -t and its inverse;
  * the coordinate change t -> 1/t (point at infinity);
  * indicial polynomials at zero and infinity, whose roots are the local
    exponents;
  * singular-point detection for the leading coefficient, with Fuchs-type
    regularity flags at zero and infinity.

All values are immutable and all operations are pure functions, so anything
here can be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


class ParseError(ValueError):
    """Syntax error in the operator grammar, with a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Laurent polynomials in t
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial in t with Fraction coefficients, sparse on exponents.

    Zero coefficients are never stored, so the zero polynomial has empty
    support and ``degree``/``order`` are only defined for nonzero elements.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[int(e)] = v
        self._c = c

    @staticmethod
    def term(coeff: Scalar, exponent: int = 0) -> "LaurentPoly":
        return LaurentPoly({exponent: coeff})

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def order(self) -> int:
        """Lowest exponent with nonzero coefficient (t-adic valuation)."""
        if not self._c:
            raise ValueError("order of the zero polynomial")
        return min(self._c)

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {} if not other else {e: v * other for e, v in self._c.items()}
            return out
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + v1 * v2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def derivative(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e - 1: v * e for e, v in self._c.items() if e != 0}
        return out

    def invert_variable(self) -> "LaurentPoly":
        """The substitution t -> 1/t (exponent negation)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.term(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._c.items()))!r})"


_LP_ZERO = LaurentPoly()
_LP_ONE = LaurentPoly.term(1)


# ---------------------------------------------------------------------------
# Weyl operators
# ---------------------------------------------------------------------------

class WeylOp:
    """Operator sum_k p_k(t) d^k in normal form (all d factors on the right).

    The top coefficient of a nonzero operator is nonzero; the zero operator
    has an empty coefficient list.  Arithmetic realizes d*t = t*d + 1 exactly,
    and the normal form of a given operator is unique.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs: Iterable[LaurentPoly] = ()):
        p = list(coeffs)
        while p and p[-1].is_zero:
            p.pop()
        self._p = tuple(p)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "WeylOp":
        return _W_ZERO

    @staticmethod
    def one() -> "WeylOp":
        return _W_ONE

    @staticmethod
    def constant(c: Scalar) -> "WeylOp":
        return WeylOp([LaurentPoly.term(c)])

    @staticmethod
    def from_poly(p: LaurentPoly) -> "WeylOp":
        return WeylOp([p])

    @staticmethod
    def t(exponent: int = 1) -> "WeylOp":
        return WeylOp([LaurentPoly.term(1, exponent)])

    @staticmethod
    def d(power: int = 1) -> "WeylOp":
        if power < 0:
            raise ValueError("d admits no negative powers")
        return WeylOp([_LP_ZERO] * power + [_LP_ONE])

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._p

    def order(self) -> int:
        """Degree in d."""
        if not self._p:
            raise ValueError("order of the zero operator")
        return len(self._p) - 1

    def coeff(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self._p):
            return self._p[k]
        return _LP_ZERO

    def coeffs(self) -> tuple[LaurentPoly, ...]:
        return self._p

    def monomials(self) -> Iterator[tuple[int, int, Fraction]]:
        """Yield (k, m, c) for every monomial c * t^m * d^k."""
        for k, p in enumerate(self._p):
            for m, c in p.items():
                yield k, m, c

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "WeylOp") -> "WeylOp":
        if not isinstance(other, WeylOp):
            return NotImplemented
        a, b = self._p, other._p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, q in enumerate(b):
            out[k] = out[k] + q
        return WeylOp(out)

    def __neg__(self) -> "WeylOp":
        return WeylOp([-p for p in self._p])

    def __sub__(self, other: "WeylOp") -> "WeylOp":
        return self + (-other)

    def __mul__(self, other: "WeylOp | Scalar") -> "WeylOp":
        if isinstance(other, (int, Fraction)):
            return WeylOp([p * other for p in self._p])
        if not isinstance(other, WeylOp):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return _W_ZERO
        acc: list[dict[int, Fraction]] = [
            {} for _ in range(len(self._p) + len(other._p) - 1)
        ]
        for i, p in enumerate(self._p):
            if p.is_zero:
                continue
            pc = p._c
            for j, q in enumerate(other._p):
                if q.is_zero:
                    continue
                # d^i q = sum_k C(i,k) q^(k) d^(i-k)
                deriv = q._c
                for k in range(i + 1):
                    if not deriv:
                        break
                    cmb = math.comb(i, k)
                    target = acc[i - k + j]
                    for e1, v1 in pc.items():
                        prod = v1 * cmb
                        for e2, v2 in deriv.items():
                            e = e1 + e2
                            s = target.get(e, 0) + prod * v2
                            if s:
                                target[e] = s
                            else:
                                del target[e]
                    deriv = {e - 1: v * e for e, v in deriv.items() if e}
        out = []
        for c in acc:
            lp = LaurentPoly.__new__(LaurentPoly)
            lp._c = c
            out.append(lp)
        return WeylOp(out)

    def __rmul__(self, other: Scalar) -> "WeylOp":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "WeylOp":
        if n < 0:
            raise ValueError("operators admit no negative powers")
        result = _W_ONE
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeylOp):
            return self._p == other._p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._p)

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._p:
            return "0"
        parts: list[str] = []
        for k in range(len(self._p) - 1, -1, -1):
            p = self._p[k]
            for m, c in sorted(p._c.items(), reverse=True):
                mono = []
                if m:
                    mono.append("t" if m == 1 else f"t^{m}")
                if k:
                    mono.append("d" if k == 1 else f"d^{k}")
                a = abs(c)
                if a != 1 or not mono:
                    mono.insert(0, str(a))
                term = "*".join(mono)
                if not parts:
                    parts.append(term if c > 0 else "-" + term)
                else:
                    parts.append((" + " if c > 0 else " - ") + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"<WeylOp {self}>"


_W_ZERO = WeylOp()
_W_ONE = WeylOp([_LP_ONE])


def euler_op() -> WeylOp:
    """The Euler operator D = t*d."""
    return WeylOp([_LP_ZERO, LaurentPoly.term(1, 1)])


def op_add(a: WeylOp, b: WeylOp) -> WeylOp:
    return a + b


def op_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    return a * b


def _stirling2(n: int) -> list[list[int]]:
    """Table S[k][j] of Stirling numbers of the second kind, k <= n."""
    table = [[1]]
    for k in range(1, n + 1):
        row = [0] * (k + 1)
        prev = table[k - 1]
        for j in range(1, k + 1):
            row[j] = prev[j - 1] + (j * prev[j] if j < k else 0)
        table.append(row)
    return table


def euler_product(constants: Iterable[Scalar]) -> WeylOp:
    """Normal form of prod (D - c) over the given constants.

    Computed in the commuting D-basis (an integer polynomial after clearing
    denominators) and converted by D^k = sum_j S(k, j) t^j d^j, which is much
    cheaper than repeated operator multiplication.
    """
    cs = [Fraction(c) for c in constants]
    n = len(cs)
    if n == 0:
        return _W_ONE
    scale = math.lcm(*(c.denominator for c in cs))
    ints = [int(c * scale) for c in cs]
    poly = [1]
    for ci in ints:
        nxt = [0] * (len(poly) + 1)
        for i, v in enumerate(poly):
            nxt[i + 1] += v
            nxt[i] -= v * ci
        poly = nxt
    stirling = _stirling2(n)
    denominator = scale ** n
    coeffs = []
    for j in range(n + 1):
        numerator = sum(poly[k] * stirling[k][j] * scale ** k
                        for k in range(j, n + 1))
        coeffs.append(LaurentPoly.term(Fraction(numerator, denominator), j))
    return WeylOp(coeffs)


def euler_factorization(d: int) -> WeylOp:
    """The product (D)(D-1)...(D-d+1), equal to t^d d^d in normal form."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return euler_product(range(d))


# ---------------------------------------------------------------------------
# Parser for the operator grammar
# ---------------------------------------------------------------------------
#
#   expr     := ('+'|'-')? term (('+'|'-') term)*
#   term     := factor ('*' factor)*
#   factor   := atom ('^' '-'? integer)?
#   atom     := 't' | 'd' | 'D' | rational | '(' expr ')'
#   rational := integer ('/' positive-integer)?
#
# 'D' desugars to t*d.  Negative exponents are legal only on the bare 't'.

_SYMBOLS = {"t", "d", "D"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
        elif ch in _SYMBOLS:
            tokens.append(("sym", ch, i))
            i += 1
        elif ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> WeylOp:
        op = self.expr()
        tok = self.peek()
        if tok is not None:
            if tok[0] == "/":
                raise ParseError("division token outside a rational literal", tok[2])
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return op

    def expr(self) -> WeylOp:
        sign = 1
        tok = self.peek()
        if tok is not None and tok[0] in "+-":
            self.next()
            sign = -1 if tok[0] == "-" else 1
        result = self.term() * sign
        while True:
            tok = self.peek()
            if tok is None or tok[0] not in "+-":
                break
            self.next()
            rhs = self.term()
            result = result + (rhs if tok[0] == "+" else -rhs)
        return result

    def term(self) -> WeylOp:
        result = self.factor()
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok[0] == "*":
                self.next()
                result = result * self.factor()
            elif tok[0] == "/":
                raise ParseError("division token outside a rational literal", tok[2])
            else:
                break
        return result

    def factor(self) -> WeylOp:
        base, bare_t = self.atom()
        tok = self.peek()
        if tok is None or tok[0] != "^":
            return base
        self.next()
        neg = False
        tok = self.peek()
        if tok is not None and tok[0] == "-":
            self.next()
            neg = True
        num = self.expect("num")
        n = int(num[1])
        if neg:
            if not bare_t:
                raise ParseError("negative exponents are allowed only on t", num[2])
            return WeylOp.t(-n)
        return base ** n

    def atom(self) -> tuple[WeylOp, bool]:
        tok = self.next()
        kind, value, pos = tok
        if kind == "sym":
            if value == "t":
                return WeylOp.t(), True
            if value == "d":
                return WeylOp.d(), False
            return euler_op(), False
        if kind == "num":
            numerator = int(value)
            nxt = self.peek()
            if nxt is not None and nxt[0] == "/":
                self.next()
                den = self.expect("num")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator in rational literal", den[2])
                return WeylOp.constant(Fraction(numerator, int(den[1]))), False
            return WeylOp.constant(numerator), False
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner, False
        if kind == "/":
            raise ParseError("division token outside a rational literal", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_op(text: str) -> WeylOp:
    """Parse an operator expression into its unique normal form.

    Parsing, printing and re-parsing is the identity on normal forms.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Fourier-Laplace substitution
# ---------------------------------------------------------------------------

def fourier(op: WeylOp, direction: str = "forward") -> WeylOp:
    """Fourier-Laplace substitution: forward is t -> d, d -> -t.

    This is a ring automorphism of the unlocalized Weyl algebra; the inverse
    direction is the inverse map t -> -d, d -> t.  Operators containing t^-1
    are rejected, since the substitution is only defined on polynomial
    coefficients.  Each monomial maps through the two-sided Leibniz expansion
    d^m t^k = sum_j C(m,j) * k(k-1)...(k-j+1) * t^(k-j) d^(m-j).
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    for p in op.coeffs():
        if not p.is_zero and p.order() < 0:
            raise ValueError("operator contains t^-1; the Fourier substitution "
                             "is defined only for polynomial coefficients")
    acc: dict[int, dict[int, Fraction]] = {}
    for k, m, c in op.monomials():
        # c*t^m*d^k  ->  c * d^m * (-t)^k      (forward)
        #            ->  c * (-d)^m * t^k      (inverse)
        if (k if direction == "forward" else m) % 2:
            c = -c
        falling = 1
        for j in range(min(m, k) + 1):
            target = acc.setdefault(m - j, {})
            e = k - j
            s = target.get(e, 0) + c * (math.comb(m, j) * falling)
            if s:
                target[e] = s
            else:
                del target[e]
            falling *= k - j
    if not acc:
        return _W_ZERO
    out = [_LP_ZERO] * (max(acc) + 1)
    for order, coeffs in acc.items():
        lp = LaurentPoly.__new__(LaurentPoly)
        lp._c = coeffs
        out[order] = lp
    return WeylOp(out)


# ---------------------------------------------------------------------------
# Point at infinity
# ---------------------------------------------------------------------------

def mobius_infinity(op: WeylOp) -> WeylOp:
    """Rewrite the operator in the coordinate u = 1/t.

    The substitution is generated by t -> u^-1 and t*d_t -> -(u*d_u),
    equivalently d_t -> -u^2 d_u; it is an involution on normal forms.
    The result is expressed in the (u, d_u) pair under the same names.

    Monomial rule: t^m d^k maps to (-1)^k u^(k-m) * (D)(D+1)...(D+k-1),
    where the rising Euler product in normal form is sum_i r_i u^i d^i with
    the integer recurrence r'_i = r_(i-1) + (i + k) * r_i.
    """
    if op.is_zero:
        return op
    rising = [[1]]  # rising[k][i]: coefficient of u^i d^i in prod_{j<k} (D+j)
    for k in range(op.order()):
        prev = rising[-1]
        nxt = [0] * (len(prev) + 1)
        for i, r in enumerate(prev):
            nxt[i + 1] += r
            nxt[i] += r * (i + k)
        rising.append(nxt)
    acc: dict[int, dict[int, Fraction]] = {}
    for k, m, c in op.monomials():
        if k % 2:
            c = -c
        for i, r in enumerate(rising[k]):
            if not r:
                continue
            target = acc.setdefault(i, {})
            e = k - m + i
            s = target.get(e, 0) + c * r
            if s:
                target[e] = s
            else:
                del target[e]
    if not acc:
        return _W_ZERO
    out = [_LP_ZERO] * (max(acc) + 1)
    for order, coeffs in acc.items():
        lp = LaurentPoly.__new__(LaurentPoly)
        lp._c = coeffs
        out[order] = lp
    return WeylOp(out)


# ---------------------------------------------------------------------------
# Indicial polynomials
# ---------------------------------------------------------------------------

def _falling_factorials(kmax: int) -> list[list[int]]:
    """Coefficient lists (ascending) of F_k(s) = s(s-1)...(s-k+1), k <= kmax.

    Integer coefficients (signed Stirling numbers of the first kind).
    """
    table = [[1]]
    for k in range(kmax):
        prev = table[-1]
        nxt = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            nxt[i + 1] += c          # s * prev
            nxt[i] -= c * k          # -k * prev
        table.append(nxt)
    return table


def _weight_parts(op: WeylOp) -> dict[int, list[Fraction]]:
    """Group the operator by t-weight, as polynomials in s = Euler operator.

    A monomial t^m d^k has weight m-k and contributes its coefficient times
    the falling factorial s(s-1)...(s-k+1), because t^k d^k equals that
    product of Euler factors.
    """
    if op.is_zero:
        raise ValueError("zero operator")
    fall = _falling_factorials(op.order())
    parts: dict[int, list[Fraction]] = {}
    for k, m, c in op.monomials():
        w = m - k
        acc = parts.setdefault(w, [Fraction(0)] * (op.order() + 1))
        for i, f in enumerate(fall[k]):
            acc[i] += c * f
    return {w: acc for w, acc in parts.items() if any(acc)}


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IndicialPolynomial:
    """Monic polynomial in s over the rationals, tagged with its place.

    Its degree equals the rank of the slope-zero part at the place, and its
    roots are the local exponents.  Roots are extracted exactly: rational
    roots with multiplicity, everything else reported as monic irreducible
    factors.
    """

    coeffs: tuple[Fraction, ...]  # ascending, monic
    place: str

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def roots(self) -> tuple[tuple[tuple[Fraction, int], ...], tuple[str, ...]]:
        """(rational roots with multiplicity, leftover irreducible factors)."""
        rational, leftovers = _rational_root_split(list(self.coeffs))
        return rational, tuple(format_poly(f, "s") for f in leftovers)

    def root_multiset(self) -> dict[Fraction, int]:
        return dict(self.roots()[0])

    def has_roots_exactly(self, values: Iterable[Scalar]) -> bool:
        """True iff the polynomial equals prod (s - v) over the multiset.

        Direct product comparison; independent of any factorization routine.
        """
        prod = [Fraction(1)]
        for v in values:
            v = Fraction(v)
            nxt = [Fraction(0)] * (len(prod) + 1)
            for i, c in enumerate(prod):
                nxt[i + 1] += c
                nxt[i] -= c * v
            prod = nxt
        return tuple(prod) == self.coeffs

    def __str__(self) -> str:
        return format_poly(self.coeffs, "s")


def format_poly(coeffs: Iterable[Fraction], var: str) -> str:
    """Print a univariate polynomial (ascending coefficients) in the grammar."""
    parts: list[str] = []
    cs = list(coeffs)
    for e in range(len(cs) - 1, -1, -1):
        c = cs[e]
        if not c:
            continue
        mono = []
        if e:
            mono.append(var if e == 1 else f"{var}^{e}")
        a = abs(c)
        if a != 1 or not mono:
            mono.insert(0, str(a))
        term = "*".join(mono)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts) if parts else "0"


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _rational_root_split(
    coeffs: list[Fraction],
) -> tuple[tuple[tuple[Fraction, int], ...], list[tuple[Fraction, ...]]]:
    """Split a rational polynomial into rational roots and irreducible factors.

    Zero roots and degree <= 2 pieces are peeled off directly; higher-degree
    parts go through sympy's exact factorization over Q.
    """
    coeffs = _trim(list(coeffs))
    if not coeffs:
        raise ValueError("zero polynomial has no root data")
    roots: dict[Fraction, int] = {}
    v = 0
    while not coeffs[v]:
        v += 1
    if v:
        roots[Fraction(0)] = v
        coeffs = coeffs[v:]
    leftovers: list[tuple[Fraction, ...]] = []
    deg = len(coeffs) - 1
    if deg == 0:
        pass
    elif deg == 1:
        r = -coeffs[0] / coeffs[1]
        roots[r] = roots.get(r, 0) + 1
    elif deg == 2:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        sq = _fraction_sqrt(disc)
        if sq is None:
            leftovers.append((c0 / c2, c1 / c2, Fraction(1)))
        else:
            for r in ((-c1 + sq) / (2 * c2), (-c1 - sq) / (2 * c2)):
                roots[r] = roots.get(r, 0) + 1
    else:
        import sympy

        s = sympy.Symbol("s")
        poly = sympy.Poly(list(reversed([sympy.Rational(c) for c in coeffs])), s)
        for factor, mult in poly.factor_list()[1]:
            fc = [Fraction(str(c)) for c in reversed(factor.all_coeffs())]
            if len(fc) == 2:
                r = -fc[0] / fc[1]
                roots[r] = roots.get(r, 0) + mult
            else:
                lead = fc[-1]
                monic = tuple(c / lead for c in fc)
                leftovers.extend([monic] * mult)
    ordered = tuple(sorted(roots.items()))
    return ordered, leftovers


def indicial_polynomial(op: WeylOp, place: str = "zero") -> IndicialPolynomial:
    """Indicial polynomial at zero or infinity.

    At zero: write op = sum_k t^k q_k(D) (possible after clearing a t-power)
    and take the q of minimal weight, made monic.  At infinity: move the
    point to the origin with ``mobius_infinity`` and substitute s -> -s, so
    that the Kummer operator D - a has root a at both places (exponents here
    are module-decomposition data, not solution exponents).
    """
    if op.is_zero:
        raise ValueError("zero operator has no indicial polynomial")
    if place not in ("zero", "infinity"):
        raise ValueError(f"unknown place {place!r}")
    if place == "infinity":
        inner = indicial_polynomial(mobius_infinity(op), "zero")
        flipped = _trim([c if i % 2 == 0 else -c
                         for i, c in enumerate(inner.coeffs)])
        lead = flipped[-1]
        return IndicialPolynomial(tuple(c / lead for c in flipped), "infinity")
    parts = _weight_parts(op)
    q = _trim(list(parts[min(parts)]))
    lead = q[-1]
    return IndicialPolynomial(tuple(c / lead for c in q), "zero")


# ---------------------------------------------------------------------------
# Singular support
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingularSupport:
    """Finite singular candidates and regularity flags of an operator.

    ``finite_rational`` lists the distinct rational roots of the leading
    d-coefficient away from zero; roots that are not rational stay inside
    ``other_factors`` as monic irreducible polynomials in t, never
    approximated.
    """

    finite_rational: tuple[Fraction, ...]
    other_factors: tuple[str, ...]
    regular_at_zero: bool
    regular_at_infinity: bool


def _fuchs_regular_at_zero(op: WeylOp) -> bool:
    # Fuchs condition: ord_0(p_k) - k >= ord_0(p_r) - r for every k, i.e.
    # the indicial polynomial at 0 has full degree r.
    r = op.order()
    bound = op.coeff(r).order() - r
    for k, p in enumerate(op.coeffs()):
        if not p.is_zero and p.order() - k < bound:
            return False
    return True


def finite_singular_points(op: WeylOp) -> tuple[tuple[Fraction, ...], tuple[str, ...]]:
    """Distinct rational roots of the leading d-coefficient away from zero,
    plus the leftover irreducible factors as grammar strings."""
    if op.is_zero:
        raise ValueError("zero operator has no singular support")
    lead = op.coeff(op.order())
    shift = lead.order()
    coeffs = [lead[e] for e in range(shift, lead.degree() + 1)]
    rational, leftovers = _rational_root_split(coeffs)
    finite = tuple(sorted(r for r, _ in rational if r != 0))
    return finite, tuple(format_poly(f, "t") for f in leftovers)


def singular_support(op: WeylOp) -> SingularSupport:
    """Candidate singular points in the punctured line plus 0/infinity flags.

    Finite candidates are the roots of the leading d-coefficient away from
    the origin; regularity at zero and infinity is the Fuchs condition on
    coefficient orders (all Newton-polygon slopes zero).
    """
    finite, factors = finite_singular_points(op)
    return SingularSupport(
        finite_rational=finite,
        other_factors=factors,
        regular_at_zero=_fuchs_regular_at_zero(op),
        regular_at_infinity=_fuchs_regular_at_zero(mobius_infinity(op)),
    )
