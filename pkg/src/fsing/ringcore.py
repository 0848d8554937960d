"""Exact arithmetic foundation: prime fields, sparse multivariate polynomials
over F_p, and the ceiling arithmetic behind every splitting exponent.

A polynomial is a sparse map from exponent tuples to nonzero residues in
[1, p).  No zero coefficients are ever stored, so equal polynomials have
equal representations.  The canonical term order for printing and hashing is
degree-reverse-lexicographic with x1 > x2 > ... (degrevlex).  All values are
immutable after construction and safe to share between threads.

Exponents are Python integers, so they never overflow; computing p^e still
goes through :func:`prime_power`, which raises instead of materialising an
absurdly large Frobenius power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, ParseError, ResourceLimitError, StructuralError

# Exponent vector, one entry per ambient variable.
Monomial = tuple[int, ...]

# Exact rational exponents t.  fractions.Fraction already keeps lowest terms
# and compares exactly, which is all the contract asks for.
ExactRational = Fraction

# p^e beyond this raises ResourceLimitError rather than letting a runaway
# Frobenius power exhaust memory.
MAX_FROBENIUS_POWER = 2**62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(p: int, e: int) -> int:
    """p^e with the overflow guard; e >= 0."""
    if e < 0:
        raise ContractError("exponent e must be non-negative")
    q = p**e
    if q > MAX_FROBENIUS_POWER:
        raise ResourceLimitError(f"p^e = {p}^{e} exceeds the configured guard")
    return q


@dataclass(frozen=True)
class PrimeFieldElement:
    """A fully reduced residue in F_p.

    Polynomial coefficients are stored as raw residues for speed; this class
    is the value type for scalar arithmetic at the API surface.
    """

    value: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ContractError(f"{self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "PrimeFieldElement"):
        if self.p != other.p:
            raise StructuralError("mixed characteristics")

    def __add__(self, other):
        self._check(other)
        return PrimeFieldElement(self.value + other.value, self.p)

    def __sub__(self, other):
        self._check(other)
        return PrimeFieldElement(self.value - other.value, self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __mul__(self, other):
        self._check(other)
        return PrimeFieldElement(self.value * other.value, self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return PrimeFieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0


# ---------------------------------------------------------------------------
# monomial helpers


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def degrevlex_key(exps: Monomial):
    """Sort key: max() under this key is the degrevlex leading monomial."""
    return (sum(exps), tuple(-v for v in reversed(exps)))


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class Ring:
    """The ambient polynomial ring F_p[x1, ..., xn]."""

    p: int
    variables: tuple[str, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ContractError(f"characteristic {self.p} is not prime")
        if len(set(self.variables)) != len(self.variables):
            raise ContractError("duplicate variable names")
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def poly(self, terms: dict) -> "Polynomial":
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def monomial(self, exps) -> "Polynomial":
        return Polynomial(self, {tuple(exps): 1})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __str__(self):
        return f"F_{self.p}[{','.join(self.variables)}]"


class Polynomial:
    """Sparse element of F_p[x1..xn]; immutable by convention."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        reduced = {}
        n = ring.nvars
        for exps, coeff in terms.items():
            c = coeff % ring.p
            if c == 0:
                continue
            if len(exps) != n or any(v < 0 for v in exps):
                raise StructuralError(f"bad exponent vector {exps} for {ring}")
            reduced[tuple(exps)] = (reduced.get(tuple(exps), 0) + c) % ring.p
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {m: c for m, c in reduced.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise StructuralError(f"mixed ambient rings {self.ring} and {other.ring}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        terms = dict(self.terms)
        p = self.ring.p
        for m, c in other.terms.items():
            s = (terms.get(m, 0) + c) % p
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        p = self.ring.p
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = (acc.get(m, 0) + c1 * c2) % p
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ContractError("polynomial power must be non-negative")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def frobenius_power(self, e: int) -> "Polynomial":
        """f^(p^e), computed termwise.

        Coefficients live in F_p and are fixed by Frobenius, so only the
        exponents scale; this is exact and much cheaper than repeated
        multiplication.
        """
        if e < 1:
            raise ContractError("Frobenius exponent e must be >= 1")
        q = prime_power(self.ring.p, e)
        return Polynomial(
            self.ring, {tuple(v * q for v in m): c for m, c in self.terms.items()}
        )

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.ring.nvars: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def leading_monomial(self, key=degrevlex_key) -> Monomial:
        if not self.terms:
            raise ContractError("zero polynomial has no leading monomial")
        return max(self.terms, key=key)

    def leading_coefficient(self, key=degrevlex_key) -> int:
        return self.terms[self.leading_monomial(key)]

    def monic(self, key=degrevlex_key) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.leading_coefficient(key)
        if lc == 1:
            return self
        inv = pow(lc, self.ring.p - 2, self.ring.p)
        return inv * self

    def coefficient(self, exps) -> PrimeFieldElement:
        return PrimeFieldElement(self.terms.get(tuple(exps), 0), self.ring.p)

    # -- calculus and substitution -------------------------------------------

    def derivative(self, var_index: int) -> "Polynomial":
        terms = {}
        for m, c in self.terms.items():
            a = m[var_index]
            if a == 0:
                continue
            exps = list(m)
            exps[var_index] = a - 1
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + c * a
        return Polynomial(self.ring, terms)

    def shift(self, point) -> "Polynomial":
        """Substitute x_i -> x_i + c_i, translating `point` to the origin."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise StructuralError("point arity mismatch")
        shifted_vars = [ring.var(v) + (c % ring.p) for v, c in zip(ring.variables, point)]
        result = ring.zero()
        for m, c in self.terms.items():
            term = ring.constant(c)
            for i, a in enumerate(m):
                if a:
                    term = term * shifted_vars[i] ** a
            result = result + term
        return result

    def evaluate(self, point) -> int:
        p = self.ring.p
        total = 0
        for m, c in self.terms.items():
            v = c
            for a, coord in zip(m, point):
                if a:
                    v = v * pow(coord % p, a, p) % p
            total = (total + v) % p
        return total

    # -- identity ------------------------------------------------------------

    def sorted_terms(self, key=degrevlex_key, reverse=True):
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=reverse)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            if c != 1 or mono_degree(m) == 0:
                factors.append(str(c))
            for name, a in zip(self.ring.variables, m):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring}>"


# ---------------------------------------------------------------------------
# threshold ceilings


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def ceil_threshold_exponent(t, p: int, e: int, variant: str = "pe_minus_1") -> int:
    """Exact ceil(t * (p^e - 1)) or ceil(t * p^e); no floating point anywhere.

    The pe_minus_1 variant is the exponent attached to level-e splitting
    data; the pe variant drives the regular-ambient test-ideal chain.
    """
    t = Fraction(t)
    if t <= 0:
        raise ContractError("t must be positive")
    if e < 1:
        raise ContractError("e must be >= 1")
    q = prime_power(p, e)
    if variant == "pe_minus_1":
        return ceil_fraction(t * (q - 1))
    if variant == "pe":
        return ceil_fraction(t * q)
    raise ContractError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# polynomial text grammar
#
#   poly   := ['-'] term (('+' | '-') term)*
#   term   := factor (['*'] factor)*
#   factor := INTEGER | NAME ['^' INTEGER]
#
# Coefficients are decimal integers reduced mod p; '*' is optional for
# adjacency, so "2x^2y" parses as 2*x^2*y.

_TOKEN_KINDS = (("int", "0123456789"),)


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    return tokens


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, None, None)

    def parse_factor():
        nonlocal pos
        kind, value, line, col = peek()
        if kind == "int":
            pos += 1
            return ring.constant(int(value))
        if kind == "name":
            pos += 1
            if value not in ring.variables:
                raise ParseError(f"unknown variable {value!r}", line, col)
            exp = 1
            if peek()[0] == "^":
                pos += 1
                ekind, evalue, eline, ecol = peek()
                if ekind != "int":
                    raise ParseError("expected integer exponent", eline or line, ecol or col)
                pos += 1
                exp = int(evalue)
            return ring.var(value) ** exp
        raise ParseError(
            "expected coefficient or variable", line or 1, col or 1
        )

    def parse_term():
        nonlocal pos
        result = parse_factor()
        while True:
            kind = peek()[0]
            if kind == "*":
                pos += 1
                result = result * parse_factor()
            elif kind in ("int", "name"):
                result = result * parse_factor()
            else:
                return result

    sign = 1
    kind, _, _, _ = peek()
    if kind == "-":
        sign = -1
        pos += 1
    elif kind == "+":
        pos += 1
    result = sign * parse_term()
    while pos < len(tokens):
        kind, value, line, col = peek()
        if kind == "+":
            pos += 1
            result = result + parse_term()
        elif kind == "-":
            pos += 1
            result = result - parse_term()
        else:
            raise ParseError(f"unexpected token {value!r}", line, col)
    return result


def parse_rational(text: str):
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from exc


def format_rational(t) -> str:
    t = Fraction(t)
    if t.denominator == 1:
        return str(t.numerator)
    return f"{t.numerator}/{t.denominator}"
