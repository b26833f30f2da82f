"""Exact arithmetic in F_{p^d} for odd p, plus the number-theoretic predicates
(quadratic character, square roots, element orders, roots of unity) that the
code constructions depend on.

Elements are canonically encoded as integers value(x) = sum(coeffs[i] * p^i)
with coefficients constant-term first.  Fields small enough to materialize
carry full exp/log tables for the multiplicative group, making mul/div/pow
O(1); addition works digit-wise on the encoding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import sympy

from .errors import (
    DegreeZero,
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLarge,
    NonPrime,
    NotASquare,
    NotASubfield,
    NotDividing,
    ZeroElement,
    ZeroToNegativePower,
)

# Largest q for which exp/log tables are built.  Larger parameter sets are
# handled by validation-only integer arithmetic and never construct a field.
TABLE_BUDGET = 1 << 20


# --- dense polynomial arithmetic over F_p (coefficient lists, constant first) ---

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = a[:]
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fi) % p
        _ptrim(a)
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _frobenius(h: list[int], times: int, f: list[int], p: int) -> list[int]:
    for _ in range(times):
        h = _ppowmod(h, p, f, p)
    return h


def _is_irreducible(f: list[int], p: int) -> bool:
    """Monic f of degree d is irreducible over F_p iff x^{p^d} = x (mod f)
    and gcd(x^{p^{d/l}} - x, f) is constant for every prime l | d."""
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]
    h = _frobenius(x, d, f, p)
    if _ptrim(h[:]) != x:
        return False
    for ell in sympy.primefactors(d):
        h = _frobenius(x, d // ell, f, p)
        diff = h[:] + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f[:], _ptrim(diff), p)
        if len(g) > 1:
            return False
    return True


def _find_modulus(p: int, d: int) -> tuple[int, ...]:
    """Smallest-encoding monic irreducible polynomial of degree d over F_p."""
    if d == 1:
        return (0, 1)  # x itself; reduction mod x plays no role for d=1
    for low in range(p**d):
        f = [(low // p**i) % p for i in range(d)] + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """Immutable description of F_q = F_p[x]/(modulus) with a fixed primitive
    element g and full exp/log tables.  Safe to share across threads."""

    def __init__(self, p: int, d: int):
        if d < 1:
            raise DegreeZero()
        if p == 2:
            raise EvenCharacteristic()
        if not sympy.isprime(p):
            raise NonPrime(p)
        q = p**d
        if q > TABLE_BUDGET:
            raise FieldTooLarge(q, TABLE_BUDGET)
        self.p = p
        self.d = d
        self.q = q
        self.modulus = _find_modulus(p, d)
        self.q1_factors = tuple(sorted(sympy.factorint(q - 1)))
        self._build_tables()
        self._np_tables = None

    # -- construction helpers --

    def _poly_of(self, value: int) -> list[int]:
        return _ptrim([(value // self.p**i) % self.p for i in range(self.d)])

    def _value_of(self, poly: list[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(poly))

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _pmul(self._poly_of(a), self._poly_of(b), self.p)
        return self._value_of(_pmod(prod, list(self.modulus), self.p))

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        q1 = self.q - 1
        # generator: smallest encoding whose order is exactly q-1
        g_val = None
        for cand in range(2, self.q):
            if all(self._raw_pow(cand, q1 // ell) != 1 for ell in self.q1_factors):
                g_val = cand
                break
        if g_val is None:  # only q = 3 has no candidate >= 2 ... but 2 works there
            raise AssertionError("no primitive element found")
        self.g_val = g_val
        exp = [0] * q1
        acc = 1
        for i in range(q1):
            exp[i] = acc
            acc = self._raw_mul(acc, g_val)
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self.exp = exp
        self.log = log

    # -- element handles --

    @property
    def g(self) -> "FieldElement":
        return FieldElement(self, self.g_val)

    @property
    def r(self) -> int:
        """p^{d/2} for even-degree fields (the square-root of q)."""
        if self.d % 2 != 0:
            raise ValueError(f"q = {self.q} is not a square")
        return self.p ** (self.d // 2)

    def elem(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"encoding {value} out of range [0, {self.q})")
        return FieldElement(self, value)

    def from_coeffs(self, coeffs: list[int]) -> "FieldElement":
        if len(coeffs) > self.d:
            raise ValueError("too many coefficients")
        return FieldElement(self, sum((c % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.q))

    # -- raw arithmetic on canonical encodings (hot paths use these) --

    def add_v(self, a: int, b: int) -> int:
        p = self.p
        if self.d == 1:
            return (a + b) % p
        out, mult = 0, 1
        for _ in range(self.d):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub_v(self, a: int, b: int) -> int:
        p = self.p
        if self.d == 1:
            return (a - b) % p
        out, mult = 0, 1
        for _ in range(self.d):
            out += ((a - b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg_v(self, a: int) -> int:
        return self.sub_v(0, a)

    def mul_v(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv_v(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero()
        return self.exp[-self.log[a] % (self.q - 1)]

    def div_v(self, a: int, b: int) -> int:
        return self.mul_v(a, self.inv_v(b))

    def pow_v(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroToNegativePower()
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def int_v(self, c: int) -> int:
        """Encoding of the integer c viewed in the prime subfield."""
        return c % self.p

    # -- number-theoretic predicates --

    def chi_v(self, a: int) -> int:
        """Quadratic character: a^((q-1)/2), reported as +1 / -1 / 0."""
        if a == 0:
            return 0
        return 1 if self.pow_v(a, (self.q - 1) // 2) == 1 else -1

    def sqrt_v(self, a: int) -> int:
        """Canonical square root (the value-smaller of the two) via
        Tonelli-Shanks; valid for every odd q."""
        if a == 0:
            return 0
        if self.chi_v(a) != 1:
            raise NotASquare(a)
        q1 = self.q - 1
        s, m = q1, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        # g is a non-residue by definition of a primitive element
        c = self.pow_v(self.g_val, s)
        t = self.pow_v(a, s)
        root = self.pow_v(a, (s + 1) // 2)
        while t != 1:
            t2, i = t, 0
            while t2 != 1:
                t2 = self.mul_v(t2, t2)
                i += 1
            b = c
            for _ in range(m - i - 1):
                b = self.mul_v(b, b)
            m = i
            c = self.mul_v(b, b)
            t = self.mul_v(t, c)
            root = self.mul_v(root, b)
        other = self.neg_v(root)
        return min(root, other)

    def order_v(self, a: int) -> int:
        if a == 0:
            raise ZeroElement()
        e = self.q - 1
        for ell in self.q1_factors:
            while e % ell == 0 and self.pow_v(a, e // ell) == 1:
                e //= ell
        return e

    def root_of_unity_v(self, m: int) -> int:
        if m < 1 or (self.q - 1) % m != 0:
            raise NotDividing(m, self.q - 1)
        return self.pow_v(self.g_val, (self.q - 1) // m)

    def subfield_generator_v(self, sub_q: int) -> int:
        for e in range(1, self.d + 1):
            if self.p**e == sub_q and self.d % e == 0:
                return self.pow_v(self.g_val, (self.q - 1) // (sub_q - 1))
        raise NotASubfield(sub_q, self.q)

    def in_subfield_v(self, a: int, sub_q: int) -> bool:
        """Membership test x in F_{sub_q} <=> x^{sub_q} = x."""
        e = 0
        while self.p**e < sub_q:
            e += 1
        if self.p**e != sub_q or self.d % e != 0:
            raise NotASubfield(sub_q, self.q)
        return self.pow_v(a, sub_q) == a

    def subfield_elements_v(self, sub_q: int) -> list[int]:
        """All encodings of the subfield with sub_q elements, ascending."""
        gamma = self.subfield_generator_v(sub_q)
        vals = {0, 1}
        acc = gamma
        for _ in range(sub_q - 2):
            vals.add(acc)
            acc = self.mul_v(acc, gamma)
        return sorted(vals)

    # -- vectorized table views (lazily built, used by verify) --

    @property
    def np_tables(self):
        if self._np_tables is None:
            import numpy as np

            exp = np.array(self.exp, dtype=np.int64)
            log = np.array(self.log, dtype=np.int64)
            self._np_tables = (exp, log)
        return self._np_tables

    # -- formatting --

    def format_v(self, value: int) -> str:
        """Text form of an element, e.g. encoding 4 in F_9 -> '1+x'."""
        coeffs = [(value // self.p**i) % self.p for i in range(self.d)]
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms) if terms else "0"

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.d, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, d={self.d}, q={self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.d) == (other.p, other.d)

    def __hash__(self) -> int:
        return hash((self.p, self.d))


@dataclass(frozen=True)
class FieldElement:
    """One element of F_q, canonically encoded as value = sum(coeffs[i] p^i)."""

    ctx: FieldCtx
    val: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.val // self.ctx.p**i) % self.ctx.p for i in range(self.ctx.d))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("elements of different fields")
            return other.val
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add_v(self.val, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub_v(self.val, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub_v(self._coerce(other), self.val))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul_v(self.val, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div_v(self.val, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg_v(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow_v(self.val, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            # integers compare as elements of the prime subfield
            return self.val == other % self.ctx.p
        return isinstance(other, FieldElement) and self.ctx == other.ctx and self.val == other.val

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.d, self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"<{self.ctx.format_v(self.val)} in F_{self.ctx.q}>"


@functools.lru_cache(maxsize=None)
def make_field(p: int, d: int) -> FieldCtx:
    """Deterministic field context: value-smallest irreducible modulus and
    value-smallest primitive element.  Idempotent and cached."""
    return FieldCtx(p, d)


# --- module-level operation surface ---

def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def quadratic_character(a: FieldElement) -> int:
    return a.ctx.chi_v(a.val)


def sqrt(a: FieldElement) -> FieldElement:
    return FieldElement(a.ctx, a.ctx.sqrt_v(a.val))


def element_order(a: FieldElement) -> int:
    return a.ctx.order_v(a.val)


def root_of_unity(m: int, ctx: FieldCtx) -> FieldElement:
    return FieldElement(ctx, ctx.root_of_unity_v(m))


def subfield_generator(ctx: FieldCtx, sub_q: int) -> FieldElement:
    return FieldElement(ctx, ctx.subfield_generator_v(sub_q))
