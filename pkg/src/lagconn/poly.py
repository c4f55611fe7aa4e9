"""Exact multivariate polynomials over the rationals.

Terms are stored sparsely as exponent-tuple -> Fraction with no zero
coefficients.  The canonical monomial order is graded lexicographic:
higher total degree first, ties broken lexicographically on the
exponent tuple.  All arithmetic is exact; a configurable monomial-count
ceiling turns runaway expansion into a hard error instead of an
unbounded computation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import MonomialCeilingError

_DEFAULT_CEILING = 20000
_ceiling = _DEFAULT_CEILING


def set_monomial_ceiling(limit: int) -> None:
    global _ceiling
    if limit < 1:
        raise ValueError("ceiling must be positive")
    _ceiling = limit


def get_monomial_ceiling() -> int:
    return _ceiling


def _check_ceiling(terms: dict) -> dict:
    if len(terms) > _ceiling:
        raise MonomialCeilingError(
            f"polynomial has {len(terms)} monomials, ceiling is {_ceiling}"
        )
    return terms


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class Poly:
    """Sparse exact polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        else:
            self.terms = _check_ceiling(
                {e: c for e, c in terms.items() if c != 0}
            )

    # --- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value) -> "Poly":
        value = Fraction(value)
        if value == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls.const(nvars, 1)

    # --- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        terms = dict(big)
        for e, c in small.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s == 0:
                    del terms[e]
                else:
                    terms[e] = s
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = _check_ceiling(terms)
        return out

    def __neg__(self) -> "Poly":
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly(self.nvars)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        terms: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = terms.get(e)
                if c is None:
                    terms[e] = ca * cb
                else:
                    c = c + ca * cb
                    if c == 0:
                        del terms[e]
                    else:
                        terms[e] = c
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = _check_ceiling(terms)
        return out

    def scale(self, factor) -> "Poly":
        factor = Fraction(factor)
        if factor == 0:
            return Poly(self.nvars)
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = {e: c * factor for e, c in self.terms.items()}
        return out

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            k >>= 1
            if base_needed and k:
                base = base * base
        return result

    # --- calculus -------------------------------------------------------

    def partial(self, index: int) -> "Poly":
        terms: dict = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            ne = list(e)
            ne[index] = k - 1
            terms[tuple(ne)] = c * k
        return Poly(self.nvars, terms)

    def eval(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def eval_float(self, point) -> float | complex:
        total = 0.0
        for e, c in self.terms.items():
            v = float(c)
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    # --- canonical order and normalization --------------------------------

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, abs(c.numerator))
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple["Poly", Fraction]:
        """Return (primitive part with positive leading coefficient, scale)."""
        if not self.terms:
            return self, Fraction(1)
        c = self.content()
        _, lead = self.leading()
        if lead < 0:
            c = -c
        return self.scale(1 / c), c

    # --- division and gcd -------------------------------------------------

    def divmod_exact(self, divisor: "Poly") -> "Poly | None":
        """Exact quotient self/divisor, or None when not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly(self.nvars)
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_value())
        rem = self
        q_terms: dict = {}
        de, dc = divisor.leading()
        while not rem.is_zero():
            re, rc = rem.leading()
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe):
                return None
            qc = rc / dc
            q_terms[qe] = q_terms.get(qe, Fraction(0)) + qc
            t = Poly(self.nvars, {qe: qc})
            rem = rem - t * divisor
        return Poly(self.nvars, q_terms)

    def divides(self, other: "Poly") -> bool:
        return other.divmod_exact(self) is not None

    # helpers for gcd: treat as univariate in variable `v` with Poly coefficients

    def _vars_present(self) -> list:
        present = [False] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    present[i] = True
        return [i for i, p in enumerate(present) if p]

    def _coeffs_in(self, v: int) -> dict:
        out: dict = {}
        for e, c in self.terms.items():
            k = e[v]
            ne = list(e)
            ne[v] = 0
            bucket = out.setdefault(k, {})
            bucket[tuple(ne)] = bucket.get(tuple(ne), Fraction(0)) + c
        return {k: Poly(self.nvars, t) for k, t in out.items() if any(t.values())}

    @staticmethod
    def _from_coeffs(nvars: int, v: int, coeffs: dict) -> "Poly":
        terms: dict = {}
        for k, poly in coeffs.items():
            for e, c in poly.terms.items():
                ne = list(e)
                ne[v] += k
                terms[tuple(ne)] = terms.get(tuple(ne), Fraction(0)) + c
        return Poly(nvars, terms)

    def gcd(self, other: "Poly") -> "Poly":
        """Primitive gcd with positive leading coefficient (1 for coprime)."""
        a, b = self, other
        if a.is_zero():
            return b.primitive()[0] if not b.is_zero() else b
        if b.is_zero():
            return a.primitive()[0]
        if a.is_constant() or b.is_constant():
            return Poly.one(self.nvars)
        va = set(a._vars_present())
        vb = set(b._vars_present())
        common = va & vb
        if not common:
            return Poly.one(self.nvars)
        v = min(common)
        ca = a._coeffs_in(v)
        cb = b._coeffs_in(v)

        def cont(coeffs: dict) -> Poly:
            g = Poly.zero(self.nvars)
            for p in coeffs.values():
                g = g.gcd(p)
                if g.is_constant() and not g.is_zero():
                    return Poly.one(self.nvars)
            return g

        cont_a = cont(ca)
        cont_b = cont(cb)
        prim_a = Poly._from_coeffs(self.nvars, v, {k: p.divmod_exact(cont_a) for k, p in ca.items()})
        prim_b = Poly._from_coeffs(self.nvars, v, {k: p.divmod_exact(cont_b) for k, p in cb.items()})
        g = Poly._prs_gcd(prim_a, prim_b, v)
        result = cont_a.gcd(cont_b) * g
        return result.primitive()[0]

    @staticmethod
    def _prs_gcd(a: "Poly", b: "Poly", v: int) -> "Poly":
        """Primitive polynomial remainder sequence in variable v."""

        def deg(p: "Poly") -> int:
            return max((e[v] for e in p.terms), default=-1)

        def prim(p: "Poly") -> "Poly":
            coeffs = p._coeffs_in(v)
            c = Poly.zero(p.nvars)
            for q in coeffs.values():
                c = c.gcd(q)
                if c.is_constant() and not c.is_zero():
                    return p.primitive()[0]
            out = Poly._from_coeffs(p.nvars, v, {k: q.divmod_exact(c) for k, q in coeffs.items()})
            return out.primitive()[0]

        if deg(a) < deg(b):
            a, b = b, a
        while True:
            r = Poly._pseudo_rem(a, b, v)
            if r.is_zero():
                return prim(b)
            if max((e[v] for e in r.terms), default=0) == 0:
                return Poly.one(a.nvars)
            a, b = b, prim(r)

    @staticmethod
    def _pseudo_rem(a: "Poly", b: "Poly", v: int) -> "Poly":
        def deg(p: "Poly") -> int:
            return max((e[v] for e in p.terms), default=-1)

        da, db = deg(a), deg(b)
        if da < db:
            return a
        lb = b._coeffs_in(v)[db]
        rem = a
        for _ in range(da - db + 1):
            dr = deg(rem)
            if dr < db or rem.is_zero():
                rem = rem * lb
                continue
            lr = rem._coeffs_in(v)[dr]
            shift = Poly.variable(a.nvars, v) ** (dr - db)
            rem = rem * lb - b * lr * shift
        return rem

    # --- printing ---------------------------------------------------------

    def to_str(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i]
                for i, k in enumerate(e)
                if k
            )
            mag = abs(c)
            if mono:
                coeff = "" if mag == 1 else f"{mag}*"
                body = f"{coeff}{mono}"
            else:
                body = f"{mag}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self.nvars}, {dict(self.sorted_terms())!r})"
