"""Sparse multivariate polynomials over Q.

Variables are kept sorted, so two polynomials over the same set of names
always share an exponent layout. Binary operations require identical
variable tuples; use :meth:`MPoly.extend` to move a polynomial into a larger
ring first.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


class MPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        order = sorted(range(len(variables)), key=variables.__getitem__)
        sorted_vars = tuple(variables[i] for i in order)
        if len(set(sorted_vars)) != len(sorted_vars):
            raise ValueError(f"repeated variable in {variables}")
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(variables):
                raise ValueError(f"exponent vector {exps} does not match {variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            key = tuple(exps[i] for i in order)
            c = clean.get(key, 0) + Fraction(c)
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self.variables = sorted_vars
        self.terms = clean

    # constructors

    @classmethod
    def const(cls, variables: Iterable[str], c) -> "MPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Iterable[str], name: str) -> "MPoly":
        variables = tuple(sorted(variables))
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(int(v == name) for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def ring(cls, *names: str) -> tuple["MPoly", ...]:
        """Return the generators of Q[names], in the order given."""
        return tuple(cls.var(names, n) for n in names)

    # structure

    def _check(self, other: "MPoly") -> None:
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.const(self.variables, other)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def extend(self, variables: Iterable[str]) -> "MPoly":
        """Embed into the ring over a superset of variables."""
        variables = tuple(sorted(set(variables)))
        missing = set(self.variables) - set(variables)
        if missing:
            raise ValueError(f"cannot drop variables {sorted(missing)}")
        index = [variables.index(v) for v in self.variables]
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for i, e in zip(index, exps):
                new[i] = e
            terms[tuple(new)] = c
        return MPoly(variables, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # arithmetic

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            return MPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative integer")
        result = MPoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = MPoly.const(self.variables, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # evaluation and substitution

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at a point; every variable must be assigned."""
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise ValueError(f"no value for {missing}")
        point = [values[v] for v in self.variables]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x ** e
            total = total + term
        return total

    def substitute(self, name: str, replacement) -> "MPoly":
        """Replace variable `name` by a polynomial (or constant).

        The result lives over the remaining variables plus those of the
        replacement.
        """
        if name not in self.variables:
            raise ValueError(f"unknown variable {name!r}")
        rest = [v for v in self.variables if v != name]
        if isinstance(replacement, MPoly):
            new_vars = tuple(sorted(set(rest) | set(replacement.variables)))
            repl = replacement.extend(new_vars)
        else:
            new_vars = tuple(sorted(rest))
            repl = MPoly.const(new_vars, replacement)
        i = self.variables.index(name)
        powers = {0: MPoly.const(new_vars, 1)}
        result = MPoly(new_vars)
        for exps, c in self.terms.items():
            k = exps[i]
            if k not in powers:
                powers[k] = repl ** k
            others = {v: e for v, e in zip(self.variables, exps) if v != name}
            mono = tuple(others.get(v, 0) for v in new_vars)
            result = result + MPoly(new_vars, {mono: c}) * powers[k]
        return result

    def coefficient(self, name: str, k: int) -> "MPoly":
        """Coefficient of ``name**k`` as a polynomial in the other variables."""
        i = self.variables.index(name)
        rest = tuple(v for v in self.variables if v != name)
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                terms[exps[:i] + exps[i + 1:]] = c
        return MPoly(rest, terms)

    def coefficients(self, name: str) -> dict[int, "MPoly"]:
        return {k: self.coefficient(name, k) for k in range(self.degree(name) + 1)}

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def univariate_coeffs(self) -> dict[int, Fraction]:
        """Coefficient map of a polynomial in a single variable."""
        if len(self.variables) > 1:
            raise ValueError(f"not univariate: {self.variables}")
        if not self.variables:
            return {0: self.constant_term()} if self.terms else {}
        return {e[0]: c for e, c in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)
