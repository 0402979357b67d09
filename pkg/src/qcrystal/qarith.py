"""Exact arithmetic in Z[q, q^-1].

Laurent polynomials with integer coefficients, balanced quantum integers
[n] = q^(n-1) + q^(n-3) + ... + q^(1-n), quantum factorials and binomials,
and the bar involution q -> q^-1.  Coefficients are Python ints, so quantum
factorials can grow without overflow.
"""

from functools import lru_cache


class ExactDivisionError(ArithmeticError):
    """Division of Laurent polynomials left a nonzero remainder."""


class LaurentPoly:
    """A Laurent polynomial in q over the integers.

    Stored as a map exponent -> nonzero coefficient.  Values are immutable
    and hashable; all arithmetic is exact and returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[int, int] = {}
        if terms:
            pairs = terms.items() if isinstance(terms, dict) else terms
            for exp, coef in pairs:
                if not isinstance(exp, int) or not isinstance(coef, int):
                    raise TypeError("exponents and coefficients must be ints")
                acc[exp] = acc.get(exp, 0) + coef
        object.__setattr__(self, "_terms", {e: c for e, c in acc.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- inspection ----------------------------------------------------

    def items(self):
        """Terms as (exponent, coefficient) pairs, decreasing exponent."""
        return tuple(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exp):
        return self._terms.get(exp, 0)

    def min_exp(self):
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self):
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- ring structure ------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, n):
        """Multiply by q^n."""
        return LaurentPoly({e + n: c for e, c in self._terms.items()})

    def exact_div(self, other):
        """Exact quotient self / other; raises ExactDivisionError otherwise."""
        other = self._coerce(other)
        if other is None or not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly()
        # Lowest possible quotient exponent; anything below means inexact.
        floor = self.min_exp() - other.min_exp()
        dmax = other.max_exp()
        dlead = other._terms[dmax]
        rem = dict(self._terms)
        quo: dict[int, int] = {}
        while rem:
            rmax = max(rem)
            shift = rmax - dmax
            if shift < floor:
                raise ExactDivisionError(f"{self} is not divisible by {other}")
            c, r = divmod(rem[rmax], dlead)
            if r:
                raise ExactDivisionError(f"{self} is not divisible by {other}")
            quo[shift] = quo.get(shift, 0) + c
            for e, d in other._terms.items():
                e2 = e + shift
                v = rem.get(e2, 0) - c * d
                if v:
                    rem[e2] = v
                else:
                    rem.pop(e2, None)
        return LaurentPoly(quo)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- rendering -------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if idx == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"


#: The generator q and the ring unit, for convenience.
q = LaurentPoly({1: 1})
one = LaurentPoly({0: 1})
zero = LaurentPoly()


def qint(n):
    """Balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    [0] = 0 and [-n] = -[n], so bar([n]) = [n] for all n.
    """
    if n == 0:
        return zero
    if n < 0:
        return -qint(-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfact(n):
    """Quantum factorial [n]! = [n][n-1]...[1]."""
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    if n == 0:
        return one
    return qfact(n - 1) * qint(n)


def qbinom(m, k):
    """Quantum binomial coefficient [m choose k] = [m]! / ([k]! [m-k]!).

    The quotient is computed by exact division, which doubles as a check
    that [k]! [m-k]! really divides [m]!.  Returns 0 when k > m; evaluating
    at q = 1 recovers the ordinary binomial coefficient.
    """
    if m < 0 or k < 0:
        raise ValueError("quantum binomial needs m, k >= 0")
    if k > m:
        return zero
    return qfact(m).exact_div(qfact(k) * qfact(m - k))


def bar(p):
    """Bar involution: send q to q^-1, i.e. negate every exponent."""
    return LaurentPoly({-e: c for e, c in p.items()})


def eval_at_one(p):
    """Specialize q to 1: the sum of all coefficients."""
    return sum(c for _, c in p.items())
