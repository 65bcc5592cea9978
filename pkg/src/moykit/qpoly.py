"""Exact Laurent polynomial arithmetic in q, quantum integers/binomials,
and tau-graded dimensions of 2-periodic complexes.

Exponents are stored doubled (the key 2*e stands for q^e), so half-integer
powers coming from vertex weights are exact.  Coefficients are Python ints,
hence arbitrary precision.  No floating point anywhere.
"""


class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients.

    ``terms`` maps a doubled exponent (int) to a nonzero integer
    coefficient; odd keys carry half-integer powers of q.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        if not isinstance(c, int):
            raise TypeError("coefficients are integers, got %r" % (c,))
        return cls({0: c})

    @classmethod
    def q_power(cls, doubled_exp, coeff=1):
        """coeff * q^(doubled_exp / 2)."""
        if not isinstance(coeff, int) or not isinstance(doubled_exp, int):
            raise TypeError("integer exponent and coefficient required")
        return cls({doubled_exp: coeff})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = e1 + e2
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------

    def bar(self):
        """The involution q -> q^(-1)."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def is_integral(self):
        """True iff every exponent of q is an integer."""
        return all(e % 2 == 0 for e in self.terms)

    def min_exp(self):
        """Smallest doubled exponent (None for the zero polynomial)."""
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def coeff(self, doubled_exp):
        return self.terms.get(doubled_exp, 0)

    def eval_at_one(self):
        """Value at q = 1 (dimension count)."""
        return sum(self.terms.values())

    def exact_div(self, other):
        """Exact division; raises ArithmeticError if the division leaves
        a remainder.  All quantum-binomial arithmetic divides exactly."""
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly()
        num = dict(self.terms)
        de = max(other.terms)
        dc = other.terms[de]
        low_bound = min(self.terms) - min(other.terms)
        out = {}
        while num:
            ne = max(num)
            nc = num[ne]
            if nc % dc != 0:
                raise ArithmeticError("non-exact division (coefficient)")
            qe = ne - de
            if qe < low_bound:
                raise ArithmeticError("non-exact division (remainder)")
            qc = nc // dc
            out[qe] = out.get(qe, 0) + qc
            for e, c in other.terms.items():
                k = e + qe
                v = num.get(k, 0) - c * qc
                if v:
                    num[k] = v
                elif k in num:
                    del num[k]
        return LaurentPoly(out)

    # -- presentation ---------------------------------------------------

    def to_triples(self):
        """Sorted [exponent_numerator, exponent_denominator (1 or 2), coeff]
        triples; the JSON wire form."""
        out = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e % 2 == 0:
                out.append([e // 2, 1, c])
            else:
                out.append([e, 2, c])
        return out

    @classmethod
    def from_triples(cls, triples):
        terms = {}
        for num, den, c in triples:
            if den == 1:
                terms[2 * num] = terms.get(2 * num, 0) + c
            elif den == 2:
                terms[num] = terms.get(num, 0) + c
            else:
                raise ValueError("exponent denominator must be 1 or 2")
        return cls(terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "q"
            elif e % 2 == 0:
                mono = "q^%d" % (e // 2)
            else:
                mono = "q^(%d/2)" % e
            if mono == "":
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = "-" + mono
            else:
                piece = "%d*%s" % (c, mono)
            bits.append(piece)
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    __repr__ = __str__


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def qint(j):
    """Quantum integer [j] = (q^j - q^-j)/(q - q^-1), expanded; [0] = 0."""
    if j < 0:
        raise ValueError("qint needs j >= 0")
    return LaurentPoly({2 * (j - 1 - 2 * i): 1 for i in range(j)})


_QFACT = [ONE]


def qfactorial(j):
    """[j]! = [1][2]...[j]."""
    if j < 0:
        raise ValueError("qfactorial needs j >= 0")
    while len(_QFACT) <= j:
        _QFACT.append(_QFACT[-1] * qint(len(_QFACT)))
    return _QFACT[j]


def qbinom(j, k):
    """Balanced Gaussian binomial [j choose k]; zero when k < 0 or k > j."""
    if k < 0 or k > j:
        return LaurentPoly()
    return qfactorial(j).exact_div(qfactorial(k) * qfactorial(j - k))


def _box_partitions(m, n):
    """Partitions with at most m parts, each at most n."""
    if m == 0:
        yield ()
        return
    for first in range(n + 1):
        for rest in _box_partitions(m - 1, first):
            yield (first,) + rest


def qbinom_via_partitions(m, n):
    """[m+n choose n] computed as q^(-mn) * sum over partitions in the
    m-by-n box of q^(2|lambda|)."""
    terms = {}
    for lam in _box_partitions(m, n):
        e = 2 * (-m * n + 2 * sum(lam))
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(terms)


class GradedDim:
    """Element of Z[q,q^-1][tau]/(tau^2 - 1): graded dimension of a
    2-periodic complex, split into tau-even and tau-odd parts."""

    __slots__ = ("even", "odd")

    def __init__(self, even=None, odd=None):
        self.even = even if even is not None else LaurentPoly()
        self.odd = odd if odd is not None else LaurentPoly()

    def __add__(self, other):
        return GradedDim(self.even + other.even, self.odd + other.odd)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return GradedDim(self.even * other, self.odd * other)
        return GradedDim(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, GradedDim)
            and self.even == other.even
            and self.odd == other.odd
        )

    def __bool__(self):
        return bool(self.even) or bool(self.odd)

    def specialize_tau(self, sign):
        """Substitute tau = sign (+1 or -1)."""
        assert sign in (1, -1)
        return self.even + sign * self.odd

    def shift_q(self, j):
        """Multiply by q^j (j an integer quantum degree)."""
        p = LaurentPoly.q_power(2 * j)
        return GradedDim(self.even * p, self.odd * p)

    def shift_tau(self, eps):
        """Multiply by tau^eps."""
        if eps % 2 == 0:
            return GradedDim(self.even, self.odd)
        return GradedDim(self.odd, self.even)

    def is_integral(self):
        return self.even.is_integral() and self.odd.is_integral()

    def nonnegative(self):
        return all(c > 0 for c in self.even.terms.values()) and all(
            c > 0 for c in self.odd.terms.values()
        )

    def __str__(self):
        if not self:
            return "0"
        bits = []
        if self.even:
            bits.append(str(self.even))
        if self.odd:
            bits.append("tau*(%s)" % self.odd)
        return " + ".join(bits)

    __repr__ = __str__
