"""Partitions and exact symmetric-polynomial algebra in elementary-symmetric
generators: Schur polynomials via Jacobi-Trudi, Newton identities, the
Sylvester pairing, and Grassmannian cohomology dimensions.

A multi-alphabet ring Sym(X_1|...|X_l) is presented by generators E_{i,j}
(the j-th elementary symmetric polynomial of the i-th alphabet) of degree 2j;
the degree of a polynomial is twice its usual degree throughout.
"""

from fractions import Fraction

from .qpoly import GradedDim, LaurentPoly, qbinom


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def normalize_partition(parts):
    """Strip trailing zeros and check the parts are non-increasing."""
    parts = tuple(parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError("parts must be non-increasing: %r" % (parts,))
    if parts and parts[-1] < 0:
        raise ValueError("parts must be nonnegative")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(parts):
    """Transpose of the Young diagram."""
    parts = normalize_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def in_box(parts, m, n):
    parts = normalize_partition(parts)
    return len(parts) <= m and (not parts or parts[0] <= n)


def complement(parts, m, n):
    """Complement inside the m-by-n box: (n - lam_m, ..., n - lam_1)."""
    parts = normalize_partition(parts)
    if not in_box(parts, m, n):
        raise ValueError("partition %r outside %dx%d box" % (parts, m, n))
    padded = parts + (0,) * (m - len(parts))
    return normalize_partition(tuple(n - p for p in reversed(padded)))


def enumerate_box(m, n):
    """All partitions with at most m parts, each at most n, by size then lex."""
    out = [()]
    if m == 0:
        return out
    for first in range(1, n + 1):
        for rest in enumerate_box(m - 1, first):
            out.append((first,) + rest)
    out.sort(key=lambda lam: (sum(lam), lam))
    return out


# ---------------------------------------------------------------------------
# the generator ring
# ---------------------------------------------------------------------------

class AlphabetRing:
    """Ordered list of alphabets (name, size); generators E_{name,j} for
    1 <= j <= size, deg E_{name,j} = 2j."""

    def __init__(self, alphabets):
        names = [a for a, _ in alphabets]
        if len(set(names)) != len(names):
            raise ValueError("alphabet names must be pairwise distinct")
        self.alphabets = [(str(a), int(s)) for a, s in alphabets]
        for _, s in self.alphabets:
            if s < 0:
                raise ValueError("alphabet sizes must be >= 0")
        self.size = dict(self.alphabets)
        self.gens = [(a, j) for a, s in self.alphabets for j in range(1, s + 1)]
        self.gen_index = {g: i for i, g in enumerate(self.gens)}
        self.gen_degree = tuple(2 * j for _, j in self.gens)

    def ngens(self):
        return len(self.gens)

    def __eq__(self, other):
        return isinstance(other, AlphabetRing) and self.alphabets == other.alphabets

    def __repr__(self):
        return "AlphabetRing(%r)" % (self.alphabets,)

    def zero(self):
        return SymPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Fraction(c)
        if c == 0:
            return SymPoly(self, {})
        return SymPoly(self, {(0,) * self.ngens(): c})

    def gen(self, name, j):
        """The generator E_{name,j}; 1 for j = 0, 0 out of range."""
        if j == 0:
            return self.one()
        if j < 0 or j > self.size[name]:
            return self.zero()
        exp = [0] * self.ngens()
        exp[self.gen_index[(name, j)]] = 1
        return SymPoly(self, {tuple(exp): Fraction(1)})


class SymPoly:
    """Polynomial in the E-generators with rational coefficients.

    terms maps exponent tuples (one slot per ring generator) to nonzero
    Fractions.  Homogeneous degree is the E-weighted doubled degree.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def _coerce(self, other):
        if isinstance(other, SymPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return SymPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            return SymPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return SymPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monomial_degree(self, exp):
        return sum(k * d for k, d in zip(exp, self.ring.gen_degree))

    def degree(self):
        """Common doubled degree of all terms; None for 0; raises if the
        polynomial is inhomogeneous."""
        if not self.terms:
            return None
        degs = {self.monomial_degree(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous polynomial, degrees %r" % sorted(degs))
        return degs.pop()

    def is_homogeneous(self):
        if not self.terms:
            return True
        return len({self.monomial_degree(e) for e in self.terms}) == 1

    def is_const(self):
        return all(all(k == 0 for k in e) for e in self.terms)

    def const_value(self):
        return self.terms.get((0,) * self.ring.ngens(), Fraction(0))

    def derivative(self, name, j):
        """Formal partial derivative in the generator E_{name,j}."""
        idx = self.ring.gen_index[(name, j)]
        out = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k == 0:
                continue
            e2 = e[:idx] + (k - 1,) + e[idx + 1:]
            out[e2] = out.get(e2, 0) + c * k
        return SymPoly(self.ring, out)

    def substitute_generator(self, idx, value):
        """Replace generator idx by the polynomial ``value`` (same ring)."""
        powers = {0: self.ring.one()}

        def pw(k):
            if k not in powers:
                powers[k] = pw(k - 1) * value
            return powers[k]

        out = self.ring.zero()
        for e, c in self.terms.items():
            k = e[idx]
            mono = SymPoly(self.ring, {e[:idx] + (0,) + e[idx + 1:]: c})
            out = out + (mono * pw(k) if k else mono)
        return out

    def eval_into(self, images):
        """Evaluate by substituting images[i] (SymPolys of a common target
        ring) for generator i.  Used to specialize formal identities."""
        if not self.terms:
            if not images:
                raise ValueError("cannot infer target ring")
            return images[0].ring.zero()
        target = images[0].ring if images else None
        pow_cache = [{} for _ in images]

        def pw(i, k):
            cache = pow_cache[i]
            if k not in cache:
                cache[k] = images[i] if k == 1 else pw(i, k - 1) * images[i]
            return cache[k]

        total = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            total = total + term
        return total

    def map_exponents(self, index_map, target):
        """Reindex generators into ``target`` ring via index_map."""
        n = target.ngens()
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for i, k in enumerate(e):
                if k:
                    e2[index_map[i]] += k
            key = tuple(e2)
            out[key] = out.get(key, 0) + c
        return SymPoly(target, out)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for i, k in enumerate(e):
                if k:
                    name, j = self.ring.gens[i]
                    g = "%s%d" % (name, j)
                    factors.append(g if k == 1 else "%s^%d" % (g, k))
            mono = "*".join(factors)
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (c, mono))
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


# ---------------------------------------------------------------------------
# elementary / complete / power-sum symmetric polynomials
# ---------------------------------------------------------------------------

def elem(ring, names, k):
    """k-th elementary symmetric polynomial of the union of the named
    alphabets, as a polynomial in the E-generators (convolution formula)."""
    if isinstance(names, str):
        names = [names]
    total = sum(ring.size[a] for a in names)
    if k == 0:
        return ring.one()
    if k < 0 or k > total:
        return ring.zero()
    if len(names) == 1:
        return ring.gen(names[0], k)
    head, rest = names[0], names[1:]
    out = ring.zero()
    for a in range(0, min(k, ring.size[head]) + 1):
        tail = elem(ring, rest, k - a)
        if a == 0:
            out = out + tail
        elif tail:
            out = out + ring.gen(head, a) * tail
    return out


def complete(ring, names, k):
    """Complete symmetric polynomial h_k of the union, via the recursion
    h_k = sum_i (-1)^(i-1) e_i h_(k-i)."""
    if isinstance(names, str):
        names = [names]
    m = sum(ring.size[a] for a in names)
    hs = [ring.one()]
    for t in range(1, max(k, 0) + 1):
        acc = ring.zero()
        for i in range(1, min(t, m) + 1):
            term = elem(ring, names, i) * hs[t - i]
            acc = acc + (term if i % 2 == 1 else -term)
        hs.append(acc)
    if k < 0:
        return ring.zero()
    return hs[k]


def power_sum(ring, names, k):
    """Power sum p_k of the union via Newton's identities; p_0 = size."""
    if isinstance(names, str):
        names = [names]
    m = sum(ring.size[a] for a in names)
    if k < 0:
        return ring.zero()
    ps = [ring.const(m)]
    for t in range(1, k + 1):
        acc = ring.zero()
        for i in range(1, min(t - 1, m) + 1):
            term = elem(ring, names, i) * ps[t - i]
            acc = acc + (term if i % 2 == 1 else -term)
        if t <= m:
            term = elem(ring, names, t) * t
            acc = acc + (term if t % 2 == 1 else -term)
        ps.append(acc)
    return ps[k]


# formal versions in one size-m alphabet, cached; these are the universal
# polynomials p_{m,k} and h_{m,k} specialized everywhere else
_FORMAL_RINGS = {}
_PK = {}
_HK = {}


def formal_ring(m):
    if m not in _FORMAL_RINGS:
        _FORMAL_RINGS[m] = AlphabetRing([("Z", m)])
    return _FORMAL_RINGS[m]


def power_sum_formal(m, k):
    if (m, k) not in _PK:
        _PK[(m, k)] = power_sum(formal_ring(m), "Z", k)
    return _PK[(m, k)]


def complete_formal(m, k):
    if (m, k) not in _HK:
        _HK[(m, k)] = complete(formal_ring(m), "Z", k)
    return _HK[(m, k)]


def power_derivative_check(m, l, j):
    """Whether d/dX_j p_{m,l} = (-1)^(j+1) * l * h_{m,l-j} holds formally."""
    if not (1 <= j <= m):
        raise ValueError("need 1 <= j <= m")
    lhs = power_sum_formal(m, l).derivative("Z", j)
    rhs = complete_formal(m, l - j) * (l if (j + 1) % 2 == 0 else -l)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Schur polynomials
# ---------------------------------------------------------------------------

def _det(matrix):
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return matrix[0][0]
    ring = matrix[0][0].ring
    total = ring.zero()
    for c in range(n):
        entry = matrix[0][c]
        if not entry:
            continue
        minor = [[row[cc] for cc in range(n) if cc != c] for row in matrix[1:]]
        cof = entry * _det(minor)
        total = total + (cof if c % 2 == 0 else -cof)
    return total


def schur(ring, name, parts):
    """Schur polynomial S_lambda of the named alphabet: the Jacobi-Trudi
    determinant det(h_{lambda_i - i + j}).  Zero when lambda has more
    nonzero parts than the alphabet has letters."""
    parts = normalize_partition(parts)
    if not parts:
        return ring.one()
    r = len(parts)
    h = {}

    def H(k):
        if k not in h:
            h[k] = complete(ring, name, k)
        return h[k]

    matrix = [[H(parts[i] - (i + 1) + (j + 1)) for j in range(r)] for i in range(r)]
    return _det(matrix)


def schur_negative(ring, name, parts):
    """S_lambda(-X): Jacobi-Trudi with h_j(-X) = (-1)^j X_j; requires
    lambda_1 <= size of the alphabet."""
    parts = normalize_partition(parts)
    m = ring.size[name]
    if parts and parts[0] > m:
        raise ValueError("lambda_1 exceeds alphabet size")
    if not parts:
        return ring.one()
    r = len(parts)

    def Hneg(k):
        g = elem(ring, name, k)
        return g if k % 2 == 0 else -g

    matrix = [[Hneg(parts[i] - (i + 1) + (j + 1)) for j in range(r)] for i in range(r)]
    return _det(matrix)


# ---------------------------------------------------------------------------
# Sylvester pairing and Grassmannian cohomology
# ---------------------------------------------------------------------------

def sylvester(m, n, lam, mu):
    """The Sylvester pairing zeta(S_lam(X) S_mu(-Y)) on box partitions:
    1 when lam_j + mu_{m+1-j} = n for every j, else 0."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if not in_box(lam, m, n) or not in_box(mu, m, n):
        raise ValueError("partition outside the %dx%d box" % (m, n))
    lp = lam + (0,) * (m - len(lam))
    mp = mu + (0,) * (m - len(mu))
    return 1 if all(lp[j] + mp[m - 1 - j] == n for j in range(m)) else 0


def grassmannian_trace(m, N, lam, mu):
    """Poincare duality trace Tr(S_lam S_mu) on H*(G_{m,N}): 1 when
    lam_j + mu_{m+1-j} = N - m for every j, else 0."""
    if m > N:
        raise ValueError("need m <= N")
    return sylvester(m, N - m, lam, mu)


def grassmannian_dim(m, N):
    """Graded dimension of Sym(X_m)/(h_{N+1-m},...,h_N): the cohomology of
    the (m,N)-Grassmannian, qbinom(N,m) * q^(m(N-m)) in even tau-degree."""
    if m > N or m < 0:
        raise ValueError("need 0 <= m <= N")
    even = qbinom(N, m) * LaurentPoly.q_power(2 * m * (N - m))
    return GradedDim(even, LaurentPoly())


# ---------------------------------------------------------------------------
# ring plumbing used by the matrix-factorization layer
# ---------------------------------------------------------------------------

def multiply(a, b):
    return a * b


def substitute_alphabet(p, src, dst):
    """Rename generators E_{src,j} -> E_{dst,j}; sizes must match."""
    ring = p.ring
    if ring.size[src] != ring.size[dst]:
        raise ValueError("alphabet size mismatch")
    index_map = {}
    for i, (name, j) in enumerate(ring.gens):
        key = (dst, j) if name == src else (name, j)
        index_map[i] = ring.gen_index[key]
    return p.map_exponents(index_map, ring)


def exact_divide(num, den):
    """Exact polynomial division in the E-generator ring; raises
    ArithmeticError if a nonzero remainder is left."""
    if not den:
        raise ZeroDivisionError("division by zero")
    if not num:
        return num.ring.zero()
    lead = max(den.terms)
    lc = den.terms[lead]
    work = dict(num.terms)
    out = {}
    while work:
        e = max(work)
        c = work[e]
        if all(a >= b for a, b in zip(e, lead)):
            qe = tuple(a - b for a, b in zip(e, lead))
            qc = c / lc
            out[qe] = out.get(qe, 0) + qc
            for de, dc in den.terms.items():
                k = tuple(a + b for a, b in zip(qe, de))
                v = work.get(k, 0) - qc * dc
                if v:
                    work[k] = v
                elif k in work:
                    del work[k]
        else:
            raise ArithmeticError("non-exact division")
    return SymPoly(num.ring, out)
