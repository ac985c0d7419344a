"""Pfaffian calculus for generic and rational skew-symmetric matrices.

The generic matrix of size n+1 has independent upper-triangle entries
z_ij (0 <= i < j <= n); sub-Pfaffians of its principal minors are sparse
integer polynomials in those entries.  Sign convention: pf([[0,a],[-a,0]]) = a,
with first-row expansion

    pf(Z_I) = sum_j (-1)^(j-1) z_{i0,ij} pf(Z_{I \\ {i0,ij}}),   pf(Z_empty) = 1,

so that pf(Z)^2 = det(Z).

Rational points come as ``SkewMatrix`` values.  Rank-2h points of the
Pfaffian degeneracy loci are sampled as sums of h random wedges x ^ y with
integer entries, and orders of vanishing are measured by exact iterated
differentiation, so no numerical tolerance exists anywhere in this module.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb

from . import linalg
from .linalg import dot


def var_pairs(n):
    """Upper-triangle index pairs (i, j), i < j <= n, in lexicographic order."""
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def var_index(n, i, j):
    if not 0 <= i < j <= n:
        raise ValueError(f"unknown variable z_({i},{j}) for size {n + 1}")
    # pairs with first index < i, then offset within row i
    return i * n - i * (i - 1) // 2 + (j - i - 1)


def var_name(n, i, j):
    return f"z{i}{j}" if n <= 9 else f"z{i}_{j}"


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients in the z_ij.

    ``terms`` maps exponent tuples (aligned with ``var_pairs(n)``) to nonzero
    integer coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = int(n)
        width = len(var_pairs(n))
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != width:
                raise ValueError("exponent width does not match the variable set")
            coef = int(coef)
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, value):
        width = len(var_pairs(n))
        return cls(n, {(0,) * width: int(value)} if value else {})

    @classmethod
    def variable(cls, n, i, j):
        width = len(var_pairs(n))
        exp = [0] * width
        exp[var_index(n, i, j)] = 1
        return cls(n, {tuple(exp): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.n, other)
        if self.n != other.n:
            raise ValueError("polynomials over different variable sets")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.n, terms)

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, {e: c * other for e, c in self.terms.items()})
        if self.n != other.n:
            raise ValueError("polynomials over different variable sets")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.n, terms)

    __rmul__ = __mul__

    def support_pairs(self):
        """Variable pairs that actually occur in some term."""
        pairs = var_pairs(self.n)
        used = set()
        for exp in self.terms:
            for k, e in enumerate(exp):
                if e:
                    used.add(pairs[k])
        return sorted(used)

    def evaluate(self, matrix):
        """Exact value at a SkewMatrix with size at least the support needs."""
        pairs = var_pairs(self.n)
        for (i, j) in self.support_pairs():
            if j >= matrix.size:
                raise ValueError(f"unknown variable z_({i},{j}) for size {matrix.size}")
        total = Fraction(0)
        for exp, coef in self.terms.items():
            value = Fraction(coef)
            for k, e in enumerate(exp):
                if e:
                    i, j = pairs[k]
                    value *= matrix.entry(i, j) ** e
            total += value
        return total

    def partial(self, i, j=None):
        """Partial derivative with respect to the upper-triangle variable z_ij."""
        if j is None:
            i, j = i
        k = var_index(self.n, i, j)
        terms = {}
        for exp, coef in self.terms.items():
            if exp[k] == 0:
                continue
            new = list(exp)
            new[k] -= 1
            new = tuple(new)
            terms[new] = terms.get(new, 0) + coef * exp[k]
        return Polynomial(self.n, terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pairs = var_pairs(self.n)
        pieces = []
        for exp, coef in self.sorted_terms():
            factors = []
            for k, e in enumerate(exp):
                if e == 1:
                    factors.append(var_name(self.n, *pairs[k]))
                elif e > 1:
                    factors.append(f"{var_name(self.n, *pairs[k])}^{e}")
            mono = "*".join(factors) if factors else "1"
            if abs(coef) != 1 or not factors:
                mono = f"{abs(coef)}*{mono}" if factors else str(abs(coef))
            pieces.append(("- " if coef < 0 else "+ ") + mono)
        out = " ".join(pieces)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def to_json(self):
        return {"vars": [var_name(self.n, i, j) for i, j in var_pairs(self.n)],
                "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data):
        nvars = len(data["vars"])
        # nvars = (n+1)n/2
        n = 0
        while (n + 1) * n // 2 < nvars:
            n += 1
        if (n + 1) * n // 2 != nvars:
            raise ValueError("variable count is not a triangular number")
        return cls(n, {tuple(t["exp"]): t["coef"] for t in data["terms"]})


class SkewMatrix:
    """Skew-symmetric matrix with exact rational entries (zero diagonal)."""

    __slots__ = ("size", "_upper")

    def __init__(self, rows):
        rows = [tuple(Fraction(x) for x in row) for row in rows]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValueError("matrix is not square")
        for i in range(size):
            if rows[i][i] != 0:
                raise ValueError("diagonal must vanish")
            for j in range(i + 1, size):
                if rows[j][i] != -rows[i][j]:
                    raise ValueError("matrix is not skew-symmetric")
        upper = {}
        for i in range(size):
            for j in range(i + 1, size):
                if rows[i][j]:
                    upper[(i, j)] = rows[i][j]
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "_upper", upper)

    def __setattr__(self, *args):
        raise AttributeError("SkewMatrix is immutable")

    @classmethod
    def from_upper(cls, size, upper_rows):
        """Build from upper-triangle rows [[z01..z0n], [z12..z1n], ...]."""
        rows = [[Fraction(0)] * size for _ in range(size)]
        if len(upper_rows) != max(size - 1, 0):
            raise ValueError("wrong number of upper-triangle rows")
        for i, row in enumerate(upper_rows):
            if len(row) != size - 1 - i:
                raise ValueError("wrong upper-triangle row length")
            for off, value in enumerate(row):
                j = i + 1 + off
                rows[i][j] = Fraction(value)
                rows[j][i] = -Fraction(value)
        return cls(rows)

    @classmethod
    def zero(cls, size):
        return cls([[0] * size for _ in range(size)])

    def entry(self, i, j):
        if i == j:
            return Fraction(0)
        if i < j:
            return self._upper.get((i, j), Fraction(0))
        return -self._upper.get((j, i), Fraction(0))

    def to_rows(self):
        return [tuple(self.entry(i, j) for j in range(self.size))
                for i in range(self.size)]

    def is_zero(self):
        return not self._upper

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.size == other.size and self._upper == other._upper

    def __hash__(self):
        return hash((self.size, frozenset(self._upper.items())))

    def rank(self):
        return linalg.rank(self.to_rows())

    def submatrix(self, indices):
        idx = list(indices)
        return [tuple(self.entry(i, j) for j in idx) for i in idx]

    def to_json(self):
        def enc(x):
            return str(x)
        return {"size": self.size,
                "upper": [[enc(self.entry(i, j)) for j in range(i + 1, self.size)]
                          for i in range(self.size - 1)]}

    @classmethod
    def from_json(cls, data):
        upper = [[Fraction(x) for x in row] for row in data["upper"]]
        return cls.from_upper(data["size"], upper)

    def __repr__(self):
        return f"SkewMatrix(size={self.size})"


def _check_index_set(n, indices):
    idx = tuple(indices)
    if len(set(idx)) != len(idx) or list(idx) != sorted(idx):
        idx = tuple(sorted(set(idx)))
    if len(idx) % 2 == 1:
        raise ValueError("odd Pfaffian undefined")
    if idx and (idx[0] < 0 or idx[-1] > n):
        raise ValueError(f"index set exceeds matrix size {n + 1}")
    return idx


def sub_pfaffian(n, indices):
    """Symbolic Pfaffian of the principal minor of the generic matrix on `indices`."""
    idx = _check_index_set(n, indices)
    memo = {}

    def pf(I):
        if not I:
            return Polynomial.constant(n, 1)
        if I in memo:
            return memo[I]
        i0 = I[0]
        rest = I[1:]
        total = Polynomial.zero(n)
        for pos, ij in enumerate(rest):
            sign = 1 if pos % 2 == 0 else -1
            sub = tuple(x for x in rest if x != ij)
            term = Polynomial.variable(n, i0, ij) * pf(sub)
            total = total + (term if sign > 0 else -term)
        memo[I] = total
        return total

    return pf(idx)


def pfaffian_value(matrix, indices=None):
    """Exact numeric Pfaffian of a principal minor (whole matrix by default)."""
    if indices is None:
        indices = range(matrix.size)
    idx = _check_index_set(matrix.size - 1, indices)
    memo = {}

    def pf(I):
        if not I:
            return Fraction(1)
        if I in memo:
            return memo[I]
        i0 = I[0]
        rest = I[1:]
        total = Fraction(0)
        for pos, ij in enumerate(rest):
            z = matrix.entry(i0, ij)
            if z:
                sign = 1 if pos % 2 == 0 else -1
                sub = tuple(x for x in rest if x != ij)
                total += sign * z * pf(sub)
        memo[I] = total
        return total

    return pf(idx)


def evaluate(polynomial, matrix):
    return polynomial.evaluate(matrix)


def partial(polynomial, i, j=None):
    return polynomial.partial(i, j)


def rank(matrix):
    """Exact rank of a skew matrix; always even."""
    r = matrix.rank()
    assert r % 2 == 0, "skew-symmetric matrices have even rank"
    return r


def _rng(label, seed):
    return random.Random(f"{label}:{seed}")


def _wedge_pair(x, y):
    """The rank-two skew matrix x y^t - y x^t."""
    size = len(x)
    rows = [[x[i] * y[j] - x[j] * y[i] for j in range(size)] for i in range(size)]
    return rows


def secant_sample(n, h, bound=100, seed=0):
    """Random rational point of rank exactly 2h: a sum of h integer wedges x ^ y.

    Resamples until the rank is exactly 2h, which holds generically.
    """
    if not 1 <= h <= (n + 1) // 2:
        raise ValueError(f"h={h} out of range 1..{(n + 1) // 2} for n={n}")
    if bound < 1:
        raise ValueError("bound must be positive")
    rng = _rng("secant", seed)
    while True:
        rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        for _ in range(h):
            x = [rng.randint(-bound, bound) for _ in range(n + 1)]
            y = [rng.randint(-bound, bound) for _ in range(n + 1)]
            w = _wedge_pair(x, y)
            for i in range(n + 1):
                for j in range(n + 1):
                    rows[i][j] += w[i][j]
        z = SkewMatrix(rows)
        if z.rank() == 2 * h:
            return z


def _sign_canonical(polynomial):
    if not polynomial.terms:
        return polynomial
    lead = max(polynomial.terms)
    return polynomial if polynomial.terms[lead] > 0 else -polynomial


def vanishing_order(polynomial, matrix, max_order):
    """Smallest j <= max_order with a nonzero order-j iterated partial at the point.

    Returns max_order + 1 when every partial up to the cap vanishes.  Order 0
    means the polynomial itself is nonzero at the point.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    level = {_sign_canonical(polynomial)} if not polynomial.is_zero() else set()
    for order in range(max_order + 1):
        if not level:
            return max_order + 1
        if any(p.evaluate(matrix) != 0 for p in level):
            return order
        nxt = set()
        for p in level:
            for pair in p.support_pairs():
                d = p.partial(pair)
                if not d.is_zero():
                    nxt.add(_sign_canonical(d))
        level = nxt
    return max_order + 1


def multiplicity_estimate(n, k, h, trials=5, seed=0, bound=100):
    """Vanishing order of a fixed size-(2k+2) sub-Pfaffian at rank-2h points.

    Minimum over independent samples; special points can only raise the
    order, so the minimum recovers the generic value.
    """
    if 2 * k + 2 > n + 1:
        raise ValueError(f"sub-Pfaffian size {2 * k + 2} exceeds matrix size {n + 1}")
    if not 1 <= h <= (n + 1) // 2:
        raise ValueError(f"h={h} out of range 1..{(n + 1) // 2} for n={n}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    p = sub_pfaffian(n, range(2 * k + 2))
    best = None
    for t in range(trials):
        z = secant_sample(n, h, bound=bound, seed=f"{seed}:{t}")
        order = vanishing_order(p, z, max_order=k + 1)
        best = order if best is None else min(best, order)
        if best == 0:
            break
    return best


def dim_secant(n, h):
    """Projective dimension of the rank-2h degeneracy locus, h < floor((n+1)/2)."""
    if not 1 <= h < (n + 1) // 2:
        raise ValueError(f"h={h} outside the dimension formula's range for n={n}")
    return 2 * (n - 1) * h + h - 1 - 2 * h * (h - 1)


def codim_secant(n, h):
    """Codimension in P^(N-) with N- = C(n+1,2) - 1; dim + codim = N-."""
    if not 1 <= h < (n + 1) // 2:
        raise ValueError(f"h={h} outside the codimension formula's range for n={n}")
    num = n * n + n - 2 * h * (2 * n - 2 * h + 1)
    assert num % 2 == 0
    return num // 2


def _wedge_coordinates(n, x, v_index):
    """Coordinates of x ^ e_{v_index} in the upper-triangle basis of size n+1."""
    coords = []
    for (i, j) in var_pairs(n):
        c = Fraction(0)
        if j == v_index:
            c += Fraction(x[i])
        if i == v_index:
            c -= Fraction(x[j])
        coords.append(c)
    return tuple(coords)


def terracini_dim(n, h, bound=100, seed=0):
    """Dimension of the span of h generic tangent spaces of the rank-2 locus.

    The affine tangent space at [x ^ y] is x ^ V + y ^ V; the projective
    dimension of the join is the rank of the stacked coordinate vectors minus
    one.  Random integer samples only ever undershoot the generic value, so
    the maximum over a few attempts is taken.
    """
    if not 1 <= h <= (n + 1) // 2:
        raise ValueError(f"h={h} out of range 1..{(n + 1) // 2} for n={n}")
    best = 0
    for attempt in range(3):
        rng = _rng("terracini", f"{seed}:{attempt}")
        rows = []
        for _ in range(h):
            x = [rng.randint(-bound, bound) for _ in range(n + 1)]
            y = [rng.randint(-bound, bound) for _ in range(n + 1)]
            for m in range(n + 1):
                rows.append(_wedge_coordinates(n, x, m))
                rows.append(_wedge_coordinates(n, y, m))
        best = max(best, linalg.rank(rows) - 1)
    return best


def k_subsets(m, k):
    return list(combinations(range(m), k))


def wedge_power(matrix, k):
    """Matrix of all k x k minors, rows and columns indexed by k-subsets.

    Entry (I, J) is det of the submatrix with rows I and columns J; the
    transpose equals (-1)^k times the matrix, and its rank is C(rank, k).
    """
    m = matrix.size
    if not 1 <= k <= m - 1:
        raise ValueError(f"wedge power {k} out of range 1..{m - 1}")
    subsets = k_subsets(m, k)
    rows = matrix.to_rows()
    out = []
    for I in subsets:
        out_row = []
        for J in subsets:
            minor = [[rows[i][j] for j in J] for i in I]
            out_row.append(linalg.det(minor))
        out.append(tuple(out_row))
    return out


def skew_inverse(matrix):
    """Exact inverse of an invertible skew matrix; skew again, and an involution."""
    if matrix.size % 2 == 1:
        raise ValueError("odd-size skew matrices are singular")
    if pfaffian_value(matrix) == 0:
        raise ValueError("singular skew matrix")
    inv = linalg.inverse(matrix.to_rows())
    return SkewMatrix(inv)


def kernel_of(matrix):
    """Basis of the kernel of a skew matrix, as row vectors."""
    return linalg.kernel_basis(matrix.to_rows(), matrix.size)


def validate_complete_form(stages):
    """Check a chain of 2-forms, each living on the kernel of the previous one.

    ``stages`` is a list of (SkewMatrix, kernel_basis) pairs where the kernel
    basis is a sequence of vectors.  True iff every form is nonzero, each
    basis exactly spans the kernel of its form, and the final form is
    nondegenerate or has a one-dimensional kernel.  Size mismatches between
    consecutive stages raise ValueError.
    """
    if not stages:
        raise ValueError("empty sequence of forms")
    expected_size = stages[0][0].size
    nullity = None
    for matrix, basis in stages:
        if matrix.size != expected_size:
            raise ValueError(f"form of size {matrix.size} on a space of dimension {expected_size}")
        if matrix.is_zero():
            return False
        basis = [tuple(Fraction(x) for x in b) for b in basis]
        for b in basis:
            if len(b) != matrix.size:
                raise ValueError("kernel vector of wrong length")
        nullity = matrix.size - matrix.rank()
        if len(basis) != nullity:
            return False
        rows = matrix.to_rows()
        for b in basis:
            if any(dot(row, b) != 0 for row in rows):
                return False
        if basis and linalg.rank(basis) != len(basis):
            return False
        expected_size = len(basis)
    return nullity in (0, 1)
