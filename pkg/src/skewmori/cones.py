"""Exact rational polyhedral cones with double (generator/facet) descriptions.

Conversion between the two descriptions runs the double description method
over exact rationals: constraints are added one at a time to a (lineality,
rays) pair, with the algebraic rank test for ray adjacency.  No floating
point enters anywhere, so membership, duality and intersection are exact.

Extremal rays are kept in canonical primitive integer form and sorted
lexicographically, which makes every operation deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import linalg
from .linalg import Fraction as _F  # noqa: F401  (re-exported for callers)
from .linalg import dot, primitive, sign_normalize, vec


def _unit(rank, i):
    return tuple(Fraction(int(j == i)) for j in range(rank))


def _dedupe_rays(rays):
    seen = {}
    for r, tight in rays:
        key = primitive(r)
        if key not in seen:
            seen[key] = tight
    return [(vec(k), t) for k, t in seen.items()]


def _double_description(normals, ambient_rank):
    """Lineality basis and extremal rays of {x : a.x >= 0 for all a}.

    Returns (lineality, rays) as lists of primitive integer tuples.  The
    rays are extremal modulo the lineality space.
    """
    lin = [_unit(ambient_rank, i) for i in range(ambient_rank)]
    rays = []  # (vector, frozenset of tight constraint indices)
    kept = []  # processed nonzero normals, indexed by tight sets

    for a in normals:
        a = vec(a)
        if linalg.is_zero_vector(a):
            continue
        idx = len(kept)
        kept.append(a)

        pivot = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if pivot is not None:
            l0 = lin[pivot]
            v0 = dot(a, l0)
            if v0 < 0:
                l0 = tuple(-x for x in l0)
                v0 = -v0
            new_lin = []
            for i, l in enumerate(lin):
                if i == pivot:
                    continue
                vl = dot(a, l)
                new_lin.append(tuple(x - vl / v0 * y for x, y in zip(l, l0)))
            new_rays = []
            for r, tight in rays:
                vr = dot(a, r)
                r2 = tuple(x - vr / v0 * y for x, y in zip(r, l0))
                if not linalg.is_zero_vector(r2):
                    new_rays.append((r2, tight | {idx}))
            new_rays.append((l0, frozenset(range(idx))))
            lin = new_lin
            rays = _dedupe_rays(new_rays)
            continue

        plus, zero, minus = [], [], []
        for r, tight in rays:
            v = dot(a, r)
            if v > 0:
                plus.append((r, tight, v))
            elif v == 0:
                zero.append((r, tight | {idx}))
            else:
                minus.append((r, tight, v))
        if not minus:
            rays = [(r, t) for r, t, _ in plus] + zero
            continue

        need = ambient_rank - len(lin) - 2
        new_rays = [(r, t) for r, t, _ in plus] + zero
        for rp, tp, vp in plus:
            for rm, tm, vm in minus:
                common = tp & tm
                if len(common) < need:
                    continue
                if linalg.rank([kept[j] for j in common]) != need:
                    continue
                w = tuple(vp * x - vm * y for x, y in zip(rm, rp))
                new_rays.append((vec(primitive(w)), frozenset(common) | {idx}))
        rays = _dedupe_rays(new_rays)

    lin_rows, _ = linalg.rref(lin)
    lineality = [primitive(l) for l in lin_rows]
    ray_list = sorted(primitive(r) for r, _ in rays)
    return lineality, ray_list


class Cone:
    """A rational polyhedral cone through the origin.

    ``rays`` are the extremal rays (canonical primitive integers, sorted);
    ``facets`` are inward halfspace normals, with linear equalities stored
    as +/- pairs; ``lineality`` is a basis of the largest linear subspace
    contained in the cone (empty iff the cone is pointed).  Instances are
    immutable and safe to share between threads.
    """

    __slots__ = ("ambient_rank", "rays", "facets", "lineality")

    def __init__(self, ambient_rank, rays, facets, lineality=()):
        object.__setattr__(self, "ambient_rank", int(ambient_rank))
        object.__setattr__(self, "rays", tuple(rays))
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "lineality", tuple(lineality))

    def __setattr__(self, *args):
        raise AttributeError("Cone is immutable")

    @classmethod
    def from_generators(cls, vectors, ambient_rank=None):
        """Nonnegative hull of the given vectors.

        Redundant generators are dropped; the empty (or all-zero) list gives
        the zero cone, for which ``ambient_rank`` must be supplied.
        """
        vs = [vec(v) for v in vectors]
        if vs:
            ranks = {len(v) for v in vs}
            if len(ranks) != 1:
                raise ValueError("dimension mismatch among generators")
            if ambient_rank is not None and ambient_rank != ranks.pop():
                raise ValueError("generators do not match the ambient rank")
            ambient_rank = len(vs[0])
        elif ambient_rank is None:
            raise ValueError("ambient rank required for the zero cone")
        vs = [v for v in vs if not linalg.is_zero_vector(v)]
        if not vs:
            facets = []
            for i in range(ambient_rank):
                u = _unit(ambient_rank, i)
                facets.append(primitive(u))
                facets.append(primitive(tuple(-x for x in u)))
            return cls(ambient_rank, (), sorted(facets), ())

        dual_lin, dual_rays = _double_description(vs, ambient_rank)
        facets = list(dual_rays)
        for l in dual_lin:
            facets.append(l)
            facets.append(tuple(-x for x in l))
        facets.sort()
        lineality, rays = _double_description(facets, ambient_rank)
        return cls(ambient_rank, rays, facets, lineality)

    @classmethod
    def from_inequalities(cls, normals, ambient_rank):
        """Cone {x : a.x >= 0 for every normal a}, canonicalized."""
        ns = [vec(a) for a in normals]
        for a in ns:
            if len(a) != ambient_rank:
                raise ValueError("dimension mismatch among inequalities")
        lineality, rays = _double_description(ns, ambient_rank)
        gens = list(rays)
        for l in lineality:
            gens.append(l)
            gens.append(tuple(-x for x in l))
        return cls.from_generators(gens, ambient_rank)

    @classmethod
    def zero(cls, ambient_rank):
        return cls.from_generators([], ambient_rank)

    @classmethod
    def full_space(cls, ambient_rank):
        return cls.from_inequalities([], ambient_rank)

    @property
    def pointed(self):
        return not self.lineality

    def dim(self):
        rows = list(self.rays) + list(self.lineality)
        return linalg.rank(rows) if rows else 0

    def contains(self, v):
        v = vec(v)
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        return all(dot(f, v) >= 0 for f in self.facets)

    def interior_contains(self, v):
        v = vec(v)
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        return all(dot(f, v) > 0 for f in self.facets)

    def is_subset(self, other):
        if self.ambient_rank != other.ambient_rank:
            raise ValueError("dimension mismatch")
        for r in self.rays:
            if not other.contains(r):
                return False
        for l in self.lineality:
            if not other.contains(l) or not other.contains(tuple(-x for x in l)):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (self.ambient_rank == other.ambient_rank
                and self.is_subset(other) and other.is_subset(self))

    def __hash__(self):
        return hash((self.ambient_rank, self.rays, self.lineality))

    def dual(self):
        """Dual cone {y : y.x >= 0 for all x in self} under the dot product."""
        if not self.facets:
            return Cone.zero(self.ambient_rank)
        return Cone.from_generators(self.facets, self.ambient_rank)

    def intersect(self, other):
        if self.ambient_rank != other.ambient_rank:
            raise ValueError("dimension mismatch")
        return Cone.from_inequalities(self.facets + other.facets, self.ambient_rank)

    def interior_point(self):
        """Sum of the extremal rays; interior for full-dimensional pointed cones."""
        if not self.rays:
            raise ValueError("cone has no rays")
        return tuple(sum(c) for c in zip(*self.rays))

    def to_json(self):
        return {"rank": self.ambient_rank,
                "rays": [list(r) for r in self.rays],
                "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data):
        cone = cls.from_inequalities(data["facets"], data["rank"])
        if [list(r) for r in cone.rays] != data["rays"]:
            raise ValueError("inconsistent serialized cone")
        return cone

    def __repr__(self):
        flag = "" if self.pointed else ", not pointed"
        return f"Cone(rank={self.ambient_rank}, rays={list(self.rays)}{flag})"


# Functional aliases for the operations above.

def cone_from_generators(vectors, ambient_rank=None):
    return Cone.from_generators(vectors, ambient_rank)


def dual(cone):
    return cone.dual()


def intersect(c1, c2):
    return c1.intersect(c2)


def contains(cone, v):
    return cone.contains(v)


def interior_contains(cone, v):
    return cone.interior_contains(v)


def extremal_rays(cone):
    return list(cone.rays)


def dim(cone):
    return cone.dim()


def equal(c1, c2):
    return c1 == c2


def nonneg_combination(vectors, target):
    """Exact coefficients c >= 0 with sum c_i v_i = target, or None.

    Phase-one simplex with Bland's rule over rationals.  This is deliberately
    independent of the facet machinery above so the two can cross-check each
    other (Farkas' lemma both ways).
    """
    vs = [vec(v) for v in vectors]
    t = vec(target)
    m = len(t)
    n = len(vs)
    for v in vs:
        if len(v) != m:
            raise ValueError("dimension mismatch")

    # rows: columns are [c_1..c_n | artificials | rhs]
    rows = []
    for i in range(m):
        coeffs = [vs[j][i] for j in range(n)]
        b = t[i]
        if b < 0:
            coeffs = [-x for x in coeffs]
            b = -b
        rows.append(coeffs + [Fraction(0)] * m + [b])
    for i in range(m):
        rows[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]

    # objective row: minimize the sum of artificials; reduced costs of the
    # artificial columns start at 1 - 1 = 0
    z = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            z[j] += rows[i][j]
    for i in range(m):
        z[n + i] = Fraction(0)

    while True:
        enter = next((j for j in range(n + m) if z[j] > 0), None)
        if enter is None:
            break
        ratios = [(rows[i][-1] / rows[i][enter], basis[i], i)
                  for i in range(m) if rows[i][enter] > 0]
        if not ratios:
            return None  # unbounded cannot occur in phase one, defensive
        _, _, leave = min(ratios)
        pv = rows[leave][enter]
        rows[leave] = [x / pv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        f = z[enter]
        z = [x - f * y for x, y in zip(z, rows[leave])]
        basis[leave] = enter

    if any(rows[i][-1] != 0 for i in range(m) if basis[i] >= n):
        return None
    coeffs = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            coeffs[basis[i]] = rows[i][-1]
    return coeffs


def random_cone(rng, ambient_rank, n_generators, bound=5):
    """Random integer cone for property tests (seeded, exact)."""
    gens = []
    while len(gens) < n_generators:
        v = tuple(rng.randint(-bound, bound) for _ in range(ambient_rank))
        if any(v):
            gens.append(v)
    return Cone.from_generators(gens, ambient_rank)


def hyperplanes_spanned_by(vectors, ambient_rank):
    """Normals (sign-normalized) of all hyperplanes spanned by subsets of the vectors."""
    normals = set()
    for subset in combinations(vectors, ambient_rank - 1):
        rows = [vec(v) for v in subset]
        if linalg.rank(rows) != ambient_rank - 1:
            continue
        kernel = linalg.kernel_basis(rows, ambient_rank)
        if len(kernel) == 1:
            normals.add(sign_normalize(kernel[0]))
    return sorted(normals)
