"""Newton-polyhedron membership with exact rational certificates, and the
integral closure and normality operations built on it.

The Newton polyhedron of an ideal with generator exponents g_1..g_r is
conv(g_1, .., g_r) + R^n_{>=0}.  A point a lies in it iff the system

    sum_k c_k g_k + s = a,   sum_k c_k = 1,   c >= 0,  s >= 0

is feasible, which a phase-1 simplex over Fraction arithmetic decides.
Both answers carry certificates that re-verify by plain arithmetic with no
solver state: a feasible tableau yields the convex weights and slack; an
infeasible one yields, through the dual values of the artificial columns,
a functional w >= 0 with w.g >= 1 on every generator but w.a < 1.

Integral closure is the set of lattice points of the polyhedron; its
minimal generators all lie in the box below the componentwise maximum of
the input generators, so one bounded scan with certificate reuse finds
them.  An ideal is normal when all its powers are integrally closed, and
checking powers 1..n-1 suffices in n variables.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Sequence

from .lattice import (
    ConsistencyError,
    MonomialIdeal,
    Vec,
    as_vec,
    box_enumerate,
    dot,
    format_vector,
    minimalize,
    parse_vector,
    require_same_dim,
)

INSIDE = "inside"
OUTSIDE = "outside"

RatVec = tuple[Fraction, ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


def as_rational_point(point: Iterable) -> RatVec:
    """Coerce to a tuple of Fractions; entries must be nonnegative."""
    p = tuple(Fraction(x) for x in point)
    if any(x < 0 for x in p):
        raise ValueError(f"query points must be nonnegative, got {p}")
    return p


def format_rational(x: Fraction) -> str:
    return str(x)  # Fraction prints "3" or "1/2", and Fraction() parses both


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational: {text!r}") from None


@dataclass(frozen=True)
class MembershipCertificate:
    """Self-contained evidence for one membership query.

    inside:  ``terms`` pairs generators with positive convex weights,
             ``slack`` is the leftover nonnegative vector, and
             ``denominator`` is the lcm of the weight denominators, so
             scaling the combination by it clears all fractions.
    outside: ``w`` is a nonnegative functional with w.g >= 1 on every
             generator (with equality somewhere) and w.point < 1.
    """

    verdict: str
    point: RatVec
    terms: tuple[tuple[Vec, Fraction], ...] | None = None
    slack: RatVec | None = None
    denominator: int | None = None
    w: RatVec | None = None

    def verify(self, polyhedron: "NewtonPolyhedron") -> bool:
        """Re-check the certificate arithmetically against the polyhedron."""
        gens = polyhedron.ideal.generators
        if len(self.point) != polyhedron.ideal.dim:
            return False
        if self.verdict == INSIDE:
            if self.terms is None or self.slack is None or self.denominator is None:
                return False
            gen_set = set(gens)
            weights = [wt for _, wt in self.terms]
            if any(g not in gen_set for g, _ in self.terms):
                return False
            if any(wt <= 0 for wt in weights) or sum(weights) != 1:
                return False
            if any(s < 0 for s in self.slack):
                return False
            for j in range(len(self.point)):
                lhs = sum(wt * g[j] for g, wt in self.terms) + self.slack[j]
                if lhs != self.point[j]:
                    return False
            d = self.denominator
            if d < 1 or d != math.lcm(*(wt.denominator for wt in weights)):
                return False
            return all((d * wt).denominator == 1 for wt in weights)
        if self.verdict == OUTSIDE:
            if self.w is None or len(self.w) != len(self.point):
                return False
            if any(x < 0 for x in self.w):
                return False
            values = [dot(self.w, g) for g in gens]
            if any(v < 1 for v in values) or min(values) != 1:
                return False
            return dot(self.w, self.point) < 1
        return False

    def to_json_dict(self) -> dict:
        if self.verdict == INSIDE:
            return {
                "verdict": INSIDE,
                "weights": [
                    [format_vector(g), format_rational(wt)] for g, wt in self.terms
                ],
                "slack": ",".join(format_rational(s) for s in self.slack),
                "denominator": self.denominator,
            }
        return {"verdict": OUTSIDE, "w": [format_rational(x) for x in self.w]}

    @classmethod
    def from_json_dict(cls, data: dict, point: Iterable = ()) -> "MembershipCertificate":
        pt = tuple(Fraction(x) for x in point)
        if data.get("verdict") == INSIDE:
            terms = tuple(
                (parse_vector(g), parse_rational(wt)) for g, wt in data["weights"]
            )
            slack = tuple(parse_rational(s) for s in data["slack"].split(","))
            return cls(INSIDE, pt, terms=terms, slack=slack,
                       denominator=int(data["denominator"]))
        if data.get("verdict") == OUTSIDE:
            return cls(OUTSIDE, pt, w=tuple(parse_rational(x) for x in data["w"]))
        raise ValueError(f"malformed certificate: {data!r}")


def _pivot(rows, obj, basis, leave, enter):
    piv = rows[leave][enter]
    rows[leave] = [v / piv for v in rows[leave]]
    prow = rows[leave]
    for i, row in enumerate(rows):
        if i != leave and row[enter] != 0:
            f = row[enter]
            rows[i] = [v - f * p for v, p in zip(row, prow)]
    if obj[enter] != 0:
        f = obj[enter]
        obj[:] = [v - f * p for v, p in zip(obj, prow)]
    basis[leave] = enter


def _phase1(gens: Sequence[Vec], point: RatVec):
    """Decide feasibility of the membership system.

    Returns ('inside', weights, slack) with the basic solution, or
    ('outside', w) with the normalized separating functional.
    """
    n = len(point)
    r = len(gens)
    width = r + n  # structural columns: convex weights, then slacks
    nrows = n + 1

    rows: list[list[Fraction]] = []
    for j in range(n):
        row = [Fraction(g[j]) for g in gens]
        row += [_F1 if k == j else _F0 for k in range(n)]
        row += [_F1 if i == j else _F0 for i in range(nrows)]
        row.append(point[j])
        rows.append(row)
    last = [_F1] * r + [_F0] * n
    last += [_F1 if i == n else _F0 for i in range(nrows)]
    last.append(_F1)
    rows.append(last)

    # phase-1 reduced costs for the all-artificial starting basis
    obj = [-sum(rows[i][j] for i in range(nrows)) for j in range(width)]
    obj += [_F0] * (nrows + 1)
    basis = [width + i for i in range(nrows)]

    while True:
        enter = None
        for j in range(width):  # Bland's rule; artificials never re-enter
            if obj[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(nrows):
            a = rows[i][enter]
            if a > 0:
                t = rows[i][-1] / a
                if best is None or t < best or (t == best and basis[i] < basis[leave]):
                    best = t
                    leave = i
        if leave is None:
            raise ConsistencyError("phase-1 simplex claims an unbounded objective")
        _pivot(rows, obj, basis, leave, enter)

    residual = sum(rows[i][-1] for i in range(nrows) if basis[i] >= width)
    if residual == 0:
        x = [_F0] * width
        for i, b in enumerate(basis):
            if b < width:
                x[b] = rows[i][-1]
        return INSIDE, tuple(x[:r]), tuple(x[r:])

    # infeasible: read the dual off the artificial columns and turn it
    # into the separating functional
    y = [1 - obj[width + i] for i in range(nrows)]
    s = y[n]
    if s <= 0 or any(y[j] > 0 for j in range(n)):
        raise ConsistencyError("phase-1 dual has the wrong sign pattern")
    w = tuple(-y[j] / s for j in range(n))
    m = min(dot(w, g) for g in gens)
    if m < 1:
        raise ConsistencyError("separating functional fails on a generator")
    w = tuple(x / m for x in w)
    return OUTSIDE, w, None


class NewtonPolyhedron:
    """Membership oracle for conv(generators) + R^n_{>=0} of one ideal."""

    __slots__ = ("ideal",)

    def __init__(self, ideal: MonomialIdeal):
        object.__setattr__(self, "ideal", ideal)

    def __setattr__(self, name, value):
        raise AttributeError("NewtonPolyhedron is immutable")

    def contains(self, point: Iterable) -> MembershipCertificate:
        """Decide membership of a nonnegative rational point; the returned
        certificate has been re-verified before it is handed out."""
        p = as_rational_point(point)
        if len(p) != self.ideal.dim:
            require_same_dim(p, (0,) * self.ideal.dim)
        verdict, a, b = _phase1(self.ideal.generators, p)
        if verdict == INSIDE:
            weights, slack = a, b
            terms = tuple(
                (g, wt) for g, wt in zip(self.ideal.generators, weights) if wt > 0
            )
            denom = math.lcm(*(wt.denominator for _, wt in terms))
            cert = MembershipCertificate(
                INSIDE, p, terms=terms, slack=slack, denominator=denom
            )
        else:
            cert = MembershipCertificate(OUTSIDE, p, w=a)
        if not cert.verify(self):
            raise ConsistencyError(f"certificate failed re-verification: {cert}")
        return cert


def np_contains(ideal: MonomialIdeal, point: Iterable) -> MembershipCertificate:
    return NewtonPolyhedron(ideal).contains(point)


def _affine_dependence(points: Sequence[RatVec]) -> list[Fraction] | None:
    """A nonzero c with sum c_i p_i = 0 and sum c_i = 0, or None if the
    points are affinely independent.  Deterministic: reduced row echelon
    form, first free column set to one."""
    m = len(points)
    n = len(points[0]) if m else 0
    rows = [[Fraction(p[j]) for p in points] for j in range(n)]
    rows.append([_F1] * m)
    pivot_cols: list[int] = []
    pr = 0
    for col in range(m):
        pivot = None
        for i in range(pr, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = rows[pr][col]
        rows[pr] = [v / inv for v in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * p for v, p in zip(rows[i], rows[pr])]
        pivot_cols.append(col)
        pr += 1
    free = [c for c in range(m) if c not in pivot_cols]
    if not free:
        return None
    f = free[0]
    c = [_F0] * m
    c[f] = _F1
    for i, pc in enumerate(pivot_cols):
        c[pc] = -rows[i][f]
    return c


def affinely_independent(points: Sequence[Iterable]) -> bool:
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        return True
    return _affine_dependence(pts) is None


def caratheodory_reduce(
    points: Sequence[Iterable], weights: Sequence
) -> tuple[tuple[RatVec, ...], tuple[Fraction, ...]]:
    """Reduce a convex combination to affinely independent support.

    One dependence is eliminated per round: scale it so some coefficient
    is positive, drop the index maximizing c_i/b_i (smallest index on
    ties), and fold its weight into the rest.  The combination value is
    preserved exactly; weights stay positive and sum to one.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    wts = [Fraction(x) for x in weights]
    if not pts or len(pts) != len(wts):
        raise ValueError("need equally many points and weights, at least one")
    if any(len(p) != len(pts[0]) for p in pts):
        raise ValueError("points of mixed dimensions")
    if any(b < 0 for b in wts) or sum(wts) != 1:
        raise ValueError("weights must be nonnegative and sum to one")

    keep = [i for i, b in enumerate(wts) if b > 0]
    pts = [pts[i] for i in keep]
    wts = [wts[i] for i in keep]

    while True:
        c = _affine_dependence(pts)
        if c is None:
            return tuple(pts), tuple(wts)
        if not any(x > 0 for x in c):
            c = [-x for x in c]
        istar = None
        for i, ci in enumerate(c):
            if ci > 0 and (istar is None or ci * wts[istar] > c[istar] * wts[i]):
                istar = i  # strict: ties keep the smallest index
        ratio = c[istar] / wts[istar]
        new_pts: list[RatVec] = []
        new_wts: list[Fraction] = []
        for i, (p, b) in enumerate(zip(pts, wts)):
            if i == istar:
                continue
            nb = b - c[i] / ratio
            if nb < 0:
                raise ConsistencyError("dependence elimination went negative")
            if nb > 0:
                new_pts.append(p)
                new_wts.append(nb)
        pts, wts = new_pts, new_wts


def power(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    """The m-th power: minimalized m-fold sums of generators.  m = 0 gives
    the unit ideal by convention."""
    if m < 0:
        raise ValueError(f"power must be nonnegative, got {m}")
    if m == 0:
        return MonomialIdeal(ideal.dim, [(0,) * ideal.dim])
    sums = {
        tuple(map(sum, zip(*combo)))
        for combo in itertools.combinations_with_replacement(ideal.generators, m)
    }
    return MonomialIdeal(ideal.dim, sums)


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure: the minimal lattice
    points of the Newton polyhedron.

    The scan is confined to the box below the componentwise maximum M of
    the generators: a polyhedron lattice point with a coordinate above M
    keeps slack >= 1 there, so decrementing that coordinate stays inside
    and the point is not minimal.  Three shortcuts keep the LP count low
    (domination by a found generator, membership in the ideal itself, and
    separation by a cached outside functional); all are sound because the
    scan is ascending lex and the polyhedron is up-closed.
    """
    dim = ideal.dim
    bounds = tuple(max(g[j] for g in ideal.generators) for j in range(dim))
    poly = NewtonPolyhedron(ideal)
    mins: list[Vec] = []
    cuts: list[tuple[tuple[int, ...], int]] = []  # w as (numerators, denominator)
    for a in box_enumerate(bounds):
        dominated = False
        for q in reversed(mins):
            for x, y in zip(q, a):
                if x > y:
                    break
            else:
                dominated = True
                break
        if dominated:  # inside, and not minimal
            continue
        if ideal.contains(a):  # in the ideal, hence inside; minimal since
            mins.append(a)     # nothing below it was inside
            continue
        separated = False
        for num, den in cuts:  # w.a < 1 certified outside already
            if sum(nj * aj for nj, aj in zip(num, a)) < den:
                separated = True
                break
        if separated:
            continue
        cert = poly.contains(a)
        if cert.verdict == INSIDE:
            mins.append(a)  # nothing below it was inside, so it is minimal
        else:
            den = math.lcm(*(x.denominator for x in cert.w))
            cuts.append((tuple(int(x * den) for x in cert.w), den))
    return MonomialIdeal(dim, mins)


def is_integrally_closed(ideal: MonomialIdeal) -> tuple[bool, Vec | None]:
    """(True, None), or (False, witness) with the witness a closure
    generator outside the ideal, ascending-lex first."""
    closed = integral_closure(ideal)
    missing = sorted(g for g in closed.generators if not ideal.contains(g))
    if missing:
        return False, missing[0]
    return True, None


@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    failing_power: int | None = None
    witness: Vec | None = None


def is_normal(ideal: MonomialIdeal) -> NormalityVerdict:
    """Whether every power is integrally closed.  Powers 1..n-1 decide it
    in n variables (one power in one variable)."""
    top = max(1, ideal.dim - 1)
    for m in range(1, top + 1):
        closed, witness = is_integrally_closed(power(ideal, m))
        if not closed:
            return NormalityVerdict(False, failing_power=m, witness=witness)
    return NormalityVerdict(True)
