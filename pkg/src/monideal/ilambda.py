"""Axis ideals and their integral closures, handled combinatorially.

For a vector lam of positive integers, the axis ideal is generated by
x_i^{lam_i}.  Put L = lcm(lam) and omega_i = L / lam_i.  The exponent set
of the closure ideal is cut out by a single inequality,

    { a in N^n : omega . a >= L },

so membership, minimal generators, power decompositions, and the
normality criterion reduce to integer arithmetic; the polyhedral solver
is never needed on this path, which is what makes it an independent
cross-check for the general one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from collections.abc import Iterable

from .lattice import MonomialIdeal, Vec, as_vec, box_enumerate, require_same_dim

EQUIVALENT = "equivalent"
FORWARD_ONLY = "forward-only"


class LambdaSpec:
    """A vector of positive integers with its derived data: L = lcm,
    omega_i = L / lambda_i, and g = gcd(omega)."""

    __slots__ = ("lam", "L", "omega", "g")

    def __init__(self, lam: Iterable[int]):
        lam = tuple(int(v) for v in lam)
        if not lam:
            raise ValueError("lambda must have at least one entry")
        if any(v < 1 for v in lam):
            raise ValueError(f"lambda entries must be positive, got {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "L", lcm(*lam))
        object.__setattr__(self, "omega", tuple(self.L // v for v in lam))
        # provably 1 (a common factor of all L/lam_i would shrink the lcm),
        # but carried as data since the downstream formulas consume it
        object.__setattr__(self, "g", gcd(*self.omega))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaSpec is immutable")

    @classmethod
    def parse(cls, text: str) -> "LambdaSpec":
        from .lattice import parse_vector

        return cls(parse_vector(text))

    @property
    def n(self) -> int:
        return len(self.lam)

    def omega_dot(self, a: Vec) -> int:
        require_same_dim(self.omega, tuple(a))
        return sum(w * x for w, x in zip(self.omega, a))

    def __eq__(self, other):
        if not isinstance(other, LambdaSpec):
            return NotImplemented
        return self.lam == other.lam

    def __hash__(self):
        return hash(self.lam)

    def __repr__(self):
        return f"LambdaSpec({list(self.lam)!r})"


def j_ideal(spec: LambdaSpec) -> MonomialIdeal:
    """The axis ideal itself: one generator lam_i * e_i per variable."""
    n = spec.n
    gens = []
    for i, v in enumerate(spec.lam):
        g = [0] * n
        g[i] = v
        gens.append(tuple(g))
    return MonomialIdeal(n, gens)


def in_gamma(spec: LambdaSpec, a: Iterable[int]) -> bool:
    """Membership of a in the closure exponent set: omega . a >= L."""
    a = as_vec(a)
    if any(x < 0 for x in a):
        return False
    return spec.omega_dot(a) >= spec.L


def ilambda_generators(spec: LambdaSpec) -> MonomialIdeal:
    """Minimal generators of the closure ideal: minimal lattice points of
    omega . a >= L.  They all satisfy a <= lam: a point with a_i > lam_i
    strictly dominates the axis point lam_i * e_i, which already lies in
    the set, so the scan over the closed box below lam is exhaustive."""
    omega, L = spec.omega, spec.L
    mins: list[Vec] = []
    for a in box_enumerate(spec.lam):
        dominated = False
        for q in reversed(mins):
            for x, y in zip(q, a):
                if x > y:
                    break
            else:
                dominated = True
                break
        if dominated:
            continue
        if sum(w * x for w, x in zip(omega, a)) >= L:
            mins.append(a)
    return MonomialIdeal(spec.n, mins)


def _split(spec: LambdaSpec, a: Vec, p: int, gens, memo) -> tuple[Vec, ...] | None:
    key = (a, p)
    hit = memo.get(key, memo)
    if hit is not memo:
        return hit
    result = None
    if spec.omega_dot(a) >= p * spec.L:  # necessary: each part needs value >= L
        if p == 1:
            result = (a,)
        else:
            for g in gens:
                for x, y in zip(g, a):
                    if x > y:
                        break
                else:
                    rest = _split(
                        spec, tuple(x - y for x, y in zip(a, g)), p - 1, gens, memo
                    )
                    if rest is not None:
                        result = (g,) + rest
                        break
    memo[key] = result
    return result


def decompose(spec: LambdaSpec, a: Iterable[int], p: int) -> tuple[Vec, ...] | None:
    """Split a into p parts lying in the closure exponent set, or None.

    A split exists iff some minimal generator g fits under a and a - g
    splits into p - 1 parts: surplus in the first part can always be
    pushed into the remaining ones, since the set is up-closed.
    """
    a = as_vec(a)
    require_same_dim(a, spec.lam)
    if p < 1:
        raise ValueError(f"part count must be positive, got {p}")
    if any(x < 0 for x in a):
        return None
    gens = ilambda_generators(spec).generators
    return _split(spec, a, p, gens, {})


@dataclass(frozen=True)
class LambdaNormalityVerdict:
    normal: bool
    witness: tuple[int, Vec] | None  # (p, alpha), first in (p, lex) order
    method: str  # "n<=2" | "gcd" | "exhaustive"


def is_normal_lambda(
    spec: LambdaSpec, force_enumeration: bool = False
) -> LambdaNormalityVerdict:
    """Decide normality of the closure ideal of the axis ideal.

    Fast paths: at most two variables, and gcd(lam) > n - 2; both are
    always normal.  Otherwise it suffices to check points of the open box
    a_i < lam_i: the closure ideal is normal iff every such a with
    omega . a >= p * L, p < n, splits into p closure-set parts.  The
    first failing (p, a), p outermost and a in ascending lex, is the
    witness."""
    n = spec.n
    if not force_enumeration:
        if n <= 2:
            return LambdaNormalityVerdict(True, None, "n<=2")
        if gcd(*spec.lam) > n - 2:
            return LambdaNormalityVerdict(True, None, "gcd")
    gens = ilambda_generators(spec).generators
    memo: dict = {}
    bounds = tuple(v - 1 for v in spec.lam)
    for p in range(1, n):
        need = p * spec.L
        for a in box_enumerate(bounds):
            if spec.omega_dot(a) >= need and _split(spec, a, p, gens, memo) is None:
                return LambdaNormalityVerdict(False, (p, a), "exhaustive")
    return LambdaNormalityVerdict(True, None, "exhaustive")


@dataclass(frozen=True)
class CongruenceReduction:
    spec: LambdaSpec
    index: int  # 1-based position that was bumped
    ell: int  # lcm of the other entries
    spec_prime: LambdaSpec
    relation: str  # "equivalent" | "forward-only"


def congruence_reduce(spec: LambdaSpec, i: int) -> CongruenceReduction:
    """Bump lam_i by the lcm of the other entries.

    Normality of the bumped vector always implies normality of the
    original; when lam_i is at least that lcm the two are equivalent,
    and below that threshold only the forward direction is guaranteed.
    """
    if not 1 <= i <= spec.n:
        raise ValueError(f"index must be in 1..{spec.n}, got {i}")
    others = spec.lam[: i - 1] + spec.lam[i:]
    ell = lcm(*others) if others else 1
    bumped = spec.lam[: i - 1] + (spec.lam[i - 1] + ell,) + spec.lam[i:]
    relation = EQUIVALENT if spec.lam[i - 1] >= ell else FORWARD_ONLY
    return CongruenceReduction(spec, i, ell, LambdaSpec(bumped), relation)
