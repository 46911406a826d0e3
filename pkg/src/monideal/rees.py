"""The extended Rees-type semigroup of the closure of an axis ideal, its
height-one monomial primes, and the codimension-one regularity test.

The semigroup S sits in N^{n+1}: each ring variable contributes (e_i, 0)
and each minimal generator beta of the closure ideal contributes
(beta, 1).  All its generators satisfy sigma(a, d) = omega . a - L d >= 0,
and sigma = 0 cuts the one facet of the cone not spanned by coordinate
hyperplanes.  Regularity in codimension one along that facet holds iff
some generator has sigma value exactly one, which happens iff L + 1 lies
in the scaled monoid; both routes are computed and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .ilambda import LambdaSpec, ilambda_generators
from .lattice import ConsistencyError, MonomialIdeal, Vec, as_vec, require_same_dim
from .monoid import FractionalMonoid, almost_quasinormal


class ReesSemigroup:
    """Generators and facet data of the semigroup of one LambdaSpec."""

    __slots__ = ("spec", "ideal", "generators", "sigma")

    def __init__(self, spec: LambdaSpec):
        ideal = ilambda_generators(spec)
        n = spec.n
        gens: list[Vec] = []
        for i in range(n):
            e = [0] * (n + 1)
            e[i] = 1
            gens.append(tuple(e))
        for beta in ideal.generators:
            gens.append(beta + (1,))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "sigma", spec.omega + (-spec.L,))

    def __setattr__(self, name, value):
        raise AttributeError("ReesSemigroup is immutable")

    def sigma_value(self, point) -> int:
        point = tuple(int(x) for x in point)
        require_same_dim(point, self.sigma)
        return sum(c * x for c, x in zip(self.sigma, point))

    @property
    def primitive_sigma(self) -> tuple[tuple[int, ...], int]:
        """(sigma / scale, scale) with scale = gcd of the coefficients.
        The scale is provably always 1 here since gcd(omega) = 1."""
        scale = gcd(*(abs(c) for c in self.sigma))
        return tuple(c // scale for c in self.sigma), scale

    def __repr__(self):
        return f"ReesSemigroup({self.spec!r})"


def build_semigroup(spec: LambdaSpec) -> ReesSemigroup:
    return ReesSemigroup(spec)


@dataclass(frozen=True)
class MonomialPrime:
    """A height-one monomial prime, described by which ring variables it
    contains and which t-degree-one generators (one per ideal generator
    exponent listed)."""

    label: str
    ring_vars: tuple[int, ...]  # 1-based variable indices
    t_generators: tuple[Vec, ...]


def height_one_primes(S: ReesSemigroup) -> tuple[MonomialPrime, ...]:
    """The height-one monomial primes: one per coordinate facet (P_1..P_n
    for the variables, P_{n+1} for the t-degree), plus the sigma facet.

    Computed literally from the facet formulas; in one variable the lists
    degenerate (P_1 then also contains the t-generator) but the formulas
    still apply verbatim.
    """
    spec = S.spec
    n = spec.n
    betas = S.ideal.generators
    primes = []
    for i in range(1, n + 1):
        primes.append(
            MonomialPrime(
                label=f"P_{i}",
                ring_vars=(i,),
                t_generators=tuple(b for b in betas if b[i - 1] >= 1),
            )
        )
    primes.append(
        MonomialPrime(label=f"P_{n + 1}", ring_vars=(), t_generators=betas)
    )
    primes.append(
        MonomialPrime(
            label="P_sigma",
            ring_vars=tuple(range(1, n + 1)),
            t_generators=tuple(b for b in betas if spec.omega_dot(b) > spec.L),
        )
    )
    return tuple(primes)


def r1_satisfied(spec: LambdaSpec) -> tuple[bool, Vec | None]:
    """Codimension-one regularity along the sigma facet.

    Semigroup route: scan for a generator with sigma value one.  Monoid
    route: L + 1 in the scaled monoid.  The two are equivalent, and both
    are computed; disagreement raises ConsistencyError rather than
    returning either answer.
    """
    S = build_semigroup(spec)
    witness = None
    for gen in S.generators:
        if S.sigma_value(gen) == 1:
            witness = gen
            break
    aq = almost_quasinormal(FractionalMonoid(spec))
    if (witness is not None) != aq:
        raise ConsistencyError(
            f"regularity routes disagree for {spec!r}: "
            f"sigma-scan witness {witness}, almost-quasinormal {aq}"
        )
    return witness is not None, witness


def _facet_split(rest: Vec, d: int, betas, memo) -> tuple[Vec, ...] | None:
    """Split the nonnegative vector rest into d parts drawn from the
    sigma-zero generator exponents, exactly."""
    key = (rest, d)
    hit = memo.get(key, memo)
    if hit is not memo:
        return hit
    result = None
    if d == 0:
        result = () if all(x == 0 for x in rest) else None
    else:
        for b in betas:
            for x, y in zip(b, rest):
                if x > y:
                    break
            else:
                sub = _facet_split(
                    tuple(y - x for x, y in zip(b, rest)), d - 1, betas, memo
                )
                if sub is not None:
                    result = (b,) + sub
                    break
    memo[key] = result
    return result


def express_on_facet(
    S: ReesSemigroup, point
) -> tuple[tuple[Vec, int], ...] | None:
    """Write a sigma-zero integer point as an integer combination of
    lattice moves inside the facet: differences of multiples of the
    sigma-zero generators (lam_i e_i, 1), plus a nonnegative remainder
    split into sigma-zero generators.

    Returns ((generator, coefficient), ...) with possibly negative
    coefficients on the (lam_i e_i, 1) moves, or None if the remainder
    does not split.  The reconstruction is re-verified exactly.
    """
    spec = S.spec
    n = spec.n
    point = tuple(int(x) for x in point)
    require_same_dim(point, S.sigma)
    if S.sigma_value(point) != 0:
        raise ValueError(f"point {point} is not on the sigma facet")
    qs = []
    rest = []
    for a_i, lam_i in zip(point[:n], spec.lam):
        q, r = divmod(a_i, lam_i)  # floor division: remainder in [0, lam_i)
        qs.append(q)
        rest.append(r)
    rest = tuple(rest)
    d_rest = point[n] - sum(qs)
    # sigma(rest, d_rest) = 0 and rest >= 0, so d_rest = omega.rest / L >= 0
    if d_rest < 0:
        raise ConsistencyError(f"facet reduction broke sigma on {point}")
    betas = tuple(
        b for b in S.ideal.generators if spec.omega_dot(b) == spec.L
    )
    parts = _facet_split(rest, d_rest, betas, {})
    if parts is None:
        return None
    combo: list[tuple[Vec, int]] = []
    for i, q in enumerate(qs):
        if q != 0:
            move = [0] * (n + 1)
            move[i] = spec.lam[i]
            move[n] = 1
            combo.append((tuple(move), q))
    counts: dict[Vec, int] = {}
    for b in parts:
        counts[b + (1,)] = counts.get(b + (1,), 0) + 1
    combo.extend(sorted(counts.items(), reverse=True))
    total = [0] * (n + 1)
    for gen, c in combo:
        for j in range(n + 1):
            total[j] += c * gen[j]
    if tuple(total) != point:
        raise ConsistencyError(f"facet expression does not reconstruct {point}")
    return tuple(combo)


def grp_facet_check(S: ReesSemigroup, radius: int) -> bool:
    """Verify that the group of the facet semigroup fills the whole facet
    lattice on a sample: every integer point with entries in
    [-radius, radius] and sigma value zero must be expressible through
    express_on_facet.  True when all sampled points pass."""
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    n1 = S.spec.n + 1
    for point in itertools.product(range(-radius, radius + 1), repeat=n1):
        if S.sigma_value(point) != 0:
            continue
        if express_on_facet(S, point) is None:
            return False
    return True
