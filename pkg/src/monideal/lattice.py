"""Integer exponent vectors and monomial ideals as antichains.

A monomial x^a is identified with its exponent vector a in N^n, and a
monomial ideal with the set of exponents of the monomials it contains.
That set is closed upward under the componentwise partial order, so it is
determined by its finitely many minimal points (Dickson's lemma); the
ideal is stored as that antichain, sorted in descending lexicographic
order, which is the canonical order for all printed output.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator

Vec = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Vectors of different lengths were combined."""


class ZeroIdeal(ValueError):
    """No generators were given.  The zero ideal has no generator
    antichain and none of the polyhedral operations apply to it."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree produced different answers, or a
    certificate failed its own re-verification.  Never caught internally."""


def as_vec(coords: Iterable[int]) -> Vec:
    return tuple(int(c) for c in coords)


def require_same_dim(a: tuple, b: tuple) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension mismatch: {len(a)} vs {len(b)}")


def le_pr(a: Vec, b: Vec) -> bool:
    """Componentwise order: a <= b in every coordinate (x^a divides x^b)."""
    require_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def vec_add(a: Vec, b: Vec) -> Vec:
    require_same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vec, b: Vec) -> Vec:
    require_same_dim(a, b)
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(m: int, a: Vec) -> Vec:
    return tuple(m * x for x in a)


def dot(a, b):
    """Inner product; works for int and Fraction entries alike."""
    require_same_dim(a, b)
    return sum(x * y for x, y in zip(a, b))


def minimalize(points: Iterable[Vec]) -> tuple[Vec, ...]:
    """Componentwise-minimal elements of a finite set, descending lex.

    The up-closure of the result equals the up-closure of the input, and
    the result is an antichain.  Empty input gives an empty tuple.
    """
    pts = sorted({as_vec(p) for p in points})
    if pts and any(len(p) != len(pts[0]) for p in pts):
        raise DimensionMismatch("points of mixed dimensions")
    kept: list[Vec] = []
    # ascending lex: q <=_pr p and q != p forces q <_lex p, so every
    # dominator of p (or a minimal point below it) is already in kept.
    for p in pts:
        dominated = False
        for q in reversed(kept):
            for x, y in zip(q, p):
                if x > y:
                    break
            else:
                dominated = True
                break
        if not dominated:
            kept.append(p)
    return tuple(sorted(kept, reverse=True))


def box_enumerate(
    bounds: Vec, predicate: Callable[[Vec], bool] | None = None
) -> Iterator[Vec]:
    """Stream the integer points 0 <= a <= bounds in ascending
    lexicographic order, optionally filtered.  The order is part of the
    contract: witness selection downstream relies on it."""
    bounds = as_vec(bounds)
    if any(b < 0 for b in bounds):
        raise ValueError(f"box bounds must be nonnegative, got {bounds}")
    for point in itertools.product(*(range(b + 1) for b in bounds)):
        if predicate is None or predicate(point):
            yield point


class MonomialIdeal:
    """A nonzero monomial ideal in a fixed number of variables.

    ``generators`` is the antichain of minimal generator exponents in
    descending lexicographic order; the constructor minimalizes whatever
    it is given, so equal ideals compare equal.
    """

    __slots__ = ("dim", "generators")

    def __init__(self, dim: int, generators: Iterable[Iterable[int]]):
        gens = [as_vec(g) for g in generators]
        if not gens:
            raise ZeroIdeal("a monomial ideal needs at least one generator")
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        for g in gens:
            if len(g) != dim:
                raise DimensionMismatch(
                    f"generator {g} has dimension {len(g)}, expected {dim}"
                )
            if any(c < 0 for c in g):
                raise ValueError(f"generator exponents must be nonnegative: {g}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", minimalize(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def from_generators(cls, generators: Iterable[Iterable[int]]) -> "MonomialIdeal":
        gens = [as_vec(g) for g in generators]
        if not gens:
            raise ZeroIdeal("a monomial ideal needs at least one generator")
        return cls(len(gens[0]), gens)

    def contains(self, a: Iterable[int]) -> bool:
        """Whether x^a lies in the ideal: some generator divides x^a."""
        a = as_vec(a)
        if len(a) != self.dim:
            raise DimensionMismatch(
                f"point {a} has dimension {len(a)}, expected {self.dim}"
            )
        for g in self.generators:
            for x, y in zip(g, a):
                if x > y:
                    break
            else:
                return True
        return False

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self.generators == other.generators

    def __hash__(self):
        return hash((self.dim, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({self.dim}, {list(self.generators)!r})"


def contains_monomial(ideal: MonomialIdeal, a: Iterable[int]) -> bool:
    return ideal.contains(a)


def format_vector(v: Iterable[int]) -> str:
    return ",".join(str(int(c)) for c in v)


def parse_vector(text: str) -> Vec:
    """Parse "2,0,1" into (2, 0, 1).  Whitespace around entries is fine."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed vector: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed vector: {text!r}") from None


def format_ideal(ideal: MonomialIdeal) -> str:
    return ";".join(format_vector(g) for g in ideal.generators)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse "2,0;1,1;0,2" into an ideal; generators are minimalized."""
    chunks = [c for c in text.strip().split(";") if c.strip()]
    if not chunks:
        raise ZeroIdeal(f"no generators in {text!r}")
    gens = [parse_vector(c) for c in chunks]
    dims = {len(g) for g in gens}
    if len(dims) > 1:
        raise DimensionMismatch(f"generators of mixed dimensions in {text!r}")
    if any(c < 0 for g in gens for c in g):
        raise ValueError(f"ideal exponents must be nonnegative: {text!r}")
    return MonomialIdeal(dims.pop(), gens)
