"""Closed-form homology tables with Tate-twist bookkeeping.

Conventions, fixed here once and reused everywhere downstream:

* a table entry of Tate index m denotes a summand Q(m), of weight -2m;
* degree-2i homology of a smooth compact variety carries Tate index i
  (dual to the cohomological convention Q(-i));
* Tate indices may be computed as exact rationals but every stored entry
  must be integral; a half-integral index is a hard error, never rounded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

TateComponent = tuple[int, int]  # (dimension, tate index)


class GradedTateVector:
    """Finitely supported table: degree -> Tate-twisted summands.

    Most tables here are pure, with a single (dimension, Tate index) pair
    per degree. Exterior-algebra products and Alexander-dual totals can mix
    weights within one degree, so a degree maps to a tuple of components
    sorted by Tate index.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: dict[int, tuple[TateComponent, ...]]):
        self._entries = {deg: entries[deg] for deg in sorted(entries)}

    @classmethod
    def from_components(
        cls, components: Iterable[tuple[int, int, int | Fraction]]
    ) -> "GradedTateVector":
        """Build from (degree, dimension, tate) triples, merging equal twists."""
        acc: dict[tuple[int, int], int] = {}
        for degree, dim, tate in components:
            if dim < 0:
                raise ValueError(f"negative dimension {dim} in degree {degree}")
            if dim == 0:
                continue
            twist = Fraction(tate)
            if twist.denominator != 1:
                raise ValueError(
                    f"non-integral Tate index {twist} in degree {degree}"
                )
            key = (degree, int(twist))
            acc[key] = acc.get(key, 0) + dim
        entries: dict[int, list[TateComponent]] = {}
        for (degree, twist), dim in sorted(acc.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            entries.setdefault(degree, []).append((dim, twist))
        return cls({deg: tuple(comps) for deg, comps in entries.items()})

    @property
    def entries(self) -> dict[int, tuple[TateComponent, ...]]:
        return dict(self._entries)

    def degrees(self) -> tuple[int, ...]:
        return tuple(self._entries)

    def components(self, degree: int) -> tuple[TateComponent, ...]:
        return self._entries.get(degree, ())

    def single(self, degree: int) -> TateComponent:
        comps = self.components(degree)
        if len(comps) != 1:
            raise ValueError(f"degree {degree} has {len(comps)} components, expected 1")
        return comps[0]

    def dimension(self, degree: int) -> int:
        return sum(dim for dim, _ in self.components(degree))

    def total_dimension(self) -> int:
        return sum(dim for comps in self._entries.values() for dim, _ in comps)

    def is_pure(self) -> bool:
        return all(len(comps) == 1 for comps in self._entries.values())

    def degree_multiset(self) -> Counter:
        return Counter({deg: self.dimension(deg) for deg in self._entries})

    def iter_components(self) -> Iterator[tuple[int, int, int]]:
        for degree, comps in self._entries.items():
            for dim, tate in comps:
                yield degree, dim, tate

    def mapped(self, fn) -> "GradedTateVector":
        """Apply fn(degree, dim, tate) -> (degree, dim, tate) to every component."""
        return GradedTateVector.from_components(
            fn(deg, dim, tate) for deg, dim, tate in self.iter_components()
        )

    def to_json_obj(self) -> dict[str, list[int]]:
        """The {degree: [dim, tate]} interchange form; requires a pure table."""
        return {str(deg): [dim, tate] for deg, (dim, tate) in
                ((d, self.single(d)) for d in self._entries)}

    def to_json_multi(self) -> dict[str, list[list[int]]]:
        """Mixed-weight form: each degree maps to a list of [dim, tate] pairs."""
        return {
            str(deg): [[dim, tate] for dim, tate in comps]
            for deg, comps in self._entries.items()
        }

    def csv_rows(self) -> list[tuple[int, int, int]]:
        return [(deg, dim, tate) for deg, dim, tate in self.iter_components()]

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedTateVector) and self._entries == other._entries

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{deg}: {list(comps) if len(comps) > 1 else comps[0]}"
            for deg, comps in self._entries.items()
        )
        return f"GradedTateVector({{{inner}}})"


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, l: int) -> tuple[int, ...]:
    """Coefficient tuple of the Gaussian binomial [m, l]_q.

    Computed by the q-Pascal recurrence [m,l] = [m-1,l-1] + q^l [m-1,l]
    with exact integer coefficients; index i is the coefficient of q^i and
    the tuple has length l(m-l)+1.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if l < 0 or l > m:
        return ()
    if l == 0 or l == m:
        return (1,)
    left = gaussian_binomial(m - 1, l - 1)
    right = gaussian_binomial(m - 1, l)
    out = [0] * (l * (m - l) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + l] += c
    return tuple(out)


def grassmannian_poincare(l: int, n: int) -> GradedTateVector:
    """Homology of the Grassmannian of l-dimensional subspaces of C^{n+1}.

    Degree 2i has dimension equal to the q^i coefficient of [n+1, l]_q and
    Tate index i. l = n+1 gives the one-point table; l > n+1 the empty one.
    """
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    coeffs = gaussian_binomial(n + 1, l)
    return GradedTateVector.from_components(
        (2 * i, c, i) for i, c in enumerate(coeffs) if c
    )


def twisted_config_bm(l: int, n: int) -> GradedTateVector:
    """Sign-twisted Borel-Moore homology of l distinct unordered points in P^n.

    The table is the Grassmannian one shifted up by l(l-1) in degree, and the
    entry in degree j is pure of weight -j, i.e. has Tate index j/2. Support
    is even degrees from l(l-1) to l(l-1) + 2l(n+1-l).
    """
    if not 1 <= l <= n + 1:
        raise ValueError(f"l must be between 1 and n+1 = {n + 1}, got {l}")
    shift = l * (l - 1)
    grass = grassmannian_poincare(l, n)
    return grass.mapped(lambda deg, dim, tate: (deg + shift, dim, Fraction(deg + shift, 2)))


@dataclass(frozen=True)
class GlGenerator:
    """An odd-degree exterior generator of the cohomology of GL_{n+1}(C)."""

    index: int  # k = 0..n

    @property
    def degree(self) -> int:
        return 2 * self.index + 1

    @property
    def hodge_type(self) -> tuple[int, int]:
        return (self.index + 1, self.index + 1)

    @property
    def tate(self) -> int:
        return -(self.index + 1)


def gl_cohomology(n: int) -> tuple[tuple[GlGenerator, ...], GradedTateVector]:
    """Generators and full additive table of the cohomology of GL_{n+1}(C).

    An exterior algebra on n+1 generators of degree 2k+1 and Hodge type
    (k+1, k+1), k = 0..n. The table expands the product of (1 + t^{2k+1}):
    the class of a generator subset S sits in degree sum(2k+1) with Tate
    index -sum(k+1). Top degree is (n+1)^2, with a single class.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    generators = tuple(GlGenerator(k) for k in range(n + 1))
    components = []
    for mask in range(1 << (n + 1)):
        degree = 0
        tate = 0
        for k in range(n + 1):
            if mask >> k & 1:
                degree += 2 * k + 1
                tate -= k + 1
        components.append((degree, 1, tate))
    table = GradedTateVector.from_components(components)
    top = (n + 1) ** 2
    assert table.degrees()[-1] == top and table.dimension(top) == 1
    return generators, table
