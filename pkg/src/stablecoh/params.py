"""Parameter triples (degree, projective dimension, point count)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def coefficient_space_dim(d: int, n: int) -> int:
    """Dimension comb(d+n, n) of the space of degree-d forms in n+1 variables."""
    if d < 0 or n < 0:
        raise ValueError(f"degree and dimension must be nonnegative, got d={d}, n={n}")
    return comb(d + n, n)


@dataclass(frozen=True)
class ParameterTriple:
    """A (d, n, N) triple: form degree, projective dimension, point count."""

    d: int
    n: int
    N: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got {self.d}")
        if self.n < 1:
            raise ValueError(f"projective dimension must be >= 1, got {self.n}")
        if self.N < 1:
            raise ValueError(f"point count must be >= 1, got {self.N}")

    @property
    def coefficient_dim(self) -> int:
        return coefficient_space_dim(self.d, self.n)

    @property
    def expected_codimension(self) -> int:
        """Conditions imposed by singularity at N independent points."""
        return self.N * (self.n + 1)

    @property
    def degree_bound(self) -> int:
        """Smallest degree 2N-1 at which the conditions are always independent."""
        return 2 * self.N - 1

    @property
    def in_guaranteed_range(self) -> bool:
        return self.d >= self.degree_bound
