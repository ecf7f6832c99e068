"""Configurations of distinct points in projective space, with exact coordinates.

Points are stored as the coordinate vectors they were given; projective
normalization (leftmost nonzero coordinate scaled to 1) is used for equality
tests and deduplication only. Random sampling draws integer coordinates
uniformly from [-100, 100] and resamples on projective coincidence, which is
enough to hit the generic locus with overwhelming probability while keeping
matrix entries small.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import ExactMatrix

Coord = int | Fraction
Point = tuple[Coord, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")

DEFAULT_COORD_BOUND = 100
DEFAULT_MAX_ATTEMPTS = 1000


class SamplingError(RuntimeError):
    """Random sampling failed to produce a valid configuration in the attempt budget."""


class PointsParseError(ValueError):
    """A points document failed to parse; carries the position of the first bad token."""

    def __init__(self, message: str, *, point: int | None = None, coord: int | None = None):
        self.point = point
        self.coord = coord
        if point is not None and coord is not None:
            message = f"point {point}, coordinate {coord}: {message}"
        elif point is not None:
            message = f"point {point}: {message}"
        super().__init__(message)


def normalize_point(point: Sequence[Coord]) -> Point:
    """Scale so the leftmost nonzero coordinate is 1."""
    lead = next((c for c in point if c != 0), None)
    if lead is None:
        raise ValueError("zero vector is not a projective point")
    return tuple(Fraction(c) / lead for c in point)


@dataclass(frozen=True)
class PointConfiguration:
    """N pairwise-distinct points of projective n-space."""

    dimension: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        n = self.dimension
        if n < 0:
            raise ValueError(f"projective dimension must be >= 0, got {n}")
        seen: dict[Point, int] = {}
        for j, point in enumerate(self.points):
            if len(point) != n + 1:
                raise ValueError(
                    f"point {j} has {len(point)} coordinates, expected {n + 1}"
                )
            if all(c == 0 for c in point):
                raise ValueError(f"point {j} is the zero vector")
            key = normalize_point(point)
            if key in seen:
                raise ValueError(f"points {seen[key]} and {j} coincide projectively")
            seen[key] = j

    @property
    def count(self) -> int:
        return len(self.points)

    def normalized(self) -> "PointConfiguration":
        return PointConfiguration(
            self.dimension, tuple(normalize_point(p) for p in self.points)
        )

    def permuted(self, order: Sequence[int]) -> "PointConfiguration":
        return PointConfiguration(self.dimension, tuple(self.points[i] for i in order))

    def coordinate_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.points, self.dimension + 1)

    def json_points(self) -> list[list[str]]:
        """Coordinates as 'p' or 'p/q' strings, the on-disk interchange form."""
        return [[str(c) for c in point] for point in self.points]


def coordinate_configuration(n: int, N: int) -> PointConfiguration:
    """The first N coordinate points e_0, .., e_{N-1} of projective n-space."""
    if N > n + 1:
        raise ValueError(f"only {n + 1} coordinate points exist in dimension {n}")
    points = tuple(
        tuple(1 if i == j else 0 for i in range(n + 1)) for j in range(N)
    )
    return PointConfiguration(n, points)


def collinear_configuration(n: int, N: int) -> PointConfiguration:
    """N distinct points [1 : t : 0 : .. : 0] on a fixed line, t = 0..N-1.

    Deterministic and seed-independent; used to probe the sharpness of the
    degree bound 2N-1.
    """
    if n < 1:
        raise ValueError("a line needs ambient dimension >= 1")
    points = tuple((1, t) + (0,) * (n - 1) for t in range(N))
    return PointConfiguration(n, points)


def random_point(n: int, rng: random.Random, coord_bound: int = DEFAULT_COORD_BOUND) -> Point:
    while True:
        point = tuple(rng.randint(-coord_bound, coord_bound) for _ in range(n + 1))
        if any(point):
            return point


def random_configuration(
    n: int,
    N: int,
    rng: random.Random,
    coord_bound: int = DEFAULT_COORD_BOUND,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> PointConfiguration:
    """Sample N projectively distinct random points."""
    points: list[Point] = []
    keys: set[Point] = set()
    attempts = 0
    while len(points) < N:
        attempts += 1
        if attempts > max_attempts:
            raise SamplingError(
                f"no distinct configuration of {N} points in dimension {n} "
                f"after {max_attempts} attempts"
            )
        point = random_point(n, rng, coord_bound)
        key = normalize_point(point)
        if key in keys:
            continue
        keys.add(key)
        points.append(point)
    return PointConfiguration(n, tuple(points))


def in_general_linear_position(config: PointConfiguration) -> bool:
    """No k+2 of the points lie in a k-dimensional linear subspace, k < n.

    Checked by rank of the coordinate matrix of every subset of size
    min(N, n+1); full rank on those forces it on all smaller subsets.
    """
    size = min(config.count, config.dimension + 1)
    for subset in combinations(range(config.count), size):
        rows = [config.points[i] for i in subset]
        if ExactMatrix.from_rows(rows, config.dimension + 1).rank() < size:
            return False
    return True


def random_general_position_configuration(
    n: int,
    N: int,
    rng: random.Random,
    coord_bound: int = DEFAULT_COORD_BOUND,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> PointConfiguration:
    for _ in range(max_attempts):
        config = random_configuration(n, N, rng, coord_bound, max_attempts)
        if in_general_linear_position(config):
            return config
    raise SamplingError(
        f"no general-position configuration of {N} points in dimension {n} "
        f"after {max_attempts} attempts"
    )


def _parse_coordinate(token: object, point: int, coord: int) -> Coord:
    if isinstance(token, bool):
        raise PointsParseError(f"bad token {token!r}", point=point, coord=coord)
    if isinstance(token, int):
        return token
    if isinstance(token, str):
        text = token.strip()
        if not _RATIONAL_RE.fullmatch(text):
            raise PointsParseError(f"bad token {token!r}", point=point, coord=coord)
        try:
            value = Fraction(text)
        except ZeroDivisionError:
            raise PointsParseError(
                f"zero denominator in {token!r}", point=point, coord=coord
            ) from None
        return int(value) if value.denominator == 1 else value
    raise PointsParseError(f"bad token {token!r}", point=point, coord=coord)


def parse_points_json(text: str) -> PointConfiguration:
    """Parse a JSON array of points, each an array of 'p/q' or integer entries.

    Raises PointsParseError locating the first bad token (point and
    coordinate index, or the JSON line/column for a malformed document).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointsParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, list) or not doc:
        raise PointsParseError("document must be a non-empty array of points")
    points = []
    width = None
    for j, raw in enumerate(doc):
        if not isinstance(raw, list) or not raw:
            raise PointsParseError("expected a non-empty coordinate array", point=j)
        if width is None:
            width = len(raw)
        elif len(raw) != width:
            raise PointsParseError(
                f"expected {width} coordinates, got {len(raw)}", point=j
            )
        points.append(tuple(_parse_coordinate(tok, j, i) for i, tok in enumerate(raw)))
    try:
        return PointConfiguration(width - 1, tuple(points))
    except ValueError as exc:
        raise PointsParseError(str(exc)) from None
