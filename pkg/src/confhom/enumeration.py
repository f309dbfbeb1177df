"""Monomial bases by weight, and their dimension counts two independent ways.

`monomial_basis` enumerates the canonical monomials of a fixed weight over
a generator list; `poincare` turns that into degree-indexed dimensions.
`series_coefficient` computes the same numbers without enumerating, by
expanding the two-variable Hilbert series of the free graded-commutative
algebra (a geometric factor per polynomial generator, `1 + t^d s^w` per
exterior one) with numpy convolutions.  Agreement of the two routes is one
of the package's standing cross-checks.
"""

from __future__ import annotations

import numpy as np

from .algebra import Generator, Monomial, as_prime


class GradedDims:
    """A finite map degree -> dimension; the universal answer format."""

    __slots__ = ("dims",)

    def __init__(self, dims: dict[int, int] | None = None):
        self.dims = {d: n for d, n in (dims or {}).items() if n}
        if any(n < 0 for n in self.dims.values()):
            raise ValueError("negative dimension")

    @classmethod
    def of_degrees(cls, degrees) -> "GradedDims":
        out: dict[int, int] = {}
        for d in degrees:
            out[d] = out.get(d, 0) + 1
        return cls(out)

    def total(self) -> int:
        return sum(self.dims.values())

    def max_degree(self) -> int:
        return max(self.dims, default=-1)

    def to_pairs(self) -> list[list[int]]:
        return [[d, self.dims[d]] for d in sorted(self.dims)]

    def truncate(self, dmax: int) -> "GradedDims":
        return GradedDims({d: n for d, n in self.dims.items() if d <= dmax})

    def shift(self, offset: int) -> "GradedDims":
        return GradedDims({d + offset: n for d, n in self.dims.items()})

    def convolve_geometric(self, step: int, dmax: int) -> "GradedDims":
        """Multiply by the series 1/(1 - t^step), truncated at degree dmax."""
        out: dict[int, int] = {}
        for d, n in self.dims.items():
            k = d
            while k <= dmax:
                out[k] = out.get(k, 0) + n
                k += step
        return GradedDims(out)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedDims) and self.dims == other.dims

    def __hash__(self) -> int:
        return hash(frozenset(self.dims.items()))

    def __repr__(self) -> str:
        return f"GradedDims({self.dims!r})"


class BigradedDims:
    """A finite map (weight, degree) -> dimension, truncated by the caller."""

    __slots__ = ("dims",)

    def __init__(self, dims: dict[tuple[int, int], int] | None = None):
        self.dims = {wd: n for wd, n in (dims or {}).items() if n}

    def weight_slice(self, w: int) -> GradedDims:
        return GradedDims({d: n for (ww, d), n in self.dims.items() if ww == w})

    def total(self) -> int:
        return sum(self.dims.values())

    def to_pairs(self) -> list[list[int]]:
        return [[w, d, self.dims[(w, d)]] for (w, d) in sorted(self.dims)]

    def __getitem__(self, wd: tuple[int, int]) -> int:
        return self.dims.get(wd, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BigradedDims) and self.dims == other.dims

    def __repr__(self) -> str:
        return f"BigradedDims({self.dims!r})"


def monomial_basis(gens, n: int, p) -> list[Monomial]:
    """All canonical monomials of total weight exactly n over `gens`.

    Exterior generators contribute exponent at most one.  The result is
    sorted by (degree, canonical text).
    """
    as_prime(p)
    if n < 0:
        raise ValueError(f"weight must be >= 0, got {n}")
    ordered: list[Generator] = sorted(gens, key=lambda g: g.rank)
    if len({g.rank for g in ordered}) != len(ordered):
        raise ValueError("duplicate generators")
    out: list[Monomial] = []
    acc: list[tuple[Generator, int]] = []

    def extend(idx: int, remaining: int) -> None:
        if remaining == 0:
            out.append(Monomial(tuple(acc)))
            return
        if idx == len(ordered):
            return
        g = ordered[idx]
        extend(idx + 1, remaining)
        top = remaining // g.weight
        if g.exterior:
            top = min(top, 1)
        for e in range(1, top + 1):
            acc.append((g, e))
            extend(idx + 1, remaining - e * g.weight)
            acc.pop()

    extend(0, n)
    out.sort(key=Monomial.sort_key)
    return out


def poincare(gens, n: int, p) -> GradedDims:
    """Degree-indexed dimensions of the weight-n monomial basis."""
    return GradedDims.of_degrees(m.degree for m in monomial_basis(gens, n, p))


def total_dim(n: int, p) -> int:
    """Total dimension of the weight-n homology of planar configurations."""
    from .catalog import plane_config_generators

    return len(monomial_basis(plane_config_generators(p, max(n, 1)), n, p))


def series_table(gens, max_weight: int, dmax: int, p) -> BigradedDims:
    """The two-variable Hilbert series of the free algebra on `gens`,
    truncated to weight <= max_weight and degree <= dmax."""
    as_prime(p)
    if max_weight < 0 or dmax < 0:
        raise ValueError("bounds must be >= 0")
    table = np.zeros((max_weight + 1, dmax + 1), dtype=np.int64)
    table[0, 0] = 1
    for g in sorted(gens, key=lambda g: g.rank):
        w0, d0 = g.weight, g.degree
        if w0 > max_weight:
            continue
        if g.exterior:
            shifted = np.zeros_like(table)
            if d0 <= dmax:
                shifted[w0:, d0:] = table[: max_weight + 1 - w0, : dmax + 1 - d0]
            table = table + shifted
        else:
            # In-place forward sweep realizes the geometric factor 1/(1 - t^d0 s^w0).
            if d0 <= dmax:
                for w in range(w0, max_weight + 1):
                    table[w, d0:] += table[w - w0, : dmax + 1 - d0]
    dims = {
        (w, d): int(table[w, d])
        for w in range(max_weight + 1)
        for d in range(dmax + 1)
        if table[w, d]
    }
    return BigradedDims(dims)


def series_coefficient(gens, n: int, dmax: int, p) -> GradedDims:
    """Weight-n slice of the truncated Hilbert series; degree <= dmax."""
    if n < 0:
        raise ValueError(f"weight must be >= 0, got {n}")
    return series_table(gens, n, dmax, p).weight_slice(n)
