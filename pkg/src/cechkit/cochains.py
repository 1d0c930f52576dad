"""Cech cochain complexes on nerves with constant prime-field coefficients.

A q-cochain assigns one field value to every q-simplex of a complex; the
basis of each cochain space is the lexicographically sorted list of its
q-simplices, which fixes all sign conventions globally.  Over F_2 the
signs vanish, but the implementation carries them so odd primes work too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np

from .complexes import Simplex, SimplicialComplex
from .fplinalg import FMatrix, PrimeField


class NotSubcomplex(ValueError):
    pass


class NotSimplicial(ValueError):
    pass


@dataclass(frozen=True)
class CochainSpace:
    complex: SimplicialComplex
    degree: int
    field: PrimeField

    @cached_property
    def basis(self) -> tuple[Simplex, ...]:
        return self.complex.simplices_of_dim(self.degree)

    @cached_property
    def index(self) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def zero(self) -> "Cochain":
        return Cochain(self, np.zeros(self.dim, dtype=np.int64))

    def cochain(self, values: Mapping[Simplex, int] | np.ndarray) -> "Cochain":
        if isinstance(values, Mapping):
            vec = np.zeros(self.dim, dtype=np.int64)
            for s, v in values.items():
                vec[self.index[tuple(s)]] = v
            return Cochain(self, vec % self.field.p)
        vec = np.asarray(values, dtype=np.int64) % self.field.p
        if vec.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} values, got shape {vec.shape}")
        return Cochain(self, vec)


@dataclass(frozen=True)
class Cochain:
    space: CochainSpace
    values: np.ndarray

    def __getitem__(self, simplex: Simplex) -> int:
        return int(self.values[self.space.index[tuple(simplex)]])

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.space, (self.values + other.values) % self.space.field.p)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.space, (self.values - other.values) % self.space.field.p)

    def is_zero(self) -> bool:
        return not self.values.any()

    def same_as(self, other: "Cochain") -> bool:
        return self.space == other.space and bool(np.array_equal(self.values, other.values))


@dataclass(frozen=True)
class ChainMapLevel:
    """A linear map between cochain spaces of equal degree, as a matrix."""

    source: object
    target: object
    matrix: FMatrix

    def __call__(self, f: Cochain) -> Cochain:
        return Cochain(self.target, self.matrix.apply(f.values))

    def compose(self, inner: "ChainMapLevel") -> "ChainMapLevel":
        return ChainMapLevel(inner.source, self.target, self.matrix @ inner.matrix)


def cech_differential(k: SimplicialComplex, q: int, field: PrimeField) -> ChainMapLevel:
    """Coboundary from degree q to q+1: alternating sum over vertex removals."""
    src = CochainSpace(k, q, field)
    tgt = CochainSpace(k, q + 1, field)
    m = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for row, sigma in enumerate(tgt.basis):
        for i in range(len(sigma)):
            tau = sigma[:i] + sigma[i + 1:]
            m[row, src.index[tau]] += (-1) ** i
    return ChainMapLevel(src, tgt, FMatrix(m, field, row_labels=tgt.basis, col_labels=src.basis))


@dataclass(frozen=True)
class CohomologyBasis:
    """Cocycles, coboundaries and a chosen complement spanning H^q."""

    space: CochainSpace
    cocycles: FMatrix
    coboundaries: FMatrix
    representatives: FMatrix

    @property
    def dimension(self) -> int:
        return self.representatives.cols


def cohomology(k: SimplicialComplex, q: int, field: PrimeField) -> CohomologyBasis:
    space = CochainSpace(k, q, field)
    z = cech_differential(k, q, field).matrix.kernel_basis()
    if q == 0:
        b = FMatrix.zeros(space.dim, 0, field)
    else:
        b = cech_differential(k, q - 1, field).matrix.column_space_basis()
    reps = _extend_basis(b, z, field)
    return CohomologyBasis(space, z, b, reps)


def _extend_basis(b: FMatrix, z: FMatrix, field: PrimeField) -> FMatrix:
    """Greedily pick z-columns extending span(b), in column order."""
    picked: list[np.ndarray] = []
    current = b.entries
    rank = b.rank()
    for j in range(z.cols):
        candidate = np.column_stack([current, z.entries[:, j]]) if current.size else z.entries[:, [j]]
        r = FMatrix(candidate, field).rank()
        if r > rank:
            picked.append(z.column(j))
            current = candidate
            rank = r
    return FMatrix.from_columns(picked, z.rows, field)


def class_coordinates(coh: CohomologyBasis, values: np.ndarray) -> np.ndarray:
    """Coordinates of a cocycle's class in the chosen representative basis."""
    field = coh.space.field
    nb = coh.coboundaries.cols
    stacked = np.column_stack([coh.coboundaries.entries, coh.representatives.entries]) \
        if (nb + coh.representatives.cols) else np.zeros((coh.space.dim, 0), dtype=np.int64)
    solution = FMatrix(stacked, field).solve(np.asarray(values, dtype=np.int64))
    if solution is None:
        raise ValueError("vector is not a cocycle of this space")
    return solution[nb:]


def induced_on_cohomology(chain_map: ChainMapLevel, src: CohomologyBasis, tgt: CohomologyBasis) -> FMatrix:
    """Descend a chain map to a matrix on cohomology representatives."""
    cols = [class_coordinates(tgt, chain_map.matrix.apply(src.representatives.column(j)))
            for j in range(src.dimension)]
    return FMatrix.from_columns(cols, tgt.dimension, src.space.field)


def restriction_map(k: SimplicialComplex, l: SimplicialComplex, q: int, field: PrimeField) -> ChainMapLevel:
    """Pullback along the inclusion of a subcomplex: C^q(k) -> C^q(l)."""
    if not l.is_subcomplex_of(k):
        raise NotSubcomplex("second complex is not a subcomplex of the first")
    src = CochainSpace(k, q, field)
    tgt = CochainSpace(l, q, field)
    m = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for row, s in enumerate(tgt.basis):
        m[row, src.index[s]] = 1
    return ChainMapLevel(src, tgt, FMatrix(m, field, row_labels=tgt.basis, col_labels=src.basis))


def restrict_cochain(f: Cochain, l: SimplicialComplex) -> Cochain:
    return restriction_map(f.space.complex, l, f.space.degree, f.space.field)(f)


def extend_by_zero(f: Cochain, k: SimplicialComplex) -> Cochain:
    """Extension by zero of a cochain on a subcomplex to the whole complex."""
    small = f.space.complex
    if not small.is_subcomplex_of(k):
        raise NotSubcomplex("cochain's complex is not a subcomplex of the target")
    tgt = CochainSpace(k, f.space.degree, f.space.field)
    vec = np.zeros(tgt.dim, dtype=np.int64)
    for s, i in f.space.index.items():
        vec[tgt.index[s]] = f.values[i]
    return Cochain(tgt, vec)


def _permutation_sign(seq: tuple[str, ...]) -> int:
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def pullback_map(vertex_map: Mapping[str, str], domain: SimplicialComplex,
                 codomain: SimplicialComplex, q: int, field: PrimeField) -> ChainMapLevel:
    """Pullback C^q(codomain) -> C^q(domain) along a simplicial vertex map.

    Simplices with degenerate image (repeated vertices) pull the cochain
    value back to zero, matching the alternating-cochain model.
    """
    for s in domain.simplices:
        try:
            image = tuple(sorted({vertex_map[v] for v in s}))
        except KeyError as exc:
            raise NotSimplicial(f"vertex map undefined on {exc.args[0]!r}") from exc
        if image not in codomain:
            raise NotSimplicial(f"image of {s!r} is not a simplex of the codomain")
    src = CochainSpace(codomain, q, field)
    tgt = CochainSpace(domain, q, field)
    m = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for row, tau in enumerate(tgt.basis):
        images = tuple(vertex_map[v] for v in tau)
        if len(set(images)) < len(images):
            continue
        sigma = tuple(sorted(images))
        m[row, src.index[sigma]] = _permutation_sign(images)
    return ChainMapLevel(src, tgt, FMatrix(m, field, row_labels=tgt.basis, col_labels=src.basis))
