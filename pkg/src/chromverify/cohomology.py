"""Bigraded cohomology of C(n) with truncated coefficient rings.

A coefficient profile models ``E(n)_*/J`` for ``J = (p, v_1^{e_1}, ..., v_{n-1}^{e_{n-1}})``
with ``v_n`` inverted: a basis of the coefficients is the set of monomials
``v^c = v_1^{c_1} ... v_{n-1}^{c_{n-1}}`` with ``0 <= c_i < e_i``, and the
internal degree lives in ``Z/q_n``.  The differential is ``id (x) d``; the
resulting cohomology is the upper bound for ``rank H^{s,t} E(n)_*/J``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import gfp
from .degrees import qk
from .exterior import ComplexParams, Monomial, basis_masks, diff_mask, from_mask


@dataclass(frozen=True)
class CoefficientProfile:
    """``exponents=None`` is K(n)_*; otherwise the truncation bounds ``(e_1, ..., e_{n-1})``."""

    exponents: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.exponents is not None:
            object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
            if any(e < 1 for e in self.exponents):
                raise ValueError(f"truncation exponents must be >= 1, got {self.exponents}")

    @classmethod
    def morava_k(cls) -> "CoefficientProfile":
        return cls(None)

    @classmethod
    def truncated(cls, exponents) -> "CoefficientProfile":
        return cls(tuple(exponents))

    @property
    def kind(self) -> str:
        return "MoravaK" if self.exponents is None else "TruncatedE"

    def bounds(self, params: ComplexParams) -> tuple[int, ...]:
        if self.exponents is None:
            return (1,) * (params.n - 1)
        if len(self.exponents) != params.n - 1:
            raise ValueError(f"need {params.n - 1} truncation exponents for n={params.n}, "
                             f"got {len(self.exponents)}")
        return self.exponents

    def v_vectors(self, params: ComplexParams):
        """Exponent vectors ``c`` in lexicographic order, with their degree ``sum c_i q_i``."""
        qs = [qk(params.p, i) for i in range(1, params.n)]
        for c in product(*(range(e) for e in self.bounds(params))):
            yield c, sum(ci * qi for ci, qi in zip(c, qs))


MORAVA_K = CoefficientProfile.morava_k()


@dataclass(frozen=True)
class SliceBasis:
    s: int
    t: int
    entries: tuple[tuple[tuple[int, ...], Monomial], ...]

    def __len__(self):
        return len(self.entries)


def _slice_masks(params: ComplexParams, profile: CoefficientProfile, s: int, t: int):
    t %= params.qn
    out = []
    for c, shift in profile.v_vectors(params):
        for m in basis_masks(params, s, t - shift):
            out.append((c, m))
    return out


def slice_basis(params: ComplexParams, profile: CoefficientProfile, s: int, t: int) -> SliceBasis:
    t %= params.qn
    entries = tuple((c, from_mask(params, m)) for c, m in _slice_masks(params, profile, s, t))
    return SliceBasis(s, t, entries)


def differential_matrix(params: ComplexParams, profile: CoefficientProfile, s: int, t: int) -> np.ndarray:
    """Matrix of ``id (x) d`` from slice (s, t) to slice (s+1, t).

    Rows index the target basis and columns the source basis, both in
    ``slice_basis`` order, so cocycles are the right null space.
    """
    src = _slice_masks(params, profile, s, t)
    dst = _slice_masks(params, profile, s + 1, t)
    row = {key: r for r, key in enumerate(dst)}
    mat = np.zeros((len(dst), len(src)), dtype=np.int64)
    for col, (c, m) in enumerate(src):
        for m2, coeff in diff_mask(params, m).items():
            mat[row[(c, m2)], col] = coeff
    return np.mod(mat, params.p)


@lru_cache(maxsize=None)
def _rank(params: ComplexParams, profile: CoefficientProfile, s: int, t: int) -> int:
    if s < 0 or s >= params.num_generators:
        return 0
    return gfp.rank(differential_matrix(params, profile, s, t), params.p)


@dataclass(frozen=True)
class CohomologySlice:
    s: int
    t: int
    slice_dim: int
    rank_in: int
    rank_out: int

    @property
    def dim(self) -> int:
        return self.slice_dim - self.rank_out - self.rank_in


def cohomology(params: ComplexParams, profile: CoefficientProfile, s: int, t: int) -> CohomologySlice:
    t %= params.qn
    return CohomologySlice(
        s, t,
        slice_dim=len(_slice_masks(params, profile, s, t)),
        rank_in=_rank(params, profile, s - 1, t),
        rank_out=_rank(params, profile, s, t),
    )


def cohomology_dim(params: ComplexParams, profile: CoefficientProfile, s: int, t: int) -> int:
    return cohomology(params, profile, s, t).dim


def morava_vanishing_bound(params: ComplexParams, profile: CoefficientProfile, s: int, t: int) -> int:
    """Rank of ``(E(n)_*/J (x) H^*(C(n), d))^{s,t}``, summed one v-monomial at a time."""
    return sum(cohomology_dim(params, MORAVA_K, s, t - shift) for _, shift in profile.v_vectors(params))


def euler_characteristics(params: ComplexParams, t: int) -> tuple[int, int]:
    """Alternating sums over s of ``dim C^{s,t}`` and ``dim H^{s,t}`` (K(n)_* coefficients)."""
    chi_c = chi_h = 0
    for s in range(params.num_generators + 1):
        sign = -1 if s & 1 else 1
        sl = cohomology(params, MORAVA_K, s, t)
        chi_c += sign * sl.slice_dim
        chi_h += sign * sl.dim
    return chi_c, chi_h
