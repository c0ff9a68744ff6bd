"""The exterior complex C(n) = E(h_{i,j} : 1 <= i <= n, j in Z/n) over F_p.

Public monomials are tuples of ``(i, j)`` pairs in canonical order
(lexicographic on ``(i, j)``).  Internally a monomial is a bitmask whose bit
``(i-1)*n + j`` marks ``h_{i,j}``; ascending bit index is the canonical order,
so Koszul signs reduce to popcounts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Union

import numpy as np

from .degrees import qk
from .gfp import check_prime

GeneratorId = tuple[int, int]
Monomial = tuple[GeneratorId, ...]

# n <= 4 means at most 2^16 monomials, cheap to bucket up front
FULL_TABLE_MAX_N = 4


@dataclass(frozen=True)
class ComplexParams:
    p: int
    n: int

    def __post_init__(self):
        check_prime(self.p)
        if not 1 <= self.n <= 6:
            raise ValueError(f"height n must be in [1, 6], got {self.n}")

    @property
    def num_generators(self) -> int:
        return self.n * self.n

    @property
    def q(self) -> int:
        return qk(self.p, 1)

    @property
    def qn(self) -> int:
        return qk(self.p, self.n)

    def q_table(self) -> list[int]:
        return [qk(self.p, k) for k in range(1, self.n + 1)]

    def index(self, g: GeneratorId) -> int:
        i, j = g
        if not (1 <= i <= self.n and 0 <= j < self.n):
            raise ValueError(f"no generator h{i},{j} in C({self.n})")
        return (i - 1) * self.n + j

    def generator(self, k: int) -> GeneratorId:
        return (k // self.n + 1, k % self.n)

    def generator_degree(self, g: GeneratorId) -> int:
        i, j = g
        return self.p**j * qk(self.p, i) % self.qn

    def normalize_t(self, t: int) -> int:
        return t % self.qn


# ---------------------------------------------------------------------------
# bitmask kernel


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mul_sign(a: int, b: int) -> int:
    """Sign of sorting the word ``a`` followed by ``b``; 0 if they overlap."""
    if a & b:
        return 0
    inv = 0
    for y in _bits(b):
        inv += (a >> (y + 1)).bit_count()
    return -1 if inv & 1 else 1


class _Engine:
    """Per-(p, n) lookup tables; immutable after construction apart from memo caches."""

    def __init__(self, params: ComplexParams):
        self.params = params
        n = params.n
        self.N = n * n
        self.top = (1 << self.N) - 1
        self.gen_deg = [params.generator_degree(params.generator(k)) for k in range(self.N)]
        # d(h_{i,j}) = sum_l h_{l,j} h_{i-l,l+j}; stored as (pair mask, lo, hi, sign)
        self.dgen: list[list[tuple[int, int, int, int]]] = []
        for k in range(self.N):
            i, j = params.generator(k)
            acc: dict[tuple[int, int], int] = {}
            for ell in range(1, i):
                a = params.index((ell, j))
                b = params.index((i - ell, (ell + j) % n))
                lo, hi = min(a, b), max(a, b)
                acc[(lo, hi)] = acc.get((lo, hi), 0) + (1 if a < b else -1)
            self.dgen.append([((1 << lo) | (1 << hi), lo, hi, c) for (lo, hi), c in acc.items() if c])
        self._dcache: dict[int, dict[int, int]] = {}

    def t_of(self, mask: int) -> int:
        return sum(self.gen_deg[k] for k in _bits(mask)) % self.params.qn

    def diff(self, mask: int) -> dict[int, int]:
        """Integer-coefficient differential of one monomial (cached)."""
        hit = self._dcache.get(mask)
        if hit is not None:
            return hit
        out: dict[int, int] = {}
        for k in _bits(mask):
            terms = self.dgen[k]
            if not terms:
                continue
            below = (1 << k) - 1
            rest = mask ^ (1 << k)
            prefix = rest & below
            suffix = rest & ~below
            pos_sign = -1 if (mask & below).bit_count() & 1 else 1
            for pair, lo, hi, c in terms:
                if rest & pair:
                    continue
                inv = ((prefix >> (lo + 1)).bit_count() + (prefix >> (hi + 1)).bit_count()
                       + (suffix & ((1 << lo) - 1)).bit_count() + (suffix & ((1 << hi) - 1)).bit_count())
                sgn = pos_sign * c * (-1 if inv & 1 else 1)
                key = rest | pair
                out[key] = out.get(key, 0) + sgn
        out = {m: c for m, c in out.items() if c}
        self._dcache[mask] = out
        return out

    @cached_property
    def full_table(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """All monomials bucketed by bidegree, each bucket in canonical order."""
        masks = np.arange(1 << self.N, dtype=np.int64)
        t = np.zeros_like(masks)
        s = np.zeros_like(masks)
        for k, deg in enumerate(self.gen_deg):
            bit = (masks >> k) & 1
            t += bit * deg
            s += bit
        t %= self.params.qn
        buckets: dict[tuple[int, int], list[int]] = {}
        for m, si, ti in zip(masks.tolist(), s.tolist(), t.tolist()):
            buckets.setdefault((si, ti), []).append(m)
        return {key: tuple(sorted(v, key=_bits)) for key, v in buckets.items()}

    @cached_property
    def _halves(self):
        # meet-in-the-middle tables for n > FULL_TABLE_MAX_N
        cut = self.N // 2
        qn = self.params.qn

        def bucket(lo: int, hi: int) -> dict[tuple[int, int], list[int]]:
            out: dict[tuple[int, int], list[int]] = {}
            idx = range(lo, hi)
            for r in range(len(idx) + 1):
                for combo in combinations(idx, r):
                    m = sum(1 << k for k in combo)
                    out.setdefault((r, sum(self.gen_deg[k] for k in combo) % qn), []).append(m)
            return out

        return bucket(0, cut), bucket(cut, self.N)

    @lru_cache(maxsize=None)
    def basis(self, s: int, t: int) -> tuple[int, ...]:
        if s < 0 or s > self.N:
            return ()
        t %= self.params.qn
        if self.params.n <= FULL_TABLE_MAX_N:
            return self.full_table.get((s, t), ())
        low, high = self._halves
        qn = self.params.qn
        found = []
        for (s1, t1), lows in low.items():
            if s1 > s:
                continue
            highs = high.get((s - s1, (t - t1) % qn))
            if highs:
                found.extend(a | b for a in lows for b in highs)
        return tuple(sorted(found, key=_bits))


@lru_cache(maxsize=None)
def _engine(params: ComplexParams) -> _Engine:
    return _Engine(params)


# ---------------------------------------------------------------------------
# conversions


def to_mask(params: ComplexParams, m: Monomial) -> int:
    mask = 0
    for g in m:
        bit = 1 << params.index(tuple(g))
        if mask & bit:
            raise ValueError(f"repeated generator h{g[0]},{g[1]}")
        mask |= bit
    return mask


def from_mask(params: ComplexParams, mask: int) -> Monomial:
    return tuple(params.generator(k) for k in _bits(mask))


def monomial(params: ComplexParams, gens: Iterable[GeneratorId]) -> tuple[Monomial, int]:
    """Sort an arbitrary word of generators; returns (monomial, sign) or ((), 0) if it vanishes."""
    gens = [tuple(g) for g in gens]
    idx = [params.index(g) for g in gens]
    if len(set(idx)) != len(idx):
        return (), 0
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return tuple(params.generator(k) for k in sorted(idx)), (-1 if inv & 1 else 1)


class Element:
    """An F_p-linear combination of monomials; zero coefficients are never stored."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Monomial, int] | None = None):
        self.p = p
        self.terms: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            c %= p
            if c:
                self.terms[tuple(tuple(g) for g in m)] = c

    @classmethod
    def from_masks(cls, params: ComplexParams, coeffs: Mapping[int, int]) -> "Element":
        p = params.p
        e = cls(p)
        for mask, c in coeffs.items():
            c %= p
            if c:
                e.terms[from_mask(params, mask)] = c
        return e

    def to_masks(self, params: ComplexParams) -> dict[int, int]:
        return {to_mask(params, m): c for m, c in self.terms.items()}

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.p == other.p and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Element(self.p, out)

    def __neg__(self) -> "Element":
        return Element(self.p, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c: int) -> "Element":
        return Element(self.p, {m: c * v for m, v in self.terms.items()})

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def __repr__(self):
        return f"Element({format_element(self)!r}, p={self.p})"


ElementLike = Union[Element, Monomial]


def _as_element(params: ComplexParams, x: ElementLike) -> Element:
    if isinstance(x, Element):
        return x
    mono, sign = monomial(params, x)
    return Element(params.p, {mono: sign} if sign else {})


# ---------------------------------------------------------------------------
# operations


def bidegree(params: ComplexParams, m: Monomial) -> tuple[int, int]:
    return len(m), sum(params.generator_degree(g) for g in m) % params.qn


def multiply(params: ComplexParams, x: ElementLike, y: ElementLike) -> Element:
    x, y = _as_element(params, x), _as_element(params, y)
    out: dict[int, int] = {}
    ym = y.to_masks(params)
    for a, ca in x.to_masks(params).items():
        for b, cb in ym.items():
            sgn = _mul_sign(a, b)
            if sgn:
                out[a | b] = out.get(a | b, 0) + sgn * ca * cb
    return Element.from_masks(params, out)


def diff_generator(params: ComplexParams, g: GeneratorId) -> Element:
    k = params.index(g)
    terms = {pair: c for pair, _, _, c in _engine(params).dgen[k]}
    return Element.from_masks(params, terms)


def diff(params: ComplexParams, x: ElementLike) -> Element:
    """Extend d as a graded derivation: d(g_1...g_k) = sum (-1)^(m-1) g_1..d(g_m)..g_k."""
    x = _as_element(params, x)
    if len(x.degrees()) > 1:
        raise ValueError(f"diff needs a homogeneous element, got degrees {sorted(x.degrees())}")
    eng = _engine(params)
    out: dict[int, int] = {}
    for mask, c in x.to_masks(params).items():
        for m2, c2 in eng.diff(mask).items():
            out[m2] = out.get(m2, 0) + c * c2
    return Element.from_masks(params, out)


def top_class(params: ComplexParams) -> Monomial:
    return from_mask(params, _engine(params).top)


def star(params: ComplexParams, m: Monomial) -> tuple[Monomial, int]:
    """Complementary monomial ``m*`` and the sign ``e`` with ``m m* = e g``."""
    eng = _engine(params)
    mask = to_mask(params, m)
    comp = eng.top ^ mask
    return from_mask(params, comp), _mul_sign(mask, comp)


def basis_in_bidegree(params: ComplexParams, s: int, t: int) -> list[Monomial]:
    return [from_mask(params, m) for m in _engine(params).basis(s, t % params.qn)]


def basis_masks(params: ComplexParams, s: int, t: int) -> tuple[int, ...]:
    return _engine(params).basis(s, t % params.qn)


def diff_mask(params: ComplexParams, mask: int) -> dict[int, int]:
    """Integer differential of a bitmask monomial (shared cache, do not mutate)."""
    return _engine(params).diff(mask)


def mask_bidegree(params: ComplexParams, mask: int) -> tuple[int, int]:
    return mask.bit_count(), _engine(params).t_of(mask)


def dimension_table(params: ComplexParams) -> dict[tuple[int, int], int]:
    """``{(s, t): dim C^{s,t}}`` over every nonempty slice (n <= 4 only)."""
    if params.n > FULL_TABLE_MAX_N:
        raise ValueError("full dimension table is only built for n <= 4")
    return {k: len(v) for k, v in _engine(params).full_table.items()}


def all_masks(params: ComplexParams) -> range:
    return range(1 << params.num_generators)


# ---------------------------------------------------------------------------
# text and JSON forms

_GEN_RE = re.compile(r"h(\d+),(\d+)")


def parse_monomial(params: ComplexParams, text: str) -> tuple[Monomial, int]:
    """Parse ``"h3,1 h4,0 h4,1"`` (``"1"`` or empty for the unit); returns (monomial, sign)."""
    text = text.strip()
    if text in ("", "1"):
        return (), 1
    gens = []
    for tok in text.split():
        m = _GEN_RE.fullmatch(tok)
        if not m:
            raise ValueError(f"bad generator token {tok!r}")
        gens.append((int(m.group(1)), int(m.group(2))))
    return monomial(params, gens)


def parse_element(params: ComplexParams, text: str) -> Element:
    """Parse terms ``c·<monomial>`` joined by ``+`` or ``-``; ``*`` may stand for ``·``."""
    out = Element(params.p)
    sign_acc = 1
    for tok in re.split(r"([+-])", text.replace("*", "·")):
        tok = tok.strip()
        if tok in ("+", "-"):
            sign_acc *= -1 if tok == "-" else 1
            continue
        if not tok:
            continue
        coeff, sign_acc = sign_acc, 1
        head, dot, tail = tok.partition("·")
        if dot:
            coeff *= int(head.strip())
            tok = tail
        mono, sign = parse_monomial(params, tok)
        if sign:
            out = out + Element(params.p, {mono: coeff * sign})
    return out


def format_monomial(m: Monomial) -> str:
    return " ".join(f"h{i},{j}" for i, j in m) if m else "1"


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for m, c in sorted(x.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
        signed = c if c <= x.p // 2 else c - x.p
        parts.append(f"{signed}·{format_monomial(m)}")
    return " + ".join(parts)


def monomial_json(m: Monomial) -> list[list[int]]:
    return [[i, j] for i, j in m]


def element_json(x: Element) -> list[dict]:
    return [{"coeff": c, "monomial": monomial_json(m)}
            for m, c in sorted(x.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))]
