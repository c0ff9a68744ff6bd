"""Degree lattice of P(b_{k,l}) (x) H^{*,*}(U(L)) and the obstruction scans built on it.

Everything here is bookkeeping of total degrees ``w = t - s``: a product is
present when its degree fits under the bound, and a scan reports which
products land in a given degree.  No differentials are computed.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .degrees import beta_modulus, qk

# H^{s,t}(U(L)) generators: (name, s, t/q as coefficients (a, b, c) of a p^2 + b p + c)
UL_GENERATORS: list[tuple[str, int, tuple[int, int, int]]] = [
    ("1", 0, (0, 0, 0)),
    ("h0", 1, (0, 0, 1)),
    ("h1", 1, (0, 1, 0)),
    ("g0", 2, (0, 1, 2)),
    ("k0", 2, (0, 2, 1)),
    ("k0h0", 3, (0, 2, 2)),
    ("h2", 1, (1, 0, 0)),
    ("h2h0", 2, (1, 0, 1)),
    ("g1", 2, (1, 2, 0)),
    ("l1", 3, (1, 2, 3)),
    ("l2", 3, (1, 3, 1)),
    ("l1h1", 4, (1, 3, 3)),
    ("k1", 2, (2, 1, 0)),
    ("l3", 3, (2, 1, 2)),
    ("k1h1", 3, (2, 2, 0)),
    ("l1h2", 4, (2, 2, 3)),
    ("m1", 4, (2, 4, 2)),
    ("m1h0", 5, (2, 4, 3)),
]


def validity_bound(p: int) -> int:
    """Largest total degree for which the generator list is complete: ``(2p^2+4p+6)q + 7``."""
    return (2 * p * p + 4 * p + 6) * qk(p, 1) + 7


@dataclass(frozen=True)
class ULGenerator:
    name: str
    s: int
    tq: int

    def t(self, p: int) -> int:
        return self.tq * qk(p, 1)

    def w(self, p: int) -> int:
        return self.t(p) - self.s


def ul_generators(p: int) -> list[ULGenerator]:
    return [ULGenerator(name, s, a * p * p + b * p + c) for name, s, (a, b, c) in UL_GENERATORS]


def b_generators(p: int, bound: int) -> list[tuple[int, int]]:
    """All ``(k, l)`` whose ``b_{k,l}`` (bidegree ``(2, p^{l+1} q_k)``) fits under ``bound``."""
    out = []
    k = 1
    while qk(p, k) * p - 2 <= bound:
        l = 0
        while p ** (l + 1) * qk(p, k) - 2 <= bound:
            out.append((k, l))
            l += 1
        k += 1
    return sorted(out)


def b_degree(p: int, kl: tuple[int, int]) -> tuple[int, int]:
    k, l = kl
    return 2, p ** (l + 1) * qk(p, k)


def _b_name(kl: tuple[int, int], e: int) -> str:
    return f"b{kl[0]}{kl[1]}" + (f"^{e}" if e > 1 else "")


@dataclass(frozen=True)
class TableEntry:
    base: str
    b_exponents: tuple[tuple[tuple[int, int], int], ...]
    s: int
    t: int
    w: int
    u: int

    @property
    def name(self) -> str:
        bs = "".join(_b_name(kl, e) for kl, e in self.b_exponents if e)
        if self.base == "1":
            return bs or "1"
        return self.base + bs

    def b_exponent(self, kl: tuple[int, int]) -> int:
        return dict(self.b_exponents).get(kl, 0)

    def as_json(self) -> dict:
        return {"name": self.name, "s": self.s, "t": self.t, "w": self.w, "u": self.u}


_TOKEN = re.compile(r"(b\d\d|[hgklm]\d)(?:\^(\d+))?")


def name_tokens(name: str) -> Counter:
    """Multiset of atomic factors, e.g. ``"b20b11k0h0"`` -> {b20:1, b11:1, k0:1, h0:1}."""
    if name == "1":
        return Counter()
    out: Counter = Counter()
    pos = 0
    for m in _TOKEN.finditer(name):
        if m.start() != pos:
            raise ValueError(f"cannot tokenize {name!r}")
        out[m.group(1)] += int(m.group(2) or 1)
        pos = m.end()
    if pos != len(name):
        raise ValueError(f"cannot tokenize {name!r}")
    return out


def _check_bound(p: int, bound: int):
    limit = validity_bound(p)
    if bound > limit:
        raise ValueError(f"bound {bound} exceeds the range t - s <= {limit} "
                         f"where the U(L) generator table is complete at p={p}")


def enumerate_entries(p: int, bound: int) -> list[TableEntry]:
    """Every product (generator) x (b-monomial) with total degree ``<= bound``.

    Sorted by total degree, then name.
    """
    _check_bound(p, bound)
    mod = beta_modulus(p)
    bgens = b_generators(p, bound)
    bw = [b_degree(p, kl)[1] - 2 for kl in bgens]
    out = []
    for g in ul_generators(p):
        if g.w(p) > bound:
            continue
        ranges = [range(0, (bound - g.w(p)) // w + 1) for w in bw]
        for exps in product(*ranges):
            w = g.w(p) + sum(e * x for e, x in zip(exps, bw))
            if w > bound:
                continue
            s = g.s + 2 * sum(exps)
            out.append(TableEntry(g.name, tuple(zip(bgens, exps)), s, w + s, w, w % mod))
    out.sort(key=lambda e: (e.w, e.name))
    return out


@dataclass(frozen=True)
class SearchHit:
    base: str  # the product with its b10-power stripped
    c: int  # exponent of b10
    w: int

    @property
    def name(self) -> str:
        tail = "b10" + (f"^{self.c}" if self.c > 1 else "") if self.c else ""
        if self.base == "1":
            return tail or "1"
        return self.base + tail

    def as_json(self) -> dict:
        return {"name": self.name, "base": self.base, "c": self.c, "w": self.w}


def _strip_b10(e: TableEntry) -> tuple[str, int]:
    c = e.b_exponent((1, 0))
    rest = tuple((kl, x) for kl, x in e.b_exponents if kl != (1, 0))
    return TableEntry(e.base, rest, 0, 0, 0, 0).name, c


def search(p: int, bound: int, i: int) -> list[SearchHit]:
    """All entries (b10-powers included) of total degree exactly ``i``."""
    if i > bound:
        raise ValueError(f"degree {i} exceeds bound {bound}")
    hits = []
    for e in _entries_cached(p, bound):
        if e.w == i:
            base, c = _strip_b10(e)
            hits.append(SearchHit(base, c, e.w))
    return hits


def search_by_residue(p: int, bound: int, i: int) -> list[SearchHit]:
    """Same hits found the table way: b10-free entries ``w(u)`` with ``u = i`` mod ``pq-2`` and ``w <= i``."""
    if i > bound:
        raise ValueError(f"degree {i} exceeds bound {bound}")
    mod = beta_modulus(p)
    hits = []
    for e in _entries_cached(p, bound):
        if e.b_exponent((1, 0)) == 0 and e.u == i % mod and e.w <= i:
            hits.append(SearchHit(e.name, (i - e.w) // mod, i))
    return hits


_ENTRY_CACHE: dict[tuple[int, int], list[TableEntry]] = {}


def _entries_cached(p: int, bound: int) -> list[TableEntry]:
    key = (p, bound)
    if key not in _ENTRY_CACHE:
        _ENTRY_CACHE[key] = enumerate_entries(p, bound)
    return _ENTRY_CACHE[key]


def permanence_obstructions(p: int, bound: int, w: int) -> list[SearchHit]:
    """Entries at total degree ``w + 1`` whose residue is ``u + 1``."""
    if w + 1 > bound:
        raise ValueError(f"degree {w + 1} exceeds bound {bound}")
    mod = beta_modulus(p)
    return [h for h in search(p, bound, w + 1) if h.w % mod == (w % mod + 1) % mod]


def permanence_witness(p: int, bound: int, w: int) -> bool:
    """True when nothing sits in degree ``w+1 (u+1)``, so no differential can hit degree ``w``."""
    return not permanence_obstructions(p, bound, w)


def skeleton_cells(p: int, k: int) -> list[int]:
    """Cell dimensions of V(k): Z(0) = {0, 1}, Z(k) = Z(k-1) u (Z(k-1) + q_k + 1)."""
    if not 0 <= k <= 3:
        raise ValueError("V(k) cell sets are defined here for 0 <= k <= 3")
    if k and 2 * k >= p:
        raise ValueError(f"V({k}) needs 2k < p, got p={p}")
    cells = {0, 1}
    for j in range(1, k + 1):
        cells |= {c + qk(p, j) + 1 for c in cells}
    return sorted(cells)


def vanishing_scan(p: int, bound: int, s_set: Iterable[int], a_set: Iterable[int],
                   offset: int) -> dict[int, list[SearchHit]]:
    """Hits at ``i + offset`` for every ``i = s + a > 1``; every scanned degree is a key."""
    a_list = sorted(set(a_set))
    degrees = sorted({s + a + offset for s in set(s_set) for a in a_list if s + a > 1})
    for d in degrees:
        if d < 0 or d > bound:
            raise ValueError(f"scanned degree {d} outside [0, {bound}]")
    return {d: search(p, bound, d) for d in degrees}


def nonempty(scan: dict[int, list[SearchHit]]) -> dict[int, list[str]]:
    return {d: [h.name for h in hits] for d, hits in scan.items() if hits}


@dataclass
class ScanReport:
    """JSON-ready form of a scan: ``{degree: [hit names]}`` over every scanned degree."""

    scan: dict[int, list[SearchHit]] = field(default_factory=dict)

    def as_json(self) -> dict:
        return {str(d): [h.as_json() for h in hits] for d, hits in sorted(self.scan.items())}
