"""Degrees of the generators of H^* L(3,3) at p = 5, modulo q_3 = 248.

``H^3 = A^2 z3 + A^3``, ``H^4 = A^3 z3 + A^4`` and
``H^5 = A^4 z3 + (A^3 z3)^* + (A^4)^*``.  The class ``z3`` has degree 0 and
the dual of a class of degree ``d`` has degree ``-d``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import reference_data as ref
from .degrees import qk

P, N = 5, 3
MOD = qk(P, N)  # 248


@dataclass(frozen=True)
class L33Generator:
    name: str
    stratum: str
    degree: int  # residue mod 248


def _norm(table: dict[str, int]) -> dict[str, int]:
    return {k: v % MOD for k, v in table.items()}


def strata() -> dict[str, dict[str, int]]:
    a2, a3, a4 = _norm(ref.L33_A2), _norm(ref.L33_A3), _norm(ref.L33_A4)
    return {
        "A2z3": a2,
        "A3": a3,
        "A3z3": a3,
        "A4": a4,
        "A4z3": a4,
        "(A3z3)*": {k: -v % MOD for k, v in a3.items()},
        "(A4)*": {k: -v % MOD for k, v in a4.items()},
    }


COHOMOLOGY_STRATA = {
    3: ("A2z3", "A3"),
    4: ("A3z3", "A4"),
    5: ("A4z3", "(A3z3)*", "(A4)*"),
}


def generators(s: int) -> list[L33Generator]:
    table = strata()
    return [L33Generator(name, st, deg)
            for st in COHOMOLOGY_STRATA[s] for name, deg in table[st].items()]


def l33_scan(target_degree: int) -> list[tuple[int, str, str]]:
    """``(s, stratum, name)`` for every generator of H^3, H^4, H^5 in degree ``target`` mod 248."""
    target = target_degree % MOD
    return [(s, g.stratum, g.name)
            for s in sorted(COHOMOLOGY_STRATA) for g in generators(s) if g.degree == target]


# --- independent recomputation ------------------------------------------------

def _h(i: int, j: int) -> int:
    return P ** (j % N) * qk(P, i) % MOD


def _seed(family: str, i: int) -> int:
    q = qk(P, 1)
    base = {"g": (P + 2) * q, "k": (2 * P + 1) * q, "b1": P * q}[family]
    return base * P ** (i % N) % MOD


def _term_degree(term) -> int:
    return sum(term) % MOD


def _a3_terms(i: int) -> dict[str, list[list[int]]]:
    h = _h
    i1, i2 = (i + 1) % N, (i + 2) % N
    l5 = []
    for r in range(N):
        l5.append([h(1, r), h(2, r + 1), h(3, r)])
        l5.append([h(1, r + 1), h(2, r + 2), h(3, r)])
    return {
        f"g{i}h1{i1}": [[_seed("g", i), h(1, i1)]],
        f"l1{i}": [[h(1, i), h(2, i), h(3, i)]],
        f"l2{i}": [[h(1, i), h(2, i), h(2, i2)]],
        f"l3{i}": [[h(1, i), h(2, i), h(2, i1)], [h(1, i), h(1, i1), h(3, i)]],
        f"l4{i}": [[h(1, i), h(2, i2), h(3, i1)]],
        f"l5{i}": l5,
    }


def _a4_terms(i: int) -> dict[str, list[list[int]]]:
    h = _h
    i1, i2 = (i + 1) % N, (i + 2) % N
    m = []
    for j in range(N):
        m.append([h(1, i), _seed("k", i), h(3, j)])
        m.append([_seed("g", i), h(1, i1), h(3, j)])
    mp = [
        [h(1, i2), h(1, i), h(2, i), h(3, i)],
        [h(1, i2), h(1, i), h(2, i), h(3, i1)],
        [h(1, i), h(2, 0), h(2, 1), h(2, 2)],
    ]
    return {f"m{i},j": m, f"m'{i}": mp}


def derived_degrees() -> dict[str, dict[str, set[int]]]:
    """Degrees recomputed from ``h_{i,j}`` and the seeds g0, k0, b10; one set per generator.

    A set with more than one value means the defining terms are not homogeneous.
    """
    a2: dict[str, set[int]] = {}
    for i in range(N):
        a2[f"g{i}"] = {_seed("g", i)}
        a2[f"k{i}"] = {_seed("k", i)}
        a2[f"b1{i}"] = {_seed("b1", i)}
    a3: dict[str, set[int]] = {}
    a4: dict[str, set[int]] = {}
    for i in range(N):
        a3.update({k: {_term_degree(t) for t in v} for k, v in _a3_terms(i).items()})
        a4.update({k: {_term_degree(t) for t in v} for k, v in _a4_terms(i).items()})
    return {"A2": a2, "A3": a3, "A4": a4}


@dataclass(frozen=True)
class Mismatch:
    table: str
    name: str
    stored: int | None
    derived: tuple[int, ...]


def derive_l33_degrees() -> dict:
    """Diff the recomputed degrees (and the dual rule) against the stored tables."""
    derived = derived_degrees()
    stored = {"A2": _norm(ref.L33_A2), "A3": _norm(ref.L33_A3), "A4": _norm(ref.L33_A4)}
    mismatches: list[Mismatch] = []
    compared = 0
    for table, rows in stored.items():
        keys = set(rows) | set(derived[table])
        for name in sorted(keys):
            got = derived[table].get(name, set())
            want = rows.get(name)
            compared += 1
            if want is None or got != {want}:
                mismatches.append(Mismatch(table, name, want, tuple(sorted(got))))
    # dual rows: order within a row is g_i h_{1,i+1}, l1i..l5i, then m_{i,j}, m'_i
    for i, row in enumerate(ref.L33_DUAL_ROWS):
        names = [f"g{i}h1{(i + 1) % N}"] + [f"l{k}{i}" for k in range(1, 6)]
        names += [f"m{i},j", f"m'{i}"]
        for name, printed in zip(names, row):
            table = "A3" if name in derived["A3"] else "A4"
            got = {-d % MOD for d in derived[table][name]}
            compared += 1
            if got != {printed % MOD}:
                mismatches.append(Mismatch(f"({table})*", name, printed, tuple(sorted(got))))
    return {
        "compared": compared,
        "mismatches": [m.__dict__ for m in mismatches],
    }
