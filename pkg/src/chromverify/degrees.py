"""Degree arithmetic: v-degrees, invariant-ideal criterion, base-p digits, beta residues."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .gfp import check_prime


def qk(p: int, k: int) -> int:
    """Degree ``|v_k| = 2(p^k - 1)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return 2 * (p**k - 1)


def _split_exponent(p: int, k: int) -> tuple[int, int]:
    """Write ``k = s * p**e`` with ``p`` not dividing ``s``."""
    if k < 1:
        raise ValueError(f"v-exponent must be positive, got {k}")
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return k, e


@dataclass(frozen=True)
class IdealSpec:
    """``J = (p^e0, v_1^(s_1 p^e_1), ..., v_{n-1}^(s_{n-1} p^e_{n-1}))``.

    ``pairs[i-1]`` holds ``(s_i, e_i)``.
    """

    p: int
    e0: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        check_prime(self.p)
        if self.e0 < 1:
            raise ValueError("e0 must be >= 1")
        for s, e in self.pairs:
            if s < 1 or e < 0:
                raise ValueError(f"bad pair (s={s}, e={e})")
            if s % self.p == 0:
                raise ValueError(f"p={self.p} divides s={s}")

    @property
    def n(self) -> int:
        return len(self.pairs) + 1

    @classmethod
    def from_exponents(cls, p: int, e0: int, exponents) -> "IdealSpec":
        """Build from plain v-exponents ``k_i`` (so ``v_i^{k_i}``)."""
        return cls(p, e0, tuple(_split_exponent(p, k) for k in exponents))

    @classmethod
    def parse(cls, p: int, text: str) -> "IdealSpec":
        """Parse ``"e0;s1*p^e1,s2*p^e2,..."``; a bare integer ``k`` means ``v^k``."""
        head, _, tail = text.partition(";")
        e0 = int(head.strip())
        pairs = []
        for tok in filter(None, (t.strip() for t in tail.split(","))):
            m = re.fullmatch(r"(\d+)\s*\*\s*p\s*\^\s*(\d+)", tok)
            if m:
                pairs.append((int(m.group(1)), int(m.group(2))))
            elif tok.isdigit():
                pairs.append(_split_exponent(p, int(tok)))
            else:
                raise ValueError(f"cannot parse ideal generator {tok!r}")
        return cls(p, e0, tuple(pairs))

    def exponents(self) -> list[int]:
        return [s * self.p**e for s, e in self.pairs]


def is_invariant(spec: IdealSpec, e_n: int | None = None) -> bool:
    """Invariance test ``e0 - 1 <= e1`` and ``s_i <= p^(e_{i+1} - e_i - e0 + 1)``.

    The condition at ``i = n-1`` refers to ``e_n``, which the ideal does not
    carry; it is skipped unless ``e_n`` is supplied (strict mode).
    """
    p, e0 = spec.p, spec.e0
    ss = [s for s, _ in spec.pairs]
    es = [e for _, e in spec.pairs] + ([e_n] if e_n is not None else [])
    if es and e0 - 1 > es[0]:
        return False
    # es[i] is e_{i+1}; the s_i condition needs e_{i+1}
    for i in range(min(len(ss), len(es) - 1)):
        x = es[i + 1] - es[i] - e0 + 1
        if x < 0 or ss[i] > p**x:
            return False
    return True


def minimal_vq_exponent(p: int, n: int) -> int:
    """Least ``a > 0`` with ``a * q_{n-1} = q (mod q_n)``: ``sum_{i<n} p^i - p``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return sum(p**i for i in range(n)) - p


def minimal_vq_exponent_scan(p: int, n: int) -> int | None:
    """Exhaustive residue scan over ``a = 1 .. q_n``; ``None`` if no solution."""
    qn, qn1, q = qk(p, n), qk(p, n - 1), qk(p, 1)
    for a in range(1, qn + 1):
        if (a * qn1 - q) % qn == 0:
            return a
    return None


@dataclass(frozen=True)
class DigitVector:
    """Digits ``(a_1 ... a_n)`` of a degree ``q * sum_i p^i a_{n-i}``."""

    p: int
    digits: tuple[int, ...]
    normalized: bool = field(default=True, compare=False)

    @property
    def n(self) -> int:
        return len(self.digits)

    @property
    def weight(self) -> int:
        return sum(self.digits)

    def place(self, i: int) -> int:
        """Coefficient of ``p^i``, i.e. ``a_{n-i}``."""
        return self.digits[self.n - 1 - i]

    def value(self) -> int:
        q = qk(self.p, 1)
        return q * sum(self.place(i) * self.p**i for i in range(self.n))

    def __add__(self, other: "DigitVector") -> "DigitVector":
        if self.p != other.p or self.n != other.n:
            raise ValueError("digit vectors of different shape")
        return DigitVector(self.p, tuple(a + b for a, b in zip(self.digits, other.digits)), False)

    def __str__(self) -> str:
        body = "".join(str(a) if a < 10 else f"[{a}]" for a in self.digits)
        return f"({body})" if self.normalized else f"({body})_N"


def digits_of(p: int, n: int, t: int) -> DigitVector | None:
    """Normalized base-p digits of ``t mod q_n`` divided by ``q``.

    Returns ``None`` when ``q`` does not divide ``t``.
    """
    q, qn = qk(p, 1), qk(p, n)
    t %= qn
    if t % q:
        return None
    x = t // q
    digits = []
    for _ in range(n):
        digits.append(x % p)
        x //= p
    return DigitVector(p, tuple(reversed(digits)))


def beta_modulus(p: int) -> int:
    """Total degree ``pq - 2`` of beta_1."""
    return p * qk(p, 1) - 2


def beta_residue(p: int, w: int) -> tuple[int, int]:
    return w, w % beta_modulus(p)
