"""Two-dimensional congruence triples.

A triple (u, v, r) stands for the lattice-periodic set
``{(m, n) : m*v = n*u (mod r)}``. Different triples can describe the same
set; :func:`reduce` maps each to a canonical *reduced* representative.

Reduced means ``u | r``, ``gcd(u, v) == 1`` and v is the least positive
integer in its class modulo ``s = r // u`` that is coprime to u. For most sets
that gives ``1 <= v <= s``. A few sets have no representative in that range,
e.g. ``{m even, m = n (mod 3)}`` is S(2, 5, 6) = S(4, 1, 6) but no triple
(u, v, 6) with v <= 6 // u and gcd(u, v) == 1 describes it. Those keep the
smallest coprime lift (here v = 5) and report ``short == False``.

For a reduced triple the set is ``{(u*M, n) : n = M*v (mod s)}``, which is
why u, s and v mod s determine it and the form is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError


@dataclass(frozen=True)
class Triple:
    u: int
    v: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"modulus must be >= 1, got {self.r}")

    def __str__(self) -> str:
        return f"{self.u},{self.v},{self.r}"

    def to_json(self) -> list[int]:
        return [self.u, self.v, self.r]

    @classmethod
    def from_json(cls, data) -> "Triple":
        u, v, r = (int(x) for x in data)
        return cls(u, v, r)

    @classmethod
    def parse(cls, text: str) -> "Triple":
        parts = text.strip().split(",")
        if len(parts) != 3:
            raise DomainError(f"expected 'u,v,r', got {text!r}")
        try:
            u, v, r = (int(p) for p in parts)
        except ValueError:
            raise DomainError(f"expected 'u,v,r', got {text!r}") from None
        return cls(u, v, r)


@dataclass(frozen=True)
class ReducedTriple(Triple):
    """A triple in canonical form; construction checks the reducedness conditions."""

    def __post_init__(self):
        super().__post_init__()
        u, v, r = self.u, self.v, self.r
        if u < 1 or r % u or v < 1 or gcd(u, v) != 1 or _least_coprime_lift(v, r // u, u) != v:
            raise DomainError(f"({u},{v},{r}) is not reduced")

    @property
    def s(self) -> int:
        """Period of the n-coordinate, r // u."""
        return self.r // self.u

    @property
    def short(self) -> bool:
        """True when 1 <= v <= r // u, the usual textbook normal form."""
        return self.v <= self.r // self.u

    @classmethod
    def parse(cls, text: str) -> "ReducedTriple":
        t = Triple.parse(text)
        return cls(t.u, t.v, t.r)

    @classmethod
    def from_json(cls, data) -> "ReducedTriple":
        t = Triple.from_json(data)
        return cls(t.u, t.v, t.r)


def _least_coprime_lift(v: int, s: int, u: int) -> int:
    """Least V >= 1 with V = v (mod s) and gcd(V, u) == 1, or 0 if none exists."""
    V = v % s or s
    for _ in range(u):
        if gcd(V, u) == 1:
            return V
        V += s
    return 0


def from_projection(u: int, v: int, s: int) -> ReducedTriple:
    """Reduced triple of the set ``{(u*M, n) : n = M*v (mod s)}``."""
    if u < 1 or s < 1:
        raise DomainError(f"need u, s >= 1, got u={u}, s={s}")
    V = _least_coprime_lift(v, s, u)
    if V == 0:
        raise DomainError(f"v={v} shares a factor with gcd(u, s) = {gcd(u, s)}")
    return ReducedTriple(u, V, u * s)


def member(t: Triple, m: int, n: int) -> bool:
    return (m * t.v - n * t.u) % t.r == 0


def reduce(t: Triple) -> ReducedTriple:
    """Canonical reduced triple with the same solution set as ``t``.

    Steps: strip gcd(u, v, r); U = gcd(u, r) is then the step of the
    m-projection, and inverting the cofactor u/U modulo R = r/U gives the
    n-residue V attached to m = U. V is lifted by multiples of R until it is
    coprime to U. A triple with u = v = 0 (mod r) describes the whole plane
    and maps to (1, 1, 1).
    """
    r = t.r
    u, v = t.u % r, t.v % r
    if u == 0 and v == 0:
        return ReducedTriple(1, 1, 1)
    g = gcd(gcd(u, v), r)
    u, v, r = u // g, v // g, r // g

    U = gcd(u, r)
    R = r // U
    h = u // U
    V = v * pow(h, -1, R) % R if R > 1 else 0
    return ReducedTriple(U, _least_coprime_lift(V, R, U), r)


def equivalent(t1: Triple, t2: Triple) -> bool:
    return reduce(t1) == reduce(t2)


def reduced_triples(r: int) -> list[ReducedTriple]:
    """Every reduced triple with modulus exactly r, ordered by (u, v)."""
    out = []
    for u in range(1, r + 1):
        if r % u:
            continue
        s = r // u
        for c in range(1, s + 1):
            if gcd(c, gcd(u, s)) == 1:
                out.append(ReducedTriple(u, _least_coprime_lift(c, s, u), r))
    return out
