"""Finite systems of reduced triples and whether they cover the plane."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import DomainError, NotCovering
from .lattice import ReducedTriple, Triple, reduce


@dataclass(frozen=True)
class CoveringSystem:
    triples: tuple[ReducedTriple, ...]

    def __post_init__(self):
        if not self.triples:
            raise DomainError("a covering system needs at least one triple")
        for t in self.triples:
            if not isinstance(t, ReducedTriple):
                raise DomainError(f"{t} is not a ReducedTriple; pass it through reduce() first")

    @classmethod
    def of(cls, *triples) -> "CoveringSystem":
        """Build from (u, v, r) tuples or Triples, reducing each."""
        return cls(tuple(reduce(t if isinstance(t, Triple) else Triple(*t)) for t in triples))

    @classmethod
    def parse(cls, text: str) -> "CoveringSystem":
        """Accepts ``"1,2,2;2,1,2;1,1,2"`` or a JSON array of 3-element arrays."""
        text = text.strip()
        if text.startswith("["):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise DomainError(f"bad JSON covering system: {exc}") from None
            return cls.of(*(Triple.from_json(t) for t in data))
        return cls.of(*(Triple.parse(chunk) for chunk in text.split(";") if chunk.strip()))

    def __str__(self) -> str:
        return ";".join(str(t) for t in self.triples)

    def to_json(self) -> list[list[int]]:
        return [t.to_json() for t in self.triples]

    @classmethod
    def from_json(cls, data) -> "CoveringSystem":
        return cls.of(*(Triple.from_json(t) for t in data))

    def __len__(self) -> int:
        return len(self.triples)


def lcm_modulus(cs: CoveringSystem) -> int:
    return lcm(*(t.r for t in cs.triples))


def triple_pattern(t: Triple) -> np.ndarray:
    """Boolean r x r membership table of t, indexed [m mod r, n mod r]."""
    idx = np.arange(t.r)
    return (idx[:, None] * t.v - idx[None, :] * t.u) % t.r == 0


def triple_grid(t: Triple, L: int) -> np.ndarray:
    """Membership of t on [0, L)^2; L must be a multiple of t.r."""
    reps = L // t.r
    return np.tile(triple_pattern(t), (reps, reps))


def coverage_grid(triples, L: int) -> np.ndarray:
    grid = np.zeros((L, L), dtype=bool)
    for t in triples:
        grid |= triple_grid(t, L)
    return grid


def restriction_mask(L: int, k: int, l: int) -> np.ndarray:
    """Cells (m, n) of [0, L)^2 with gcd(m, l) == 1 and gcd(n, k) == 1.

    Residue 0 stands for m = L; since l | L both have the same gcd with l.
    """
    idx = np.arange(L)
    m_ok = np.gcd(idx, l) == 1
    n_ok = np.gcd(idx, k) == 1
    return m_ok[:, None] & n_ok[None, :]


def is_covering(cs: CoveringSystem) -> bool:
    return bool(coverage_grid(cs.triples, lcm_modulus(cs)).all())


def uncovered_cells(cs: CoveringSystem, cap: int) -> list[tuple[int, int]]:
    """Up to ``cap`` cells of [0, L)^2 hit by no triple, row-major."""
    grid = coverage_grid(cs.triples, lcm_modulus(cs))
    ms, ns = np.nonzero(~grid)
    return [(int(m), int(n)) for m, n in zip(ms[:cap], ns[:cap])]


def is_minimal(cs: CoveringSystem) -> bool:
    """Whether no proper subsystem covers; ``cs`` itself must cover.

    Supersets of covers are covers, so it is enough to drop one triple at a time.
    """
    if not is_covering(cs):
        raise NotCovering(f"{cs} does not cover, minimality is undefined")
    if len(cs) == 1:
        return True
    L = lcm_modulus(cs)
    grids = [triple_grid(t, L) for t in cs.triples]
    for i in range(len(grids)):
        rest = np.zeros((L, L), dtype=bool)
        for j, g in enumerate(grids):
            if j != i:
                rest |= g
        if rest.all():
            return False
    return True


def is_covering_restricted(cs: CoveringSystem, k: int, l: int) -> bool:
    """Cover check over the cells with gcd(m, l) == gcd(n, k) == 1 only."""
    if k < 1 or l < 1:
        raise DomainError(f"restriction exponents must be positive, got k={k}, l={l}")
    L = lcm(lcm_modulus(cs), k, l)
    grid = coverage_grid(cs.triples, L)
    return bool((grid | ~restriction_mask(L, k, l)).all())


def density(cs: CoveringSystem) -> float:
    """Sum of 1/r_i; at least 1 for any cover."""
    return sum(1 / t.r for t in cs.triples)
