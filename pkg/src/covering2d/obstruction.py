"""Fixed prime divisors of a^m - b^n: pair classification, search, verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm, prod

from .covering import CoveringSystem, is_covering, is_covering_restricted, is_minimal
from .errors import BudgetExceeded, DomainError
from .lattice import ReducedTriple, member
from .numtheory import is_probable_prime, primes_up_to
from .orders import PrimeLocalData, elements_of_order, is_perfect_power, realize_triple, triple_for_prime


@dataclass(frozen=True)
class PairClassification:
    a: int
    b: int
    gcd_ab: int
    gcd_a1b1: int
    pp_a: tuple[int, int]
    pp_b: tuple[int, int]
    edge_gcds: tuple[int, int, int]  # (a-1, b+1), (a+1, b-1), (a+1, b+1)
    in_N: bool
    in_Nplus: bool

    def to_json(self) -> dict:
        return {
            "a": self.a, "b": self.b, "gcd_ab": self.gcd_ab, "gcd_a1b1": self.gcd_a1b1,
            "pp_a": list(self.pp_a), "pp_b": list(self.pp_b), "edge_gcds": list(self.edge_gcds),
            "in_N": self.in_N, "in_Nplus": self.in_Nplus,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PairClassification":
        return cls(data["a"], data["b"], data["gcd_ab"], data["gcd_a1b1"], tuple(data["pp_a"]),
                   tuple(data["pp_b"]), tuple(data["edge_gcds"]), data["in_N"], data["in_Nplus"])


def classify(a: int, b: int) -> PairClassification:
    """Membership of (a, b) in the pair sets N and N+.

    N: b > a >= 2, gcd(a, b) = gcd(a-1, b-1) = 1, and a, b are not both p-th
    powers for one prime p. N+ additionally asks that neither is a perfect
    power and that one of the three edge gcds is 1.
    """
    if not b > a >= 2:
        raise DomainError(f"need b > a >= 2, got a={a}, b={b}")
    pp_a, pp_b = is_perfect_power(a), is_perfect_power(b)
    g_ab, g_11 = gcd(a, b), gcd(a - 1, b - 1)
    edges = (gcd(a - 1, b + 1), gcd(a + 1, b - 1), gcd(a + 1, b + 1))
    # a is a p-th power iff p divides its maximal exponent
    in_N = g_ab == 1 and g_11 == 1 and gcd(pp_a[1], pp_b[1]) == 1
    in_Nplus = in_N and pp_a[1] == 1 and pp_b[1] == 1 and 1 in edges
    return PairClassification(a, b, g_ab, g_11, pp_a, pp_b, edges, in_N, in_Nplus)


@dataclass(frozen=True)
class SearchConfig:
    prime_bound: int = 10_000
    modulus_bound: int = 24
    max_primes: int = 8
    period_bound: int = 24
    node_budget: int = 2_000_000


@dataclass(frozen=True)
class ObstructionPrime:
    """One prime of an obstruction with its local data and a realizing generator."""

    local: PrimeLocalData
    a_res: int
    b_res: int
    g: int | None

    @property
    def p(self) -> int:
        return self.local.p

    @property
    def triple(self) -> ReducedTriple:
        return self.local.triple

    def to_json(self) -> dict:
        out = self.local.to_json()
        out.update(g=self.g, a_res=self.a_res, b_res=self.b_res)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ObstructionPrime":
        return cls(PrimeLocalData.from_json(data), data["a_res"], data["b_res"], data["g"])


@dataclass(frozen=True)
class Obstruction:
    a: int
    b: int
    kind: str  # "covering", "trivial" (the (1,1,1) system) or "gcd" (Q = gcd(a, b))
    Q: int
    primes: tuple[ObstructionPrime, ...] = ()
    restricted: tuple[int, int] | None = None
    minimal: bool = True

    @property
    def prime_set(self) -> frozenset[int]:
        return frozenset(op.p for op in self.primes)

    @property
    def system(self) -> CoveringSystem | None:
        return CoveringSystem(tuple(op.triple for op in self.primes)) if self.primes else None

    def to_json(self) -> dict:
        return {
            "a": self.a, "b": self.b, "kind": self.kind, "Q": self.Q,
            "restricted": list(self.restricted) if self.restricted else None,
            "minimal": self.minimal,
            "primes": [op.to_json() for op in self.primes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Obstruction":
        return cls(
            data["a"], data["b"], data["kind"], data["Q"],
            tuple(ObstructionPrime.from_json(x) for x in data["primes"]),
            tuple(data["restricted"]) if data["restricted"] else None,
            data["minimal"],
        )


def _generator_for(local: PrimeLocalData, a: int, b: int) -> int | None:
    """An element g of order ell realizing (a mod p, b mod p), if ell is small enough to scan."""
    p, t = local.p, local.triple
    if t.r > 10_000:
        return None
    for g in elements_of_order(p, t.r):
        rt = realize_triple(t, p, g)
        if rt.a_res == a % p and rt.b_res == b % p:
            return g
    return None  # pragma: no cover - every realizable triple has a generator


def _obstruction_prime(local: PrimeLocalData, a: int, b: int) -> ObstructionPrime:
    return ObstructionPrime(local, a % local.p, b % local.p, _generator_for(local, a, b))


def candidate_primes(a: int, b: int, prime_bound: int, modulus_bound: int) -> dict[ReducedTriple, PrimeLocalData]:
    """Smallest prime realizing each reduced triple with modulus <= modulus_bound."""
    out: dict[ReducedTriple, PrimeLocalData] = {}
    for p in primes_up_to(prime_bound):
        if (a * b) % p == 0:
            continue
        local = triple_for_prime(p, a, b)
        if local.triple.r <= modulus_bound and local.triple not in out:
            out[local.triple] = local
    return out


class _CoverSearch:
    """Minimum-size set cover over a bitmask universe, ties broken by sorted prime tuple.

    Branches on the uncovered cell with the fewest usable candidates; in branch
    i the candidates tried in branches < i are forbidden, so each cover is
    reached once.
    """

    def __init__(self, masks: list[int], primes: list[int], full: int, ncells: int,
                 limit: int, budget: int, best=None):
        self.masks = masks
        self.primes = primes
        self.full = full
        self.limit = limit
        self.budget = budget
        self.nodes = 0
        self.best = best  # (size, sorted primes) or None
        self.cell_cands = [[i for i, mk in enumerate(masks) if mk >> c & 1] for c in range(ncells)]
        self.maxpop = max((bin(mk).count("1") for mk in masks), default=0)

    def run(self):
        if self.maxpop:
            self._dfs(0, [], 0)
        return self.best

    def _dfs(self, covered: int, chosen: list[int], forbidden: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"cover search exceeded {self.budget} nodes")
        if covered == self.full:
            key = (len(chosen), tuple(sorted(self.primes[i] for i in chosen)))
            if self.best is None or key < self.best:
                self.best = key
            return
        limit = self.best[0] if self.best is not None else self.limit
        uncovered = self.full & ~covered
        remaining = bin(uncovered).count("1")
        if len(chosen) + -(-remaining // self.maxpop) > limit:
            return
        best_cell, best_opts = -1, None
        rest = uncovered
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            opts = [i for i in self.cell_cands[c] if not forbidden >> i & 1]
            if best_opts is None or len(opts) < len(best_opts):
                best_cell, best_opts = c, opts
                if not opts:
                    return
        best_opts.sort(key=lambda i: self.primes[i])
        for i in best_opts:
            chosen.append(i)
            self._dfs(covered | self.masks[i], chosen, forbidden)
            chosen.pop()
            forbidden |= 1 << i


def _cells(P: int, k: int, l: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(P) for n in range(P) if gcd(m, l) == 1 and gcd(n, k) == 1]


def _search(a: int, b: int, config: SearchConfig, k: int, l: int) -> Obstruction | None:
    cands = candidate_primes(a, b, config.prime_bound, config.modulus_bound)
    best = None
    best_locals: list[PrimeLocalData] = []
    for P in range(1, config.period_bound + 1):
        if P % k or P % l:
            continue
        pool = [loc for t, loc in cands.items() if P % t.r == 0]
        if lcm(k, l, *(loc.triple.r for loc in pool)) != P:
            continue
        cells = _cells(P, k, l)
        masks = []
        for loc in pool:
            mk = 0
            for idx, (m, n) in enumerate(cells):
                if member(loc.triple, m, n):
                    mk |= 1 << idx
            masks.append(mk)
        keep = [i for i, mk in enumerate(masks) if mk]
        pool = [pool[i] for i in keep]
        masks = [masks[i] for i in keep]
        search = _CoverSearch(masks, [loc.p for loc in pool], (1 << len(cells)) - 1, len(cells),
                              config.max_primes, config.node_budget, best)
        found = search.run()
        if found is not None and found != best:
            best = found
            by_prime = {loc.p: loc for loc in pool}
            best_locals = [by_prime[p] for p in found[1]]
    if best is None:
        return None
    primes = tuple(_obstruction_prime(loc, a, b) for loc in best_locals)
    cs = CoveringSystem(tuple(op.triple for op in primes))
    restricted = (k, l) if (k, l) != (1, 1) else None
    if restricted is None:
        kind = "trivial" if cs.triples == (ReducedTriple(1, 1, 1),) else "covering"
        minimal = is_minimal(cs)
    else:
        kind = "covering"
        minimal = _restricted_minimal(cs, k, l)
    return Obstruction(a, b, kind, prod(op.p for op in primes), primes, restricted, minimal)


def _restricted_minimal(cs: CoveringSystem, k: int, l: int) -> bool:
    for i in range(len(cs.triples)):
        rest = cs.triples[:i] + cs.triples[i + 1:]
        if rest and is_covering_restricted(CoveringSystem(rest), k, l):
            return False
    return True


def find_obstruction(a: int, b: int, config: SearchConfig = SearchConfig()) -> Obstruction | None:
    """Smallest set of primes dividing every a^m - b^n (m, n >= 1), within the config bounds.

    Pairs with gcd(a, b) > 1 return at once with kind "gcd" and Q = gcd(a, b).
    ``None`` means nothing was found within bounds, not that nothing exists.
    """
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got a={a}, b={b}")
    g = gcd(a, b)
    if g > 1:
        return Obstruction(a, b, "gcd", g)
    return _search(a, b, config, 1, 1)


def find_mixed_obstruction(a: int, b: int, config: SearchConfig = SearchConfig()) -> Obstruction | None:
    """As find_obstruction, covering only m, n with gcd(m, l) = gcd(n, k) = 1.

    k and l are the maximal exponents with a = A^k and b = B^l.
    """
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got a={a}, b={b}")
    g = gcd(a, b)
    if g > 1:
        return Obstruction(a, b, "gcd", g)
    k = is_perfect_power(a)[1]
    l = is_perfect_power(b)[1]
    return _search(a, b, config, k, l)


@dataclass(frozen=True)
class Verification:
    ok: bool
    period: int
    Q: int
    certificate: dict[tuple[int, int], int] = field(default_factory=dict)
    witness: tuple[int, int] | None = None  # (m, n) with gcd(a^m - b^n, Q) = 1

    def to_json(self) -> dict:
        return {
            "ok": self.ok, "period": self.period, "Q": self.Q,
            "witness": list(self.witness) if self.witness else None,
            "certificate": [[m, n, p] for (m, n), p in sorted(self.certificate.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Verification":
        return cls(data["ok"], data["period"], data["Q"],
                   {(m, n): p for m, n, p in data["certificate"]},
                   tuple(data["witness"]) if data["witness"] else None)


def verify_obstruction(a: int, b: int, primes: list[int], restricted: tuple[int, int] | None = None,
                       max_period: int = 5000) -> Verification:
    """Check gcd(a^m - b^n, prod(primes)) > 1 over a full period of (m, n).

    Works directly with powers modulo Q and never looks at triples, so it is an
    independent check on the covering logic. The period is the lcm of
    ord_p(a) and ord_p(b) over the primes (and k, l when restricted).
    """
    if len(set(primes)) != len(primes) or not primes:
        raise DomainError(f"need distinct primes, got {primes}")
    for p in primes:
        if not is_probable_prime(p):
            raise DomainError(f"{p} is not prime")
        if (a * b) % p == 0:
            raise DomainError(f"{p} divides ab")
    k, l = restricted or (1, 1)
    from .orders import mult_order

    L = lcm(k, l, *(lcm(mult_order(a, p), mult_order(b, p)) for p in primes))
    if L > max_period:
        raise BudgetExceeded(f"period {L} exceeds max_period={max_period}")
    Q = prod(primes)
    pa = [pow(a, m, Q) for m in range(L + 1)]
    pb = [pow(b, n, Q) for n in range(L + 1)]
    cert: dict[tuple[int, int], int] = {}
    for m in range(1, L + 1):
        if gcd(m, l) != 1:
            continue
        for n in range(1, L + 1):
            if gcd(n, k) != 1:
                continue
            diff = pa[m] - pb[n]
            if gcd(diff, Q) == 1:
                return Verification(False, L, Q, cert, (m, n))
            cert[(m, n)] = next(p for p in primes if diff % p == 0)
    return Verification(True, L, Q, cert)


def check_structure(ob: Obstruction) -> list[str]:
    """Necessary conditions any unrestricted nontrivial obstruction must meet; returns violations."""
    problems = []
    if ob.kind != "covering" or ob.restricted:
        return problems
    if ob.Q % 2 == 0:
        problems.append("Q is even")
    if gcd(ob.a - 1, ob.Q) == 1:
        problems.append("gcd(a-1, Q) == 1")
    if gcd(ob.b - 1, ob.Q) == 1:
        problems.append("gcd(b-1, Q) == 1")
    if gcd(ob.Q, ob.a * ob.b) != 1:
        problems.append("Q shares a factor with ab")
    if not is_covering(ob.system):
        problems.append("triples do not cover")
    return problems
