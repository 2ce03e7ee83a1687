"""Exact densities of the divisor-base pseudoprime sets.

For b >= 2 let T_b = {ab : a >= 2, a**(ab) == a (mod ab)}: the numbers that
are a Fermat pseudoprime to the base n/b.  Membership forces gcd(a, b) = 1 and
reduces to a**(ab-1) == 1 (mod b), so T_b (plus the single excluded point b)
is a finite union of residue classes: one class mod b**2*d for every unit
a0 mod b whose multiplicative order d is coprime to b.  That structure gives
exact rational densities

    delta(T_b) = sum over d | lambda(b), gcd(d, b) = 1 of N(d, b) / (b**2 d),

exact union densities by CRT inclusion-exclusion, partial sums of the density
series, and rigorous tail bounds via tau(lambda0(b)) phi0(b) / (lambda0(b) b**2)
where lambda0, phi0 are the largest divisors of lambda(b), phi(b) coprime to b.

Everything is exact: densities are fractions end to end, and the one sum that
cannot be held as a reduced fraction (the tail bound over millions of b) is
returned as a certified scaled-integer lower bound with stated deficit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import bulk
from .arith import (
    as_factorization,
    carmichael_lambda,
    coprime_part,
    divisors,
    euler_phi,
    factor,
    is_prime,
    multiplicative_order,
    tau,
)
from .errors import CapacityError
from .sieve import ResidueClass

TAIL_SCALE = 10**18

_ORDER_CENSUS_CAP = 10**7
_CLASS_SYSTEM_CAP = 10**5
_UNION_CAP = 30
_COUNT_CAP = 10**8
_C1_CAP = 10**5
_TAIL_CAP = 2 * 10**7
_SCAN_PERIOD_CAP = 1 << 27
_GROUP_BRUTE_CAP = 10**7


# ---------------------------------------------------------------------------
# order censuses


@dataclass(frozen=True)
class OrderCensus:
    """entries[d] = number of units mod b of multiplicative order exactly d,
    for every d | lambda(b); the entries partition the phi(b) units."""

    b: int
    entries: dict

    def total(self) -> int:
        return sum(self.entries.values())


def order_census(b: int) -> OrderCensus:
    """Census by computing the order of every unit mod b."""
    if b < 2:
        raise ValueError("b must be >= 2")
    if b > _ORDER_CENSUS_CAP:
        raise CapacityError(f"order_census capped at b <= {_ORDER_CENSUS_CAP}")
    fb = factor(b)
    lam_f = as_factorization(carmichael_lambda(fb))
    entries: dict = {d: 0 for d in divisors(lam_f)}
    for a0 in range(1, b):
        if gcd(a0, b) == 1:
            entries[multiplicative_order(a0, b, lam_f)] += 1
    return OrderCensus(b, {d: n for d, n in entries.items() if n})


def _unit_group_components(b: int) -> list[int]:
    """Orders of the cyclic components of the unit group mod b."""
    comps = []
    for p, e in factor(b).factors if b > 1 else ():
        if p == 2:
            if e == 2:
                comps.append(2)
            elif e >= 3:
                comps.extend([2, 1 << (e - 2)])
        else:
            comps.append(p ** (e - 1) * (p - 1))
    return [c for c in comps if c > 1]


def unit_order_counts(b: int) -> dict:
    """Same census as order_census(b).entries, from the group structure.

    In a product of cyclic groups, #{x : x**e = 1} is the product of
    gcd(e, component order); Moebius inversion over the divisors of
    lambda(b) then isolates the exact-order counts.  No unit enumeration,
    so this is what the bulk density sums use.
    """
    if b < 2:
        raise ValueError("b must be >= 2")
    comps = _unit_group_components(b)
    lam = 1
    for c in comps:
        lam = lam // gcd(lam, c) * c
    lam_f = as_factorization(lam)
    lam_primes = [p for p, _ in lam_f.factors]
    solutions = {}
    for e in divisors(lam_f):
        v = 1
        for c in comps:
            v *= gcd(e, c)
        solutions[e] = v
    counts: dict = {}
    for d in divisors(lam_f):
        total = 0
        ps = [p for p in lam_primes if d % p == 0]
        for mask in range(1 << len(ps)):
            q = 1
            bits = 0
            for i, p in enumerate(ps):
                if mask >> i & 1:
                    q *= p
                    bits += 1
            total += (-1) ** bits * solutions[d // q]
        if total:
            counts[d] = total
    return counts


# ---------------------------------------------------------------------------
# the sets T_b as class systems


@dataclass(frozen=True)
class ClassSystem:
    """A finite union of pairwise disjoint residue classes minus finitely
    many excluded points."""

    classes: tuple[ResidueClass, ...]
    excluded_points: tuple[int, ...]

    def contains(self, n: int) -> bool:
        if n in self.excluded_points:
            return False
        return any(c.contains(n) for c in self.classes)

    @property
    def density(self) -> Fraction:
        return sum((Fraction(1, c.m) for c in self.classes), Fraction(0))


def sb_class_system(b: int) -> ClassSystem:
    """The residue classes making up T_b, one of modulus b**2*d per unit
    a0 mod b with order d coprime to b; the point n = b (the a = 1 case)
    is excluded."""
    if b < 2:
        raise ValueError("b must be >= 2")
    if b > _CLASS_SYSTEM_CAP:
        raise CapacityError(f"sb_class_system capped at b <= {_CLASS_SYSTEM_CAP}")
    fb = factor(b)
    lam_f = as_factorization(carmichael_lambda(fb))
    classes = []
    for a0 in range(1, b):
        if gcd(a0, b) != 1:
            continue
        d = multiplicative_order(a0, b, lam_f)
        if gcd(d, b) != 1:
            continue
        a_class = ResidueClass(a0 % b, b)
        if d > 1:
            a_class = a_class.intersect(ResidueClass(pow(b, -1, d), d))
        classes.append(ResidueClass(b * a_class.r % (b * a_class.m), b * a_class.m))
    return ClassSystem(tuple(sorted(classes, key=lambda c: (c.m, c.r))), (b,))


def sb_membership(n: int, b: int) -> bool:
    """n in T_b: b | n, a = n/b >= 2 coprime to b, and a**(n-1) == 1 (mod b)."""
    if b < 2:
        raise ValueError("b must be >= 2")
    if n % b != 0:
        return False
    a = n // b
    if a < 2 or gcd(a, b) != 1:
        return False
    return pow(a, n - 1, b) == 1 % b


def sb_density(b: int) -> Fraction:
    """Exact density of T_b."""
    if b < 2:
        raise ValueError("b must be >= 2")
    if b > _ORDER_CENSUS_CAP:
        raise CapacityError(f"sb_density capped at b <= {_ORDER_CENSUS_CAP}")
    total = Fraction(0)
    for d, n in unit_order_counts(b).items():
        if gcd(d, b) == 1:
            total += Fraction(n, b * b * d)
    return total


# ---------------------------------------------------------------------------
# unions and partial sums


def union_density(k: int) -> Fraction:
    """Exact density of the union of T_b for 2 <= b <= k, by inclusion-
    exclusion over all classes of all systems; intersections are taken by
    CRT and empty ones prune the whole subset subtree.  Finitely many
    excluded points cannot move a density and are ignored."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if k > _UNION_CAP:
        raise CapacityError(f"union_density capped at k <= {_UNION_CAP}")
    seen = set()
    classes = []
    for b in range(2, k + 1):
        for c in sb_class_system(b).classes:
            if (c.r, c.m) not in seen:
                seen.add((c.r, c.m))
                classes.append(c)
    classes.sort(key=lambda c: (c.m, c.r))
    total = Fraction(0)

    def walk(start: int, current: ResidueClass, sign: int) -> None:
        nonlocal total
        for j in range(start, len(classes)):
            inter = current.intersect(classes[j])
            if inter is None:
                continue
            total += Fraction(sign, inter.m)
            walk(j + 1, inter, -sign)

    walk(0, ResidueClass(0, 1), 1)
    return total


def union_density_scan(k: int) -> Fraction:
    """Independent oracle for union_density: mark one full period of the
    union of class systems and count."""
    if k < 2:
        raise ValueError("k must be >= 2")
    systems = [sb_class_system(b) for b in range(2, k + 1)]
    period = 1
    for s in systems:
        for c in s.classes:
            period = period // gcd(period, c.m) * c.m
    if period > _SCAN_PERIOD_CAP:
        raise CapacityError(f"scan period {period} exceeds {_SCAN_PERIOD_CAP}")
    mark = np.zeros(period, dtype=bool)
    for s in systems:
        for c in s.classes:
            mark[c.r :: c.m] = True
    return Fraction(int(mark.sum()), period)


def c1_partial(b_max: int) -> Fraction:
    """Exact partial sum of delta(T_b) for 2 <= b <= b_max."""
    if b_max < 2:
        raise ValueError("b_max must be >= 2")
    if b_max > _C1_CAP:
        raise CapacityError(f"c1_partial capped at b_max <= {_C1_CAP}")
    return sum((sb_density(b) for b in range(2, b_max + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# counting members below a bound


def count_S(limit: int) -> tuple[int, int]:
    """(#{n <= limit with some divisor base}, sum over n <= limit of the
    number of divisor bases of n).

    A base a works for n exactly when 1 < a < n, a | n and a**n == a (mod n).
    The scan enumerates divisor pairs n = s*t grouped by the smaller side s,
    so each (a, n) pair is tested by the congruence exactly once and no
    factorizations are needed.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    if limit > _COUNT_CAP:
        raise CapacityError(f"count_S capped at limit <= {_COUNT_CAP}")
    member = np.zeros(limit + 1, dtype=bool)
    total = 0
    chunk = 1 << 22
    for s in range(2, isqrt(limit) + 1):
        su = np.uint64(s)
        tmax = limit // s
        for t0 in range(s, tmax + 1, chunk):
            t = np.arange(t0, min(t0 + chunk, tmax + 1), dtype=np.uint64)
            n = su * t
            pass_s = bulk.powmod_vector(s, n, n) == su  # divisor a = s
            pass_t = (bulk.powmod_vector(t, n, n) == t) & (t > su)  # divisor a = t
            total += int(pass_s.sum()) + int(pass_t.sum())
            member[n[pass_s | pass_t]] = True
    return int(member.sum()), total


# ---------------------------------------------------------------------------
# tail bounds


def tail_bound_term(b: int) -> Fraction:
    """The per-b bound tau(lambda0(b)) * phi0(b) / (lambda0(b) * b**2),
    an upper bound for delta(T_b)."""
    if b < 2:
        raise ValueError("b must be >= 2")
    fb = factor(b)
    lam0 = coprime_part(carmichael_lambda(fb), b)
    phi0 = coprime_part(euler_phi(fb), b)
    return Fraction(tau(as_factorization(lam0)) * phi0, lam0 * b * b)


def tail_bound(b_lo: int, b_hi: int) -> Fraction:
    """Sum of tail_bound_term(b) over b_lo < b <= b_hi.

    phi and lambda come from sieves; each term is accumulated as
    floor(term * 10**18), so the result is an exact rational lower bound of
    the true sum with deficit below (b_hi - b_lo) / 10**18.
    """
    if not 2 <= b_lo < b_hi:
        raise ValueError("need 2 <= b_lo < b_hi")
    if b_hi > _TAIL_CAP:
        raise CapacityError(f"tail_bound capped at b_hi <= {_TAIL_CAP}")
    phi, lam = bulk.phi_lambda_arrays(b_hi)
    b = np.arange(b_lo + 1, b_hi + 1, dtype=np.int64)
    lam0 = bulk.coprime_part_array(lam[b_lo + 1 :], b)
    phi0 = bulk.coprime_part_array(phi[b_lo + 1 :], b)
    del phi, lam
    spf = bulk.spf_window(0, int(lam0.max()) + 1)
    tau0 = bulk.tau_array(lam0, spf)
    del spf
    acc = 0
    chunk = 1 << 20
    for i in range(0, b.size, chunk):
        rows = zip(
            tau0[i : i + chunk].tolist(),
            phi0[i : i + chunk].tolist(),
            lam0[i : i + chunk].tolist(),
            b[i : i + chunk].tolist(),
        )
        for t, f, l, bb in rows:
            acc += t * f * TAIL_SCALE // (l * bb * bb)
    return Fraction(acc, TAIL_SCALE)


# ---------------------------------------------------------------------------
# imprimitive b


def is_imprimitive(b: int) -> int | None:
    """Least b0 with b = a0*b0, a0, b0 >= 2 and a0 == 1 (mod b0), if any.

    The condition is sufficient for T_b to sit inside T_b0, not necessary."""
    if b < 2:
        raise ValueError("b must be >= 2")
    for b0 in divisors(factor(b))[1:-1]:
        a0 = b // b0
        if a0 >= 2 and a0 % b0 == 1:
            return b0
    return None


# ---------------------------------------------------------------------------
# abelian p-groups: order statistics and the two inequalities


@dataclass(frozen=True)
class AbelianPGroup:
    """C_{p**l1} x ... x C_{p**lk} with 1 <= l1 <= ... <= lk."""

    p: int
    lambdas: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError("p must be prime")
        if not self.lambdas:
            raise ValueError("need at least one cyclic factor")
        if any(l < 1 for l in self.lambdas) or list(self.lambdas) != sorted(self.lambdas):
            raise ValueError("lambdas must be a nondecreasing list of positive integers")

    @property
    def order(self) -> int:
        return self.p ** sum(self.lambdas)

    @property
    def exponent(self) -> int:
        return self.p ** self.lambdas[-1]


def group_order_count(j: int, g: AbelianPGroup) -> int:
    """N(p**j, g): elements of order exactly p**j.

    For j >= 1 this is prod(min(p**j, p**li)) - prod(min(p**(j-1), p**li));
    j = 0 counts the identity and j beyond the exponent gives 0.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    if j == 0:
        return 1
    p = g.p
    hi = 1
    lo = 1
    for l in g.lambdas:
        hi *= min(p**j, p**l)
        lo *= min(p ** (j - 1), p**l)
    return hi - lo


def group_N(g: AbelianPGroup) -> Fraction:
    """N(g) = sum over j of N(p**j, g) / p**j."""
    return sum(
        (Fraction(group_order_count(j, g), g.p**j) for j in range(g.lambdas[-1] + 1)),
        Fraction(0),
    )


def group_order_census_brute(g: AbelianPGroup) -> dict:
    """Element-by-element order census (oracle for the formula)."""
    if g.order > _GROUP_BRUTE_CAP:
        raise CapacityError(f"brute census capped at order <= {_GROUP_BRUTE_CAP}")
    orders = np.ones(1, dtype=np.int64)
    for l in g.lambdas:
        m = g.p**l
        comp = m // np.gcd(np.arange(m, dtype=np.int64), m)
        orders = np.lcm.outer(orders, comp).ravel()
    values, counts = np.unique(orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


@dataclass(frozen=True)
class GroupBoundReport:
    """Both inequalities checked on a group given by its p-components:
    per-component rows (p, j, count, count/p**j, p**(n-lambda)) for the
    ratio bound, and N(G) against tau(lambda(G)) * #G / lambda(G)."""

    components: tuple[AbelianPGroup, ...]
    n_value: Fraction
    eq_bound: Fraction
    rows: tuple[tuple[int, int, int, Fraction, int], ...]

    @property
    def ratio_ok(self) -> bool:
        return all(ratio <= cap for _, _, _, ratio, cap in self.rows)

    @property
    def n_ok(self) -> bool:
        return self.n_value <= self.eq_bound

    @property
    def all_ok(self) -> bool:
        return self.ratio_ok and self.n_ok

    @property
    def margin(self) -> Fraction:
        return self.eq_bound - self.n_value


def check_group_bounds(groups) -> GroupBoundReport:
    """Verify the order-count inequalities for an abelian group given as one
    AbelianPGroup or a sequence of p-components with distinct primes; N is
    multiplicative over components."""
    if isinstance(groups, AbelianPGroup):
        groups = (groups,)
    components = tuple(groups)
    primes = [g.p for g in components]
    if len(set(primes)) != len(primes):
        raise ValueError("components must have distinct primes")
    rows = []
    n_value = Fraction(1)
    order = 1
    exponent = 1
    tau_exp = 1
    for g in components:
        n = sum(g.lambdas)
        lam = g.lambdas[-1]
        for j in range(lam + 1):
            count = group_order_count(j, g)
            rows.append((g.p, j, count, Fraction(count, g.p**j), g.p ** (n - lam)))
        n_value *= group_N(g)
        order *= g.order
        exponent *= g.exponent
        tau_exp *= lam + 1
    return GroupBoundReport(components, n_value, Fraction(tau_exp * order, exponent), tuple(rows))
