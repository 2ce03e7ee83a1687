"""Pseudoprimes in residue classes: the admissibility test for a class to
contain base-a pseudoprimes, segmented counting of pseudoprimes per class,
the even-pseudoprime enumerator, empty-class scanning, and ingestion of
externally computed pseudoprime lists.

The admissibility test for a class r mod m and base a works with
g = gcd(r, m), g_a the largest divisor of g coprime to a, and
h = gcd(ord(a mod g_a), m).  A class containing a base-a pseudoprime must
satisfy h | r-1 and g/g_a | a, and when g is even the class must contain
some k whose coprime-to-2a part k' has Jacobi symbol (a/k') = +1.  The first
two conditions are decidable; the third is searched within a bound, with an
exact refutation for the one base-2 family where every candidate's odd part
is pinned to +-3 mod 8.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from . import bulk
from .arith import coprime_part, is_prime, jacobi, multiplicative_order
from .errors import InputFormatError

DEFAULT_JACOBI_BOUND = 1 << 20
_CHUNK = 1 << 22


# ---------------------------------------------------------------------------
# residue classes


@dataclass(frozen=True)
class ResidueClass:
    """Arithmetic progression r mod m with 0 <= r < m."""

    r: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1 or not 0 <= self.r < self.m:
            raise ValueError("need 0 <= r < m")

    def contains(self, n: int) -> bool:
        return n % self.m == self.r

    def intersect(self, other: "ResidueClass") -> "ResidueClass | None":
        """CRT: the intersection is empty or a single progression mod lcm."""
        g = gcd(self.m, other.m)
        if (other.r - self.r) % g != 0:
            return None
        lcm = self.m // g * other.m
        step = other.m // g
        t = (other.r - self.r) // g * pow(self.m // g, -1, step) % step
        return ResidueClass((self.r + self.m * t) % lcm, lcm)


# ---------------------------------------------------------------------------
# admissibility


class JacobiCondition(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class ClassConditionReport:
    """Verdicts of the three necessity conditions for base-a pseudoprimes in
    r mod m.  `admissible` means no condition refutes the class; an UNKNOWN
    Jacobi search counts as refuted."""

    a: int
    r: int
    m: int
    g: int
    g_a: int
    h: int
    cond_h_divides: bool
    cond_u_divides: bool
    cond_jacobi: JacobiCondition

    @property
    def admissible(self) -> bool:
        return (
            self.cond_h_divides
            and self.cond_u_divides
            and self.cond_jacobi in (JacobiCondition.HOLDS, JacobiCondition.NOT_APPLICABLE)
        )


def _jacobi_exact_refutation(a: int, r: int, m: int) -> bool:
    """True when provably no k = r (mod m) has (a / k_{2a}) = +1.

    Only the base-2 family is decided: if v2(r) < v2(m) every k in the class
    has 2-adic valuation v2(r), and if additionally v2(m) - v2(r) >= 3 the odd
    part of k is a fixed class mod 8; pinned to 3 or 5 it forces (2/odd) = -1.
    """
    if a != 2 or r == 0:
        return False
    v = (r & -r).bit_length() - 1
    f = (m & -m).bit_length() - 1
    if v < 1 or v >= f or f - v < 3:
        return False
    return (r >> v) % 8 in (3, 5)


def class_conditions(
    a: int, r: int, m: int, jacobi_search_bound: int = DEFAULT_JACOBI_BOUND
) -> ClassConditionReport:
    """Evaluate the three necessity conditions for the class r mod m, base a.

    The Jacobi condition is scanned over k = r, r+m, r+2m, ... considering at
    most jacobi_search_bound candidates with k_{2a} > 1; HOLDS on the first
    symbol +1, FAILS only with an exact refutation, UNKNOWN on exhaustion.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if not 0 <= r < m:
        raise ValueError("need 0 <= r < m")
    if a < 2:
        raise ValueError("base must be >= 2")
    g = gcd(r, m)  # r = 0 gives g = m
    g_a = coprime_part(g, a)
    h = gcd(multiplicative_order(a, g_a), m)
    cond_h = (r - 1) % h == 0
    cond_u = a % (g // g_a) == 0
    if g % 2 == 1:
        cj = JacobiCondition.NOT_APPLICABLE
    elif _jacobi_exact_refutation(a, r, m):
        cj = JacobiCondition.FAILS
    else:
        cj = JacobiCondition.UNKNOWN
        seen = 0
        k = r
        raw_cap = jacobi_search_bound * 64
        for _ in range(raw_cap):
            if k > 0:
                k2a = coprime_part(k, 2 * a)
                if k2a > 1:
                    seen += 1
                    if jacobi(a % k2a, k2a) == 1:
                        cj = JacobiCondition.HOLDS
                        break
                    if seen >= jacobi_search_bound:
                        break
            k += m
    return ClassConditionReport(a, r, m, g, g_a, h, cond_h, cond_u, cj)


# ---------------------------------------------------------------------------
# pseudoprime value stream


def iter_psp_values(a: int, lo: int, hi: int, chunk: int = _CHUNK):
    """Yield uint64 arrays of the base-a pseudoprimes in [lo, hi), ascending.

    Compositeness comes from a windowed prime sieve below 2**32 and from the
    deterministic primality test on the (slow) scalar path above it.
    """
    if a < 2:
        raise ValueError("base must be >= 2")
    if not 2 <= lo <= hi:
        raise ValueError("need 2 <= lo <= hi")
    lo = max(lo, 4)
    if hi <= lo:
        return
    if hi <= bulk.VECTOR_MOD_LIMIT:
        base_primes = bulk.primes_upto(isqrt(hi - 1))
        for wlo in range(lo, hi, chunk):
            whi = min(wlo + chunk, hi)
            ns = np.arange(wlo, whi, dtype=np.uint64)
            residue = bulk.powmod_vector(a, ns, ns)
            hits = residue == np.uint64(a) % ns if a >= wlo else residue == np.uint64(a)
            hits &= bulk.composite_flags(wlo, whi, base_primes)
            if hits.any():
                yield ns[hits]
    else:
        found = []
        for n in range(lo, hi):
            if pow(a, n, n) == a % n and not is_prime(n):
                found.append(n)
                if len(found) >= 4096:
                    yield np.array(found, dtype=np.uint64)
                    found = []
        if found:
            yield np.array(found, dtype=np.uint64)


def psp_values(a: int, limit: int) -> np.ndarray:
    """All base-a pseudoprimes <= limit as one ascending uint64 array."""
    parts = list(iter_psp_values(a, 2, limit + 1))
    if not parts:
        return np.zeros(0, dtype=np.uint64)
    return np.concatenate(parts)


# ---------------------------------------------------------------------------
# count tables


def _normalize_coverage(segments) -> tuple[tuple[int, int], ...]:
    segs = sorted((int(lo), int(hi)) for lo, hi in segments if lo < hi)
    merged: list[list[int]] = []
    for lo, hi in segs:
        if merged and lo < merged[-1][1]:
            raise ValueError("overlapping segments")
        if merged and lo == merged[-1][1]:
            merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


@dataclass(frozen=True)
class CountTable:
    """Per-class pseudoprime counts at one or more inclusive limits.

    counts maps (class r, limit) to a count; coverage records the half-open
    segments of n that were scanned, so partial tables over disjoint segments
    merge by addition.
    """

    base: int
    modulus: int
    limits: tuple[int, ...]
    counts: dict
    coverage: tuple[tuple[int, int], ...]

    @classmethod
    def from_values(cls, base, modulus, limits, values, coverage) -> "CountTable":
        limits = tuple(sorted(int(x) for x in limits))
        counts: dict = {}
        values = np.asarray(values, dtype=np.uint64)
        for lim in limits:
            kept = values[values <= np.uint64(lim)]
            tally = np.bincount((kept % np.uint64(modulus)).astype(np.int64), minlength=modulus)
            for r in range(modulus):
                counts[(r, lim)] = int(tally[r])
        return cls(base, modulus, limits, counts, _normalize_coverage(coverage))

    def count(self, r: int, limit: int | None = None) -> int:
        if limit is None:
            if len(self.limits) != 1:
                raise ValueError("limit is required for a multi-limit table")
            limit = self.limits[0]
        return self.counts.get((r, limit), 0)

    def total(self, limit: int | None = None) -> int:
        if limit is None:
            if len(self.limits) != 1:
                raise ValueError("limit is required for a multi-limit table")
            limit = self.limits[0]
        return sum(self.counts.get((r, limit), 0) for r in range(self.modulus))

    def merge(self, other: "CountTable") -> "CountTable":
        if (self.base, self.modulus, self.limits) != (other.base, other.modulus, other.limits):
            raise ValueError("tables disagree on base, modulus, or limits")
        coverage = _normalize_coverage(self.coverage + other.coverage)
        counts = dict(self.counts)
        for key, v in other.counts.items():
            counts[key] = counts.get(key, 0) + v
        return CountTable(self.base, self.modulus, self.limits, counts, coverage)


def count_psp_in_classes(
    a: int, m: int, limit: int, segment: tuple[int, int] | range | None = None
) -> CountTable:
    """Count base-a pseudoprimes n <= limit per class n mod m over one
    half-open segment (default: all of [2, limit+1))."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    top = max(2, limit + 1)
    if segment is None:
        lo, hi = 2, top
    elif isinstance(segment, range):
        if segment.step != 1:
            raise ValueError("segment must have step 1")
        lo, hi = segment.start, segment.stop
    else:
        lo, hi = segment
    if not 2 <= lo <= hi <= top:
        raise ValueError("segment must lie within [2, limit+1)")
    parts = list(iter_psp_values(a, lo, hi))
    values = np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)
    return CountTable.from_values(a, m, (limit,), values, ((lo, hi),))


def count_psp_table(a: int, m: int, limits, segments: int = 1) -> CountTable:
    """Full count table at several limits, scanned in `segments` disjoint
    pieces and merged; the result is independent of the segmentation."""
    limits = sorted(int(x) for x in limits)
    top = limits[-1]
    bounds = [2 + (top - 1) * i // segments for i in range(segments)] + [top + 1]
    table: CountTable | None = None
    for i in range(segments):
        lo, hi = bounds[i], bounds[i + 1]
        parts = list(iter_psp_values(a, lo, hi))
        values = np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)
        part = CountTable.from_values(a, m, limits, values, ((lo, hi),))
        table = part if table is None else table.merge(part)
    assert table is not None
    return table


# ---------------------------------------------------------------------------
# even pseudoprimes


def _even_candidates(wlo: int, whi: int, nine_filter: str | None) -> np.ndarray:
    """Candidates for even base-2 pseudoprimes in [wlo, whi): the classes
    2 and 14 mod 16, optionally thinned by a validated exclusion."""
    first2 = wlo + (-(wlo - 2)) % 16
    first14 = wlo + (-(wlo - 14)) % 16
    cand = np.concatenate(
        [np.arange(first2, whi, 16, dtype=np.uint64), np.arange(first14, whi, 16, dtype=np.uint64)]
    )
    cand.sort()
    if nine_filter == "mod9":
        cand = cand[cand % 9 != 0]
    elif nine_filter == "gcd2145":
        cand = cand[np.gcd(cand, np.uint64(2145)) == 1]
    elif nine_filter is not None:
        raise ValueError("nine_filter must be 'mod9', 'gcd2145', or None")
    return cand


def enumerate_even_psp(limit: int, nine_filter: str | None = "mod9") -> list[int]:
    """All even base-2 pseudoprimes <= limit, ascending.

    Candidates are restricted to n = 2 or 14 (mod 16): an even pseudoprime is
    2 mod 4, and the classes 6 and 10 mod 16 are refuted by the Jacobi
    condition.  The optional exclusion of multiples of 9 (or of n sharing a
    factor with 2145) removes classes with no pseudoprimes at all; pass
    nine_filter=None to run without it and compare.
    """
    if limit >= bulk.VECTOR_MOD_LIMIT:
        out: list[int] = []
        for n in range(18, limit + 1, 2):
            if n % 16 in (2, 14) and (nine_filter != "mod9" or n % 9):
                if nine_filter == "gcd2145" and gcd(n, 2145) != 1:
                    continue
                if pow(2, n, n) == 2:
                    out.append(n)
        return out
    found: list[int] = []
    for wlo in range(4, limit + 1, _CHUNK):
        whi = min(wlo + _CHUNK, limit + 1)
        cand = _even_candidates(wlo, whi, nine_filter)
        if cand.size == 0:
            continue
        hit = bulk.powmod_vector(2, cand, cand) == 2
        found.extend(int(x) for x in cand[hit])
    return found


def even_psp_brute(limit: int) -> list[int]:
    """Reference enumerator: every even n in [4, limit] tested directly,
    with no candidate-class shortcuts."""
    found: list[int] = []
    for wlo in range(4, limit + 1, _CHUNK):
        whi = min(wlo + _CHUNK, limit + 1)
        ns = np.arange(wlo + wlo % 2, whi, 2, dtype=np.uint64)
        if ns.size == 0:
            continue
        hit = bulk.powmod_vector(2, ns, ns) == 2
        found.extend(int(x) for x in ns[hit])
    return found


# ---------------------------------------------------------------------------
# empty-class scan


@dataclass(frozen=True)
class EmptyClass:
    modulus: int
    residue: int
    predicted_by_lemma: bool


def scan_empty_classes(
    a: int,
    max_mod: int,
    limit: int,
    jacobi_search_bound: int = DEFAULT_JACOBI_BOUND,
) -> list[EmptyClass]:
    """Every class r mod m (2 <= m <= max_mod) with no base-a pseudoprime
    <= limit, annotated with whether the admissibility conditions refute it
    (an UNKNOWN Jacobi search counts as refuted)."""
    values = psp_values(a, limit)
    out: list[EmptyClass] = []
    for m in range(2, max_mod + 1):
        tally = np.bincount((values % np.uint64(m)).astype(np.int64), minlength=m)
        for r in range(m):
            if tally[r] == 0:
                report = class_conditions(a, r, m, jacobi_search_bound)
                out.append(EmptyClass(m, r, not report.admissible))
    return out


# ---------------------------------------------------------------------------
# ingestion of external pseudoprime lists


def ingest_psp_list(lines, m: int, base: int = 2) -> CountTable:
    """Stream a sorted list of decimal pseudoprimes (one per line) into a
    per-class count table mod m.  Runs in constant memory; sortedness and the
    64-bit range are validated, pseudoprimality is not."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    tally = [0] * m
    prev = -1
    top = 0
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        try:
            value = int(text, 10)
        except ValueError:
            raise InputFormatError(f"line {lineno}: not a decimal integer: {text!r}") from None
        if value < 0 or value >= 1 << 64:
            raise InputFormatError(f"line {lineno}: value out of 64-bit range")
        if value < prev:
            raise InputFormatError(f"line {lineno}: values must be sorted ascending")
        prev = value
        top = value
        tally[value % m] += 1
    counts = {(r, top): tally[r] for r in range(m)}
    return CountTable(base, m, (top,), counts, ())


# ---------------------------------------------------------------------------
# rendering


def format_fraction(num: int, den: int, places: int = 6) -> str:
    """Exact fixed-point rendering of num/den, round-half-even."""
    if den == 0:
        num, den = 0, 1
    scale = 10**places
    q, rem = divmod(num * scale, den)
    if 2 * rem > den or (2 * rem == den and q % 2 == 1):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // scale}.{q % scale:0{places}d}"


def _table_rows(t: CountTable, jacobi_search_bound: int) -> list[dict]:
    rejected = {
        r
        for r in range(t.modulus)
        if not class_conditions(t.base, r, t.modulus, jacobi_search_bound).admissible
    }
    single = len(t.limits) == 1
    rows = []
    for r in range(t.modulus):
        for lim in t.limits:
            row = {
                "base": t.base,
                "modulus": t.modulus,
                "class": r,
                "limit": lim,
                "count": t.counts.get((r, lim), 0),
                "empty_predicted": r in rejected,
            }
            if single:
                row["fraction"] = format_fraction(row["count"], t.total(lim))
            rows.append(row)
    return rows


def emit_table(
    t: CountTable, format: str = "csv", jacobi_search_bound: int = DEFAULT_JACOBI_BOUND
) -> str:
    """Render a CountTable as CSV (fixed header) or a JSON array of rows.

    With a single limit, a fraction column (class count / total, 6 decimal
    places) is appended.
    """
    rows = _table_rows(t, jacobi_search_bound) if t.limits else []
    if format == "csv":
        header = "base,modulus,class,limit,count,empty_predicted"
        if rows and "fraction" in rows[0]:
            header += ",fraction"
        lines = [header]
        for row in rows:
            cells = [
                str(row["base"]),
                str(row["modulus"]),
                str(row["class"]),
                str(row["limit"]),
                str(row["count"]),
                "true" if row["empty_predicted"] else "false",
            ]
            if "fraction" in row:
                cells.append(row["fraction"])
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"
    if format == "json":
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError("format must be 'csv' or 'json'")
