"""Vectorized bulk arithmetic: plain sieves, windowed smallest-prime-factor
tables, elementwise modular exponentiation, and multiplicative-function arrays.

These back the residue-class counting and density modules.  Moduli in the
vector exponentiation path must stay below 2**32 so products of two reduced
residues fit a uint64; callers fall back to scalar arithmetic above that.
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np

VECTOR_MOD_LIMIT = 1 << 32
_WINDOW = 1 << 26


def prime_flags(limit: int) -> np.ndarray:
    """Boolean array f with f[n] = (n is prime) for 0 <= n <= limit."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, as int64."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(prime_flags(limit)).astype(np.int64)


def spf_window(lo: int, hi: int) -> np.ndarray:
    """Smallest prime factor of each n in [lo, hi); 0 for n < 2.

    Composites are marked by ascending primes p <= sqrt(hi-1), so the first
    mark a position receives is its least prime; survivors are primes and map
    to themselves.  Marking runs in sub-windows to bound temporary memory.
    """
    span = hi - lo
    spf = np.zeros(span, dtype=np.int64)
    base = primes_upto(isqrt(hi - 1))
    for wlo in range(lo, hi, _WINDOW):
        whi = min(wlo + _WINDOW, hi)
        view = spf[wlo - lo : whi - lo]
        for p in base.tolist():
            start = max(p, (wlo + p - 1) // p * p)
            if start >= whi:
                continue
            sl = view[start - wlo :: p]
            sl[sl == 0] = p
        unmarked = np.flatnonzero(view == 0)
        view[unmarked] = unmarked + wlo
    if lo < 2:
        spf[: 2 - lo] = 0
    return spf


def powmod_vector(base, exponent: np.ndarray, modulus: np.ndarray) -> np.ndarray:
    """Elementwise base**exponent % modulus for modulus < 2**32.

    base may be a scalar or an array; exponents may differ per element.
    """
    mod = np.asarray(modulus, dtype=np.uint64)
    if mod.size and int(mod.max()) >= VECTOR_MOD_LIMIT:
        raise ValueError("vector path needs every modulus < 2**32")
    e = np.asarray(exponent, dtype=np.uint64).copy()
    b = (np.asarray(base, dtype=np.uint64) % mod if np.ndim(base) else
         np.full(mod.shape, base, dtype=np.uint64) % mod)
    result = np.ones(mod.shape, dtype=np.uint64)
    while True:
        result = np.where(e & 1, result * b % mod, result)
        e >>= 1
        if not e.any():
            return result
        b = b * b % mod


def composite_flags(lo: int, hi: int, base_primes: np.ndarray | None = None) -> np.ndarray:
    """Boolean array over [lo, hi): True exactly for composite n (n >= 2)."""
    if base_primes is None:
        base_primes = primes_upto(isqrt(hi - 1))
    comp = np.zeros(hi - lo, dtype=bool)
    for p in base_primes.tolist():
        if p * p >= hi:
            break
        start = max(p * p, (lo + p - 1) // p * p)
        comp[start - lo :: p] = True
    return comp


def phi_lambda_arrays(hi: int) -> tuple[np.ndarray, np.ndarray]:
    """(phi, lam) with phi[n] = Euler phi and lam[n] = universal exponent of
    the unit group mod n, for 0 <= n <= hi (index 0 is set to 0).

    Small primes are applied by strided slices; after dividing out every prime
    p <= sqrt(hi), the residual cofactor of n is 1 or a single large prime,
    which is applied in one vectorized pass.
    """
    n = np.arange(hi + 1, dtype=np.int64)
    phi = n.copy()
    lam = np.ones(hi + 1, dtype=np.int64)
    red = n.copy()  # residual after removing small-prime parts
    red[:2] = 1
    for p in primes_upto(isqrt(hi)).tolist():
        phi[p::p] = phi[p::p] // p * (p - 1)
        pe = p
        e = 1
        while pe <= hi:
            # exact lambda of p**e; ascending e makes the deepest power win the lcm
            if p == 2:
                comp = 1 if e == 1 else (2 if e == 2 else pe >> 2)
            else:
                comp = pe // p * (p - 1)
            if comp > 1:
                sl = lam[pe::pe]
                g = np.gcd(sl, comp)
                sl //= g
                sl *= comp
            red[pe::pe] //= p
            pe *= p
            e += 1
    big = np.flatnonzero(red > 1)  # residual prime q > sqrt(hi), exponent 1
    q = red[big]
    phi[big] = phi[big] // q * (q - 1)
    g = np.gcd(lam[big], q - 1)
    lam[big] = lam[big] // g * (q - 1)
    phi[0] = lam[0] = 0
    return phi, lam


def coprime_part_array(x: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Largest divisor of each x coprime to the matching b."""
    out = x.copy()
    while True:
        g = np.gcd(out, b)
        active = g > 1
        if not active.any():
            return out
        out[active] //= g[active]


def tau_array(x: np.ndarray, spf: np.ndarray) -> np.ndarray:
    """Divisor count of each x; spf must cover values up to x.max()."""
    tau = np.ones(x.shape, dtype=np.int64)
    cur = x.astype(np.int64).copy()
    while True:
        act = np.flatnonzero(cur > 1)
        if act.size == 0:
            return tau
        c = cur[act]
        p = spf[c]
        e = np.ones(act.size, dtype=np.int64)
        c //= p
        while True:
            m = c % p == 0
            if not m.any():
                break
            e[m] += 1
            c[m] //= p[m]
        cur[act] = c
        tau[act] *= e + 1
