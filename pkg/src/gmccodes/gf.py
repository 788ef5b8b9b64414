"""Exact arithmetic in the finite-field tower GF(p) ⊂ GF(q) ⊂ GF(q²).

The ambient field GF(q²) is realised directly as GF(p)[x]/(mod_q2) for a
deterministically chosen modulus (the lexicographically smallest monic
irreducible of degree 2m, scanning coefficient vectors by their base-p
integer encoding).  An element is its coefficient vector over GF(p), handled
everywhere as the base-p positional encoding ``sum(c[i] * p**i)``; that
integer is also the on-disk serialisation.

The subfield GF(q) is embedded once at construction time by locating the
smallest root of its own modulus inside GF(q²); conjugation ``x -> x**q`` is
then a plain power map whose fixed set is exactly the embedded subfield.

For q² up to ``LOG_TABLE_LIMIT`` a discrete-log/antilog pair keyed to the
fixed primitive element makes multiplicative operations O(1); larger fields
fall back to polynomial arithmetic with identical semantics.  Fields small
enough for ``PAIR_TABLE_LIMIT`` additionally expose dense q²×q² add/mul
tables for the vectorised kernels.

Everything here is immutable after construction and safe to share across
workers; all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

#: build exp/log arrays when q² does not exceed this
LOG_TABLE_LIMIT = 1 << 20
#: build dense pairwise add/mul tables (q⁴ entries) when q² does not exceed this
PAIR_TABLE_LIMIT = 1 << 12
#: default cap on p^(2m)
DEFAULT_MAX_ORDER = 1 << 20


class FieldError(ValueError):
    """Invalid field construction or element operation."""


# ---------------------------------------------------------------------------
# small number-theory helpers (desk scale, trial division)
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Sorted distinct prime factors of n ≥ 1."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def split_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise FieldError."""
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"q={q} is not a prime power")
    p = ps[0]
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    if q != 1:
        raise FieldError("q is not a prime power")
    return p, m


# ---------------------------------------------------------------------------
# polynomials over GF(p): low-to-high coefficient lists
# ---------------------------------------------------------------------------

def _decode(n: int, p: int, width: int) -> tuple[int, ...]:
    digits = []
    for _ in range(width):
        digits.append(n % p)
        n //= p
    return tuple(digits)


def _encode(digits: Sequence[int], p: int) -> int:
    n = 0
    for d in reversed(digits):
        n = n * p + d
    return n


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    # mod is monic; returns remainder padded to deg(mod) coefficients
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    a = a[:dm]
    a += [0] * (dm - len(a))
    return a


def _poly_is_irreducible(mod: Sequence[int], p: int) -> bool:
    deg = len(mod) - 1
    if deg <= 1:
        return deg == 1
    if mod[0] == 0:
        return False
    if deg <= 3:
        # cubic or lower: irreducible iff rootless
        for x in range(p):
            acc = 0
            for c in reversed(mod):
                acc = (acc * x + c) % p
            if acc == 0:
                return False
        return True
    for dd in range(1, deg // 2 + 1):
        for enc in range(p ** dd):
            div = list(_decode(enc, p, dd)) + [1]
            if any(_poly_rem(mod, div, p)):
                continue
            return False
    return True


def _smallest_irreducible(p: int, deg: int) -> tuple[int, ...]:
    for enc in range(p ** deg):
        cand = tuple(_decode(enc, p, deg)) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise FieldError(f"no monic irreducible of degree {deg} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """Arithmetic context for GF(p) ⊂ GF(q) ⊂ GF(q²), q = p^m.

    Use :func:`build_field_ctx`; constructing directly bypasses the cache.
    """

    def __init__(self, p: int, m: int, *, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree m={m} must be ≥ 1")
        q = p ** m
        q2 = q * q
        if q2 > max_order:
            raise FieldError(f"p^(2m)={q2} exceeds the size bound {max_order}")
        self.p = p
        self.m = m
        self.q = q
        self.q2 = q2
        self.mod_q = _smallest_irreducible(p, m)
        self.mod_q2 = _smallest_irreducible(p, 2 * m)

        self._pow_cache = [p ** i for i in range(2 * m + 1)]
        self.g = self._find_primitive()

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if q2 <= LOG_TABLE_LIMIT:
            self._build_log_tables()

        self.embed_table = self._build_embedding()
        self._subfield = frozenset(self.embed_table)

        # lazy numpy tables for the vectorised kernels
        self._np_add = None
        self._np_mul = None
        self._np_inv = None
        self._np_neg = None
        self._np_conj = None
        self._bsgs_baby: dict[int, int] | None = None

    # -- construction internals --------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        pa = _decode(a, self.p, 2 * self.m)
        pb = _decode(b, self.p, 2 * self.m)
        return _encode(_poly_rem(_poly_mul(pa, pb, self.p), self.mod_q2, self.p), self.p)

    def _raw_pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _find_primitive(self) -> int:
        n1 = self.q2 - 1
        checks = [n1 // r for r in prime_factors(n1)]
        for cand in range(1, self.q2):
            if self._raw_pow(cand, n1) != 1:
                continue  # cannot happen; defensive
            if all(self._raw_pow(cand, e) != 1 for e in checks):
                return cand
        raise FieldError("no primitive element found")  # unreachable

    def _build_log_tables(self) -> None:
        n1 = self.q2 - 1
        exp = [1] * n1
        log = [0] * self.q2
        acc = 1
        for i in range(n1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, self.g)
        if acc != 1:
            raise FieldError("primitive element has wrong order")
        self._exp = exp
        self._log = log

    def _build_embedding(self) -> tuple[int, ...]:
        # root of mod_q inside GF(q²); roots lie in the unique subfield of
        # size q, i.e. {0} ∪ {g^(j(q+1))}
        candidates = [0] + [self.gpow(j * (self.q + 1)) for j in range(self.q - 1)]
        roots = []
        for r in candidates:
            acc = 0
            for c in reversed(self.mod_q):
                acc = self.add(self.mul(acc, r), c % self.p)
            if acc == 0:
                roots.append(r)
        if not roots:
            raise FieldError("subfield modulus has no root in GF(q²)")
        root = min(roots)
        table = []
        for a in range(self.q):
            acc = 0
            for c in reversed(_decode(a, self.p, self.m)):
                acc = self.add(self.mul(acc, root), c)
            table.append(acc)
        if len(set(table)) != self.q:
            raise FieldError("embedding is not injective")
        return tuple(table)

    # -- scalar operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        for pw in self._pow_cache[: 2 * self.m]:
            if a == 0 and b == 0:
                break
            out += ((a + b) % p) * pw
            a //= p
            b //= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        for pw in self._pow_cache[: 2 * self.m]:
            if a == 0:
                break
            out += (-a % p) * pw
            a //= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q2 - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[(self.q2 - 1 - self._log[a]) % (self.q2 - 1)]
        return self._raw_pow(a, self.q2 - 2)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("zero has no negative power")
            return 0
        e %= self.q2 - 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q2 - 1)]
        return self._raw_pow(a, e)

    def gpow(self, e: int) -> int:
        """Power of the fixed primitive element."""
        return self.pow(self.g, e)

    def conj(self, a: int) -> int:
        """Frobenius conjugate a^q; involutive, fixes the embedded GF(q)."""
        return self.pow(a, self.q)

    def norm(self, a: int) -> int:
        """a^(q+1), always in the embedded subfield."""
        return self.pow(a, self.q + 1)

    def log_of(self, a: int) -> int:
        """Discrete log base g of a ≠ 0 (table lookup or baby-step/giant-step)."""
        if a == 0:
            raise FieldError("zero has no discrete logarithm")
        if self._log is not None:
            return self._log[a]
        n1 = self.q2 - 1
        step = math.isqrt(n1) + 1
        if self._bsgs_baby is None:
            baby = {}
            acc = 1
            for j in range(step):
                baby.setdefault(acc, j)
                acc = self._raw_mul(acc, self.g)
            self._bsgs_baby = baby
        giant = self.inv(self._raw_pow(self.g, step))
        cur = a
        for i in range(step + 1):
            j = self._bsgs_baby.get(cur)
            if j is not None:
                return (i * step + j) % n1
            cur = self._raw_mul(cur, giant)
        raise FieldError("discrete log not found")  # unreachable

    def in_subfield(self, a: int) -> bool:
        return a in self._subfield

    def elements(self) -> Iterator[int]:
        return iter(range(self.q2))

    def subfield_elements(self) -> tuple[int, ...]:
        """Embedded GF(q), in coefficient-lex order of the standalone subfield."""
        return self.embed_table

    # -- Felt conveniences ----------------------------------------------------

    def felt(self, val: int) -> "Felt":
        if not 0 <= val < self.q2:
            raise FieldError(f"encoding {val} out of range for GF({self.q2})")
        return Felt(self, val)

    @property
    def zero(self) -> "Felt":
        return Felt(self, 0)

    @property
    def one(self) -> "Felt":
        return Felt(self, 1)

    @property
    def gen(self) -> "Felt":
        return Felt(self, self.g)

    def from_subfield(self, a: int) -> "Felt":
        """Embed the standalone GF(q) element with encoding a."""
        return Felt(self, self.embed_table[a])

    # -- dense tables for the kernels -----------------------------------------

    @property
    def has_pair_tables(self) -> bool:
        return self.q2 <= PAIR_TABLE_LIMIT

    @property
    def add_table(self) -> np.ndarray:
        if self._np_add is None:
            if not self.has_pair_tables:
                raise FieldError(f"pair tables unavailable for q²={self.q2}")
            n = self.q2
            if self.p == 2:
                idx = np.arange(n, dtype=np.int64)
                tab = idx[:, None] ^ idx[None, :]
            else:
                tab = np.zeros((n, n), dtype=np.int64)
                rem = np.arange(n, dtype=np.int64)
                for pw in self._pow_cache[: 2 * self.m]:
                    dig = rem % self.p
                    tab += ((dig[:, None] + dig[None, :]) % self.p) * pw
                    rem //= self.p
            self._np_add = tab.astype(np.uint16)
        return self._np_add

    @property
    def mul_table(self) -> np.ndarray:
        if self._np_mul is None:
            if not self.has_pair_tables:
                raise FieldError(f"pair tables unavailable for q²={self.q2}")
            n1 = self.q2 - 1
            logs = np.array(self._log, dtype=np.int64)
            exps = np.array(self._exp, dtype=np.int64)
            tab = np.zeros((self.q2, self.q2), dtype=np.int64)
            ls = logs[1:]
            tab[1:, 1:] = exps[(ls[:, None] + ls[None, :]) % n1]
            self._np_mul = tab.astype(np.uint16)
        return self._np_mul

    @property
    def neg_table(self) -> np.ndarray:
        if self._np_neg is None:
            self._np_neg = np.array(
                [self.neg(a) for a in range(self.q2)], dtype=np.uint16
            )
        return self._np_neg

    @property
    def inv_table(self) -> np.ndarray:
        if self._np_inv is None:
            tab = np.zeros(self.q2, dtype=np.uint16)
            for a in range(1, self.q2):
                tab[a] = self.inv(a)
            self._np_inv = tab
        return self._np_inv

    @property
    def conj_table(self) -> np.ndarray:
        if self._np_conj is None:
            self._np_conj = np.array(
                [self.conj(a) for a in range(self.q2)], dtype=np.uint16
            )
        return self._np_conj

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, q={self.q}, q²={self.q2})"


@dataclass(frozen=True)
class Felt:
    """One element of GF(q²), as its base-p integer encoding plus context."""

    ctx: FieldCtx
    val: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return _decode(self.val, self.ctx.p, 2 * self.ctx.m)

    def __add__(self, other: "Felt") -> "Felt":
        self._check(other)
        return Felt(self.ctx, self.ctx.add(self.val, other.val))

    def __sub__(self, other: "Felt") -> "Felt":
        self._check(other)
        return Felt(self.ctx, self.ctx.sub(self.val, other.val))

    def __mul__(self, other: "Felt") -> "Felt":
        self._check(other)
        return Felt(self.ctx, self.ctx.mul(self.val, other.val))

    def __truediv__(self, other: "Felt") -> "Felt":
        self._check(other)
        return Felt(self.ctx, self.ctx.mul(self.val, self.ctx.inv(other.val)))

    def __pow__(self, e: int) -> "Felt":
        if e < 0:
            return Felt(self.ctx, self.ctx.inv(self.ctx.pow(self.val, -e)))
        return Felt(self.ctx, self.ctx.pow(self.val, e))

    def __neg__(self) -> "Felt":
        return Felt(self.ctx, self.ctx.neg(self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def conj(self) -> "Felt":
        return Felt(self.ctx, self.ctx.conj(self.val))

    def norm(self) -> "Felt":
        return Felt(self.ctx, self.ctx.norm(self.val))

    def inv(self) -> "Felt":
        return Felt(self.ctx, self.ctx.inv(self.val))

    def in_subfield(self) -> bool:
        return self.ctx.in_subfield(self.val)

    def order(self) -> int:
        """Multiplicative order (exhaustive-free, via the group order's factors)."""
        if self.val == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.ctx.q2 - 1
        for r in prime_factors(n):
            while n % r == 0 and self.ctx.pow(self.val, n // r) == 1:
                n //= r
        return n

    def _check(self, other: "Felt") -> None:
        if self.ctx is not other.ctx:
            raise FieldError("elements from different field contexts")

    def __repr__(self) -> str:
        return f"Felt({self.val} in GF({self.ctx.q2}))"


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def build_field_ctx(p: int, m: int) -> FieldCtx:
    """Deterministically construct the GF(p) ⊂ GF(q) ⊂ GF(q²) tower."""
    return FieldCtx(p, m)


def ctx_for_prime_power(q: int) -> FieldCtx:
    """Context for a given q = p^m."""
    p, m = split_prime_power(q)
    return build_field_ctx(p, m)


def root_of_unity(ctx: FieldCtx, t: int) -> Felt:
    """Primitive t-th root of unity g^((q²−1)/t); requires t | q²−1."""
    if t < 1 or (ctx.q2 - 1) % t != 0:
        raise FieldError(f"t={t} does not divide q²-1={ctx.q2 - 1}")
    return Felt(ctx, ctx.gpow((ctx.q2 - 1) // t))


def conjugate(ctx: FieldCtx, x: Felt) -> Felt:
    """Frobenius conjugate x^q."""
    return Felt(ctx, ctx.conj(x.val))


def norm_solve(ctx: FieldCtx, a: Felt) -> Felt:
    """Deterministic x with x^(q+1) = a, for a in the embedded GF(q)*.

    x = g^j for the unique j in [0, q−1) with (g^(q+1))^j = a; that j is
    log_g(a) / (q+1), which is integral exactly when a lies in GF(q)*.
    """
    if a.val == 0:
        raise FieldError("norm equation x^(q+1) = 0 has only the zero solution")
    if not ctx.in_subfield(a.val):
        raise FieldError(f"{a!r} is not in the embedded GF({ctx.q})")
    e = ctx.log_of(a.val)
    if e % (ctx.q + 1) != 0:
        raise FieldError("element not in the embedded subfield")  # unreachable
    return Felt(ctx, ctx.gpow(e // (ctx.q + 1)))


def vandermonde_kernel(ctx: FieldCtx, ys: Sequence[Felt]) -> list[Felt]:
    """The 1-dimensional kernel of the (n−1)×n power-row matrix of ys.

    Closed form w[j] = prod_{i≠j} (y_j − y_i)^(−1): annihilates every power
    row y^r for r ≤ n−2 and has no zero coordinate.  Points must be distinct
    and in the embedded GF(q) so the coordinates stay norm-solvable.
    """
    n = len(ys)
    if n < 2:
        raise FieldError("need at least two evaluation points")
    vals = [y.val for y in ys]
    if len(set(vals)) != n:
        raise FieldError("evaluation points must be pairwise distinct")
    for y in ys:
        if not ctx.in_subfield(y.val):
            raise FieldError(f"{y!r} is not in the embedded GF({ctx.q})")
    out = []
    for j in range(n):
        acc = 1
        for i in range(n):
            if i != j:
                acc = ctx.mul(acc, ctx.sub(vals[j], vals[i]))
        out.append(Felt(ctx, ctx.inv(acc)))
    return out
