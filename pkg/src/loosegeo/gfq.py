"""Exact arithmetic over GF(q) for small prime powers q <= 128.

Field elements are plain ints in range(q), encoding polynomial coefficient
vectors over F_p in base p (so for prime q the encoding is the identity).
All operations are table driven; there is no floating point anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


_MAX_Q = 128


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"q={q} is not a prime power")
            return p, e
    raise ValueError(f"q={q} is not a prime power")


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Multiply two coefficient lists modulo a monic polynomial, over F_p."""
    e = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    # reduce
    for i in range(len(out) - 1, e - 1, -1):
        c = out[i]
        if c == 0:
            continue
        out[i] = 0
        for j in range(e + 1):
            out[i - e + j] = (out[i - e + j] - c * mod[j]) % p
    return [out[i] if i < len(out) else 0 for i in range(e)]


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Check irreducibility of a monic polynomial by trial root/factor search.

    Degrees here are tiny (<= 7), so naive division by all lower-degree monic
    polynomials is fine.
    """
    e = len(poly) - 1
    if e == 1:
        return True
    # no roots in F_p
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    if e <= 3:
        return True
    # trial division by monic factors of degree 2..e//2
    for d in range(2, e // 2 + 1):
        for tail in product(range(p), repeat=d):
            div = list(tail) + [1]
            # polynomial remainder of poly by div
            rem = list(poly)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i]
                if c == 0:
                    continue
                for j in range(d + 1):
                    rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
                rem[i] = 0
            if all(c == 0 for c in rem[:d]):
                return False
    return True


def _find_irreducible(p: int, e: int) -> list[int]:
    """Smallest monic irreducible polynomial of degree e over F_p, by base-p order."""
    if e == 1:
        return [0, 1]
    for code in range(p**e):
        tail = [(code // p**i) % p for i in range(e)]
        poly = tail + [1]
        if poly[0] != 0 and _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")


class FField:
    """The finite field GF(q) with dense add/mul tables."""

    def __init__(self, q: int):
        if q > _MAX_Q:
            raise ValueError(f"q={q} exceeds supported bound {_MAX_Q}")
        p, e = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        self.modulus = _find_irreducible(p, e)

        def decode(a: int) -> list[int]:
            return [(a // p**i) % p for i in range(e)]

        def encode(coeffs: list[int]) -> int:
            return sum(c * p**i for i, c in enumerate(coeffs))

        self._add = [[0] * q for _ in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = decode(a)
            for b in range(q):
                db = decode(b)
                self._add[a][b] = encode([(x + y) % p for x, y in zip(da, db)])
                self._mul[a][b] = encode(_poly_mul_mod(da, db, self.modulus, p))
        self._neg = [0] * q
        self._inv = [0] * q
        for a in range(q):
            for b in range(q):
                if self._add[a][b] == 0:
                    self._neg[a] = b
                if a != 0 and self._mul[a][b] == 1:
                    self._inv[a] = b

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def frobenius(self, a: int, t: int = 1) -> int:
        """a ** (p**t), the t-th Frobenius power."""
        return self.pow(a, self.p ** (t % self.e))

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"FField({self.q})"


@lru_cache(maxsize=None)
def get_field(q: int) -> FField:
    return FField(q)


# ---------------------------------------------------------------------------
# vectors and matrices (tuples of ints; matrices are tuples of row tuples)
# ---------------------------------------------------------------------------


def vec_add(F: FField, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_scale(F: FField, c: int, u: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(F.mul(c, a) for a in u)


def mat_vec(F: FField, M, v: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul(F: FField, A, B):
    bt = list(zip(*B))
    return tuple(
        tuple(
            _dot(F, row, col)
            for col in bt
        )
        for row in A
    )


def _dot(F: FField, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def echelon(F: FField, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon basis of the row space (canonical, zero rows dropped)."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = F.inv(work[r][c])
        work[r] = [F.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r])


def mat_rank(F: FField, rows) -> int:
    return len(echelon(F, rows))


def mat_inv(F: FField, M):
    """Inverse of a square matrix, or None if singular."""
    n = len(M)
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            return None
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = F.inv(aug[r][c])
        aug[r] = [F.mul(inv, x) for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[i], aug[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in aug)


def solve(F: FField, M, b: tuple[int, ...]) -> tuple[int, ...] | None:
    """One solution x of M x = b, or None. M is given as rows."""
    n_rows = len(M)
    n_cols = len(M[0])
    aug = [list(M[i]) + [b[i]] for i in range(n_rows)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = F.inv(aug[r][c])
        aug[r] = [F.mul(inv, x) for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n_rows):
        if aug[i][n_cols] != 0:
            return None
    x = [0] * n_cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][n_cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# projective points
# ---------------------------------------------------------------------------


def normalize_point(F: FField, v: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative of a projective point: first nonzero entry 1."""
    for c in v:
        if c != 0:
            if c == 1:
                return tuple(v)
            return vec_scale(F, F.inv(c), v)
    raise ValueError("zero vector has no projective normalization")


def projective_points(F: FField, m: int):
    """All points of PG(m-1, q) in lexicographic order of the canonical form."""
    q = F.q
    pts = []
    for lead in range(m):
        prefix = (0,) * lead + (1,)
        for tail in product(range(q), repeat=m - lead - 1):
            pts.append(prefix + tail)
    return pts


def pg_size(q: int, m: int) -> int:
    """Number of points of PG(m-1, q)."""
    return (q**m - 1) // (q - 1)


def span_dim(F: FField, vectors) -> int:
    if not vectors:
        return 0
    return mat_rank(F, list(vectors))


def in_span(F: FField, v: tuple[int, ...], basis) -> bool:
    if not basis:
        return all(c == 0 for c in v)
    return mat_rank(F, list(basis)) == mat_rank(F, list(basis) + [v])


def frobenius_orbit(F: FField, v: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Orbit of a projective point under coordinatewise Frobenius x -> x^p."""
    seen = []
    cur = normalize_point(F, v)
    while cur not in seen:
        seen.append(cur)
        cur = normalize_point(F, tuple(F.frobenius(c) for c in cur))
    return seen
