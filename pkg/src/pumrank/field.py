"""Exact arithmetic for extension fields F_{q^s}, q prime.

Elements are plain Python integers.  The element whose coordinate vector over
F_q is (c_0, ..., c_{s-1}) relative to the polynomial basis 1, x, ..., x^{s-1}
(constant term first) is encoded as sum(c_i * q**i).  For q = 2 this makes an
element literally the bit pattern of its coefficient vector, so GF(2)-linear
algebra on coordinates can work on the encodings directly.

An ExtField instance carries the modulus and all precomputed tables; every
operation takes the field as explicit context.  There is no element wrapper
class: keeping elements as ints keeps the distance search loops cheap.

The q-power map x -> x**q is F_q-linear, so it is precomputed once per field
as an s x s matrix over F_q; x^[i] (the i-fold q-power, "Frobenius power") is
then a single matrix application using the cached i-th matrix power.
"""

from __future__ import annotations

from typing import Sequence


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (fields here are small)."""
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


# -- polynomial helpers over F_q ------------------------------------------
# Polynomials appear only during modulus validation / generation, so they are
# kept as plain digit lists (constant term first, no trailing zeros).


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(q: int, num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Remainder of num modulo den over F_q.  den must be monic."""
    r = [c % q for c in num]
    _poly_trim(r)
    d = len(den) - 1
    while len(r) - 1 >= d:
        lead = r[-1]
        shift = len(r) - 1 - d
        for i in range(d + 1):
            r[shift + i] = (r[shift + i] - lead * den[i]) % q
        _poly_trim(r)
    return r


def _poly_mulmod(q: int, a: Sequence[int], b: Sequence[int], mod: Sequence[int]) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % q
    return _poly_mod(q, prod, mod)


def _int_to_poly(q: int, m: int) -> list[int]:
    digits = []
    while m:
        m, d = divmod(m, q)
        digits.append(d)
    return digits


def is_irreducible(q: int, coeffs: Sequence[int]) -> bool:
    """Trial division of a monic polynomial against every monic polynomial of
    degree 1..deg/2.  Exact and obviously correct; moduli are small."""
    p = [c % q for c in coeffs]
    s = len(p) - 1
    if s < 1 or p[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    for deg in range(1, s // 2 + 1):
        for m in range(q**deg, 2 * q**deg):
            div = _int_to_poly(q, m)
            if not _poly_mod(q, p, div):
                return False
    return True


def default_modulus(q: int, s: int) -> tuple[int, ...]:
    """The monic irreducible of degree s over F_q with the smallest integer
    encoding sum(c_i * q**i).  Deterministic, so two runs (or two machines)
    agree on the field presentation."""
    for m in range(q**s, 2 * q**s):
        cand = _int_to_poly(q, m)
        if is_irreducible(q, cand):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {s} over F_{q} found")


# -- the field context ----------------------------------------------------


class ExtField:
    """Arithmetic context for F_{q^s} with integer-encoded elements."""

    def __init__(self, q: int, s: int, modulus: Sequence[int] | None = None):
        if not is_prime(q):
            raise ValueError(f"q = {q} is not prime")
        if s < 1:
            raise ValueError(f"extension degree s = {s} must be >= 1")
        if modulus is None:
            modulus = default_modulus(q, s)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != s + 1:
            raise ValueError(
                f"modulus has degree {len(modulus) - 1}, expected {s}")
        if any(not 0 <= c < q for c in modulus):
            raise ValueError("modulus coefficients must lie in [0, q)")
        if not is_irreducible(q, modulus):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{q}")
        self.q = q
        self.s = s
        self.modulus = modulus
        self.order = q**s
        if q == 2:
            self._mod_int = sum(c << i for i, c in enumerate(modulus))
        else:
            # x^i mod modulus for i = s .. 2s-2, as length-s digit tuples
            red = []
            cur = [(-c) % q for c in modulus[:s]]  # x^s = -(low part)
            red.append(tuple(cur))
            for _ in range(s - 2):
                cur = [0] + cur  # multiply by x
                if len(cur) > s and cur[s]:
                    lead = cur[s]
                    cur = [(cur[i] + lead * red[0][i]) % q for i in range(s)]
                else:
                    cur = cur[:s] + [0] * (s - len(cur[:s]))
                red.append(tuple(cur))
            self._red = red
        self._frob_pows = self._build_frobenius_powers()

    # -- encoding ---------------------------------------------------------

    def _check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise ValueError(
                f"{x} is not an element encoding of a field of order {self.order}")
        return x

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coordinate vector over F_q, constant term first, length s."""
        self._check(x)
        q = self.q
        out = []
        for _ in range(self.s):
            x, d = divmod(x, q)
            out.append(d)
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        """Inverse of coeffs(); accepts up to s digits in [0, q)."""
        if len(coeffs) > self.s:
            raise ValueError(f"too many coefficients for degree {self.s}")
        x = 0
        for i, c in enumerate(coeffs):
            if not 0 <= c < self.q:
                raise ValueError(f"coefficient {c} outside [0, {self.q})")
            x += c * self.q**i
        return x

    # -- ring operations --------------------------------------------------

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.q == 2:
            return x ^ y
        q = self.q
        out = 0
        base = 1
        for _ in range(self.s):
            out += ((x + y) % q) * base
            x //= q
            y //= q
            base *= q
        return out

    def neg(self, x: int) -> int:
        self._check(x)
        if self.q == 2:
            return x
        q = self.q
        out = 0
        base = 1
        for _ in range(self.s):
            out += ((q - x % q) % q) * base
            x //= q
            base *= q
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.q == 2:
            m = self._mod_int
            top = 1 << self.s
            acc = 0
            while y:
                if y & 1:
                    acc ^= x
                y >>= 1
                x <<= 1
                if x & top:
                    x ^= m
            return acc
        a = self.coeffs(x)
        b = self.coeffs(y)
        s = self.s
        q = self.q
        prod = [0] * (2 * s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % q
        res = prod[:s]
        for i in range(s, 2 * s - 1):
            c = prod[i]
            if c:
                tail = self._red[i - s]
                for j in range(s):
                    res[j] = (res[j] + c * tail[j]) % q
        return self.element(res)

    def pow(self, x: int, e: int) -> int:
        self._check(x)
        if e < 0:
            return self.pow(self.inv(x), -e)
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError("inversion of zero")
        return self.pow(x, self.order - 2)

    # -- the q-power map --------------------------------------------------

    def _matvec(self, mat, x: int) -> int:
        if self.q == 2:
            out = 0
            for r, row in enumerate(mat):
                out |= ((row & x).bit_count() & 1) << r
            return out
        xs = self.coeffs(x)
        digits = []
        for row in mat:
            digits.append(sum(m * c for m, c in zip(row, xs)) % self.q)
        return self.element(digits)

    def _matmul(self, a, b):
        s = self.s
        if self.q == 2:
            # rows are bitmasks over columns; (a.b)[r] = xor of b-rows picked by a[r]
            out = []
            for ar in a:
                row = 0
                t = 0
                while ar:
                    if ar & 1:
                        row ^= b[t]
                    ar >>= 1
                    t += 1
                out.append(row)
            return tuple(out)
        out = []
        for r in range(s):
            row = []
            for c in range(s):
                row.append(sum(a[r][t] * b[t][c] for t in range(s)) % self.q)
            out.append(tuple(row))
        return tuple(out)

    def _build_frobenius_powers(self):
        s, q = self.s, self.q
        # columns of M: coordinates of (x^j)^q for the basis monomials x^j
        cols = [self.coeffs(self.pow(q**j, q)) for j in range(s)]
        if q == 2:
            ident = tuple(1 << r for r in range(s))
            mat = tuple(
                sum((cols[j][r] & 1) << j for j in range(s)) for r in range(s))
        else:
            ident = tuple(
                tuple(1 if r == c else 0 for c in range(s)) for r in range(s))
            mat = tuple(tuple(cols[j][r] for j in range(s)) for r in range(s))
        pows = [ident]
        for _ in range(s - 1):
            pows.append(self._matmul(mat, pows[-1]))
        if self._matmul(mat, pows[-1]) != ident:
            raise RuntimeError("q-power map does not have order s; field tables corrupt")
        return tuple(pows)

    def frobenius(self, x: int, i: int = 1) -> int:
        """x^[i] = x**(q**i), reduced mod s applications."""
        self._check(x)
        i %= self.s
        if i == 0:
            return x
        return self._matvec(self._frob_pows[i], x)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtField)
                and (self.q, self.s, self.modulus) == (other.q, other.s, other.modulus))

    def __hash__(self) -> int:
        return hash((self.q, self.s, self.modulus))

    def __repr__(self) -> str:
        return f"ExtField(q={self.q}, s={self.s}, modulus={list(self.modulus)})"


def make_field(q: int, s: int, modulus: Sequence[int] | None = None) -> ExtField:
    """Build an arithmetic context for F_{q^s}; see ExtField."""
    return ExtField(q, s, modulus)


# -- bases and expansions -------------------------------------------------


def _rank_fq(q: int, rows: list[list[int]]) -> int:
    """Row rank over F_q by plain Gaussian elimination (small matrices only)."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] % q:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [(c * inv) % q for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % q:
                f = rows[r][col]
                rows[r] = [(a - f * b) % q for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def find_normal_element(field: ExtField) -> int:
    """Smallest-encoded b whose conjugates b^[0], ..., b^[s-1] form a basis
    of F_{q^s} over F_q (a normal basis).  Deterministic."""
    s = field.s
    for b in range(1, field.order):
        conj = [b]
        for _ in range(s - 1):
            conj.append(field.frobenius(conj[-1]))
        if _rank_fq(field.q, [list(field.coeffs(c)) for c in conj]) == s:
            return b
    raise RuntimeError("no normal element found; field tables corrupt")


def expand(field: ExtField, v: Sequence[int],
           basis: Sequence[int] | None = None) -> tuple[tuple[int, ...], ...]:
    """Coordinate matrix of a vector over F_{q^s}: an s x n matrix over F_q
    whose column j holds the coordinates of v[j] in the given basis
    (polynomial basis by default)."""
    s, q = field.s, field.q
    cols = [field.coeffs(x) for x in v]
    if basis is not None:
        if len(basis) != s:
            raise ValueError(f"basis must have {s} elements, got {len(basis)}")
        bmat = [[field.coeffs(b)[r] for b in basis] for r in range(s)]
        binv = _invert_fq(q, bmat)
        if binv is None:
            raise ValueError("basis is linearly dependent over the base field")
        cols = [
            tuple(sum(binv[r][t] * c[t] for t in range(s)) % q for r in range(s))
            for c in cols
        ]
    return tuple(tuple(c[r] for c in cols) for r in range(s))


def _invert_fq(q: int, mat: list[list[int]]) -> list[list[int]] | None:
    """Inverse of a square matrix over F_q, or None if singular."""
    n = len(mat)
    aug = [list(mat[r]) + [1 if c == r else 0 for c in range(n)] for r in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] % q:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, q)
        aug[col] = [(c * inv) % q for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % q:
                f = aug[r][col]
                aug[r] = [(a - f * b) % q for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
