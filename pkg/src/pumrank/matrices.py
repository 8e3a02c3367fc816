"""Linear algebra over F_q and F_{q^s}, including the rank norm.

Matrices are tuples of row tuples; vectors are tuples of int-encoded field
elements (see field.py for the encoding).  For q = 2 the coordinate expansion
of a vector over F_{2^s} is literally its list of encodings read as bit rows,
which the rank routines exploit.
"""

from __future__ import annotations

from typing import Sequence

from .field import ExtField

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


# -- rank over the base field ---------------------------------------------


def rank_bits(rows: Sequence[int]) -> int:
    """Rank over GF(2) of a matrix whose rows are int bit patterns."""
    rank = 0
    rows = list(rows)
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        lsb = pivot & -pivot
        rows = [r ^ pivot if r & lsb else r for r in rows]
    return rank


def rank_base(q: int, rows: Sequence[Sequence[int]]) -> int:
    """Rank over F_q of a matrix given as rows of digits."""
    if q == 2:
        return rank_bits([sum((c & 1) << j for j, c in enumerate(r)) for r in rows])
    work = [[c % q for c in r] for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][col], -1, q)
        work[rank] = [c * inv % q for c in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [(a - f * b) % q for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


# -- rank norm and weights ------------------------------------------------


def rank_norm(field: ExtField, v: Sequence[int]) -> int:
    """Rank over F_q of the s x n coordinate expansion of v over F_{q^s}.

    This is the rank norm: 0 only for the zero vector, at most min(n, s),
    and never larger than the Hamming weight.
    """
    if field.q == 2:
        order = field.order
        for x in v:
            if not 0 <= x < order:
                raise ValueError(f"{x} is not an element of the field")
        return rank_bits(list(v))
    return rank_base(field.q, [field.coeffs(x) for x in v])


def hamming_weight(blocks: Sequence[Sequence[int]]) -> int:
    """Number of nonzero symbols across all blocks."""
    return sum(1 for b in blocks for x in b if x)


def sum_rank_weight(field: ExtField, blocks: Sequence[Sequence[int]]) -> int:
    """Sum of per-block rank norms."""
    return sum(rank_norm(field, b) for b in blocks)


def sum_rank_distance(field: ExtField,
                      a: Sequence[Sequence[int]],
                      b: Sequence[Sequence[int]]) -> int:
    """Sum-rank distance d(a, b) = sum of rank norms of the block differences."""
    if len(a) != len(b) or any(len(x) != len(y) for x, y in zip(a, b)):
        raise ValueError("block sequences have different shapes")
    return sum(rank_norm(field, vec_sub(field, x, y)) for x, y in zip(a, b))


# -- vector / matrix arithmetic over the extension field ------------------


def vec_add(field: ExtField, a: Sequence[int], b: Sequence[int]) -> Vec:
    if len(a) != len(b):
        raise ValueError("vector lengths differ")
    return tuple(field.add(x, y) for x, y in zip(a, b))


def vec_sub(field: ExtField, a: Sequence[int], b: Sequence[int]) -> Vec:
    if len(a) != len(b):
        raise ValueError("vector lengths differ")
    return tuple(field.sub(x, y) for x, y in zip(a, b))


def vec_scale(field: ExtField, c: int, a: Sequence[int]) -> Vec:
    return tuple(field.mul(c, x) for x in a)


def vec_mat(field: ExtField, v: Sequence[int], m: Mat) -> Vec:
    """Row vector times matrix."""
    if len(v) != len(m):
        raise ValueError(f"shape mismatch: vector {len(v)} vs matrix rows {len(m)}")
    mul, add = field.mul, field.add
    ncols = len(m[0]) if m else 0
    out = [0] * ncols
    for vi, row in zip(v, m):
        if vi:
            for j, e in enumerate(row):
                if e:
                    out[j] = add(out[j], mul(vi, e))
    return tuple(out)


def mat_vec(field: ExtField, m: Mat, v: Sequence[int]) -> Vec:
    """Matrix times column vector."""
    if m and len(m[0]) != len(v):
        raise ValueError(f"shape mismatch: matrix cols {len(m[0])} vs vector {len(v)}")
    mul, add = field.mul, field.add
    out = []
    for row in m:
        acc = 0
        for e, x in zip(row, v):
            if e and x:
                acc = add(acc, mul(e, x))
        out.append(acc)
    return tuple(out)


def mat_mul(field: ExtField, a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a[0])} inner cols vs {len(b)} rows")
    return tuple(vec_mat(field, row, b) for row in a)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def is_zero_matrix(m: Mat) -> bool:
    return all(all(x == 0 for x in row) for row in m)


def rref(field: ExtField, m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form over F_{q^s} with the pivot column list.

    Pivoting is deterministic: first nonzero entry in column order, row swaps
    only, so equal inputs give byte-equal outputs.
    """
    work = [list(r) for r in m]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work), tuple(pivots)


def rank_ext(field: ExtField, m: Mat) -> int:
    """Rank of a matrix over F_{q^s}."""
    return len(rref(field, m)[1])


def nullspace_ext(field: ExtField, m: Mat) -> Mat:
    """Canonical basis of the right kernel {x : m x^T = 0}, one row per free
    column of the reduced echelon form."""
    red, pivots = rref(field, m)
    ncols = len(m[0]) if m else 0
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = field.neg(red[i][f])
        basis.append(tuple(v))
    return tuple(basis)


def frobenius_matrix(field: ExtField, a: Sequence[int], m: int) -> Mat:
    """m x n matrix whose row i is the entrywise i-fold q-power of a."""
    if m < 1:
        raise ValueError("need at least one row")
    rows = [tuple(a)]
    for _ in range(m - 1):
        rows.append(tuple(field.frobenius(x) for x in rows[-1]))
    return tuple(rows)
