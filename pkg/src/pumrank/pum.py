"""Memory-1 convolutional codes whose parity checks chain Gabidulin codes.

The construction fixes a dual memory mh and a defining vector h0 whose
entries are conjugates of a normal element with a spread-out exponent
pattern.  The column stack of the parity blocks H_0, ..., H_mh is then one
tall q-power matrix, every block is a Gabidulin parity check, and so is every
row concatenation (H_i | ... | H_0).  Generators (G0, G1) with the banded
orthogonality relations are solved for exactly from kernel bases.

Code shape conventions, with r = n - k:
  UM  (full memory):     k1 = k  and k  = mh * r
  PUM (partial memory):  k1 < k  and k1 = mh * r   (forces rate > mh/(mh+1))
The encoder maps c_j = u_j G0 + u_{j-1} G1, with rank(G1) = k1 and the
bottom k - k1 rows of G1 zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .field import ExtField, find_normal_element
from .matrices import (
    Mat,
    Vec,
    frobenius_matrix,
    is_zero_matrix,
    mat_mul,
    mat_vec,
    nullspace_ext,
    rank_ext,
    rank_norm,
    transpose,
    vec_add,
    vec_mat,
)


@dataclass(frozen=True)
class PumParams:
    field: ExtField
    n: int
    k: int
    k1: int
    mh: int


@dataclass(frozen=True)
class PumCode:
    params: PumParams
    normal_element: int
    h0: Vec
    H_blocks: tuple[Mat, ...]
    G0: Mat
    G1: Mat


@dataclass(frozen=True)
class RateCheck:
    kind: str      # "UM", "PUM", or "invalid"
    detail: str
    nu: int | None  # encoder overall constraint length when valid (= k1)


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class ChainReport:
    checks: tuple[CheckItem, ...]
    derived: dict
    ok: bool


@dataclass(frozen=True)
class MinimalBasicReport:
    window_degrees: tuple[int | None, ...]
    mu: int | None
    expected: int
    ok: bool


# -- parameter arithmetic -------------------------------------------------


def rate_check(n: int, k: int, k1: int, mh: int) -> RateCheck:
    """Classify (n, k, k1, mh) as UM, PUM, or invalid, with an explanation."""
    if not 0 < k < n:
        return RateCheck("invalid", f"need 0 < k < n, got k={k}, n={n}", None)
    if not 1 <= k1 <= k:
        return RateCheck("invalid", f"need 1 <= k1 <= k, got k1={k1}", None)
    if mh < 1:
        return RateCheck("invalid", f"need dual memory mh >= 1, got {mh}", None)
    r = n - k
    if k1 == k:
        if k == mh * r:
            return RateCheck("UM", f"full memory: k = mh*(n-k) = {k}", k)
        return RateCheck(
            "invalid",
            f"k1 = k, so the unit-memory shape applies and requires "
            f"k = mh*(n-k) = {mh * r}, got k = {k}; the partial-memory shape "
            f"would require k1 < k together with rate k/n > mh/(mh+1)",
            None)
    # k1 < k
    if k1 != mh * r:
        return RateCheck(
            "invalid",
            f"partial-memory shape requires k1 = mh*(n-k) = {mh * r}, "
            f"got k1 = {k1}",
            None)
    # k1 = mh*r < k makes the rate restriction k/n > mh/(mh+1) automatic
    return RateCheck(
        "PUM", f"partial memory: k1 = mh*(n-k) = {k1} < k, rate {k}/{n}", k1)


def min_field_size(n: int, k: int, mh: int) -> int:
    """Smallest extension degree s that fits the defining exponent pattern."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if mh < 1:
        raise ValueError(f"need mh >= 1, got {mh}")
    r = n - k
    return (mh + 1) * math.ceil(n / r) * r


def defining_exponents(n: int, k: int, mh: int) -> tuple[int, ...]:
    """Frobenius exponents of h0 relative to the normal element.

    Entries come in runs of length n-k; consecutive runs jump by
    (mh+1)*(n-k) so that shifting the whole pattern by i*(n-k) for
    i = 0..mh never collides with another run.  The final run is truncated
    to give exactly n exponents.
    """
    r = n - k
    out = []
    j = 0
    while len(out) < n:
        base = j * (mh + 1) * r
        out.extend(range(base, base + min(r, n - len(out))))
        j += 1
    return tuple(out)


def build_h0(field: ExtField, b: int, n: int, k: int, mh: int) -> Vec:
    """Defining vector h0: conjugates of b at the spread exponent pattern."""
    need = min_field_size(n, k, mh)
    if field.s < need:
        raise ValueError(
            f"field degree s = {field.s} is below the minimum "
            f"(mh+1)*ceil(n/(n-k))*(n-k) = {need} for (n={n}, k={k}, mh={mh})")
    if b == 0:
        raise ValueError("defining element must be nonzero")
    return tuple(field.frobenius(b, e) for e in defining_exponents(n, k, mh))


# -- generator solving ----------------------------------------------------


def solve_generator(field: ExtField, H_blocks: Sequence[Mat],
                    k: int, k1: int) -> tuple[Mat, Mat]:
    """Solve the banded orthogonality system for (G0, G1).

    The bottom k - k1 rows of G0 span the kernel of the column stack (with
    zero G1 rows); each top row is a joint vector (g0 | g1) in the kernel of
    the
        [H_0    0  ]
        [H_1  H_0  ]
        [ ...      ]
        [ 0   H_mh ]
    system.  A deterministic backtracking pass picks k1 of those joint
    kernel basis vectors so that the g1 parts are independent and G0 gets
    full rank k.
    """
    mh = len(H_blocks) - 1
    if mh < 1:
        raise ValueError("need at least two parity blocks (mh >= 1)")
    r = len(H_blocks[0])
    n = len(H_blocks[0][0])
    if r != n - k:
        raise ValueError(f"parity blocks have {r} rows, expected n-k = {n - k}")
    if k1 < (k + 1) // 2:
        raise ValueError(
            f"generator existence condition k1 >= (k+1)//2 fails for "
            f"k = {k}, k1 = {k1}")
    if k * (mh + 1) < n * mh:
        raise ValueError(
            f"generator existence requires rate k/n >= mh/(mh+1); "
            f"got {k}/{n} < {mh}/{mh + 1}")

    zero = (0,) * n
    joint = []
    for i in range(mh + 2):
        left = H_blocks[i] if i <= mh else None
        right = H_blocks[i - 1] if i >= 1 else None
        for t in range(r):
            lrow = left[t] if left is not None else zero
            rrow = right[t] if right is not None else zero
            joint.append(tuple(lrow) + tuple(rrow))
    k2 = nullspace_ext(field, tuple(joint))

    stack = tuple(row for blk in H_blocks for row in blk)
    kc = nullspace_ext(field, stack)
    if len(kc) < k - k1:
        raise ValueError(
            f"column-stack kernel has dimension {len(kc)}, "
            f"need {k - k1} bottom generator rows")
    bottom = kc[:k - k1]

    chosen: list[int] = []

    def admissible() -> bool:
        g1s = tuple(k2[j][n:] for j in chosen)
        g0s = tuple(k2[j][:n] for j in chosen) + bottom
        return (rank_ext(field, g1s) == len(chosen)
                and rank_ext(field, g0s) == len(chosen) + len(bottom))

    def pick(start: int) -> bool:
        if len(chosen) == k1:
            return True
        for j in range(start, len(k2)):
            chosen.append(j)
            if admissible() and pick(j + 1):
                return True
            chosen.pop()
        return False

    if not pick(0):
        raise ValueError(
            f"no full-rank generator selection in the joint kernel "
            f"(kernel dimension {len(k2)}, need {k1} rows)")

    g0 = tuple(k2[j][:n] for j in chosen) + bottom
    g1 = tuple(k2[j][n:] for j in chosen) + tuple(zero for _ in range(k - k1))
    return g0, g1


def generator_checks(field: ExtField, H_blocks: Sequence[Mat],
                     G0: Mat, G1: Mat, k: int, k1: int) -> list[CheckItem]:
    """Orthogonality, rank, and shape checks for an encoder pair."""
    mh = len(H_blocks) - 1
    n = len(H_blocks[0][0])
    shapes_ok = (len(G0) == k and len(G1) == k
                 and all(len(row) == n for row in G0)
                 and all(len(row) == n for row in G1))
    out = [CheckItem(
        "generator_shapes", shapes_ok,
        f"G0 is {len(G0)}x{len(G0[0]) if G0 else 0}, "
        f"G1 is {len(G1)}x{len(G1[0]) if G1 else 0}, expected {k}x{n}")]
    if not shapes_ok:
        out.append(CheckItem(
            "orthogonality", False, "not checkable: generator shapes wrong"))
        return out
    ht = [transpose(h) for h in H_blocks]
    conds = [("G0*H_0^T", mat_mul(field, G0, ht[0]))]
    for i in range(1, mh + 1):
        a = mat_mul(field, G0, ht[i])
        b = mat_mul(field, G1, ht[i - 1])
        conds.append((f"G0*H_{i}^T + G1*H_{i - 1}^T",
                      tuple(vec_add(field, x, y) for x, y in zip(a, b))))
    conds.append((f"G1*H_{mh}^T", mat_mul(field, G1, ht[mh])))
    for name, prod in conds:
        out.append(CheckItem(
            f"orthogonality[{name}]", is_zero_matrix(prod),
            "banded product must vanish"))
    r0 = rank_ext(field, G0)
    r1 = rank_ext(field, G1)
    out.append(CheckItem("rank_G0", r0 == k, f"rank {r0}, expected {k}"))
    out.append(CheckItem("rank_G1", r1 == k1, f"rank {r1}, expected {k1}"))
    tail_zero = all(x == 0 for row in G1[k1:] for x in row)
    out.append(CheckItem(
        "G1_bottom_rows_zero", tail_zero,
        f"bottom {k - k1} rows of G1 must be zero"))
    return out


# -- construction ---------------------------------------------------------


def build_code(field: ExtField, n: int, k: int, k1: int, mh: int) -> PumCode:
    """Construct the full code object for valid (n, k, k1, mh) over the field.

    Deterministic: the normal element is the smallest one, kernels come from
    reduced echelon forms, and row selection is first-index backtracking.
    """
    rc = rate_check(n, k, k1, mh)
    if rc.kind == "invalid":
        raise ValueError(f"invalid parameter shape: {rc.detail}")
    r = n - k
    b = find_normal_element(field)
    h0 = build_h0(field, b, n, k, mh)  # also enforces the field size
    tall = frobenius_matrix(field, h0, (mh + 1) * r)
    blocks = tuple(tall[i * r:(i + 1) * r] for i in range(mh + 1))
    g0, g1 = solve_generator(field, blocks, k, k1)
    for chk in generator_checks(field, blocks, g0, g1, k, k1):
        if not chk.ok:
            raise RuntimeError(f"construction self-check failed: "
                               f"{chk.name}: {chk.detail}")
    params = PumParams(field, n, k, k1, mh)
    return PumCode(params, b, h0, blocks, g0, g1)


# -- chain verification ---------------------------------------------------


def verify_chain_blocks(field: ExtField, H_blocks: Sequence[Mat],
                        n: int, k: int) -> ChainReport:
    """Check the defining chain of a parity block family.

    (a) every H_i is a q-power matrix on an F_q-independent defining vector,
    (b) the column stack is one tall q-power matrix on h0,
    (c) every row concatenation (H_i | ... | H_0) has an independent
        defining vector, so it is again a Gabidulin parity check.
    """
    mh = len(H_blocks) - 1
    r = n - k
    checks: list[CheckItem] = []
    shape_ok = all(len(h) == r and all(len(row) == n for row in h)
                   for h in H_blocks)
    checks.append(CheckItem(
        "block_shapes", shape_ok,
        f"expected {mh + 1} blocks of shape {r}x{n}"))
    if shape_ok:
        for i, h in enumerate(H_blocks):
            struct = h == frobenius_matrix(field, h[0], r)
            rk = rank_norm(field, h[0])
            checks.append(CheckItem(
                f"submatrix[{i}]", struct and rk == n,
                f"q-power structure {'ok' if struct else 'BROKEN'}, "
                f"defining vector rank {rk} of {n}"))
        stack = tuple(row for blk in H_blocks for row in blk)
        h0 = H_blocks[0][0]
        stack_ok = stack == frobenius_matrix(field, h0, (mh + 1) * r)
        checks.append(CheckItem(
            "column_stack", stack_ok and rank_norm(field, h0) == n,
            "stacked blocks must form one tall q-power matrix on h0"))
        for i in range(1, mh + 1):
            concat = tuple(x for j in range(i, -1, -1) for x in H_blocks[j][0])
            rk = rank_norm(field, concat)
            checks.append(CheckItem(
                f"row_concat[{i}]", rk == (i + 1) * n,
                f"defining vector of (H_{i}|...|H_0) has rank {rk} "
                f"of {(i + 1) * n}"))
    derived = {
        "n_c": n,
        "k_c": n - (mh + 1) * r,
        "n_r": tuple((i + 1) * n for i in range(1, mh + 1)),
        "k_r": tuple(i * n + k for i in range(1, mh + 1)),
    }
    return ChainReport(tuple(checks), derived, all(c.ok for c in checks))


def verify_gabidulin_chain(code: PumCode) -> ChainReport:
    p = code.params
    return verify_chain_blocks(p.field, code.H_blocks, p.n, p.k)


# -- encoding and syndromes -----------------------------------------------


def encode_sequence(code: PumCode,
                    info: Sequence[Sequence[int]]) -> tuple[Vec, ...]:
    """Blocks c_j = u_j G0 + u_{j-1} G1 for j = 0..N-1, plus the flush block
    c_N = u_{N-1} G1."""
    if not info:
        raise ValueError("need at least one information block")
    p = code.params
    for u in info:
        if len(u) != p.k:
            raise ValueError(
                f"information block has length {len(u)}, expected k = {p.k}")
    f = p.field
    out = []
    prev: Sequence[int] | None = None
    for u in info:
        c = vec_mat(f, u, code.G0)
        if prev is not None:
            c = vec_add(f, c, vec_mat(f, prev, code.G1))
        out.append(c)
        prev = u
    out.append(vec_mat(f, prev, code.G1))
    return tuple(out)


def syndrome_sequence(code: PumCode, blocks: Sequence[Sequence[int]]) -> bool:
    """True iff every banded parity window over the sequence vanishes
    (blocks outside the sequence count as zero)."""
    p = code.params
    f = p.field
    for b in blocks:
        if len(b) != p.n:
            raise ValueError(
                f"codeword block has length {len(b)}, expected n = {p.n}")
    r = p.n - p.k
    last = len(blocks) - 1
    for j in range(last + p.mh + 1):
        acc = (0,) * r
        for i in range(p.mh + 1):
            jj = j - i
            if 0 <= jj <= last:
                acc = vec_add(f, acc, mat_vec(f, code.H_blocks[i], blocks[jj]))
        if any(acc):
            return False
    return True


# -- minimality via window determinants -----------------------------------


def _poly_trim(p: tuple[int, ...]) -> tuple[int, ...]:
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return p[:i]


def _poly_add(field: ExtField, a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _poly_trim(tuple(field.add(x, y) for x, y in zip(a, b)))


def _poly_neg(field: ExtField, a):
    return tuple(field.neg(x) for x in a)


def _poly_mul(field: ExtField, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _poly_trim(tuple(out))


def _poly_det(field: ExtField, pm: list[list[tuple[int, ...]]]):
    if len(pm) == 1:
        return _poly_trim(tuple(pm[0][0]))
    det: tuple[int, ...] = ()
    for i, row in enumerate(pm):
        if not any(row[0]):
            continue
        minor = [r[1:] for t, r in enumerate(pm) if t != i]
        term = _poly_mul(field, row[0], _poly_det(field, minor))
        if i % 2:
            term = _poly_neg(field, term)
        det = _poly_add(field, det, term)
    return det


def minimal_basic_report(field: ExtField, H_blocks: Sequence[Mat],
                         n: int, k: int) -> MinimalBasicReport:
    """Degree-based minimality: the largest degree over determinants of all
    r x r contiguous column windows of H(D) must equal mh*(n-k)."""
    mh = len(H_blocks) - 1
    r = n - k
    degs: list[int | None] = []
    for c0 in range(k + 1):
        pm = [[_poly_trim(tuple(H_blocks[i][t][c0 + c] for i in range(mh + 1)))
               for c in range(r)] for t in range(r)]
        det = _poly_det(field, pm)
        degs.append(len(det) - 1 if det else None)
    present = [d for d in degs if d is not None]
    mu = max(present) if present else None
    expected = mh * r
    return MinimalBasicReport(tuple(degs), mu, expected, mu == expected)


def check_minimal_basic(code: PumCode) -> MinimalBasicReport:
    p = code.params
    return minimal_basic_report(p.field, code.H_blocks, p.n, p.k)
