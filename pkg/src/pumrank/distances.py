"""Distance profiles of memory-1 convolutional encoders.

A memory-1 encoder over F_{q^s} turns an information sequence of length-k
blocks u_0, u_1, ... into code blocks

    c_j = u_j * G0 + u_{j-1} * G1        (u_{-1} = 0).

The extended row distance of order ell is the minimum weight of the blocks
(c_0, ..., c_{ell-1}) over all information paths with u_i != 0 for
0 <= i < ell, u_i = 0 outside that range, and u_{ell-1} * G1 = 0 (so every
block after c_{ell-1} vanishes as well).  The free distance is the minimum
over all orders.  Weights are measured either in the sum-rank metric or in
the Hamming (block) metric.

The profile is computed exactly by a layered min-sum dynamic program.  The
encoder memory u_{j-1} enters the next block only through its image
u_{j-1} * G1, so memory states are collapsed into classes keyed by that
image (plus one class for the exact-zero memory of the resting encoder).
This shrinks the state space from q^(s*k) to at most q^(s*k1) + 1 states,
where k1 is the rank of G1; a full-state dynamic program and a brute-force
path enumeration are provided as independent cross-checks.  Layer updates
are pure min-reductions (with an or-fold on the tie flags), so iteration
order cannot affect any result.

A reported free distance is "certified" once the minimum accumulated weight
over every state class at some layer reaches the running minimum: any
longer path has a prefix ending in one of those classes and can only be
heavier.  That argument needs every cycle through the nonzero state classes
to accumulate positive weight, so a zero-weight-cycle search runs alongside
and a profile is never certified while such a cycle exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import BudgetExceeded
from .field import ExtField
from .matrices import (
    Mat,
    Vec,
    nullspace_ext,
    rank_bits,
    rank_ext,
    rank_norm,
    rref,
    transpose,
    vec_add,
    vec_mat,
    vec_scale,
)
from .pum import PumCode, rate_check

METRICS = ("sum_rank", "hamming")

DEFAULT_STATE_BUDGET = 1 << 16
DEFAULT_MAX_INPUTS = 1 << 20
DEFAULT_MAX_PATHS = 1 << 26
DEFAULT_MAX_STATES = 1 << 12


@dataclass(frozen=True)
class ConvEncoder:
    """A memory-1 convolutional encoder given by its two generator matrices.

    Both matrices are k x n over the same extension field; k1 is the rank
    of G1 (the dimension that survives into the next block).
    """

    field: ExtField
    G0: Mat
    G1: Mat

    def __post_init__(self) -> None:
        g0 = tuple(tuple(row) for row in self.G0)
        g1 = tuple(tuple(row) for row in self.G1)
        if not g0 or not g0[0]:
            raise ValueError("G0 must be a nonempty matrix")
        k = len(g0)
        n = len(g0[0])
        for m in (g0, g1):
            if len(m) != k or any(len(row) != n for row in m):
                raise ValueError("G0 and G1 must both be k x n")
            for row in m:
                for x in row:
                    if not 0 <= x < self.field.order:
                        raise ValueError(f"entry {x} outside field of order "
                                         f"{self.field.order}")
        object.__setattr__(self, "G0", g0)
        object.__setattr__(self, "G1", g1)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k1", rank_ext(self.field, g1))


@dataclass(frozen=True)
class TrellisClass:
    """One collapsed memory state: the image u*G1 plus an exact-zero flag.

    Two memory vectors drive the encoder identically iff their images under
    G1 agree; the resting (exactly zero) memory keeps its own class so that
    path starts and returns stay distinguishable from a nonzero memory that
    happens to map to the zero image.
    """

    image: Vec
    is_zero_state: bool


@dataclass(frozen=True)
class DistanceBounds:
    """Upper bounds on free distance and slope for a (P)UM shape."""

    kind: str
    d_free_bound: int
    slope_bound: int


@dataclass(frozen=True)
class BoundsCheck:
    """Bound values plus compliance flags for a computed profile.

    Flags are None when the measured quantity is unknown (no certified free
    distance, or no slope estimate); the slope flag compares the
    finite-window estimate, not the unreachable limit.
    """

    kind: str
    d_free_bound: int
    slope_bound: int
    d_free_ok: Optional[bool]
    slope_ok: Optional[bool]


@dataclass(frozen=True)
class ConstructionBoundCheck:
    """Per-order lower-bound check for chain-built codes with one memory
    block and rate at least 1/2: order 1 must meet 2(n-k)+1 exactly and
    every later order must stay at or above ceil((ell+1)/2)*(n-k+1)."""

    applies: bool
    values: Optional[tuple[int, ...]]
    satisfied: Optional[tuple[Optional[bool], ...]]
    equality_at_one: Optional[bool]


@dataclass(frozen=True)
class DistanceProfile:
    """Exact extended row distances of orders 1..L plus derived summaries.

    d_row holds one entry per order; None marks an order whose path set is
    empty (no nonzero input sequence of that length parks the encoder).
    Emptiness is all-or-nothing: the zero image is reachable from nonzero
    inputs either at every order or at none, so a profile is either fully
    populated or fully empty.

    status is "certified" when d_free is provably the minimum over all
    orders (including those beyond L), "lower_bound_only" when the search
    horizon ended first (the value is then only the minimum over orders
    <= L), and "empty" when there are no qualifying paths at all.
    final_layer_min is the smallest accumulated weight over every state
    class at layer L; min(d_free, final_layer_min) always lower-bounds the
    true free distance.

    zero_block_on_min_path flags orders where some minimum-weight path
    contains an all-zero code block among c_0..c_{ell-1}.
    """

    metric: str
    L: int
    n: int
    k: int
    k1: int
    mh: Optional[int]
    kind: Optional[str]
    d_row: tuple[Optional[int], ...]
    zero_block_on_min_path: tuple[Optional[bool], ...]
    d_free: Optional[int]
    status: str
    certified_at: Optional[int]
    final_layer_min: Optional[int]
    zero_weight_cycle: bool
    state_count: int
    slope_estimate: Optional[Fraction]
    window: Optional[tuple[int, int]]
    intercept_estimate: Optional[Fraction]
    bounds: Optional[BoundsCheck]
    construction_bound: Optional[ConstructionBoundCheck]


@dataclass(frozen=True)
class MetricComparison:
    """Sum-rank and Hamming profiles of one encoder, with domination flags.

    The sum-rank weight of a block never exceeds its Hamming contribution,
    so every sum-rank row distance must sit at or below its Hamming
    counterpart; per_order_ok records that comparison (None where both
    orders are empty).
    """

    sum_rank: DistanceProfile
    hamming: DistanceProfile
    per_order_ok: tuple[Optional[bool], ...]
    d_free_ok: Optional[bool]
    ok: bool


def _coerce(code: Union[ConvEncoder, PumCode]):
    """Accept either a bare encoder or a built code; return (enc, mh, kind)."""
    if isinstance(code, ConvEncoder):
        return code, None, None
    params = getattr(code, "params", None)
    if params is not None and hasattr(code, "G0") and hasattr(code, "G1"):
        enc = ConvEncoder(params.field, code.G0, code.G1)
        kind = "PUM" if enc.k1 < enc.k else "UM"
        return enc, params.mh, kind
    raise TypeError("expected a ConvEncoder or a code with params/G0/G1")


class _Tables:
    """Packed images and memoized block weights for one encoder + metric.

    For q = 2 a length-n block is packed into one integer with coordinate j
    occupying bits [j*s, (j+1)*s); adding blocks is then a single xor.  For
    other characteristics blocks stay as tuples of field elements.
    """

    def __init__(self, enc: ConvEncoder, metric: str) -> None:
        if metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}")
        f = enc.field
        q, s, n, k = f.q, f.s, enc.n, enc.k
        self.enc = enc
        self.metric = metric
        self.Q = Q = f.order
        self.total = Q ** k
        if q == 2:
            self.zero = 0
            self.combine = lambda a, b: a ^ b
            self.neg = lambda a: a

            def pack(v: Sequence[int]) -> int:
                acc = 0
                for j, x in enumerate(v):
                    acc |= x << (j * s)
                return acc
        else:
            self.zero = (0,) * n
            self.combine = lambda a, b: vec_add(f, a, b)
            self.neg = lambda a: tuple(f.neg(x) for x in a)

            def pack(v: Sequence[int]) -> tuple[int, ...]:
                return tuple(v)
        self.pack = pack

        self.img0 = self._image_table(enc.G0)
        self.img1 = self._image_table(enc.G1)

        self._memo: dict = {self.zero: 0}
        mask = (1 << s) - 1
        if q == 2:
            if metric == "sum_rank":
                def weigh(p):
                    return rank_bits([(p >> (j * s)) & mask
                                      for j in range(n)])
            else:
                def weigh(p):
                    return sum(1 for j in range(n) if (p >> (j * s)) & mask)
        else:
            if metric == "sum_rank":
                def weigh(p):
                    return rank_norm(f, p)
            else:
                def weigh(p):
                    return sum(1 for x in p if x)
        self._weigh = weigh

    def _image_table(self, g: Mat) -> list:
        """images[u] = pack(u * g) for every information word u, filled one
        generator row at a time (the map is linear in each digit of u)."""
        f = self.enc.field
        Q, total = self.Q, self.total
        images = [self.zero] * total
        for t, row in enumerate(g):
            row_imgs = [self.pack(vec_scale(f, d, row)) for d in range(Q)]
            step = Q ** t
            combine = self.combine
            for u in range(total):
                d = (u // step) % Q
                if d:
                    images[u] = combine(images[u], row_imgs[d])
        return images

    def weight(self, packed) -> int:
        w = self._memo.get(packed)
        if w is None:
            w = self._weigh(packed)
            self._memo[packed] = w
        return w


def row_distance_profile(code: Union[ConvEncoder, PumCode],
                         L: int,
                         metric: str = "sum_rank",
                         state_budget: int = DEFAULT_STATE_BUDGET,
                         max_inputs: int = DEFAULT_MAX_INPUTS,
                         ) -> DistanceProfile:
    """Compute the exact extended row distances of orders 1..L.

    Raises BudgetExceeded before any enumeration when the collapsed state
    count q^(s*k1) + 1 would exceed state_budget, or when the q^(s*k)
    information words of a single layer would exceed max_inputs.
    """
    enc, mh, kind = _coerce(code)
    if L < 1:
        raise ValueError("order bound L must be at least 1")
    f = enc.field
    state_bound = f.order ** enc.k1 + 1
    if state_bound > state_budget:
        raise BudgetExceeded(
            f"state budget exceeded: q^(s*k1) + 1 = {state_bound} "
            f"> state_budget = {state_budget}")
    input_bound = f.order ** enc.k
    if input_bound > max_inputs:
        raise BudgetExceeded(
            f"input budget exceeded: q^(s*k) = {input_bound} "
            f"> max_inputs = {max_inputs}")

    t = _Tables(enc, metric)
    total = t.total

    # Collapse nonzero information words into classes by their G1 image.
    class_imgs = sorted(set(t.img1[u] for u in range(1, total)))
    class_of = {img: c for c, img in enumerate(class_imgs)}
    C = len(class_imgs)
    a0_list = [t.img0[u] for u in range(1, total)]
    tgt_list = [class_of[t.img1[u]] for u in range(1, total)]
    zero_class = class_of.get(t.zero)

    cycle = _zero_weight_cycle(t, class_imgs, class_of, a0_list, tgt_list)

    d_row: list[Optional[int]] = []
    flags: list[Optional[bool]] = []
    certified_at: Optional[int] = None
    candidate: Optional[int] = None

    # Layer 1: every path starts from the resting encoder, c_0 = u_0 * G0.
    W: list[Optional[int]] = [None] * C
    F: list[bool] = [False] * C
    for a0, tc in zip(a0_list, tgt_list):
        bw = t.weight(a0)
        cw = W[tc]
        if cw is None or bw < cw:
            W[tc] = bw
            F[tc] = bw == 0
        elif bw == cw and bw == 0:
            F[tc] = True

    layer = 1
    while True:
        if zero_class is None:
            d_row.append(None)
            flags.append(None)
        else:
            d_row.append(W[zero_class])
            flags.append(F[zero_class])
            if candidate is None or W[zero_class] < candidate:
                candidate = W[zero_class]
        layer_min = min(w for w in W if w is not None)
        if (certified_at is None and candidate is not None
                and layer_min >= candidate):
            certified_at = layer
        if layer == L:
            break
        layer += 1
        newW: list[Optional[int]] = [None] * C
        newF: list[bool] = [False] * C
        combine = t.combine
        weight = t.weight
        for a0, tc in zip(a0_list, tgt_list):
            cw = newW[tc]
            cf = newF[tc]
            for c in range(C):
                wc = W[c]
                if wc is None:
                    continue
                bw = weight(combine(a0, class_imgs[c]))
                tot = wc + bw
                if cw is None or tot < cw:
                    cw = tot
                    cf = F[c] or bw == 0
                elif tot == cw:
                    cf = cf or F[c] or bw == 0
            newW[tc] = cw
            newF[tc] = cf
        W, F = newW, newF

    final_layer_min = min(w for w in W if w is not None)
    computed = [d for d in d_row if d is not None]
    d_free = min(computed) if computed else None
    if d_free is None:
        status = "empty"
        certified_at = None
    elif certified_at is not None and not cycle:
        status = "certified"
    else:
        status = "lower_bound_only"

    profile = DistanceProfile(
        metric=metric, L=L, n=enc.n, k=enc.k, k1=enc.k1, mh=mh, kind=kind,
        d_row=tuple(d_row), zero_block_on_min_path=tuple(flags),
        d_free=d_free, status=status,
        certified_at=certified_at if status == "certified" else None,
        final_layer_min=final_layer_min,
        zero_weight_cycle=cycle, state_count=C + 1,
        slope_estimate=None, window=None, intercept_estimate=None,
        bounds=None, construction_bound=None)
    profile = _attach_summaries(profile)
    return profile


def _zero_weight_cycle(t: _Tables, class_imgs: list, class_of: dict,
                       a0_list: list, tgt_list: list) -> bool:
    """Detect a cycle through the nonzero-memory state classes all of whose
    branches have zero weight.  A branch from a class with image m under
    input u has weight zero iff u*G0 = -m, so adjacency is a dictionary
    lookup from the negated class image to the targets of its preimages."""
    by_img0: dict = {}
    for a0, tc in zip(a0_list, tgt_list):
        by_img0.setdefault(a0, set()).add(tc)
    C = len(class_imgs)
    adj = [sorted(by_img0.get(t.neg(class_imgs[c]), ())) for c in range(C)]
    color = [0] * C  # 0 unvisited, 1 on stack, 2 done
    for start in range(C):
        if color[start]:
            continue
        color[start] = 1
        stack = [(start, iter(adj[start]))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == 1:
                    return True
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                stack.pop()
    return False


def _attach_summaries(p: DistanceProfile) -> DistanceProfile:
    """Fill slope/intercept estimates and, for built codes, bound checks."""
    slope = None
    window = None
    intercept = None
    if p.d_free is not None:
        if p.L >= 3:
            window = (2, p.L)
        elif p.L == 2:
            window = (1, 2)
        if window is not None:
            slope = Fraction(p.d_row[window[1] - 1] - p.d_row[window[0] - 1],
                             window[1] - window[0])
            intercept = min(Fraction(d) - slope * ell
                            for ell, d in enumerate(p.d_row, start=1)
                            if d is not None)

    bounds = None
    construction = None
    if p.mh is not None and p.kind is not None:
        if p.kind == "UM":
            d_bound = 2 * p.n - p.k + 1
        else:
            d_bound = p.n - p.k + p.k1 + 1
        s_bound = p.n - p.k
        d_ok = (p.d_free <= d_bound) if p.status == "certified" else None
        s_ok = (slope <= s_bound) if slope is not None else None
        bounds = BoundsCheck(kind=p.kind, d_free_bound=d_bound,
                             slope_bound=s_bound, d_free_ok=d_ok,
                             slope_ok=s_ok)
        applies = p.mh == 1 and 2 * p.k >= p.n
        if applies:
            values = tuple(construction_lower_bound(ell, p.n, p.k)
                           for ell in range(1, p.L + 1))
            satisfied = tuple(
                None if d is None else d >= v
                for d, v in zip(p.d_row, values))
            eq1 = None if p.d_row[0] is None else p.d_row[0] == values[0]
            construction = ConstructionBoundCheck(
                applies=True, values=values, satisfied=satisfied,
                equality_at_one=eq1)
        else:
            construction = ConstructionBoundCheck(
                applies=False, values=None, satisfied=None,
                equality_at_one=None)

    return DistanceProfile(
        metric=p.metric, L=p.L, n=p.n, k=p.k, k1=p.k1, mh=p.mh, kind=p.kind,
        d_row=p.d_row, zero_block_on_min_path=p.zero_block_on_min_path,
        d_free=p.d_free, status=p.status, certified_at=p.certified_at,
        final_layer_min=p.final_layer_min,
        zero_weight_cycle=p.zero_weight_cycle, state_count=p.state_count,
        slope_estimate=slope, window=window, intercept_estimate=intercept,
        bounds=bounds, construction_bound=construction)


def brute_force_row_distance(code: Union[ConvEncoder, PumCode],
                             order: int,
                             metric: str = "sum_rank",
                             max_paths: int = DEFAULT_MAX_PATHS,
                             ) -> Optional[int]:
    """Exact row distance of one order by full path enumeration.

    The final information block must lie in the kernel of G1, so the last
    position ranges over kernel elements only; the enumerated path count is
    (q^(s*k))^(order-1) * q^(s*(k-k1)) and must stay within max_paths.
    Returns None when the order has no qualifying paths.
    """
    enc, _, _ = _coerce(code)
    if order < 1:
        raise ValueError("order must be at least 1")
    f = enc.field
    total = f.order ** enc.k
    paths = (total ** (order - 1)) * (f.order ** (enc.k - enc.k1))
    if paths > max_paths:
        raise BudgetExceeded(
            f"path budget exceeded: {paths} paths > max_paths = {max_paths}")

    kernel = nullspace_ext(f, transpose(enc.G1))  # left kernel of G1
    if not kernel:
        return None  # G1 has full rank: no nonzero input parks the encoder

    if order == 1:
        best = None
        for u in _span_nonzero(f, kernel):
            w = _block_weight(f, vec_mat(f, u, enc.G0), metric)
            if best is None or w < best:
                best = w
        return best

    t = _Tables(enc, metric)
    flush = [u for u in range(1, total) if t.img1[u] == t.zero]
    best: Optional[int] = None

    def rec(depth: int, prev: int, acc: int) -> None:
        nonlocal best
        if depth == order - 1:
            for u in flush:
                w = acc + t.weight(t.combine(t.img0[u], t.img1[prev]))
                if best is None or w < best:
                    best = w
            return
        for u in range(1, total):
            rec(depth + 1, u,
                acc + t.weight(t.combine(t.img0[u], t.img1[prev])))

    for u in range(1, total):
        rec(1, u, t.weight(t.img0[u]))
    return best


def _span_nonzero(f: ExtField, basis: Mat):
    """Yield every nonzero vector in the row span of a basis."""
    m = len(basis)
    for idx in range(1, f.order ** m):
        v = None
        rest = idx
        for row in basis:
            d = rest % f.order
            rest //= f.order
            if d:
                scaled = vec_scale(f, d, row)
                v = scaled if v is None else vec_add(f, v, scaled)
        yield v


def _block_weight(f: ExtField, block: Vec, metric: str) -> int:
    if metric == "sum_rank":
        return rank_norm(f, block)
    if metric == "hamming":
        return sum(1 for x in block if x)
    raise ValueError(f"metric must be one of {METRICS}")


def full_state_row_distances(code: Union[ConvEncoder, PumCode],
                             L: int,
                             metric: str = "sum_rank",
                             max_states: int = DEFAULT_MAX_STATES,
                             ) -> list[Optional[int]]:
    """Row distances by a dynamic program over the uncollapsed memory.

    States are the raw nonzero information words (q^(s*k) of them, guarded
    by max_states), so this is an independent check that collapsing memory
    to G1 images loses nothing.  Returns one entry per order 1..L.
    """
    enc, _, _ = _coerce(code)
    if L < 1:
        raise ValueError("order bound L must be at least 1")
    f = enc.field
    total = f.order ** enc.k
    if total > max_states:
        raise BudgetExceeded(
            f"full-state budget exceeded: q^(s*k) = {total} "
            f"> max_states = {max_states}")
    t = _Tables(enc, metric)
    out: list[Optional[int]] = []
    P = {u: t.weight(t.img0[u]) for u in range(1, total)}
    for layer in range(1, L + 1):
        finals = [w for u, w in P.items() if t.img1[u] == t.zero]
        out.append(min(finals) if finals else None)
        if layer == L:
            break
        newP = {}
        for u in range(1, total):
            a0 = t.img0[u]
            best = None
            for v, wv in P.items():
                w = wv + t.weight(t.combine(a0, t.img1[v]))
                if best is None or w < best:
                    best = w
            newP[u] = best
        P = newP
    return out


def state_classes(code: Union[ConvEncoder, PumCode],
                  state_budget: int = DEFAULT_STATE_BUDGET,
                  ) -> tuple[TrellisClass, ...]:
    """The collapsed memory classes in canonical order: the exact-zero
    resting state first, then the distinct G1 images of nonzero inputs
    sorted coordinate-wise."""
    enc, _, _ = _coerce(code)
    f = enc.field
    if f.order ** enc.k1 + 1 > state_budget:
        raise BudgetExceeded(
            f"state budget exceeded: q^(s*k1) + 1 = {f.order ** enc.k1 + 1} "
            f"> state_budget = {state_budget}")
    basis = tuple(row for row in rref(f, enc.G1)[0] if any(row))
    imgs = {tuple(u) for u in _span_nonzero(f, basis)}
    if enc.k1 < enc.k:
        imgs.add((0,) * enc.n)  # some nonzero input maps to the zero image
    classes = [TrellisClass(image=(0,) * enc.n, is_zero_state=True)]
    classes.extend(TrellisClass(image=img, is_zero_state=False)
                   for img in sorted(imgs))
    return tuple(classes)


def free_rank_distance(profile: DistanceProfile) -> tuple[int, str]:
    """The minimum computed row distance with its certification status."""
    computed = [d for d in profile.d_row if d is not None]
    if not computed:
        raise ValueError(
            f"every order up to L = {profile.L} is empty; "
            "no nonzero input sequence parks this encoder")
    return min(computed), profile.status


def slope_estimate(profile: DistanceProfile,
                   window: tuple[int, int]) -> Fraction:
    """Difference quotient of the row distances over [l1, l2].

    This is a finite-window surrogate for the average long-run increase;
    the window must lie inside the computed range and touch no empty order.
    """
    l1, l2 = window
    if not (1 <= l1 < l2 <= profile.L):
        raise ValueError(
            f"window {window} must satisfy 1 <= l1 < l2 <= L = {profile.L}")
    for ell in range(l1, l2 + 1):
        if profile.d_row[ell - 1] is None:
            raise ValueError(f"order {ell} inside the window is empty")
    return Fraction(profile.d_row[l2 - 1] - profile.d_row[l1 - 1], l2 - l1)


def upper_bounds(n: int, k: int, k1: int, mh: int) -> DistanceBounds:
    """Upper bounds implied by the shape alone: a UM code obeys
    d_free <= 2n-k+1, a PUM code d_free <= n-k+k1+1, and both obey
    slope <= n-k."""
    rc = rate_check(n, k, k1, mh)
    if rc.kind == "invalid":
        raise ValueError(f"invalid shape: {rc.detail}")
    if rc.kind == "UM":
        d_bound = 2 * n - k + 1
    else:
        d_bound = n - k + k1 + 1
    return DistanceBounds(kind=rc.kind, d_free_bound=d_bound,
                          slope_bound=n - k)


def construction_lower_bound(order: int, n: int, k: int) -> int:
    """Guaranteed row distance of chain-built codes with one memory block
    and rate at least 1/2: 2(n-k)+1 at order 1 (with equality), and
    ceil((order+1)/2) * (n-k+1) beyond."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k = {k}, n = {n}")
    r = n - k
    if order == 1:
        return 2 * r + 1
    return ((order + 2) // 2) * (r + 1)


def compare_hamming(code: Union[ConvEncoder, PumCode],
                    L: int,
                    state_budget: int = DEFAULT_STATE_BUDGET,
                    max_inputs: int = DEFAULT_MAX_INPUTS,
                    ) -> MetricComparison:
    """Profile one encoder under both metrics and check domination: each
    sum-rank row distance must sit at or below its Hamming counterpart."""
    sr = row_distance_profile(code, L, "sum_rank",
                              state_budget=state_budget,
                              max_inputs=max_inputs)
    hm = row_distance_profile(code, L, "hamming",
                              state_budget=state_budget,
                              max_inputs=max_inputs)
    per_order = []
    for a, b in zip(sr.d_row, hm.d_row):
        if a is None and b is None:
            per_order.append(None)
        elif a is None or b is None:
            per_order.append(False)
        else:
            per_order.append(a <= b)
    if sr.d_free is None and hm.d_free is None:
        d_free_ok = None
    elif sr.d_free is None or hm.d_free is None:
        d_free_ok = False
    else:
        d_free_ok = sr.d_free <= hm.d_free
    ok = all(fl is not False for fl in per_order) and d_free_ok is not False
    return MetricComparison(sum_rank=sr, hamming=hm,
                            per_order_ok=tuple(per_order),
                            d_free_ok=d_free_ok, ok=ok)
