"""Shared test utilities: an independent rank oracle and random generators."""

from __future__ import annotations

import random
from functools import lru_cache


@lru_cache(maxsize=None)
def get_field(q: int, s: int):
    from pumrank.field import make_field

    return make_field(q, s)


def rank_oracle(q: int, rows) -> int:
    """Rank over F_q by textbook Gauss-Jordan; independent of the package."""
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][c] % q), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][c], -1, q)
        work[rank] = [v * inv % q for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c] % q:
                f = work[r][c]
                work[r] = [(a - f * b) % q for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def random_vec(rng: random.Random, field, n: int) -> tuple[int, ...]:
    return tuple(rng.randrange(field.order) for _ in range(n))


def random_blocks(rng: random.Random, field, shape) -> tuple[tuple[int, ...], ...]:
    return tuple(random_vec(rng, field, n) for n in shape)


def random_matrix(rng: random.Random, field, r: int, c: int) -> tuple:
    return tuple(random_vec(rng, field, c) for _ in range(r))


def random_matrix_of_rank(rng: random.Random, field, r: int, c: int,
                          rank: int, max_tries: int = 10000) -> tuple:
    """Rejection-sample an r x c matrix over the field with the exact rank."""
    from pumrank.matrices import rank_ext

    if rank == 0:
        return tuple(tuple(0 for _ in range(c)) for _ in range(r))
    for _ in range(max_tries):
        m = random_matrix(rng, field, r, c)
        if rank_ext(field, m) == rank:
            return m
    raise RuntimeError(f"could not sample a rank-{rank} {r}x{c} matrix")
