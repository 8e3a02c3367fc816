"""Field arithmetic tests.

Frozen expected values are hand-computed (F_4, F_8, F_9 tables).  The modulus
scan is checked against an independent irreducibility criterion (x^(q^s) = x
mod m plus gcd conditions at the maximal proper divisors of s), implemented
here from scratch so it shares no code with the trial-division path.
"""

from __future__ import annotations

import random

import pytest

from pumrank.field import (
    ExtField,
    default_modulus,
    expand,
    find_normal_element,
    is_irreducible,
    is_prime,
    make_field,
)

# ---------------------------------------------------------------------------
# independent polynomial toolbox (oracle; deliberately re-implemented)


def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmod(q, num, den):
    num = _ptrim([c % q for c in num])
    den = _ptrim([c % q for c in den])
    inv_lead = pow(den[-1], -1, q)
    d = len(den) - 1
    while len(num) - 1 >= d and num:
        f = (num[-1] * inv_lead) % q
        shift = len(num) - 1 - d
        for i in range(d + 1):
            num[shift + i] = (num[shift + i] - f * den[i]) % q
        _ptrim(num)
    return num


def _pmulmod(q, a, b, m):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % q
    return _pmod(q, prod, m)


def _ppowmod(q, base, e, m):
    result = [1]
    base = _pmod(q, base, m)
    while e:
        if e & 1:
            result = _pmulmod(q, result, base, m)
        base = _pmulmod(q, base, base, m)
        e >>= 1
    return result


def _pgcd(q, a, b):
    a = _ptrim([c % q for c in a])
    b = _ptrim([c % q for c in b])
    while b:
        a, b = b, _pmod(q, a, b)
    return a


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rabin_irreducible(q, m):
    """Degree-s monic m is irreducible iff x^(q^s) = x (mod m) and, for every
    prime p | s, gcd(x^(q^(s/p)) - x, m) is constant."""
    s = len(m) - 1
    x = _pmod(q, [0, 1], m)
    t = list(x)
    for _ in range(s):
        t = _ppowmod(q, t, q, m)
    pad = max(len(t), len(x))
    if _ptrim([(a - b) % q for a, b in
               zip(t + [0] * pad, x + [0] * pad)]):
        return False
    for p in _prime_divisors(s):
        t = list(x)
        for _ in range(s // p):
            t = _ppowmod(q, t, q, m)
        pad = max(len(t), len(x))
        diff = [(a - b) % q for a, b in zip(t + [0] * pad, x + [0] * pad)]
        if len(_pgcd(q, diff, m)) - 1 > 0:
            return False
    return True


# ---------------------------------------------------------------------------


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(49)
    assert is_prime(97)


def test_default_modulus_small_frozen():
    # x^2 + x + 1 is the only irreducible quadratic over F_2
    assert default_modulus(2, 2) == (1, 1, 1)
    # x^3 + x + 1 beats x^3 + x^2 + 1 in encoding order
    assert default_modulus(2, 3) == (1, 1, 0, 1)
    # degree 1: the scan starts at x itself
    assert default_modulus(2, 1) == (0, 1)
    # x^2 + 1 has no root mod 3, and lower encodings are reducible
    assert default_modulus(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("q,s", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6),
                                 (2, 12), (3, 2), (3, 3), (5, 2)])
def test_default_modulus_against_independent_criterion(q, s):
    m = default_modulus(q, s)
    assert len(m) == s + 1 and m[-1] == 1
    assert rabin_irreducible(q, list(m))
    # and every smaller monic candidate must be reducible
    for enc in range(q**s, sum(c * q**i for i, c in enumerate(m))):
        digits = []
        e = enc
        while e:
            e, d = divmod(e, q)
            digits.append(d)
        assert not rabin_irreducible(q, digits)


def test_is_irreducible_agrees_with_criterion_exhaustive():
    for q in (2, 3):
        for s in (2, 3, 4):
            for enc in range(q**s, 2 * q**s):
                digits = []
                e = enc
                while e:
                    e, d = divmod(e, q)
                    digits.append(d)
                assert is_irreducible(q, digits) == rabin_irreducible(q, digits)


def test_field_validation_errors():
    with pytest.raises(ValueError):
        make_field(4, 2)
    with pytest.raises(ValueError):
        make_field(1, 2)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        make_field(2, 2, (1, 0, 1))  # (x+1)^2
    with pytest.raises(ValueError):
        make_field(2, 2, (1, 1, 1, 1))  # wrong degree
    with pytest.raises(ValueError):
        make_field(2, 2, (1, 1, 0))  # not monic
    with pytest.raises(ValueError):
        make_field(3, 2, (1, 3, 1))  # coefficient out of range
    make_field(2, 2, (1, 1, 1))  # and the good one goes through


def test_f4_hand_tables():
    f = make_field(2, 2, (1, 1, 1))
    a = 2  # the class of x
    assert f.mul(a, a) == 3          # x^2 = x + 1
    assert f.mul(a, 3) == 1          # x^3 = 1
    assert f.add(a, 3) == 1
    assert f.add(1, 1) == 0
    assert f.inv(a) == 3
    assert f.inv(3) == a
    assert f.pow(a, 3) == 1
    assert f.coeffs(3) == (1, 1)
    assert f.element((1, 1)) == 3


def test_f8_hand_values():
    f = make_field(2, 3)             # x^3 + x + 1
    a = 2
    assert f.mul(a, 4) == 3          # x * x^2 = x + 1
    assert f.pow(a, 7) == 1
    assert f.inv(a) == 5             # x^6 = x^2 + 1
    assert f.mul(a, 5) == 1


def test_f9_hand_values():
    f = make_field(3, 2)             # x^2 + 1, so x^2 = 2
    x = 3
    assert f.mul(x, x) == 2
    assert f.add(4, 8) == 0          # (1+x) + (2+2x) = 0
    assert f.neg(5) == 7             # -(2+x) = 1+2x
    assert f.inv(x) == 6             # x * 2x = 2x^2 = 4 = 1
    assert f.sub(0, x) == f.neg(x)


def test_element_range_checks():
    f = make_field(2, 3)
    with pytest.raises(ValueError):
        f.add(8, 1)
    with pytest.raises(ValueError):
        f.mul(1, -1)
    with pytest.raises(ValueError):
        f.coeffs(9)
    with pytest.raises(ValueError):
        f.element((2, 0, 0))
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (2, 6), (3, 2), (5, 2)])
def test_field_axioms_random(q, s):
    f = make_field(q, s)
    rng = random.Random(17 * q + s)
    for _ in range(200):
        x, y, z = (rng.randrange(f.order) for _ in range(3))
        assert f.add(x, y) == f.add(y, x)
        assert f.mul(x, y) == f.mul(y, x)
        assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        assert f.add(x, f.neg(x)) == 0
        assert f.mul(x, 1) == x
        if x:
            assert f.mul(x, f.inv(x)) == 1


@pytest.mark.parametrize("q,s", [(2, 3), (2, 6), (3, 2)])
def test_frobenius_is_qth_power(q, s):
    f = make_field(q, s)
    rng = random.Random(s + 100 * q)
    for _ in range(100):
        x = rng.randrange(f.order)
        y = rng.randrange(f.order)
        assert f.frobenius(x) == f.pow(x, q)
        i = rng.randrange(0, 2 * s)
        # direct-exponentiation oracle, no matrix involved
        assert f.frobenius(x, i) == f.pow(x, q**i)
        assert f.frobenius(f.add(x, y), i) == f.add(f.frobenius(x, i),
                                                    f.frobenius(y, i))
    assert all(f.frobenius(x, s) == x for x in range(min(f.order, 64)))
    assert all(f.frobenius(x, 0) == x for x in range(min(f.order, 64)))


def test_frobenius_composition():
    f = make_field(2, 6)
    rng = random.Random(7)
    for _ in range(50):
        x = rng.randrange(f.order)
        i, j = rng.randrange(12), rng.randrange(12)
        assert f.frobenius(f.frobenius(x, i), j) == f.frobenius(x, i + j)


def test_normal_element_frozen_small():
    assert find_normal_element(make_field(2, 1)) == 1
    # F_4: conjugates of x are {x, x+1}, independent
    assert find_normal_element(make_field(2, 2)) == 2
    # F_8: x is not normal ({x, x^2, x^2+x} is rank 2), x+1 is
    assert find_normal_element(make_field(2, 3)) == 3


def _rank_mod(q, rows):
    """Test-local rank over F_q (oracle; independent of package internals)."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] % q), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, q)
        rows[rank] = [v * inv % q for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % q:
                fct = rows[r][c]
                rows[r] = [(a - fct * b) % q for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("q,s", [(2, 6), (2, 12), (3, 3)])
def test_normal_element_conjugates_form_basis(q, s):
    f = make_field(q, s)
    b = find_normal_element(f)
    conj = [f.frobenius(b, i) for i in range(s)]
    assert _rank_mod(q, [f.coeffs(c) for c in conj]) == s


def test_expand_polynomial_basis_is_coefficients():
    f = make_field(2, 4)
    v = (1, 2, 4, 8)  # the basis monomials
    mat = expand(f, v)
    assert mat == tuple(
        tuple(1 if r == c else 0 for c in range(4)) for r in range(4))
    assert expand(f, (0, 0)) == ((0, 0), (0, 0), (0, 0), (0, 0))


def test_expand_custom_basis_roundtrip():
    f = make_field(2, 6)
    b = find_normal_element(f)
    basis = tuple(f.frobenius(b, i) for i in range(6))
    rng = random.Random(99)
    v = tuple(rng.randrange(f.order) for _ in range(5))
    mat = expand(f, v, basis)
    for j in range(5):
        acc = 0
        for r in range(6):
            if mat[r][j]:
                acc = f.add(acc, basis[r])
        assert acc == v[j]


def test_expand_rejects_bad_basis():
    f = make_field(2, 3)
    with pytest.raises(ValueError):
        expand(f, (1,), basis=(1, 2))  # wrong length
    with pytest.raises(ValueError):
        expand(f, (1,), basis=(1, 2, 3))  # 3 = 1 + 2, dependent


def test_field_equality_and_determinism():
    f1 = make_field(2, 6)
    f2 = make_field(2, 6)
    assert f1 == f2 and hash(f1) == hash(f2)
    assert f1.modulus == f2.modulus
    assert find_normal_element(f1) == find_normal_element(f2)
    assert f1 != make_field(2, 3)


def test_coeffs_element_roundtrip():
    f = make_field(3, 3)
    rng = random.Random(5)
    for _ in range(100):
        x = rng.randrange(f.order)
        assert f.element(f.coeffs(x)) == x
