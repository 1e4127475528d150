"""Independent reference implementations used by the tests.

None of these share code with the package: they are slow, direct and
written from the definitions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def det_fraction(rows: list[list[int]]) -> int:
    n = len(rows)
    a = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(det)


def minor_gcd_invariant_factors(rows: list[list[int]]) -> list[int]:
    """Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.

    Returns the whole diagonal up to the rank (units included).
    """
    if not rows or not rows[0]:
        return []
    r, c = len(rows), len(rows[0])
    out, prev = [], 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for ri in itertools.combinations(range(r), k):
            for ci in itertools.combinations(range(c), k):
                g = gcd(g, det_fraction([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def rational_rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    a = [[Fraction(v) for v in r] for r in rows]
    rank, col, n_cols = 0, 0, len(a[0])
    while rank < len(a) and col < n_cols:
        piv = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][col] != 0:
                f = a[r][col] / a[rank][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        col += 1
    return rank


def brute_has_primitive(generators: list[list[int]], coeff: int = 6) -> bool:
    """Search combinations with coefficients in [-coeff, coeff] for coordinate gcd 1.

    ``generators`` is a list of vectors (the spanning set of S).
    """
    if not generators:
        return False
    k = len(generators[0])
    for cs in itertools.product(range(-coeff, coeff + 1), repeat=len(generators)):
        v = [sum(c * g[i] for c, g in zip(cs, generators)) for i in range(k)]
        if gcd(*v) == 1:
            return True
    return False


def exterior_square_orders(orders: list[int]) -> list[int]:
    """Nontrivial invariant factors of Lambda^2 of Z_{m1} x ... x Z_{mk}.

    Presents G (x) G on symbols e_i (x) e_j, modulo m_i and m_j, and then
    imposes x (x) x = 0 for every element x of G by brute force.  The
    diagonal of the relation matrix is read off with the minor-gcd oracle.
    """
    k = len(orders)
    pairs = [(i, j) for i in range(k) for j in range(k)]
    col = {p: t for t, p in enumerate(pairs)}
    rel = []
    for (i, j) in pairs:
        for mod in (orders[i], orders[j]):
            r = [0] * len(pairs)
            r[col[(i, j)]] = mod
            rel.append(r)
    for x in itertools.product(*(range(m) for m in orders)):
        r = [0] * len(pairs)
        for i in range(k):
            for j in range(k):
                r[col[(i, j)]] += x[i] * x[j]
        rel.append(r)
    return _cokernel_torsion(rel, len(pairs))


def _cokernel_torsion(rel: list[list[int]], n: int) -> list[int]:
    """Invariant factors of Z^n / <rel>, which must be finite.

    Row-reduces to a triangular lattice basis, enumerates its coset
    representatives and recovers the structure from the counts
    |A[p^j]| = #{x : p^j x = 0}.
    """
    h = _triangular_basis(rel, n)
    reps = list(itertools.product(*(range(h[c][c]) for c in range(n))))

    def killed(k):
        return sum(1 for x in reps if _in_lattice(h, [k * v for v in x]))

    order = len(reps)
    factors = [1] * 64
    p = 2
    rest = order
    while rest > 1:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            j, prev = 1, 1
            while True:
                cnt = killed(p ** j)
                r = _ilog(cnt // prev, p)
                if r == 0:
                    break
                # r cyclic summands have order divisible by p^j
                for i in range(r):
                    factors[-1 - i] *= p
                prev = cnt
                j += 1
        p += 1
    return sorted(f for f in factors if f > 1)


def _ilog(x: int, p: int) -> int:
    r = 0
    while x > 1:
        assert x % p == 0
        x //= p
        r += 1
    return r


def _triangular_basis(rel: list[list[int]], n: int) -> list[list[int]]:
    rows = [r[:] for r in rel if any(r)]
    basis = []
    for c in range(n):
        while True:
            nz = [r for r in rows if r[c] != 0]
            if not nz:
                raise ValueError("quotient is infinite")
            piv = min(nz, key=lambda r: abs(r[c]))
            rest = []
            for r in rows:
                if r is piv:
                    continue
                q = r[c] // piv[c]
                rr = [a - q * b for a, b in zip(r, piv)]
                if any(rr):
                    rest.append(rr)
            if all(r[c] == 0 for r in rest):
                basis.append(piv if piv[c] > 0 else [-v for v in piv])
                rows = rest
                break
            rows = rest + [piv]
    return basis


def _in_lattice(h: list[list[int]], v: list[int]) -> bool:
    v = v[:]
    for c, row in enumerate(h):
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
        if v[c]:
            return False
    return True


def units(m: int) -> list[int]:
    return [u for u in range(1, m) if gcd(u, m) == 1] or [0]


def browning_by_closure(orders: list[int]) -> int:
    """|Z*_{m1} / <-1, u^(n-1)>| with the subgroup built by closure under products."""
    m1, n = orders[0], len(orders)
    us = units(m1)
    if m1 <= 2:
        return 1
    gens = {(-1) % m1} | {pow(u, n - 1, m1) for u in us}
    sub = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x * g) % m1
            if y not in sub:
                sub.add(y)
                frontier.append(y)
    return len(us) // len(sub)
