"""Exact integer lattices: Hermite normal form, Z-span membership, Smith invariants.

Plain Python integers throughout, so there is no overflow and no rounding.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

__all__ = ["IntegerLattice", "hnf", "in_span", "solve_in_span", "smith_invariants"]


def _xgcd(a: int, b: int):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _comb(ca: dict, a: int, cb: dict, b: int) -> dict:
    """Sparse ``a*ca + b*cb``."""
    out = {}
    if a:
        for k, v in ca.items():
            out[k] = a * v
    if b:
        for k, v in cb.items():
            w = out.get(k, 0) + b * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return {k: v for k, v in out.items() if v}


class IntegerLattice:
    """Incrementally built sublattice of Z^n with coefficient tracking.

    Each basis row remembers how it was obtained from the inserted generators,
    so :meth:`solve` can express a target as an explicit integer combination
    of the generators.  Pass ``track=False`` to skip the bookkeeping.
    """

    def __init__(self, dim: int, track: bool = True):
        self.dim = dim
        self.track = track
        self._rows: dict = {}  # pivot column -> (row list, coefficient dict)

    def __len__(self):
        return len(self._rows)

    def add(self, vector: Sequence[int], tag: Hashable = None) -> None:
        if len(vector) != self.dim:
            raise ValueError(f"vector length {len(vector)} != {self.dim}")
        v = list(vector)
        cv = {tag: 1} if self.track else {}
        for p in range(self.dim):
            if not v[p]:
                continue
            row = self._rows.get(p)
            if row is None:
                if v[p] < 0:
                    v = [-x for x in v]
                    cv = {k: -c for k, c in cv.items()}
                self._rows[p] = (v, cv)
                return
            r, cr = row
            a, b = r[p], v[p]
            if b % a == 0:
                f = b // a
                v = [x - f * y for x, y in zip(v, r)]
                if self.track:
                    cv = _comb(cv, 1, cr, -f)
                continue
            g, x, y = _xgcd(a, b)
            # unimodular [[x, y], [-b/g, a/g]] applied to (r, v)
            new_r = [x * s + y * t for s, t in zip(r, v)]
            new_v = [(-b // g) * s + (a // g) * t for s, t in zip(r, v)]
            if self.track:
                new_cr = _comb(cr, x, cv, y)
                cv = _comb(cr, -b // g, cv, a // g)
            else:
                new_cr = {}
            self._rows[p] = (new_r, new_cr)
            v = new_v
        # reduced to zero: nothing to add

    def extend(self, vectors: Iterable[Sequence[int]], tags: Iterable[Hashable] = None):
        if tags is None:
            for v in vectors:
                self.add(v)
        else:
            for v, t in zip(vectors, tags):
                self.add(v, t)

    def solve(self, target: Sequence[int]):
        """Integer coefficients ``{tag: c}`` with ``sum c * gen = target``, or None."""
        t = list(target)
        coeffs: dict = {}
        for p in range(self.dim):
            if not t[p]:
                continue
            row = self._rows.get(p)
            if row is None:
                return None
            r, cr = row
            q, rem = divmod(t[p], r[p])
            if rem:
                return None
            t = [x - q * y for x, y in zip(t, r)]
            if self.track:
                coeffs = _comb(coeffs, 1, cr, q)
        return coeffs

    def contains(self, target: Sequence[int]) -> bool:
        return self.solve(target) is not None

    def basis(self):
        """Reduced row Hermite normal form (positive pivots, reduced entries above them)."""
        rows = [list(self._rows[p][0]) for p in sorted(self._rows)]
        pivots = sorted(self._rows)
        for i in range(len(rows)):
            p = pivots[i]
            for j in range(i):
                f = rows[j][p] // rows[i][p]
                if f:
                    rows[j] = [x - f * y for x, y in zip(rows[j], rows[i])]
        return [tuple(r) for r in rows]


def hnf(rows: Iterable[Sequence[int]], dim: int = None):
    rows = [list(r) for r in rows]
    if dim is None:
        if not rows:
            return []
        dim = len(rows[0])
    lat = IntegerLattice(dim, track=False)
    lat.extend(rows)
    return lat.basis()


def in_span(rows, target) -> bool:
    lat = IntegerLattice(len(target), track=False)
    lat.extend(rows)
    return lat.contains(target)


def solve_in_span(rows, target):
    """Integer vector ``c`` with ``sum c[i] * rows[i] = target``, or None."""
    rows = list(rows)
    lat = IntegerLattice(len(target))
    lat.extend(rows, range(len(rows)))
    sol = lat.solve(target)
    if sol is None:
        return None
    return [sol.get(i, 0) for i in range(len(rows))]


def smith_invariants(rows: Iterable[Sequence[int]], dim: int = None):
    """Invariant factors (d_1 | d_2 | ...) of the row space, zeros for free rank.

    The quotient ``Z^dim / span(rows)`` is ``prod Z/d_i``; entries equal to 1
    are dropped, 0 entries mean infinite cyclic factors.
    """
    m = [list(r) for r in rows if any(r)]
    if dim is None:
        dim = len(m[0]) if m else 0
    m = [list(r) for r in hnf(m, dim)]
    diag = []
    while m and m[0]:
        # move the smallest nonzero entry to (0, 0)
        entries = [(abs(v), i, j) for i, r in enumerate(m) for j, v in enumerate(r) if v]
        if not entries:
            break
        _, i, j = min(entries)
        m[0], m[i] = m[i], m[0]
        for r in m:
            r[0], r[j] = r[j], r[0]
        p = m[0][0]
        done = True
        for i in range(1, len(m)):
            q = m[i][0] // p
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[0])]
            if m[i][0]:
                done = False
        for j in range(1, len(m[0])):
            q = m[0][j] // p
            if q:
                for r in m:
                    r[j] -= q * r[0]
            if m[0][j]:
                done = False
        if not done:
            continue
        # pivot isolated; enforce divisibility of the rest
        bad = next(((i, j) for i in range(1, len(m)) for j in range(1, len(m[0])) if m[i][j] % p), None)
        if bad is not None:
            m[0] = [a + b for a, b in zip(m[0], m[bad[0]])]
            continue
        diag.append(abs(p))
        m = [r[1:] for r in m[1:]]
        m = [r for r in m if any(r)]
    free = dim - len(diag)
    return [d for d in diag if d != 1] + [0] * free
