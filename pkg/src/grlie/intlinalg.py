"""Exact integer linear algebra: Hermite and Smith normal forms, lattices.

Lattices are never saturated.  The quotient ``Z^N / L`` keeps its torsion,
which is the reason to work over the integers in the first place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple


@dataclass(frozen=True)
class IntegerMatrix:
    nrows: int
    ncols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(
            len(r) != self.ncols for r in self.entries
        ):
            raise ValueError("matrix dimensions inconsistent with entries")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    def tolist(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


def _as_matrix(m) -> IntegerMatrix:
    return m if isinstance(m, IntegerMatrix) else IntegerMatrix.from_rows(m)


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/t_1 + ... + Z/t_k`` with ``t_1 | t_2 | ... | t_k``."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(t < 2 for t in torsion):
            raise ValueError(f"torsion factors must be >= 2: {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion factors must form a divisibility chain: {torsion}")

    def __iter__(self):
        # allows ``rank, torsion = invariants``
        return iter((self.free_rank, list(self.torsion)))


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _axpy(vec: Dict[int, int], q: int, row: Dict[int, int]) -> None:
    # vec -= q * row, in place
    for c, x in row.items():
        v = vec.get(c, 0) - q * x
        if v:
            vec[c] = v
        else:
            vec.pop(c, None)


def _combine(s: int, u: Dict[int, int], t: int, v: Dict[int, int]) -> Dict[int, int]:
    # s*u + t*v
    out = {c: s * x for c, x in u.items()} if s else {}
    if t:
        _axpy(out, -t, v)
    return {c: x for c, x in out.items() if x}


class IntegerLattice:
    """Subgroup of ``Z^N`` kept in row-style Hermite normal form.

    Rows are stored sparsely, keyed by pivot column.  Pivots are positive
    and every entry sitting in another row's pivot column is reduced into
    ``[0, pivot)``, so the basis is canonical.
    """

    def __init__(self, ambient_rank: int, vectors: Iterable[Sequence[int]] = ()):
        if ambient_rank < 0:
            raise ValueError("ambient rank must be nonnegative")
        self.ambient_rank = ambient_rank
        self._rows: Dict[int, Dict[int, int]] = {}
        for v in vectors:
            self.add(v)

    def copy(self) -> "IntegerLattice":
        other = IntegerLattice(self.ambient_rank)
        other._rows = {j: dict(r) for j, r in self._rows.items()}
        return other

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def __eq__(self, other):
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self._rows == other._rows

    def __repr__(self):
        return f"IntegerLattice(N={self.ambient_rank}, rank={self.rank})"

    def _sparse(self, v: Sequence[int]) -> Dict[int, int]:
        if isinstance(v, dict):
            if any(not 0 <= c < self.ambient_rank for c in v):
                raise ValueError("sparse vector index out of range")
            return {c: int(x) for c, x in v.items() if x}
        if len(v) != self.ambient_rank:
            raise ValueError(
                f"vector of length {len(v)} in a lattice of ambient rank {self.ambient_rank}"
            )
        return {c: int(x) for c, x in enumerate(v) if x}

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def sparse_basis(self) -> List[Dict[int, int]]:
        return [dict(self._rows[j]) for j in sorted(self._rows)]

    def basis(self) -> List[Tuple[int, ...]]:
        out = []
        for j in sorted(self._rows):
            v = [0] * self.ambient_rank
            for c, x in self._rows[j].items():
                v[c] = x
            out.append(tuple(v))
        return out

    def matrix(self) -> IntegerMatrix:
        return IntegerMatrix(self.rank, self.ambient_rank, tuple(self.basis()))

    def __contains__(self, v) -> bool:
        vec = self._sparse(v)
        rows = self._rows
        while vec:
            j = min(vec)
            row = rows.get(j)
            if row is None:
                return False
            q, r = divmod(vec[j], row[j])
            if r:
                return False
            _axpy(vec, q, row)
        return True

    contains = __contains__

    def add(self, v) -> bool:
        """Insert ``v``; return False iff it was already a member."""
        vec = self._sparse(v)
        rows = self._rows
        changed = False
        while vec:
            j = min(vec)
            row = rows.get(j)
            if row is None:
                if vec[j] < 0:
                    vec = {c: -x for c, x in vec.items()}
                rows[j] = vec
                self._settle(j)
                return True
            a, b = row[j], vec[j]
            q, r = divmod(b, a)
            if not r:
                _axpy(vec, q, row)
                continue
            g, s, t = xgcd(a, b)
            rows[j] = _combine(s, row, t, vec)
            vec = _combine(a // g, vec, -(b // g), row)
            self._settle(j)
            changed = True
        return changed

    def extend(self, vectors: Iterable) -> bool:
        changed = False
        for v in vectors:
            changed |= self.add(v)
        return changed

    def _normalize(self, j: int, start: int) -> None:
        # reduce entries of row j lying in pivot columns > start
        rows = self._rows
        row = rows[j]
        cur = start
        while True:
            later = [c for c in row if c > cur and c in rows]
            if not later:
                return
            k = min(later)
            q = row[k] // rows[k][k]
            if q:
                _axpy(row, q, rows[k])
            cur = k

    def _settle(self, j: int) -> None:
        rows = self._rows
        self._normalize(j, j)
        pivot_row = rows[j]
        p = pivot_row[j]
        for i, row in rows.items():
            if i < j and j in row:
                q = row[j] // p
                if q:
                    _axpy(row, q, pivot_row)
                    self._normalize(i, j)

    def cokernel(self) -> AbelianInvariants:
        """Invariants of ``Z^N / L``."""
        rows = self._rows
        unit = {j for j, r in rows.items() if r[j] == 1}
        # unit pivot columns are zero in every other row, so each unit row
        # splits off a trivial summand
        rest = [j for j in sorted(rows) if j not in unit]
        if rest:
            cols = sorted({c for j in rest for c in rows[j]} - unit)
            pos = {c: i for i, c in enumerate(cols)}
            dense = []
            for j in rest:
                v = [0] * len(cols)
                for c, x in rows[j].items():
                    v[pos[c]] = x
                dense.append(v)
            factors = _snf_diagonal(dense)
        else:
            factors = []
        return AbelianInvariants(
            self.ambient_rank - self.rank, tuple(f for f in factors if f > 1)
        )


def hnf(m) -> Tuple[IntegerMatrix, int]:
    """Row-style Hermite normal form of the row span and its rank."""
    m = _as_matrix(m)
    lat = IntegerLattice(m.ncols, m.entries)
    return lat.matrix(), lat.rank


def _snf_diagonal(a: List[List[int]]) -> List[int]:
    # Smith form by elementary operations; pivot = entry of least |value|
    a = [list(r) for r in a]
    nr = len(a)
    nc = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for r in a:
                r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    ri, rt = a[i], a[t]
                    for c in range(t, nc):
                        ri[c] -= q * rt[c]
                    if ri[t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a[t:]:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder exists in row/column t: make it the pivot
                best = min(
                    [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
                )
                _, i, j = best
                a[t], a[i] = a[i], a[t]
                if j != t:
                    for r in a:
                        r[t], r[j] = r[j], r[t]
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for c in range(t, nc):
                rt[c] += rb[c]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def snf_invariants(m) -> List[int]:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    m = _as_matrix(m)
    if not m.nrows or not m.ncols:
        return []
    return _snf_diagonal(m.tolist())


def cokernel_invariants(ambient_rank: int, generators) -> AbelianInvariants:
    """Invariants of ``Z^N`` modulo the row span of ``generators``."""
    if isinstance(generators, IntegerMatrix):
        if generators.nrows and generators.ncols != ambient_rank:
            raise ValueError(
                f"generators have {generators.ncols} columns, expected {ambient_rank}"
            )
        rows = generators.entries
    else:
        rows = [tuple(r) for r in generators]
        for r in rows:
            if len(r) != ambient_rank:
                raise ValueError(f"generator of length {len(r)}, expected {ambient_rank}")
    factors = snf_invariants(IntegerMatrix(len(rows), ambient_rank, tuple(rows)))
    return AbelianInvariants(
        ambient_rank - len(factors), tuple(f for f in factors if f > 1)
    )


def lattice_insert(lat: IntegerLattice, v) -> Tuple[IntegerLattice, bool]:
    """Return a new lattice spanned by ``lat`` and ``v``, plus a changed flag."""
    out = lat.copy()
    changed = out.add(v)
    return out, changed


def lattice_contains(lat: IntegerLattice, v) -> bool:
    return v in lat
