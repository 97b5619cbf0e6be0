"""Exact integral cohomology of finite complexes via Smith normal form.

All arithmetic is arbitrary-precision: intermediate entries in a Smith
reduction can outgrow machine words even when the input is tiny.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .exceptions import NotAComplex

DENSE_LIMIT = 4000 * 4000


class IntMatrix:
    """Sparse integer matrix with a fixed shape."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ValueError(f"entry ({r},{c}) outside {nrows}x{ncols}")
            if v:
                self.entries[(r, c)] = v

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(sorted(self.entries.items()))))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (r, k), v in self.entries.items():
            by_col.setdefault(k, []).append((r, v))
        out: dict[tuple[int, int], int] = {}
        for (k, c), w in other.entries.items():
            for r, v in by_col.get(k, ()):
                key = (r, c)
                out[key] = out.get(key, 0) + v * w
        return IntMatrix(self.nrows, other.ncols, out)

    def to_dense(self) -> list[list[int]]:
        if self.nrows * self.ncols > DENSE_LIMIT:
            raise ValueError("matrix too large to densify")
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def triplets(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, {len(self.entries)} nonzero)"


def smith_normal_form(m: IntMatrix) -> tuple[tuple[int, ...], int]:
    """Diagonal of the Smith normal form and the rank.

    Returns the positive invariant factors d_1 | d_2 | ... | d_r.  Unit
    pivots are peeled off sparsely first; whatever survives is handled by
    the classical dense reduction, which is tiny in practice for the
    smoothing-cube and face complexes this package produces.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)

    # lazy min-fill heap of unit-pivot candidates; stale entries are skipped
    # (pivot order only affects speed, the invariant factors are invariant)
    heap: list[tuple[int, int, int]] = []

    def offer(r: int, row: dict[int, int]):
        for c, v in row.items():
            if v == 1 or v == -1:
                heapq.heappush(heap, ((len(row) - 1) * (len(cols[c]) - 1), r, c))

    for r, row in rows.items():
        offer(r, row)

    ones = 0
    while heap:
        fill, pr, pc = heapq.heappop(heap)
        prow = rows.get(pr)
        if prow is None:
            continue
        pval = prow.get(pc)
        if pval is None or (pval != 1 and pval != -1):
            continue
        actual = (len(prow) - 1) * (len(cols[pc]) - 1)
        if actual > fill:  # stale estimate: requeue at its true cost
            heapq.heappush(heap, (actual, pr, pc))
            continue
        rows.pop(pr)
        for c in prow:
            cols[c].discard(pr)
        for r in cols.get(pc, ()):
            row = rows[r]
            factor = row[pc] * pval  # pval is +-1
            for c, v in prow.items():
                if c == pc:
                    continue
                newv = row.get(c, 0) - factor * v
                if newv:
                    row[c] = newv
                    cols[c].add(r)
                else:
                    row.pop(c, None)
                    cols[c].discard(r)
            del row[pc]
            if row:
                offer(r, row)
            else:
                del rows[r]
        cols.pop(pc, None)
        ones += 1

    # densify the residual (no unit entries left)
    rmap = sorted(rows)
    cmap = sorted({c for row in rows.values() for c in row})
    rindex = {r: i for i, r in enumerate(rmap)}
    cindex = {c: i for i, c in enumerate(cmap)}
    dense = [[0] * len(cmap) for _ in rmap]
    for r, row in rows.items():
        for c, v in row.items():
            dense[rindex[r]][cindex[c]] = v
    residual = _dense_snf(dense)

    diag = [1] * ones + list(residual)
    diag = _divisibility_chain(diag)
    return tuple(diag), len(diag)


def _dense_snf(mat: list[list[int]]) -> list[int]:
    """Classical Smith reduction on a dense block; returns positive diagonal."""
    if not mat or not mat[0]:
        return []
    nr, nc = len(mat), len(mat[0])
    diag = []
    s = 0
    while s < min(nr, nc):
        best = None
        for i in range(s, nr):
            for j in range(s, nc):
                v = mat[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        bi, bj, _ = best
        mat[s], mat[bi] = mat[bi], mat[s]
        for row in mat:
            row[s], row[bj] = row[bj], row[s]
        while True:
            # clear the pivot column
            restart = False
            for i in range(s + 1, nr):
                if mat[i][s]:
                    q = mat[i][s] // mat[s][s]
                    if q:
                        mat[i] = [a - q * b for a, b in zip(mat[i], mat[s])]
                    if mat[i][s]:
                        mat[s], mat[i] = mat[i], mat[s]
                        restart = True
                        break
            if restart:
                continue
            # clear the pivot row
            for j in range(s + 1, nc):
                if mat[s][j]:
                    q = mat[s][j] // mat[s][s]
                    if q:
                        for row in mat:
                            row[j] -= q * row[s]
                    if mat[s][j]:
                        for row in mat:
                            row[s], row[j] = row[j], row[s]
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the rest of the block
            offender = None
            p = mat[s][s]
            for i in range(s + 1, nr):
                for j in range(s + 1, nc):
                    if mat[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            mat[s] = [a + b for a, b in zip(mat[s], mat[offender])]
        diag.append(abs(mat[s][s]))
        s += 1
    return diag


def _divisibility_chain(diag: list[int]) -> list[int]:
    """Normalize a diagonal multiset into d_1 | d_2 | ... order."""
    ones = sum(1 for d in diag if d == 1)
    rest = sorted(d for d in diag if d != 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                a, b = rest[i], rest[j]
                if b % a:
                    g = gcd(a, b)
                    rest[i], rest[j] = g, a * b // g
                    changed = True
        if changed:
            rest.sort()
    return [1] * ones + rest


@dataclass(frozen=True)
class GradedAbelianGroup:
    """Free rank and torsion coefficients per degree; zero degrees omitted.

    Equality of these normal forms is equality of graded abelian groups:
    torsion coefficients are kept in divisibility order, so no further
    isomorphism search is ever needed.
    """

    groups: tuple[tuple[int, int, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, data: dict[int, tuple[int, tuple[int, ...]]]) -> "GradedAbelianGroup":
        items = []
        for deg in sorted(data):
            betti, torsion = data[deg]
            torsion = tuple(t for t in torsion if t > 1)
            if betti or torsion:
                items.append((deg, betti, torsion))
        return cls(tuple(items))

    @classmethod
    def zero(cls) -> "GradedAbelianGroup":
        return cls(())

    def as_dict(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return {deg: (b, t) for deg, b, t in self.groups}

    def betti(self, degree: int) -> int:
        for deg, b, _ in self.groups:
            if deg == degree:
                return b
        return 0

    def torsion(self, degree: int) -> tuple[int, ...]:
        for deg, _, t in self.groups:
            if deg == degree:
                return t
        return ()

    def degrees(self) -> tuple[int, ...]:
        return tuple(deg for deg, _, _ in self.groups)

    def is_zero(self) -> bool:
        return not self.groups

    def euler_characteristic(self) -> int:
        return sum((-1) ** deg * b for deg, b, _ in self.groups)

    def total_rank(self) -> int:
        return sum(b for _, b, _ in self.groups)

    def shift(self, offset: int) -> "GradedAbelianGroup":
        return GradedAbelianGroup(
            tuple((deg + offset, b, t) for deg, b, t in self.groups)
        )

    def to_json_dict(self) -> dict:
        return {
            str(deg): {"betti": b, "torsion": list(t)} for deg, b, t in self.groups
        }

    def __str__(self):
        if not self.groups:
            return "0"
        parts = []
        for deg, b, t in self.groups:
            summands = []
            if b == 1:
                summands.append("Z")
            elif b > 1:
                summands.append(f"Z^{b}")
            summands.extend(f"Z/{k}" for k in t)
            parts.append(f"i={deg}: " + " + ".join(summands))
        return "; ".join(parts)


class BigradedComplex:
    """A finite complex of free abelian groups in one quantum grading.

    gens[i] lists the generator keys in homological degree i; mats[i] maps
    degree i into degree i+1 and has shape (dim(i+1), dim(i)).  The zero
    composition law is asserted on construction, never sampled.
    """

    def __init__(self, j: int, gens: dict[int, tuple], mats: dict[int, IntMatrix]):
        self.j = j
        self.gens = {i: tuple(g) for i, g in gens.items() if g}
        self.mats = {}
        degs = sorted(self.gens)
        self._min_degree = degs[0] if degs else 0
        self._max_degree = degs[-1] if degs else -1
        for i, m in mats.items():
            expected = (self.dim(i + 1), self.dim(i))
            if (m.nrows, m.ncols) != expected:
                raise ValueError(
                    f"differential at degree {i} has shape {(m.nrows, m.ncols)}, "
                    f"expected {expected}"
                )
            if not m.is_zero():
                self.mats[i] = m
        for i in sorted(self.mats):
            nxt = self.mats.get(i + 1)
            if nxt is not None and not (nxt @ self.mats[i]).is_zero():
                raise NotAComplex(f"d_{i + 1} composed with d_{i} is nonzero")
        self._validated = True

    @property
    def degree_range(self) -> tuple[int, int]:
        """Smallest and largest degree carrying generators (min > max if none)."""
        return self._min_degree, self._max_degree

    def degrees(self) -> range:
        return range(self._min_degree, self._max_degree + 1)

    def dim(self, i: int) -> int:
        return len(self.gens.get(i, ()))

    def matrix(self, i: int) -> IntMatrix:
        m = self.mats.get(i)
        if m is None:
            return IntMatrix.zero(self.dim(i + 1), self.dim(i))
        return m

    def total_dim(self) -> int:
        return sum(len(g) for g in self.gens.values())

    def to_json_dict(self) -> dict:
        return {
            "quantum_grading": self.j,
            "generators": {
                str(i): [list(k) if isinstance(k, tuple) else k for k in g]
                for i, g in sorted(self.gens.items())
            },
            "differentials": {
                str(i): [list(t) for t in m.triplets()]
                for i, m in sorted(self.mats.items())
            },
        }


def cohomology(complex: BigradedComplex) -> GradedAbelianGroup:
    """Degree-wise kernel-mod-image of a validated complex.

    The free rank in degree i is nullity(d_i) - rank(d_{i-1}); the torsion
    in degree i is the set of invariant factors of d_{i-1} that exceed 1.
    """
    if not getattr(complex, "_validated", False):
        for i in sorted(complex.mats):
            nxt = complex.mats.get(i + 1)
            if nxt is not None and not (nxt @ complex.mats[i]).is_zero():
                raise NotAComplex(f"d_{i + 1} composed with d_{i} is nonzero")
    snf_cache: dict[int, tuple[tuple[int, ...], int]] = {}

    def snf(i: int) -> tuple[tuple[int, ...], int]:
        if i not in snf_cache:
            m = complex.mats.get(i)
            snf_cache[i] = ((), 0) if m is None else smith_normal_form(m)
        return snf_cache[i]

    lo, hi = complex.degree_range
    data: dict[int, tuple[int, tuple[int, ...]]] = {}
    for i in range(lo, hi + 1):
        _, rank_out = snf(i)
        below_diag, rank_in = snf(i - 1)
        betti = complex.dim(i) - rank_out - rank_in
        torsion = tuple(t for t in below_diag if t > 1)
        if betti < 0:
            raise AssertionError("negative Betti number: broken complex")
        if betti or torsion:
            data[i] = (betti, torsion)
    return GradedAbelianGroup.from_dict(data)
