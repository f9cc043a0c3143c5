"""Membership of integer vectors in a lattice spanned by tagged generators.

The engine keeps an incremental row echelon basis (Hermite-style: one pivot
per column, rows ordered by pivot) over a fixed coordinate universe, tracking
how each basis row was combined from the generators.  A membership query
either returns the explicit integer combination of generators, or a linear
functional u with modulus d such that u.g = 0 mod d for every generator while
u.target != 0 mod d (d = 0 means equality over the integers).  Both witness
kinds replay by plain dot products, independent of the reduction that found
them.

Entries are kept in 64-bit arrays with magnitude guards; tripping a guard
rebuilds the basis with arbitrary-precision entries, so results are always
exact.
"""

from bisect import bisect_left
from fractions import Fraction

import numpy as np

_GUARD = 1 << 52


class LatticeOverflow(Exception):
    pass


def _xgcd(a, b):
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class Membership:
    __slots__ = ("member", "combination", "functional", "modulus")

    def __init__(self, member, combination=None, functional=None, modulus=None):
        self.member = member
        self.combination = combination      # {tag: coefficient}
        self.functional = functional        # {coordinate: int}
        self.modulus = modulus              # int, 0 = over the integers

    def __bool__(self):
        return self.member


class IntegerLattice:
    def __init__(self, coords, track_combinations=True):
        self.coords = list(coords)
        if len(set(self.coords)) != len(self.coords):
            raise ValueError("duplicate coordinates")
        self.pos = {key: i for i, key in enumerate(self.coords)}
        self.n = len(self.coords)
        self.rows = []          # echelon rows, ordered by pivot column
        self.pivot_cols = []    # ascending
        self.combs = []         # generator-coefficient rows, same order
        self.gen_tags = []
        self.gen_vectors = []   # sparse dicts, for witness verification
        self.exact = False      # arbitrary-precision entries when True
        self.track = track_combinations
        self._cap = 0           # allocated length of combination rows

    @property
    def rank(self):
        return len(self.rows)

    def _dtype(self):
        return object if self.exact else np.int64

    def _dense(self, sparse):
        vec = np.zeros(self.n, dtype=self._dtype())
        for key, c in sparse.items():
            vec[self.pos[key]] = c
        return vec

    def _unit_comb(self, index):
        if not self.track:
            return None
        if index >= self._cap:
            self._cap = max(16, 2 * self._cap, index + 1)
            self.combs = [self._pad(c) for c in self.combs]
        comb = np.zeros(self._cap, dtype=self._dtype())
        comb[index] = 1
        return comb

    def _pad(self, comb):
        out = np.zeros(self._cap, dtype=self._dtype())
        out[: len(comb)] = comb
        return out

    def _go_exact(self):
        """Rebuild with arbitrary-precision entries after an overflow."""
        self.exact = True
        self.rows = []
        self.pivot_cols = []
        self.combs = []
        self._cap = max(self._cap, len(self.gen_vectors))
        for index, sparse in enumerate(self.gen_vectors):
            self._reduce_insert(self._dense(sparse), self._unit_comb(index))

    def add_generator(self, sparse, tag):
        """Insert a generator given as a {coordinate: coefficient} dict."""
        for key in sparse:
            if key not in self.pos:
                raise KeyError(f"coordinate {key!r} outside the universe")
        index = len(self.gen_tags)
        self.gen_tags.append(tag)
        self.gen_vectors.append({k: int(c) for k, c in sparse.items() if c})
        try:
            self._reduce_insert(self._dense(sparse), self._unit_comb(index))
        except LatticeOverflow:
            self._go_exact()

    def _guard(self, *bounds):
        if not self.exact and max(bounds) > _GUARD:
            raise LatticeOverflow("entry guard exceeded")

    @staticmethod
    def _absmax(vec):
        if vec is None:
            return 0
        return int(np.abs(vec).max(initial=0))

    def _reduce_insert(self, vec, comb):
        nz = np.nonzero(vec)[0]
        while nz.size:
            j = int(nz[0])
            k = bisect_left(self.pivot_cols, j)
            if k < len(self.pivot_cols) and self.pivot_cols[k] == j:
                row = self.rows[k]
                rcomb = self.combs[k] if self.track else None
                a = int(row[j])
                b = int(vec[j])
                size = max(self._absmax(row), self._absmax(rcomb))
                vsize = max(self._absmax(vec), self._absmax(comb))
                if b % a == 0:
                    q = b // a
                    self._guard(abs(q) * size + vsize)
                    vec -= q * row
                    if self.track:
                        if len(comb) < len(rcomb):
                            comb = self._pad(comb)
                        elif len(rcomb) < len(comb):
                            rcomb = self.combs[k] = self._pad(rcomb)
                        comb -= q * rcomb
                else:
                    x, y, g = _xgcd(a, b)
                    self._guard(
                        abs(x) * size + abs(y) * vsize,
                        abs(a // g) * vsize + abs(b // g) * size,
                    )
                    new_row = x * row + y * vec
                    new_vec = (a // g) * vec - (b // g) * row
                    if self.track:
                        if len(comb) < len(rcomb):
                            comb = self._pad(comb)
                        elif len(rcomb) < len(comb):
                            rcomb = self.combs[k] = self._pad(rcomb)
                        new_rcomb = x * rcomb + y * comb
                        new_comb = (a // g) * comb - (b // g) * rcomb
                        self.combs[k] = new_rcomb
                        comb = new_comb
                    self.rows[k] = new_row
                    vec = new_vec
            else:
                self.rows.insert(k, vec.copy())
                self.pivot_cols.insert(k, j)
                self.combs.insert(
                    k, comb.copy() if self.track else None
                )
                return
            nz = np.nonzero(vec)[0]

    def membership(self, sparse):
        """Decide membership of a sparse vector, with a replayable witness."""
        outside = [k for k, c in sparse.items() if c and k not in self.pos]
        if outside:
            key = sorted(outside)[0]
            return Membership(False, functional={key: 1}, modulus=0)
        try:
            return self._membership(sparse)
        except LatticeOverflow:
            self._go_exact()
            return self._membership(sparse)

    def _membership(self, sparse):
        vec = self._dense(sparse)
        comb = (
            np.zeros(self._cap, dtype=self._dtype()) if self.track else None
        )
        fail = None
        for k, j in enumerate(self.pivot_cols):
            b = int(vec[j])
            if not b:
                continue
            a = int(self.rows[k][j])
            if b % a:
                fail = ("pivot", k)
                break
            q = b // a
            self._guard(
                abs(q) * max(
                    self._absmax(self.rows[k]),
                    self._absmax(self.combs[k] if self.track else None),
                )
                + max(self._absmax(vec), self._absmax(comb))
            )
            vec -= q * self.rows[k]
            if self.track:
                rcomb = self.combs[k]
                if len(rcomb) < len(comb):
                    rcomb = self.combs[k] = self._pad(rcomb)
                comb += q * rcomb
        if fail is None:
            nz = np.nonzero(vec)[0]
            if not nz.size:
                tags = None
                if self.track:
                    tags = {
                        self.gen_tags[g]: int(c)
                        for g, c in enumerate(comb.tolist())
                        if c
                    }
                return Membership(True, combination=tags)
            fail = ("free", int(nz[0]))
        functional, modulus = self._functional(fail)
        self._check_functional(sparse, functional, modulus)
        return Membership(False, functional=functional, modulus=modulus)

    def _functional(self, fail):
        """Build the annihilating functional for a failed reduction."""
        if fail[0] == "pivot":
            k = fail[1]
            extra = self.pivot_cols[k]
            upto = k
            pivot_value = int(self.rows[k][extra])
        else:
            extra = fail[1]
            upto = len(self.rows)
            pivot_value = 0
        u = {extra: Fraction(1)}
        for l in range(upto - 1, -1, -1):
            row = self.rows[l]
            col = self.pivot_cols[l]
            s = Fraction(int(row[extra]))
            for l2 in range(l + 1, upto):
                c2 = int(row[self.pivot_cols[l2]])
                if c2:
                    s += u[self.pivot_cols[l2]] * c2
            u[col] = -s / int(row[col])
        denom = 1
        for value in u.values():
            denom = denom * value.denominator // _gcd(
                denom, value.denominator
            )
        functional = {
            self.coords[j]: int(value * denom)
            for j, value in u.items()
            if value
        }
        modulus = abs(pivot_value) * denom if pivot_value else 0
        return functional, modulus

    def _check_functional(self, target_sparse, functional, modulus):
        def pairing(sparse):
            return sum(functional.get(k, 0) * c for k, c in sparse.items())

        for gen in self.gen_vectors:
            v = pairing(gen)
            ok = v == 0 if modulus == 0 else v % modulus == 0
            if not ok:
                raise AssertionError("functional fails on a generator")
        t = pairing(target_sparse)
        bad = t == 0 if modulus == 0 else t % modulus == 0
        if bad:
            raise AssertionError("functional does not separate the target")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def combination_sum(combination, expand):
    """Sum of coefficient * expand(tag) as a sparse dict, for replays."""
    total = {}
    for tag, coeff in combination.items():
        for key, c in expand(tag).items():
            c0 = total.get(key, 0) + coeff * c
            if c0:
                total[key] = c0
            else:
                del total[key]
    return total
