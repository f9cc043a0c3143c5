"""The degree-4 obstruction class and its certificate machinery.

`obstruction_value` assembles the signed sum of the fourfold cup power of the
comparison cochain over the 24 top cells, expanded in the alpha-tensor basis.
`reduce_full_ring` re-expands it over group-element tensors, where the four
relation kinds act by translation, and searches for an explicit integer
combination of relation vectors summing to it (the expected outcome is zero
with a witness).  `finite_quotient_test` pushes the value into a finite
metacyclic quotient where the relation lattice has finite rank and an
annihilating functional is a sound certificate of nonvanishing; the grid
search tries a fixed family of quotients and coefficient moduli under a
budget.  Windowed searches never report "nonzero": only finite quotients can.
"""

import time
from dataclasses import dataclass
from itertools import product as iproduct

from .certificates import (
    inconclusive_certificate,
    nonzero_certificate,
    zero_certificate,
)
from .cohomology import cf_one_cochain, power4
from .groupring import TensorElement
from .lattice import IntegerLattice
from .quotients import QuotientGroup, quotient_membership
from .relations import (
    KIND_PAIR,
    KIND_SIGN,
    RELATION_KINDS,
    alpha_relation_vector,
    alpha_tensor_to_group,
    group_relation_vector,
    group_tensor_act,
)
from . import tables


def obstruction_value(XX):
    """Signed sum of the fourfold cup power over the top cells, in the
    alpha-tensor basis."""
    f4 = power4(cf_one_cochain(XX), XX)
    total = TensorElement.zero()
    for j in range(1, len(XX.cells[4]) + 1):
        v = f4(j)
        if v:
            total = total + (v if tables.epsilon(j) == 1 else v.scale(-1))
    return total


@dataclass(frozen=True)
class RelationVector:
    kind: str
    seed: tuple
    tensor: TensorElement


def relation_generators(window, max_seeds=1_000_000):
    """All four relation kinds on every alpha-tensor seed whose expansion
    stays inside the exponent window.  Only sensible for small windows; the
    solvers discover seeds from target supports instead of enumerating."""
    indices = [
        (m, n)
        for m in range(-window, window + 1)
        for n in range(-window, window + 1)
        if (m, n) != (0, 0)
    ]
    if len(indices) ** 4 > max_seeds:
        raise ValueError(
            f"window {window} would enumerate {len(indices) ** 4} seeds; "
            "use the support-driven solvers instead"
        )
    out = []
    for kind in RELATION_KINDS:
        for seed in iproduct(indices, repeat=4):
            vec = alpha_relation_vector(kind, seed)
            if vec and all(
                abs(m) <= window and abs(n) <= window
                for key in vec.terms
                for m, n in key
            ):
                out.append(RelationVector(kind, seed, vec))
    return out


# -- reduction over group-element tensors -------------------------------------

def _tuple_in_window(key, window):
    return all(abs(g[0]) <= window and abs(g[1]) <= window for g in key)


def _act_inverse(kind, key):
    g, h = KIND_PAIR[kind]
    ginv = g.inverse()
    return tuple(ginv * x * h for x in key)


class _Components:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _grow_region(sources, max_depth, window, node_budget):
    """Breadth-first closure of group-tuple sources under relation steps.

    Returns (visited, edges, rounds_used); stops early once another round no
    longer merges components of the sources.
    """
    visited = set(sources)
    frontier = sorted(visited)
    edges = set()
    comp = _Components()

    def consider(kind, seed, u, v):
        edges.add((kind, seed))
        comp.union(u, v)

    def source_components():
        return len({comp.find(s) for s in sources})

    rounds = 0
    prev_components = source_components()
    for depth in range(max_depth):
        new = []
        for t in frontier:
            for kind in RELATION_KINDS:
                fwd = group_tensor_act(kind, t)
                if _tuple_in_window(fwd, window):
                    consider(kind, t, t, fwd)
                    if fwd not in visited:
                        visited.add(fwd)
                        new.append(fwd)
                back = _act_inverse(kind, t)
                if _tuple_in_window(back, window):
                    consider(kind, back, back, t)
                    if back not in visited:
                        visited.add(back)
                        new.append(back)
            if len(visited) > node_budget:
                return visited, edges, rounds
        rounds = depth + 1
        frontier = sorted(set(new))
        cur = source_components()
        if cur == prev_components and depth >= 1:
            break
        prev_components = cur
        if not frontier:
            break
    return visited, edges, rounds


def reduce_full_ring(value, window=8, max_depth=10, node_budget=200_000,
                     question="full-ring-reduction"):
    """Search for the value as an integer combination of relation vectors
    over group-element tensors.

    Succeeding yields a replayable zero witness.  A failed windowed search is
    reported as inconclusive, never as nonzero: the window bounds what the
    search can see, not what exists.
    """
    target = alpha_tensor_to_group(value)
    basis = "group-tensor"
    if not target:
        return zero_certificate(question, basis, {}, {}, {"window": window})
    if not all(_tuple_in_window(k, window) for k in target):
        return inconclusive_certificate(
            question, basis, target,
            "target support exceeds the exponent window",
            {"window": window},
        )
    sources = sorted(target)
    visited, edges, rounds = _grow_region(sources, max_depth, window,
                                          node_budget)
    lattice = IntegerLattice(sorted(visited))
    for kind, seed in sorted(edges):
        lattice.add_generator(group_relation_vector(kind, seed), (kind, seed))
    result = lattice.membership(target)
    if result.member:
        return zero_certificate(
            question, basis, target, result.combination,
            {"window": window, "bfs_rounds": rounds,
             "region_size": len(visited), "generators": len(edges)},
        )
    return inconclusive_certificate(
        question, basis, target,
        "no combination found in the explored region",
        {"window": window, "bfs_rounds": rounds,
         "region_size": len(visited), "generators": len(edges)},
    )


# -- finite quotient certificates ---------------------------------------------

@dataclass(frozen=True)
class QuotientSpec:
    p: int
    q: int
    modulus: int = 0        # 0 = integer coefficients

    def rank(self, slots=4):
        return (self.p * self.q - 1) ** slots

    def label(self):
        ell = self.modulus if self.modulus else "Z"
        return f"Q({self.p},{self.q})/{ell}"


class BudgetExceeded(Exception):
    pass


def finite_quotient_test(value, spec, max_rank=5000,
                         question="quotient-nonvanishing"):
    """Decide membership of the value's image in the quotient relation
    lattice of Q(p, q).

    An image outside the lattice is a sound certificate that the value is not
    a relation combination upstairs; an image inside it decides nothing about
    the original question, so the outcome is inconclusive.
    """
    if spec.rank() > max_rank:
        raise BudgetExceeded(
            f"{spec.label()} has rank {spec.rank()} > budget {max_rank}"
        )
    Q = QuotientGroup(spec.p, spec.q)   # validates that p is even
    image = Q.map_tensor(value)
    meta = {"quotient": {"p": spec.p, "q": spec.q, "modulus": spec.modulus}}
    result = quotient_membership(spec.p, spec.q, image, spec.modulus)
    if result.member:
        return inconclusive_certificate(
            question, "quotient-tensor", image,
            "image lies in the quotient relation lattice", meta,
        )
    return nonzero_certificate(
        question, "quotient-tensor", image,
        result.functional, result.modulus, meta,
    )


def default_grid():
    return [
        QuotientSpec(p, q, ell)
        for p in (2, 4)
        for q in range(2, 9)
        for ell in (0, 2, 3, 4)
    ]


def quotient_grid_search(value, grid=None, max_rank=5000, time_budget=1800.0,
                         question="quotient-nonvanishing"):
    """Run finite-quotient tests over a deterministic grid under a budget.

    Returns (certificate, reports).  The first sound nonzero certificate is
    returned as soon as it is found; if the grid is exhausted (or skipped for
    budget reasons) the result is inconclusive.
    """
    if grid is None:
        grid = default_grid()
    reports = []
    start = time.monotonic()
    for spec in grid:
        elapsed = time.monotonic() - start
        if elapsed > time_budget:
            reports.append((spec.label(), "skipped: time budget exhausted"))
            continue
        if spec.rank() > max_rank:
            reports.append((spec.label(),
                            f"skipped: rank {spec.rank()} > {max_rank}"))
            continue
        cert = finite_quotient_test(value, spec, max_rank, question)
        reports.append((spec.label(), cert.outcome))
        if cert.outcome == "nonzero-with-quotient-witness":
            return cert, reports
    cert = inconclusive_certificate(
        question, "alpha-tensor", dict(value.terms),
        "no quotient in the grid separated the value from the relations",
        {"grid": [spec.label() for spec in grid]},
    )
    return cert, reports
