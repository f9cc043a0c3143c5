"""Cochains with local coefficients, the twisted coboundary and cup product.

The coboundary of a degree-(k-1) cochain evaluates on a k-cell as

    (d phi)(v_0..v_k) = rho_{01} . phi(v_1..v_k)
                        + sum_{i=1..k} (-1)^i phi(v_0.. v_i omitted ..v_k)

where rho_{01} is the loop class of the first edge, acting through the
coefficient system.  Cup products follow the front-face/back-face rule with
the back factor twisted by the loop class from v_0 to the split vertex:

    (u cup w)(v_0..v_n) = (-1)^{p(n-p)} u(v_0..v_p) (x) rho_{0p} . w(v_p..v_n).

For the four-fold power of a 1-cochain the accumulated sign is +1.
"""

from .groupring import (
    GEN_B,
    GEN_C,
    GROUP_IDENTITY,
    IdealElement,
    PairElement,
    RingElement,
    TensorElement,
    act,
    act_tensor,
)
from . import tables


class PairRingCoefficients:
    """The group ring of the product group as a module over itself: a pair
    acts by left multiplication."""

    name = "group-ring"

    @staticmethod
    def zero():
        return RingElement()

    @staticmethod
    def act(p, value):
        return RingElement.monomial(p) * value


class IdealCoefficients:
    """The augmentation ideal with the two-sided action (g, h) . x = g x h^-1."""

    name = "ideal"

    @staticmethod
    def zero():
        return IdealElement()

    @staticmethod
    def act(p, value):
        return act(p, value)


class IdealTensorCoefficients:
    """Tensor powers of the augmentation ideal with the diagonal action."""

    name = "ideal-tensor"

    def __init__(self, slots=4):
        self.slots = slots

    @staticmethod
    def zero():
        return TensorElement.zero()

    @staticmethod
    def act(p, value):
        return act_tensor(p, value)


def act_ring(system, r, value):
    """Action of a full ring element, extended linearly from monomials."""
    total = system.zero()
    for g, c in r.terms.items():
        total = total + system.act(g, value).scale(c)
    return total


class Cochain:
    """Finitely supported map from k-cells (by index) to coefficient values."""

    __slots__ = ("degree", "values", "zero")

    def __init__(self, degree, values, zero):
        self.degree = degree
        self.zero = zero
        self.values = {i: v for i, v in values.items() if v}

    def __call__(self, index):
        return self.values.get(index, self.zero)

    def support(self):
        return sorted(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.values == other.values
        )

    def __repr__(self):
        return f"<Cochain deg={self.degree} support={self.support()}>"


def coboundary(X, phi, system):
    """Twisted coboundary of `phi`, a cochain on the complex `X`."""
    k = phi.degree + 1
    if k > X.dimension:
        raise ValueError(f"complex has no {k}-cells")
    values = {}
    for cell in X.cells[k]:
        total = system.act(X.path_label(cell, 0, 1), phi(cell.faces[0]))
        for i in range(1, k + 1):
            v = phi(cell.faces[i])
            if v:
                total = total + (v.scale(-1) if i % 2 else v)
        if total:
            values[cell.index] = total
    return Cochain(k, values, phi.zero)


class CoboundaryMatrix:
    """Matrix of the degree-k coboundary: entry (i, j) is the group-ring
    coefficient of phi(beta_i) in (d phi)(gamma_j)."""

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        self.entries = {ij: e for ij, e in entries.items() if e}

    def entry(self, i, j):
        return self.entries.get((i, j), RingElement())

    def row_support(self, i):
        return sorted(j for (r, j) in self.entries if r == i)

    def column_support(self, j):
        return sorted(i for (i, c) in self.entries if c == j)

    def apply(self, phi, system):
        """Evaluate the coboundary through the matrix (for cross-checking)."""
        values = {}
        for (i, j), e in self.entries.items():
            v = phi(i)
            if not v:
                continue
            contrib = act_ring(system, e, v)
            if j in values:
                values[j] = values[j] + contrib
            else:
                values[j] = contrib
        return Cochain(phi.degree + 1, values, phi.zero)

    def __eq__(self, other):
        return (
            isinstance(other, CoboundaryMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )


def coboundary_matrix(X, k):
    """Coboundary matrix from (k-1)-cochains to k-cochains on `X`."""
    if not 1 <= k <= X.dimension:
        raise ValueError(f"no degree-{k} coboundary on this complex")
    entries = {}
    for cell in X.cells[k]:
        j = cell.index
        for i, face in enumerate(cell.faces):
            if i == 0:
                coeff = RingElement.monomial(X.path_label(cell, 0, 1))
            else:
                coeff = RingElement.monomial(X.label_identity, (-1) ** i)
            key = (face, j)
            entries[key] = entries.get(key, RingElement()) + coeff
    return CoboundaryMatrix(len(X.cells[k - 1]), len(X.cells[k]), entries)


def _fixture_entry(token):
    one = GROUP_IDENTITY
    table = {
        "1": PairElement(one, one),
        "-1": PairElement(one, one),
        "b": PairElement(GEN_B, one),
        "b'": PairElement(one, GEN_B),
        "c": PairElement(GEN_C, one),
        "c'": PairElement(one, GEN_C),
    }
    coeff = -1 if token == "-1" else 1
    return RingElement.monomial(table[token], coeff)


def matrix_fixture():
    """The published 60 x 24 degree-4 coboundary matrix as ring entries."""
    entries = {}
    for i, row in tables.MATRIX.items():
        for j, token in row.items():
            entries[(i, j)] = _fixture_entry(token)
    return CoboundaryMatrix(60, 24, entries)


def cf_one_cochain(XX):
    """The degree-1 comparison cochain: an edge labelled (g, h) is sent to
    g h^-1 - 1 in the augmentation ideal (possibly zero)."""
    if not XX.edge_labels or not isinstance(
        next(iter(XX.edge_labels.values())), PairElement
    ):
        raise ValueError("expected a product complex with pair edge labels")
    values = {}
    for idx, label in XX.edge_labels.items():
        g, h = label
        values[idx] = IdealElement.alpha(*(g * h.inverse()))
    return Cochain(1, values, IdealElement())


def _as_tensor(value):
    if isinstance(value, TensorElement):
        return value
    return TensorElement.from_factors([value])


def cup(X, u, w):
    """Twisted cup product of tensor-valued cochains on `X`."""
    p, q = u.degree, w.degree
    n = p + q
    if n > X.dimension:
        raise ValueError(f"cup degree {n} exceeds the complex dimension")
    sign = (-1) ** (p * q)
    values = {}
    for cell in X.cells[n]:
        rep = cell.canonical
        front = X.cell_of_rep(p, rep[: p + 1])
        u_val = u(front)
        if not u_val:
            continue
        back = X.cell_of_rep(q, rep[p:])
        w_val = w(back)
        if not w_val:
            continue
        twist = X.path_label(cell, 0, p)
        prod = _as_tensor(u_val).tensor(act_tensor(twist, _as_tensor(w_val)))
        if sign < 0:
            prod = prod.scale(-1)
        if prod:
            values[cell.index] = prod
    return Cochain(n, values, TensorElement.zero())


def power4(f, X):
    """Fused four-fold cup power of a 1-cochain with ideal values.

    On a 4-cell this is the tensor of the four edge values, the t-th twisted
    by the path class from the initial vertex to position t-1; the iterated
    front/back signs cancel to +1.
    """
    if f.degree != 1:
        raise ValueError("the four-fold power is defined on 1-cochains")
    if X.dimension < 4:
        raise ValueError("need a 4-dimensional complex")
    values = {}
    for cell in X.cells[4]:
        rep = cell.canonical
        factors = []
        for t in range(4):
            edge_cell = X.cell_of_rep(1, rep[t : t + 2])
            value = f(edge_cell)
            if not value:
                factors = None
                break
            factors.append(act(X.path_label(cell, 0, t), value))
        if factors is None:
            continue
        tensor = TensorElement.from_factors(factors)
        if tensor:
            values[cell.index] = tensor
    return Cochain(4, values, TensorElement.zero())
