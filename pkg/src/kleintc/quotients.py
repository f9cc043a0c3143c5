"""Finite metacyclic quotients of the Klein bottle group.

Q(p, q) is generated by a of order p and b of order q with a^-1 b a = b^-1;
p must be even so that conjugation by a^p acts trivially on b and the
exponent-pair multiplication descends.  Elements are reduced exponent pairs,
the augmentation ideal of the quotient group ring has the reduced nonzero
pairs as basis, and the two-sided action descends slotwise to tensors.
"""

from itertools import product as iproduct


class QuotientGroup:
    def __init__(self, p, q):
        if p <= 0 or q <= 0:
            raise ValueError("orders must be positive")
        if p % 2:
            raise ValueError(
                "the order of a must be even for the relations to descend"
            )
        self.p = p
        self.q = q

    @property
    def order(self):
        return self.p * self.q

    def element(self, m, n):
        return (m % self.p, n % self.q)

    identity = property(lambda self: (0, 0))

    def mul(self, x, y):
        m1, n1 = x
        m2, n2 = y
        n = (n2 + (n1 if m2 % 2 == 0 else -n1)) % self.q
        return ((m1 + m2) % self.p, n)

    def inverse(self, x):
        m, n = x
        return (-m % self.p, (n if m % 2 else -n) % self.q)

    def reduce_group(self, g):
        """Image of an exponent pair of the infinite group."""
        return self.element(g[0], g[1])

    def nonzero_indices(self):
        """Basis indices of the quotient augmentation ideal, sorted."""
        return [
            (m, n)
            for m in range(self.p)
            for n in range(self.q)
            if (m, n) != (0, 0)
        ]

    def ideal_rank(self):
        return self.order - 1

    def tensor_rank(self, slots=4):
        return self.ideal_rank() ** slots

    def all_tensor_indices(self, slots=4):
        return list(iproduct(self.nonzero_indices(), repeat=slots))

    def map_alpha(self, idx):
        """Image of an ideal basis index; None when it collapses to zero."""
        r = self.element(idx[0], idx[1])
        return None if r == (0, 0) else r

    def map_tensor(self, tensor):
        """Push an alpha-basis tensor into the quotient, as a sparse dict."""
        out = {}
        for key, c in tensor.terms.items():
            mapped = []
            dead = False
            for idx in key:
                r = self.map_alpha(idx)
                if r is None:
                    dead = True
                    break
                mapped.append(r)
            if dead:
                continue
            k = tuple(mapped)
            c0 = out.get(k, 0) + c
            if c0:
                out[k] = c0
            else:
                del out[k]
        return out

    def act_alpha(self, g, h, idx):
        """Quotient action (g, h) . alpha_idx as a sparse dict over indices."""
        hinv = self.inverse(h)
        moved = self.mul(self.mul(g, idx), hinv)
        shift = self.mul(g, hinv)
        out = {}
        if moved != (0, 0):
            out[moved] = out.get(moved, 0) + 1
        if shift != (0, 0):
            c0 = out.get(shift, 0) - 1
            if c0:
                out[shift] = c0
            else:
                del out[shift]
        return out

    def act_tensor_basis(self, g, h, key):
        """Diagonal action on a basis tensor index, as a sparse dict."""
        partial = {(): 1}
        for idx in key:
            slot = self.act_alpha(g, h, idx)
            new = {}
            for pk, pc in partial.items():
                for r, rc in slot.items():
                    k = pk + (r,)
                    c0 = new.get(k, 0) + pc * rc
                    if c0:
                        new[k] = c0
                    else:
                        del new[k]
            partial = new
            if not partial:
                break
        return partial

from functools import lru_cache

from .lattice import IntegerLattice
from .relations import RELATION_KINDS, quotient_relation_vector


@lru_cache(maxsize=8)
def relation_lattice(p, q, modulus=0, slots=4):
    """Lattice spanned by all relation vectors of Q(p, q) on `slots`-fold
    tensors, optionally together with `modulus` times every basis vector.

    Queries on the returned object are read-only, so the cache is safe.
    """
    Q = QuotientGroup(p, q)
    coords = Q.all_tensor_indices(slots)
    lattice = IntegerLattice(coords)
    # With a coefficient modulus the scaled basis vectors go in first, which
    # keeps every later reduction bounded by the modulus.
    if modulus:
        for key in coords:
            lattice.add_generator({key: modulus}, ("mod", key))
    for kind in RELATION_KINDS:
        for seed in coords:
            vec = quotient_relation_vector(Q, kind, seed)
            if vec:
                lattice.add_generator(vec, (kind, seed))
    return lattice


def quotient_membership(p, q, target_sparse, modulus=0, slots=4):
    """Membership of a quotient tensor in the relation lattice of Q(p, q)."""
    lattice = relation_lattice(p, q, modulus, slots)
    return lattice.membership(target_sparse)
