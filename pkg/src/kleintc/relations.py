"""The four vanishing relations and their expansions over each basis.

A degree-4 class vanishes exactly when its signed cell sum lies in the
subgroup generated by the actions of b-1, b'-1, c+1 and c'+1 on the
coefficients.  Each relation kind names one of those four: acting by the
group element and subtracting (b kinds) or adding (c kinds) the identity.
The same kinds are expanded here over three bases: single group-ring
monomials, alpha-basis tensors, and group-element tensors.
"""

from .groupring import (
    GEN_B,
    GEN_C,
    GROUP_IDENTITY,
    GroupElement,
    PAIR_IDENTITY,
    PairElement,
    RingElement,
    TensorElement,
    act_tensor,
)

RELATION_KINDS = ("b-left", "b-right", "c-left", "c-right")

KIND_PAIR = {
    "b-left": PairElement(GEN_B, GROUP_IDENTITY),
    "b-right": PairElement(GROUP_IDENTITY, GEN_B),
    "c-left": PairElement(GEN_C, GROUP_IDENTITY),
    "c-right": PairElement(GROUP_IDENTITY, GEN_C),
}

# Sign of the identity term: action - identity for b, action + identity for c.
KIND_SIGN = {"b-left": -1, "b-right": -1, "c-left": 1, "c-right": 1}


def relation_ring_element(kind):
    """b-1, b'-1, c+1 or c'+1 as a group-ring element."""
    return RingElement.monomial(KIND_PAIR[kind]) + RingElement.monomial(
        PAIR_IDENTITY, KIND_SIGN[kind]
    )


def ring_relation_vector(kind, mono):
    """Relation generated on a group-ring monomial, as a sparse dict over
    pair monomials: (relation element) * mono."""
    x = relation_ring_element(kind) * RingElement.monomial(mono)
    return dict(x.terms)


def alpha_relation_vector(kind, seed):
    """Relation on an alpha-basis tensor seed, as a TensorElement."""
    t = TensorElement({tuple(seed): 1})
    moved = act_tensor(KIND_PAIR[kind], t)
    return moved + t.scale(KIND_SIGN[kind])


def group_tensor_act(kind, key):
    """Diagonal action of a relation kind on a group-element 4-tuple."""
    g, h = KIND_PAIR[kind]
    hinv = h.inverse()
    return tuple(g * x * hinv for x in key)


def group_relation_vector(kind, seed):
    """Relation on a group-element tuple seed, sparse over such tuples."""
    moved = group_tensor_act(kind, seed)
    out = {moved: 1}
    c0 = out.get(seed, 0) + KIND_SIGN[kind]
    if c0:
        out[seed] = c0
    else:
        del out[seed]
    return out


def alpha_tensor_to_group(tensor):
    """Expand an alpha-basis tensor over group-element tuples.

    Every slot alpha_{m,n} becomes a^m b^n - 1, so each alpha term splits
    into signed terms of group elements (the identity where the -1 was
    chosen).
    """
    out = {}
    for key, c in tensor.terms.items():
        partial = {(): c}
        for (m, n) in key:
            g = GroupElement(m, n)
            new = {}
            for pk, pc in partial.items():
                for elt, sign in ((g, 1), (GROUP_IDENTITY, -1)):
                    k = pk + (elt,)
                    c0 = new.get(k, 0) + pc * sign
                    if c0:
                        new[k] = c0
                    else:
                        del new[k]
            partial = new
        for pk, pc in partial.items():
            c0 = out.get(pk, 0) + pc
            if c0:
                out[pk] = c0
            else:
                del out[pk]
    return out


def quotient_relation_vector(Q, kind, seed):
    """Relation on a quotient tensor seed, sparse over quotient tuples."""
    g, h = KIND_PAIR[kind]
    gq = Q.reduce_group(g)
    hq = Q.reduce_group(h)
    out = dict(Q.act_tensor_basis(gq, hq, seed))
    c0 = out.get(seed, 0) + KIND_SIGN[kind]
    if c0:
        out[seed] = c0
    else:
        out.pop(seed, None)
    return out
