"""Self-contained, machine-replayable outcomes of membership questions.

A certificate records the target vector, the claimed outcome, and a witness:
an explicit generator combination for membership, or an annihilating
functional (usually through a finite quotient) for non-membership.  The
verifier below rebuilds every generator from its descriptor and replays the
claim with plain sums and dot products; it shares none of the elimination
code that produced the witness.
"""

import hashlib
import json

from .quotients import QuotientGroup
from .relations import (
    KIND_PAIR,
    RELATION_KINDS,
    alpha_relation_vector,
    group_relation_vector,
    quotient_relation_vector,
    relation_ring_element,
    ring_relation_vector,
)
from .groupring import (
    GroupElement,
    PairElement,
    RingElement,
    sign_character,
)

OUTCOME_ZERO = "zero-with-witness"
OUTCOME_NONZERO = "nonzero-with-quotient-witness"
OUTCOME_INCONCLUSIVE = "inconclusive"


# -- sparse vectors <-> serialized rows, per basis ----------------------------

def _flatten_key(basis, key):
    if basis == "pair-ring":
        (m1, n1), (m2, n2) = key
        return [m1, n1, m2, n2]
    # alpha-tensor, group-tensor and quotient-tensor keys are index tuples
    flat = []
    for m, n in key:
        flat.extend((int(m), int(n)))
    return flat


def _unflatten_key(basis, flat):
    if basis == "pair-ring":
        m1, n1, m2, n2 = flat
        return PairElement(GroupElement(m1, n1), GroupElement(m2, n2))
    pairs = tuple((flat[i], flat[i + 1]) for i in range(0, len(flat), 2))
    if basis == "group-tensor":
        return tuple(GroupElement(m, n) for m, n in pairs)
    return pairs


def sparse_to_rows(basis, sparse):
    rows = []
    for key, c in sparse.items():
        rows.append(_flatten_key(basis, key) + [int(c)])
    rows.sort()
    return rows


def rows_to_sparse(basis, rows):
    out = {}
    for row in rows:
        *flat, c = row
        key = _unflatten_key(basis, flat)
        c0 = out.get(key, 0) + c
        if c0:
            out[key] = c0
        else:
            del out[key]
    return out


def expand_generator(basis, kind, seed_flat, quotient=None):
    """Rebuild a relation generator from its descriptor, as a sparse dict."""
    if kind not in RELATION_KINDS:
        raise ValueError(f"unknown relation kind {kind!r}")
    if basis == "pair-ring":
        mono = _unflatten_key("pair-ring", seed_flat)
        return ring_relation_vector(kind, mono)
    if basis == "alpha-tensor":
        seed = _unflatten_key("alpha-tensor", seed_flat)
        return dict(alpha_relation_vector(kind, seed).terms)
    if basis == "group-tensor":
        seed = _unflatten_key("group-tensor", seed_flat)
        return group_relation_vector(kind, seed)
    if basis == "quotient-tensor":
        seed = _unflatten_key("quotient-tensor", seed_flat)
        return quotient_relation_vector(quotient, kind, seed)
    raise ValueError(f"unknown basis {basis!r}")


class Certificate:
    def __init__(self, question, outcome, basis, target_rows, witness, meta=None):
        self.question = question
        self.outcome = outcome
        self.basis = basis
        self.target_rows = [list(map(int, r)) for r in target_rows]
        self.witness = witness
        self.meta = dict(meta or {})

    def to_dict(self):
        body = {
            "question": self.question,
            "outcome": self.outcome,
            "basis": self.basis,
            "target": self.target_rows,
            "witness": self.witness,
            "meta": self.meta,
        }
        body["replay_hash"] = _hash_body(body)
        return body

    def to_json(self, **kwargs):
        kwargs.setdefault("indent", 2)
        kwargs.setdefault("sort_keys", True)
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data):
        cert = cls(
            data["question"],
            data["outcome"],
            data["basis"],
            data["target"],
            data["witness"],
            data.get("meta", {}),
        )
        stored = data.get("replay_hash")
        if stored is not None and stored != _hash_body(
            {k: v for k, v in data.items() if k != "replay_hash"}
        ):
            raise ValueError("certificate body does not match its hash")
        return cert

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _hash_body(body):
    canon = json.dumps(
        {k: body[k] for k in sorted(body) if k != "replay_hash"},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canon.encode()).hexdigest()


def zero_certificate(question, basis, target_sparse, combination, meta=None):
    witness = {
        "combination": [
            {
                "kind": kind,
                "seed": _flatten_key(basis, seed),
                "coefficient": int(coeff),
            }
            for (kind, seed), coeff in sorted(
                combination.items(), key=lambda kv: (kv[0][0], kv[0][1])
            )
        ]
    }
    return Certificate(
        question, OUTCOME_ZERO, basis, sparse_to_rows(basis, target_sparse),
        witness, meta,
    )


def nonzero_certificate(question, basis, target_sparse, functional, modulus,
                        meta=None):
    witness = {
        "functional": [
            _flatten_key(basis, key) + [int(v)]
            for key, v in sorted(functional.items())
        ],
        "modulus": int(modulus),
    }
    return Certificate(
        question, OUTCOME_NONZERO, basis, sparse_to_rows(basis, target_sparse),
        witness, meta,
    )


def inconclusive_certificate(question, basis, target_sparse, reason, meta=None):
    return Certificate(
        question, OUTCOME_INCONCLUSIVE, basis,
        sparse_to_rows(basis, target_sparse), {"reason": reason}, meta,
    )


def character_certificate(question, target_sparse, value, combination=None,
                          meta=None):
    """Outcome of the sign-character test on group-ring values.

    The character collapses the quotient by the four relation elements onto
    the integers, so a nonzero value certifies non-membership while a zero
    value comes with an explicit combination.
    """
    if value == 0:
        return zero_certificate(question, "pair-ring", target_sparse,
                                combination, meta)
    witness = {"character": "a -> -1, b -> 1 (both factors)",
               "value": int(value)}
    cert = Certificate(
        question, OUTCOME_NONZERO, "pair-ring",
        sparse_to_rows("pair-ring", target_sparse), witness, meta,
    )
    return cert


class ReplayError(Exception):
    pass


def verify_certificate(cert):
    """Independent replay; raises ReplayError with a reason on failure."""
    target = rows_to_sparse(cert.basis, cert.target_rows)
    quotient = None
    if cert.basis == "quotient-tensor":
        spec = cert.meta.get("quotient")
        if not spec:
            raise ReplayError("quotient certificate without quotient spec")
        quotient = QuotientGroup(spec["p"], spec["q"])

    if cert.outcome == OUTCOME_ZERO:
        total = {}
        for entry in cert.witness["combination"]:
            gen = expand_generator(
                cert.basis, entry["kind"], entry["seed"], quotient
            )
            coeff = entry["coefficient"]
            for key, c in gen.items():
                c0 = total.get(key, 0) + coeff * c
                if c0:
                    total[key] = c0
                else:
                    del total[key]
        if total != target:
            raise ReplayError("combination does not sum to the target")
        return True

    if cert.outcome == OUTCOME_NONZERO:
        if "character" in cert.witness:
            for kind in RELATION_KINDS:
                rel = relation_ring_element(kind)
                if sum(c * sign_character(g) for g, c in rel.terms.items()):
                    raise ReplayError("character does not kill a relation")
                pair_ = KIND_PAIR[kind]
                for key in target:
                    if sign_character(pair_ * key) != (
                        sign_character(pair_) * sign_character(key)
                    ):
                        raise ReplayError("character is not multiplicative")
            value = sum(c * sign_character(g) for g, c in target.items())
            if value != cert.witness["value"] or value == 0:
                raise ReplayError("character value does not separate target")
            return True
        functional = {}
        for row in cert.witness["functional"]:
            *flat, v = row
            functional[_unflatten_key(cert.basis, flat)] = v
        modulus = cert.witness["modulus"]

        def pairing(sparse):
            return sum(functional.get(k, 0) * c for k, c in sparse.items())

        if cert.basis == "quotient-tensor":
            ell = cert.meta["quotient"].get("modulus", 0)
            seeds = quotient.all_tensor_indices(
                len(cert.target_rows[0]) // 2 if cert.target_rows else 4
            )
            for kind in RELATION_KINDS:
                for seed in seeds:
                    gen = quotient_relation_vector(quotient, kind, seed)
                    v = pairing(gen)
                    ok = v == 0 if modulus == 0 else v % modulus == 0
                    if not ok:
                        raise ReplayError(
                            f"functional fails on {kind} at seed {seed}"
                        )
            if ell:
                # Images of ell * basis vectors must be annihilated too.
                for key in functional:
                    v = ell * functional[key]
                    ok = v == 0 if modulus == 0 else v % modulus == 0
                    if not ok:
                        raise ReplayError(
                            "functional fails on a scaled basis vector"
                        )
            t = pairing(target)
            sep = t != 0 if modulus == 0 else t % modulus != 0
            if not sep:
                raise ReplayError("functional does not separate the target")
            return True
        raise ReplayError("nonzero witness for an unexpected basis")

    if cert.outcome == OUTCOME_INCONCLUSIVE:
        return True
    raise ReplayError(f"unknown outcome {cert.outcome!r}")
