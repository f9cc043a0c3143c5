"""Row reduction of the degree-4 coboundary matrix over the group ring,
with a replayable operation log, and the signed-sum vanishing criterion.

Row operations act on the right: "addmul" adds a lambda-multiple of a source
row where every entry of the source is multiplied by lambda on the right, and
"scale" multiplies a row entrywise on the right by a unit (a signed group
element).  Right multiplication is the side that preserves the coefficient
submodule generated by the rows, because matrix entries act on cochain values
from the left.

The reduced form has 27 nonzero rows: unit pivots on the diagonal of the
first 23 with the opposite sign of the column's epsilon in the last column,
then four rows whose only entry, in the last column, is one of b-1, b'-1,
c+1, c'+1.  Consequently a degree-4 cochain is a coboundary exactly when its
signed value sum lies in the subgroup generated by the action of those four
elements.
"""

from .groupring import (
    GEN_B,
    GEN_C,
    PAIR_IDENTITY,
    PairElement,
    RingElement,
    TensorElement,
    sign_character,
)
from .lattice import IntegerLattice
from .relations import (
    RELATION_KINDS,
    alpha_relation_vector,
    relation_ring_element,
    ring_relation_vector,
)
from . import tables

epsilon = tables.epsilon


class ReductionError(Exception):
    pass


class ReductionLog:
    """Ordered elementary operations; each is invertible over the ring.

    Ops are tuples with 1-based row numbers:
      ("swap", r, s)
      ("scale", r, unit)        row_r := row_r * unit   (right)
      ("addmul", r, s, lam)     row_r := row_r + row_s * lam   (right)
    """

    def __init__(self, ops=()):
        self.ops = list(ops)

    def append(self, op):
        self.ops.append(op)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def apply(self, rows):
        """Replay on a list of row lists of ring elements (copied)."""
        rows = [list(r) for r in rows]
        for op in self.ops:
            if op[0] == "swap":
                _, r, s = op
                rows[r - 1], rows[s - 1] = rows[s - 1], rows[r - 1]
            elif op[0] == "scale":
                _, r, unit = op
                rows[r - 1] = [e * unit for e in rows[r - 1]]
            elif op[0] == "addmul":
                _, r, s, lam = op
                src = rows[s - 1]
                rows[r - 1] = [
                    e + src[j] * lam for j, e in enumerate(rows[r - 1])
                ]
            else:
                raise ValueError(f"unknown op {op[0]!r}")
        return rows

    def inverted(self):
        """The inverse operation sequence (replays a reduction backwards)."""
        inv = []
        for op in reversed(self.ops):
            if op[0] == "swap":
                inv.append(op)
            elif op[0] == "scale":
                _, r, unit = op
                (g, c), = unit.terms.items()
                if c not in (1, -1):
                    raise ReductionError("non-unit scale cannot be inverted")
                inv.append(("scale", r, RingElement.monomial(g.inverse(), c)))
            else:
                _, r, s, lam = op
                inv.append(("addmul", r, s, lam.scale(-1)))
        return ReductionLog(inv)

    def to_json(self):
        out = []
        for op in self.ops:
            if op[0] == "swap":
                out.append({"op": "swap", "rows": [op[1], op[2]]})
            elif op[0] == "scale":
                out.append({"op": "scale", "row": op[1], "unit": str(op[2]),
                            "side": "right"})
            else:
                out.append({"op": "addmul", "row": op[1], "source": op[2],
                            "lambda": str(op[3]), "side": "right"})
        return out


def sign_char_ring(x):
    """Character of the group ring sending a and a' to -1, b and b' to +1.

    Collapses the quotient by the four column-24 generators onto the integers.
    """
    return sum(c * sign_character(g) for g, c in x.terms.items())


def decompose_relation_multiple(x):
    """Write x = sum over kinds of (generator * y_kind) + residue * identity.

    Rewrites terms letter by letter toward the identity, so the residue equals
    the sign character of x.  Used both to drive the tail of the row reduction
    and to produce membership witnesses for the group-ring criterion.
    """
    parts = {kind: RingElement() for kind in RELATION_KINDS}
    work = dict(x.terms)
    residue = 0

    def push(kind, mono, coeff):
        parts[kind] = parts[kind] + RingElement.monomial(mono, coeff)

    while work:
        pair_, coeff = max(
            work.items(),
            key=lambda item: (
                abs(item[0][0][0]) + abs(item[0][0][1])
                + abs(item[0][1][0]) + abs(item[0][1][1]),
                item[0],
            ),
        )
        del work[pair_]
        g, h = pair_
        if g.is_identity() and h.is_identity():
            residue += coeff
            continue
        first = not g.is_identity()
        comp = g if first else h
        kind_b = "b-left" if first else "b-right"
        kind_c = "c-left" if first else "c-right"

        def rebuild(new_comp):
            return (
                PairElement(new_comp, h) if first else PairElement(g, new_comp)
            )

        m, n = comp
        if n != 0:
            # Strip one b from the left of the component.
            step = 1 if m % 2 == 0 else -1
            if abs(n - step) < abs(n):
                nu_prime = rebuild(GEN_B.inverse() * comp)
                push(kind_b, nu_prime, coeff)
            else:
                nu_prime = rebuild(GEN_B * comp)
                push(kind_b, pair_, -coeff)
            new_coeff = coeff
        else:
            # n == 0, m != 0: strip one c, flipping the sign.
            if m > 0:
                nu_prime = rebuild(GEN_C.inverse() * comp)
                push(kind_c, nu_prime, coeff)
            else:
                nu_prime = rebuild(GEN_C * comp)
                push(kind_c, pair_, coeff)
            new_coeff = -coeff
        cur = work.get(nu_prime, 0) + new_coeff
        if cur:
            work[nu_prime] = cur
        else:
            work.pop(nu_prime, None)
    return residue, parts


def recompose(residue, parts):
    """Inverse of `decompose_relation_multiple`, for witness replay."""
    total = RingElement.monomial(PAIR_IDENTITY, residue)
    for kind, y in parts.items():
        total = total + relation_ring_element(kind) * y
    return total

def _is_unit(e):
    if len(e.terms) != 1:
        return False
    (_, c), = e.terms.items()
    return c in (1, -1)


def _unit_inverse(e):
    (g, c), = e.terms.items()
    return RingElement.monomial(g.inverse(), c)


def matrix_rows(M):
    """Row lists of ring elements from a CoboundaryMatrix."""
    rows = [[RingElement() for _ in range(M.cols)] for _ in range(M.rows)]
    for (i, j), e in M.entries.items():
        rows[i - 1][j - 1] = e
    return rows


def expected_reduced_rows(rows=60, cols=24):
    """The published reduced form of the degree-4 matrix."""
    out = [[RingElement() for _ in range(cols)] for _ in range(rows)]
    one = RingElement.monomial(PAIR_IDENTITY)
    for i in range(1, 24):
        out[i - 1][i - 1] = one
        out[i - 1][23] = one.scale(-epsilon(i))
    for pos, kind in enumerate(RELATION_KINDS):
        out[23 + pos][23] = relation_ring_element(kind)
    return out


def row_reduce(M):
    """Reduce the 60 x 24 degree-4 coboundary matrix over the group ring.

    Returns (reduced_rows, log).  The reduced form is asserted to match the
    published 27-row shape; the log replays M to the reduced rows exactly and
    every operation is invertible, so the row span over any coefficient
    module is preserved.
    """
    rows = matrix_rows(M)
    ncols = M.cols
    npivots = ncols - 1
    log = ReductionLog()

    def op_swap(r, s):
        if r != s:
            rows[r], rows[s] = rows[s], rows[r]
            log.append(("swap", r + 1, s + 1))

    def op_scale(r, unit):
        rows[r] = [e * unit for e in rows[r]]
        log.append(("scale", r + 1, unit))

    def op_addmul(r, s, lam):
        src = rows[s]
        rows[r] = [e + src[j] * lam for j, e in enumerate(rows[r])]
        log.append(("addmul", r + 1, s + 1, lam))

    def eliminate_column(r, pivot_row, col):
        entry = rows[r][col]
        if not entry:
            return
        for g, c in sorted(entry.terms.items()):
            op_addmul(r, pivot_row, RingElement.monomial(g, -c))

    for col in range(npivots):
        pivot = None
        best = None
        for r in range(col, len(rows)):
            e = rows[r][col]
            if not e or not _is_unit(e):
                continue
            (g, c), = e.terms.items()
            score = (0 if g.is_identity() else 1, 0 if c == 1 else 1, r)
            if best is None or score < best:
                best = score
                pivot = r
        if pivot is None:
            raise ReductionError(
                f"no unit pivot available in column {col + 1}"
            )
        if not (_is_unit(rows[pivot][col])
                and next(iter(rows[pivot][col].terms.items()))
                == (PAIR_IDENTITY, 1)):
            op_scale(pivot, _unit_inverse(rows[pivot][col]))
        op_swap(col, pivot)
        for r in range(len(rows)):
            if r != col:
                eliminate_column(r, col, col)

    last = ncols - 1
    for r in range(npivots, len(rows)):
        for j in range(npivots):
            if rows[r][j]:
                raise ReductionError(
                    f"row {r + 1} is not supported on the last column after "
                    "elimination"
                )

    # Locate the four generator rows among the tail.  First take rows that
    # are unit multiples of a generator; then derive the rest by clearing,
    # against the generators already found, every other part of a row whose
    # missing-generator part is a single unit.
    generator_rows = {}
    for kind in RELATION_KINDS:
        target = relation_ring_element(kind)
        found = None
        for r in range(npivots, len(rows)):
            if r in generator_rows.values():
                continue
            v = rows[r][last]
            if not v or len(v.terms) > 2:
                continue
            for g, _ in sorted(v.terms.items()):
                for s in (1, -1):
                    u = RingElement.monomial(g.inverse(), s)
                    if v * u == target:
                        found = (r, u)
                        break
                if found:
                    break
            if found:
                break
        if found is not None:
            r, u = found
            if next(iter(u.terms.items())) != (PAIR_IDENTITY, 1):
                op_scale(r, u)
            generator_rows[kind] = r

    progress = True
    while progress and len(generator_rows) < len(RELATION_KINDS):
        progress = False
        for kind in RELATION_KINDS:
            if kind in generator_rows:
                continue
            for r in range(npivots, len(rows)):
                if r in generator_rows.values():
                    continue
                v = rows[r][last]
                if not v:
                    continue
                residue, parts = decompose_relation_multiple(v)
                if residue != 0:
                    raise ReductionError(
                        f"tail row {r + 1} is outside the relation submodule"
                    )
                own = parts[kind]
                if len(own.terms) != 1:
                    continue
                (mono, c), = own.terms.items()
                if c not in (1, -1):
                    continue
                if any(
                    parts[k] and k not in generator_rows
                    for k in RELATION_KINDS
                    if k != kind
                ):
                    continue
                for k in RELATION_KINDS:
                    if k == kind or not parts[k]:
                        continue
                    for g, cc in sorted(parts[k].terms.items()):
                        op_addmul(
                            r, generator_rows[k], RingElement.monomial(g, -cc)
                        )
                op_scale(r, RingElement.monomial(mono.inverse(), c))
                if rows[r][last] != relation_ring_element(kind):
                    raise ReductionError(
                        f"derived {kind} generator came out wrong in row "
                        f"{r + 1}"
                    )
                generator_rows[kind] = r
                progress = True
                break
    missing = [k for k in RELATION_KINDS if k not in generator_rows]
    if missing:
        raise ReductionError(f"could not derive generator rows for {missing}")

    def clear_by_generators(r, excess):
        """Subtract generator-row multiples so row r's last entry drops by
        `excess` (which must lie in the relation submodule)."""
        residue, parts = decompose_relation_multiple(excess)
        if residue != 0:
            raise ReductionError(
                "entry does not reduce to the published form; residue "
                f"{residue} at row {r + 1}"
            )
        for kind in RELATION_KINDS:
            y = parts[kind]
            for g, c in sorted(y.terms.items()):
                op_addmul(r, generator_rows[kind], RingElement.monomial(g, -c))

    # Zero every tail row that is not one of the four generators.
    for r in range(npivots, len(rows)):
        if r in generator_rows.values():
            continue
        if rows[r][last]:
            clear_by_generators(r, rows[r][last])
        if rows[r][last]:
            raise ReductionError(f"tail row {r + 1} failed to clear")

    # Normalise the last-column entries of the pivot rows to -epsilon.
    one = RingElement.monomial(PAIR_IDENTITY)
    for i in range(npivots):
        target = one.scale(-epsilon(i + 1))
        excess = rows[i][last] - target
        if excess:
            clear_by_generators(i, excess)
        if rows[i][last] != target:
            raise ReductionError(f"pivot row {i + 1} failed to normalise")

    # Move the generator rows into positions 24..27 in their fixed order.
    for pos, kind in enumerate(RELATION_KINDS):
        dest = npivots + pos
        src = generator_rows[kind]
        if src != dest:
            op_swap(dest, src)
            for k, r in generator_rows.items():
                if r == dest:
                    generator_rows[k] = src
            generator_rows[kind] = dest

    expected = expected_reduced_rows(len(rows), ncols)
    if rows != expected:
        raise ReductionError("reduced matrix differs from the published form")
    return rows, log


def sigma(psi):
    """Signed sum of a degree-4 cochain over the 24 top cells."""
    if psi.degree != 4:
        raise ValueError("the signed sum is defined on degree-4 cochains")
    total = psi.zero
    for j, v in sorted(psi.values.items()):
        total = total + (v if epsilon(j) == 1 else v.scale(-1))
    return total

# -- the vanishing criterion ---------------------------------------------------

def _in_window(key, window):
    return all(abs(m) <= window and abs(n) <= window for m, n in key)


def windowed_ring_membership(x, window=8, rounds=3):
    """Membership of a group-ring element in the relation submodule, decided
    over monomials within the exponent window."""
    from .relations import KIND_PAIR

    target = dict(x.terms)
    if not target:
        return None, {}
    coords = set(target)
    seeds = set()
    frontier = set(target)
    for _ in range(rounds):
        new_keys = set()
        for mono in sorted(frontier):
            for kind in RELATION_KINDS:
                inv = KIND_PAIR[kind].inverse()
                for seed in (mono, inv * mono):
                    if (kind, seed) in seeds:
                        continue
                    vec = ring_relation_vector(kind, seed)
                    if not all(
                        _in_window((g[0], g[1]), window) for g in vec
                    ):
                        continue
                    seeds.add((kind, seed))
                    for g in vec:
                        if g not in coords:
                            coords.add(g)
                            new_keys.add(g)
        frontier = new_keys
        if not frontier:
            break
    lattice = IntegerLattice(sorted(coords))
    for kind, seed in sorted(seeds):
        lattice.add_generator(ring_relation_vector(kind, seed), (kind, seed))
    return lattice.membership(target), target


def windowed_tensor_membership(t, window=8, rounds=3):
    """Membership of an alpha-basis tensor in the span of the four relation
    kinds, over seeds discovered from the target's support."""
    from .groupring import act_tensor
    from .relations import KIND_PAIR

    target = dict(t.terms)
    if not target:
        return None, {}
    coords = set(target)
    seeds = set()
    frontier = set(target)
    for _ in range(rounds):
        new_keys = set()
        for key in sorted(frontier):
            for kind in RELATION_KINDS:
                inv = KIND_PAIR[kind].inverse()
                back = act_tensor(inv, TensorElement({key: 1}))
                for seed in (key, *sorted(back.terms)):
                    if (kind, seed) in seeds:
                        continue
                    vec = alpha_relation_vector(kind, seed)
                    if not vec or not all(
                        _in_window(k, window) for k in vec.terms
                    ):
                        continue
                    seeds.add((kind, seed))
                    for k in vec.terms:
                        if k not in coords:
                            coords.add(k)
                            new_keys.add(k)
        frontier = new_keys
        if not frontier:
            break
    lattice = IntegerLattice(sorted(coords))
    for kind, seed in sorted(seeds):
        lattice.add_generator(
            dict(alpha_relation_vector(kind, seed).terms), (kind, seed)
        )
    return lattice.membership(target), target


def class_is_zero(psi, strategy="character", window=8,
                  question="vanishing-criterion"):
    """Decide whether a degree-4 cochain represents zero in cohomology.

    The signed cell sum is tested for membership in the subgroup generated by
    the four relation actions.  Strategies:

    * "character": exact for group-ring values; the sign character collapses
      the quotient onto the integers, and zero values come with an explicit
      combination from the letter-by-letter rewriting.
    * "windowed-integer": integer lattice membership over generators within
      an exponent window; may return an inconclusive certificate.
    * ("finite-quotient", p, q[, ell]): push tensor values into Q(p, q);
      non-membership there soundly certifies non-membership upstairs, while
      quotient membership is inconclusive for the original question.
    """
    from . import certificates as certs

    v = sigma(psi)
    if isinstance(v, RingElement):
        if strategy == "character":
            residue, parts = decompose_relation_multiple(v)
            if residue:
                return certs.character_certificate(question, dict(v.terms),
                                                   residue)
            combination = {}
            for kind in RELATION_KINDS:
                for mono, c in parts[kind].terms.items():
                    combination[(kind, mono)] = c
            if recompose(0, parts) != v:
                raise AssertionError("rewriting witness failed to replay")
            return certs.character_certificate(
                question, dict(v.terms), 0, combination
            )
        if strategy == "windowed-integer":
            result, target = windowed_ring_membership(v, window)
            if result is None or result.member:
                comb = {} if result is None else result.combination
                return certs.zero_certificate(question, "pair-ring", target,
                                              comb, {"window": window})
            return certs.inconclusive_certificate(
                question, "pair-ring", target,
                "no combination found within the exponent window",
                {"window": window},
            )
        raise ValueError(f"unsupported strategy {strategy!r} for ring values")

    if isinstance(v, TensorElement):
        if strategy == "windowed-integer":
            result, target = windowed_tensor_membership(v, window)
            if result is None or result.member:
                comb = {} if result is None else result.combination
                return certs.zero_certificate(question, "alpha-tensor",
                                              target, comb,
                                              {"window": window})
            return certs.inconclusive_certificate(
                question, "alpha-tensor", target,
                "no combination found within the exponent window",
                {"window": window},
            )
        if isinstance(strategy, tuple) and strategy[0] == "finite-quotient":
            from .quotients import QuotientGroup, quotient_membership

            p, q = strategy[1], strategy[2]
            ell = strategy[3] if len(strategy) > 3 else 0
            Q = QuotientGroup(p, q)
            image = Q.map_tensor(v)
            meta = {"quotient": {"p": p, "q": q, "modulus": ell}}
            result = quotient_membership(p, q, image, ell)
            if result.member:
                return certs.inconclusive_certificate(
                    question, "quotient-tensor", image,
                    "image lies in the quotient relation lattice",
                    meta,
                )
            return certs.nonzero_certificate(
                question, "quotient-tensor", image,
                result.functional, result.modulus, meta,
            )
        raise ValueError(
            f"unsupported strategy {strategy!r} for tensor values"
        )
    raise TypeError(f"unsupported carrier {type(v).__name__}")
