"""One-vertex Delta-complexes: the Klein bottle, products, and path labels.

A complex is presented by its cells in each dimension, each cell carrying the
set of simplicial representatives that are identified to it.  Representatives
are tuples of vertex instances written in increasing order; for product
complexes a vertex instance is a pair.  Products of one-vertex complexes are
built by enumerating monotone pair sequences through the vertex posets of the
top cells and merging them with a union-find keyed on the identification rule:
two sequences are identified when, factor by factor, the repetition positions
agree and the deduplicated projections are representatives of the same cell.
"""

from itertools import combinations

from .groupring import (
    GEN_A,
    GEN_B,
    GEN_C,
    GROUP_IDENTITY,
    PAIR_IDENTITY,
    PairElement,
    render_pair,
)
from . import tables


class Cell:
    """A cell together with its identified representatives and face indices."""

    __slots__ = ("dimension", "index", "representatives", "canonical", "faces")

    def __init__(self, dimension, index, representatives, faces):
        self.dimension = dimension
        self.index = index
        self.representatives = frozenset(representatives)
        self.canonical = min(self.representatives)
        self.faces = tuple(faces)

    def __repr__(self):
        return f"<Cell dim={self.dimension} #{self.index} {self.canonical}>"


class DeltaComplex:
    """Cells graded by dimension, with 1-cells labelled by loop classes."""

    def __init__(self, rep_sets_by_dim, edge_labels, label_identity):
        # rep_sets_by_dim: {dim: [frozenset of reps, ...]} in final index order.
        self._rep_to_cell = {}
        self.cells = {}
        self.label_identity = label_identity
        for dim in sorted(rep_sets_by_dim):
            for pos, reps in enumerate(rep_sets_by_dim[dim], start=1):
                for rep in reps:
                    key = (dim, rep)
                    if key in self._rep_to_cell:
                        raise ValueError(f"representative {rep} listed twice")
                    self._rep_to_cell[key] = pos
        for dim in sorted(rep_sets_by_dim):
            row = []
            for pos, reps in enumerate(rep_sets_by_dim[dim], start=1):
                canonical = min(reps)
                faces = []
                if dim > 0:
                    for omit in range(dim + 1):
                        face = canonical[:omit] + canonical[omit + 1:]
                        try:
                            faces.append(self._rep_to_cell[(dim - 1, face)])
                        except KeyError:
                            raise ValueError(
                                f"face {face} of {canonical} is not a "
                                f"representative of any {dim - 1}-cell"
                            ) from None
                row.append(Cell(dim, pos, reps, faces))
            self.cells[dim] = tuple(row)
        # edge_labels: {1-cell index: loop class element}
        self.edge_labels = dict(edge_labels)
        if len(self.cells.get(0, ())) != 1:
            raise ValueError("only one-vertex complexes are supported")

    @property
    def dimension(self):
        return max(d for d, cs in self.cells.items() if cs)

    def cell(self, dim, index):
        return self.cells[dim][index - 1]

    def cell_counts(self):
        return tuple(len(self.cells[d]) for d in range(self.dimension + 1))

    def cell_of_rep(self, dim, rep):
        return self._rep_to_cell[(dim, rep)]

    def step_label(self, v, w):
        """Loop class of the edge from vertex instance v to w (v may equal w)."""
        if v == w:
            return self.label_identity
        return self.edge_labels[self._rep_to_cell[(1, (v, w))]]

    def path_label(self, cell, start, stop):
        """Product of edge labels along the canonical representative of `cell`
        from vertex position `start` to position `stop`."""
        if not 0 <= start <= stop <= cell.dimension:
            raise IndexError(
                f"positions {start}..{stop} out of range for a "
                f"{cell.dimension}-cell"
            )
        rep = cell.canonical
        label = self.label_identity
        for t in range(start, stop):
            label = label * self.step_label(rep[t], rep[t + 1])
        return label


def euler_characteristic(complex_):
    return sum(
        (-1) ** d * len(cells) for d, cells in complex_.cells.items()
    )


def point_complex():
    """A single vertex; useful as a product identity in tests."""
    return DeltaComplex({0: [frozenset({(0,)})]}, {}, GROUP_IDENTITY)


def klein_bottle():
    """The two-triangle Klein bottle: vertices 0..5, edges a, b, c = ab^-1.

    The square (0, 3), 2, (1, 5), 4 is divided along the diagonal c; edge
    identifications are (0,2)=(4,5) (a), (1,2)=(3,4) (b), (0,1)=(3,5) (c).
    """
    rep_sets = {
        0: [frozenset({(v,) for v in range(6)})],
        1: [
            frozenset({(0, 1), (3, 5)}),   # c
            frozenset({(0, 2), (4, 5)}),   # a
            frozenset({(1, 2), (3, 4)}),   # b
        ],
        2: [frozenset({(0, 1, 2)}), frozenset({(3, 4, 5)})],
    }
    labels = {1: GEN_C, 2: GEN_A, 3: GEN_B}
    return DeltaComplex(rep_sets, labels, GROUP_IDENTITY)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _check_one_vertex_input(X, name):
    if len(X.cells[0]) != 1:
        raise ValueError(f"{name} must have exactly one vertex")
    for cells in X.cells.values():
        for cell in cells:
            for rep in cell.representatives:
                if any(rep[i] >= rep[i + 1] for i in range(len(rep) - 1)):
                    raise ValueError(
                        f"representative {rep} of {name} is not written in "
                        "increasing vertex order"
                    )


def _expand_pattern(rep, pattern, k):
    seq = [rep[0]]
    pos = 1
    for t in range(k):
        if t in pattern:
            seq.append(seq[-1])
        else:
            seq.append(rep[pos])
            pos += 1
    return tuple(seq)


def _projection_key(X, seq):
    """Identification data of one projection: repetition positions plus the
    cell owning the deduplicated representative."""
    pattern = frozenset(t for t in range(len(seq) - 1) if seq[t] == seq[t + 1])
    dedup = tuple(v for t, v in enumerate(seq) if t == 0 or seq[t - 1] != v)
    return pattern, X.cell_of_rep(len(dedup) - 1, dedup)


def product(X, Y):
    """Product complex of two one-vertex Delta-complexes.

    Cells of dimension k are equivalence classes of monotone pair sequences of
    length k+1 with no position where both factors repeat; classes are indexed
    in lexicographic order of their least representative.  Edge labels are the
    pairs of factor labels.
    """
    _check_one_vertex_input(X, "first factor")
    _check_one_vertex_input(Y, "second factor")

    reps_by_dim_x = {
        d: [rep for cell in cells for rep in sorted(cell.representatives)]
        for d, cells in X.cells.items()
    }
    reps_by_dim_y = {
        d: [rep for cell in cells for rep in sorted(cell.representatives)]
        for d, cells in Y.cells.items()
    }
    dim = X.dimension + Y.dimension

    raw_by_key = {}
    uf = _UnionFind()
    for k in range(dim + 1):
        for dx in range(min(k, X.dimension) + 1):
            for dy in range(min(k, Y.dimension) + 1):
                if dx + dy < k:
                    continue
                np_, nq = k - dx, k - dy
                positions = range(k)
                for pat_x in combinations(positions, np_):
                    rest = [t for t in positions if t not in pat_x]
                    for pat_y in combinations(rest, nq):
                        for rx in reps_by_dim_x[dx]:
                            sx = _expand_pattern(rx, set(pat_x), k)
                            for ry in reps_by_dim_y[dy]:
                                sy = _expand_pattern(ry, set(pat_y), k)
                                seq = tuple(zip(sx, sy))
                                key = (
                                    k,
                                    frozenset(pat_x),
                                    X.cell_of_rep(dx, rx),
                                    frozenset(pat_y),
                                    Y.cell_of_rep(dy, ry),
                                )
                                raw_by_key.setdefault(key, []).append(seq)

    for seqs in raw_by_key.values():
        for other in seqs[1:]:
            uf.union(seqs[0], other)

    classes_by_dim = {k: {} for k in range(dim + 1)}
    for key, seqs in raw_by_key.items():
        root = uf.find(seqs[0])
        classes_by_dim[key[0]].setdefault(root, set()).update(seqs)

    rep_sets = {
        k: [frozenset(v) for v in sorted(classes.values(), key=min)]
        for k, classes in classes_by_dim.items()
    }

    # Temporary complex without labels, to resolve 1-cell indices.
    skeleton = DeltaComplex(rep_sets, {}, PAIR_IDENTITY)
    labels = {}
    for cell in skeleton.cells[1]:
        (x0, y0), (x1, y1) = cell.canonical
        lx = GROUP_IDENTITY if x0 == x1 else X.step_label(x0, x1)
        ly = GROUP_IDENTITY if y0 == y1 else Y.step_label(y0, y1)
        labels[cell.index] = PairElement(lx, ly)
    return DeltaComplex(rep_sets, labels, PAIR_IDENTITY)


# -- the Klein bottle square with its published cell numbering ----------------

def expand_table_entry(entry):
    """Raw representative set of a printed table entry.

    Tokens are two-character strings; the letter "v" marks the degenerate
    factor and expands to every vertex instance (the same one at every
    position of that factor).
    """
    raw = set()
    for rep in entry:
        xs = [t[0] for t in rep]
        ys = [t[1] for t in rep]
        x_wild = "v" in xs
        y_wild = "v" in ys
        if x_wild and any(ch != "v" for ch in xs):
            raise ValueError(f"mixed wildcard in {rep}")
        if y_wild and any(ch != "v" for ch in ys):
            raise ValueError(f"mixed wildcard in {rep}")
        for wx in range(6) if x_wild else (None,):
            for wy in range(6) if y_wild else (None,):
                raw.add(
                    tuple(
                        (
                            wx if x == "v" else int(x),
                            wy if y == "v" else int(y),
                        )
                        for x, y in zip(xs, ys)
                    )
                )
    return frozenset(raw)


def table_rep_sets():
    """Published cell tables of the Klein bottle square as raw rep sets."""
    per_dim = {}
    listed = (
        tables.CELLS_0,
        tables.CELLS_1,
        tables.CELLS_2,
        tables.CELLS_3,
        tables.CELLS_4,
    )
    for d, entries in enumerate(listed):
        per_dim[d] = [expand_table_entry(e) for e in entries]
    return per_dim


def klein_square():
    """product(K, K) renumbered to the published cell tables.

    The constructor's lexicographic ordering does not agree with the published
    numbering, which downstream indices (matrix rows and columns, the sign
    table) are tied to, so the cells are permuted to match.  A mismatch in the
    representative sets themselves is an error.
    """
    K = klein_bottle()
    KK = product(K, K)
    wanted = table_rep_sets()
    rep_sets = {}
    for d in range(5):
        computed = {cell.representatives: cell for cell in KK.cells[d]}
        row = []
        for i, reps in enumerate(wanted[d], start=1):
            if reps not in computed:
                raise AssertionError(
                    f"computed {d}-cells do not contain the published cell "
                    f"#{i}; enumeration disagrees with the reference tables"
                )
            row.append(reps)
        if len(computed) != len(row):
            raise AssertionError(
                f"{len(computed)} computed {d}-cells vs {len(row)} published"
            )
        rep_sets[d] = row
    skeleton = DeltaComplex(rep_sets, {}, PAIR_IDENTITY)
    labels = {}
    for cell in skeleton.cells[1]:
        (x0, y0), (x1, y1) = cell.canonical
        lx = GROUP_IDENTITY if x0 == x1 else K.step_label(x0, x1)
        ly = GROUP_IDENTITY if y0 == y1 else K.step_label(y0, y1)
        labels[cell.index] = PairElement(lx, ly)
    return DeltaComplex(rep_sets, labels, PAIR_IDENTITY)


def _compress_reps(reps):
    """Render a representative set, collapsing a degenerate factor that runs
    through every vertex instance to the wildcard "v"."""
    reps = set(reps)
    out = []
    seen = set()
    for rep in sorted(reps):
        if rep in seen:
            continue
        xs = [v[0] for v in rep]
        ys = [v[1] for v in rep]
        if len(set(xs)) == 1 and len(set(ys)) == 1:
            family = {tuple((wx, wy) for _ in rep)
                      for wx in range(6) for wy in range(6)}
        elif len(set(xs)) == 1:
            family = {tuple((w, y) for y in ys) for w in range(6)}
        elif len(set(ys)) == 1:
            family = {tuple((x, w) for x in xs) for w in range(6)}
        else:
            family = None
        if family is not None and family <= reps:
            seen |= family
            if len(set(xs)) == 1 and len(set(ys)) == 1:
                out.append("(vv)")
            elif len(set(xs)) == 1:
                out.append("(" + ",".join(f"v{y}" for y in ys) + ")")
            else:
                out.append("(" + ",".join(f"{x}v" for x in xs) + ")")
        else:
            seen.add(rep)
            out.append("(" + ",".join(f"{x}{y}" for x, y in rep) + ")")
    return out


def render_cell_row(cell):
    """One line of the cell table: "index: rep=rep=...", wildcard-compressed."""
    return f"{cell.index}: " + "=".join(_compress_reps(cell.representatives))


def complex_to_json(complex_):
    data = {"cell_counts": list(complex_.cell_counts()), "dimensions": {}}
    for d in range(complex_.dimension + 1):
        rows = []
        for cell in complex_.cells[d]:
            entry = {
                "index": cell.index,
                "canonical": [list(v) if isinstance(v, tuple) else v
                              for v in cell.canonical],
                "representatives": sorted(
                    [list(v) if isinstance(v, tuple) else v for v in rep]
                    for rep in cell.representatives
                ),
                "faces": list(cell.faces),
            }
            if d == 1 and cell.index in complex_.edge_labels:
                entry["label"] = str(complex_.edge_labels[cell.index])
            rows.append(entry)
        data["dimensions"][str(d)] = rows
    return data
