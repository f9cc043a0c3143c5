"""Exact arithmetic in the Klein bottle group, its square, and their group rings.

The Klein bottle group is generated by two loops a, b subject to ba = ab^-1.
Every element has a unique normal form a^m b^n, so elements are stored as
integer exponent pairs.  The third loop c = ab^-1 = ba is used throughout.

The augmentation ideal of the integral group ring is free abelian on
alpha_{m,n} = a^m b^n - 1 for (m, n) != (0, 0); `IdealElement` stores
coefficients against that basis, and `TensorElement` stores tensors of such
basis elements (four slots in the main computation).  All values are
immutable; operations return new objects.
"""

import re


class GroupElement(tuple):
    """Element a^m b^n of the Klein bottle group, stored as (m, n)."""

    __slots__ = ()

    def __new__(cls, m, n):
        return tuple.__new__(cls, (m, n))

    @property
    def m(self):
        return self[0]

    @property
    def n(self):
        return self[1]

    def __mul__(self, other):
        # a^m1 b^n1 a^m2 b^n2 = a^(m1+m2) b^(n1*(-1)^m2 + n2), since moving
        # each b past an a inverts it.
        m1, n1 = self
        m2, n2 = other
        return GroupElement(m1 + m2, n2 + (n1 if m2 % 2 == 0 else -n1))

    def inverse(self):
        m, n = self
        return GroupElement(-m, n if m % 2 else -n)

    def is_identity(self):
        return self[0] == 0 and self[1] == 0

    def __pow__(self, k):
        result = GROUP_IDENTITY
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __repr__(self):
        return f"GroupElement({self[0]}, {self[1]})"

    def __str__(self):
        return render_group(self)


GROUP_IDENTITY = GroupElement(0, 0)
GEN_A = GroupElement(1, 0)
GEN_B = GroupElement(0, 1)
GEN_C = GroupElement(1, -1)          # c = a b^-1 = b a


class PairElement(tuple):
    """Element of the product group, one factor per coordinate of K x K."""

    __slots__ = ()

    def __new__(cls, first, second):
        return tuple.__new__(cls, (first, second))

    @property
    def first(self):
        return self[0]

    @property
    def second(self):
        return self[1]

    def __mul__(self, other):
        return PairElement(self[0] * other[0], self[1] * other[1])

    def inverse(self):
        return PairElement(self[0].inverse(), self[1].inverse())

    def is_identity(self):
        return self[0].is_identity() and self[1].is_identity()

    def __repr__(self):
        return f"PairElement({self[0]!r}, {self[1]!r})"

    def __str__(self):
        return render_pair(self)


PAIR_IDENTITY = PairElement(GROUP_IDENTITY, GROUP_IDENTITY)


def pair(g_first=GROUP_IDENTITY, g_second=GROUP_IDENTITY):
    return PairElement(g_first, g_second)


class RingElement:
    """Finite integer combination of group elements (of either group).

    Basis keys are `GroupElement` or `PairElement`; zero coefficients are
    never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        for g, c in (terms.items() if isinstance(terms, dict) else terms):
            if c:
                c0 = data.get(g, 0) + c
                if c0:
                    data[g] = c0
                else:
                    del data[g]
        self.terms = data

    @classmethod
    def _raw(cls, data):
        self = object.__new__(cls)
        self.terms = data
        return self

    @classmethod
    def monomial(cls, g, coeff=1):
        return cls._raw({g: coeff} if coeff else {})

    @classmethod
    def one(cls, identity=GROUP_IDENTITY):
        return cls._raw({identity: 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, RingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        data = dict(self.terms)
        for g, c in other.terms.items():
            c0 = data.get(g, 0) + c
            if c0:
                data[g] = c0
            else:
                data.pop(g, None)
        return RingElement._raw(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RingElement._raw({g: -c for g, c in self.terms.items()})

    def scale(self, k):
        if k == 0:
            return RingElement._raw({})
        return RingElement._raw({g: k * c for g, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        data = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = g1 * g2
                c0 = data.get(g, 0) + c1 * c2
                if c0:
                    data[g] = c0
                else:
                    del data[g]
        return RingElement._raw(data)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def augmentation(self):
        return sum(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"RingElement({self.terms!r})"

    def __str__(self):
        return render_ring(self)


def ring_mul(x, y):
    """Product in the group ring; bilinear extension of the group law."""
    return x * y


def group_monomial(m, n, coeff=1):
    return RingElement.monomial(GroupElement(m, n), coeff)


def pair_monomial(g_first=GROUP_IDENTITY, g_second=GROUP_IDENTITY, coeff=1):
    return RingElement.monomial(PairElement(g_first, g_second), coeff)


PAIR_ONE = RingElement.one(PAIR_IDENTITY)


# -- augmentation-ideal elements against the alpha basis ---------------------

def _merged(data, key, coeff):
    if not coeff:
        return
    c0 = data.get(key, 0) + coeff
    if c0:
        data[key] = c0
    else:
        del data[key]


class IdealElement:
    """Augmentation-zero ring element in the basis alpha_{m,n} = a^m b^n - 1.

    Coefficients are stored against the (m, n) index; (0, 0) never occurs.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        for idx, c in (terms.items() if isinstance(terms, dict) else terms):
            idx = (idx[0], idx[1])
            if idx == (0, 0):
                raise ValueError("alpha_{0,0} is not a basis element")
            _merged(data, idx, c)
        self.terms = data

    @classmethod
    def _raw(cls, data):
        self = object.__new__(cls)
        self.terms = data
        return self

    @classmethod
    def alpha(cls, m, n, coeff=1):
        """The basis element alpha_{m,n}; (0, 0) gives the zero element."""
        if (m, n) == (0, 0) or coeff == 0:
            return cls._raw({})
        return cls._raw({(m, n): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, IdealElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        data = dict(self.terms)
        for idx, c in other.terms.items():
            _merged(data, idx, c)
        return IdealElement._raw(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IdealElement._raw({i: -c for i, c in self.terms.items()})

    def scale(self, k):
        if k == 0:
            return IdealElement._raw({})
        return IdealElement._raw({i: k * c for i, c in self.terms.items()})

    def to_ring(self):
        terms = {}
        for (m, n), c in self.terms.items():
            _merged(terms, GroupElement(m, n), c)
            _merged(terms, GROUP_IDENTITY, -c)
        return RingElement._raw(terms)

    @classmethod
    def from_ring(cls, x):
        """Expand an augmentation-zero ring element in the alpha basis."""
        if x.augmentation() != 0:
            raise ValueError("element has nonzero augmentation")
        data = {}
        for g, c in x.terms.items():
            if not g.is_identity():
                _merged(data, (g[0], g[1]), c)
        return cls._raw(data)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"IdealElement({self.terms!r})"

    def __str__(self):
        return render_ideal(self)


def act(p, x):
    """Left-right action of a pair (g, h) on the augmentation ideal: g x h^-1.

    On basis elements: alpha_t maps to alpha_{g t h^-1} - alpha_{g h^-1},
    with alpha at the identity index read as zero.
    """
    g, h = p
    hinv = h.inverse()
    shift = g * hinv
    data = {}
    for (m, n), c in x.terms.items():
        moved = g * GroupElement(m, n) * hinv
        if not moved.is_identity():
            _merged(data, (moved[0], moved[1]), c)
        if not shift.is_identity():
            _merged(data, (shift[0], shift[1]), -c)
    return IdealElement._raw(data)


class TensorElement:
    """Sparse tensor over the alpha basis: keys are tuples of (m, n) indices.

    The number of slots is fixed by the keys (four in the main computation);
    zero coefficients are pruned.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        for key, c in (terms.items() if isinstance(terms, dict) else terms):
            key = tuple((i[0], i[1]) for i in key)
            if any(i == (0, 0) for i in key):
                raise ValueError("alpha_{0,0} is not a basis element")
            _merged(data, key, c)
        self.terms = data

    @classmethod
    def _raw(cls, data):
        self = object.__new__(cls)
        self.terms = data
        return self

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def from_factors(cls, factors):
        """Tensor product of `IdealElement` factors, expanded multilinearly."""
        data = {(): 1}
        for f in factors:
            if not f.terms:
                return cls._raw({})
            new = {}
            for key, c in data.items():
                for idx, c2 in f.terms.items():
                    _merged(new, key + (idx,), c * c2)
            data = new
        return cls._raw(data)

    def slots(self):
        for key in self.terms:
            return len(key)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        data = dict(self.terms)
        for key, c in other.terms.items():
            _merged(data, key, c)
        return TensorElement._raw(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement._raw({k: -c for k, c in self.terms.items()})

    def scale(self, k):
        if k == 0:
            return TensorElement._raw({})
        return TensorElement._raw({key: k * c for key, c in self.terms.items()})

    def tensor(self, other):
        data = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                _merged(data, k1 + k2, c1 * c2)
        return TensorElement._raw(data)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_rows(self):
        """Stable serialization: (m1, n1, ..., mk, nk, coefficient) rows."""
        rows = []
        for key, c in self.sorted_terms():
            flat = []
            for m, n in key:
                flat.extend((m, n))
            flat.append(c)
            rows.append(tuple(flat))
        return rows

    @classmethod
    def from_rows(cls, rows):
        data = {}
        for row in rows:
            *flat, c = row
            if len(flat) % 2:
                raise ValueError("malformed tensor row")
            key = tuple((flat[i], flat[i + 1]) for i in range(0, len(flat), 2))
            _merged(data, key, c)
        return cls._raw(data)

    def __repr__(self):
        return f"TensorElement({self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key, c in self.sorted_terms():
            body = " . ".join(alpha_str(i) for i in key)
            bits.append(_signed(c, body, not bits))
        return " ".join(bits)


def act_tensor(p, t):
    """Diagonal action of a pair on a tensor: act on every slot, expanded."""
    g, h = p
    hinv = h.inverse()
    shift = g * hinv
    shift_idx = None if shift.is_identity() else (shift[0], shift[1])
    data = {}
    for key, c in t.terms.items():
        partial = {(): c}
        for (m, n) in key:
            moved = g * GroupElement(m, n) * hinv
            new = {}
            for pk, pc in partial.items():
                if not moved.is_identity():
                    _merged(new, pk + ((moved[0], moved[1]),), pc)
                if shift_idx is not None:
                    _merged(new, pk + (shift_idx,), -pc)
            partial = new
            if not partial:
                break
        for pk, pc in partial.items():
            _merged(data, pk, pc)
    return TensorElement._raw(data)


def augmentation_character(x):
    """Sum of coefficients of a ring element (multiplicative for products)."""
    return x.augmentation()


def sign_character(g):
    """The character sending a to -1 and b to +1 (same on primed factors)."""
    if isinstance(g, PairElement):
        return sign_character(g[0]) * sign_character(g[1])
    return -1 if g[0] % 2 else 1


# -- textual rendering --------------------------------------------------------

def _power(sym, e):
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}^{e}"


def render_group(g, primed=False):
    """Normal-form string such as "ab^-1"; the identity renders as "1"."""
    suffix = "'" if primed else ""
    body = _power("a" + suffix, g[0]) + _power("b" + suffix, g[1])
    return body or "1"


def render_pair(p):
    first, second = p
    parts = []
    if not first.is_identity():
        parts.append(render_group(first))
    if not second.is_identity():
        parts.append(render_group(second, primed=True))
    return "".join(parts) or "1"


def _signed(c, body, leading):
    if body == "1":
        coeff = str(c) if leading else (f"+ {c}" if c > 0 else f"- {-c}")
        return coeff
    if c == 1:
        return body if leading else f"+ {body}"
    if c == -1:
        return f"-{body}" if leading else f"- {body}"
    if leading:
        return f"{c}{body}"
    return f"+ {c}{body}" if c > 0 else f"- {-c}{body}"


def render_ring(x):
    if not x.terms:
        return "0"
    bits = []
    for g, c in x.sorted_terms():
        body = render_pair(g) if isinstance(g, PairElement) else render_group(g)
        bits.append(_signed(c, body, not bits))
    return " ".join(bits)


def alpha_str(idx):
    return f"α_{{{idx[0]},{idx[1]}}}"


def render_ideal(x):
    if not x.terms:
        return "0"
    bits = []
    for idx, c in x.sorted_terms():
        bits.append(_signed(c, alpha_str(idx), not bits))
    return " ".join(bits)


def parse_group(text):
    """Parse normal-form strings like "ab^-1", "a^2", "1" (unprimed only)."""
    text = text.strip()
    if text == "1":
        return GROUP_IDENTITY
    m = re.fullmatch(r"(?:a(?:\^(-?\d+))?)?(?:b(?:\^(-?\d+))?)?", text)
    if not m or not text:
        raise ValueError(f"not a normal form: {text!r}")
    em = m.group(1)
    en = m.group(2)
    has_a = text.startswith("a")
    has_b = "b" in text
    return GroupElement(
        int(em) if em is not None else (1 if has_a else 0),
        int(en) if en is not None else (1 if has_b else 0),
    )
