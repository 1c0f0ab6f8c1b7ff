"""Groups with ramification data and the quivers they generate.

A ramification datum assigns a multiplicity to each conjugacy class of a
group G.  The associated quiver has vertex set G and, for each class C
with multiplicity R_C and each c in C, R_C arrows x -> cx.  The two
minimal connected cases are the basic n-cycle (cyclic group, class {g})
and the linear chain (infinite cyclic group, class {g}); their paths are
the basis of everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

__all__ = [
    "GroupSpec",
    "HopfQuiver",
    "Arrow",
    "Path",
    "cycle_kind",
    "chain_kind",
    "cycle_path",
    "chain_path",
    "build_hopf_quiver",
    "conjugacy_classes",
    "conjugacy_class_of",
    "resolve_ramification",
    "is_connected_hopf_quiver",
    "enumerate_paths",
]


class GroupSpec:
    """A group given as a Cayley table, with cyclic shortcuts.

    Variants: ``cyclic(n)``, ``infinite_cyclic()`` and ``from_table``.
    Finite tables are checked for the group axioms on construction.
    """

    def __init__(self, kind, n=None, labels=None, table=None):
        self.kind = kind
        self.n = n
        self.labels = labels
        self.table = table
        if kind == "table":
            self._check_axioms()

    # -- constructors ------------------------------------------------------

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise ValueError("cyclic group order must be positive")
        labels = [_power_label(k) for k in range(n)]
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls("cyclic", n=n, labels=labels, table=table)

    @classmethod
    def infinite_cyclic(cls):
        return cls("infinite-cyclic")

    @classmethod
    def from_table(cls, labels, table):
        return cls("table", n=len(labels), labels=list(labels),
                   table=[list(row) for row in table])

    @classmethod
    def from_multiplication(cls, labels, mul):
        """Build a table group from labels and a label-level product."""
        labels = list(labels)
        index = {lab: k for k, lab in enumerate(labels)}
        table = [[index[mul(a, b)] for b in labels] for a in labels]
        return cls.from_table(labels, table)

    # -- structure ---------------------------------------------------------

    @property
    def is_finite(self):
        return self.kind != "infinite-cyclic"

    def _check_axioms(self):
        n = self.n
        for row in self.table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("Cayley table is not square over the labels")
        identity = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("Cayley table has no identity element")
        self._identity = identity
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError("Cayley table is not associative")
        for a in range(n):
            if not any(self.table[a][b] == identity and self.table[b][a] == identity
                       for b in range(n)):
                raise ValueError("Cayley table has an element without inverse")

    def identity_index(self):
        if not self.is_finite:
            raise ValueError("infinite group has no element table")
        if self.kind == "cyclic":
            return 0
        return self._identity

    def mul(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        e = self.identity_index()
        for b in range(self.n):
            if self.mul(a, b) == e:
                return b
        raise AssertionError("group axiom check should have caught this")

    def label(self, index):
        return self.labels[index]

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown group element {label!r}") from None

    def __repr__(self):
        if self.kind == "cyclic":
            return f"GroupSpec.cyclic({self.n})"
        if self.kind == "infinite-cyclic":
            return "GroupSpec.infinite_cyclic()"
        return f"GroupSpec.from_table({self.labels!r})"


def _power_label(k):
    if k == 0:
        return "e"
    if k == 1:
        return "g"
    return f"g^{k}"


def _parse_power_label(label):
    if label == "e":
        return 0
    if label == "g":
        return 1
    if label.startswith("g^"):
        return int(label[2:])
    raise ValueError(f"unknown group element {label!r}")


# -- conjugacy classes -------------------------------------------------------

def conjugacy_classes(group):
    """Partition of a finite group into conjugacy classes.

    Classes are sorted label lists; the class identifier used elsewhere
    is the lexicographically least label of the class.
    """
    if not group.is_finite:
        raise ValueError("use singleton classes {g^k} directly")
    n = group.n
    seen = [False] * n
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = set()
        for t in range(n):
            y = group.mul(group.mul(t, x), group.inverse(t))
            orbit.add(y)
        for y in orbit:
            seen[y] = True
        classes.append(sorted(group.label(y) for y in orbit))
    classes.sort(key=lambda cls: cls[0])
    return classes


def conjugacy_class_of(group, label):
    """The class identifier (least label) of the class containing label."""
    if group.kind == "infinite-cyclic":
        _parse_power_label(label)
        return label
    for cls in conjugacy_classes(group):
        if label in cls:
            return cls[0]
    raise ValueError(f"unknown group element {label!r}")


def resolve_ramification(group, entries):
    """Normalize a label -> multiplicity map to class-id keys."""
    out = {}
    for label, mult in entries.items():
        cid = conjugacy_class_of(group, label)
        out[cid] = out.get(cid, 0) + mult
    return out


# -- quivers -----------------------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    src: str
    tgt: str
    cls: str
    copy: int


@dataclass
class HopfQuiver:
    vertices: list
    arrows: list

    def out_degree(self, vertex):
        return sum(1 for a in self.arrows if a.src == vertex)

    def in_degree(self, vertex):
        return sum(1 for a in self.arrows if a.tgt == vertex)

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"src": a.src, "tgt": a.tgt, "class": a.cls, "copy": a.copy}
                for a in self.arrows
            ],
        }

    def is_connected_undirected(self):
        if not self.vertices:
            return True
        adjacency = {v: set() for v in self.vertices}
        for a in self.arrows:
            adjacency[a.src].add(a.tgt)
            adjacency[a.tgt].add(a.src)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def build_hopf_quiver(group, ramification, window=None):
    """The quiver of (group, ramification): R_C arrows x -> cx per c in C.

    For the infinite cyclic group a window (lo, hi) of generator
    exponents must be supplied; only arrows with both endpoints inside
    the window are materialized.
    """
    if group.kind == "infinite-cyclic":
        if window is None:
            raise ValueError("infinite cyclic group needs a vertex window")
        lo, hi = window
        shifts = {}
        for label, mult in ramification.items():
            shifts[_parse_power_label(label)] = mult
        vertices = [_power_label(k) for k in range(lo, hi + 1)]
        arrows = []
        for k in range(lo, hi + 1):
            for shift in sorted(shifts):
                mult = shifts[shift]
                if lo <= k + shift <= hi:
                    for copy in range(mult):
                        arrows.append(Arrow(_power_label(k), _power_label(k + shift),
                                            _power_label(shift), copy))
        return HopfQuiver(vertices, arrows)

    classes = {cls[0]: cls for cls in conjugacy_classes(group)}
    for key in ramification:
        if key not in classes:
            raise ValueError(f"ramification key {key!r} is not a conjugacy class")
    vertices = list(group.labels)
    arrows = []
    for x in range(group.n):
        for cid in sorted(ramification):
            mult = ramification[cid]
            for c_label in classes[cid]:
                c = group.index_of(c_label)
                tgt = group.mul(c, x)
                for copy in range(mult):
                    arrows.append(Arrow(group.label(x), group.label(tgt),
                                        cid, copy))
    return HopfQuiver(vertices, arrows)


def is_connected_hopf_quiver(group, ramification):
    """True iff the classes with nonzero multiplicity generate the group."""
    if not group.is_finite:
        raise ValueError("connectivity test requires a finite group")
    classes = {cls[0]: cls for cls in conjugacy_classes(group)}
    for key in ramification:
        if key not in classes:
            raise ValueError(f"ramification key {key!r} is not a conjugacy class")
    generators = set()
    for cid, mult in ramification.items():
        if mult > 0:
            generators.update(group.index_of(lab) for lab in classes[cid])
    closure = {group.identity_index()}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for s in generators:
            y = group.mul(s, x)
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    return len(closure) == group.n


# -- paths -------------------------------------------------------------------

def cycle_kind(n):
    if n < 1:
        raise ValueError("cycle length must be positive")
    return ("cycle", n)


def chain_kind():
    return ("chain",)


@dataclass(frozen=True)
class Path:
    """The path p_i^l: source index i, length l, in a cycle or chain.

    Cycle sources are reduced modulo n; length 0 is the vertex g^i.
    """

    kind: tuple
    source: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("path length must be nonnegative")
        if self.kind[0] == "cycle":
            object.__setattr__(self, "source", self.source % self.kind[1])
        elif self.kind[0] != "chain":
            raise ValueError(f"unknown quiver kind {self.kind!r}")

    @property
    def is_vertex(self):
        return self.length == 0

    @property
    def target(self):
        t = self.source + self.length
        if self.kind[0] == "cycle":
            t %= self.kind[1]
        return t

    def shift(self, offset, length_delta=0):
        return Path(self.kind, self.source + offset, self.length + length_delta)

    def sort_key(self):
        return (self.length, self.source)

    def __str__(self):
        if self.length == 0:
            if self.source == 0:
                return "1"
            return f"g^{self.source}"
        return f"p[{self.source},{self.length}]"


def cycle_path(n, source, length):
    return Path(cycle_kind(n), source, length)


def chain_path(source, length):
    return Path(chain_kind(), source, length)


def enumerate_paths(kind, max_len, window=None):
    """All p_i^l with 0 <= l <= max_len; chain sources come from window."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    out = []
    if kind[0] == "cycle":
        n = kind[1]
        for l in range(max_len + 1):
            for i in range(n):
                out.append(Path(kind, i, l))
    else:
        if window is None:
            raise ValueError("chain enumeration needs a source window")
        lo, hi = window
        for l in range(max_len + 1):
            for i in range(lo, hi + 1):
                out.append(Path(kind, i, l))
    return out
