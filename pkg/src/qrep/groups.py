"""Finite groups presented by Cayley tables.

A :class:`FiniteGroup` stores the full multiplication table (indices into a
fixed element list), the identity, inverses, and optional display labels.
Structural data used elsewhere in the package — conjugacy classes, the center,
the commutator subgroup, the abelianization, maximal abelian subgroups — is
computed on demand and cached.

Groups can be built from an explicit table (validated), from a closure of
generators under an arbitrary associative operation, or as direct products.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ResourceLimitError, ValidationError
from .snf import factorize, invariant_factors_from_cyclic_orders

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "Abelianization",
    "StructureReport",
    "direct_product",
    "group_from_closure",
    "group_from_perm_gens",
    "permutations_from_cycle_text",
    "structure_invariants",
    "generating_set",
    "maximal_abelian_subgroups",
    "abelian_invariants_of",
    "invariants_from_element_orders",
    "dedup_subgroups_up_to_conjugacy",
]

# Full validation of a Cayley table is O(n^3); beyond this size callers must
# construct groups through a closure (which guarantees associativity).
VALIDATE_CAP = 512
# Upper bound on closure-built group order.
CLOSURE_CAP = 10000


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``mul[a, b]`` is the index of the product of elements ``a`` and ``b``.
    """

    def __init__(self, mul, labels=None, name: str | None = None,
                 validate: bool = True):
        table = np.asarray(mul, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValidationError("Cayley table must be a square matrix")
        n = table.shape[0]
        if n == 0:
            raise ValidationError("a group must have at least one element")
        if table.min() < 0 or table.max() >= n:
            raise ValidationError("Cayley table entries must be indices in [0, n)")
        self.mul = table
        self.order = n
        self.name = name
        if labels is None:
            labels = [f"g{i}" for i in range(n)]
        if len(labels) != n:
            raise ValidationError("label list length must equal the group order")
        self.labels = [str(x) for x in labels]

        target = np.arange(n)
        # identity: the unique e with e*x = x and x*e = x for all x
        row_ids = np.nonzero((table == target[None, :]).all(axis=1))[0]
        col_ids = np.nonzero((table == target[:, None]).all(axis=0))[0]
        ids = sorted(set(row_ids.tolist()) & set(col_ids.tolist()))
        if len(ids) != 1:
            raise ValidationError("Cayley table does not have a unique identity")
        self.identity = int(ids[0])

        if validate:
            if n > VALIDATE_CAP:
                raise ResourceLimitError(
                    f"group of order {n} exceeds the validation cap {VALIDATE_CAP}; "
                    "construct it via a closure or pass validate=False")
            for a in range(n):
                if not np.array_equal(np.sort(table[a]), target):
                    raise ValidationError(f"row {a} of the Cayley table is not a permutation")
                if not np.array_equal(np.sort(table[:, a]), target):
                    raise ValidationError(f"column {a} of the Cayley table is not a permutation")
            for a in range(n):
                if not np.array_equal(table[table[a]], table[a][table]):
                    raise ValidationError(f"Cayley table is not associative (row {a})")

        # Latin-square rows make inverses unique.
        self.inv = np.argmax(table == self.identity, axis=1).astype(np.int64)
        if np.any(table[np.arange(n), self.inv] != self.identity):
            raise ValidationError("Cayley table has an element without an inverse")

    # -- basics -------------------------------------------------------------

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"

    def power(self, g: int, k: int) -> int:
        """k-th power of element g (k may be negative)."""
        if k < 0:
            g, k = int(self.inv[g]), -k
        result, base = self.identity, int(g)
        mul = self.mul
        while k:
            if k & 1:
                result = int(mul[result, base])
            base = int(mul[base, base])
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        out = np.zeros(self.order, dtype=np.int64)
        mul = self.mul
        for g in range(self.order):
            x, k = int(g), 1
            while x != self.identity:
                x = int(mul[x, g])
                k += 1
            out[g] = k
        return out

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in self.element_orders))

    @cached_property
    def conj_table(self) -> np.ndarray:
        """conj_table[g, x] = g x g^{-1}."""
        gx = self.mul
        return self.mul[gx, self.inv[:, None]]

    def conjugate(self, g: int, x: int) -> int:
        return int(self.conj_table[g, x])

    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Conjugacy classes as sorted tuples, ordered by minimal member."""
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = np.unique(self.conj_table[:, x])
            seen[orbit] = True
            classes.append(tuple(int(v) for v in orbit))
        return classes

    @cached_property
    def class_index(self) -> np.ndarray:
        out = np.zeros(self.order, dtype=np.int64)
        for i, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                out[x] = i
        return out

    @cached_property
    def center(self) -> tuple[int, ...]:
        mask = (self.mul == self.mul.T).all(axis=1)
        return tuple(int(i) for i in np.nonzero(mask)[0])

    @cached_property
    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    def centralizer(self, elements) -> tuple[int, ...]:
        """All g commuting with every element of the given set."""
        els = list(elements)
        if not els:
            return tuple(range(self.order))
        mask = (self.mul[:, els] == self.mul[els, :].T).all(axis=1)
        return tuple(int(i) for i in np.nonzero(mask)[0])

    def subgroup_closure(self, generators) -> tuple[int, ...]:
        """The subgroup generated by the given elements, as a sorted tuple."""
        mul = self.mul
        members = {self.identity}
        queue = [self.identity]
        gens = sorted(set(int(g) for g in generators))
        while queue:
            x = queue.pop()
            for g in gens:
                y = int(mul[x, g])
                if y not in members:
                    members.add(y)
                    queue.append(y)
        return tuple(sorted(members))

    @cached_property
    def commutator_subgroup(self) -> tuple[int, ...]:
        mul, inv = self.mul, self.inv
        # all commutators a b a^{-1} b^{-1}
        ab = mul
        a_inv = inv[:, None]
        comms = mul[mul[ab, a_inv], inv[None, :]]
        return self.subgroup_closure(np.unique(comms))

    # -- quotients and subgroups ---------------------------------------------

    def is_normal(self, elements) -> bool:
        els = sorted(int(x) for x in elements)
        sset = set(els)
        return all(set(int(v) for v in self.conj_table[g, els]) == sset
                   for g in range(self.order))

    def quotient_by(self, normal_elements) -> tuple["FiniteGroup", np.ndarray]:
        """Quotient by a normal subgroup; returns (quotient, projection)."""
        els = sorted(int(x) for x in normal_elements)
        if self.identity not in els:
            raise ValidationError("normal subgroup must contain the identity")
        if not self.is_normal(els):
            raise ValidationError("subgroup is not normal")
        n = self.order
        coset_of = {}
        reps = []
        proj = np.full(n, -1, dtype=np.int64)
        for x in range(n):
            if proj[x] >= 0:
                continue
            members = [int(v) for v in self.mul[x, els]]
            idx = len(reps)
            reps.append(min(members))
            for ymem in members:
                proj[ymem] = idx
        k = len(reps)
        qmul = np.zeros((k, k), dtype=np.int64)
        for i, a in enumerate(reps):
            qmul[i] = proj[self.mul[a, reps]]
        quotient = FiniteGroup(qmul, labels=[self.labels[r] for r in reps],
                               name=None, validate=False)
        return quotient, proj

    def subgroup(self, elements) -> "Subgroup":
        els = tuple(sorted(int(x) for x in set(elements)))
        mul = self.mul
        sset = set(els)
        for a in els:
            for v in mul[a, els]:
                if int(v) not in sset:
                    raise ValidationError("element set is not closed under multiplication")
        return Subgroup(parent=self, elements=els)

    @cached_property
    def abelianization(self) -> "Abelianization":
        quotient, proj = self.quotient_by(self.commutator_subgroup)
        invariants = abelian_invariants_of(quotient)
        return Abelianization(
            invariants=invariants,
            exponent=invariants[-1] if invariants else 1,
            order=quotient.order,
            quotient=quotient,
            projection=proj,
        )

    @cached_property
    def maximal_abelian_subgroups(self) -> list[tuple[int, ...]]:
        """All maximal abelian subgroups (each equals its own centralizer)."""
        if self.is_abelian:
            return [tuple(range(self.order))]
        results: set[tuple[int, ...]] = set()
        visited: set[frozenset[int]] = set()
        stack = [frozenset(self.subgroup_closure((x,))) for x in range(self.order)]
        while stack:
            H = stack.pop()
            if H in visited:
                continue
            visited.add(H)
            cent = self.centralizer(sorted(H))
            if len(cent) == len(H):
                results.add(tuple(sorted(H)))
                continue
            for y in cent:
                if y not in H:
                    # y centralizes the abelian subgroup H, so <H, y> is abelian
                    stack.append(frozenset(self.subgroup_closure(tuple(H) + (y,))))
        return sorted(results)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a parent group, given by its sorted element indices."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_group(self) -> tuple[FiniteGroup, np.ndarray]:
        """The subgroup as a standalone group plus its embedding map.

        Returns ``(H, to_parent)`` where ``to_parent[i]`` is the parent index
        of element ``i`` of ``H``.
        """
        els = self.elements
        pos = {e: i for i, e in enumerate(els)}
        k = len(els)
        table = np.zeros((k, k), dtype=np.int64)
        pmul = self.parent.mul
        for i, a in enumerate(els):
            table[i] = [pos[int(v)] for v in pmul[a, els]]
        H = FiniteGroup(table, labels=[self.parent.labels[e] for e in els],
                        validate=False)
        return H, np.array(els, dtype=np.int64)


@dataclass
class Abelianization:
    """The maximal abelian quotient of a group."""

    invariants: list[int]
    exponent: int
    order: int
    quotient: FiniteGroup
    projection: np.ndarray


def invariants_from_element_orders(orders) -> list[int]:
    """Invariant factors of a finite abelian group from its element orders.

    For each prime p, the number of elements killed by p^j determines how many
    cyclic p-power factors have exponent at least j; those counts pin down the
    isomorphism type.
    """
    orders = [int(o) for o in orders]
    total = len(orders)
    if total == 0:
        raise ValidationError("need at least the identity element")
    cyclic_orders: list[int] = []
    for p in factorize(total) if total > 1 else {}:
        lams = []
        prev = 1
        j = 1
        while True:
            pj = p ** j
            nj = sum(1 for o in orders if pj % o == 0)
            if nj == prev:
                break
            ratio, lam = nj // prev, 0
            while ratio > 1:
                ratio //= p
                lam += 1
            lams.append(lam)
            prev = nj
            j += 1
        for jj, lam in enumerate(lams, start=1):
            nxt = lams[jj] if jj < len(lams) else 0
            cyclic_orders.extend([p ** jj] * (lam - nxt))
    return invariant_factors_from_cyclic_orders(cyclic_orders)


def abelian_invariants_of(G: FiniteGroup) -> list[int]:
    """Invariant factors of a finite abelian group (ascending divisor chain)."""
    if not G.is_abelian:
        raise ValidationError("invariant factors require an abelian group")
    return invariants_from_element_orders(G.element_orders)


def dedup_subgroups_up_to_conjugacy(G: FiniteGroup, subgroups) -> list[tuple[int, ...]]:
    """One canonical representative per conjugacy class of subgroups.

    The representative is the conjugate whose sorted element tuple is
    lexicographically minimal, which makes the output deterministic.
    """
    canon: set[tuple[int, ...]] = set()
    for S in subgroups:
        els = list(S)
        best = None
        for g in range(G.order):
            img = tuple(sorted(int(v) for v in G.conj_table[g, els]))
            if best is None or img < best:
                best = img
        canon.add(best)
    return sorted(canon)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Direct product; element (a, b) gets index a * |H| + b."""
    n1, n2 = G.order, H.order
    if n1 * n2 > CLOSURE_CAP:
        raise ResourceLimitError(f"direct product of order {n1 * n2} exceeds cap {CLOSURE_CAP}")
    mul = (G.mul[:, None, :, None] * n2 + H.mul[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [f"{la}|{lb}" for la in G.labels for lb in H.labels]
    if name is None and G.name and H.name:
        name = f"{G.name}x{H.name}"
    return FiniteGroup(mul, labels=labels, name=name, validate=False)


def group_from_closure(generators, op, identity, labeler=str,
                       name: str | None = None, cap: int = CLOSURE_CAP) -> FiniteGroup:
    """Group generated by ``generators`` under the associative operation ``op``.

    Elements must be hashable; the element list is discovered breadth-first
    from the identity (deterministic order, identity first).
    """
    elems = [identity]
    index = {identity: 0}
    i = 0
    gens = list(generators)
    while i < len(elems):
        x = elems[i]
        i += 1
        for g in gens:
            y = op(x, g)
            if y not in index:
                if len(elems) >= cap:
                    raise ResourceLimitError(f"closure exceeded {cap} elements")
                index[y] = len(elems)
                elems.append(y)
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        row = elems[a]
        for b in range(n):
            table[a, b] = index[op(row, elems[b])]
    return FiniteGroup(table, labels=[labeler(x) for x in elems], name=name,
                       validate=n <= 256)


def _cycle_label(perm: tuple[int, ...]) -> str:
    """Disjoint-cycle string for a permutation tuple, identity rendered ``()``."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def group_from_perm_gens(generators, degree: int | None = None,
                         name: str | None = None) -> FiniteGroup:
    """Permutation group generated by the given permutations of {0..k-1}.

    Each generator is a sequence ``p`` with ``p[i]`` the image of point ``i``.
    Element 0 is the identity; the element order is breadth-first from the
    identity with generators applied in input order, so it is deterministic.
    """
    gens = [tuple(int(v) for v in p) for p in generators]
    if degree is None:
        if not gens:
            raise ValidationError("need a degree or at least one generator")
        degree = len(gens[0])
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise ValidationError(f"not a permutation of 0..{degree - 1}: {p}")

    def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(a[v] for v in b)

    identity = tuple(range(degree))
    return group_from_closure(gens, compose, identity, labeler=_cycle_label,
                              name=name)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def permutations_from_cycle_text(lines, degree: int) -> list[tuple[int, ...]]:
    """Parse permutations written in disjoint-cycle notation, one per line.

    Example line: ``(0 1)(2 3)``. Points are 0-based and must be below
    ``degree``; an empty product (``()`` or a blank line) is the identity.
    """
    perms = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        body_check = text.replace(" ", "")
        consumed = "".join(f"({m})" for m in _CYCLE_RE.findall(text)).replace(" ", "")
        if body_check != consumed:
            raise ValidationError(
                f"line {lineno}: malformed cycle notation: {raw!r}")
        perm = list(range(degree))
        for cycle_body in _CYCLE_RE.findall(text):
            pts = [int(tok) for tok in cycle_body.split()]
            if any(p < 0 or p >= degree for p in pts):
                raise ValidationError(
                    f"line {lineno}: point out of range 0..{degree - 1}")
            if len(set(pts)) != len(pts):
                raise ValidationError(f"line {lineno}: repeated point in cycle")
            for i, p in enumerate(pts):
                perm[p] = pts[(i + 1) % len(pts)]
        perms.append(tuple(perm))
    return perms


def maximal_abelian_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Maximal abelian subgroups, one representative per conjugacy class.

    Every maximal abelian subgroup equals its own centralizer and therefore
    contains the center. Representatives are canonical (lexicographically
    minimal conjugate) and sorted, so the output is deterministic.
    """
    reps = dedup_subgroups_up_to_conjugacy(G, G.maximal_abelian_subgroups)
    return [Subgroup(parent=G, elements=els) for els in reps]


def generating_set(G: FiniteGroup) -> tuple[int, ...]:
    """A small generating set, chosen deterministically.

    Greedy scan in order of decreasing element order (ties broken by index),
    adding each element not already generated. Every addition at least
    doubles the subgroup, so at most log2(|G|) elements are chosen.
    """
    if G.order == 1:
        return ()
    chosen: list[int] = []
    closure = {G.identity}
    order_key = sorted(range(G.order),
                       key=lambda x: (-int(G.element_orders[x]), x))
    for g in order_key:
        if g in closure:
            continue
        chosen.append(g)
        closure = set(G.subgroup_closure(chosen))
        if len(closure) == G.order:
            break
    return tuple(chosen)


@dataclass
class StructureReport:
    """Structural summary of a finite group."""

    order: int
    exponent: int
    is_abelian: bool
    center_order: int
    class_count: int
    class_sizes: list[int]
    commutator_order: int
    is_perfect: bool
    abelianization_invariants: list[int]
    element_order_histogram: dict[int, int]


def structure_invariants(G: FiniteGroup) -> StructureReport:
    """Compute the :class:`StructureReport` for ``G``."""
    classes = G.conjugacy_classes
    orders = [int(o) for o in G.element_orders]
    hist: dict[int, int] = {}
    for o in orders:
        hist[o] = hist.get(o, 0) + 1
    commutator = G.commutator_subgroup
    return StructureReport(
        order=G.order,
        exponent=G.exponent,
        is_abelian=G.is_abelian,
        center_order=len(G.center),
        class_count=len(classes),
        class_sizes=[len(c) for c in classes],
        commutator_order=len(commutator),
        is_perfect=len(commutator) == G.order,
        abelianization_invariants=list(G.abelianization.invariants),
        element_order_histogram=dict(sorted(hist.items())),
    )
