"""Quandles as operation tables, with conjugation quandles as the main source.

A quandle is a set with a binary operation ``x ▷ y`` that is idempotent
(``x ▷ x = x``), left-invertible (each row of the table is a permutation), and
left self-distributive (``x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z)``). For a group the
conjugation operation ``x ▷ y = x y x⁻¹`` satisfies all three axioms, and the
orbits of the quandle coincide with the conjugacy classes.

Characters of a quandle with values in ℤ/m are functions constant on orbits;
under pointwise addition they form a group of order ``m**num_orbits``.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceLimitError, ValidationError
from .groups import FiniteGroup

__all__ = [
    "Quandle",
    "QuandleVerdict",
    "QuandleChar",
    "OrbitsInner",
    "validate_quandle",
    "conj_quandle",
    "orbits_and_inner",
    "enumerate_characters",
    "is_quandle_morphism",
]

# Enumerating all characters is exponential in the orbit count; beyond this
# many the caller should sample instead of enumerate.
CHARACTER_ENUM_CAP = 10 ** 6


class Quandle:
    """A finite quandle given by its operation table ``op[x, y] = x ▷ y``."""

    def __init__(self, op, labels=None, name: str | None = None,
                 group: FiniteGroup | None = None, validate: bool = True):
        table = np.asarray(op, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValidationError("quandle operation table must be square")
        self.op = table
        self.size = int(table.shape[0])
        self.labels = (list(labels) if labels is not None
                       else [str(i) for i in range(self.size)])
        if len(self.labels) != self.size:
            raise ValidationError("label count must match quandle size")
        self.name = name
        self.group = group  # the source group for conjugation quandles, if any
        if validate:
            verdict = validate_quandle(table)
            if not verdict.ok:
                raise ValidationError(
                    f"not a quandle: {verdict.axiom} fails at {verdict.witness}")

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<Quandle{nm} size={self.size}>"

    def apply(self, x: int, y: int) -> int:
        return int(self.op[x, y])


@dataclass
class QuandleVerdict:
    """Outcome of quandle axiom validation.

    ``axiom`` names the first violated axiom (``idempotence``,
    ``left-invertibility``, or ``self-distributivity``) and ``witness`` gives
    the offending element, row, or triple. ``ok=True`` means all axioms hold.
    """

    ok: bool
    axiom: str | None = None
    witness: tuple | None = None


def validate_quandle(table) -> QuandleVerdict:
    """Check the three quandle axioms, reporting the first violation found.

    Axioms are checked in a fixed order (idempotence, left-invertibility,
    self-distributivity) and within each axiom in row-major order, so the
    reported witness is deterministic.
    """
    A = np.asarray(table, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError("quandle operation table must be square")
    n = A.shape[0]
    if n == 0:
        raise ValidationError("a quandle must have at least one element")
    if A.min() < 0 or A.max() >= n:
        raise ValidationError("table entries must be indices in 0..n-1")

    diag = np.diagonal(A)
    bad = np.nonzero(diag != np.arange(n))[0]
    if bad.size:
        x = int(bad[0])
        return QuandleVerdict(ok=False, axiom="idempotence", witness=(x,))

    expected = np.arange(n)
    for x in range(n):
        if not np.array_equal(np.sort(A[x]), expected):
            return QuandleVerdict(ok=False, axiom="left-invertibility",
                                  witness=(x,))

    # x ▷ (y ▷ z) == (x ▷ y) ▷ (x ▷ z), vectorized one row at a time to keep
    # memory at O(n²) per slice.
    for x in range(n):
        row = A[x]
        lhs = row[A]                      # lhs[y, z] = x ▷ (y ▷ z)
        rhs = A[np.ix_(row, row)]         # rhs[y, z] = (x ▷ y) ▷ (x ▷ z)
        if not np.array_equal(lhs, rhs):
            y, z = np.argwhere(lhs != rhs)[0]
            return QuandleVerdict(ok=False, axiom="self-distributivity",
                                  witness=(x, int(y), int(z)))
    return QuandleVerdict(ok=True)


def conj_quandle(G: FiniteGroup) -> Quandle:
    """The conjugation quandle of a group: ``x ▷ y = x y x⁻¹``."""
    return Quandle(G.conj_table, labels=G.labels,
                   name=f"Conj({G.name})" if G.name else None,
                   group=G, validate=False)


@dataclass
class OrbitsInner:
    """Orbit decomposition and inner automorphism data of a quandle.

    ``orbits`` partitions the points (each orbit sorted, orbits ordered by
    smallest member). ``orbit_of[x]`` is the orbit index of point ``x``.
    ``inner`` is the group generated by the left translations, and
    ``translation[x]`` is the index inside ``inner`` of the permutation
    ``y ↦ x ▷ y``.
    """

    orbits: list[tuple[int, ...]]
    orbit_of: np.ndarray
    inner: FiniteGroup
    translation: np.ndarray


def orbits_and_inner(Q: Quandle) -> OrbitsInner:
    """Compute orbits and the inner group of left translations."""
    A = Q.op
    n = Q.size

    orbit_of = np.full(n, -1, dtype=np.int64)
    orbits: list[tuple[int, ...]] = []
    for start in range(n):
        if orbit_of[start] >= 0:
            continue
        idx = len(orbits)
        frontier = [start]
        members = {start}
        orbit_of[start] = idx
        while frontier:
            y = frontier.pop()
            for img in A[:, y]:
                img = int(img)
                if img not in members:
                    members.add(img)
                    orbit_of[img] = idx
                    frontier.append(img)
        orbits.append(tuple(sorted(members)))

    rows = [tuple(int(v) for v in A[x]) for x in range(n)]
    gens: list[tuple[int, ...]] = []
    seen = set()
    for r in rows:
        if r not in seen:
            seen.add(r)
            gens.append(r)

    # Closure of the translations under composition, breadth-first from the
    # identity so element order is deterministic. Done inline (rather than via
    # group_from_closure) because we need the permutation tuples afterwards to
    # locate each translation inside the group.
    identity = tuple(range(n))
    elems = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        i += 1
        for g in gens:
            y = tuple(x[v] for v in g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
    k = len(elems)
    table = np.zeros((k, k), dtype=np.int64)
    for a, pa in enumerate(elems):
        table[a] = [index[tuple(pa[v] for v in pb)] for pb in elems]
    inner = FiniteGroup(table, labels=[str(p) for p in elems],
                        name=f"Inn({Q.name})" if Q.name else None,
                        validate=False)
    translation = np.array([index[r] for r in rows], dtype=np.int64)
    return OrbitsInner(orbits=orbits, orbit_of=orbit_of, inner=inner,
                       translation=translation)


@dataclass(frozen=True)
class QuandleChar:
    """A ℤ/m-valued character of a quandle: a function constant on orbits.

    ``orbit_values[i]`` is the value (mod ``modulus``) on orbit ``i``;
    ``orbit_of`` maps points to orbits. ``value(x)`` gives the additive value
    and ``unit(x)`` the corresponding root of unity exp(2πi·value/m).
    """

    modulus: int
    orbit_values: tuple[int, ...]
    orbit_of: tuple[int, ...] = field(repr=False)

    def value(self, x: int) -> int:
        return self.orbit_values[self.orbit_of[x]] % self.modulus

    def unit(self, x: int) -> complex:
        return cmath.exp(2j * cmath.pi * self.value(x) / self.modulus)

    def values_vector(self) -> np.ndarray:
        ov = np.asarray(self.orbit_values, dtype=np.int64)
        return ov[np.asarray(self.orbit_of, dtype=np.int64)] % self.modulus

    def units_vector(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.values_vector() / self.modulus)

    def __mul__(self, other: "QuandleChar") -> "QuandleChar":
        if (self.modulus != other.modulus
                or self.orbit_of != other.orbit_of):
            raise ValidationError("characters live on different quandles/moduli")
        vals = tuple((a + b) % self.modulus
                     for a, b in zip(self.orbit_values, other.orbit_values))
        return QuandleChar(self.modulus, vals, self.orbit_of)


def enumerate_characters(Q: Quandle, modulus: int,
                         cap: int = CHARACTER_ENUM_CAP) -> list[QuandleChar]:
    """All ℤ/m characters of ``Q`` in lexicographic order of orbit values.

    There are ``modulus**num_orbits`` of them; if that exceeds ``cap`` a
    :class:`ResourceLimitError` asks the caller to sample instead.
    """
    if modulus < 1:
        raise ValidationError("modulus must be a positive integer")
    info = orbits_and_inner(Q)
    k = len(info.orbits)
    total = modulus ** k
    if total > cap:
        raise ResourceLimitError(
            f"character count {modulus}^{k} = {total} exceeds cap {cap}; "
            "sample characters instead of enumerating")
    orbit_of = tuple(int(v) for v in info.orbit_of)
    return [QuandleChar(modulus, vals, orbit_of)
            for vals in itertools.product(range(modulus), repeat=k)]


def is_quandle_morphism(f, source: Quandle, target: Quandle):
    """Check ``f(x ▷ y) == f(x) ▷ f(y)`` for all pairs.

    Returns ``(True, None)`` or ``(False, (x, y))`` with the first failing
    pair in row-major order.
    """
    fv = np.asarray(f, dtype=np.int64)
    if fv.shape != (source.size,):
        raise ValidationError("morphism must assign an image to every point")
    if fv.min() < 0 or fv.max() >= target.size:
        raise ValidationError("morphism images out of range")
    lhs = fv[source.op]                    # f(x ▷ y)
    rhs = target.op[np.ix_(fv, fv)]        # f(x) ▷ f(y)
    if np.array_equal(lhs, rhs):
        return True, None
    x, y = np.argwhere(lhs != rhs)[0]
    return False, (int(x), int(y))
