"""Second group cohomology with finite-cyclic and circle-group coefficients.

Everything here works with *normalized* cochains on a finite group ``G`` of
order ``n`` (trivial action on coefficients): a normalized k-cochain vanishes
whenever any argument is the identity, so the free coordinates are indexed by
tuples of non-identity elements. The coboundary maps are the usual ones,

    (δ¹β)(g, h)    = β(g) + β(h) − β(gh)
    (δ²α)(g, h, k) = α(h, k) − α(gh, k) + α(g, hk) − α(g, h)

and ``H²(G, ℤ/m) = ker δ² / im δ¹`` over ℤ/m.

The circle-group (ℂ×) cohomology is reached through two finite computations:

* Realization at modulus ``n``: every ℂ× class contains a cocycle with values
  in the n-th roots of unity, so ``H²(G, ℂ×)`` is the quotient of
  ``H²(G, ℤ/n)`` by the subgroup of classes that become trivial over ℚ/ℤ.
* ℚ/ℤ-triviality is decidable at the finite modulus ``n·e`` where ``e`` is the
  exponent of the abelianization (see :func:`class_trivial_over_QZ`).

Symmetric classes (the subgroup generated by classes of symmetric cocycles,
``α(g,h) = α(h,g)``) are computed exactly from the integer lattice of
symmetric cocycle solutions over ℚ/ℤ, then realized at modulus ``n``; the
Bogomolov subgroup consists of the classes whose restriction to every maximal
abelian subgroup is trivial over ℚ/ℤ.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, ResourceLimitError, ValidationError
from .groups import (FiniteGroup, Subgroup, invariants_from_element_orders,
                     maximal_abelian_subgroups)
from .snf import KernelModM, ModQuotient, ModSolver, smith_normal_form

__all__ = [
    "Cocycle2",
    "CohomologyGroup",
    "CxClassGroup",
    "ClassSubgroup",
    "cochain_maps",
    "h2_mod_m",
    "class_trivial_over_QZ",
    "schur_multiplier_Cx",
    "is_symmetric",
    "symmetric_equation_holds",
    "symmetric_classes_HS2",
    "restrict_class",
    "bogomolov_BC",
]

# Hard cap on |G| for full-cohomology operations.
COHOMOLOGY_ORDER_CAP = 64
# The dense δ² matrix has (n-1)^5 entries; beyond this budget the computation
# is refused so callers can degrade gracefully (skip the section).
_ENTRY_BUDGET = 25_000_000
# Cap on the number of ambient H²(G, ℤ/n) classes enumerated when carving out
# the ℚ/ℤ-trivial subgroup.
_CLASS_ENUM_CAP = 65_536


def _cache(G: FiniteGroup) -> dict:
    return G.__dict__.setdefault("_qrep_cohomology_cache", {})


def _nontrivial_index(G: FiniteGroup):
    """(nt, pos) where nt lists non-identity elements ascending and
    pos[g] is the position of g in nt (-1 for the identity)."""
    key = "nontrivial"
    cache = _cache(G)
    if key not in cache:
        nt = np.array([g for g in range(G.order) if g != G.identity],
                      dtype=np.int64)
        pos = np.full(G.order, -1, dtype=np.int64)
        pos[nt] = np.arange(len(nt))
        cache[key] = (nt, pos)
    return cache[key]


@dataclass
class Cocycle2:
    """A 2-cochain on ``G`` with values in ℤ/``modulus``, stored as an
    ``n × n`` table ``values[g, h]``.

    The table covers all pairs including the identity, so both normalized
    cocycles and their constant shifts (the general unnormalized form) are
    representable.
    """

    group: FiniteGroup
    modulus: int
    values: np.ndarray

    def __post_init__(self):
        n = self.group.order
        vals = np.asarray(self.values, dtype=np.int64)
        if vals.shape != (n, n):
            raise ValidationError(f"cocycle table must be {n}x{n}")
        if self.modulus < 1:
            raise ValidationError("modulus must be a positive integer")
        self.values = vals % self.modulus

    @property
    def is_normalized(self) -> bool:
        e = self.group.identity
        return not (self.values[e, :].any() or self.values[:, e].any())

    def is_cocycle(self) -> bool:
        """Exact check of α(g,h) + α(gh,k) = α(h,k) + α(g,hk) (mod m)."""
        v, mul, m = self.values, self.group.mul, self.modulus
        lhs = v[:, :, None] + v[mul, :]    # α(g,h) + α(gh,k)
        rhs = v[None, :, :] + v[:, mul]    # α(h,k) + α(g,hk)
        return not ((lhs - rhs) % m).any()

    def normalize(self) -> "Cocycle2":
        """Subtract the constant α(1,1); for a cocycle this kills the
        identity row and column (both are constantly α(1,1))."""
        e = self.group.identity
        c = int(self.values[e, e])
        return Cocycle2(self.group, self.modulus, (self.values - c) % self.modulus)

    def shifted(self, constant: int) -> "Cocycle2":
        """Add a constant to every entry (an unnormalized form of the same
        cocycle; constants are 2-cocycles in their own right)."""
        return Cocycle2(self.group, self.modulus,
                        (self.values + int(constant)) % self.modulus)

    def vec(self) -> np.ndarray:
        """Flattened values on non-identity pairs (row-major), the coordinate
        vector used by the coboundary matrices. Requires normalized input so
        the dropped entries really are zero."""
        if not self.is_normalized:
            raise ValidationError("vec() requires a normalized cochain")
        nt, _ = _nontrivial_index(self.group)
        return self.values[np.ix_(nt, nt)].reshape(-1).copy()

    @classmethod
    def from_vec(cls, G: FiniteGroup, modulus: int, vec) -> "Cocycle2":
        nt, _ = _nontrivial_index(G)
        c = len(nt)
        v = np.asarray(vec, dtype=np.int64).reshape(c, c)
        table = np.zeros((G.order, G.order), dtype=np.int64)
        table[np.ix_(nt, nt)] = v
        return cls(G, modulus, table)

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        self._compat(other)
        return Cocycle2(self.group, self.modulus,
                        (self.values + other.values) % self.modulus)

    def __sub__(self, other: "Cocycle2") -> "Cocycle2":
        self._compat(other)
        return Cocycle2(self.group, self.modulus,
                        (self.values - other.values) % self.modulus)

    def __neg__(self) -> "Cocycle2":
        return Cocycle2(self.group, self.modulus, (-self.values) % self.modulus)

    def _compat(self, other: "Cocycle2") -> None:
        if other.group is not self.group or other.modulus != self.modulus:
            raise ValidationError("cocycles live on different groups or moduli")


def _check_cohomology_size(G: FiniteGroup) -> None:
    n = G.order
    if n > COHOMOLOGY_ORDER_CAP:
        raise ResourceLimitError(
            f"group order {n} exceeds the cohomology cap {COHOMOLOGY_ORDER_CAP}")


def _exact_d1(G: FiniteGroup) -> np.ndarray:
    """Integer matrix of δ¹ on normalized cochains (cached)."""
    cache = _cache(G)
    if "d1" in cache:
        return cache["d1"]
    _check_cohomology_size(G)
    nt, pos = _nontrivial_index(G)
    n = G.order
    c1 = n - 1
    c2 = c1 * c1
    mul = G.mul
    e = G.identity

    # δ¹: row (g, h) is β(g) + β(h) − β(gh), the last term dropped when gh = e.
    rows = np.arange(c2)
    gi, hi = rows // c1, rows % c1
    g, h = nt[gi], nt[hi]
    gh = mul[g, h]
    D1 = np.zeros((c2, c1), dtype=np.int64)
    np.add.at(D1, (rows, gi), 1)
    np.add.at(D1, (rows, hi), 1)
    mask = gh != e
    np.add.at(D1, (rows[mask], pos[gh[mask]]), -1)
    cache["d1"] = D1
    return D1


def _exact_cochain_maps(G: FiniteGroup):
    """Dense integer matrices of δ¹ and δ² on normalized cochains (cached).

    The dense δ² has (n−1)³ × (n−1)² entries, so this is gated by an entry
    budget; the production kernel computations use the generating-set
    parametrization (:func:`_reduced_cocycle_system`) instead, and this
    matrix mainly serves cross-validation and the public
    :func:`cochain_maps`.
    """
    cache = _cache(G)
    if "maps" in cache:
        return cache["maps"]
    _check_cohomology_size(G)
    n = G.order
    entries = (n - 1) ** 5
    if entries > _ENTRY_BUDGET:
        raise ResourceLimitError(
            f"dense coboundary matrix needs (n-1)^5 = {entries} entries, "
            f"over the budget {_ENTRY_BUDGET}")
    nt, pos = _nontrivial_index(G)
    c1 = n - 1
    c2 = c1 * c1
    c3 = c2 * c1
    mul = G.mul
    e = G.identity

    D1 = _exact_d1(G)

    # δ²: row (g, h, k) is α(h,k) − α(gh,k) + α(g,hk) − α(g,h); terms with an
    # identity argument are zero for normalized cochains and are dropped.
    r = np.arange(c3)
    gi = r // c2
    hi = (r // c1) % c1
    ki = r % c1
    g, h, k = nt[gi], nt[hi], nt[ki]
    gh = mul[g, h]
    hk = mul[h, k]
    D2 = np.zeros((c3, c2), dtype=np.int64)
    np.add.at(D2, (r, hi * c1 + ki), 1)
    mask = gh != e
    np.add.at(D2, (r[mask], pos[gh[mask]] * c1 + ki[mask]), -1)
    mask = hk != e
    np.add.at(D2, (r[mask], gi[mask] * c1 + pos[hk[mask]]), 1)
    np.add.at(D2, (r, gi * c1 + hi), -1)

    cache["maps"] = (D1, D2)
    return cache["maps"]


def _reduced_cocycle_system(G: FiniteGroup):
    """Parametrization of normalized 2-cocycles by their values on G × S.

    For a generating set S, a normalized 2-cochain α satisfying the cocycle
    identity at every triple (g, h, s) with s ∈ S is a cocycle: in the
    extension product (g, a)(h, b) = (gh, a + b + α(g, h)) the set of
    elements that associate on the right is closed under multiplication, so
    it contains the subgroup generated by S. Moreover the recursion
    α(g, k·s) = α(g, k) + α(gk, s) − α(k, s) determines every value from the
    values α(·, s), s ∈ S.

    Returns ``(upos, P, C)`` (cached): ``upos`` maps each of the
    u = (n−1)·|S| unknowns to its position in full pair coordinates, ``P``
    (c2 × u) expresses every pair value as an integer combination of the
    unknowns, and ``C`` (|S|(n−1)² × u) collects the restricted cocycle
    identities. The kernel of δ² mod m is then {P x : C x ≡ 0 mod m}, in
    bijection with ker(C mod m) since P contains the identity on unknown
    rows.
    """
    from .groups import generating_set

    cache = _cache(G)
    if "reduced" in cache:
        return cache["reduced"]
    _check_cohomology_size(G)
    nt, pos = _nontrivial_index(G)
    n = G.order
    c1 = n - 1
    c2 = c1 * c1
    mul = G.mul
    e = G.identity
    S = list(generating_set(G))
    u = c1 * len(S)

    if n == 1:
        out = (np.zeros(0, dtype=np.int64),
               np.zeros((0, 0), dtype=np.int64),
               np.zeros((0, 0), dtype=np.int64))
        cache["reduced"] = out
        return out

    # R[g, k] is the row vector expressing α(g, k) over the unknowns.
    R = np.zeros((n, n, u), dtype=np.int64)
    for j, s in enumerate(S):
        R[nt, s, pos[nt] * len(S) + j] = 1
    upos = np.zeros(u, dtype=np.int64)
    for j, s in enumerate(S):
        upos[pos[nt] * len(S) + j] = pos[nt] * c1 + pos[s]

    # breadth-first derivation: reach every element from the identity by
    # right-multiplication with S; discovery order guarantees the parent in
    # k = k'·s is processed before k.
    parent_of: dict[int, tuple[int, int]] = {}
    discovery: list[int] = []
    frontier = [e]
    reached = {e}
    while frontier:
        nxt = []
        for k in frontier:
            for s in S:
                y = int(mul[k, s])
                if y not in reached:
                    reached.add(y)
                    parent_of[y] = (k, s)
                    discovery.append(y)
                    nxt.append(y)
        frontier = nxt
    if len(reached) != n:
        raise ComputationError("generating set failed to reach the group")
    base = set(S)
    for k in discovery:
        if k in base:
            continue  # word length 1: α(·, s) are the unknowns themselves
        kp, s = parent_of[k]
        R[:, k, :] = (R[:, kp, :] + R[mul[:, kp], s, :]
                      - R[kp, s, :][None, :])

    # full parametrization matrix: rows in pair order (i, j) row-major
    P = R[np.ix_(nt, nt)].reshape(c2, u)

    # restricted cocycle identities (g, h, s): α(g,h) + α(gh,s) − α(h,s)
    # − α(g,hs), for g, h non-identity, s ∈ S.
    blocks = []
    gh_grid = mul[np.ix_(nt, nt)]
    for s in S:
        t1 = R[np.ix_(nt, nt)]
        t2 = R[gh_grid, s, :]
        t3 = R[nt, s, :][None, :, :]
        t4 = R[np.ix_(nt, mul[nt, s])]
        blocks.append((t1 + t2 - t3 - t4).reshape(c2, u))
    C = np.vstack(blocks) if blocks else np.zeros((0, u), dtype=np.int64)
    out = (upos, P, C)
    cache["reduced"] = out
    return out


class _ReducedKernel:
    """ker(δ² mod m) through the generating-set parametrization.

    Same interface as :class:`KernelModM` (``orders``, ``coords``,
    ``from_coords``), with vectors living in full pair coordinates.
    """

    def __init__(self, G: FiniteGroup, m: int):
        upos, P, C = _reduced_cocycle_system(G)
        self.m = int(m)
        self._upos = upos
        self._P = P
        self._kern = KernelModM(C, m)
        self.orders = self._kern.orders

    @property
    def group_order(self) -> int:
        return self._kern.group_order

    def coords(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64) % self.m
        unk = x[self._upos]
        if ((self._P @ unk - x) % self.m).any():
            raise ValidationError("vector is not in the kernel modulo m")
        return self._kern.coords(unk)

    def from_coords(self, w) -> np.ndarray:
        return (self._P @ self._kern.from_coords(w)) % self.m


def cochain_maps(G: FiniteGroup, modulus: int | None = None):
    """The coboundary matrices (δ¹, δ²) on normalized cochains.

    Returned over ℤ, or reduced mod ``modulus`` if one is given. Columns of
    δ¹ are indexed by non-identity elements, columns of δ² by pairs of them
    (row-major), matching :meth:`Cocycle2.vec`.
    """
    D1, D2 = _exact_cochain_maps(G)
    if modulus is None:
        return D1.copy(), D2.copy()
    if modulus < 1:
        raise ValidationError("modulus must be a positive integer")
    return D1 % modulus, D2 % modulus


class CohomologyGroup:
    """``H²(G, ℤ/m)`` with constructive representatives and coordinates.

    Two-step computation: the kernel of δ² mod m is parametrized by
    :class:`KernelModM`; the coboundary image (columns of δ¹ expressed in
    kernel coordinates, together with the relations that each kernel
    coordinate i lives modulo ``orders[i]``) is quotiented out by
    :class:`ModQuotient`, whose divisor-chain torsion gives the invariant
    factors.
    """

    def __init__(self, G: FiniteGroup, m: int):
        if m < 1:
            raise ValidationError("modulus must be a positive integer")
        self.group = G
        self.modulus = int(m)
        D1 = _exact_d1(G)
        self._D1 = D1
        self.kernel = _ReducedKernel(G, m)
        kdim = len(self.kernel.orders)
        wcols = np.zeros((kdim, D1.shape[1]), dtype=np.int64)
        for j in range(D1.shape[1]):
            wcols[:, j] = self.kernel.coords(D1[:, j] % m)
        gens = np.hstack([wcols, np.diag(self.kernel.orders)])
        self.quotient = ModQuotient(gens, m, k=kdim)
        self.invariants = list(self.quotient.invariants)
        self._solver: ModSolver | None = None

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    def _vec_of(self, alpha: Cocycle2) -> np.ndarray:
        if alpha.group is not self.group:
            raise ValidationError("cocycle belongs to a different group")
        if alpha.modulus != self.modulus:
            raise ValidationError(
                f"cocycle modulus {alpha.modulus} != {self.modulus}")
        a = alpha if alpha.is_normalized else alpha.normalize()
        if not a.is_cocycle():
            raise ValidationError("not a 2-cocycle")
        return a.vec()

    def coordinates(self, alpha: Cocycle2) -> tuple[int, ...]:
        """Class coordinates of a cocycle w.r.t. the invariant factors."""
        w = self.kernel.coords(self._vec_of(alpha))
        return self.quotient.reduced_coords(w)

    def representative(self, coords) -> Cocycle2:
        """A normalized cocycle representing the class with given coordinates."""
        w = self.quotient.representative(coords)
        return Cocycle2.from_vec(self.group, self.modulus,
                                 self.kernel.from_coords(w % self.kernel.orders))

    def basis_representatives(self) -> list[Cocycle2]:
        """One representative per invariant-factor generator."""
        reps = []
        k = len(self.invariants)
        for i in range(k):
            coords = tuple(1 if j == i else 0 for j in range(k))
            reps.append(self.representative(coords))
        return reps

    def is_coboundary(self, alpha: Cocycle2) -> bool:
        return not any(self.coordinates(alpha))

    def express_coboundary(self, alpha: Cocycle2) -> np.ndarray | None:
        """A 1-cochain β (vector over non-identity elements) with δβ = α,
        or None when α is not a coboundary mod m."""
        vec = self._vec_of(alpha)
        if self._solver is None:
            self._solver = ModSolver(self._D1, self.modulus)
        return self._solver.solve(vec)

    def coboundary_of(self, beta) -> Cocycle2:
        """δβ as a normalized Cocycle2, for β given on non-identity elements."""
        b = np.asarray(beta, dtype=np.int64).reshape(self._D1.shape[1])
        return Cocycle2.from_vec(self.group, self.modulus,
                                 (self._D1 @ b) % self.modulus)

    def sample_cocycle(self, rng) -> Cocycle2:
        """A uniformly random element of ker δ² (normalized)."""
        orders = self.kernel.orders
        w = rng.integers(0, np.maximum(orders, 1), size=len(orders))
        return Cocycle2.from_vec(self.group, self.modulus,
                                 self.kernel.from_coords(w))

    def enumerate_class_coords(self):
        yield from self.quotient.enumerate_coords()


def h2_mod_m(G: FiniteGroup, m: int) -> CohomologyGroup:
    """``H²(G, ℤ/m)`` (cached per group and modulus)."""
    cache = _cache(G)
    key = ("h2", int(m))
    if key not in cache:
        cache[key] = CohomologyGroup(G, m)
    return cache[key]


def _qz_solver(G: FiniteGroup, M: int) -> ModSolver:
    cache = _cache(G)
    key = ("d1solver", int(M))
    if key not in cache:
        cache[key] = ModSolver(_exact_d1(G), M)
    return cache[key]


def class_trivial_over_QZ(alpha: Cocycle2, want_witness: bool = False):
    """Does the class of ``alpha`` die in ``H²(G, ℚ/ℤ)``?

    ``alpha`` has values in ℤ/n ⊂ ℚ/ℤ (a/n ↦ a/n mod 1). Triviality over
    ℚ/ℤ means δβ = α for some β : G → ℚ/ℤ. A finite modulus suffices:

    * If δβ = α with α of modulus n, then δ(nβ) = nα = 0 in ℚ/ℤ, so nβ is a
      homomorphism G → ℚ/ℤ. Homomorphisms factor through the abelianization,
      whose exponent is e, so nβ takes values in (1/e)ℤ/ℤ and hence β takes
      values in (1/(n·e))ℤ/ℤ.
    * Conversely a solution modulo M = n·e maps to a ℚ/ℤ solution.

    So α is ℚ/ℤ-trivial iff δβ ≡ (M/n)·α (mod M) is solvable, which is a
    linear system over ℤ/M. Returns a bool, or ``(bool, β)`` with a witness
    1-cochain over ℤ/M (β = None when nontrivial) if ``want_witness``.
    """
    G = alpha.group
    a = alpha if alpha.is_normalized else alpha.normalize()
    if not a.is_cocycle():
        raise ValidationError("class_trivial_over_QZ requires a 2-cocycle")
    n = alpha.modulus
    e = G.abelianization.exponent
    M = n * e
    solver = _qz_solver(G, M)
    beta = solver.solve((a.vec() * (M // n)) % M)
    if want_witness:
        return beta is not None, beta
    return beta is not None


class CxClassGroup:
    """``H²(G, ℂ×)`` realized as a quotient of ``H²(G, ℤ/n)``, n = |G|.

    Every ℂ× class is represented by a cocycle with values in the n-th roots
    of unity, so the realization map from the ambient mod-n cohomology is
    surjective; its kernel is the subgroup T of ℚ/ℤ-trivial classes. The
    quotient is presented by an exact Smith normal form of the relation
    matrix [members of T | diag(ambient invariants)].
    """

    def __init__(self, G: FiniteGroup):
        self.group = G
        self.modulus = G.order
        self.ambient = h2_mod_m(G, G.order)
        if self.ambient.order > _CLASS_ENUM_CAP:
            raise ResourceLimitError(
                f"ambient H2 has {self.ambient.order} classes, over the "
                f"enumeration cap {_CLASS_ENUM_CAP}")
        members = []
        for coords in self.ambient.enumerate_class_coords():
            rep = self.ambient.representative(coords)
            if class_trivial_over_QZ(rep):
                members.append(coords)
        self.qz_trivial = members
        self._qz_set = set(members)

        tau = self.ambient.invariants
        k = len(tau)
        rel = np.zeros((k, len(members) + k), dtype=np.int64)
        for j, c in enumerate(members):
            rel[:, j] = c
        if k:
            rel[:, len(members):] = np.diag(np.array(tau, dtype=np.int64))
        sf = smith_normal_form(rel, chain=True, want_u=True, want_uinv=True)
        diag = sf.diag + [0] * (k - len(sf.diag))
        self._U = sf.U
        self._Uinv = sf.Uinv
        self._diag = np.array(diag, dtype=np.int64)
        self._nontrivial = np.nonzero(self._diag > 1)[0]
        self.invariants = [int(d) for d in self._diag[self._nontrivial]]

    @property
    def qz_trivial_order(self) -> int:
        return len(self.qz_trivial)

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    def project_coords(self, ambient_coords) -> tuple[int, ...]:
        """ℂ×-class coordinates of an ambient mod-n class."""
        v = np.zeros(len(self.ambient.invariants), dtype=np.int64)
        ac = tuple(ambient_coords)
        if len(ac) != len(self.ambient.invariants):
            raise ValidationError("ambient coordinate tuple has wrong length")
        v[:] = ac
        u = self._U @ v
        out = []
        for i in self._nontrivial:
            out.append(int(u[i] % self._diag[i]))
        return tuple(out)

    def project(self, alpha: Cocycle2) -> tuple[int, ...]:
        """ℂ×-class coordinates of a mod-n cocycle."""
        return self.project_coords(self.ambient.coordinates(alpha))

    def is_cx_trivial(self, alpha: Cocycle2) -> bool:
        return not any(self.project(alpha))

    def ambient_coords_of(self, cx_coords) -> tuple[int, ...]:
        """Ambient mod-n coordinates of a representative of a ℂ× class."""
        cx = tuple(cx_coords)
        if len(cx) != len(self.invariants):
            raise ValidationError("class coordinate tuple has wrong length")
        full = np.zeros(len(self._diag), dtype=np.int64)
        full[self._nontrivial] = cx
        v = self._Uinv @ full
        tau = np.array(self.ambient.invariants, dtype=np.int64)
        return tuple(int(x) for x in (v % tau)) if len(tau) else ()

    def representative(self, cx_coords) -> Cocycle2:
        return self.ambient.representative(self.ambient_coords_of(cx_coords))

    def enumerate_coords(self):
        yield from itertools.product(*(range(d) for d in self.invariants))


def schur_multiplier_Cx(G: FiniteGroup) -> CxClassGroup:
    """``H²(G, ℂ×)`` (cached)."""
    cache = _cache(G)
    if "cx" not in cache:
        cache["cx"] = CxClassGroup(G)
    return cache["cx"]


def is_symmetric(alpha: Cocycle2) -> bool:
    """Whether α(g,h) ≡ α(h,g) (mod m) for all pairs."""
    return not ((alpha.values - alpha.values.T) % alpha.modulus).any()


def symmetric_equation_holds(alpha: Cocycle2):
    """Check α(g, hg⁻¹) + α(h, g⁻¹) − α(1,1) − α(g, g⁻¹) ≡ 0 for all g, h.

    For 2-cocycles this equation is equivalent to symmetry of α (in either
    normalized or constant-shifted form). Returns ``(True, None)`` or
    ``(False, (g, h))`` with the first failing pair in row-major order.
    Raises if ``alpha`` is not a cocycle, since the equivalence is only
    asserted on cocycles.
    """
    if not alpha.is_cocycle():
        raise ValidationError("symmetric_equation_holds requires a 2-cocycle")
    G = alpha.group
    v, m = alpha.values, alpha.modulus
    inv = G.inv
    n = G.order
    e = G.identity
    hg_inv = G.mul[:, inv]                       # hg_inv[h, g] = h * g^-1
    term1 = v[np.arange(n)[:, None], hg_inv.T]   # α(g, h g^-1)
    term2 = v[:, inv].T                          # α(h, g^-1)
    term3 = int(v[e, e])                         # α(1, 1)
    term4 = v[np.arange(n), inv][:, None]        # α(g, g^-1)
    resid = (term1 + term2 - term3 - term4) % m
    if not resid.any():
        return True, None
    g, h = np.argwhere(resid != 0)[0]
    return False, (int(g), int(h))


def restrict_class(alpha: Cocycle2, S: Subgroup) -> Cocycle2:
    """Restriction of a cocycle to a subgroup (same coefficient modulus).

    On classes this induces the cohomological restriction map
    H²(G, ℤ/m) → H²(H, ℤ/m).
    """
    if S.parent is not alpha.group:
        raise ValidationError("subgroup belongs to a different group")
    H, to_parent = S.as_group()
    return Cocycle2(H, alpha.modulus,
                    alpha.values[np.ix_(to_parent, to_parent)])


@dataclass
class ClassSubgroup:
    """A subgroup of ``H²(G, ℂ×)`` given by explicit member coordinates.

    ``members`` lists every member as a coordinate tuple in the parent
    :class:`CxClassGroup`; ``generator_coords`` is a (possibly smaller)
    generating set. For the symmetric-class subgroup, ``representatives``
    holds one genuinely symmetric cocycle per generator, stored at the
    smallest natural modulus.
    """

    parent: CxClassGroup
    members: list[tuple[int, ...]]
    invariants: list[int]
    generator_coords: list[tuple[int, ...]]
    representatives: list[Cocycle2] | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, coords) -> bool:
        return tuple(coords) in set(self.members)


def _close_under_addition(gens, moduli) -> list[tuple[int, ...]]:
    zero = tuple(0 for _ in moduli)
    members = {zero}
    frontier = [zero]
    gens = [tuple(g) for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple((a + b) % d for a, b, d in zip(x, g, moduli))
            if y not in members:
                members.add(y)
                frontier.append(y)
    return sorted(members)


def _subgroup_from_members(cx: CxClassGroup, members, gens,
                           representatives=None) -> ClassSubgroup:
    moduli = cx.invariants
    order_of = []
    for v in members:
        o = 1
        for vi, di in zip(v, moduli):
            if vi % di:
                o = math.lcm(o, di // math.gcd(vi, di))
        order_of.append(o)
    return ClassSubgroup(
        parent=cx,
        members=sorted(tuple(v) for v in members),
        invariants=invariants_from_element_orders(order_of),
        generator_coords=[tuple(g) for g in gens],
        representatives=representatives,
    )


def symmetric_classes_HS2(G: FiniteGroup) -> ClassSubgroup:
    """The subgroup of ``H²(G, ℂ×)`` generated by symmetric-cocycle classes.

    Computed exactly through the generating-set parametrization: a symmetric
    2-cocycle over ℚ/ℤ corresponds to an unknown vector x (values on G × S)
    satisfying both the restricted cocycle identities ``C x = 0`` and the
    symmetry conditions ``(P_gh − P_hg) x = 0``. With the exact Smith form
    ``D = U M V`` of the stacked system, the solutions modulo s are spanned
    by the columns ``V eᵢ`` of order gcd(dᵢ, s); free columns (dᵢ = 0) are
    integral cocycles, which are rationally trivial (H² of a finite group
    over ℚ vanishes), hence ℚ/ℤ-trivial and ℂ×-trivial, so only the finite
    generators (dᵢ = sᵢ > 1) can contribute. Each one is realized at
    modulus n and projected to the ℂ× quotient.
    """
    cache = _cache(G)
    if "hs2" in cache:
        return cache["hs2"]
    cx = schur_multiplier_Cx(G)
    n = G.order
    c1 = n - 1
    c2 = c1 * c1
    D1 = _exact_d1(G)
    upos, P, C = _reduced_cocycle_system(G)

    # symmetry rows: value at (i, j) equals value at (j, i) for i < j
    rows_upper = [i * c1 + j for i in range(c1) for j in range(i + 1, c1)]
    rows_lower = [j * c1 + i for i in range(c1) for j in range(i + 1, c1)]
    antisym = (P[rows_upper] - P[rows_lower]).reshape(len(rows_upper),
                                                      P.shape[1])
    M_sys = np.vstack([C, antisym])

    sf = smith_normal_form(M_sys, chain=True, want_v=True)
    e = G.abelianization.exponent
    V = np.asarray(sf.V, dtype=object)

    gens_cx: list[tuple[int, ...]] = []
    reps: list[Cocycle2] = []
    for i, s in enumerate(sf.diag):
        s = int(s)
        if s <= 1:
            continue
        # Only the residue of the generator column mod s matters: the class
        # of (1/s)·x depends on x mod s, and realization scalings below are
        # likewise taken mod s first.
        col_mod_s = np.array([int(v) % s for v in V[:, i]], dtype=np.int64)
        x_mod_s = (P @ col_mod_s) % s
        sym_rep = Cocycle2.from_vec(G, s, x_mod_s)
        if n % s == 0:
            u = (x_mod_s * (n // s)) % n
        else:
            # Solve (M/n)·u − δ¹ z ≡ (M/s)·x (mod M) with M = lcm(n, s)·e:
            # the same bounding argument as in class_trivial_over_QZ shows a
            # realization of the class at modulus n exists with the correction
            # 1-cochain living in (1/M)ℤ/ℤ.
            M = math.lcm(n, s) * e
            A = np.hstack([np.eye(c2, dtype=np.int64) * (M // n), D1])
            rhs = (x_mod_s * (M // s)) % M
            z = ModSolver(A, M).solve(rhs)
            if z is None:
                raise ComputationError(
                    "realization of a symmetric class at modulus n failed")
            u = z[:c2] % n
        alpha_n = Cocycle2.from_vec(G, n, u)
        if not alpha_n.is_cocycle():
            raise ComputationError("realized symmetric class is not a cocycle")
        if not is_symmetric(sym_rep) or not sym_rep.is_cocycle():
            raise ComputationError("symmetric generator failed verification")
        gens_cx.append(cx.project(alpha_n))
        reps.append(sym_rep)

    members = _close_under_addition(gens_cx, cx.invariants)
    result = _subgroup_from_members(cx, members, gens_cx, representatives=reps)
    cache["hs2"] = result
    return result


def bogomolov_BC(G: FiniteGroup) -> ClassSubgroup:
    """The Bogomolov subgroup of ``H²(G, ℂ×)``: classes whose restriction to
    every maximal abelian subgroup is trivial over ℚ/ℤ.

    Membership is checked on one maximal abelian subgroup per conjugacy class
    (restrictions along conjugate subgroups are cohomologous), and is
    independent of the ambient representative because ℚ/ℤ-trivial classes
    restrict to ℚ/ℤ-trivial classes.
    """
    cache = _cache(G)
    if "bc" in cache:
        return cache["bc"]
    cx = schur_multiplier_Cx(G)
    subgroups = [(S, *S.as_group()) for S in maximal_abelian_subgroups(G)]

    members = []
    for coords in cx.enumerate_coords():
        alpha = cx.representative(coords)
        ok = True
        for S, H, to_parent in subgroups:
            r = Cocycle2(H, alpha.modulus,
                         alpha.values[np.ix_(to_parent, to_parent)])
            if not class_trivial_over_QZ(r):
                ok = False
                break
        if ok:
            members.append(coords)

    result = _subgroup_from_members(cx, members, members)
    cache["bc"] = result
    return result
